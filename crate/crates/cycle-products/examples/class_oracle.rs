//! Runs the class-level breadth-first search that underlies every exact
//! verdict at desk scale: computes the cycle types reachable as products of
//! up to k l-cycles in S_n, scans n to recover n(k,l) by brute force, and
//! peels an explicit witness factorization back out of the level sets.
//!
//!     cargo run --release --example class_oracle

use cycle_products::oracle::{
    brute_nkl, class_power_types, peel_witness, NklScan, OracleConfig,
};
use cycle_products::perm::parse_cycles;

fn main() {
    let config = OracleConfig::default();

    let (n, l, k) = (8, 3, 4);
    let rt = class_power_types(n, l, k, &config).expect("within the ceiling");
    println!("reachable cycle types in S_{n}, products of up to {k} {l}-cycles:");
    for i in 0..=k {
        let level = rt.level(i);
        println!(
            "  level {i}: {:>3} types  (covers A_{n}: {})",
            level.len(),
            rt.covers_alternating(i),
        );
    }

    println!();
    println!("brute-force n(k,3) scan, k = 2..=5:");
    for k in 2..=5 {
        match brute_nkl(k, 3, 14, &config).expect("within the ceiling") {
            NklScan::Largest(n) => println!("  k={k}: every A_n is covered up to n = {n}"),
            NklScan::UnboundedAtCeiling(n) => {
                println!("  k={k}: still covered at the scan ceiling n = {n}")
            }
            NklScan::NoneCovered => println!("  k={k}: no n >= l is fully covered"),
        }
    }

    let sigma = parse_cycles("(1 2 3 4 5)(6 7 8)", Some(8)).expect("valid cycles");
    let factors = peel_witness(&sigma, 4, 3, &config).expect("member at this level");
    println!();
    println!("peeled witness for {sigma} as a product of 4 3-cycles:");
    for f in &factors {
        println!("  {f}");
    }
}
