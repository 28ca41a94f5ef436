//! Exercises the two-factor machinery: the exact feasibility criterion for
//! writing σ as a product of an l1-cycle and an l2-cycle, the constructive
//! search that produces such a pair, and the chain construction that breaks
//! one long cycle into k overlapping l-cycles.
//!
//!     cargo run --example two_cycle_products

use cycle_products::factor::{chain_cycle, factor_two_cycles, two_cycle_feasible};
use cycle_products::perm::{compose, parse_cycles, Cycle, Permutation};

fn main() {
    let sigma = parse_cycles("(1 2 3)(4 5)(6 7)", Some(8)).expect("valid cycles");
    println!("target σ = {sigma} on 8 points (m = 7 moved, c = 3 cycles)");
    println!();
    for (l1, l2) in [(6, 4), (7, 5), (8, 4), (4, 4), (8, 2)] {
        let feas = two_cycle_feasible(&sigma, l1, l2);
        print!("  {l1}-cycle x {l2}-cycle: ");
        if feas.feasible {
            let (c1, c2) = factor_two_cycles(&sigma, l1, l2).expect("criterion passed");
            let product = compose(
                &c1.to_permutation(8).expect("fits"),
                &c2.to_permutation(8).expect("fits"),
            );
            assert_eq!(product, sigma);
            println!("σ = {c1} ∘ {c2}  (pad count s = {})", feas.s.unwrap());
        } else {
            println!("impossible, {}", feas.reason.describe());
        }
    }

    // One c-cycle of length l+(k-1)(l-1) is a product of k l-cycles that
    // overlap in single points, multiplied right to left.
    let (k, l) = (4, 4);
    let long = Cycle::new((1..=13).collect()).expect("13 = 4+3*3 points");
    let segments = chain_cycle(&long, k, l).expect("length matches the chain");
    println!();
    println!("chain: {} as a product of {k} {l}-cycles:", long);
    for s in &segments {
        println!("  {s}");
    }
    let mut product = Permutation::identity(13);
    for s in segments.iter().rev() {
        product = compose(&s.to_permutation(13).expect("fits"), &product);
    }
    assert_eq!(product, long.to_permutation(13).expect("fits"));
    println!("product of the segments reproduces the long cycle");
}
