//! Factors an even permutation into k l-cycles constructively, at a degree
//! well beyond what the class oracle can enumerate, then validates the
//! witness by composition, re-checks it against the orbit-counting
//! inequality, and prints the JSON record the CLI `verify` subcommand
//! consumes.
//!
//!     cargo run --example decompose_witness

use cycle_products::bounds::ree_certificate_check;
use cycle_products::decompose::{decompose, lengthen_membership};
use cycle_products::perm::parse_cycles;

fn main() {
    // Degree 21: far past the oracle ceiling, trivial for the solver.
    let sigma = parse_cycles(
        "(1 2 3 4 5 6 7)(8 9 10 11 12)(13 14 15)(16 17)(18 19 20 21)",
        None,
    )
    .expect("valid cycles");
    let (k, l) = (9, 5);

    let witness = decompose(&sigma, k, l).expect("σ is a product of nine 5-cycles");
    witness.validate().expect("validated by composition");
    println!("σ = {sigma}");
    println!("as a product of {k} {l}-cycles (rightmost acts first):");
    for f in &witness.factors {
        println!("  {f}");
    }

    let ree = ree_certificate_check(&sigma, &witness.factors).expect("consistent witness");
    println!();
    println!(
        "orbit bound: kl − m − c = {} >= {} = k − 2T with T = {}: {}",
        ree.lhs,
        ree.rhs,
        ree.t,
        if ree.pass { "holds" } else { "violated" },
    );

    let record = witness.to_record();
    println!();
    println!("JSON record:");
    println!(
        "{}",
        serde_json::to_string_pretty(&record).expect("serializable")
    );

    // The same σ is also a product of 9 7-cycles: odd k steps l upward by 2.
    let longer = lengthen_membership(&sigma, k, l, 7).expect("headroom at degree 23");
    longer.validate().expect("validated by composition");
    println!("lengthened: σ is also a product of {} {}-cycles", longer.k(), longer.l);
}
