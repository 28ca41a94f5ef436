//! Evaluates the closed formulas for n(k,l) over a small grid and prints
//! which case of the table fired, alongside the conjectured window
//! [2kl/3, 2kl/3+1] and the general upper bound (defined for l > 3).
//!
//!     cargo run --example exact_values

use cycle_products::bounds::{conjectured_range, hgl_upper_bound, n_k_l, BoundsError};

fn main() {
    println!(
        "{:>3} {:>3}  {:>8}  {:>12} {:>7}  rule",
        "k", "l", "n(k,l)", "window", "upper"
    );
    for k in 2..=9 {
        for l in [2, 3, 4, 5, 6, 7, 8] {
            let (lo, hi) = conjectured_range(k, l);
            let upper = if l > 3 && (k % 2 == 0 || l % 2 == 1) {
                hgl_upper_bound(k, l).to_string()
            } else {
                "-".to_string()
            };
            match n_k_l(k, l) {
                Ok(case) => println!(
                    "{:>3} {:>3}  {:>8}  {:>12} {:>7}  {}",
                    k,
                    l,
                    case.value,
                    format!("[{lo}, {hi}]"),
                    upper,
                    case.rule.tag(),
                ),
                Err(BoundsError::ParityInfeasible(..)) => println!(
                    "{:>3} {:>3}  {:>8}  {:>12} {:>7}  products of {k} {l}-cycles are odd",
                    k, l, "-", format!("[{lo}, {hi}]"), upper,
                ),
                Err(e) => println!("{:>3} {:>3}  error: {e}", k, l),
            }
        }
    }

    println!();
    println!("Values inside the conjectured window stay within distance 1 of 2kl/3");
    println!("only for k <= 4; the rows above show the gap growing with k.");
    for (k, l) in [(5, 5), (9, 5), (12, 7)] {
        let case = n_k_l(k, l).expect("parity-feasible pair");
        let (lo, _) = conjectured_range(k, l);
        println!(
            "  n({k},{l}) = {} falls {} short of the window floor {lo}",
            case.value,
            lo as i64 - case.value as i64,
        );
    }
}
