//! Walks the full decision pipeline for "is σ a product of k l-cycles?"
//! on a mix of targets: the parity gate, the support-count inequality, the
//! exact oracle at desk scale, and the constructive solver beyond it.
//!
//!     cargo run --release --example membership_pipeline

use cycle_products::bounds::{necessary_product_condition, Verdict};
use cycle_products::decompose::decompose;
use cycle_products::oracle::{is_member_oracle, OracleConfig};
use cycle_products::perm::parse_cycles;

fn main() {
    let config = OracleConfig::default();
    let cases = [
        ("(1 2 3)(4 5 6)", 2, 3),
        ("(1 2)(3 4)", 2, 3),
        ("(1 2)(3 4)(5 6)(7 8)", 2, 5),
        ("(1 2 3 4 5)(6 7 8 9 10)(11 12)(13 14)", 4, 5),
        ("(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17)(18 19)(20 21)", 5, 7),
    ];

    for (text, k, l) in cases {
        let sigma = parse_cycles(text, None).expect("valid cycles");
        let n = sigma.degree();
        println!("σ = {sigma}  (degree {n}), k = {k}, l = {l}");

        // Stage 1: sign. A product of k l-cycles has sign (−1)^(k(l−1)).
        let product_even = (k * (l - 1)) % 2 == 0;
        if sigma.is_even() != product_even {
            println!("  NOT a member: parity (σ is {}, the product is {})",
                if sigma.is_even() { "even" } else { "odd" },
                if product_even { "even" } else { "odd" });
            println!();
            continue;
        }

        // Stage 2: the counting gate m + c <= kl for targets without an
        // l-cycle part.
        if sigma.stats().count_of(l) == 0 {
            if let Ok(Verdict::Fail(cert)) = necessary_product_condition(&sigma, k, l) {
                println!("  NOT a member: {}", serde_json::to_string(&cert).expect("serializable"));
                println!();
                continue;
            }
        }

        // Stage 3: exact class BFS at desk scale, constructive solver beyond.
        if n <= config.ceiling {
            let member = is_member_oracle(&sigma, k, l, &config).expect("within the ceiling");
            println!(
                "  oracle: {}",
                if member { "member (exact)" } else { "NOT a member (exact)" },
            );
        } else {
            match decompose(&sigma, k, l) {
                Ok(w) => {
                    w.validate().expect("validated by composition");
                    println!("  member: constructive witness, first factor {}", w.factors[0]);
                }
                Err(e) => println!("  undecided constructively: {e}"),
            }
        }
        println!();
    }
}
