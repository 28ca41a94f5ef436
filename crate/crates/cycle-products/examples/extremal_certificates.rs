//! Builds the counterexample one degree above n(k,l) for each covered
//! family, prints its shape and slack arithmetic, and runs the oracle
//! discharge that upgrades the conditional certificate to an unconditional
//! one at desk scale.
//!
//!     cargo run --release --example extremal_certificates

use cycle_products::bounds::n_k_l;
use cycle_products::extremal::{build_extremal, certify_nonmembership};
use cycle_products::oracle::OracleConfig;

fn main() {
    let config = OracleConfig::default();

    for (k, l) in [(4, 2), (2, 4), (4, 5), (3, 5), (6, 2)] {
        let w = build_extremal(k, l).expect("covered family");
        let value = n_k_l(k, l).expect("exact value exists").value;
        println!("(k,l) = ({k},{l})  n(k,l) = {value}, counterexample at degree {}:", w.sigma.degree());
        println!("  σ = {}  [{}]", w.sigma, w.shape_tag());
        let cert = &w.certificate;
        println!(
            "  slack kl − m − c = {} − {} − {} = {}  ({})",
            cert.kl, cert.m, cert.c, cert.slack, cert.case,
        );

        let verdict = certify_nonmembership(&w, &config).expect("certifiable");
        if verdict.unconditional {
            let oracle = verdict.oracle.expect("desk-scale discharge");
            println!(
                "  verdict: UNCONDITIONAL (type absent from the oracle level set; \
                 {} bipartitions scanned, {} splits refuted)",
                oracle.bipartitions, oracle.splits_refuted,
            );
        } else {
            println!(
                "  verdict: CONDITIONAL on: {}",
                verdict.open_premise.expect("stated premise"),
            );
        }
        println!();
    }

    // Beyond the oracle ceiling the same builder still produces the witness
    // and the slack certificate; only the indecomposability premise stays open.
    let w = build_extremal(14, 5).expect("covered family");
    let verdict = certify_nonmembership(&w, &config).expect("certifiable");
    println!(
        "(k,l) = (14,5)  degree {} is beyond the ceiling {}:",
        w.sigma.degree(),
        config.ceiling,
    );
    println!(
        "  verdict: {}",
        if verdict.unconditional {
            "UNCONDITIONAL".to_string()
        } else {
            format!("CONDITIONAL on: {}", verdict.open_premise.expect("stated premise"))
        },
    );

    println!();
    println!("JSON record for (4,5):");
    let w = build_extremal(4, 5).expect("covered family");
    println!(
        "{}",
        serde_json::to_string_pretty(&w.to_record()).expect("serializable")
    );
}
