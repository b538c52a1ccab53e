//! Certify the effect-algebra and sequential axioms on a fragment of E₀,
//! then show a single-rule mutation being caught.
//!
//! cargo run --release --example verify_axioms -- [N] [K]

use std::time::Instant;

use seacheck::mutation::{apply_mutation, MutationSpec};
use seacheck::{verify_sea, Fragment, VerifyOptions};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u32>().expect("bounds are integers"));
    let n = args.next().unwrap_or(4);
    let k = args.next().unwrap_or(3);
    let fragment = Fragment::new(n, k).expect("valid bounds");

    let start = Instant::now();
    let report = verify_sea(&fragment, VerifyOptions::serial()).expect("E0 is an effect algebra");
    print!("{}", report.to_text());
    println!("checked in {:.2?} (single thread)", start.elapsed());

    let spec: MutationSpec = "circ.c_c.c:shift+1".parse().unwrap();
    let mutated = apply_mutation(fragment, spec);
    let report = verify_sea(&mutated, VerifyOptions::default()).expect("mutation keeps EA intact");
    println!(
        "\n{}: {} violations",
        report.instance,
        report.violations.len()
    );
    for v in report.violations.iter().take(5) {
        println!(
            "  {} [{}]: {} != {}",
            v.axiom,
            v.witnesses.join(", "),
            v.lhs,
            v.rhs
        );
    }
}
