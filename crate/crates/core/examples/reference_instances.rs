//! The verifiers on two sharply dominating algebras: subsets of {1..k} and a
//! rational grid in [0, 1].
//!
//! cargo run --example reference_instances

use seacheck::order::{least_sharp_dominator, sharp_elements};
use seacheck::reference::{boolean_instance, interval_instance};
use seacheck::{verify_sea, AlgebraInstance, VerifyOptions};

fn summarize<I: AlgebraInstance>(inst: &I) {
    let report = verify_sea(inst, VerifyOptions::default()).expect("valid instance");
    let sharp: Vec<String> = sharp_elements(inst).iter().map(|x| x.to_string()).collect();
    println!("{} ({})", inst.label(), report.mode);
    println!("  violations: {}", report.violations.len());
    println!("  sharp: [{}]", sharp.join(", "));
    for x in inst.carrier() {
        let hat = least_sharp_dominator(inst, x).map_or("none".to_string(), |h| h.to_string());
        println!("  least sharp above {x}: {hat}");
    }
}

fn main() {
    summarize(&boolean_instance(2).unwrap());
    summarize(&interval_instance(4).unwrap());
}
