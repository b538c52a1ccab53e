//! Run every shipped single-rule mutation through the verifiers and replay
//! the first violation found.
//!
//! cargo run --example mutation_controls

use seacheck::kernel::CheckError;
use seacheck::mutation::{apply_mutation, MutationSpec};
use seacheck::{verify_sea, Fragment, VerifyOptions};

fn main() {
    for spec in MutationSpec::fixtures() {
        let inst = apply_mutation(Fragment::new(3, 2).unwrap(), spec.clone());
        let (stage, report) = match verify_sea(&inst, VerifyOptions::default()) {
            Ok(r) => ("sea", r),
            Err(CheckError::NotEffectAlgebra(r)) => ("ea", *r),
            Err(e) => panic!("{e}"),
        };
        let first = report.violations.first().expect("mutation detected");
        println!(
            "{:<22} {stage:>3}: {:>5} violations, e.g. {} [{}] replays={}",
            spec.to_string(),
            report.violations.len(),
            first.axiom,
            first.witnesses.join(", "),
            first.replays(&inst)
        );
    }
}
