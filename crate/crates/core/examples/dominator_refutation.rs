//! Show that a target has no least sharp element above it: every sharp upper
//! bound has a strictly smaller one.
//!
//! cargo run --example dominator_refutation -- [target] [N] [K]

use seacheck::analysis::refute_least_sharp_dominator;
use seacheck::{Element, Fragment};

fn main() {
    let mut args = std::env::args().skip(1);
    let target: Element = args
        .next()
        .as_deref()
        .unwrap_or("a1")
        .parse()
        .expect("element");
    let n = args.next().map_or(2, |a| a.parse().expect("integer"));
    let k = args.next().map_or(2, |a| a.parse().expect("integer"));
    let fragment = Fragment::new(n, k).expect("valid bounds");
    let cert = refute_least_sharp_dominator(&target, &fragment).expect("certificate verifies");
    print!("{}", cert.to_text());
    for pair in &cert.refutation_pairs {
        assert!(pair.verify(&target));
    }
}
