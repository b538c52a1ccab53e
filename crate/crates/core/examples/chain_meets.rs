//! Prefix meets of the descending chain d{1}:1 > d{1,2}:1 > ... and the
//! finite continuity checks on each prefix.
//!
//! cargo run --example chain_meets -- [K]

use seacheck::analysis::chain_meet_analysis;
use seacheck::{Fragment, IndexSet};

fn main() {
    let k = std::env::args()
        .nth(1)
        .map_or(4, |a| a.parse().expect("integer"));
    let fragment = Fragment::new(2, k).expect("valid bounds");
    let chain: Vec<IndexSet> = (1..=k).map(IndexSet::initial).collect();
    let report = chain_meet_analysis(&chain, &fragment).expect("chain is valid");
    print!("{}", report.to_text());
    for prefix in &report.prefixes {
        if let Some(c) = &prefix.continuity {
            println!(
                "prefix {}: products {}/{} ok, independence {}/{} ok",
                prefix.length,
                c.products_checked - c.product_failures,
                c.products_checked,
                c.independence_checked - c.independence_failures,
                c.independence_checked
            );
        }
    }
}
