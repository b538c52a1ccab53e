//! Meets and joins of small families of sharp elements, checked for
//! sharpness.
//!
//! cargo run --example sharp_closure -- [N] [K] [max subset size]

use seacheck::order::{check_sharp_closure, join, meet};
use seacheck::{Element, Fragment};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u32>().expect("integers"));
    let n = args.next().unwrap_or(3);
    let k = args.next().unwrap_or(2);
    let max = args.next().unwrap_or(3) as usize;
    let fragment = Fragment::new(n, k).expect("valid bounds");
    print!("{}", check_sharp_closure(&fragment, max).to_text());

    let pair: Vec<Element> = ["d{1}:1", "d{2}:1"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    print!("{}", meet(&fragment, &pair).to_text());
    print!("{}", join(&fragment, &pair).to_text());
}
