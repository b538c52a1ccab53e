//! List the sharp elements of a fragment and compare the two sharpness
//! criteria (idempotent product, trivial meet with the complement).
//!
//! cargo run --example sharp_elements -- [N] [K]

use seacheck::order::{is_sharp_mult, is_sharp_order, sharp_elements};
use seacheck::{AlgebraInstance, Fragment};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u32>().expect("bounds are integers"));
    let fragment =
        Fragment::new(args.next().unwrap_or(4), args.next().unwrap_or(3)).expect("valid bounds");
    let sharp = sharp_elements(&fragment);
    println!(
        "{}: {} of {} elements are sharp",
        fragment.label(),
        sharp.len(),
        fragment.elements().len()
    );
    for x in &sharp {
        println!("  {x}");
    }
    let disagreements = fragment
        .elements()
        .iter()
        .filter(|x| is_sharp_mult(&fragment, x) != is_sharp_order(&fragment, x))
        .count();
    println!("criteria disagree on {disagreements} elements");
}
