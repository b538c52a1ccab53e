//! Evaluate the E₀ tables on a few elements, with the rule that fired.
//!
//! cargo run --example e0_operations -- [x] [y]

use seacheck::ops::{circ_traced, leq_witness, oplus_traced, orthosupplement};
use seacheck::Element;

fn show(x: &Element, y: &Element) {
    match oplus_traced(x, y) {
        Some((rule, z)) => println!("{x} + {y} = {z}  ({})", seacheck::ops::RuleId::Oplus(rule)),
        None => println!("{x} + {y} is undefined"),
    }
    let (rule, z) = circ_traced(x, y);
    println!("{x} * {y} = {z}  ({})", seacheck::ops::RuleId::Circ(rule));
    match leq_witness(x, y) {
        Some(w) => println!("{x} <= {y}, witness {w}"),
        None => println!("{x} is not below {y}"),
    }
    println!("{x}' = {}\n", orthosupplement(x));
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [x, y] = args.as_slice() {
        show(&x.parse().expect("element"), &y.parse().expect("element"));
        return;
    }
    for (x, y) in [
        ("a2", "b5"),
        ("a3", "a4"),
        ("c{1}:2", "c{2,3}:1"),
        ("c{1,2}:1", "d{2}:3"),
        ("c{1,2}:1", "c{2,3}:1"),
        ("d{1}:2", "d{2}:1"),
        ("b2", "d{1}:1"),
    ] {
        show(&x.parse().unwrap(), &y.parse().unwrap());
    }
}
