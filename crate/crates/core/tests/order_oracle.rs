//! The closed-form order against brute-force witness search, and the
//! order-theoretic properties of E₀ fragments.

use seacheck::element::{Element, IndexSet};
use seacheck::fragment::Fragment;
use seacheck::ops::{self, leq, leq_witness};
use seacheck::order::{
    self, is_sharp_mult, is_sharp_order, lower_bounds, sharp_elements, upper_bounds,
};

/// `x ≤ y` by scanning every candidate witness in `search`.
fn leq_by_search(x: &Element, y: &Element, search: &Fragment) -> Option<Element> {
    search
        .elements()
        .iter()
        .find(|c| ops::oplus(x, c).as_ref() == Some(y))
        .cloned()
}

fn e(text: &str) -> Element {
    text.parse().unwrap()
}

#[test]
fn closed_form_matches_enlarged_search() {
    let f = Fragment::new(3, 2).unwrap();
    // Witness indices stay within max index of x plus max index of y.
    let enlarged = Fragment::new(6, 2).unwrap();
    for x in f.elements() {
        for y in f.elements() {
            let searched = leq_by_search(x, y, &enlarged);
            assert_eq!(leq_witness(x, y), searched, "{x} <= {y}");
        }
    }
}

#[test]
fn witness_bound_holds_against_a_much_larger_search() {
    let f = Fragment::new(3, 2).unwrap();
    let enlarged = Fragment::new(6, 2).unwrap();
    let huge = Fragment::new(9, 3).unwrap();
    for x in f.elements() {
        for y in f.elements() {
            assert_eq!(
                leq_by_search(x, y, &enlarged).is_some(),
                leq_by_search(x, y, &huge).is_some(),
                "{x} <= {y}"
            );
        }
    }
}

#[test]
fn leq_is_a_partial_order_on_the_large_fragment() {
    let f = Fragment::new(4, 3).unwrap();
    let xs = f.elements();
    let table: Vec<Vec<bool>> = xs
        .iter()
        .map(|x| xs.iter().map(|y| leq(x, y)).collect())
        .collect();
    for i in 0..xs.len() {
        assert!(table[i][i]);
        assert!(table[0][i], "0 is bottom");
        assert!(table[i][1], "1 is top");
        for j in 0..xs.len() {
            if i != j {
                assert!(
                    !(table[i][j] && table[j][i]),
                    "antisymmetry {} {}",
                    xs[i],
                    xs[j]
                );
            }
            for k in 0..xs.len() {
                if table[i][j] && table[j][k] {
                    assert!(table[i][k], "transitivity {} {} {}", xs[i], xs[j], xs[k]);
                }
            }
        }
    }
}

#[test]
fn orthogonality_two_routes_agree() {
    let f = Fragment::new(4, 3).unwrap();
    for x in f.elements() {
        for y in f.elements() {
            assert_eq!(
                ops::orthogonal(x, y),
                ops::orthogonal_via_order(x, y),
                "{x} {y}"
            );
        }
    }
}

#[test]
fn orthosupplement_is_unique_and_involutive() {
    let f = Fragment::new(4, 3).unwrap();
    for x in f.elements() {
        let complements: Vec<&Element> = f
            .elements()
            .iter()
            .filter(|y| ops::oplus(x, y) == Some(Element::One))
            .collect();
        assert_eq!(complements, vec![&ops::orthosupplement(x)]);
        assert_eq!(ops::orthosupplement(&ops::orthosupplement(x)), *x);
    }
}

#[test]
fn tables_are_symmetric() {
    let f = Fragment::new(4, 3).unwrap();
    for x in f.elements() {
        for y in f.elements() {
            assert_eq!(ops::oplus(x, y), ops::oplus(y, x));
            assert_eq!(ops::circ(x, y), ops::circ(y, x));
            assert!(ops::commutes(x, y));
        }
    }
}

fn within(e: &Element, max_index: u32, k: u32) -> bool {
    e.index().is_none_or(|n| n.get() <= max_index) && e.ground_set().is_none_or(|s| s.max() <= k)
}

#[test]
fn results_stay_within_index_bounds() {
    let (n, k) = (4, 3);
    let f = Fragment::new(n, k).unwrap();
    let xs = f.elements();
    for x in xs {
        for y in xs {
            let sum = ops::oplus(x, y);
            let product = ops::circ(x, y);
            assert!(
                sum.as_ref().is_none_or(|s| within(s, 2 * n, k)),
                "{x} + {y}"
            );
            assert!(within(&product, 2 * n, k), "{x} * {y}");
            for z in xs {
                if let Some(s) = &sum {
                    assert!(ops::oplus(s, z).is_none_or(|t| within(&t, 3 * n, k)));
                }
                assert!(within(&ops::circ(&product, z), 3 * n, k));
            }
        }
    }
}

#[test]
fn sharp_set_shape_and_criteria_agree() {
    for n in 1..=4 {
        for k in 1..=3 {
            let f = Fragment::new(n, k).unwrap();
            let mut expected = vec![Element::Zero, Element::One];
            for set in IndexSet::all_nonempty_subsets(k) {
                expected.push(Element::C(set.clone(), seacheck::Index::ONE));
                expected.push(Element::D(set, seacheck::Index::ONE));
            }
            expected.sort();
            assert_eq!(sharp_elements(&f), expected, "N={n} K={k}");
            for x in f.elements() {
                assert_eq!(
                    is_sharp_mult(&f, x),
                    is_sharp_order(&f, x),
                    "{x} in N={n} K={k}"
                );
            }
        }
    }
}

#[test]
fn sharp_c_and_d_embed_monotonically() {
    let sets = IndexSet::all_nonempty_subsets(3);
    for small in &sets {
        for big in sets.iter().filter(|b| small.is_proper_subset(b)) {
            let c_small = Element::C(small.clone(), seacheck::Index::ONE);
            let c_big = Element::C(big.clone(), seacheck::Index::ONE);
            let d_small = Element::D(small.clone(), seacheck::Index::ONE);
            let d_big = Element::D(big.clone(), seacheck::Index::ONE);
            let w = leq_witness(&c_small, &c_big).unwrap();
            assert_eq!(ops::oplus(&c_small, &w), Some(c_big.clone()));
            assert!(!leq(&c_big, &c_small));
            let w = leq_witness(&d_big, &d_small).unwrap();
            assert_eq!(
                w,
                Element::C(big.difference(small).unwrap(), seacheck::Index::ONE)
            );
            assert!(!leq(&d_small, &d_big));
        }
    }
}

#[test]
fn a1_is_incomparable_with_sharp_c() {
    for set in IndexSet::all_nonempty_subsets(4) {
        let c = Element::C(set, seacheck::Index::ONE);
        assert!(!leq(&e("a1"), &c));
        assert!(!leq(&c, &e("a1")));
    }
}

#[test]
fn upper_bounds_of_a1_match_search() {
    let f = Fragment::new(2, 1).unwrap();
    let enlarged = Fragment::new(4, 1).unwrap();
    let searched: Vec<Element> = f
        .elements()
        .iter()
        .filter(|y| leq_by_search(&e("a1"), y, &enlarged).is_some())
        .cloned()
        .collect();
    let mut frozen: Vec<Element> = ["1", "a1", "a2", "b1", "b2", "c{1}:2", "d{1}:1", "d{1}:2"]
        .iter()
        .map(|s| e(s))
        .collect();
    frozen.sort();
    assert_eq!(searched, frozen);
    assert_eq!(upper_bounds(&f, &e("a1"), false), frozen);
}

#[test]
fn lower_bounds_of_sharp_d_match_search() {
    let f = Fragment::new(2, 2).unwrap();
    let enlarged = Fragment::new(4, 2).unwrap();
    let x = e("d{1}:1");
    let searched: Vec<Element> = f
        .elements()
        .iter()
        .filter(|y| leq_by_search(y, &x, &enlarged).is_some())
        .cloned()
        .collect();
    let mut frozen: Vec<Element> = [
        "0", "a1", "a2", "c{2}:1", "c{2}:2", "d{1}:1", "d{1}:2", "d{1,2}:1", "d{1,2}:2",
    ]
    .iter()
    .map(|s| e(s))
    .collect();
    frozen.sort();
    assert_eq!(searched, frozen);
    assert_eq!(lower_bounds(&f, &x), frozen);
}

#[test]
fn meet_of_a_and_b_is_the_a_element() {
    let f = Fragment::new(4, 2).unwrap();
    let report = order::meet(&f, &[e("a3"), e("b3")]);
    assert_eq!(report.meet(), Some(&e("a3")));
}
