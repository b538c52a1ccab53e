use proptest::prelude::*;
use seacheck::element::{Element, IndexSet};
use seacheck::ops::{
    circ, leq, leq_witness, oplus, orthogonal, orthogonal_via_order, orthosupplement,
};

fn index_set() -> impl Strategy<Value = IndexSet> {
    prop::collection::btree_set(1u32..=3, 1..=3).prop_map(|s| IndexSet::new(s).unwrap())
}

fn element() -> impl Strategy<Value = Element> {
    let n = 1u32..=8;
    prop_oneof![
        Just(Element::Zero),
        Just(Element::One),
        n.clone().prop_map(Element::a),
        n.clone().prop_map(Element::b),
        (index_set(), n.clone()).prop_map(|(s, n)| Element::c(s.members(), n)),
        (index_set(), n).prop_map(|(s, n)| Element::d(s.members(), n)),
    ]
}

proptest! {
    #[test]
    fn render_parse_round_trip(x in element()) {
        let text = x.to_string();
        prop_assert_eq!(text.parse::<Element>().unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Element>(&json).unwrap(), x);
    }

    #[test]
    fn operations_are_symmetric(x in element(), y in element()) {
        prop_assert_eq!(oplus(&x, &y), oplus(&y, &x));
        prop_assert_eq!(circ(&x, &y), circ(&y, &x));
    }

    #[test]
    fn orthosupplement_is_the_unique_complement(x in element(), y in element()) {
        let x_perp = orthosupplement(&x);
        prop_assert_eq!(oplus(&x, &x_perp), Some(Element::One));
        prop_assert_eq!(orthosupplement(&x_perp), x.clone());
        if oplus(&x, &y) == Some(Element::One) {
            prop_assert_eq!(y, x_perp);
        }
    }

    #[test]
    fn witnesses_are_genuine(x in element(), y in element()) {
        if let Some(w) = leq_witness(&x, &y) {
            prop_assert_eq!(oplus(&x, &w), Some(y.clone()));
        }
        if x != y && leq(&x, &y) {
            prop_assert!(!leq(&y, &x));
        }
    }

    #[test]
    fn sums_are_upper_bounds(x in element(), y in element()) {
        if let Some(s) = oplus(&x, &y) {
            prop_assert!(leq(&x, &s));
            prop_assert!(leq(&y, &s));
        }
    }

    #[test]
    fn orthogonality_routes_agree(x in element(), y in element()) {
        prop_assert_eq!(orthogonal(&x, &y), orthogonal_via_order(&x, &y));
    }

    #[test]
    fn sum_is_associative(x in element(), y in element(), z in element()) {
        let right = oplus(&y, &z).and_then(|yz| oplus(&x, &yz));
        let left = oplus(&x, &y).and_then(|xy| oplus(&xy, &z));
        prop_assert_eq!(right, left);
    }

    #[test]
    fn product_distributes_over_sum(x in element(), y in element(), z in element()) {
        if let Some(yz) = oplus(&y, &z) {
            prop_assert_eq!(oplus(&circ(&x, &y), &circ(&x, &z)), Some(circ(&x, &yz)));
        }
    }

    #[test]
    fn leq_is_transitive(x in element(), y in element(), z in element()) {
        if leq(&x, &y) && leq(&y, &z) {
            prop_assert!(leq(&x, &z));
        }
    }

    #[test]
    fn set_parse_normalizes(members in prop::collection::vec(1u32..=20, 1..6)) {
        let mut unique = members.clone();
        unique.sort();
        unique.dedup();
        if unique.len() == members.len() {
            let text = format!("{{{}}}", members.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(","));
            let set: IndexSet = text.parse().unwrap();
            prop_assert_eq!(set.members().collect::<Vec<_>>(), unique);
        }
    }
}
