//! The ⊕ and ∘ tables of E₀, the orthosupplement, and the induced order.
//!
//! Both tables are symmetric: every rule `x ⊕ y = z` also fixes `y ⊕ x = z`.
//! Each evaluation is traced to the single table rule that produced it so
//! that [`crate::mutation`] can replace one rule at a time.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::element::{Element, Index, IndexSet};

/// One case of the ⊕ table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum OplusRule {
    /// `0 ⊕ x = x`
    ZeroUnit,
    /// `aₙ ⊕ aₘ = a_{n+m}`
    AA,
    /// `aₙ ⊕ bₘ = b_{m−n}` for `n < m`
    ABLess,
    /// `aₙ ⊕ bₙ = 1`
    ABEqual,
    /// `aₙ ⊕ c_{Λ,m} = c_{Λ,n+m}`
    AC,
    /// `aₙ ⊕ d_{Λ,m} = d_{Λ,m−n}` for `n < m`
    AD,
    /// `c_{Λ,n} ⊕ c_{I,m} = c_{Λ∪I,n+m−1}` for disjoint `Λ, I`
    CC,
    /// `c_{Λ,n} ⊕ d_{I,m} = d_{I∖Λ,m−n+1}` for `Λ ⊊ I`, `n ≤ m`
    CDProper,
    /// `c_{Λ,n} ⊕ d_{Λ,m} = b_{m−n}` for `n < m`
    CDLess,
    /// `c_{Λ,n} ⊕ d_{Λ,n} = 1`
    CDEqual,
}

/// One case of the ∘ table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CircRule {
    /// `0 ∘ x = 0`
    Zero,
    /// `1 ∘ x = x`
    One,
    /// `aₙ ∘ aₘ = 0`
    AA,
    /// `aₙ ∘ bₘ = aₙ`
    AB,
    /// `bₙ ∘ bₘ = b_{n+m}`
    BB,
    /// `aₙ ∘ c_{Λ,m} = 0`
    AC,
    /// `c_{Λ,n} ∘ bₘ = c_{Λ,n}`
    CB,
    /// `aₙ ∘ d_{Λ,m} = aₙ`
    AD,
    /// `bₙ ∘ d_{Λ,m} = d_{Λ,m+n}`
    BD,
    /// `d_{Λ,n} ∘ d_{I,m} = d_{Λ∪I,n+m−1}`
    DD,
    /// `c_{Λ,n} ∘ c_{I,m} = c_{Λ∩I,1}` when `Λ∩I ≠ ∅`
    CCMeet,
    /// `c_{Λ,n} ∘ c_{I,m} = 0` when `Λ∩I = ∅`
    CCZero,
    /// `c_{Λ,n} ∘ d_{I,m} = c_{Λ∖I,n}` when `Λ∖I ≠ ∅`
    CDRemainder,
    /// `c_{Λ,n} ∘ d_{I,m} = a_{n−1}` when `Λ ⊆ I`, `n > 1`
    CDShrink,
    /// `c_{Λ,1} ∘ d_{I,m} = 0` when `Λ ⊆ I`
    CDZero,
}

/// Identifier of a single table rule, e.g. `oplus.a_b.eq` or `circ.c_d.c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    Oplus(OplusRule),
    Circ(CircRule),
}

const RULE_NAMES: &[(RuleId, &str)] = &[
    (RuleId::Oplus(OplusRule::ZeroUnit), "oplus.zero"),
    (RuleId::Oplus(OplusRule::AA), "oplus.a_a"),
    (RuleId::Oplus(OplusRule::ABLess), "oplus.a_b.lt"),
    (RuleId::Oplus(OplusRule::ABEqual), "oplus.a_b.eq"),
    (RuleId::Oplus(OplusRule::AC), "oplus.a_c"),
    (RuleId::Oplus(OplusRule::AD), "oplus.a_d"),
    (RuleId::Oplus(OplusRule::CC), "oplus.c_c"),
    (RuleId::Oplus(OplusRule::CDProper), "oplus.c_d.d"),
    (RuleId::Oplus(OplusRule::CDLess), "oplus.c_d.b"),
    (RuleId::Oplus(OplusRule::CDEqual), "oplus.c_d.one"),
    (RuleId::Circ(CircRule::Zero), "circ.zero"),
    (RuleId::Circ(CircRule::One), "circ.one"),
    (RuleId::Circ(CircRule::AA), "circ.a_a"),
    (RuleId::Circ(CircRule::AB), "circ.a_b"),
    (RuleId::Circ(CircRule::BB), "circ.b_b"),
    (RuleId::Circ(CircRule::AC), "circ.a_c"),
    (RuleId::Circ(CircRule::CB), "circ.c_b"),
    (RuleId::Circ(CircRule::AD), "circ.a_d"),
    (RuleId::Circ(CircRule::BD), "circ.b_d"),
    (RuleId::Circ(CircRule::DD), "circ.d_d"),
    (RuleId::Circ(CircRule::CCMeet), "circ.c_c.c"),
    (RuleId::Circ(CircRule::CCZero), "circ.c_c.zero"),
    (RuleId::Circ(CircRule::CDRemainder), "circ.c_d.c"),
    (RuleId::Circ(CircRule::CDShrink), "circ.c_d.a"),
    (RuleId::Circ(CircRule::CDZero), "circ.c_d.zero"),
];

impl RuleId {
    pub fn all() -> impl Iterator<Item = RuleId> {
        RULE_NAMES.iter().map(|(id, _)| *id)
    }

    pub fn name(self) -> &'static str {
        RULE_NAMES
            .iter()
            .find(|(id, _)| *id == self)
            .map(|(_, name)| *name)
            .expect("every rule is named")
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleId {
    type Err = String;

    fn from_str(text: &str) -> Result<RuleId, String> {
        RULE_NAMES
            .iter()
            .find(|(_, name)| *name == text)
            .map(|(id, _)| *id)
            .ok_or_else(|| format!("unknown rule id '{text}'"))
    }
}

/// `x ⊕ y` together with the rule that defines it, or `None` when undefined.
pub fn oplus_traced(x: &Element, y: &Element) -> Option<(OplusRule, Element)> {
    match (x, y) {
        (Element::Zero, other) | (other, Element::Zero) => {
            Some((OplusRule::ZeroUnit, other.clone()))
        }
        _ => oplus_ordered(x, y).or_else(|| oplus_ordered(y, x)),
    }
}

fn oplus_ordered(x: &Element, y: &Element) -> Option<(OplusRule, Element)> {
    use Element::*;
    match (x, y) {
        (A(n), A(m)) => Some((OplusRule::AA, A(n.plus(*m)))),
        (A(n), B(m)) if n < m => Some((OplusRule::ABLess, B(m.minus(*n)?))),
        (A(n), B(m)) if n == m => Some((OplusRule::ABEqual, One)),
        (A(n), C(set, m)) => Some((OplusRule::AC, C(set.clone(), n.plus(*m)))),
        (A(n), D(set, m)) if n < m => Some((OplusRule::AD, D(set.clone(), m.minus(*n)?))),
        (C(s1, n), C(s2, m)) if s1.is_disjoint(s2) => {
            Some((OplusRule::CC, C(s1.union(s2), n.plus_pred(*m))))
        }
        (C(s1, n), D(s2, m)) if s1.is_subset(s2) && n <= m => {
            if let Some(rest) = s2.difference(s1) {
                // m − n + 1 ≥ 1 since n ≤ m
                let index = Index::new(m.get() - n.get() + 1).expect("guarded by n <= m");
                Some((OplusRule::CDProper, D(rest, index)))
            } else if n < m {
                Some((OplusRule::CDLess, B(m.minus(*n)?)))
            } else {
                Some((OplusRule::CDEqual, One))
            }
        }
        _ => None,
    }
}

/// `x ⊕ y`, or `None` when undefined.
pub fn oplus(x: &Element, y: &Element) -> Option<Element> {
    oplus_traced(x, y).map(|(_, z)| z)
}

/// `x ∘ y` together with the rule that defines it.
pub fn circ_traced(x: &Element, y: &Element) -> (CircRule, Element) {
    match (x, y) {
        (Element::Zero, _) | (_, Element::Zero) => (CircRule::Zero, Element::Zero),
        (Element::One, other) | (other, Element::One) => (CircRule::One, other.clone()),
        _ => circ_ordered(x, y)
            .or_else(|| circ_ordered(y, x))
            .expect("the product table covers every pair of a, b, c, d elements"),
    }
}

fn circ_ordered(x: &Element, y: &Element) -> Option<(CircRule, Element)> {
    use Element::*;
    let out = match (x, y) {
        (A(_), A(_)) => (CircRule::AA, Zero),
        (A(n), B(_)) => (CircRule::AB, A(*n)),
        (B(n), B(m)) => (CircRule::BB, B(n.plus(*m))),
        (A(_), C(_, _)) => (CircRule::AC, Zero),
        (C(set, n), B(_)) => (CircRule::CB, C(set.clone(), *n)),
        (A(n), D(_, _)) => (CircRule::AD, A(*n)),
        (B(n), D(set, m)) => (CircRule::BD, D(set.clone(), m.plus(*n))),
        (D(s1, n), D(s2, m)) => (CircRule::DD, D(s1.union(s2), n.plus_pred(*m))),
        (C(s1, _), C(s2, _)) => match s1.intersection(s2) {
            Some(common) => (CircRule::CCMeet, C(common, Index::ONE)),
            None => (CircRule::CCZero, Zero),
        },
        (C(s1, n), D(s2, _)) => match (s1.difference(s2), n.pred()) {
            (Some(rest), _) => (CircRule::CDRemainder, C(rest, *n)),
            (None, Some(smaller)) => (CircRule::CDShrink, A(smaller)),
            (None, None) => (CircRule::CDZero, Zero),
        },
        _ => return None,
    };
    Some(out)
}

/// `x ∘ y`; the sequential product is total.
pub fn circ(x: &Element, y: &Element) -> Element {
    circ_traced(x, y).1
}

/// The unique `y` with `x ⊕ y = 1`.
pub fn orthosupplement(x: &Element) -> Element {
    match x {
        Element::Zero => Element::One,
        Element::One => Element::Zero,
        Element::A(n) => Element::B(*n),
        Element::B(n) => Element::A(*n),
        Element::C(set, n) => Element::D(set.clone(), *n),
        Element::D(set, n) => Element::C(set.clone(), *n),
    }
}

/// The `c` with `x ⊕ c = y` if `x ≤ y`, otherwise `None`.
///
/// Closed form obtained by inverting each ⊕ rule in its parameters.
pub fn leq_witness(x: &Element, y: &Element) -> Option<Element> {
    use Element::*;
    if x == y {
        return Some(Zero);
    }
    match (x, y) {
        (Zero, _) => Some(y.clone()),
        (_, One) => Some(orthosupplement(x)),
        (One, _) | (_, Zero) => None,
        (A(n), A(p)) => p.minus(*n).map(A),
        (A(n), B(p)) => Some(B(p.plus(*n))),
        (B(m), B(p)) => m.minus(*p).map(A),
        (C(set, n), B(p)) => Some(D(set.clone(), n.plus(*p))),
        (D(set, m), B(p)) => m.minus(*p).map(|k| C(set.clone(), k)),
        (A(n), C(set, p)) => p.minus(*n).map(|k| C(set.clone(), k)),
        (C(s1, n), C(s2, p)) => {
            if s1.is_proper_subset(s2) && n <= p {
                let index = Index::new(p.get() - n.get() + 1).expect("n <= p");
                Some(C(s2.difference(s1).expect("proper subset"), index))
            } else if s1 == s2 {
                p.minus(*n).map(A)
            } else {
                None
            }
        }
        (A(n), D(set, p)) => Some(D(set.clone(), p.plus(*n))),
        (C(s1, n), D(s2, p)) if s1.is_disjoint(s2) => Some(D(s1.union(s2), p.plus_pred(*n))),
        (D(s1, m), D(s2, p)) => {
            if s2.is_proper_subset(s1) && p <= m {
                let index = Index::new(m.get() - p.get() + 1).expect("p <= m");
                Some(C(s1.difference(s2).expect("proper subset"), index))
            } else if s1 == s2 {
                m.minus(*p).map(A)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// `x ≤ y` in the order induced by ⊕.
pub fn leq(x: &Element, y: &Element) -> bool {
    leq_witness(x, y).is_some()
}

/// `x ⊥ y`: `x ⊕ y` is defined.
pub fn orthogonal(x: &Element, y: &Element) -> bool {
    oplus(x, y).is_some()
}

/// `x ⊥ y` computed as `x ≤ y′`.
pub fn orthogonal_via_order(x: &Element, y: &Element) -> bool {
    leq(x, &orthosupplement(y))
}

/// `x | y`: `x ∘ y = y ∘ x`.
pub fn commutes(x: &Element, y: &Element) -> bool {
    circ(x, y) == circ(y, x)
}

/// Smallest positive integer outside every given set.
pub fn fresh_member(sets: &[&IndexSet]) -> u32 {
    (1..)
        .find(|i| sets.iter().all(|s| !s.contains(*i)))
        .expect("finite sets")
}
