//! Reference instances for the generic verifiers: the Boolean algebra of
//! subsets and a rational grid in `[0, 1]`. Both are sharply dominating.

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::kernel::{AlgebraInstance, CheckMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReferenceError {
    #[error("boolean instance size must be in 1..=5, got {0}")]
    BooleanSize(u32),
    #[error("interval denominator must be in 2..=24, got {0}")]
    Denominator(i64),
}

/// A subset of `{1..k}` stored as a bit mask (bit `i-1` for member `i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(pub u32);

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = (1..=32)
            .filter(|i| self.0 & (1 << (i - 1)) != 0)
            .map(|i: u32| i.to_string())
            .collect();
        write!(f, "{{{}}}", members.join(","))
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All subsets of `{1..k}`: ⊕ is disjoint union, ∘ is intersection.
#[derive(Clone, Debug)]
pub struct BooleanInstance {
    k: u32,
    carrier: Vec<Subset>,
}

pub fn boolean_instance(k: u32) -> Result<BooleanInstance, ReferenceError> {
    if !(1..=5).contains(&k) {
        return Err(ReferenceError::BooleanSize(k));
    }
    Ok(BooleanInstance {
        k,
        carrier: (0..(1u32 << k)).map(Subset).collect(),
    })
}

impl AlgebraInstance for BooleanInstance {
    type Elem = Subset;

    fn label(&self) -> String {
        format!("boolean algebra of subsets of {{1..{}}}", self.k)
    }

    fn mode(&self) -> CheckMode {
        CheckMode::Exhaustive
    }

    fn carrier(&self) -> &[Subset] {
        &self.carrier
    }

    fn zero(&self) -> Subset {
        Subset(0)
    }

    fn one(&self) -> Subset {
        Subset((1 << self.k) - 1)
    }

    fn oplus(&self, a: &Subset, b: &Subset) -> Option<Subset> {
        (a.0 & b.0 == 0).then_some(Subset(a.0 | b.0))
    }

    fn circ(&self, a: &Subset, b: &Subset) -> Subset {
        Subset(a.0 & b.0)
    }
}

/// An exact rational, rendered in lowest terms (`0`, `1`, `1/2`, ...).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(pub Ratio<i64>);

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The grid `{k/D : 0 ≤ k ≤ D}` inside the scalar effect algebra `[0, 1]`,
/// with ⊕ = addition (defined up to 1) and ∘ = multiplication. Products leave
/// the grid, so checks over it are sampled rather than exhaustive.
#[derive(Clone, Debug)]
pub struct IntervalInstance {
    denominator: i64,
    carrier: Vec<Rational>,
}

pub fn interval_instance(denominator: i64) -> Result<IntervalInstance, ReferenceError> {
    if !(2..=24).contains(&denominator) {
        return Err(ReferenceError::Denominator(denominator));
    }
    let carrier = (0..=denominator)
        .map(|k| Rational(Ratio::new(k, denominator)))
        .collect();
    Ok(IntervalInstance {
        denominator,
        carrier,
    })
}

impl IntervalInstance {
    pub fn value(&self, k: i64) -> Rational {
        Rational(Ratio::new(k, self.denominator))
    }
}

impl AlgebraInstance for IntervalInstance {
    type Elem = Rational;

    fn label(&self) -> String {
        format!(
            "rational grid in [0,1] with denominator {}",
            self.denominator
        )
    }

    fn mode(&self) -> CheckMode {
        CheckMode::Sampled
    }

    fn carrier(&self) -> &[Rational] {
        &self.carrier
    }

    fn zero(&self) -> Rational {
        Rational(Ratio::from_integer(0))
    }

    fn one(&self) -> Rational {
        Rational(Ratio::from_integer(1))
    }

    fn oplus(&self, a: &Rational, b: &Rational) -> Option<Rational> {
        let sum = a.0 + b.0;
        (sum <= Ratio::from_integer(1)).then_some(Rational(sum))
    }

    fn circ(&self, a: &Rational, b: &Rational) -> Rational {
        Rational(a.0 * b.0)
    }

    fn leq(&self, a: &Rational, b: &Rational) -> bool {
        a.0 <= b.0
    }

    fn orthosupplement(&self, a: &Rational) -> Option<Rational> {
        Some(Rational(Ratio::from_integer(1) - a.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{verify_ea, verify_sea, VerifyOptions};
    use crate::order::{is_sharp_mult, least_sharp_dominator, sharp_elements};

    #[test]
    fn two_element_boolean_algebra() {
        let b = boolean_instance(1).unwrap();
        let names: Vec<String> = b.carrier().iter().map(|s| s.to_string()).collect();
        assert_eq!(names, ["{}", "{1}"]);
        assert!(verify_sea(&b, VerifyOptions::serial()).unwrap().is_clean());
    }

    #[test]
    fn boolean_sharp_set_is_carrier() {
        let b = boolean_instance(2).unwrap();
        assert_eq!(sharp_elements(&b).len(), 4);
    }

    #[test]
    fn boolean_dominators_are_identity() {
        let b = boolean_instance(3).unwrap();
        for x in b.carrier() {
            assert_eq!(least_sharp_dominator(&b, x), Some(*x));
        }
    }

    #[test]
    fn interval_products() {
        let i = interval_instance(2).unwrap();
        assert_eq!(i.circ(&i.value(1), &i.value(1)).to_string(), "1/4");
        let i = interval_instance(6).unwrap();
        assert!(verify_ea(&i, VerifyOptions::serial()).unwrap().is_clean());
        assert!(!is_sharp_mult(&i, &i.value(3)));
    }

    #[test]
    fn interval_leq_matches_carrier_search() {
        let i = interval_instance(6).unwrap();
        for a in i.carrier() {
            for b in i.carrier() {
                let searched = i
                    .carrier()
                    .iter()
                    .any(|c| i.oplus(a, c).as_ref() == Some(b));
                assert_eq!(i.leq(a, b), searched);
            }
        }
    }

    #[test]
    fn bounds_are_enforced() {
        assert_eq!(
            boolean_instance(0).unwrap_err(),
            ReferenceError::BooleanSize(0)
        );
        assert_eq!(
            boolean_instance(6).unwrap_err(),
            ReferenceError::BooleanSize(6)
        );
        assert_eq!(
            interval_instance(1).unwrap_err(),
            ReferenceError::Denominator(1)
        );
        assert_eq!(
            interval_instance(25).unwrap_err(),
            ReferenceError::Denominator(25)
        );
    }
}
