//! Single-rule mutations of the E₀ tables, used as negative controls for the
//! verifiers.
//!
//! A [`MutationSpec`] names one rule (see [`RuleId`]) and an [`Override`] for
//! its result. Everything else is evaluated exactly as in [`crate::ops`].
//! The textual form is `<rule-id>:<override>`, e.g. `oplus.a_a:shift+1`,
//! `circ.b_b:left`, `oplus.a_b.eq:=b1`, `oplus.c_c:undefined`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::element::Element;
use crate::fragment::Fragment;
use crate::kernel::{AlgebraInstance, CheckMode};
use crate::ops::{self, CircRule, OplusRule, RuleId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Override {
    /// Leaves the rule unchanged.
    Identity,
    /// Adds the given amount to the subscript of the rule's result.
    ShiftIndex(u32),
    /// Replaces the result by a fixed element.
    Constant(Element),
    /// Returns the left operand as passed by the caller, breaking symmetry.
    LeftOperand,
    /// Makes the rule undefined (⊕ rules only).
    Undefined,
}

impl fmt::Display for Override {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Override::Identity => f.write_str("identity"),
            Override::ShiftIndex(k) => write!(f, "shift+{k}"),
            Override::Constant(e) => write!(f, "={e}"),
            Override::LeftOperand => f.write_str("left"),
            Override::Undefined => f.write_str("undefined"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MutationError {
    #[error("unknown rule id '{0}'")]
    UnknownRule(String),
    #[error("unknown override '{0}'")]
    UnknownOverride(String),
    #[error("no shipped fixture for rule '{0}'; give an explicit override")]
    NoFixture(String),
    #[error("override '{override_}' does not apply to rule '{rule}'")]
    Inapplicable { rule: RuleId, override_: Override },
}

/// One rule replaced by one override.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutationSpec {
    pub rule: RuleId,
    pub override_: Override,
}

impl MutationSpec {
    pub fn new(rule: RuleId, override_: Override) -> Result<MutationSpec, MutationError> {
        let spec = MutationSpec { rule, override_ };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<(), MutationError> {
        let inapplicable = || MutationError::Inapplicable {
            rule: self.rule,
            override_: self.override_.clone(),
        };
        match (&self.override_, self.rule) {
            (Override::Undefined, RuleId::Circ(_)) => Err(inapplicable()),
            // These rules always produce 0 or 1, which carry no subscript.
            (
                Override::ShiftIndex(_),
                RuleId::Oplus(OplusRule::ABEqual | OplusRule::CDEqual)
                | RuleId::Circ(
                    CircRule::Zero
                    | CircRule::AA
                    | CircRule::AC
                    | CircRule::CCZero
                    | CircRule::CDZero,
                ),
            ) => Err(inapplicable()),
            (Override::ShiftIndex(0), _) => Err(inapplicable()),
            _ => Ok(()),
        }
    }

    /// The shipped negative-control fixtures, each expected to break at least
    /// one axiom on small fragments.
    pub fn fixtures() -> Vec<MutationSpec> {
        [
            "oplus.a_a:shift+1",
            "oplus.a_b.eq:=b1",
            "oplus.a_d:shift+1",
            "oplus.c_c:undefined",
            "oplus.c_d.d:shift+1",
            "circ.b_b:left",
            "circ.a_d:=0",
            "circ.c_c.c:shift+1",
            "circ.c_d.c:shift+1",
            "circ.d_d:shift+1",
        ]
        .iter()
        .map(|s| s.parse().expect("fixtures are well formed"))
        .collect()
    }

    /// The shipped fixture for `rule`, if any.
    pub fn fixture_for(rule: RuleId) -> Option<MutationSpec> {
        MutationSpec::fixtures()
            .into_iter()
            .find(|m| m.rule == rule)
    }

    fn apply(&self, left: &Element, result: Element) -> Element {
        match &self.override_ {
            Override::Identity | Override::Undefined => result,
            Override::ShiftIndex(k) => result.shift_index(*k),
            Override::Constant(e) => e.clone(),
            Override::LeftOperand => left.clone(),
        }
    }
}

impl fmt::Display for MutationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.rule, self.override_)
    }
}

impl FromStr for Override {
    type Err = MutationError;

    fn from_str(text: &str) -> Result<Override, MutationError> {
        let unknown = || MutationError::UnknownOverride(text.to_string());
        match text {
            "identity" => Ok(Override::Identity),
            "left" => Ok(Override::LeftOperand),
            "undefined" => Ok(Override::Undefined),
            _ => {
                if let Some(k) = text.strip_prefix("shift+") {
                    k.parse().map(Override::ShiftIndex).map_err(|_| unknown())
                } else if let Some(e) = text.strip_prefix('=') {
                    e.parse().map(Override::Constant).map_err(|_| unknown())
                } else {
                    Err(unknown())
                }
            }
        }
    }
}

impl FromStr for MutationSpec {
    type Err = MutationError;

    /// `<rule-id>:<override>`, or a bare `<rule-id>` for the shipped fixture.
    fn from_str(text: &str) -> Result<MutationSpec, MutationError> {
        let (rule_text, override_text) = match text.split_once(':') {
            Some((r, o)) => (r, Some(o)),
            None => (text, None),
        };
        let rule: RuleId = rule_text
            .parse()
            .map_err(|_| MutationError::UnknownRule(rule_text.to_string()))?;
        match override_text {
            Some(o) => MutationSpec::new(rule, o.parse()?),
            None => MutationSpec::fixture_for(rule)
                .ok_or_else(|| MutationError::NoFixture(rule_text.to_string())),
        }
    }
}

/// An E₀ fragment whose tables differ from the original in one rule.
#[derive(Clone, Debug)]
pub struct MutatedFragment {
    fragment: Fragment,
    spec: MutationSpec,
}

/// Builds the mutated instance over `fragment`.
pub fn apply_mutation(fragment: Fragment, spec: MutationSpec) -> MutatedFragment {
    MutatedFragment { fragment, spec }
}

impl MutatedFragment {
    pub fn spec(&self) -> &MutationSpec {
        &self.spec
    }

    pub fn fragment(&self) -> &Fragment {
        &self.fragment
    }
}

impl AlgebraInstance for MutatedFragment {
    type Elem = Element;

    fn label(&self) -> String {
        format!("{} mutated {}", self.fragment.label(), self.spec)
    }

    fn mode(&self) -> CheckMode {
        CheckMode::Exhaustive
    }

    fn carrier(&self) -> &[Element] {
        self.fragment.elements()
    }

    fn zero(&self) -> Element {
        Element::Zero
    }

    fn one(&self) -> Element {
        Element::One
    }

    fn oplus(&self, a: &Element, b: &Element) -> Option<Element> {
        let (rule, result) = ops::oplus_traced(a, b)?;
        if self.spec.rule != RuleId::Oplus(rule) {
            return Some(result);
        }
        match self.spec.override_ {
            Override::Undefined => None,
            _ => Some(self.spec.apply(a, result)),
        }
    }

    fn circ(&self, a: &Element, b: &Element) -> Element {
        let (rule, result) = ops::circ_traced(a, b);
        if self.spec.rule == RuleId::Circ(rule) {
            self.spec.apply(a, result)
        } else {
            result
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(text: &str) -> Element {
        text.parse().unwrap()
    }

    fn mutated(spec: &str) -> MutatedFragment {
        apply_mutation(Fragment::new(3, 2).unwrap(), spec.parse().unwrap())
    }

    #[test]
    fn identity_override_matches_original_tables() {
        let f = Fragment::new(3, 2).unwrap();
        for rule in RuleId::all() {
            let m = apply_mutation(
                f.clone(),
                MutationSpec::new(rule, Override::Identity).unwrap(),
            );
            for x in f.elements() {
                for y in f.elements() {
                    assert_eq!(m.oplus(x, y), f.oplus(x, y));
                    assert_eq!(m.circ(x, y), f.circ(x, y));
                }
            }
        }
    }

    #[test]
    fn shifted_a_sum() {
        let m = mutated("oplus.a_a:shift+1");
        assert_eq!(m.oplus(&e("a1"), &e("a1")), Some(e("a3")));
        assert_eq!(m.oplus(&e("a1"), &e("b2")), Some(e("b1")));
    }

    #[test]
    fn left_projection_breaks_symmetry() {
        let m = mutated("circ.b_b:left");
        assert_eq!(m.circ(&e("b1"), &e("b2")), e("b1"));
        assert_eq!(m.circ(&e("b2"), &e("b1")), e("b2"));
    }

    #[test]
    fn constant_and_undefined_overrides() {
        let m = mutated("oplus.a_b.eq:=b1");
        assert_eq!(m.oplus(&e("a1"), &e("b1")), Some(e("b1")));
        let m = mutated("oplus.c_c:undefined");
        assert_eq!(m.oplus(&e("c{1}:1"), &e("c{2}:1")), None);
    }

    #[test]
    fn bare_rule_id_selects_fixture() {
        let spec: MutationSpec = "circ.b_b".parse().unwrap();
        assert_eq!(spec.override_, Override::LeftOperand);
        assert!(matches!(
            "circ.one".parse::<MutationSpec>(),
            Err(MutationError::NoFixture(_))
        ));
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(
            "oplus.b_b:left".parse::<MutationSpec>(),
            Err(MutationError::UnknownRule(_))
        ));
        assert!(matches!(
            "oplus.a_a:double".parse::<MutationSpec>(),
            Err(MutationError::UnknownOverride(_))
        ));
        assert!(matches!(
            "circ.b_b:undefined".parse::<MutationSpec>(),
            Err(MutationError::Inapplicable { .. })
        ));
        assert!(matches!(
            "oplus.a_b.eq:shift+1".parse::<MutationSpec>(),
            Err(MutationError::Inapplicable { .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        for spec in MutationSpec::fixtures() {
            assert_eq!(spec.to_string().parse::<MutationSpec>().unwrap(), spec);
        }
    }
}
