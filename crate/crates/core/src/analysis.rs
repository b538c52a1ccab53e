//! E₀-specific order results: refuting a least sharp dominator, and the
//! descending chains of sharp `d` elements whose prefix meets keep growing.

use serde::Serialize;
use thiserror::Error;

use crate::element::{Element, Index, IndexSet};
use crate::fragment::Fragment;
use crate::kernel::AlgebraInstance;
use crate::ops;
use crate::order::{self, MeetReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    /// A constructed refutation pair failed re-verification. This means the
    /// tables and the order disagree.
    #[error("refutation pair ({upper}, {smaller}) failed: {reason}")]
    BrokenPair {
        upper: Element,
        smaller: Element,
        reason: &'static str,
    },
    #[error("chain ground sets must be strictly increasing: {0} is not a proper subset of {1}")]
    NotIncreasing(IndexSet, IndexSet),
    #[error("chain ground set {set} is not contained in {{1..{k_max}}}")]
    OutsideFragment { set: IndexSet, k_max: u32 },
    #[error("chain is empty")]
    EmptyChain,
}

/// `smaller` is a sharp upper bound of the target strictly below `upper`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefutationPair {
    pub upper: Element,
    pub smaller: Element,
    /// `target ⊕ target_witness = smaller`
    pub target_witness: Element,
    /// `smaller ⊕ gap_witness = upper`
    pub gap_witness: Element,
}

impl RefutationPair {
    /// Re-checks every claim from the ⊕ and ∘ tables alone.
    pub fn verify(&self, target: &Element) -> bool {
        ops::oplus(target, &self.target_witness).as_ref() == Some(&self.smaller)
            && ops::oplus(&self.smaller, &self.gap_witness).as_ref() == Some(&self.upper)
            && ops::circ(&self.smaller, &self.smaller) == self.smaller
            && self.smaller != self.upper
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum DominatorOutcome {
    /// Every sharp upper bound in the fragment has a strictly smaller sharp
    /// upper bound in E₀: no least sharp dominator exists.
    Refuted,
    /// The target has a least sharp dominator; for a sharp target it is the
    /// target itself, otherwise it is least among the fragment's sharp upper
    /// bounds and no refutation applies to it.
    Dominated(Element),
    /// Some bounds were not refuted and none of them is least.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominatorCertificate {
    pub target: Element,
    pub sharp_upper_bounds_in_fragment: Vec<Element>,
    pub refutation_pairs: Vec<RefutationPair>,
    pub outcome: DominatorOutcome,
}

impl DominatorCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("target: {}\n", self.target);
        let bounds: Vec<String> = self
            .sharp_upper_bounds_in_fragment
            .iter()
            .map(|e| e.to_string())
            .collect();
        out.push_str(&format!(
            "sharp upper bounds in fragment: [{}]\n",
            bounds.join(", ")
        ));
        for p in &self.refutation_pairs {
            out.push_str(&format!(
                "{} < {}: {} + {} = {}, {} + {} = {}\n",
                p.smaller,
                p.upper,
                self.target,
                p.target_witness,
                p.smaller,
                p.smaller,
                p.gap_witness,
                p.upper
            ));
        }
        out.push_str(&match &self.outcome {
            DominatorOutcome::Refuted => {
                "refuted: no least sharp element above the target\n".to_string()
            }
            DominatorOutcome::Dominated(s) => {
                format!("dominated: least sharp element above the target is {s}\n")
            }
            DominatorOutcome::Inconclusive => "inconclusive\n".to_string(),
        });
        out
    }
}

/// A sharp `d_{Λ,1}` strictly below `upper` and still above `target`, built
/// by adding the smallest index fresh to both `Λ` and the target's ground set.
fn candidate_below(target: &Element, upper: &Element) -> Option<Element> {
    let target_set = target.ground_set();
    let mut avoid: Vec<&IndexSet> = target_set.into_iter().collect();
    match upper {
        Element::One => {
            let fresh = ops::fresh_member(&avoid);
            Some(Element::D(IndexSet::singleton(fresh), Index::ONE))
        }
        Element::D(set, n) if *n == Index::ONE => {
            avoid.push(set);
            let fresh = ops::fresh_member(&avoid);
            Some(Element::D(set.with(fresh), *n))
        }
        _ => None,
    }
}

/// Tries to show that `target` has no least sharp upper bound: each sharp
/// upper bound found in `fragment` is paired with a strictly smaller one.
///
/// The smaller bound may lie outside the fragment. Every pair is re-verified
/// through ⊕ witnesses and the ∘ sharpness test before it is reported.
pub fn refute_least_sharp_dominator(
    target: &Element,
    fragment: &Fragment,
) -> Result<DominatorCertificate, AnalysisError> {
    let bounds = order::upper_bounds(fragment, target, true);
    let mut cert = DominatorCertificate {
        target: target.clone(),
        sharp_upper_bounds_in_fragment: bounds.clone(),
        refutation_pairs: vec![],
        outcome: DominatorOutcome::Inconclusive,
    };
    if order::is_sharp_mult(fragment, target) {
        cert.outcome = DominatorOutcome::Dominated(target.clone());
        return Ok(cert);
    }
    let mut unrefuted = vec![];
    for upper in &bounds {
        let Some(smaller) = candidate_below(target, upper) else {
            unrefuted.push(upper.clone());
            continue;
        };
        let Some(target_witness) = ops::leq_witness(target, &smaller) else {
            unrefuted.push(upper.clone());
            continue;
        };
        let broken = |reason| AnalysisError::BrokenPair {
            upper: upper.clone(),
            smaller: smaller.clone(),
            reason,
        };
        let gap_witness =
            ops::leq_witness(&smaller, upper).ok_or_else(|| broken("not below the upper bound"))?;
        let pair = RefutationPair {
            upper: upper.clone(),
            smaller: smaller.clone(),
            target_witness,
            gap_witness,
        };
        if !pair.verify(target) {
            return Err(broken("witnesses or sharpness do not re-verify"));
        }
        cert.refutation_pairs.push(pair);
    }
    cert.outcome = if unrefuted.is_empty() {
        DominatorOutcome::Refuted
    } else {
        match bounds
            .iter()
            .find(|s| bounds.iter().all(|t| ops::leq(s, t)))
        {
            Some(least) if unrefuted.contains(least) => DominatorOutcome::Dominated(least.clone()),
            _ => DominatorOutcome::Inconclusive,
        }
    };
    Ok(cert)
}

/// Finite-prefix checks of the two continuity conditions a σ-sequential
/// product must satisfy, restricted to multipliers whose products stay in
/// the fragment.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ContinuityEvidence {
    /// Multipliers `b` with every `b ∘ dᵢ` in the fragment.
    pub products_checked: usize,
    /// Of those, cases where `b ∘ ⋀dᵢ ≠ ⋀(b ∘ dᵢ)`.
    pub product_failures: usize,
    /// Multipliers commuting with every chain member.
    pub independence_checked: usize,
    /// Of those, cases where `b` does not commute with the meet.
    pub independence_failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainPrefix {
    pub length: usize,
    pub meet: MeetReport<Element>,
    /// `|Λ|` when the prefix meet is `d_{Λ,n}`.
    pub ground_set_size: Option<usize>,
    pub meet_is_sharp: bool,
    pub continuity: Option<ContinuityEvidence>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub fragment: String,
    pub chain: Vec<Element>,
    /// `d_{Λ₁,1} > d_{Λ₂,1} > ⋯` verified through the order.
    pub strictly_decreasing: bool,
    pub prefixes: Vec<ChainPrefix>,
    /// Ground-set sizes of consecutive prefix meets strictly increase.
    pub strictly_growing: bool,
}

impl ChainReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("chain report serializes")
    }

    pub fn to_text(&self) -> String {
        let chain: Vec<String> = self.chain.iter().map(|e| e.to_string()).collect();
        let mut out = format!(
            "fragment: {}\nchain: {}\n",
            self.fragment,
            chain.join(" > ")
        );
        out.push_str(&format!(
            "strictly decreasing: {}\n",
            self.strictly_decreasing
        ));
        for p in &self.prefixes {
            let meet = p
                .meet
                .meet()
                .map(|m| m.to_string())
                .unwrap_or_else(|| "none".into());
            let size = p
                .ground_set_size
                .map(|s| s.to_string())
                .unwrap_or_else(|| "-".into());
            out.push_str(&format!(
                "prefix {}: meet {} (ground set size {}, sharp {})\n",
                p.length, meet, size, p.meet_is_sharp
            ));
        }
        out.push_str(&format!(
            "ground sets strictly growing: {}\n",
            self.strictly_growing
        ));
        out
    }
}

fn continuity(fragment: &Fragment, chain: &[Element], meet: &Element) -> ContinuityEvidence {
    let mut ev = ContinuityEvidence::default();
    for b in fragment.elements() {
        let products: Vec<Element> = chain.iter().map(|d| ops::circ(b, d)).collect();
        if products.iter().all(|p| fragment.contains(p)) {
            ev.products_checked += 1;
            if order::meet(fragment, &products).meet() != Some(&ops::circ(b, meet)) {
                ev.product_failures += 1;
            }
        }
        if chain.iter().all(|d| ops::commutes(b, d)) {
            ev.independence_checked += 1;
            if !ops::commutes(b, meet) {
                ev.independence_failures += 1;
            }
        }
    }
    ev
}

/// For the descending chain `d_{Λ₁,1} > d_{Λ₂,1} > ⋯` given by strictly
/// increasing ground sets, computes the in-fragment meet of every prefix.
pub fn chain_meet_analysis(
    ground_sets: &[IndexSet],
    fragment: &Fragment,
) -> Result<ChainReport, AnalysisError> {
    if ground_sets.is_empty() {
        return Err(AnalysisError::EmptyChain);
    }
    for set in ground_sets {
        if set.max() > fragment.k_max() {
            return Err(AnalysisError::OutsideFragment {
                set: set.clone(),
                k_max: fragment.k_max(),
            });
        }
    }
    for w in ground_sets.windows(2) {
        if !w[0].is_proper_subset(&w[1]) {
            return Err(AnalysisError::NotIncreasing(w[0].clone(), w[1].clone()));
        }
    }
    let chain: Vec<Element> = ground_sets
        .iter()
        .map(|s| Element::D(s.clone(), Index::ONE))
        .collect();
    let strictly_decreasing = chain
        .windows(2)
        .all(|w| w[0] != w[1] && ops::leq(&w[1], &w[0]));
    let prefixes: Vec<ChainPrefix> = (1..=chain.len())
        .map(|len| {
            let prefix = &chain[..len];
            let meet = order::meet(fragment, prefix);
            let found = meet.meet().cloned();
            ChainPrefix {
                length: len,
                ground_set_size: found
                    .as_ref()
                    .and_then(|m| m.ground_set())
                    .map(IndexSet::len),
                meet_is_sharp: found
                    .as_ref()
                    .is_some_and(|m| order::is_sharp_mult(fragment, m)),
                continuity: found.as_ref().map(|m| continuity(fragment, prefix, m)),
                meet,
            }
        })
        .collect();
    let strictly_growing =
        prefixes
            .windows(2)
            .all(|w| match (w[0].ground_set_size, w[1].ground_set_size) {
                (Some(a), Some(b)) => a < b,
                _ => false,
            })
            && prefixes.iter().all(|p| p.ground_set_size.is_some());
    Ok(ChainReport {
        fragment: fragment.label(),
        chain,
        strictly_decreasing,
        prefixes,
        strictly_growing,
    })
}

/// Parses `"{1};{1,2};{1,2,3}"`.
pub fn parse_chain(text: &str) -> Result<Vec<IndexSet>, crate::element::ElementError> {
    text.split(';').map(|part| part.trim().parse()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(text: &str) -> Element {
        text.parse().unwrap()
    }

    #[test]
    fn a1_in_smallest_fragment_is_refuted() {
        let f = Fragment::new(2, 1).unwrap();
        let cert = refute_least_sharp_dominator(&e("a1"), &f).unwrap();
        assert_eq!(cert.outcome, DominatorOutcome::Refuted);
        assert!(cert
            .refutation_pairs
            .iter()
            .any(|p| p.upper == e("d{1}:1") && p.smaller == e("d{1,2}:1")));
        assert!(cert.refutation_pairs.iter().all(|p| p.verify(&cert.target)));
    }

    #[test]
    fn fresh_index_tie_break() {
        let f = Fragment::new(2, 3).unwrap();
        let cert = refute_least_sharp_dominator(&e("a1"), &f).unwrap();
        for p in &cert.refutation_pairs {
            if let Element::D(set, _) = &p.upper {
                assert_eq!(
                    p.smaller,
                    Element::D(set.with(set.smallest_absent()), Index::ONE)
                );
            }
        }
        assert_eq!(cert.refutation_pairs.len(), 8);
    }

    #[test]
    fn zero_is_its_own_dominator() {
        let f = Fragment::new(2, 2).unwrap();
        let cert = refute_least_sharp_dominator(&Element::Zero, &f).unwrap();
        assert_eq!(cert.outcome, DominatorOutcome::Dominated(Element::Zero));
        assert!(cert.refutation_pairs.is_empty());
    }

    #[test]
    fn some_non_sharp_targets_are_dominated() {
        let f = Fragment::new(3, 2).unwrap();
        let cert = refute_least_sharp_dominator(&e("b2"), &f).unwrap();
        assert_eq!(cert.outcome, DominatorOutcome::Dominated(Element::One));
        let cert = refute_least_sharp_dominator(&e("d{1,2}:3"), &f).unwrap();
        assert_eq!(cert.outcome, DominatorOutcome::Dominated(e("d{1,2}:1")));
        let cert = refute_least_sharp_dominator(&e("c{1}:2"), &f).unwrap();
        assert_eq!(cert.outcome, DominatorOutcome::Refuted);
    }

    #[test]
    fn certificate_json_uses_element_grammar() {
        let f = Fragment::new(2, 1).unwrap();
        let cert = refute_least_sharp_dominator(&e("a1"), &f).unwrap();
        let json: serde_json::Value = serde_json::from_str(&cert.to_json()).unwrap();
        assert_eq!(json["target"], "a1");
        assert_eq!(json["outcome"]["kind"], "refuted");
        assert_eq!(
            json["sharp_upper_bounds_in_fragment"],
            serde_json::json!(["1", "d{1}:1"])
        );
    }

    #[test]
    fn chain_of_three() {
        let f = Fragment::new(2, 3).unwrap();
        let chain = parse_chain("{1};{1,2};{1,2,3}").unwrap();
        let report = chain_meet_analysis(&chain, &f).unwrap();
        let meets: Vec<Element> = report
            .prefixes
            .iter()
            .map(|p| p.meet.meet().unwrap().clone())
            .collect();
        assert_eq!(meets, vec![e("d{1}:1"), e("d{1,2}:1"), e("d{1,2,3}:1")]);
        assert!(report.strictly_decreasing && report.strictly_growing);
        for p in &report.prefixes {
            let c = p.continuity.as_ref().unwrap();
            assert_eq!((c.product_failures, c.independence_failures), (0, 0));
            assert!(c.products_checked > 0);
        }
    }

    #[test]
    fn singleton_chain() {
        let f = Fragment::new(2, 3).unwrap();
        let report = chain_meet_analysis(&[IndexSet::singleton(1)], &f).unwrap();
        assert_eq!(report.prefixes[0].meet.meet(), Some(&e("d{1}:1")));
        assert!(report.strictly_growing);
    }

    #[test]
    fn chain_errors() {
        let f = Fragment::new(2, 2).unwrap();
        let err = chain_meet_analysis(&parse_chain("{1,2};{1}").unwrap(), &f).unwrap_err();
        assert!(matches!(err, AnalysisError::NotIncreasing(..)));
        let err = chain_meet_analysis(&parse_chain("{1};{1}").unwrap(), &f).unwrap_err();
        assert!(matches!(err, AnalysisError::NotIncreasing(..)));
        let err = chain_meet_analysis(&parse_chain("{1};{1,3}").unwrap(), &f).unwrap_err();
        assert!(matches!(err, AnalysisError::OutsideFragment { .. }));
        assert_eq!(
            chain_meet_analysis(&[], &f).unwrap_err(),
            AnalysisError::EmptyChain
        );
        assert!(parse_chain("{1};{}").is_err());
    }
}
