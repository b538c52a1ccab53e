//! Finite fragments of E₀: the quantification domains of every exhaustive check.

use std::collections::HashSet;

use thiserror::Error;

use crate::element::{Element, Index, IndexSet};
use crate::kernel::{AlgebraInstance, CheckMode};
use crate::ops;

/// Largest index bound accepted by [`Fragment::new`].
pub const MAX_N: u32 = 64;
/// Largest ground-set bound accepted by [`Fragment::new`].
pub const MAX_K: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FragmentError {
    #[error("fragment bound n_max must be in 1..={MAX_N}, got {0}")]
    IndexBound(u32),
    #[error("fragment bound k_max must be in 1..={MAX_K}, got {0}")]
    GroundBound(u32),
}

/// The sub-universe `{0,1} ∪ {aₙ,bₙ} ∪ {c_{Λ,n}, d_{Λ,n}}` with `n ≤ N`
/// and `∅ ≠ Λ ⊆ {1..K}`. Operations on members may leave the fragment.
#[derive(Clone, Debug)]
pub struct Fragment {
    n_max: u32,
    k_max: u32,
    carrier: Vec<Element>,
    members: HashSet<Element>,
}

impl Fragment {
    pub fn new(n_max: u32, k_max: u32) -> Result<Fragment, FragmentError> {
        if !(1..=MAX_N).contains(&n_max) {
            return Err(FragmentError::IndexBound(n_max));
        }
        if !(1..=MAX_K).contains(&k_max) {
            return Err(FragmentError::GroundBound(k_max));
        }
        let indices: Vec<Index> = (1..=n_max).filter_map(Index::new).collect();
        let sets = IndexSet::all_nonempty_subsets(k_max);
        let mut carrier = vec![Element::Zero, Element::One];
        carrier.extend(indices.iter().map(|n| Element::A(*n)));
        carrier.extend(indices.iter().map(|n| Element::B(*n)));
        for set in &sets {
            carrier.extend(indices.iter().map(|n| Element::C(set.clone(), *n)));
        }
        for set in &sets {
            carrier.extend(indices.iter().map(|n| Element::D(set.clone(), *n)));
        }
        carrier.sort();
        let members = carrier.iter().cloned().collect();
        Ok(Fragment {
            n_max,
            k_max,
            carrier,
            members,
        })
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn k_max(&self) -> u32 {
        self.k_max
    }

    pub fn elements(&self) -> &[Element] {
        &self.carrier
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.members.contains(x)
    }

    /// `2 + 2N + 2N(2^K − 1)`.
    pub fn expected_size(n_max: u32, k_max: u32) -> usize {
        let n = n_max as usize;
        2 + 2 * n + 2 * n * ((1usize << k_max) - 1)
    }
}

impl AlgebraInstance for Fragment {
    type Elem = Element;

    fn label(&self) -> String {
        format!("E0 fragment (N={}, K={})", self.n_max, self.k_max)
    }

    fn mode(&self) -> CheckMode {
        CheckMode::Exhaustive
    }

    fn carrier(&self) -> &[Element] {
        &self.carrier
    }

    fn zero(&self) -> Element {
        Element::Zero
    }

    fn one(&self) -> Element {
        Element::One
    }

    fn oplus(&self, a: &Element, b: &Element) -> Option<Element> {
        ops::oplus(a, b)
    }

    fn circ(&self, a: &Element, b: &Element) -> Element {
        ops::circ(a, b)
    }

    /// Closed form over all of E₀, not limited to the carrier.
    fn leq(&self, a: &Element, b: &Element) -> bool {
        ops::leq(a, b)
    }

    fn orthosupplement(&self, a: &Element) -> Option<Element> {
        Some(ops::orthosupplement(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn carrier_size_matches_counting_formula() {
        for n in 1..=4 {
            for k in 1..=3 {
                let f = Fragment::new(n, k).unwrap();
                assert_eq!(f.elements().len(), Fragment::expected_size(n, k));
            }
        }
        assert_eq!(Fragment::new(4, 3).unwrap().elements().len(), 66);
    }

    #[test]
    fn carrier_closed_under_orthosupplement() {
        let f = Fragment::new(3, 2).unwrap();
        for x in f.elements() {
            assert!(f.contains(&ops::orthosupplement(x)));
        }
    }

    #[test]
    fn rejects_out_of_range_bounds() {
        assert_eq!(
            Fragment::new(0, 1).unwrap_err(),
            FragmentError::IndexBound(0)
        );
        assert_eq!(
            Fragment::new(1, 0).unwrap_err(),
            FragmentError::GroundBound(0)
        );
        assert!(Fragment::new(1, MAX_K + 1).is_err());
    }
}
