//! Order-theoretic analysis inside a finite carrier: bounds, meets and joins,
//! sharp elements and least sharp dominators.
//!
//! Every result here is *in-carrier*. For an E₀ fragment a meet found here is
//! the greatest lower bound among fragment elements, which is evidence about,
//! not proof of, the meet in E₀.

use std::fmt;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::kernel::AlgebraInstance;

/// Elements of `inst`'s carrier below `x`.
pub fn lower_bounds<I: AlgebraInstance>(inst: &I, x: &I::Elem) -> Vec<I::Elem> {
    inst.carrier()
        .iter()
        .filter(|y| inst.leq(y, x))
        .cloned()
        .collect()
}

/// Elements of `inst`'s carrier above `x`, optionally restricted to sharp ones.
pub fn upper_bounds<I: AlgebraInstance>(inst: &I, x: &I::Elem, sharp_only: bool) -> Vec<I::Elem> {
    inst.carrier()
        .iter()
        .filter(|y| inst.leq(x, y) && (!sharp_only || is_sharp_mult(inst, y)))
        .cloned()
        .collect()
}

/// Sharpness through the product: `x ∘ x = x`.
pub fn is_sharp_mult<I: AlgebraInstance>(inst: &I, x: &I::Elem) -> bool {
    inst.circ(x, x) == *x
}

/// Sharpness through the order: `x ∧ x′ = 0` inside the carrier.
pub fn is_sharp_order<I: AlgebraInstance>(inst: &I, x: &I::Elem) -> bool {
    let Some(complement) = inst.orthosupplement(x) else {
        return false;
    };
    matches!(meet(inst, &[x.clone(), complement]).outcome, MeetOutcome::Meet(m) if m == inst.zero())
}

/// Carrier elements with `x ∘ x = x`, in carrier order.
pub fn sharp_elements<I: AlgebraInstance>(inst: &I) -> Vec<I::Elem> {
    inst.carrier()
        .iter()
        .filter(|x| is_sharp_mult(inst, x))
        .cloned()
        .collect()
}

/// Serializes a list of elements as their renderings.
fn rendered<E: fmt::Display, S: Serializer>(items: &[E], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(items.iter().map(|e| e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MeetOutcome<E> {
    Meet(E),
    /// At least two incomparable maximal lower bounds.
    NoGreatest,
    /// No common lower bound at all.
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JoinOutcome<E> {
    Join(E),
    NoLeast,
    Empty,
}

#[derive(Serialize)]
struct OutcomeJson {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
}

impl<E: fmt::Display> Serialize for MeetOutcome<E> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let (kind, value) = match self {
            MeetOutcome::Meet(m) => ("meet", Some(m.to_string())),
            MeetOutcome::NoGreatest => ("no_greatest", None),
            MeetOutcome::Empty => ("empty", None),
        };
        OutcomeJson { kind, value }.serialize(s)
    }
}

impl<E: fmt::Display> Serialize for JoinOutcome<E> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let (kind, value) = match self {
            JoinOutcome::Join(j) => ("join", Some(j.to_string())),
            JoinOutcome::NoLeast => ("no_least", None),
            JoinOutcome::Empty => ("empty", None),
        };
        OutcomeJson { kind, value }.serialize(s)
    }
}

/// Greatest-lower-bound computation for a subject set, within the carrier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "E: fmt::Display"))]
pub struct MeetReport<E> {
    #[serde(serialize_with = "rendered")]
    pub subject: Vec<E>,
    pub outcome: MeetOutcome<E>,
    #[serde(serialize_with = "rendered")]
    pub maximal_lower_bounds: Vec<E>,
    #[serde(serialize_with = "rendered")]
    pub lower_bounds: Vec<E>,
}

/// Least-upper-bound computation, dual to [`MeetReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "E: fmt::Display"))]
pub struct JoinReport<E> {
    #[serde(serialize_with = "rendered")]
    pub subject: Vec<E>,
    pub outcome: JoinOutcome<E>,
    #[serde(serialize_with = "rendered")]
    pub minimal_upper_bounds: Vec<E>,
    #[serde(serialize_with = "rendered")]
    pub upper_bounds: Vec<E>,
}

impl<E: fmt::Display> MeetReport<E> {
    pub fn meet(&self) -> Option<&E> {
        match &self.outcome {
            MeetOutcome::Meet(m) => Some(m),
            _ => None,
        }
    }

    pub fn to_text(&self) -> String {
        format!(
            "meet of [{}]: {}\nmaximal lower bounds: [{}]\nlower bounds: {}\n",
            self.subject.iter().join(", "),
            match &self.outcome {
                MeetOutcome::Meet(m) => m.to_string(),
                MeetOutcome::NoGreatest => "no greatest lower bound".to_string(),
                MeetOutcome::Empty => "no lower bound".to_string(),
            },
            self.maximal_lower_bounds.iter().join(", "),
            self.lower_bounds.len()
        )
    }
}

impl<E: fmt::Display> JoinReport<E> {
    pub fn join(&self) -> Option<&E> {
        match &self.outcome {
            JoinOutcome::Join(j) => Some(j),
            _ => None,
        }
    }

    pub fn to_text(&self) -> String {
        format!(
            "join of [{}]: {}\nminimal upper bounds: [{}]\nupper bounds: {}\n",
            self.subject.iter().join(", "),
            match &self.outcome {
                JoinOutcome::Join(j) => j.to_string(),
                JoinOutcome::NoLeast => "no least upper bound".to_string(),
                JoinOutcome::Empty => "no upper bound".to_string(),
            },
            self.minimal_upper_bounds.iter().join(", "),
            self.upper_bounds.len()
        )
    }
}

/// Elements of `bounds` with nothing in `bounds` strictly beyond them in the
/// direction given by `beyond(x, y)` ("y is beyond x").
fn extremal<E: Clone + PartialEq>(bounds: &[E], beyond: impl Fn(&E, &E) -> bool) -> Vec<E> {
    bounds
        .iter()
        .filter(|x| !bounds.iter().any(|y| y != *x && beyond(x, y)))
        .cloned()
        .collect()
}

/// Meet of `xs` among carrier elements.
pub fn meet<I: AlgebraInstance>(inst: &I, xs: &[I::Elem]) -> MeetReport<I::Elem> {
    let lower: Vec<I::Elem> = inst
        .carrier()
        .iter()
        .filter(|y| xs.iter().all(|x| inst.leq(y, x)))
        .cloned()
        .collect();
    let maximal = extremal(&lower, |x, y| inst.leq(x, y));
    let outcome = match maximal.as_slice() {
        [] => MeetOutcome::Empty,
        [m] => MeetOutcome::Meet(m.clone()),
        _ => MeetOutcome::NoGreatest,
    };
    MeetReport {
        subject: xs.to_vec(),
        outcome,
        maximal_lower_bounds: maximal,
        lower_bounds: lower,
    }
}

/// Join of `xs` among carrier elements.
pub fn join<I: AlgebraInstance>(inst: &I, xs: &[I::Elem]) -> JoinReport<I::Elem> {
    let upper: Vec<I::Elem> = inst
        .carrier()
        .iter()
        .filter(|y| xs.iter().all(|x| inst.leq(x, y)))
        .cloned()
        .collect();
    let minimal = extremal(&upper, |x, y| inst.leq(y, x));
    let outcome = match minimal.as_slice() {
        [] => JoinOutcome::Empty,
        [j] => JoinOutcome::Join(j.clone()),
        _ => JoinOutcome::NoLeast,
    };
    JoinReport {
        subject: xs.to_vec(),
        outcome,
        minimal_upper_bounds: minimal,
        upper_bounds: upper,
    }
}

/// The least sharp carrier element above `x`, if the carrier has one.
pub fn least_sharp_dominator<I: AlgebraInstance>(inst: &I, x: &I::Elem) -> Option<I::Elem> {
    let sharp_above = upper_bounds(inst, x, true);
    sharp_above
        .iter()
        .find(|s| sharp_above.iter().all(|t| inst.leq(s, t)))
        .cloned()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Meet,
    Join,
}

/// A meet or join of sharp elements that is not itself sharp.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureCounterexample {
    pub kind: BoundKind,
    pub subject: Vec<String>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SharpClosureReport {
    pub instance: String,
    pub sharp_count: usize,
    pub max_subset_size: usize,
    pub subsets_checked: usize,
    pub meets_found: usize,
    pub joins_found: usize,
    /// Meets/joins that are not already a member of their subject set.
    pub nontrivial_meets: usize,
    pub nontrivial_joins: usize,
    pub counterexamples: Vec<ClosureCounterexample>,
    pub note: &'static str,
}

impl SharpClosureReport {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "instance: {}\nsharp elements: {}\nsubsets of size 2..={}: {}\nmeets found: {} ({} nontrivial)\njoins found: {} ({} nontrivial)\nnote: {}\n",
            self.instance,
            self.sharp_count,
            self.max_subset_size,
            self.subsets_checked,
            self.meets_found,
            self.nontrivial_meets,
            self.joins_found,
            self.nontrivial_joins,
            self.note
        );
        for c in &self.counterexamples {
            out.push_str(&format!(
                "{:?} of [{}] = {} is not sharp\n",
                c.kind,
                c.subject.join(", "),
                c.value
            ));
        }
        out.push_str(&format!("{} counterexamples\n", self.counterexamples.len()));
        out
    }
}

/// For every set of 2..=`max_subset_size` sharp elements whose in-carrier
/// meet (join) exists, checks that the meet (join) is sharp.
pub fn check_sharp_closure<I: AlgebraInstance>(
    inst: &I,
    max_subset_size: usize,
) -> SharpClosureReport {
    let sharp = sharp_elements(inst);
    let mut report = SharpClosureReport {
        instance: inst.label(),
        sharp_count: sharp.len(),
        max_subset_size,
        subsets_checked: 0,
        meets_found: 0,
        joins_found: 0,
        nontrivial_meets: 0,
        nontrivial_joins: 0,
        counterexamples: vec![],
        note: "meets and joins are computed within the carrier only",
    };
    for size in 2..=max_subset_size {
        for subset in sharp.iter().cloned().combinations(size) {
            report.subsets_checked += 1;
            let names = || subset.iter().map(|e| e.to_string()).collect::<Vec<_>>();
            if let Some(m) = meet(inst, &subset).meet() {
                report.meets_found += 1;
                if !subset.contains(m) {
                    report.nontrivial_meets += 1;
                }
                if !is_sharp_mult(inst, m) {
                    report.counterexamples.push(ClosureCounterexample {
                        kind: BoundKind::Meet,
                        subject: names(),
                        value: m.to_string(),
                    });
                }
            }
            if let Some(j) = join(inst, &subset).join() {
                report.joins_found += 1;
                if !subset.contains(j) {
                    report.nontrivial_joins += 1;
                }
                if !is_sharp_mult(inst, j) {
                    report.counterexamples.push(ClosureCounterexample {
                        kind: BoundKind::Join,
                        subject: names(),
                        value: j.to_string(),
                    });
                }
            }
        }
    }
    report
}
