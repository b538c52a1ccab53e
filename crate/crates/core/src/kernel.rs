//! Generic effect-algebra interface and exhaustive axiom verifiers.
//!
//! The verifiers only see an [`AlgebraInstance`]: a finite carrier, the
//! constants, a partial ⊕ and a total ∘. Quantifiers range over the carrier;
//! intermediate values may leave it. For an E₀ fragment this means the
//! "for each c ∈ E" of SEA4 is approximated by "for each c in the fragment".

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

/// How the carrier relates to the algebra it stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    /// The carrier is the whole quantification domain.
    Exhaustive,
    /// The carrier is a sample; operations may leave it.
    Sampled,
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckMode::Exhaustive => "exhaustive",
            CheckMode::Sampled => "sampled",
        })
    }
}

/// A finite (fragment of an) effect algebra with a sequential product.
pub trait AlgebraInstance: Sync {
    type Elem: Clone + Eq + Hash + fmt::Display + Send + Sync;

    fn label(&self) -> String;
    fn mode(&self) -> CheckMode;
    fn carrier(&self) -> &[Self::Elem];
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn oplus(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
    fn circ(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// `a ≤ b`, by default searched over the carrier: some `c` with `a ⊕ c = b`.
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.carrier()
            .iter()
            .any(|c| self.oplus(a, c).as_ref() == Some(b))
    }

    /// The complement `a′`, by default the unique carrier `b` with `a ⊕ b = 1`.
    fn orthosupplement(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let one = self.one();
        let mut found = self
            .carrier()
            .iter()
            .filter(|b| self.oplus(a, b).as_ref() == Some(&one));
        match (found.next(), found.next()) {
            (Some(b), None) => Some(b.clone()),
            _ => None,
        }
    }
}

/// Axiom families checked by [`verify_ea`] and [`verify_sea`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Axiom {
    EA1,
    EA2,
    EA3,
    EA4,
    SEA1,
    SEA2,
    SEA3,
    SEA4,
    SEA5,
}

impl Axiom {
    pub const EFFECT: [Axiom; 4] = [Axiom::EA1, Axiom::EA2, Axiom::EA3, Axiom::EA4];
    pub const SEQUENTIAL: [Axiom; 5] = [
        Axiom::SEA1,
        Axiom::SEA2,
        Axiom::SEA3,
        Axiom::SEA4,
        Axiom::SEA5,
    ];
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl std::str::FromStr for Axiom {
    type Err = String;

    fn from_str(s: &str) -> Result<Axiom, String> {
        Axiom::EFFECT
            .iter()
            .chain(Axiom::SEQUENTIAL.iter())
            .find(|a| a.to_string() == s)
            .copied()
            .ok_or_else(|| format!("unknown axiom '{s}'"))
    }
}

/// A failed axiom instance. Elements are stored as renderings so reports are
/// stable across runs; [`Violation::replays`] maps them back.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witnesses: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Violation {
    /// Re-evaluates the witnesses through `instance` and confirms the same
    /// mismatch is produced.
    pub fn replays<I: AlgebraInstance>(&self, instance: &I) -> bool {
        let by_name: HashMap<String, &I::Elem> = instance
            .carrier()
            .iter()
            .map(|e| (e.to_string(), e))
            .collect();
        let Some(w): Option<Vec<&I::Elem>> = self
            .witnesses
            .iter()
            .map(|s| by_name.get(s).copied())
            .collect()
        else {
            return false;
        };
        let probe = Probe::new(instance);
        let found = match (self.axiom, w.as_slice()) {
            (Axiom::EA1, [a, b]) => probe.ea1(a, b),
            (Axiom::EA2, [a, b, c]) => probe.ea2(a, b, c),
            (Axiom::EA3, [a]) => probe.ea3(a),
            (Axiom::EA4, [a]) => probe.ea4(a),
            (Axiom::SEA1, [a, b, c]) => probe.sea1(a, b, c),
            (Axiom::SEA2, [a]) => probe.sea2(a),
            (Axiom::SEA3, [a, b]) => probe.sea3(a, b),
            (Axiom::SEA4, [a, b]) => probe.sea4_complement(a, b),
            (Axiom::SEA4, [a, b, c]) => probe.sea4_assoc(a, b, c),
            (Axiom::SEA5, [c, a, b]) => probe.sea5(c, a, b),
            _ => return false,
        };
        found.iter().any(|(l, r)| *l == self.lhs && *r == self.rhs)
    }
}

/// Outcome of one verifier run, serialized with stable field names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub instance: String,
    pub mode: CheckMode,
    pub carrier_size: usize,
    pub axiom_families_checked: Vec<Axiom>,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("instance: {}\n", self.instance));
        out.push_str(&format!("mode: {}\n", self.mode));
        out.push_str(&format!("carrier size: {}\n", self.carrier_size));
        let families: Vec<String> = self
            .axiom_families_checked
            .iter()
            .map(|a| a.to_string())
            .collect();
        out.push_str(&format!("axiom families: {}\n", families.join(" ")));
        out.push_str("quantifiers range over the carrier only\n");
        for v in &self.violations {
            out.push_str(&format!(
                "{} [{}]: {} != {}\n",
                v.axiom,
                v.witnesses.join(", "),
                v.lhs,
                v.rhs
            ));
        }
        out.push_str(&format!("{} violations\n", self.violations.len()));
        out
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Split the outer quantifier across rayon workers.
    pub parallel: bool,
    /// Stop scanning once any violation is found.
    pub early_stop: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            parallel: true,
            early_stop: false,
        }
    }
}

impl VerifyOptions {
    pub fn serial() -> Self {
        VerifyOptions {
            parallel: false,
            early_stop: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("carrier is empty")]
    EmptyCarrier,
    #[error("zero is not in the carrier")]
    ZeroMissing,
    #[error("one is not in the carrier")]
    OneMissing,
    #[error("zero and one coincide")]
    ZeroIsOne,
    #[error("not an effect algebra ({} violations); sequential axioms not checked", .0.violations.len())]
    NotEffectAlgebra(Box<VerifyReport>),
}

fn render_opt<E: fmt::Display>(value: &Option<E>) -> String {
    match value {
        Some(v) => v.to_string(),
        None => "undefined".to_string(),
    }
}

type Mismatch = (String, String);

/// Per-tuple axiom evaluation shared by the scanners and by replay.
struct Probe<'a, I: AlgebraInstance> {
    inst: &'a I,
    zero: I::Elem,
    one: I::Elem,
}

impl<'a, I: AlgebraInstance> Probe<'a, I> {
    fn new(inst: &'a I) -> Self {
        Probe {
            inst,
            zero: inst.zero(),
            one: inst.one(),
        }
    }

    fn complements(&self, a: &I::Elem) -> Vec<&'a I::Elem> {
        self.inst
            .carrier()
            .iter()
            .filter(|b| self.inst.oplus(a, b).as_ref() == Some(&self.one))
            .collect()
    }

    fn ea1(&self, a: &I::Elem, b: &I::Elem) -> Vec<Mismatch> {
        let ab = self.inst.oplus(a, b);
        let ba = self.inst.oplus(b, a);
        if ab != ba {
            vec![(render_opt(&ab), render_opt(&ba))]
        } else {
            vec![]
        }
    }

    fn ea2(&self, a: &I::Elem, b: &I::Elem, c: &I::Elem) -> Vec<Mismatch> {
        let right = self.inst.oplus(b, c).and_then(|bc| self.inst.oplus(a, &bc));
        let left = self.inst.oplus(a, b).and_then(|ab| self.inst.oplus(&ab, c));
        if right != left {
            vec![(render_opt(&right), render_opt(&left))]
        } else {
            vec![]
        }
    }

    fn ea3(&self, a: &I::Elem) -> Vec<Mismatch> {
        let found = self.complements(a);
        if found.len() != 1 {
            let names: Vec<String> = found.iter().map(|b| b.to_string()).collect();
            vec![(
                format!("[{}]", names.join(", ")),
                "exactly one complement".to_string(),
            )]
        } else {
            vec![]
        }
    }

    fn ea4(&self, a: &I::Elem) -> Vec<Mismatch> {
        match self.inst.oplus(a, &self.one) {
            Some(sum) if *a != self.zero => vec![(sum.to_string(), "undefined".to_string())],
            _ => vec![],
        }
    }

    /// `b ⊥ c ⟹ a∘b ⊥ a∘c` and `a∘(b⊕c) = a∘b ⊕ a∘c`.
    fn sea1(&self, a: &I::Elem, b: &I::Elem, c: &I::Elem) -> Vec<Mismatch> {
        let Some(bc) = self.inst.oplus(b, c) else {
            return vec![];
        };
        let whole = Some(self.inst.circ(a, &bc));
        let parts = self
            .inst
            .oplus(&self.inst.circ(a, b), &self.inst.circ(a, c));
        if whole != parts {
            vec![(render_opt(&whole), render_opt(&parts))]
        } else {
            vec![]
        }
    }

    fn sea2(&self, a: &I::Elem) -> Vec<Mismatch> {
        let product = self.inst.circ(&self.one, a);
        if product != *a {
            vec![(product.to_string(), a.to_string())]
        } else {
            vec![]
        }
    }

    fn sea3(&self, a: &I::Elem, b: &I::Elem) -> Vec<Mismatch> {
        let ab = self.inst.circ(a, b);
        if ab != self.zero {
            return vec![];
        }
        let ba = self.inst.circ(b, a);
        if ab != ba {
            vec![(ab.to_string(), ba.to_string())]
        } else {
            vec![]
        }
    }

    fn sea4_complement_with(&self, a: &I::Elem, b: &I::Elem, b_comp: &I::Elem) -> Vec<Mismatch> {
        if self.inst.circ(a, b) != self.inst.circ(b, a) {
            return vec![];
        }
        let left = self.inst.circ(a, b_comp);
        let right = self.inst.circ(b_comp, a);
        if left != right {
            vec![(left.to_string(), right.to_string())]
        } else {
            vec![]
        }
    }

    fn sea4_complement(&self, a: &I::Elem, b: &I::Elem) -> Vec<Mismatch> {
        match self.complements(b).as_slice() {
            [b_comp] => self.sea4_complement_with(a, b, b_comp),
            _ => vec![],
        }
    }

    fn sea4_assoc(&self, a: &I::Elem, b: &I::Elem, c: &I::Elem) -> Vec<Mismatch> {
        let ab = self.inst.circ(a, b);
        if ab != self.inst.circ(b, a) {
            return vec![];
        }
        let right = self.inst.circ(a, &self.inst.circ(b, c));
        let left = self.inst.circ(&ab, c);
        if right != left {
            vec![(right.to_string(), left.to_string())]
        } else {
            vec![]
        }
    }

    /// `c|a` and `c|b` imply `c|(a∘b)` and, when `a ⊥ b`, `c|(a⊕b)`.
    fn sea5(&self, c: &I::Elem, a: &I::Elem, b: &I::Elem) -> Vec<Mismatch> {
        let commute = |x: &I::Elem, y: &I::Elem| self.inst.circ(x, y) == self.inst.circ(y, x);
        if !(commute(c, a) && commute(c, b)) {
            return vec![];
        }
        let mut out = vec![];
        let product = self.inst.circ(a, b);
        let (l, r) = (self.inst.circ(c, &product), self.inst.circ(&product, c));
        if l != r {
            out.push((l.to_string(), r.to_string()));
        }
        if let Some(sum) = self.inst.oplus(a, b) {
            let (l, r) = (self.inst.circ(c, &sum), self.inst.circ(&sum, c));
            if l != r {
                out.push((l.to_string(), r.to_string()));
            }
        }
        out
    }
}

fn violation<E: fmt::Display>(
    axiom: Axiom,
    witnesses: &[&E],
    mismatches: Vec<Mismatch>,
) -> Vec<Violation> {
    mismatches
        .into_iter()
        .map(|(lhs, rhs)| Violation {
            axiom,
            witnesses: witnesses.iter().map(|w| w.to_string()).collect(),
            lhs,
            rhs,
        })
        .collect()
}

/// Runs `row` for every carrier position and gathers the results.
fn scan<F>(size: usize, options: VerifyOptions, row: F) -> Vec<Violation>
where
    F: Fn(usize) -> Vec<Violation> + Sync,
{
    let stop = AtomicBool::new(false);
    let guarded = |i: usize| {
        if options.early_stop && stop.load(Ordering::Relaxed) {
            return vec![];
        }
        let found = row(i);
        if !found.is_empty() {
            stop.store(true, Ordering::Relaxed);
        }
        found
    };
    if options.parallel {
        (0..size).into_par_iter().flat_map_iter(guarded).collect()
    } else {
        (0..size).flat_map(guarded).collect()
    }
}

fn check_constants<I: AlgebraInstance>(inst: &I) -> Result<(), CheckError> {
    let carrier = inst.carrier();
    if carrier.is_empty() {
        return Err(CheckError::EmptyCarrier);
    }
    let (zero, one) = (inst.zero(), inst.one());
    if zero == one {
        return Err(CheckError::ZeroIsOne);
    }
    if !carrier.contains(&zero) {
        return Err(CheckError::ZeroMissing);
    }
    if !carrier.contains(&one) {
        return Err(CheckError::OneMissing);
    }
    Ok(())
}

fn finish<I: AlgebraInstance>(
    inst: &I,
    families: Vec<Axiom>,
    mut violations: Vec<Violation>,
) -> VerifyReport {
    violations.sort();
    VerifyReport {
        instance: inst.label(),
        mode: inst.mode(),
        carrier_size: inst.carrier().len(),
        axiom_families_checked: families,
        violations,
    }
}

fn ea_violations<I: AlgebraInstance>(inst: &I, options: VerifyOptions) -> Vec<Violation> {
    let probe = Probe::new(inst);
    let carrier = inst.carrier();
    let n = carrier.len();
    scan(n, options, |i| {
        let a = &carrier[i];
        let mut out = violation(Axiom::EA3, &[a], probe.ea3(a));
        out.extend(violation(Axiom::EA4, &[a], probe.ea4(a)));
        for b in carrier {
            out.extend(violation(Axiom::EA1, &[a, b], probe.ea1(a, b)));
            for c in carrier {
                out.extend(violation(Axiom::EA2, &[a, b, c], probe.ea2(a, b, c)));
            }
        }
        out
    })
}

/// Checks EA1–EA4 over the carrier.
pub fn verify_ea<I: AlgebraInstance>(
    inst: &I,
    options: VerifyOptions,
) -> Result<VerifyReport, CheckError> {
    check_constants(inst)?;
    Ok(finish(
        inst,
        Axiom::EFFECT.to_vec(),
        ea_violations(inst, options),
    ))
}

/// Checks EA1–EA4 and, if they hold, SEA1–SEA5 over the carrier.
///
/// Fails with [`CheckError::NotEffectAlgebra`] (carrying the EA report) when
/// the effect-algebra axioms do not hold.
pub fn verify_sea<I: AlgebraInstance>(
    inst: &I,
    options: VerifyOptions,
) -> Result<VerifyReport, CheckError> {
    let ea = verify_ea(inst, options)?;
    if !ea.is_clean() {
        return Err(CheckError::NotEffectAlgebra(Box::new(ea)));
    }
    let probe = Probe::new(inst);
    let carrier = inst.carrier();
    // EA3 held, so every element has exactly one complement in the carrier.
    let complements: Vec<&I::Elem> = carrier.iter().map(|b| probe.complements(b)[0]).collect();
    let n = carrier.len();
    let violations = scan(n, options, |i| {
        let a = &carrier[i];
        let mut out = violation(Axiom::SEA2, &[a], probe.sea2(a));
        for (j, b) in carrier.iter().enumerate() {
            out.extend(violation(Axiom::SEA3, &[a, b], probe.sea3(a, b)));
            out.extend(violation(
                Axiom::SEA4,
                &[a, b],
                probe.sea4_complement_with(a, b, complements[j]),
            ));
            for c in carrier {
                out.extend(violation(Axiom::SEA1, &[a, b, c], probe.sea1(a, b, c)));
                out.extend(violation(
                    Axiom::SEA4,
                    &[a, b, c],
                    probe.sea4_assoc(a, b, c),
                ));
                // SEA5 is stated for c | a, c | b; `a` plays the role of c here.
                out.extend(violation(Axiom::SEA5, &[a, b, c], probe.sea5(a, b, c)));
            }
        }
        out
    });
    let families = Axiom::EFFECT
        .iter()
        .chain(Axiom::SEQUENTIAL.iter())
        .copied()
        .collect();
    Ok(finish(inst, families, violations))
}
