//! Symbolic elements of the counterexample algebra E₀ and their text grammar.
//!
//! ```text
//! element := "0" | "1" | "a" nat | "b" nat | "c" set ":" nat | "d" set ":" nat
//! set     := "{" nat ("," nat)* "}"
//! nat     := nonzero decimal integer
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A positive integer subscript.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Index(u32);

impl Index {
    pub const ONE: Index = Index(1);

    /// Returns `None` for zero.
    pub fn new(value: u32) -> Option<Index> {
        (value >= 1).then_some(Index(value))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn plus(self, other: Index) -> Index {
        Index(self.0.checked_add(other.0).expect("index overflow"))
    }

    /// `self - other`, or `None` when the difference is not positive.
    pub fn minus(self, other: Index) -> Option<Index> {
        self.0.checked_sub(other.0).and_then(Index::new)
    }

    /// `self - 1`, or `None` for the index 1.
    pub fn pred(self) -> Option<Index> {
        Index::new(self.0 - 1)
    }

    /// `self + other - 1`; always positive.
    pub fn plus_pred(self, other: Index) -> Index {
        Index(self.plus(other).0 - 1)
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite nonempty set of positive integers, kept in canonical (sorted,
/// deduplicated) form so structural equality is set equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet(BTreeSet<u32>);

impl IndexSet {
    /// Fails on an empty input or a zero member.
    pub fn new<I: IntoIterator<Item = u32>>(members: I) -> Result<IndexSet, ElementError> {
        let set: BTreeSet<u32> = members.into_iter().collect();
        if set.is_empty() {
            return Err(ElementError::EmptySet);
        }
        if set.contains(&0) {
            return Err(ElementError::ZeroMember);
        }
        Ok(IndexSet(set))
    }

    fn from_nonempty(set: BTreeSet<u32>) -> Option<IndexSet> {
        (!set.is_empty()).then_some(IndexSet(set))
    }

    pub fn singleton(member: u32) -> IndexSet {
        IndexSet::new([member]).expect("positive singleton")
    }

    /// `{1..=k}`.
    pub fn initial(k: u32) -> IndexSet {
        IndexSet::new(1..=k).expect("k >= 1")
    }

    pub fn members(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max(&self) -> u32 {
        *self.0.iter().next_back().expect("nonempty")
    }

    pub fn contains(&self, member: u32) -> bool {
        self.0.contains(&member)
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_proper_subset(&self, other: &IndexSet) -> bool {
        self.0.len() < other.0.len() && self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &IndexSet) -> Option<IndexSet> {
        IndexSet::from_nonempty(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &IndexSet) -> Option<IndexSet> {
        IndexSet::from_nonempty(self.0.difference(&other.0).copied().collect())
    }

    pub fn with(&self, member: u32) -> IndexSet {
        assert!(member >= 1, "index set members must be positive");
        let mut set = self.0.clone();
        set.insert(member);
        IndexSet(set)
    }

    /// Smallest positive integer absent from the set.
    pub fn smallest_absent(&self) -> u32 {
        (1..).find(|i| !self.0.contains(i)).expect("finite set")
    }

    /// All nonempty subsets of `{1..=k}`, in canonical order.
    pub fn all_nonempty_subsets(k: u32) -> Vec<IndexSet> {
        let mut sets: Vec<IndexSet> = (1u64..(1u64 << k))
            .map(|mask| IndexSet((1..=k).filter(|i| mask & (1 << (i - 1)) != 0).collect()))
            .collect();
        sets.sort();
        sets
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// A member of E₀.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Zero,
    One,
    A(Index),
    B(Index),
    C(IndexSet, Index),
    D(IndexSet, Index),
}

impl Element {
    pub fn a(n: u32) -> Element {
        Element::A(Index::new(n).expect("positive index"))
    }

    pub fn b(n: u32) -> Element {
        Element::B(Index::new(n).expect("positive index"))
    }

    pub fn c<I: IntoIterator<Item = u32>>(set: I, n: u32) -> Element {
        Element::C(
            IndexSet::new(set).expect("nonempty set"),
            Index::new(n).expect("positive index"),
        )
    }

    pub fn d<I: IntoIterator<Item = u32>>(set: I, n: u32) -> Element {
        Element::D(
            IndexSet::new(set).expect("nonempty set"),
            Index::new(n).expect("positive index"),
        )
    }

    pub fn index(&self) -> Option<Index> {
        match self {
            Element::Zero | Element::One => None,
            Element::A(n) | Element::B(n) | Element::C(_, n) | Element::D(_, n) => Some(*n),
        }
    }

    pub fn ground_set(&self) -> Option<&IndexSet> {
        match self {
            Element::C(s, _) | Element::D(s, _) => Some(s),
            _ => None,
        }
    }

    /// Same element with its subscript increased by `by`; 0 and 1 are unchanged.
    pub fn shift_index(&self, by: u32) -> Element {
        let shift = |n: &Index| Index(n.0.checked_add(by).expect("index overflow"));
        match self {
            Element::Zero | Element::One => self.clone(),
            Element::A(n) => Element::A(shift(n)),
            Element::B(n) => Element::B(shift(n)),
            Element::C(s, n) => Element::C(s.clone(), shift(n)),
            Element::D(s, n) => Element::D(s.clone(), shift(n)),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Zero => f.write_str("0"),
            Element::One => f.write_str("1"),
            Element::A(n) => write!(f, "a{n}"),
            Element::B(n) => write!(f, "b{n}"),
            Element::C(s, n) => write!(f, "c{s}:{n}"),
            Element::D(s, n) => write!(f, "d{s}:{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElementError {
    #[error("index sets must be nonempty")]
    EmptySet,
    #[error("index set members must be positive")]
    ZeroMember,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

fn parse_error(position: usize, message: impl Into<String>) -> ElementError {
    ElementError::Parse {
        position,
        message: message.into(),
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<(), ElementError> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(parse_error(
                self.pos,
                format!("expected '{}', found '{}'", byte as char, b as char),
            )),
            None => Err(parse_error(
                self.pos,
                format!("expected '{}', found end of input", byte as char),
            )),
        }
    }

    fn nat(&mut self) -> Result<u32, ElementError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        if digits.is_empty() {
            return Err(parse_error(start, "expected a positive integer"));
        }
        if digits.starts_with('0') {
            return Err(parse_error(
                start,
                "indices are positive integers without leading zeros",
            ));
        }
        digits
            .parse()
            .map_err(|_| parse_error(start, "integer out of range"))
    }

    fn set(&mut self) -> Result<IndexSet, ElementError> {
        let start = self.pos;
        self.expect(b'{')?;
        if self.peek() == Some(b'}') {
            return Err(parse_error(start, "index sets must be nonempty"));
        }
        let mut members = BTreeSet::new();
        loop {
            let at = self.pos;
            let m = self.nat()?;
            if !members.insert(m) {
                return Err(parse_error(at, format!("duplicate member {m}")));
            }
            match self.peek() {
                Some(b',') => self.pos += 1,
                _ => break,
            }
        }
        self.expect(b'}')?;
        Ok(IndexSet(members))
    }
}

impl FromStr for Element {
    type Err = ElementError;

    fn from_str(text: &str) -> Result<Element, ElementError> {
        let mut cur = Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        };
        let head = cur.peek().ok_or_else(|| parse_error(0, "empty input"))?;
        cur.pos += 1;
        let element = match head {
            b'0' | b'1' if text.len() == 1 => {
                return Ok(if head == b'0' {
                    Element::Zero
                } else {
                    Element::One
                });
            }
            b'a' => Element::A(Index(cur.nat()?)),
            b'b' => Element::B(Index(cur.nat()?)),
            b'c' | b'd' => {
                let set = cur.set()?;
                cur.expect(b':')?;
                let n = Index(cur.nat()?);
                if head == b'c' {
                    Element::C(set, n)
                } else {
                    Element::D(set, n)
                }
            }
            _ => return Err(parse_error(0, "expected one of 0, 1, a, b, c, d")),
        };
        if cur.pos != text.len() {
            return Err(parse_error(cur.pos, "unexpected trailing input"));
        }
        Ok(element)
    }
}

impl FromStr for IndexSet {
    type Err = ElementError;

    fn from_str(text: &str) -> Result<IndexSet, ElementError> {
        let mut cur = Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        };
        let set = cur.set()?;
        if cur.pos != text.len() {
            return Err(parse_error(cur.pos, "unexpected trailing input"));
        }
        Ok(set)
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Element, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
