use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num::Signed;

use crate::error::{Error, Result};
use crate::exact::{rat, RatVector, Rational};

/// A signed subset `(X⁺, X⁻)` of the ground set `{0, …, m-1}`.
///
/// Elements are stored zero-based; every textual form is one-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedSet {
    ground_size: usize,
    positive: Vec<usize>,
    negative: Vec<usize>,
}

impl SignedSet {
    pub fn new(ground_size: usize, mut positive: Vec<usize>, mut negative: Vec<usize>) -> Result<Self> {
        positive.sort_unstable();
        positive.dedup();
        negative.sort_unstable();
        negative.dedup();
        if let Some(&e) = positive.iter().chain(&negative).find(|&&e| e >= ground_size) {
            return Err(Error::OutOfRange(format!(
                "element {} outside ground set of size {ground_size}",
                e + 1
            )));
        }
        if let Some(e) = positive.iter().find(|e| negative.binary_search(e).is_ok()) {
            return Err(Error::InvalidLabel(format!("element {} is both positive and negative", e + 1)));
        }
        Ok(Self { ground_size, positive, negative })
    }

    pub fn empty(ground_size: usize) -> Self {
        Self { ground_size, positive: Vec::new(), negative: Vec::new() }
    }

    /// Signed support of a vector.
    pub fn from_vector(v: &[Rational]) -> Self {
        let positive = (0..v.len()).filter(|&i| v[i].is_positive()).collect();
        let negative = (0..v.len()).filter(|&i| v[i].is_negative()).collect();
        Self { ground_size: v.len(), positive, negative }
    }

    /// From a sign pattern with entries in `{-1, 0, 1}`.
    pub fn from_signs(signs: &[i8]) -> Self {
        let positive = (0..signs.len()).filter(|&i| signs[i] > 0).collect();
        let negative = (0..signs.len()).filter(|&i| signs[i] < 0).collect();
        Self { ground_size: signs.len(), positive, negative }
    }

    /// Parses `"(+,-,0)"` or `"+-0"`.
    pub fn parse_signs(text: &str) -> Result<Self> {
        let signs = text
            .chars()
            .filter(|c| !matches!(c, '(' | ')' | ',' | ' '))
            .map(|c| match c {
                '+' => Ok(1),
                '-' | '\u{2212}' => Ok(-1),
                '0' => Ok(0),
                other => Err(Error::Parse(format!("bad sign character {other:?}"))),
            })
            .collect::<Result<Vec<i8>>>()?;
        Ok(Self::from_signs(&signs))
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn positive(&self) -> &[usize] {
        &self.positive
    }

    pub fn negative(&self) -> &[usize] {
        &self.negative
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty() && self.negative.is_empty()
    }

    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.positive.iter().chain(&self.negative).copied().collect();
        s.sort_unstable();
        s
    }

    pub fn sign(&self, e: usize) -> i8 {
        if self.positive.binary_search(&e).is_ok() {
            1
        } else if self.negative.binary_search(&e).is_ok() {
            -1
        } else {
            0
        }
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.ground_size).map(|e| self.sign(e)).collect()
    }

    pub fn negated(&self) -> Self {
        Self {
            ground_size: self.ground_size,
            positive: self.negative.clone(),
            negative: self.positive.clone(),
        }
    }

    /// The member of `{X, -X}` whose smallest support element is positive.
    pub fn canonical(&self) -> Self {
        match (self.positive.first(), self.negative.first()) {
            (Some(p), Some(n)) if n < p => self.negated(),
            (None, Some(_)) => self.negated(),
            _ => self.clone(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }

    /// Signed incidence vector with entries in `{-1, 0, 1}`.
    pub fn incidence_vector(&self) -> RatVector {
        self.signs().into_iter().map(|s| rat(s as i64)).collect()
    }

    /// Swaps the sign of every element of `flip`.
    pub fn reoriented(&self, flip: &BTreeSet<usize>) -> Self {
        let signs: Vec<i8> = self
            .signs()
            .into_iter()
            .enumerate()
            .map(|(e, s)| if flip.contains(&e) { -s } else { s })
            .collect();
        Self::from_signs(&signs)
    }

    /// Re-indexes into a larger ground set, shifting every element by `offset`.
    pub fn embedded(&self, offset: usize, ground_size: usize) -> Self {
        assert!(offset + self.ground_size <= ground_size);
        Self {
            ground_size,
            positive: self.positive.iter().map(|e| e + offset).collect(),
            negative: self.negative.iter().map(|e| e + offset).collect(),
        }
    }

    /// Drops element `e` from the ground set, shifting later elements down.
    /// `e` must not be in the support.
    pub fn deleting(&self, e: usize) -> Self {
        assert_eq!(self.sign(e), 0, "cannot delete a support element");
        let shift = |x: &usize| if *x > e { x - 1 } else { *x };
        Self {
            ground_size: self.ground_size - 1,
            positive: self.positive.iter().map(shift).collect(),
            negative: self.negative.iter().map(shift).collect(),
        }
    }

    /// `"(+,-,0)"`
    pub fn sign_string(&self) -> String {
        let cells: Vec<&str> = self
            .signs()
            .into_iter()
            .map(|s| match s {
                1 => "+",
                -1 => "-",
                _ => "0",
            })
            .collect();
        format!("({})", cells.join(","))
    }

    /// `"(134|2)"`; elements are comma separated once the ground set has
    /// two-digit labels.
    pub fn set_string(&self) -> String {
        let sep = if self.ground_size > 9 { "," } else { "" };
        let join = |v: &[usize]| v.iter().map(|e| (e + 1).to_string()).collect::<Vec<_>>().join(sep);
        format!("({}|{})", join(&self.positive), join(&self.negative))
    }

    fn order_key(&self) -> (Vec<usize>, Vec<usize>) {
        (self.support(), self.positive.clone())
    }
}

impl fmt::Display for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.sign_string())
    }
}

impl Ord for SignedSet {
    /// Pairs sort together: by the canonical member's support, then the
    /// canonical member before its negation.
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.canonical();
        let b = other.canonical();
        a.order_key()
            .cmp(&b.order_key())
            .then_with(|| (!self.is_canonical()).cmp(&!other.is_canonical()))
            .then_with(|| self.ground_size.cmp(&other.ground_size))
    }
}

impl PartialOrd for SignedSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A deduplicated, deterministically ordered family of signed sets on a
/// common ground set.
///
/// Construction does not enforce the circuit axioms so that invalid families
/// can be built and handed to [`crate::matroid::validate_circuit_axioms`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CircuitSet {
    ground_size: usize,
    circuits: Vec<SignedSet>,
}

impl CircuitSet {
    pub fn new(ground_size: usize, circuits: impl IntoIterator<Item = SignedSet>) -> Result<Self> {
        let set: BTreeSet<SignedSet> = circuits.into_iter().collect();
        if let Some(bad) = set.iter().find(|c| c.ground_size != ground_size) {
            return Err(Error::Shape(format!(
                "signed set {bad} has ground size {}, expected {ground_size}",
                bad.ground_size
            )));
        }
        Ok(Self { ground_size, circuits: set.into_iter().collect() })
    }

    /// Builds the `±` closure of the given representatives.
    pub fn from_pairs(ground_size: usize, reps: impl IntoIterator<Item = SignedSet>) -> Result<Self> {
        Self::new(ground_size, reps.into_iter().flat_map(|c| [c.negated(), c]))
    }

    pub fn empty(ground_size: usize) -> Self {
        Self { ground_size, circuits: Vec::new() }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SignedSet> {
        self.circuits.iter()
    }

    pub fn circuits(&self) -> &[SignedSet] {
        &self.circuits
    }

    pub fn contains(&self, c: &SignedSet) -> bool {
        self.circuits.binary_search(c).is_ok()
    }

    /// The canonical member of each `±` pair.
    pub fn representatives(&self) -> Vec<&SignedSet> {
        self.circuits.iter().filter(|c| c.is_canonical()).collect()
    }

    pub fn incidence_vectors(&self) -> Vec<RatVector> {
        self.circuits.iter().map(SignedSet::incidence_vector).collect()
    }

    /// Reverses the orientation of every element of `flip`.
    pub fn reorient(&self, flip: &BTreeSet<usize>) -> Result<Self> {
        if let Some(&e) = flip.iter().find(|&&e| e >= self.ground_size) {
            return Err(Error::OutOfRange(format!("element {} not in ground set", e + 1)));
        }
        Self::new(self.ground_size, self.circuits.iter().map(|c| c.reoriented(flip)))
    }

    /// Circuits of `self` on the first block and `other` on the second.
    pub fn direct_sum(&self, other: &CircuitSet) -> Self {
        let m = self.ground_size + other.ground_size;
        let left = self.circuits.iter().map(|c| c.embedded(0, m));
        let right = other.circuits.iter().map(|c| c.embedded(self.ground_size, m));
        Self::new(m, left.chain(right)).expect("embedded sets share the ground size")
    }

    /// Drops `e` (which must not occur in any support) from the ground set.
    pub fn deleting(&self, e: usize) -> Self {
        Self::new(self.ground_size - 1, self.circuits.iter().map(|c| c.deleting(e)))
            .expect("ground sizes agree")
    }

    pub fn with(&self, extra: SignedSet) -> Result<Self> {
        Self::new(self.ground_size, self.circuits.iter().cloned().chain([extra]))
    }

    pub fn without(&self, drop: &SignedSet) -> Self {
        Self {
            ground_size: self.ground_size,
            circuits: self.circuits.iter().filter(|c| *c != drop).cloned().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a CircuitSet {
    type Item = &'a SignedSet;
    type IntoIter = std::slice::Iter<'a, SignedSet>;
    fn into_iter(self) -> Self::IntoIter {
        self.circuits.iter()
    }
}
