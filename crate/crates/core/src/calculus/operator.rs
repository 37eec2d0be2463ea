use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OperatorKind {
    R,
    S,
    K,
    Y,
    P,
}

impl OperatorKind {
    pub fn arity(self) -> usize {
        match self {
            OperatorKind::R | OperatorKind::S => 3,
            OperatorKind::K => 4,
            OperatorKind::Y => 5,
            OperatorKind::P => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            OperatorKind::R => "R",
            OperatorKind::S => "S",
            OperatorKind::K => "K",
            OperatorKind::Y => "Y",
            OperatorKind::P => "P",
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for OperatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" => Ok(OperatorKind::R),
            "S" => Ok(OperatorKind::S),
            "K" => Ok(OperatorKind::K),
            "Y" => Ok(OperatorKind::Y),
            "P" => Ok(OperatorKind::P),
            _ => Err(Error::Parse {
                what: "operator kind",
                input: s.to_string(),
            }),
        }
    }
}

/// An operator acting on the tensor slots listed in `indices` (1-based).
/// The order of `indices` is significant: it is the order in which the
/// slot values are fed to the underlying map.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexedOperator {
    pub kind: OperatorKind,
    pub indices: Vec<usize>,
    #[serde(default)]
    pub inverted: bool,
}

impl IndexedOperator {
    pub fn new(kind: OperatorKind, indices: Vec<usize>, inverted: bool) -> Result<Self> {
        let op = IndexedOperator {
            kind,
            indices,
            inverted,
        };
        op.validate(None)?;
        Ok(op)
    }

    pub fn swap(i: usize, j: usize) -> Self {
        IndexedOperator {
            kind: OperatorKind::P,
            indices: vec![i, j],
            inverted: false,
        }
    }

    pub fn validate(&self, ambient_length: Option<usize>) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidExpression(format!("{self}: {why}")));
        if self.indices.len() != self.kind.arity() {
            return bad("wrong number of indices");
        }
        if self
            .indices
            .iter()
            .any(|&i| i == 0 || ambient_length.is_some_and(|l| i > l))
        {
            return bad("index out of range");
        }
        if self.index_set().len() != self.indices.len() {
            return bad("repeated index");
        }
        Ok(())
    }

    pub fn index_set(&self) -> BTreeSet<usize> {
        self.indices.iter().copied().collect()
    }

    pub fn is_disjoint(&self, other: &IndexedOperator) -> bool {
        self.indices.iter().all(|i| !other.indices.contains(i))
    }

    pub fn inverse(&self) -> Self {
        let mut op = self.clone();
        if op.kind != OperatorKind::P {
            op.inverted = !op.inverted;
        }
        op
    }

    /// Same operator with every slot index passed through `f`.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Self {
        IndexedOperator {
            kind: self.kind,
            indices: self.indices.iter().map(|&i| f(i)).collect(),
            inverted: self.inverted,
        }
    }

    pub(crate) fn subscript(&self, compact: bool) -> String {
        if compact && self.indices.iter().all(|&i| i < 10) {
            self.indices.iter().map(|i| i.to_string()).collect()
        } else {
            self.indices.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

/// `R124`, `K^-1[7,8,10,16]`.
impl fmt::Display for IndexedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inv = if self.inverted { "^-1" } else { "" };
        if self.indices.iter().all(|&i| i < 10) {
            write!(f, "{}{inv}{}", self.kind, self.subscript(true))
        } else {
            write!(f, "{}{inv}[{}]", self.kind, self.subscript(false))
        }
    }
}

impl FromStr for IndexedOperator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "operator",
            input: s.to_string(),
        };
        let s = s.trim();
        let kind: OperatorKind = s.get(..1).ok_or_else(err)?.parse()?;
        let mut rest = &s[1..];
        let inverted = rest.starts_with("^-1");
        if inverted {
            rest = &rest[3..];
        }
        let indices: Option<Vec<usize>> = if let Some(body) = rest.strip_prefix('[') {
            let body = body.strip_suffix(']').ok_or_else(err)?;
            body.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            rest.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        IndexedOperator::new(kind, indices.ok_or_else(err)?, inverted)
    }
}

/// A composition of operators, stored in application order: `factors[0]`
/// acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OperatorExpression {
    ambient_length: usize,
    factors: Vec<IndexedOperator>,
}

impl OperatorExpression {
    pub fn new(ambient_length: usize, factors: Vec<IndexedOperator>) -> Result<Self> {
        for f in &factors {
            f.validate(Some(ambient_length))?;
        }
        Ok(OperatorExpression {
            ambient_length,
            factors,
        })
    }

    pub fn identity(ambient_length: usize) -> Self {
        OperatorExpression {
            ambient_length,
            factors: Vec::new(),
        }
    }

    /// Builds from a product written right to left, the rightmost factor
    /// acting first.
    pub fn from_written(ambient_length: usize, mut written: Vec<IndexedOperator>) -> Result<Self> {
        written.reverse();
        Self::new(ambient_length, written)
    }

    pub fn ambient_length(&self) -> usize {
        self.ambient_length
    }

    pub fn factors(&self) -> &[IndexedOperator] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factors in product notation, leftmost acting last.
    pub fn written(&self) -> Vec<IndexedOperator> {
        self.factors.iter().rev().cloned().collect()
    }

    /// The factors in the opposite order.
    pub fn reversed(&self) -> Self {
        OperatorExpression {
            ambient_length: self.ambient_length,
            factors: self.written(),
        }
    }

    /// The inverse map: reversed order, each factor inverted.
    pub fn inverse(&self) -> Self {
        let factors = self.factors.iter().rev().map(|f| f.inverse()).collect();
        OperatorExpression {
            ambient_length: self.ambient_length,
            factors,
        }
    }

    pub fn then(mut self, other: &OperatorExpression) -> Self {
        self.factors.extend(other.factors.iter().cloned());
        self
    }

    pub fn push(&mut self, op: IndexedOperator) -> Result<()> {
        op.validate(Some(self.ambient_length))?;
        self.factors.push(op);
        Ok(())
    }

    pub fn map_factors(&self, f: impl Fn(&IndexedOperator) -> IndexedOperator) -> Self {
        OperatorExpression {
            ambient_length: self.ambient_length,
            factors: self.factors.iter().map(f).collect(),
        }
    }

    pub fn count(&self, kind: OperatorKind, inverted: bool) -> usize {
        self.factors
            .iter()
            .filter(|f| f.kind == kind && f.inverted == inverted)
            .count()
    }
}

impl fmt::Display for OperatorExpression {
    /// Written order, space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.written().iter().map(|x| x.to_string()).collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// A bijection of `1..=L`. As an action on states it moves the entry in
/// slot `i` to slot `σ(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(len: usize) -> Self {
        Permutation {
            images: (1..=len).collect(),
        }
    }

    pub fn reversal(len: usize) -> Self {
        Permutation {
            images: (1..=len).rev().collect(),
        }
    }

    pub fn transposition(len: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(len);
        p.images.swap(i - 1, j - 1);
        p
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || std::mem::replace(&mut seen[i - 1], true) {
                return Err(Error::InvalidExpression(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| i == k + 1)
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (k, &i) in self.images.iter().enumerate() {
            images[i - 1] = k + 1;
        }
        Permutation { images }
    }

    pub fn permute<T: Clone>(&self, state: &[T]) -> Vec<T> {
        let mut out = state.to_vec();
        for (k, x) in state.iter().enumerate() {
            out[self.images[k] - 1] = x.clone();
        }
        out
    }
}

/// Cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.len()];
        let mut any = false;
        for start in 1..=self.len() {
            if seen[start - 1] || self.apply(start) == start {
                continue;
            }
            any = true;
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i - 1] {
                seen[i - 1] = true;
                cycle.push(i.to_string());
                i = self.apply(i);
            }
            write!(f, "({})", cycle.join(" "))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for s in ["R124", "K^-1[7,8,10,16]", "Y[2,5,8,10,14]", "P34"] {
            let op: IndexedOperator = s.parse().unwrap();
            assert_eq!(op.to_string(), s);
        }
        assert!("R12".parse::<IndexedOperator>().is_err());
        assert!("R113".parse::<IndexedOperator>().is_err());
    }

    #[test]
    fn out_of_range_factor_is_rejected() {
        let r = IndexedOperator::new(OperatorKind::R, vec![1, 2, 7], false).unwrap();
        assert!(OperatorExpression::new(6, vec![r]).is_err());
    }

    #[test]
    fn permutation_algebra() {
        let t = Permutation::transposition(4, 1, 3);
        let u = Permutation::transposition(4, 3, 4);
        let tu = t.then(&u);
        assert_eq!(tu.images(), &[4, 2, 1, 3]);
        assert!(tu.then(&tu.inverse()).is_identity());
        assert_eq!(tu.to_string(), "(1 4 3)");
        assert_eq!(tu.permute(&['a', 'b', 'c', 'd']), vec!['c', 'b', 'd', 'a']);
        assert!(Permutation::from_images(vec![1, 1]).is_err());
        assert_eq!(Permutation::reversal(3).images(), &[3, 2, 1]);
    }

    #[test]
    fn written_order_is_reversed_application_order() {
        let ops: Vec<IndexedOperator> = ["R124", "R135"].iter().map(|s| s.parse().unwrap()).collect();
        let e = OperatorExpression::from_written(6, ops.clone()).unwrap();
        assert_eq!(e.factors()[0], ops[1]);
        assert_eq!(e.written(), ops);
        assert_eq!(e.to_string(), "R124 R135");
    }
}
