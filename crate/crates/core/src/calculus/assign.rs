use serde::{Deserialize, Serialize};

use super::{IndexedOperator, OperatorExpression, OperatorKind};
use crate::coxeter::{CoxeterType, MoveLabel};
use crate::error::{Error, Result};

/// How a braid relation of width ≥ 3 turns into operators.
///
/// The attached operator is `core · P…` (product notation) on the window,
/// where the transpositions reverse the window. It is read in the
/// non-inverted sense on moves whose source starts with `forward_from`;
/// the opposite move gets the inverse, unless `involutive` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attachment {
    pub core: OperatorKind,
    pub forward_from: u8,
    /// Core indices run down the window instead of up.
    pub descending: bool,
    /// The attached operator is its own inverse, so both directions emit the
    /// same factors.
    pub involutive: bool,
}

impl Attachment {
    pub const fn new(core: OperatorKind, forward_from: u8) -> Self {
        Attachment {
            core,
            forward_from,
            descending: false,
            involutive: false,
        }
    }

    pub const fn involutive(mut self) -> Self {
        self.involutive = true;
        self
    }

    pub const fn descending(mut self) -> Self {
        self.descending = true;
        self
    }

    /// Whether this move applies the attached operator inverted.
    pub fn is_inverse_for(&self, mv: &MoveLabel) -> bool {
        !self.involutive && mv.letters.0 != self.forward_from
    }
}

/// Operators attached to the non-commuting relations of a Coxeter type.
/// Commutations always become a single transposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorAssignment {
    ty: CoxeterType,
    entries: Vec<((u8, u8), Attachment)>,
}

impl OperatorAssignment {
    pub fn new(ty: CoxeterType, entries: Vec<((u8, u8), Attachment)>) -> Self {
        let entries = entries
            .into_iter()
            .map(|((a, b), att)| ((a.min(b), a.max(b)), att))
            .collect();
        OperatorAssignment { ty, entries }
    }

    /// The built-in assignment for `ty`.
    pub fn standard(ty: CoxeterType) -> Self {
        use OperatorKind::*;
        let phi = Attachment::new(R, 1).involutive();
        let entries = match ty {
            CoxeterType::A2 | CoxeterType::A3 => vec![((1, 2), phi), ((2, 3), phi)],
            CoxeterType::C3 => vec![((1, 2), phi), ((2, 3), Attachment::new(K, 2))],
            CoxeterType::B3 => vec![
                ((1, 2), Attachment::new(S, 1).involutive()),
                ((2, 3), Attachment::new(K, 2).descending()),
            ],
            CoxeterType::F4 => vec![
                ((1, 2), phi),
                ((2, 3), Attachment::new(K, 2)),
                ((3, 4), Attachment::new(S, 3).involutive()),
            ],
            CoxeterType::H2 => vec![((1, 2), Attachment::new(Y, 2))],
            CoxeterType::H3 => vec![((1, 2), Attachment::new(Y, 2)), ((2, 3), Attachment::new(R, 2))],
        };
        OperatorAssignment::new(ty, entries)
    }

    /// F4 with K attached to `3232 → 2323` and its indices read downwards;
    /// R and S keep their relations. Deriving along a trace with letters
    /// `i ↦ 5 - i` under this assignment gives [`super::index_flip_f4`] of
    /// the original equation.
    pub fn f4_flipped() -> Self {
        use OperatorKind::*;
        OperatorAssignment::new(
            CoxeterType::F4,
            vec![
                ((1, 2), Attachment::new(R, 1).involutive()),
                ((2, 3), Attachment::new(K, 3).descending()),
                ((3, 4), Attachment::new(S, 3).involutive()),
            ],
        )
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn attachment(&self, a: u8, b: u8) -> Option<Attachment> {
        let key = (a.min(b), a.max(b));
        self.entries.iter().find(|(k, _)| *k == key).map(|(_, att)| *att)
    }

    /// The factors, in application order, of the operator attached to `mv`
    /// acting on an ambient state of length `ambient_length`.
    pub fn move_to_operators(&self, mv: &MoveLabel, ambient_length: usize) -> Result<OperatorExpression> {
        let (a, b) = mv.letters;
        let start = mv.position;
        if start == 0 || start + mv.width - 1 > ambient_length {
            return Err(Error::InvalidTrace(format!(
                "window {mv} exceeds length {ambient_length}"
            )));
        }
        if mv.width == 2 {
            return OperatorExpression::new(ambient_length, vec![IndexedOperator::swap(start, start + 1)]);
        }
        let att = self.attachment(a, b).ok_or(Error::Unassigned { ty: self.ty, a, b })?;
        if att.core.arity() != mv.width {
            return Err(Error::Unassigned { ty: self.ty, a, b });
        }
        let end = start + mv.width - 1;
        let mut indices: Vec<usize> = (start..=end).collect();
        if att.descending {
            indices.reverse();
        }
        let swaps: Vec<IndexedOperator> = (0..mv.width / 2)
            .map(|t| IndexedOperator::swap(start + t, end - t))
            .collect();
        let inverse = att.is_inverse_for(mv);
        let core = IndexedOperator {
            kind: att.core,
            indices,
            inverted: inverse,
        };
        // core · P… in product notation applies the swaps first; the inverse
        // applies core⁻¹ first
        let factors = if inverse {
            std::iter::once(core).chain(swaps).collect()
        } else {
            swaps.into_iter().chain(std::iter::once(core)).collect()
        };
        OperatorExpression::new(ambient_length, factors)
    }
}
