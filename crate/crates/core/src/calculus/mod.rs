//! Operators attached to braid moves, their composition along traces and the
//! equations obtained by comparing two routes between opposite words.

mod assign;
mod derive;
mod operator;
pub mod render;
mod trace;

pub use assign::{Attachment, OperatorAssignment};
pub use derive::{
    commutation_equivalent, derive_equation, derive_from_routes, index_flip_f4, normalize, trace_to_expression,
    Derivation, Equation,
};
pub use operator::{IndexedOperator, OperatorExpression, OperatorKind, Permutation};
pub use trace::{MoveTrace, TraceStep};

use crate::coxeter::{CoxeterType, MoveLabel};
use crate::error::Result;

/// The operators attached to one move under the standard assignment.
pub fn move_to_operators(ty: CoxeterType, mv: &MoveLabel, ambient_length: usize) -> Result<OperatorExpression> {
    OperatorAssignment::standard(ty).move_to_operators(mv, ambient_length)
}

/// Derivation along `trace` with the standard assignment.
pub fn derive(trace: &MoveTrace) -> Result<Derivation> {
    derive_equation(&OperatorAssignment::standard(trace.coxeter_type()), trace)
}
