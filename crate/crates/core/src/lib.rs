//! Reduced words of finite Coxeter groups, the operator calculus attached to
//! braid moves, set-theoretical solutions of tetrahedron-type equations and a
//! checker for the decomposition of the F4 equation.

pub mod calculus;
pub mod combinatorial;
pub mod coxeter;
pub mod decomposition;
pub mod error;
pub mod fixtures;
pub mod scalar;

pub use coxeter::{CoxeterType, MoveLabel, RexGraph, Word};
pub use error::{Error, Result};
pub use scalar::{CoxeterScalar, QuadraticSurd};

/// Root-system geometry over exact quadratic surds.
pub type ExactRootSystem = coxeter::RootSystem<QuadraticSurd>;
/// Root-system geometry in double precision.
pub type FloatRootSystem = coxeter::RootSystem<f64>;
/// Entries of the states the set-theoretical maps act on.
pub type Nat = u64;
