use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{IndexedOperator, MoveTrace, OperatorAssignment, OperatorExpression, OperatorKind, Permutation};
use crate::coxeter::CoxeterType;
use crate::error::{Error, Result};

/// Concatenation of the operators attached to each step, in application
/// order.
pub fn trace_to_expression(assignment: &OperatorAssignment, trace: &MoveTrace) -> Result<OperatorExpression> {
    let len = trace.start().len();
    let mut out = OperatorExpression::identity(len);
    for mv in trace.steps() {
        out = out.then(&assignment.move_to_operators(mv, len)?);
    }
    Ok(out)
}

/// Moves every transposition to the front of `expr`.
///
/// Returns `(core, residue)` with `expr = residue then core` as maps: the
/// residue is the product of all transpositions in their original order,
/// and each remaining factor has its indices relabelled by the
/// transpositions it was moved past (`R123 then P34 = P34 then R124`).
pub fn normalize(expr: &OperatorExpression) -> (OperatorExpression, Permutation) {
    let len = expr.ambient_length();
    // tau = composite of the swaps met so far, scanning from the back
    let mut tau: Vec<usize> = (0..=len).collect();
    let mut core = Vec::with_capacity(expr.len());
    for f in expr.factors().iter().rev() {
        if f.kind == OperatorKind::P {
            let (i, j) = (f.indices[0], f.indices[1]);
            tau.swap(i, j);
        } else {
            core.push(f.relabel(|i| tau[i]));
        }
    }
    core.reverse();
    let mut residue = Permutation::identity(len);
    for f in expr.factors().iter().filter(|f| f.kind == OperatorKind::P) {
        residue = residue.then(&Permutation::transposition(len, f.indices[0], f.indices[1]));
    }
    let core = OperatorExpression::new(len, core).expect("relabelling stays in range");
    (core, residue)
}

/// Two compositions that agree as maps. Sides are stored in application
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub ty: CoxeterType,
    pub lhs: OperatorExpression,
    pub rhs: OperatorExpression,
}

#[derive(Serialize, Deserialize)]
struct EquationRepr {
    #[serde(rename = "type")]
    ty: CoxeterType,
    ambient_length: usize,
    lhs: Vec<IndexedOperator>,
    rhs: Vec<IndexedOperator>,
}

impl Serialize for Equation {
    /// Sides are emitted in written order, leftmost factor acting last.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        EquationRepr {
            ty: self.ty,
            ambient_length: self.lhs.ambient_length(),
            lhs: self.lhs.written(),
            rhs: self.rhs.written(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Equation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = EquationRepr::deserialize(deserializer)?;
        let side = |v| OperatorExpression::from_written(repr.ambient_length, v).map_err(serde::de::Error::custom);
        Ok(Equation {
            ty: repr.ty,
            lhs: side(repr.lhs)?,
            rhs: side(repr.rhs)?,
        })
    }
}

impl Equation {
    pub fn new(ty: CoxeterType, lhs: OperatorExpression, rhs: OperatorExpression) -> Result<Self> {
        if lhs.ambient_length() != rhs.ambient_length() {
            return Err(Error::InvalidExpression("sides act on different lengths".into()));
        }
        Ok(Equation { ty, lhs, rhs })
    }

    pub fn ambient_length(&self) -> usize {
        self.lhs.ambient_length()
    }

    pub fn swapped(&self) -> Equation {
        Equation {
            ty: self.ty,
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
        }
    }

    pub fn map_factors(&self, f: impl Fn(&IndexedOperator) -> IndexedOperator + Copy) -> Equation {
        Equation {
            ty: self.ty,
            lhs: self.lhs.map_factors(f),
            rhs: self.rhs.map_factors(f),
        }
    }

    /// The form used for types whose three-index operators satisfy
    /// `R = R⁻¹ = R_kji` and `K = K⁻¹`: inversion flags dropped, three-index
    /// subscripts sorted. Four-index subscripts are left alone. H3
    /// equations are returned unchanged.
    pub fn simplified(&self) -> Equation {
        if matches!(self.ty, CoxeterType::H2 | CoxeterType::H3) {
            return self.clone();
        }
        self.map_factors(|f| {
            let mut g = f.clone();
            g.inverted = false;
            if g.indices.len() == 3 {
                g.indices.sort_unstable();
            }
            g
        })
    }

    /// The form obtained under `Y⁻¹ = Y = Y_mlkji` and `R⁻¹ = R = R_kji`:
    /// every subscript sorted and every inversion flag dropped.
    pub fn symmetric(&self) -> Equation {
        self.map_factors(|f| {
            let mut g = f.clone();
            g.inverted = false;
            g.indices.sort_unstable();
            g
        })
    }

    /// Commutation equivalence of the sides as an unordered pair.
    pub fn equivalent(&self, other: &Equation) -> Result<bool> {
        if self.ty != other.ty || self.ambient_length() != other.ambient_length() {
            return Ok(false);
        }
        let direct = commutation_equivalent(&self.lhs, &other.lhs)? && commutation_equivalent(&self.rhs, &other.rhs)?;
        Ok(
            direct
                || (commutation_equivalent(&self.lhs, &other.rhs)? && commutation_equivalent(&self.rhs, &other.lhs)?),
        )
    }
}

/// Both routes of a derivation with their normal forms.
#[derive(Debug, Clone)]
pub struct Derivation {
    pub trace: MoveTrace,
    pub mirror: MoveTrace,
    pub residue: Permutation,
    pub mirror_residue: Permutation,
    pub equation: Equation,
}

/// Derives the equation carried by `trace` and its mirror route.
///
/// Both routes run from the same reduced word to its opposite, so the two
/// normalized cores must agree; the residual permutations have to coincide
/// for that to make sense and a mismatch is reported as a convention error.
pub fn derive_equation(assignment: &OperatorAssignment, trace: &MoveTrace) -> Result<Derivation> {
    let mirror = trace.mirror()?;
    derive_from_routes(assignment, trace, &mirror)
}

pub fn derive_from_routes(
    assignment: &OperatorAssignment,
    first: &MoveTrace,
    second: &MoveTrace,
) -> Result<Derivation> {
    if first.start() != second.start() || first.end() != second.end() {
        return Err(Error::InvalidTrace("routes do not share their endpoints".into()));
    }
    let (lhs, residue) = normalize(&trace_to_expression(assignment, first)?);
    let (rhs, mirror_residue) = normalize(&trace_to_expression(assignment, second)?);
    if residue != mirror_residue {
        return Err(Error::Convention(format!(
            "residues differ: {residue} vs {mirror_residue}"
        )));
    }
    Ok(Derivation {
        trace: first.clone(),
        mirror: second.clone(),
        residue,
        mirror_residue,
        equation: Equation::new(assignment.coxeter_type(), lhs, rhs)?,
    })
}

/// Whether `b` is obtained from `a` by swapping adjacent factors with
/// disjoint indices.
///
/// Decided by comparing factor multisets and then checking that every pair
/// of factors whose relative order differs acts on disjoint slots.
pub fn commutation_equivalent(a: &OperatorExpression, b: &OperatorExpression) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    let position = |e: &OperatorExpression| -> Result<HashMap<IndexedOperator, usize>> {
        let mut map = HashMap::with_capacity(e.len());
        for (n, f) in e.factors().iter().enumerate() {
            if map.insert(f.clone(), n).is_some() {
                return Err(Error::DuplicateFactor(f.to_string()));
            }
        }
        Ok(map)
    };
    let pa = position(a)?;
    let pb = position(b)?;
    let mut order = Vec::with_capacity(a.len());
    for f in a.factors() {
        match pb.get(f) {
            Some(&n) => order.push(n),
            None => return Ok(false),
        }
    }
    debug_assert_eq!(pa.len(), order.len());
    let fa = a.factors();
    for x in 0..fa.len() {
        for y in x + 1..fa.len() {
            if order[x] > order[y] && !fa[x].is_disjoint(&fa[y]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The F4 equation for the word with letters `i ↦ 5 − i`: R and S trade
/// places and four-index subscripts are read backwards.
pub fn index_flip_f4(eq: &Equation) -> Result<Equation> {
    if eq.ty != CoxeterType::F4 {
        return Err(Error::Convention(format!(
            "index flip is defined for F4, not {}",
            eq.ty
        )));
    }
    Ok(eq.map_factors(|f| {
        let mut g = f.clone();
        match f.kind {
            OperatorKind::R => g.kind = OperatorKind::S,
            OperatorKind::S => g.kind = OperatorKind::R,
            OperatorKind::K => g.indices.reverse(),
            _ => {}
        }
        g
    }))
}
