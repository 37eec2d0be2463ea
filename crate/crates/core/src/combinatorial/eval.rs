use super::maps::{k_map, r_map};
use crate::calculus::{IndexedOperator, OperatorExpression, OperatorKind};
use crate::error::{Error, Result};
use crate::Nat;

/// Set-level meaning of the operator symbols.
pub trait SetSemantics: Sync {
    /// Applies `op` to `state` in place. Indices are 1-based and already
    /// checked against the state length.
    fn apply(&self, op: &IndexedOperator, state: &mut [Nat]) -> Result<()>;
}

/// R and S act by [`r_map`], K by [`k_map`], each read at the listed slots
/// and written back to them; all three are involutions so the inversion
/// flag is ignored. Y has no set-level map here.
#[derive(Debug, Clone, Copy, Default)]
pub struct Combinatorial;

impl SetSemantics for Combinatorial {
    fn apply(&self, op: &IndexedOperator, state: &mut [Nat]) -> Result<()> {
        let ix = &op.indices;
        match op.kind {
            OperatorKind::P => state.swap(ix[0] - 1, ix[1] - 1),
            OperatorKind::R | OperatorKind::S => {
                let (i, j, k) = (ix[0] - 1, ix[1] - 1, ix[2] - 1);
                (state[i], state[j], state[k]) = r_map(state[i], state[j], state[k]);
            }
            // listed order covers both orientations: a descending K is the
            // ascending one conjugated by the two swaps that reverse it
            OperatorKind::K => {
                let (i, j, k, l) = (ix[0] - 1, ix[1] - 1, ix[2] - 1, ix[3] - 1);
                (state[i], state[j], state[k], state[l]) = k_map(state[i], state[j], state[k], state[l]);
            }
            OperatorKind::Y => return Err(Error::UnsupportedOperator(op.to_string())),
        }
        Ok(())
    }
}

fn check_len(expected: usize, state: &[Nat]) -> Result<()> {
    if state.len() != expected {
        return Err(Error::StateLength {
            expected,
            got: state.len(),
        });
    }
    Ok(())
}

/// One operator under the combinatorial maps.
pub fn apply_operator(op: &IndexedOperator, state: &[Nat]) -> Result<Vec<Nat>> {
    op.validate(Some(state.len()))?;
    let mut out = state.to_vec();
    Combinatorial.apply(op, &mut out)?;
    Ok(out)
}

/// Folds `expr` over `state` in application order.
pub fn eval_expression<S: SetSemantics + ?Sized>(
    sem: &S,
    expr: &OperatorExpression,
    state: &[Nat],
) -> Result<Vec<Nat>> {
    check_len(expr.ambient_length(), state)?;
    let mut out = state.to_vec();
    eval_in_place(sem, expr, &mut out)?;
    Ok(out)
}

pub(crate) fn eval_in_place<S: SetSemantics + ?Sized>(
    sem: &S,
    expr: &OperatorExpression,
    state: &mut [Nat],
) -> Result<()> {
    for f in expr.factors() {
        sem.apply(f, state)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(s: &str) -> IndexedOperator {
        s.parse().unwrap()
    }

    #[test]
    fn single_steps() {
        assert_eq!(
            apply_operator(&op("R456"), &[2, 1, 1, 2, 0, 2, 3, 4, 1]).unwrap(),
            [2, 1, 1, 0, 2, 0, 3, 4, 1]
        );
        assert_eq!(apply_operator(&op("P13"), &[5, 6, 7]).unwrap(), [7, 6, 5]);
        assert_eq!(
            apply_operator(&op("K9753"), &[2, 1, 1, 2, 0, 5, 3, 1, 4]).unwrap(),
            [2, 1, 3, 2, 0, 5, 1, 1, 6]
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(
            apply_operator(&op("Y12345"), &[0; 5]),
            Err(Error::UnsupportedOperator(_))
        ));
        assert!(apply_operator(&op("R456"), &[0; 5]).is_err());
        let e = OperatorExpression::identity(4);
        assert!(matches!(
            eval_expression(&Combinatorial, &e, &[0; 3]),
            Err(Error::StateLength { .. })
        ));
        assert_eq!(
            eval_expression(&Combinatorial, &e, &[1, 2, 3, 4]).unwrap(),
            [1, 2, 3, 4]
        );
    }
}
