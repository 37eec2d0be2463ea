use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::eval::{Combinatorial, SetSemantics};
use crate::calculus::{Equation, IndexedOperator};
use crate::error::{Error, Result};
use crate::fixtures::EquationFixture;
use crate::Nat;

/// Which 3D reflection equation a chain runs through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    B3,
    C3,
}

impl Family {
    pub fn equation(self) -> Result<Equation> {
        match self {
            Family::B3 => EquationFixture::B3Reflection.load(),
            Family::C3 => EquationFixture::C3Reflection.load(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::B3 => "B3",
            Family::C3 => "C3",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "B" | "B3" => Ok(Family::B3),
            "C" | "C3" => Ok(Family::C3),
            _ => Err(Error::Parse {
                what: "family",
                input: s.to_string(),
            }),
        }
    }
}

/// A side of the equation applied one factor at a time; `states` has one
/// more entry than `operators`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub operators: Vec<IndexedOperator>,
    pub states: Vec<Vec<Nat>>,
}

fn chain(factors: &[IndexedOperator], input: &[Nat]) -> Result<Chain> {
    let mut states = vec![input.to_vec()];
    let mut cur = input.to_vec();
    for op in factors {
        Combinatorial.apply(op, &mut cur)?;
        states.push(cur.clone());
    }
    Ok(Chain {
        operators: factors.to_vec(),
        states,
    })
}

/// Both sides of the B3 or C3 reflection equation applied to `input`, with
/// every intermediate state.
pub fn reflection_chains(family: Family, input: &[Nat]) -> Result<(Chain, Chain)> {
    if input.len() != 9 {
        return Err(Error::StateLength {
            expected: 9,
            got: input.len(),
        });
    }
    let eq = family.equation()?;
    Ok((chain(eq.lhs.factors(), input)?, chain(eq.rhs.factors(), input)?))
}

/// Parses `211202341` or `2,1,1,2,0,2,3,4,1`.
pub fn parse_state(s: &str) -> Result<Vec<Nat>> {
    let err = || Error::Parse {
        what: "state",
        input: s.to_string(),
    };
    let s = s.trim();
    let out: Option<Vec<Nat>> = if s.contains([',', ' ']) {
        s.split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().ok())
            .collect()
    } else {
        s.chars().map(|c| c.to_digit(10).map(Nat::from)).collect()
    };
    out.filter(|v| !v.is_empty()).ok_or_else(err)
}

/// Digits run together when every entry is below 10, comma separated
/// otherwise.
pub fn format_state(state: &[Nat]) -> String {
    if state.iter().all(|&x| x < 10) {
        state.iter().map(|x| x.to_string()).collect()
    } else {
        state.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Two columns, states on alternate lines with the operator applied
/// between them.
pub fn render_chains(family: Family, left: &Chain, right: &Chain) -> String {
    let rows = left.states.len().max(right.states.len());
    let cell = |c: &Chain, row: usize| {
        c.states
            .get(row)
            .map(|s| format!("({})", format_state(s)))
            .unwrap_or_default()
    };
    let op = |c: &Chain, row: usize| c.operators.get(row).map(|o| format!("  {o}")).unwrap_or_default();
    let width = (0..rows)
        .map(|r| cell(left, r).len().max(op(left, r).len()))
        .max()
        .unwrap_or(0)
        + 4;
    let mut out = format!("{family}\n");
    for row in 0..rows {
        out.push_str(&format!("{:<width$}{}\n", cell(left, row), cell(right, row)));
        if row + 1 < rows {
            out.push_str(&format!("{:<width$}{}\n", op(left, row), op(right, row)));
        }
    }
    out
}
