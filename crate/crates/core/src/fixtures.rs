//! Transcribed equations, traces and worked examples shipped with the crate.

use serde::Deserialize;

use crate::calculus::{Equation, MoveTrace, OperatorAssignment, OperatorKind, TraceStep};
use crate::coxeter::{CoxeterType, Word};
use crate::error::{Error, Result};

pub const A3_TETRAHEDRON: &str = include_str!("../fixtures/a3_tetrahedron.json");
pub const C3_REFLECTION: &str = include_str!("../fixtures/c3_reflection.json");
pub const B3_REFLECTION: &str = include_str!("../fixtures/b3_reflection.json");
pub const F4_EQUATION: &str = include_str!("../fixtures/f4_equation.json");
pub const H3_EQUATION: &str = include_str!("../fixtures/h3_equation.json");
pub const H3_SYMMETRIC: &str = include_str!("../fixtures/h3_symmetric.json");
pub const F4_TRACE: &str = include_str!("../fixtures/f4_trace.json");
pub const H3_TRACE: &str = include_str!("../fixtures/h3_trace.json");
pub const F4_PROOF: &str = include_str!("../fixtures/f4_proof.json");
pub const WORKED_CHAINS: &str = include_str!("../fixtures/worked_chains.json");

/// The transcribed equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EquationFixture {
    Tetrahedron,
    C3Reflection,
    B3Reflection,
    F4,
    H3,
    H3Symmetric,
}

impl EquationFixture {
    pub const ALL: [EquationFixture; 6] = [
        EquationFixture::Tetrahedron,
        EquationFixture::C3Reflection,
        EquationFixture::B3Reflection,
        EquationFixture::F4,
        EquationFixture::H3,
        EquationFixture::H3Symmetric,
    ];

    pub fn id(self) -> &'static str {
        match self {
            EquationFixture::Tetrahedron => "tetra",
            EquationFixture::C3Reflection => "c3",
            EquationFixture::B3Reflection => "b3",
            EquationFixture::F4 => "f4",
            EquationFixture::H3 => "h3",
            EquationFixture::H3Symmetric => "h3-sym",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.id() == id)
    }

    pub fn source(self) -> &'static str {
        match self {
            EquationFixture::Tetrahedron => A3_TETRAHEDRON,
            EquationFixture::C3Reflection => C3_REFLECTION,
            EquationFixture::B3Reflection => B3_REFLECTION,
            EquationFixture::F4 => F4_EQUATION,
            EquationFixture::H3 => H3_EQUATION,
            EquationFixture::H3Symmetric => H3_SYMMETRIC,
        }
    }

    pub fn load(self) -> Result<Equation> {
        load_equation(self.source())
    }

    /// The transcribed equation for a type, for cross-checking derivations.
    pub fn for_type(ty: CoxeterType) -> Option<Self> {
        match ty {
            CoxeterType::A3 => Some(EquationFixture::Tetrahedron),
            CoxeterType::C3 => Some(EquationFixture::C3Reflection),
            CoxeterType::B3 => Some(EquationFixture::B3Reflection),
            CoxeterType::F4 => Some(EquationFixture::F4),
            CoxeterType::H3 => Some(EquationFixture::H3),
            CoxeterType::A2 | CoxeterType::H2 => None,
        }
    }
}

pub fn load_equation(json: &str) -> Result<Equation> {
    let eq: Equation = serde_json::from_str(json)?;
    if eq.lhs.is_empty() || eq.rhs.is_empty() {
        return Err(Error::Fixture("equation with an empty side".into()));
    }
    Ok(eq)
}

#[derive(Deserialize)]
struct TraceFile {
    #[serde(rename = "type")]
    ty: CoxeterType,
    start: Word,
    steps: Vec<TraceStep>,
}

fn core_of(op: &str) -> Option<Option<OperatorKind>> {
    match op {
        "P" => Some(None),
        "Phi" => Some(Some(OperatorKind::R)),
        "Upsilon" => Some(Some(OperatorKind::S)),
        "Psi" => Some(Some(OperatorKind::K)),
        "Omega" => Some(Some(OperatorKind::Y)),
        _ => None,
    }
}

/// Loads a printed trace. Each step's window has to carry a relation of the
/// right width, and the printed operator and inversion have to agree with
/// what the standard assignment attaches to that move.
pub fn load_trace(json: &str) -> Result<MoveTrace> {
    let file: TraceFile = serde_json::from_str(json)?;
    let positions: Vec<usize> = file
        .steps
        .iter()
        .map(|s| s.window.first().copied().unwrap_or(0))
        .collect();
    let trace = MoveTrace::from_positions(file.ty, file.start, &positions)?;
    let assignment = OperatorAssignment::standard(file.ty);
    for (n, (step, mv)) in file.steps.iter().zip(trace.steps()).enumerate() {
        let bad = |why: String| Err(Error::Fixture(format!("trace step {}: {why}", n + 1)));
        let expected_window: Vec<usize> = mv.slots().collect();
        if step.window != expected_window {
            return bad(format!(
                "window {:?} but the relation covers {:?}",
                step.window, expected_window
            ));
        }
        let Some(core) = core_of(&step.op) else {
            return bad(format!("unknown operator {:?}", step.op));
        };
        let actual = match mv.width {
            2 => None,
            _ => {
                let att = assignment
                    .attachment(mv.letters.0, mv.letters.1)
                    .ok_or(Error::Unassigned {
                        ty: file.ty,
                        a: mv.letters.0,
                        b: mv.letters.1,
                    })?;
                if step.inverted != att.is_inverse_for(mv) {
                    return bad(format!("{} printed with the wrong inversion", step.op));
                }
                Some(att.core)
            }
        };
        if core != actual {
            return bad(format!("{} does not match the relation {:?}", step.op, mv.letters));
        }
    }
    Ok(trace)
}

pub fn f4_trace() -> Result<MoveTrace> {
    load_trace(F4_TRACE)
}

pub fn h3_trace() -> Result<MoveTrace> {
    load_trace(H3_TRACE)
}

/// The trace an equation of type `ty` is derived from: the shipped traces
/// for F4 and H3, the BFS-shortest route from the longest word to its
/// opposite otherwise.
pub fn builtin_trace(ty: CoxeterType) -> Result<MoveTrace> {
    match ty {
        CoxeterType::F4 => f4_trace(),
        CoxeterType::H3 => h3_trace(),
        _ => MoveTrace::canonical(ty),
    }
}

/// Expected intermediate states of the worked set-level examples, as
/// 9-digit strings.
#[derive(Debug, Clone, Deserialize)]
pub struct WorkedChainsFixture {
    pub input: String,
    #[serde(rename = "C")]
    pub c: ChainColumns,
    #[serde(rename = "B")]
    pub b: ChainColumns,
}

#[derive(Debug, Clone, Deserialize)]
pub struct ChainColumns {
    pub left: Vec<String>,
    pub right: Vec<String>,
}

pub fn worked_chains() -> Result<WorkedChainsFixture> {
    Ok(serde_json::from_str(WORKED_CHAINS)?)
}
