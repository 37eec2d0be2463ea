use serde::{Deserialize, Serialize};

use super::eval::SetSemantics;
use super::maps::r_map;
use crate::calculus::{IndexedOperator, OperatorKind};
use crate::error::{Error, Result};
use crate::Nat;

/// How inverted factors are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InverseConvention {
    /// Inverted factors use the inverse map, which must exist.
    Inverses,
    /// `Y⁻¹ = Y` and `R⁻¹ = R`: the inversion flag is ignored.
    Symmetric,
}

/// A map on `arity`-tuples over `{0, …, carrier − 1}`, tabulated.
#[derive(Debug, Clone)]
struct Table {
    arity: usize,
    forward: Vec<u32>,
    inverse: Option<Vec<u32>>,
}

impl Table {
    fn build(carrier: Nat, arity: usize, f: &dyn Fn(&[Nat]) -> Vec<Nat>, name: &str) -> Result<Table> {
        let size = u32::try_from(arity)
            .ok()
            .and_then(|a| carrier.checked_pow(a))
            .filter(|&s| s <= 1 << 24)
            .ok_or_else(|| Error::InvalidCandidate(format!("{name}: carrier {carrier} is too large")))?;
        let mut forward = Vec::with_capacity(size as usize);
        let mut tuple = vec![0; arity];
        for code in 0..size {
            decode_into(code, carrier, &mut tuple);
            let image = f(&tuple);
            if image.len() != arity || image.iter().any(|&x| x >= carrier) {
                return Err(Error::InvalidCandidate(format!(
                    "{name}{tuple:?} = {image:?} leaves the carrier"
                )));
            }
            forward.push(encode(&image, carrier) as u32);
        }
        let mut inverse = vec![u32::MAX; size as usize];
        let mut bijective = true;
        for (code, &image) in forward.iter().enumerate() {
            if inverse[image as usize] != u32::MAX {
                bijective = false;
                break;
            }
            inverse[image as usize] = code as u32;
        }
        Ok(Table {
            arity,
            forward,
            inverse: bijective.then_some(inverse),
        })
    }

    fn apply(&self, carrier: Nat, op: &IndexedOperator, state: &mut [Nat]) -> Result<()> {
        let mut tuple = Vec::with_capacity(self.arity);
        for &i in &op.indices {
            let x = state[i - 1];
            if x >= carrier {
                return Err(Error::InvalidCandidate(format!("state entry {x} outside the carrier")));
            }
            tuple.push(x);
        }
        let table = if op.inverted {
            self.inverse
                .as_ref()
                .ok_or_else(|| Error::InvalidCandidate(format!("{op} needs an inverse")))?
        } else {
            &self.forward
        };
        let image = table[encode(&tuple, carrier) as usize];
        decode_into(Nat::from(image), carrier, &mut tuple);
        for (&i, &x) in op.indices.iter().zip(&tuple) {
            state[i - 1] = x;
        }
        Ok(())
    }
}

fn encode(tuple: &[Nat], carrier: Nat) -> Nat {
    tuple.iter().fold(0, |acc, &x| acc * carrier + x)
}

fn decode_into(mut code: Nat, carrier: Nat, out: &mut [Nat]) {
    for slot in out.iter_mut().rev() {
        *slot = code % carrier;
        code /= carrier;
    }
}

/// Set-level semantics for the H3 equations built from a candidate Y on a
/// finite carrier, together with an R on the same carrier.
#[derive(Debug, Clone)]
pub struct CandidateSemantics {
    carrier: Nat,
    convention: InverseConvention,
    y: Table,
    r: Table,
}

impl CandidateSemantics {
    pub fn carrier(&self) -> Nat {
        self.carrier
    }

    pub fn convention(&self) -> InverseConvention {
        self.convention
    }

    pub fn y_is_bijective(&self) -> bool {
        self.y.inverse.is_some()
    }

    pub fn r_is_bijective(&self) -> bool {
        self.r.inverse.is_some()
    }
}

/// [`r_map`] with every output entry clamped to the carrier.
pub fn clamped_r_map(carrier: Nat) -> impl Fn(&[Nat]) -> Vec<Nat> {
    move |t| {
        let top = carrier.saturating_sub(1);
        let (a, b, c) = r_map(t[0], t[1], t[2]);
        vec![a.min(top), b.min(top), c.min(top)]
    }
}

/// Tabulates a candidate `y` on `{0, …, carrier − 1}⁵` with R given by
/// [`clamped_r_map`].
pub fn register_candidate_y(
    carrier: Nat,
    y: impl Fn(&[Nat]) -> Vec<Nat>,
    convention: InverseConvention,
) -> Result<CandidateSemantics> {
    register_candidate(carrier, y, clamped_r_map(carrier), convention)
}

/// Tabulates candidate maps for Y and R. Under
/// [`InverseConvention::Inverses`] both must be bijections.
pub fn register_candidate(
    carrier: Nat,
    y: impl Fn(&[Nat]) -> Vec<Nat>,
    r: impl Fn(&[Nat]) -> Vec<Nat>,
    convention: InverseConvention,
) -> Result<CandidateSemantics> {
    if carrier == 0 {
        return Err(Error::InvalidCandidate("empty carrier".into()));
    }
    let y = Table::build(carrier, 5, &y, "Y")?;
    let r = Table::build(carrier, 3, &r, "R")?;
    if convention == InverseConvention::Inverses {
        if y.inverse.is_none() {
            return Err(Error::InvalidCandidate("Y is not a bijection of the carrier".into()));
        }
        if r.inverse.is_none() {
            return Err(Error::InvalidCandidate("R is not a bijection of the carrier".into()));
        }
    }
    Ok(CandidateSemantics {
        carrier,
        convention,
        y,
        r,
    })
}

impl SetSemantics for CandidateSemantics {
    fn apply(&self, op: &IndexedOperator, state: &mut [Nat]) -> Result<()> {
        let plain;
        let op = if self.convention == InverseConvention::Symmetric && op.inverted {
            plain = IndexedOperator {
                inverted: false,
                ..op.clone()
            };
            &plain
        } else {
            op
        };
        match op.kind {
            OperatorKind::P => {
                state.swap(op.indices[0] - 1, op.indices[1] - 1);
                Ok(())
            }
            OperatorKind::Y => self.y.apply(self.carrier, op, state),
            OperatorKind::R => self.r.apply(self.carrier, op, state),
            OperatorKind::S | OperatorKind::K => Err(Error::UnsupportedOperator(op.to_string())),
        }
    }
}

type TupleMap = Box<dyn Fn(&[Nat]) -> Vec<Nat>>;

/// A candidate map given either by name or as a full table: entry `k` is
/// the image of the `k`-th tuple in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CandidateMap {
    Named(String),
    Table(Vec<Vec<Nat>>),
}

impl CandidateMap {
    fn into_fn(self, carrier: Nat, arity: usize, name: &str) -> Result<TupleMap> {
        match self {
            CandidateMap::Named(n) if n == "identity" => Ok(Box::new(|t: &[Nat]| t.to_vec())),
            CandidateMap::Named(n) if n == "clamped_r" && arity == 3 => Ok(Box::new(clamped_r_map(carrier))),
            CandidateMap::Named(n) => Err(Error::InvalidCandidate(format!("{name}: unknown map {n:?}"))),
            CandidateMap::Table(rows) => {
                let expected = carrier.checked_pow(arity as u32).unwrap_or(Nat::MAX);
                if rows.len() as Nat != expected {
                    return Err(Error::InvalidCandidate(format!(
                        "{name}: table has {} rows, expected {expected}",
                        rows.len()
                    )));
                }
                Ok(Box::new(move |t: &[Nat]| rows[encode(t, carrier) as usize].clone()))
            }
        }
    }
}

/// The JSON description of a candidate, as read from a carrier file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateSpec {
    pub carrier: Nat,
    pub convention: InverseConvention,
    pub y: CandidateMap,
    /// Defaults to [`clamped_r_map`].
    #[serde(default)]
    pub r: Option<CandidateMap>,
}

impl CandidateSpec {
    pub fn register(self) -> Result<CandidateSemantics> {
        let y = self.y.into_fn(self.carrier, 5, "Y")?;
        let r = self
            .r
            .unwrap_or(CandidateMap::Named("clamped_r".into()))
            .into_fn(self.carrier, 3, "R")?;
        register_candidate(self.carrier, y, r, self.convention)
    }
}
