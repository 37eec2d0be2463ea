use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::eval::{eval_in_place, SetSemantics};
use crate::calculus::Equation;
use crate::error::{Error, Result};
use crate::Nat;

/// Default budget for exhaustive runs, in operator applications.
pub const DEFAULT_MAX_APPLICATIONS: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum DomainSpec {
    /// Every state in `{0..=bound}^L`.
    Exhaustive { bound: Nat },
    /// `count` uniform states in `{0..=max}^L`.
    Sampled { count: usize, max: Nat, seed: u64 },
}

impl DomainSpec {
    fn check(&self) -> Result<()> {
        match self {
            DomainSpec::Sampled { count: 0, .. } => {
                Err(Error::InvalidExpression("sample count must be positive".into()))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: Vec<Nat>,
    pub lhs: Vec<Nat>,
    pub rhs: Vec<Nat>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub equation: String,
    pub ambient_length: usize,
    pub domain: DomainSpec,
    pub states_tested: u64,
    pub passed: bool,
    /// Sorted by input state.
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// A stable 64-bit id for the sampling stream of an equation.
fn stream_id(id: &str) -> u64 {
    // FNV-1a
    id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3)
    })
}

/// The sampled states for `id`: a ChaCha8 generator seeded with `seed` on
/// the stream derived from `id`, so different equations with the same seed
/// see independent states.
pub fn sample_states(id: &str, len: usize, count: usize, max: Nat, seed: u64) -> Vec<Vec<Nat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream_id(id));
    (0..count)
        .map(|_| (0..len).map(|_| rng.gen_range(0..=max)).collect())
        .collect()
}

fn check_state<S: SetSemantics>(sem: &S, eq: &Equation, input: Vec<Nat>) -> Result<Option<Failure>> {
    let mut lhs = input.clone();
    eval_in_place(sem, &eq.lhs, &mut lhs)?;
    let mut rhs = input.clone();
    eval_in_place(sem, &eq.rhs, &mut rhs)?;
    Ok((lhs != rhs).then_some(Failure { input, lhs, rhs }))
}

fn decode(mut index: u64, base: u64, len: usize) -> Vec<Nat> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = index % base;
        index /= base;
    }
    out
}

/// Compares both sides of `eq` on every state of `domain`.
///
/// Exhaustive runs are refused with [`Error::DomainTooLarge`] when they
/// would exceed `max_applications` operator applications.
pub fn verify_equation<S: SetSemantics>(
    id: &str,
    eq: &Equation,
    domain: &DomainSpec,
    sem: &S,
    max_applications: u64,
) -> Result<VerificationReport> {
    domain.check()?;
    let started = Instant::now();
    let len = eq.ambient_length();
    // surface unsupported operators before fanning out
    check_state(sem, eq, vec![0; len])?;

    let mut failures: Vec<Failure> = match *domain {
        DomainSpec::Exhaustive { bound } => {
            let base = bound
                .checked_add(1)
                .ok_or_else(|| Error::DomainTooLarge(format!("bound {bound}")))?;
            let total = u32::try_from(len)
                .ok()
                .and_then(|l| base.checked_pow(l))
                .ok_or_else(|| Error::DomainTooLarge(format!("{base}^{len} states")))?;
            let per_state = (eq.lhs.len() + eq.rhs.len()).max(1) as u64;
            if total.saturating_mul(per_state) > max_applications {
                return Err(Error::DomainTooLarge(format!(
                    "{base}^{len} = {total} states × {per_state} operators exceeds {max_applications}; use sampled mode"
                )));
            }
            let found: Result<Vec<Option<Failure>>> = (0..total)
                .into_par_iter()
                .map(|n| check_state(sem, eq, decode(n, base, len)))
                .collect();
            found?.into_iter().flatten().collect()
        }
        DomainSpec::Sampled { count, max, seed } => {
            let states = sample_states(id, len, count, max, seed);
            let found: Result<Vec<Option<Failure>>> = states.into_par_iter().map(|s| check_state(sem, eq, s)).collect();
            found?.into_iter().flatten().collect()
        }
    };
    failures.sort_by(|a, b| a.input.cmp(&b.input));
    let states_tested = match *domain {
        DomainSpec::Exhaustive { bound } => (bound + 1).pow(len as u32),
        DomainSpec::Sampled { count, .. } => count as u64,
    };
    Ok(VerificationReport {
        equation: id.to_string(),
        ambient_length: len,
        domain: domain.clone(),
        states_tested,
        passed: failures.is_empty(),
        failures,
        elapsed: started.elapsed(),
    })
}
