//! Checker for the factorisation of the F4 equation into 3D reflection
//! equations of types B3 and C3 and commutations of disjoint factors.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::calculus::{commutation_equivalent, derive, IndexedOperator, MoveTrace, OperatorExpression, OperatorKind};
use crate::combinatorial::{sample_states, Combinatorial, Family, SetSemantics};
use crate::coxeter::{rex_graph, CoxeterType, RexOptions};
use crate::error::{Error, Result};
use crate::fixtures::{self, EquationFixture};
use crate::Nat;

pub const WINDOW: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofStage {
    /// Labels in written order.
    pub y: Vec<usize>,
    /// 1-based positions in `y`.
    pub window: Vec<usize>,
    pub family: Family,
}

impl ProofStage {
    pub fn window_start(&self) -> usize {
        self.window[0]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofScript {
    pub stages: Vec<ProofStage>,
}

impl ProofScript {
    pub fn from_json(json: &str) -> Result<Self> {
        let script: ProofScript = serde_json::from_str(json)?;
        script.validate()?;
        Ok(script)
    }

    /// Label arrays must be permutations of `1..=n` and windows must be
    /// seven consecutive positions.
    pub fn validate(&self) -> Result<()> {
        let n = self.stages.first().map_or(0, |s| s.y.len());
        for (i, stage) in self.stages.iter().enumerate() {
            let fail = |reason: String| Err(Error::ProofScript { stage: i, reason });
            let labels: BTreeSet<usize> = stage.y.iter().copied().collect();
            if stage.y.len() != n || labels.len() != n || labels.iter().next_back() != Some(&n) || labels.contains(&0) {
                return fail(format!("Y_{i} is not a permutation of 1..={n}"));
            }
            let consecutive = stage.window.len() == WINDOW
                && stage.window.windows(2).all(|p| p[1] == p[0] + 1)
                && stage.window[0] >= 1
                && stage.window[WINDOW - 1] <= n;
            if !consecutive {
                return fail(format!(
                    "window {:?} is not {WINDOW} consecutive positions",
                    stage.window
                ));
            }
        }
        Ok(())
    }

    pub fn family_counts(&self) -> (usize, usize) {
        let c3 = self.stages.iter().filter(|s| s.family == Family::C3).count();
        (c3, self.stages.len() - c3)
    }
}

pub fn load_proof_script() -> Result<ProofScript> {
    ProofScript::from_json(fixtures::F4_PROOF)
}

/// The factors of the written left side of the F4 equation, label `k`
/// being the `k`-th factor from the left, in simplified form.
#[derive(Debug, Clone)]
pub struct LabeledFactors {
    ambient_length: usize,
    factors: Vec<IndexedOperator>,
}

impl LabeledFactors {
    pub fn from_written(ambient_length: usize, factors: Vec<IndexedOperator>) -> Result<Self> {
        let sets: BTreeSet<BTreeSet<usize>> = factors.iter().map(|f| f.index_set()).collect();
        if sets.len() != factors.len() {
            return Err(Error::Fixture("two factors act on the same slots".into()));
        }
        Ok(LabeledFactors {
            ambient_length,
            factors,
        })
    }

    /// From the shipped F4 equation.
    pub fn f4() -> Result<Self> {
        let eq = EquationFixture::F4.load()?.simplified();
        Self::from_written(eq.ambient_length(), eq.lhs.written())
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn ambient_length(&self) -> usize {
        self.ambient_length
    }

    pub fn get(&self, label: usize) -> &IndexedOperator {
        &self.factors[label - 1]
    }

    pub fn operators(&self, labels: &[usize]) -> Vec<IndexedOperator> {
        labels.iter().map(|&l| self.get(l).clone()).collect()
    }

    fn expression(&self, labels: &[usize]) -> OperatorExpression {
        OperatorExpression::new(self.ambient_length, self.operators(labels)).expect("labels are valid")
    }
}

fn same_labels(x: &[usize], y: &[usize]) -> bool {
    let mut a = x.to_vec();
    let mut b = y.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

/// Whether `y` arises from `x` by commuting adjacent factors with disjoint
/// slots. Arrays holding different labels are an error.
pub fn check_stage(factors: &LabeledFactors, x: &[usize], y: &[usize]) -> Result<bool> {
    if !same_labels(x, y) {
        return Err(Error::InvalidExpression(
            "label arrays are not permutations of each other".into(),
        ));
    }
    commutation_equivalent(&factors.expression(x), &factors.expression(y))
}

/// One written side of a reflection equation together with the other side.
#[derive(Debug, Clone)]
struct Guise {
    family: Family,
    side: Vec<IndexedOperator>,
    partner: Vec<IndexedOperator>,
}

/// Every written form of the B3 and C3 reflection equations obtained by
/// deriving from each vertex of their rex graph.
#[derive(Debug, Clone)]
pub struct ReflectionLibrary {
    guises: Vec<Guise>,
}

fn canonical(op: &IndexedOperator) -> IndexedOperator {
    let mut g = op.clone();
    g.inverted = false;
    if matches!(g.kind, OperatorKind::R | OperatorKind::S) {
        g.indices.sort_unstable();
    }
    g
}

impl ReflectionLibrary {
    pub fn build() -> Result<Self> {
        let graph = rex_graph(CoxeterType::C3, &CoxeterType::C3.longest_word(), RexOptions::default())?;
        let mut guises = Vec::new();
        let mut seen = BTreeSet::new();
        for w in graph.vertices() {
            for (ty, family) in [(CoxeterType::C3, Family::C3), (CoxeterType::B3, Family::B3)] {
                let trace = MoveTrace::shortest(ty, &w, &ty.opposite_word(&w))?;
                let eq = derive(&trace)?.equation.simplified();
                let (l, r) = (eq.lhs.written(), eq.rhs.written());
                for (side, partner) in [(l.clone(), r.clone()), (r, l)] {
                    if seen.insert(side.clone()) {
                        guises.push(Guise { family, side, partner });
                    }
                }
            }
        }
        Ok(ReflectionLibrary { guises })
    }

    pub fn len(&self) -> usize {
        self.guises.len()
    }

    pub fn is_empty(&self) -> bool {
        self.guises.is_empty()
    }

    /// Matches a written 7-factor window against the library. On success
    /// returns the family and the slot renaming (reflection slot `s` goes
    /// to `renaming[s - 1]`).
    pub fn match_window(&self, window: &[IndexedOperator]) -> Option<(Family, Vec<usize>)> {
        for g in &self.guises {
            if g.side.len() != window.len() || g.side.iter().zip(window).any(|(a, b)| a.kind != b.kind) {
                continue;
            }
            let mut map = [0usize; 10];
            if extend(&g.side, window, 0, &mut map) {
                let renaming: Vec<usize> = map[1..].to_vec();
                let rename = |op: &IndexedOperator| canonical(&op.relabel(|i| renaming[i - 1]));
                let partner: Vec<IndexedOperator> = g.partner.iter().map(rename).collect();
                let reversed: Vec<IndexedOperator> = window.iter().rev().map(canonical).collect();
                let len = reversed
                    .iter()
                    .flat_map(|f| f.indices.iter())
                    .copied()
                    .max()
                    .unwrap_or(0);
                let same = commutation_equivalent(
                    &OperatorExpression::new(len, partner).ok()?,
                    &OperatorExpression::new(len, reversed).ok()?,
                );
                if same.unwrap_or(false) {
                    return Some((g.family, renaming));
                }
            }
        }
        None
    }
}

// Injective slot renaming, extended one factor at a time. Four-index
// factors must match in order; three-index ones may also match reversed.
fn extend(side: &[IndexedOperator], window: &[IndexedOperator], t: usize, map: &mut [usize; 10]) -> bool {
    if t == side.len() {
        return true;
    }
    let from = &side[t].indices;
    let to = &window[t].indices;
    let mut orders = vec![to.clone()];
    if from.len() == 3 {
        orders.push(to.iter().rev().copied().collect());
    }
    for target in orders {
        let saved = *map;
        let ok = from.iter().zip(&target).all(|(&s, &d)| {
            if map[s] == 0 {
                if map[1..].contains(&d) {
                    return false;
                }
                map[s] = d;
                true
            } else {
                map[s] == d
            }
        });
        if ok && extend(side, window, t + 1, map) {
            return true;
        }
        *map = saved;
    }
    false
}

/// Checks the window of one stage. Returns the family it matches and
/// `X_{i+1}`, the label array with the window reversed.
pub fn check_reflection_window(
    library: &ReflectionLibrary,
    factors: &LabeledFactors,
    y: &[usize],
    window: &[usize],
) -> Result<(Family, Vec<usize>)> {
    if window.len() != WINDOW
        || window.windows(2).any(|p| p[1] != p[0] + 1)
        || window[0] == 0
        || window[WINDOW - 1] > y.len()
    {
        return Err(Error::InvalidExpression(format!(
            "{window:?} is not {WINDOW} consecutive positions"
        )));
    }
    let range = window[0] - 1..window[WINDOW - 1];
    let ops = factors.operators(&y[range.clone()]);
    let (family, _) = library
        .match_window(&ops)
        .ok_or_else(|| Error::InvalidExpression("window matches no side of a reflection equation".into()))?;
    let mut next = y.to_vec();
    next[range].reverse();
    Ok((family, next))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemanticCheck {
    pub states: usize,
    pub max_entry: Nat,
    pub seed: u64,
}

impl Default for SemanticCheck {
    fn default() -> Self {
        SemanticCheck {
            states: 100,
            max_entry: 4,
            seed: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageFailure {
    pub stage: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternativeWindows {
    pub stage: usize,
    /// Other window starts in `Y_i` that also match a reflection form.
    pub starts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub passed: bool,
    pub stages_validated: usize,
    pub commutation_steps_validated: usize,
    pub windows_validated: usize,
    pub c3_count: usize,
    pub b3_count: usize,
    pub final_is_reverse: bool,
    pub semantic: SemanticCheck,
    pub alternative_windows: Vec<AlternativeWindows>,
    pub failure: Option<StageFailure>,
}

fn semantic_window_check(
    factors: &LabeledFactors,
    labels: &[usize],
    semantic: &SemanticCheck,
    stage: usize,
) -> Result<bool> {
    let len = factors.ambient_length();
    // written order: the rightmost factor acts first
    let forward: Vec<IndexedOperator> = factors.operators(labels).into_iter().rev().collect();
    let reversed: Vec<IndexedOperator> = factors.operators(labels);
    let id = format!("window-{stage}");
    for state in sample_states(&id, len, semantic.states, semantic.max_entry, semantic.seed) {
        let mut a = state.clone();
        let mut b = state;
        for op in &forward {
            Combinatorial.apply(op, &mut a)?;
        }
        for op in &reversed {
            Combinatorial.apply(op, &mut b)?;
        }
        if a != b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs `X_0 → Y_0 → X_1 → … → Y_24`, where `X_0` is `1, …, n`, each
/// `X_i → Y_i` is a commutation, `Y_i → X_{i+1}` reverses the stage window
/// and `Y_24` is the reversal of `X_0`.
///
/// Failures are reported with their stage rather than returned as errors.
pub fn verify_theorem(
    script: &ProofScript,
    factors: &LabeledFactors,
    library: &ReflectionLibrary,
    semantic: &SemanticCheck,
) -> Result<DecompositionReport> {
    let n = factors.len();
    let mut report = DecompositionReport {
        passed: false,
        stages_validated: 0,
        commutation_steps_validated: 0,
        windows_validated: 0,
        c3_count: 0,
        b3_count: 0,
        final_is_reverse: false,
        semantic: *semantic,
        alternative_windows: Vec::new(),
        failure: None,
    };
    let fail = |mut report: DecompositionReport, stage: usize, reason: String| {
        report.failure = Some(StageFailure { stage, reason });
        Ok(report)
    };
    let mut x: Vec<usize> = (1..=n).collect();
    for (i, stage) in script.stages.iter().enumerate() {
        if stage.y.len() != n || !same_labels(&x, &stage.y) {
            return fail(report, i, format!("Y_{i} does not hold the labels of X_{i}"));
        }
        if !check_stage(factors, &x, &stage.y)? {
            let diff: Vec<String> = x
                .iter()
                .zip(&stage.y)
                .enumerate()
                .filter(|(_, (a, b))| a != b)
                .map(|(p, (a, b))| format!("{}:{a}->{b}", p + 1))
                .collect();
            return fail(
                report,
                i,
                format!("X_{i} -> Y_{i} is not a commutation; differs at {}", diff.join(" ")),
            );
        }
        report.commutation_steps_validated += 1;
        let (family, next) = match check_reflection_window(library, factors, &stage.y, &stage.window) {
            Ok(found) => found,
            Err(e) => return fail(report, i, format!("window {:?}: {e}", stage.window)),
        };
        if family != stage.family {
            return fail(
                report,
                i,
                format!("window is a {family} form, recorded as {}", stage.family),
            );
        }
        let labels = &stage.y[stage.window[0] - 1..stage.window[WINDOW - 1]];
        if semantic.states > 0 && !semantic_window_check(factors, labels, semantic, i)? {
            return fail(report, i, "window and its reversal differ as maps".into());
        }
        report.windows_validated += 1;
        match family {
            Family::C3 => report.c3_count += 1,
            Family::B3 => report.b3_count += 1,
        }
        let starts: Vec<usize> = (1..=n + 1 - WINDOW)
            .filter(|&s| s != stage.window_start())
            .filter(|&s| {
                library
                    .match_window(&factors.operators(&stage.y[s - 1..s - 1 + WINDOW]))
                    .is_some()
            })
            .collect();
        if !starts.is_empty() {
            report.alternative_windows.push(AlternativeWindows { stage: i, starts });
        }
        report.stages_validated += 1;
        x = next;
    }
    let reverse: Vec<usize> = (1..=n).rev().collect();
    if !check_stage(factors, &x, &reverse)? {
        let last = script.stages.len();
        return fail(
            report,
            last,
            format!("X_{last} is not a commutation of the reversed array"),
        );
    }
    report.commutation_steps_validated += 1;
    report.final_is_reverse = true;
    report.passed = true;
    Ok(report)
}
