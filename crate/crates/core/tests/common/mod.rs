//! Independent references used by several test targets.

#![allow(dead_code)]

use std::collections::HashMap;
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tetra_core::calculus::{normalize, IndexedOperator, OperatorExpression, OperatorKind};
use tetra_core::combinatorial::{eval_expression, SetSemantics};
use tetra_core::{Nat, Result};

type Bonds = Vec<((usize, usize), u32)>;

/// Bond orders `m(i, j)` for `i < j`, written out by hand.
pub fn bonds(name: &str) -> (usize, Bonds) {
    match name {
        "A2" => (2, vec![((0, 1), 3)]),
        "H2" => (2, vec![((0, 1), 5)]),
        "A3" => (3, vec![((0, 1), 3), ((1, 2), 3), ((0, 2), 2)]),
        "B3" | "C3" => (3, vec![((0, 1), 3), ((1, 2), 4), ((0, 2), 2)]),
        "H3" => (3, vec![((0, 1), 5), ((1, 2), 3), ((0, 2), 2)]),
        "F4" => (
            4,
            vec![
                ((0, 1), 3),
                ((1, 2), 4),
                ((2, 3), 3),
                ((0, 2), 2),
                ((0, 3), 2),
                ((1, 3), 2),
            ],
        ),
        _ => panic!("no bonds for {name}"),
    }
}

type Mat = Vec<Vec<f64>>;

fn key(m: &Mat) -> Vec<i64> {
    m.iter().flatten().map(|x| (x * 1e6).round() as i64).collect()
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// Number of reduced words of the longest element, by the recursion
/// `N(w) = Σ N(w s)` over right descents `s`, in the geometric
/// representation.
pub fn reduced_word_count(name: &str) -> u64 {
    let (n, list) = bonds(name);
    let mut b = vec![vec![1.0; n]; n];
    for ((i, j), m) in list {
        let c = -(PI / f64::from(m)).cos();
        b[i][j] = c;
        b[j][i] = c;
    }
    // s_i(α_j) = α_j − 2 B(i, j) α_i, columns are images
    let gens: Vec<Mat> = (0..n)
        .map(|i| {
            let mut m: Mat = (0..n)
                .map(|r| (0..n).map(|c| f64::from(u8::from(r == c))).collect())
                .collect();
            for j in 0..n {
                m[i][j] -= 2.0 * b[i][j];
            }
            m
        })
        .collect();
    let id: Mat = (0..n)
        .map(|r| (0..n).map(|c| f64::from(u8::from(r == c))).collect())
        .collect();
    let mut length: HashMap<Vec<i64>, usize> = HashMap::from([(key(&id), 0)]);
    let mut count: HashMap<Vec<i64>, u64> = HashMap::from([(key(&id), 1)]);
    let mut frontier = vec![id];
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for w in &frontier {
            for g in &gens {
                let ws = mul(w, g);
                let k = key(&ws);
                if !length.contains_key(&k) {
                    length.insert(k.clone(), depth);
                    next.push(ws);
                }
            }
        }
        for w in &next {
            let total = gens
                .iter()
                .map(|g| key(&mul(w, g)))
                .filter(|k| length.get(k).is_some_and(|&l| l + 1 == depth))
                .map(|k| count[&k])
                .sum();
            count.insert(key(w), total);
        }
        if next.is_empty() {
            return frontier.iter().map(|w| count[&key(w)]).sum();
        }
        frontier = next;
    }
    unreachable!()
}

/// Permutation of `0..4` for the word, `s_i` swapping `i-1` and `i`.
pub fn s4_inversions(word: &[u8]) -> usize {
    let mut p = [0usize, 1, 2, 3];
    for &l in word {
        p.swap(l as usize - 1, l as usize);
    }
    (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count()
}

/// Arbitrary tables for R, S and K on `{0..3}`; nothing like a solution.
pub struct RandomCores {
    r: Vec<[Nat; 3]>,
    s: Vec<[Nat; 3]>,
    k: Vec<[Nat; 4]>,
}

const CARRIER: Nat = 4;

fn code(t: &[Nat]) -> usize {
    t.iter().fold(0, |acc, &x| acc * CARRIER as usize + x as usize)
}

impl RandomCores {
    pub fn new(rng: &mut ChaCha8Rng) -> Self {
        let mut triple = || {
            [
                rng.gen_range(0..CARRIER),
                rng.gen_range(0..CARRIER),
                rng.gen_range(0..CARRIER),
            ]
        };
        let r = (0..64).map(|_| triple()).collect();
        let s = (0..64).map(|_| triple()).collect();
        let k = (0..256)
            .map(|_| std::array::from_fn(|_| rng.gen_range(0..CARRIER)))
            .collect();
        RandomCores { r, s, k }
    }
}

impl SetSemantics for RandomCores {
    fn apply(&self, op: &IndexedOperator, state: &mut [Nat]) -> Result<()> {
        let ix: Vec<usize> = op.indices.iter().map(|i| i - 1).collect();
        let read: Vec<Nat> = ix.iter().map(|&i| state[i]).collect();
        let image: &[Nat] = match op.kind {
            OperatorKind::P => {
                state.swap(ix[0], ix[1]);
                return Ok(());
            }
            OperatorKind::R => &self.r[code(&read)],
            OperatorKind::S => &self.s[code(&read)],
            OperatorKind::K => &self.k[code(&read)],
            OperatorKind::Y => unreachable!(),
        };
        for (&i, &x) in ix.iter().zip(image) {
            state[i] = x;
        }
        Ok(())
    }
}

pub fn random_expression(rng: &mut ChaCha8Rng, len: usize) -> OperatorExpression {
    let n = rng.gen_range(1..=16);
    let factors = (0..n)
        .map(|_| {
            let kind = [
                OperatorKind::P,
                OperatorKind::P,
                OperatorKind::R,
                OperatorKind::S,
                OperatorKind::K,
            ][rng.gen_range(0..5)];
            let mut slots: Vec<usize> = (1..=len).collect();
            for i in 0..kind.arity() {
                let j = rng.gen_range(i..len);
                slots.swap(i, j);
            }
            slots.truncate(kind.arity());
            IndexedOperator::new(kind, slots, false).unwrap()
        })
        .collect();
    OperatorExpression::new(len, factors).unwrap()
}

/// Splits `expressions` random expressions into core and residue and
/// compares both forms on `states` random states each, under fresh random
/// core tables every time. Returns the first mismatch.
pub fn check_normalization(seed: u64, expressions: usize, states: usize) -> std::result::Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..expressions {
        let len = rng.gen_range(4..=8);
        let sem = RandomCores::new(&mut rng);
        let expr = random_expression(&mut rng, len);
        let (core, residue) = normalize(&expr);
        if core.factors().iter().any(|f| f.kind == OperatorKind::P) {
            return Err(format!("{expr}: transposition left in the core"));
        }
        for _ in 0..states {
            let s: Vec<Nat> = (0..len).map(|_| rng.gen_range(0..CARRIER)).collect();
            let direct = eval_expression(&sem, &expr, &s).map_err(|e| e.to_string())?;
            let split = eval_expression(&sem, &core, &residue.permute(&s)).map_err(|e| e.to_string())?;
            if direct != split {
                return Err(format!("{expr} on {s:?}: {direct:?} vs {split:?}"));
            }
        }
    }
    Ok(())
}
