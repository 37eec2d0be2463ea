use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::coxeter::{apply_move, available_moves, move_at, CoxeterType, MoveLabel, Word};
use crate::error::{Error, Result};

/// A path in a rex graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveTrace {
    ty: CoxeterType,
    start: Word,
    steps: Vec<MoveLabel>,
    end: Word,
}

impl MoveTrace {
    /// Replays `steps` from `start`, checking every move against the word it
    /// is applied to.
    pub fn new(ty: CoxeterType, start: Word, steps: Vec<MoveLabel>) -> Result<Self> {
        if !ty.is_reduced(&start)? {
            return Err(Error::NotReduced(start.to_string()));
        }
        let mut end = start.clone();
        for (n, mv) in steps.iter().enumerate() {
            if move_at(ty, &end, mv.position) != Some(*mv) {
                return Err(Error::InvalidTrace(format!(
                    "step {} ({mv}) does not apply to {end}",
                    n + 1
                )));
            }
            end = apply_move(&end, mv)?;
        }
        Ok(MoveTrace { ty, start, steps, end })
    }

    /// Builds a trace from window positions alone; the relation at each
    /// position is read off the current word.
    pub fn from_positions(ty: CoxeterType, start: Word, positions: &[usize]) -> Result<Self> {
        let mut w = start.clone();
        let mut steps = Vec::with_capacity(positions.len());
        for (n, &p) in positions.iter().enumerate() {
            let mv = move_at(ty, &w, p)
                .ok_or_else(|| Error::InvalidTrace(format!("step {}: no move at position {p} of {w}", n + 1)))?;
            w = apply_move(&w, &mv)?;
            steps.push(mv);
        }
        MoveTrace::new(ty, start, steps)
    }

    /// A shortest path from `from` to `to`, breaking ties by taking moves in
    /// position order.
    pub fn shortest(ty: CoxeterType, from: &Word, to: &Word) -> Result<Self> {
        let mut prev: HashMap<Word, Option<(Word, MoveLabel)>> = HashMap::from([(from.clone(), None)]);
        let mut queue = VecDeque::from([from.clone()]);
        while let Some(w) = queue.pop_front() {
            if w == *to {
                break;
            }
            for (mv, next) in available_moves(ty, &w) {
                if !prev.contains_key(&next) {
                    prev.insert(next.clone(), Some((w.clone(), mv)));
                    queue.push_back(next);
                }
            }
        }
        let mut steps = Vec::new();
        let mut cur = to.clone();
        loop {
            match prev.get(&cur) {
                None => return Err(Error::InvalidTrace(format!("{to} is not reachable from {from}"))),
                Some(None) => break,
                Some(Some((w, mv))) => {
                    steps.push(*mv);
                    cur = w.clone();
                }
            }
        }
        steps.reverse();
        MoveTrace::new(ty, from.clone(), steps)
    }

    /// The shortest trace from the built-in longest word to its opposite.
    pub fn canonical(ty: CoxeterType) -> Result<Self> {
        let w = ty.longest_word();
        Self::shortest(ty, &w, &ty.opposite_word(&w))
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn start(&self) -> &Word {
        &self.start
    }

    pub fn end(&self) -> &Word {
        &self.end
    }

    pub fn steps(&self) -> &[MoveLabel] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `start, w_1, …, end`.
    pub fn words(&self) -> Vec<Word> {
        let mut out = vec![self.start.clone()];
        for mv in &self.steps {
            let next = apply_move(out.last().unwrap(), mv).expect("validated on construction");
            out.push(next);
        }
        out
    }

    /// The second route between the same endpoints: it visits the opposite
    /// words of this trace in reverse order. A move with window start `k`
    /// and width `m` reappears at `L − k − m + 2`; which relation it is, and
    /// in which direction it runs, is read off the mirrored words.
    pub fn mirror(&self) -> Result<MoveTrace> {
        let ty = self.ty;
        if ty.opposite_word(&self.start) != self.end {
            return Err(Error::InvalidTrace(format!(
                "trace ends at {}, not at the opposite {} of its start",
                self.end,
                ty.opposite_word(&self.start)
            )));
        }
        let len = self.start.len();
        let positions: Vec<usize> = self
            .steps
            .iter()
            .rev()
            .map(|mv| len + 2 - mv.position - mv.width)
            .collect();
        let mirrored = MoveTrace::from_positions(ty, ty.opposite_word(&self.end), &positions)?;
        debug_assert_eq!(mirrored.end, self.end);
        Ok(mirrored)
    }

    /// The same path with letters relabelled by `f`, for a `target` type in
    /// which `f` is a diagram automorphism.
    pub fn relabel(&self, target: CoxeterType, f: impl Fn(u8) -> u8) -> Result<MoveTrace> {
        let start = Word::from_letters(self.start.letters().iter().map(|&l| f(l)).collect());
        let positions: Vec<usize> = self.steps.iter().map(|mv| mv.position).collect();
        MoveTrace::from_positions(target, start, &positions)
    }
}

/// One printed step of a trace: the operator name, its inversion and the
/// window it acts on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub op: String,
    #[serde(default)]
    pub inverted: bool,
    pub window: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a3_canonical_trace_reaches_the_opposite_word() {
        let t = MoveTrace::canonical(CoxeterType::A3).unwrap();
        assert_eq!(t.end().to_string(), "321323");
        assert_eq!(t.len(), 7);
        let m = t.mirror().unwrap();
        assert_eq!(m.start(), t.start());
        assert_eq!(m.end(), t.end());
        assert_eq!(m.mirror().unwrap(), t);
    }

    #[test]
    fn mirror_visits_opposite_words_backwards() {
        let t = MoveTrace::canonical(CoxeterType::C3).unwrap();
        let m = t.mirror().unwrap();
        let ours = t.words();
        let theirs = m.words();
        for (a, b) in ours.iter().zip(theirs.iter().rev()) {
            assert_eq!(CoxeterType::C3.opposite_word(a), *b);
        }
    }

    #[test]
    fn replay_is_checked() {
        let w = CoxeterType::A3.longest_word();
        let mv = move_at(CoxeterType::A3, &w, 1).unwrap();
        // the second move at position 1 reads 212, not 121
        assert!(MoveTrace::new(CoxeterType::A3, w.clone(), vec![mv, mv]).is_err());
        let back = MoveTrace::from_positions(CoxeterType::A3, w.clone(), &[1, 1]).unwrap();
        assert_eq!(back.end(), &w);
        assert!(MoveTrace::from_positions(CoxeterType::A3, w, &[2]).is_err());
    }

    #[test]
    fn mirror_requires_opposite_endpoints() {
        let w = CoxeterType::A3.longest_word();
        let t = MoveTrace::from_positions(CoxeterType::A3, w, &[1]).unwrap();
        assert!(matches!(t.mirror(), Err(Error::InvalidTrace(_))));
    }
}
