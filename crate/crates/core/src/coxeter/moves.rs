use std::fmt;

use serde::{Deserialize, Serialize};

use super::{CoxeterType, Word};
use crate::error::{Error, Result};

/// Orientation of a braid move. `Forward` when the source window starts with
/// the smaller of the two letters (`2323 → 3232`, `121 → 212`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    Forward,
    Backward,
}

/// One application of a Coxeter relation: the alternating window
/// `a b a b …` of length `m(a, b)` starting at `position` (1-based) is
/// replaced by `b a b a …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MoveLabel {
    pub position: usize,
    pub width: usize,
    /// `(a, b)` as read from the source word.
    pub letters: (u8, u8),
    pub direction: Direction,
}

impl MoveLabel {
    fn new(position: usize, a: u8, b: u8, width: usize) -> Self {
        let direction = if a < b { Direction::Forward } else { Direction::Backward };
        MoveLabel {
            position,
            width,
            letters: (a, b),
            direction,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self.width {
            2 => "quadratic",
            3 => "cubic",
            4 => "quartic",
            5 => "quintic",
            _ => "braid",
        }
    }

    /// Window slots, 1-based.
    pub fn slots(&self) -> std::ops::Range<usize> {
        self.position..self.position + self.width
    }

    pub fn source_pattern(&self) -> Vec<u8> {
        alternating(self.letters.0, self.letters.1, self.width)
    }

    pub fn target_pattern(&self) -> Vec<u8> {
        alternating(self.letters.1, self.letters.0, self.width)
    }
}

impl fmt::Display for MoveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind_name(), self.position)
    }
}

fn alternating(a: u8, b: u8, width: usize) -> Vec<u8> {
    (0..width).map(|t| if t % 2 == 0 { a } else { b }).collect()
}

fn window_matches(letters: &[u8], start: usize, a: u8, b: u8, width: usize) -> bool {
    start + width <= letters.len() && (0..width).all(|t| letters[start + t] == if t % 2 == 0 { a } else { b })
}

/// The relation applicable at 0-based `start`, if any. At most one exists
/// because the first two letters determine it.
pub(crate) fn move_at_slice(ty: CoxeterType, letters: &[u8], start: usize) -> Option<(u8, u8, usize)> {
    if start + 1 >= letters.len() {
        return None;
    }
    let (a, b) = (letters[start], letters[start + 1]);
    if a == b {
        return None;
    }
    let m = usize::from(ty.bond(a, b));
    window_matches(letters, start, a, b, m).then_some((a, b, m))
}

pub(crate) fn rewrite(letters: &mut [u8], start: usize, a: u8, b: u8, width: usize) {
    for t in 0..width {
        letters[start + t] = if t % 2 == 0 { b } else { a };
    }
}

/// The move whose window starts at `position` (1-based), if one applies.
pub fn move_at(ty: CoxeterType, w: &Word, position: usize) -> Option<MoveLabel> {
    if position == 0 {
        return None;
    }
    move_at_slice(ty, w.letters(), position - 1).map(|(a, b, m)| MoveLabel::new(position, a, b, m))
}

pub fn apply_move(w: &Word, mv: &MoveLabel) -> Result<Word> {
    let illegal = || Error::IllegalMove {
        word: w.to_string(),
        position: mv.position,
        width: mv.width,
    };
    if mv.position == 0 || !window_matches(w.letters(), mv.position - 1, mv.letters.0, mv.letters.1, mv.width) {
        return Err(illegal());
    }
    let mut out = w.clone();
    rewrite(out.letters_mut(), mv.position - 1, mv.letters.0, mv.letters.1, mv.width);
    Ok(out)
}

/// All single-relation rewrites of `w`, sorted by position.
pub fn available_moves(ty: CoxeterType, w: &Word) -> Vec<(MoveLabel, Word)> {
    (1..w.len())
        .filter_map(|p| move_at(ty, w, p))
        .map(|mv| {
            let next = apply_move(w, &mv).expect("move_at only yields legal moves");
            (mv, next)
        })
        .collect()
}
