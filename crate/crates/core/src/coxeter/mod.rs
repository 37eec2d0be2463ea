//! Finite Coxeter groups of rank at most four, their reduced words and the
//! graphs of reduced expressions.

mod moves;
mod rex;
mod roots;
mod word;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use moves::{apply_move, available_moves, move_at, Direction, MoveLabel};
pub use rex::{rex_graph, RexGraph, RexOptions, RexSummary, DEFAULT_MAX_VERTICES};
pub use roots::RootSystem;
pub use word::{PackedWord, Word};

use crate::error::{Error, Result};
use crate::scalar::QuadraticSurd;

/// The Coxeter types handled by the engine.
///
/// `B3` and `C3` are the same Coxeter group; they differ only in which
/// operators are attached to their relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CoxeterType {
    A2,
    A3,
    B3,
    C3,
    F4,
    H2,
    H3,
}

impl CoxeterType {
    pub const ALL: [CoxeterType; 7] = [
        CoxeterType::A2,
        CoxeterType::A3,
        CoxeterType::B3,
        CoxeterType::C3,
        CoxeterType::F4,
        CoxeterType::H2,
        CoxeterType::H3,
    ];

    pub fn rank(self) -> u8 {
        match self {
            CoxeterType::A2 | CoxeterType::H2 => 2,
            CoxeterType::A3 | CoxeterType::B3 | CoxeterType::C3 | CoxeterType::H3 => 3,
            CoxeterType::F4 => 4,
        }
    }

    /// Order `m(i, j)` of `s_i s_j`, with 1-based generator labels.
    pub fn bond(self, i: u8, j: u8) -> u8 {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        assert!(i >= 1 && j <= self.rank(), "generator out of range for {self}");
        if i == j {
            return 1;
        }
        match (self, i, j) {
            (CoxeterType::B3 | CoxeterType::C3, 2, 3) => 4,
            (CoxeterType::F4, 2, 3) => 4,
            (CoxeterType::H2 | CoxeterType::H3, 1, 2) => 5,
            (_, i, j) if j == i + 1 => 3,
            _ => 2,
        }
    }

    pub fn coxeter_matrix(self) -> CoxeterMatrix {
        let n = self.rank();
        let mut entries = Vec::with_capacity(usize::from(n) * usize::from(n));
        for i in 1..=n {
            for j in 1..=n {
                entries.push(self.bond(i, j));
            }
        }
        CoxeterMatrix { rank: n, entries }
    }

    pub fn group_order(self) -> u64 {
        match self {
            CoxeterType::A2 => 6,
            CoxeterType::A3 => 24,
            CoxeterType::B3 | CoxeterType::C3 => 48,
            CoxeterType::F4 => 1152,
            CoxeterType::H2 => 10,
            CoxeterType::H3 => 120,
        }
    }

    /// Length of the longest element, i.e. the number of positive roots.
    pub fn longest_length(self) -> usize {
        match self {
            CoxeterType::A2 => 3,
            CoxeterType::A3 => 6,
            CoxeterType::B3 | CoxeterType::C3 => 9,
            CoxeterType::F4 => 24,
            CoxeterType::H2 => 5,
            CoxeterType::H3 => 15,
        }
    }

    /// Built-in reduced expression of the longest element.
    pub fn longest_word(self) -> Word {
        let s = match self {
            CoxeterType::A2 => "121",
            CoxeterType::A3 => "121321",
            CoxeterType::B3 | CoxeterType::C3 => "123121323",
            CoxeterType::F4 => "434234232123423123412321",
            CoxeterType::H2 => "12121",
            CoxeterType::H3 => "121213212132123",
        };
        s.parse().expect("built-in seed words are well formed")
    }

    /// The letter permutation induced by conjugation with the longest
    /// element (`s_i ↦ w₀ s_i w₀`). Nontrivial only in type A.
    pub fn opposition(self, letter: u8) -> u8 {
        match self {
            CoxeterType::A2 | CoxeterType::A3 => self.rank() + 1 - letter,
            _ => letter,
        }
    }

    /// The reduced word of `w⁻¹` twisted by [`Self::opposition`]. For a
    /// reduced word of the longest element this is the reduced word whose
    /// inversion order is exactly reversed, the antipode in the rex graph.
    pub fn opposite_word(self, w: &Word) -> Word {
        Word::from_letters(w.letters().iter().rev().map(|&l| self.opposition(l)).collect())
    }

    pub fn check_word(self, w: &Word) -> Result<()> {
        let rank = self.rank();
        match w.letters().iter().find(|&&l| l == 0 || l > rank) {
            Some(&letter) => Err(Error::LetterOutOfRange { ty: self, letter, rank }),
            None => Ok(()),
        }
    }

    /// Reducedness by positive-root tracking with exact arithmetic.
    pub fn is_reduced(self, w: &Word) -> Result<bool> {
        self.check_word(w)?;
        Ok(RootSystem::<QuadraticSurd>::new(self).is_reduced(w))
    }

    pub fn name(self) -> &'static str {
        match self {
            CoxeterType::A2 => "A2",
            CoxeterType::A3 => "A3",
            CoxeterType::B3 => "B3",
            CoxeterType::C3 => "C3",
            CoxeterType::F4 => "F4",
            CoxeterType::H2 => "H2",
            CoxeterType::H3 => "H3",
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CoxeterType::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownType(s.to_string()))
    }
}

/// Symmetric matrix of bond orders, 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    rank: u8,
    entries: Vec<u8>,
}

impl CoxeterMatrix {
    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn get(&self, i: u8, j: u8) -> u8 {
        let n = usize::from(self.rank);
        self.entries[usize::from(i - 1) * n + usize::from(j - 1)]
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rank {
            let row: Vec<String> = (1..=self.rank).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrices_match_dynkin_data() {
        let a3 = CoxeterType::A3.coxeter_matrix();
        assert_eq!((a3.get(1, 2), a3.get(2, 3), a3.get(1, 3)), (3, 3, 2));

        let f4 = CoxeterType::F4.coxeter_matrix();
        assert_eq!((f4.get(1, 2), f4.get(2, 3), f4.get(3, 4)), (3, 4, 3));
        assert_eq!((f4.get(1, 3), f4.get(1, 4), f4.get(2, 4)), (2, 2, 2));

        let h3 = CoxeterType::H3.coxeter_matrix();
        assert_eq!((h3.get(1, 2), h3.get(2, 3), h3.get(1, 3)), (5, 3, 2));

        assert_eq!(CoxeterType::B3.coxeter_matrix(), CoxeterType::C3.coxeter_matrix());
    }

    #[test]
    fn matrices_are_symmetric_with_unit_diagonal() {
        for ty in CoxeterType::ALL {
            let m = ty.coxeter_matrix();
            for i in 1..=ty.rank() {
                assert_eq!(m.get(i, i), 1);
                for j in 1..=ty.rank() {
                    assert_eq!(m.get(i, j), m.get(j, i));
                    if i != j {
                        assert!((2..=5).contains(&m.get(i, j)));
                    }
                }
            }
        }
    }

    #[test]
    fn seeds_are_reduced_longest_words() {
        for ty in CoxeterType::ALL {
            let w = ty.longest_word();
            assert_eq!(w.len(), ty.longest_length(), "{ty}");
            assert!(ty.is_reduced(&w).unwrap(), "{ty}");
        }
    }

    #[test]
    fn named_seeds() {
        assert_eq!(CoxeterType::F4.longest_word().to_string(), "434234232123423123412321");
        assert_eq!(
            CoxeterType::H3.longest_word().letters(),
            &[1, 2, 1, 2, 1, 3, 2, 1, 2, 1, 3, 2, 1, 2, 3]
        );
        assert_eq!(CoxeterType::A3.longest_word().to_string(), "121321");
    }

    #[test]
    fn opposite_of_a3_seed_is_far_end_of_the_loop() {
        let w = CoxeterType::A3.longest_word();
        assert_eq!(CoxeterType::A3.opposite_word(&w).to_string(), "321323");
        let f = CoxeterType::F4.longest_word();
        assert_eq!(
            CoxeterType::F4.opposite_word(&f).to_string(),
            "123214321324321232432434"
        );
    }

    #[test]
    fn reducedness_examples() {
        assert!(!CoxeterType::A3.is_reduced(&"11".parse().unwrap()).unwrap());
        assert!(CoxeterType::A3.is_reduced(&"121".parse().unwrap()).unwrap());
        assert!(matches!(
            CoxeterType::A3.is_reduced(&"14".parse().unwrap()),
            Err(Error::LetterOutOfRange { letter: 4, .. })
        ));
    }

    #[test]
    fn parse_type_names() {
        assert_eq!("f4".parse::<CoxeterType>().unwrap(), CoxeterType::F4);
        assert!("E8".parse::<CoxeterType>().is_err());
    }
}
