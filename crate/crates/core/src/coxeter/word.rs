use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A word in the generators, letters are 1-based generator labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn from_letters(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub(crate) fn letters_mut(&mut self) -> &mut [u8] {
        &mut self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Accepts either a run of digits (`121321`) or a comma/space separated list.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "word",
            input: s.to_string(),
        };
        let s = s.trim();
        let letters: Option<Vec<u8>> = if s.contains([',', ' ']) {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().ok())
                .collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect()
        };
        match letters {
            Some(v) if !v.is_empty() => Ok(Word(v)),
            _ => Err(err()),
        }
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A word of rank at most 4 and length at most 32 packed two bits per letter,
/// first letter in the most significant position. For words of equal length
/// the integer order is the lexicographic order of the words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PackedWord(pub u64);

impl PackedWord {
    pub const MAX_LEN: usize = 32;

    pub fn pack(letters: &[u8]) -> PackedWord {
        debug_assert!(letters.len() <= Self::MAX_LEN);
        let mut v = 0u64;
        for &l in letters {
            debug_assert!((1..=4).contains(&l));
            v = (v << 2) | u64::from(l - 1);
        }
        PackedWord(v)
    }

    pub fn unpack_into(self, len: usize, out: &mut [u8]) {
        let mut v = self.0;
        for slot in out[..len].iter_mut().rev() {
            *slot = (v & 3) as u8 + 1;
            v >>= 2;
        }
    }

    pub fn unpack(self, len: usize) -> Word {
        let mut buf = vec![0u8; len];
        self.unpack_into(len, &mut buf);
        Word(buf)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_display() {
        let w: Word = "121321".parse().unwrap();
        assert_eq!(w.letters(), &[1, 2, 1, 3, 2, 1]);
        assert_eq!(w.to_string(), "121321");
        let v: Word = "1, 2, 1".parse().unwrap();
        assert_eq!(v.letters(), &[1, 2, 1]);
        assert!("".parse::<Word>().is_err());
        assert!("12a".parse::<Word>().is_err());
    }

    proptest! {
        #[test]
        fn packing_preserves_words_and_order(
            a in proptest::collection::vec(1u8..=4, 1..=32),
            b_seed in proptest::collection::vec(1u8..=4, 32),
        ) {
            let b = &b_seed[..a.len()];
            let pa = PackedWord::pack(&a);
            let pb = PackedWord::pack(b);
            let back = pa.unpack(a.len());
            prop_assert_eq!(back.letters(), &a[..]);
            prop_assert_eq!(pa.cmp(&pb), a.as_slice().cmp(b));
        }
    }
}
