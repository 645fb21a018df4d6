//! Crossing signs and positional sign sequences.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `+1` or `-1`.
    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// One entry per crossing slot; `None` marks a skipped slot (`_`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignSequence(Vec<Option<Sign>>);

impl SignSequence {
    pub fn new(slots: Vec<Option<Sign>>) -> Self {
        Self(slots)
    }

    /// A sequence without skipped slots.
    pub fn from_signs<I: IntoIterator<Item = Sign>>(signs: I) -> Self {
        Self(signs.into_iter().map(Some).collect())
    }

    /// The `k` crossing signs selected by `mask`: bit `k-1-j` set makes the
    /// `j`-th sign negative, so masks in increasing order list sequences
    /// lexicographically with `+` before `-`.
    pub fn from_mask(k: usize, mask: u64) -> Self {
        Self::from_signs((0..k).map(|j| {
            if mask >> (k - 1 - j) & 1 == 1 {
                Sign::Minus
            } else {
                Sign::Plus
            }
        }))
    }

    /// All `2^k` unskipped sequences of length `k` in mask order.
    pub fn all(k: usize) -> impl Iterator<Item = SignSequence> {
        (0..1u64 << k).map(move |m| Self::from_mask(k, m))
    }

    /// The periodic pattern `pattern[0], pattern[1], ...` over `k` slots.
    pub fn periodic(pattern: &[Sign], k: usize) -> Self {
        Self::from_signs((0..k).map(|i| pattern[i % pattern.len()]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, slot: usize) -> Option<Sign> {
        self.0.get(slot).copied().flatten()
    }

    pub fn slots(&self) -> &[Option<Sign>] {
        &self.0
    }

    /// The signs of the real crossings, skipping `_` slots.
    pub fn crossing_signs(&self) -> impl Iterator<Item = Sign> + '_ {
        self.0.iter().filter_map(|s| *s)
    }

    /// Every sign flipped; skips stay in place.
    pub fn mirror(&self) -> Self {
        Self(self.0.iter().map(|s| s.map(Sign::flip)).collect())
    }

    /// Places `signs` into the non-skipped positions of `layout`, where
    /// `layout[i]` says whether slot `i` holds a crossing.
    pub fn spread(layout: &[bool], signs: &[Sign]) -> Result<Self> {
        let needed = layout.iter().filter(|&&c| c).count();
        if needed != signs.len() {
            return Err(Error::SignLengthMismatch {
                expected: needed,
                got: signs.len(),
            });
        }
        let mut it = signs.iter();
        Ok(Self(
            layout
                .iter()
                .map(|&c| if c { it.next().copied() } else { None })
                .collect(),
        ))
    }
}

impl FromStr for SignSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '+' => Ok(Some(Sign::Plus)),
                '-' | '\u{2212}' => Ok(Some(Sign::Minus)),
                '_' => Ok(None),
                other => Err(Error::InvalidSignChar(other)),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .0
            .iter()
            .map(|s| s.map_or('_', Sign::as_char))
            .collect();
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn parse_and_print() {
        let s: SignSequence = "+-_+".parse().unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.get(2), None);
        assert_eq!(s.to_string(), "+-_+");
        assert_eq!("+x".parse::<SignSequence>(), Err(Error::InvalidSignChar('x')));
    }

    #[test]
    fn mask_order() {
        let all: Vec<_> = SignSequence::all(2).map(|s| s.to_string()).collect();
        assert_eq!(all, ["++", "+-", "-+", "--"]);
    }

    #[test]
    fn spread_fills_skips() {
        let s = SignSequence::spread(&[true, false, true], &[Sign::Minus, Sign::Plus]).unwrap();
        assert_eq!(s.to_string(), "-_+");
        assert!(SignSequence::spread(&[true], &[]).is_err());
        assert_eq!(s.crossing_signs().collect::<Vec<_>>(), vec![Sign::Minus, Sign::Plus]);
    }

    #[test]
    fn periodic_pattern() {
        let s = SignSequence::periodic(&[Sign::Plus, Sign::Plus, Sign::Minus, Sign::Minus], 6);
        assert_eq!(s.to_string(), "++--++");
        assert_eq!(s.mirror().to_string(), "--++--");
    }
}
