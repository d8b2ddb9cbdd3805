//! (m,n)-words: length-`n` words over `{0, …, m+1}` whose first letter is not
//! `m+1` and in which every occurrence of a letter `s ∈ [1, m]` is preceded
//! only by letters `≥ s`.
//!
//! Positions are 1-based in every error message and export.

mod count;
mod enumerate;
mod order;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use count::{binomial, count_topless, count_words};
pub use enumerate::{enumerate, Words};
pub use order::{join, leq, lower_covers, meet, word_stats, WordStats};

/// Largest admissible top letter `m + 1`.
pub const MAX_TOP_LETTER: u32 = i32::MAX as u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("letter {letter} at position {position} is outside the alphabet [0, {top}]")]
    AlphabetViolation {
        position: usize,
        letter: u32,
        top: u32,
    },
    #[error("first letter equals the top letter {top}")]
    Mn1Violation { top: u32 },
    #[error("letter {letter} at position {position} is preceded by the smaller letter {earlier_letter} at position {earlier_position}")]
    Mn2Violation {
        position: usize,
        letter: u32,
        earlier_position: usize,
        earlier_letter: u32,
    },
    #[error("alphabet parameter m = {m} exceeds the supported maximum {}", MAX_TOP_LETTER - 1)]
    AlphabetTooLarge { m: u32 },
    #[error("shape mismatch: ({m1}, {n1}) vs ({m2}, {n2})")]
    ShapeMismatch {
        m1: u32,
        n1: usize,
        m2: u32,
        n2: usize,
    },
    #[error("cannot parse word {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A validated (m,n)-word. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawWord", into = "RawWord")]
pub struct MnWord {
    m: u32,
    letters: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawWord {
    m: u32,
    letters: Vec<u32>,
}

impl TryFrom<RawWord> for MnWord {
    type Error = WordError;

    fn try_from(raw: RawWord) -> Result<Self, Self::Error> {
        MnWord::new(raw.m, raw.letters)
    }
}

impl From<MnWord> for RawWord {
    fn from(w: MnWord) -> Self {
        RawWord {
            m: w.m,
            letters: w.letters,
        }
    }
}

impl MnWord {
    /// Validates `letters` against MN1 and MN2.
    pub fn new(m: u32, letters: Vec<u32>) -> Result<Self, WordError> {
        check(m, &letters)?;
        Ok(MnWord { m, letters })
    }

    /// The all-zero bottom word of length `n`.
    pub fn bottom(m: u32, n: usize) -> Result<Self, WordError> {
        MnWord::new(m, vec![0; n])
    }

    /// The top word `m (m+1) … (m+1)`.
    pub fn top(m: u32, n: usize) -> Result<Self, WordError> {
        let mut letters = vec![m + 1; n];
        if let Some(first) = letters.first_mut() {
            *first = m;
        }
        MnWord::new(m, letters)
    }

    /// Parses either the compact digit form (`"474337720"`) or the comma form
    /// (`"4,7,4,3,3,7,7,2,0"`).
    pub fn parse(m: u32, input: &str) -> Result<Self, WordError> {
        let trimmed = input.trim();
        let parse_err = |reason: String| WordError::Parse {
            input: input.to_string(),
            reason,
        };
        let letters = if trimmed.is_empty() {
            Vec::new()
        } else if trimmed.contains(',') {
            trimmed
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u32>()
                        .map_err(|e| parse_err(format!("bad letter {tok:?}: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?
        } else {
            trimmed
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| parse_err(format!("bad digit {c:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        MnWord::new(m, letters)
    }

    /// Builds a word from letters already known to be valid.
    pub(crate) fn from_valid(m: u32, letters: Vec<u32>) -> Self {
        debug_assert!(check(m, &letters).is_ok(), "invalid letters {letters:?}");
        MnWord { m, letters }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    pub fn top_letter(&self) -> u32 {
        self.m + 1
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    /// Letter at 1-based position `i`.
    pub fn letter(&self, i: usize) -> u32 {
        self.letters[i - 1]
    }

    pub fn is_bottom(&self) -> bool {
        self.letters.iter().all(|&l| l == 0)
    }

    /// True when the word avoids the top letter `m + 1`.
    pub fn is_topless(&self) -> bool {
        self.letters.iter().all(|&l| l != self.m + 1)
    }

    /// Appends `letter`, validating the result as an `(m, n+1)`-word.
    pub fn extended(&self, letter: u32) -> Result<Self, WordError> {
        let mut letters = self.letters.clone();
        letters.push(letter);
        MnWord::new(self.m, letters)
    }

    pub(crate) fn same_shape(&self, other: &MnWord) -> Result<(), WordError> {
        if self.m != other.m || self.n() != other.n() {
            return Err(WordError::ShapeMismatch {
                m1: self.m,
                n1: self.n(),
                m2: other.m,
                n2: other.n(),
            });
        }
        Ok(())
    }
}

fn check(m: u32, letters: &[u32]) -> Result<(), WordError> {
    if m >= MAX_TOP_LETTER {
        return Err(WordError::AlphabetTooLarge { m });
    }
    let top = m + 1;
    for (idx, &letter) in letters.iter().enumerate() {
        if letter > top {
            return Err(WordError::AlphabetViolation {
                position: idx + 1,
                letter,
                top,
            });
        }
    }
    if letters.first() == Some(&top) {
        return Err(WordError::Mn1Violation { top });
    }
    // Track the smallest letter seen so far; a support letter must not exceed it.
    let mut smallest: Option<(usize, u32)> = None;
    for (idx, &letter) in letters.iter().enumerate() {
        if (1..=m).contains(&letter) {
            if let Some((pos, small)) = smallest {
                if small < letter {
                    return Err(WordError::Mn2Violation {
                        position: idx + 1,
                        letter,
                        earlier_position: pos + 1,
                        earlier_letter: small,
                    });
                }
            }
        }
        if smallest.is_none_or(|(_, s)| letter < s) {
            smallest = Some((idx, letter));
        }
    }
    Ok(())
}

/// Writes letters in the compact digit form when `m + 1 ≤ 9`, else comma-separated.
pub(crate) fn write_letters(f: &mut impl fmt::Write, m: u32, letters: &[u32]) -> fmt::Result {
    if m < 9 {
        for l in letters {
            write!(f, "{l}")?;
        }
    } else {
        for (i, l) in letters.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{l}")?;
        }
    }
    Ok(())
}

impl fmt::Display for MnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, self.m, &self.letters)
    }
}

impl fmt::Debug for MnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MnWord(m={}, ", self.m)?;
        write_letters(f, self.m, &self.letters)?;
        f.write_str(")")
    }
}

/// `m` paired with a word string, e.g. for CLI arguments: `"6:474337720"`.
impl FromStr for MnWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (m, word) = s.split_once(':').ok_or_else(|| WordError::Parse {
            input: s.to_string(),
            reason: "expected `m:letters`".to_string(),
        })?;
        let m = m.trim().parse::<u32>().map_err(|e| WordError::Parse {
            input: s.to_string(),
            reason: format!("bad m: {e}"),
        })?;
        MnWord::parse(m, word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_figure_words() {
        assert!(MnWord::parse(2, "23").is_ok());
        let w = MnWord::parse(6, "474337720").unwrap();
        assert_eq!(w.n(), 9);
        assert_eq!(w.letter(2), 7);
    }

    #[test]
    fn rejects_top_first_letter() {
        assert_eq!(
            MnWord::parse(2, "32").unwrap_err(),
            WordError::Mn1Violation { top: 3 }
        );
    }

    #[test]
    fn rejects_mn2_with_positions() {
        assert_eq!(
            MnWord::parse(2, "12").unwrap_err(),
            WordError::Mn2Violation {
                position: 2,
                letter: 2,
                earlier_position: 1,
                earlier_letter: 1
            }
        );
        // 0 blocks every later support letter, but not the top letter.
        assert!(MnWord::parse(2, "031").is_err());
        assert!(MnWord::parse(2, "033").is_ok());
    }

    #[test]
    fn rejects_out_of_alphabet() {
        assert_eq!(
            MnWord::new(2, vec![0, 4]).unwrap_err(),
            WordError::AlphabetViolation {
                position: 2,
                letter: 4,
                top: 3
            }
        );
        assert!(matches!(
            MnWord::new(MAX_TOP_LETTER, vec![]),
            Err(WordError::AlphabetTooLarge { .. })
        ));
    }

    #[test]
    fn empty_word_is_valid() {
        let w = MnWord::parse(3, "").unwrap();
        assert_eq!(w.n(), 0);
        assert!(w.is_bottom());
    }

    #[test]
    fn display_switches_to_commas_for_large_alphabets() {
        let w = MnWord::new(9, vec![4, 10, 4, 3, 3, 10, 10, 2, 0]).unwrap();
        assert_eq!(w.to_string(), "4,10,4,3,3,10,10,2,0");
        assert_eq!(MnWord::parse(9, &w.to_string()).unwrap(), w);
        let v = MnWord::parse(6, "474337720").unwrap();
        assert_eq!(v.to_string(), "474337720");
        assert_eq!(MnWord::parse(6, "4,7,4,3,3,7,7,2,0").unwrap(), v);
    }

    #[test]
    fn json_form_validates() {
        let w = MnWord::parse(2, "231").unwrap();
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"m":2,"letters":[2,3,1]}"#);
        assert_eq!(serde_json::from_str::<MnWord>(&json).unwrap(), w);
        assert!(serde_json::from_str::<MnWord>(r#"{"m":2,"letters":[1,2]}"#).is_err());
    }

    #[test]
    fn from_str_takes_m_prefix() {
        let w: MnWord = "6:474337720".parse().unwrap();
        assert_eq!(w.m(), 6);
        assert!("474337720".parse::<MnWord>().is_err());
    }

    #[test]
    fn top_and_bottom() {
        assert_eq!(MnWord::top(2, 3).unwrap().to_string(), "233");
        assert_eq!(MnWord::bottom(2, 3).unwrap().to_string(), "000");
        assert_eq!(MnWord::top(2, 0).unwrap().n(), 0);
    }
}
