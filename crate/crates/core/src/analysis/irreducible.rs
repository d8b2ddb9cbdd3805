use std::fmt;

use serde::Serialize;

use super::AnalysisError;
use crate::word::MnWord;

/// A join-irreducible of `W(m, n)`.
///
/// `A(i, j)` is `j` repeated `i` times followed by zeros; `B(i)` is all zeros
/// except the top letter at position `i ≥ 2`. Positions are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Irreducible {
    A { position: usize, level: u32 },
    B { position: usize },
}

impl Irreducible {
    pub fn a(m: u32, n: usize, position: usize, level: u32) -> Result<Self, AnalysisError> {
        if !(1..=n).contains(&position) || !(1..=m).contains(&level) {
            return Err(AnalysisError::OutOfDomain(format!(
                "a({position},{level}) needs position in [1,{n}] and level in [1,{m}]"
            )));
        }
        Ok(Irreducible::A { position, level })
    }

    pub fn b(n: usize, position: usize) -> Result<Self, AnalysisError> {
        if !(2..=n).contains(&position) {
            return Err(AnalysisError::OutOfDomain(format!(
                "b({position}) needs position in [2,{n}]"
            )));
        }
        Ok(Irreducible::B { position })
    }

    pub fn position(self) -> usize {
        match self {
            Irreducible::A { position, .. } | Irreducible::B { position } => position,
        }
    }

    /// Atoms of `W(m, n)`: `a(1,1)` and every `b(i)`.
    pub fn is_atom(self) -> bool {
        matches!(
            self,
            Irreducible::A {
                position: 1,
                level: 1
            } | Irreducible::B { .. }
        )
    }

    pub fn to_word(self, m: u32, n: usize) -> MnWord {
        let mut letters = vec![0; n];
        match self {
            Irreducible::A { position, level } => letters[..position].fill(level),
            Irreducible::B { position } => letters[position - 1] = m + 1,
        }
        MnWord::from_valid(m, letters)
    }

    /// Recognises the shape of a word, if it is one of the irreducibles.
    pub fn from_word(w: &MnWord) -> Option<Self> {
        let letters = w.letters();
        let nonzero: Vec<usize> = (0..letters.len()).filter(|&i| letters[i] != 0).collect();
        let &last = nonzero.last()?;
        if nonzero.len() == 1 && letters[last] == w.top_letter() {
            return Some(Irreducible::B { position: last + 1 });
        }
        let level = letters[0];
        let prefix = last + 1;
        (level != w.top_letter()
            && nonzero.len() == prefix
            && letters[..prefix].iter().all(|&l| l == level))
        .then_some(Irreducible::A {
            position: prefix,
            level,
        })
    }
}

impl fmt::Display for Irreducible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Irreducible::A { position, level } => write!(f, "a({position},{level})"),
            Irreducible::B { position } => write!(f, "b({position})"),
        }
    }
}

/// All `A(i, j)` (by position, then level) followed by all `B(i)`.
pub fn irreducible_catalog(m: u32, n: usize) -> Vec<Irreducible> {
    let a =
        (1..=n).flat_map(|position| (1..=m).map(move |level| Irreducible::A { position, level }));
    let b = (2..=n).map(|position| Irreducible::B { position });
    a.chain(b).collect()
}
