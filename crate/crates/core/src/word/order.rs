use std::collections::BTreeSet;

use super::{MnWord, WordError};

/// Componentwise comparison `u ≤ v`.
pub fn leq(u: &MnWord, v: &MnWord) -> Result<bool, WordError> {
    u.same_shape(v)?;
    Ok(u.letters.iter().zip(&v.letters).all(|(a, b)| a <= b))
}

/// Componentwise maximum, which is always a valid word.
pub fn join(u: &MnWord, v: &MnWord) -> Result<MnWord, WordError> {
    u.same_shape(v)?;
    let letters = u
        .letters
        .iter()
        .zip(&v.letters)
        .map(|(&a, &b)| a.max(b))
        .collect();
    Ok(MnWord::from_valid(u.m, letters))
}

/// Greatest common lower bound.
///
/// Takes the componentwise minimum `c` and lowers every non-top letter to the
/// minimum of `c` over the prefix ending at that position. Any common lower
/// bound `x` satisfies `x ≤ c`, and a support letter of `x` is bounded by all
/// earlier letters of `x`, hence by the prefix minimum of `c`; top letters of
/// `x` force `c_i = m+1`. So every common lower bound lies below the result,
/// and the result is itself a valid word.
pub fn meet(u: &MnWord, v: &MnWord) -> Result<MnWord, WordError> {
    u.same_shape(v)?;
    Ok(MnWord::from_valid(
        u.m,
        meet_letters(u.m, &u.letters, &v.letters),
    ))
}

pub(crate) fn meet_letters(m: u32, u: &[u32], v: &[u32]) -> Vec<u32> {
    let top = m + 1;
    let mut prefix_min = u32::MAX;
    u.iter()
        .zip(v)
        .map(|(&a, &b)| {
            let c = a.min(b);
            prefix_min = prefix_min.min(c);
            if c == top {
                top
            } else {
                prefix_min
            }
        })
        .collect()
}

/// All words covered by `v`, ordered lexicographically.
///
/// Each top letter at position `i` drops to the smallest letter before it
/// (non-top letters are weakly decreasing, so this is the nearest non-top
/// letter to its left), and for each support letter `s` its last occurrence
/// drops to `s - 1`.
pub fn lower_covers(v: &MnWord) -> Vec<MnWord> {
    let top = v.top_letter();
    let letters = v.letters();
    let mut covers = Vec::new();
    let mut prefix_min = top;
    for (i, &l) in letters.iter().enumerate() {
        if l == top {
            let mut lowered = letters.to_vec();
            lowered[i] = prefix_min;
            covers.push(MnWord::from_valid(v.m, lowered));
        }
        prefix_min = prefix_min.min(l);
    }
    for s in support(v) {
        let last = letters
            .iter()
            .rposition(|&l| l == s)
            .expect("support letter occurs");
        let mut lowered = letters.to_vec();
        lowered[last] = s - 1;
        covers.push(MnWord::from_valid(v.m, lowered));
    }
    covers.sort();
    covers
}

/// Letters strictly between `0` and `m + 1` occurring in `v`.
pub(crate) fn support(v: &MnWord) -> BTreeSet<u32> {
    v.letters()
        .iter()
        .copied()
        .filter(|&l| l != 0 && l != v.top_letter())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct WordStats {
    /// `None` for the empty word.
    pub min_letter: Option<u32>,
    pub support: BTreeSet<u32>,
    /// Positions `i ≥ 2` holding the top letter.
    pub top_count: usize,
    /// Number of lower covers.
    pub in_degree: usize,
}

pub fn word_stats(v: &MnWord) -> WordStats {
    let support = support(v);
    let top_count = v.letters().iter().filter(|&&l| l == v.top_letter()).count();
    WordStats {
        min_letter: v.letters().iter().copied().min(),
        in_degree: top_count + support.len(),
        support,
        top_count,
    }
}
