//! Deliberately broken subjects for checking that the suite notices.

use crate::word::{MnWord, WordError};

/// Componentwise minimum with the prefix-minimum repair left out.
pub fn meet_without_prefix_min(u: &MnWord, v: &MnWord) -> Result<MnWord, WordError> {
    let letters = u
        .letters()
        .iter()
        .zip(v.letters())
        .map(|(&a, &b)| a.min(b))
        .collect();
    MnWord::new(u.m(), letters)
}

/// Drops the cover obtained by lowering the last top letter.
pub fn covers_missing_last_top(v: &MnWord) -> Vec<MnWord> {
    let mut covers = crate::word::lower_covers(v);
    if let Some(i) = v.letters().iter().rposition(|&l| l == v.top_letter()) {
        covers.retain(|c| c.letters()[i] == v.top_letter());
    }
    covers
}
