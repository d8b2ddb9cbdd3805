use std::collections::{BTreeMap, BTreeSet};

use super::Irreducible;
use crate::word::MnWord;

/// Canonical join representation of `w`, read off the letters directly.
///
/// Each letter `j` of the support contributes `a(k, j)` where `k` is the last
/// position holding `j`; each top letter at position `i` contributes `b(i)`.
pub fn canonical_join_rep(w: &MnWord) -> BTreeSet<Irreducible> {
    let top = w.top_letter();
    let mut rep = BTreeSet::new();
    let mut last_seen = BTreeMap::new();
    for (i, &l) in w.letters().iter().enumerate() {
        if l == top {
            rep.insert(Irreducible::B { position: i + 1 });
        } else if l > 0 {
            last_seen.insert(l, i + 1);
        }
    }
    rep.extend(
        last_seen
            .into_iter()
            .map(|(level, position)| Irreducible::A { position, level }),
    );
    rep
}

/// Number of atoms in the canonical join representation of `w`.
pub fn atom_count(w: &MnWord) -> usize {
    canonical_join_rep(w)
        .into_iter()
        .filter(|j| j.is_atom())
        .count()
}
