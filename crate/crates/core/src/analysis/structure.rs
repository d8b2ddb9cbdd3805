use std::collections::HashMap;

use super::AnalysisError;
use crate::lattice::{are_isomorphic, FinitePoset, Lattice};
use crate::word::{enumerate, lower_covers, MnWord};

/// `W(m, n)` as a verified lattice, built from the word-level cover relation.
pub fn word_lattice(m: u32, n: usize) -> Result<Lattice<MnWord>, AnalysisError> {
    let labels: Vec<MnWord> = enumerate(m, n).collect();
    let index: HashMap<&MnWord, usize> = labels.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut covers = Vec::new();
    for (hi, w) in labels.iter().enumerate() {
        for lower in lower_covers(w) {
            covers.push((index[&lower], hi));
        }
    }
    let poset = FinitePoset::from_covers(labels.clone(), &covers)?;
    Ok(Lattice::new(poset)?)
}

/// Checks that the join-irreducibles of `W(m, n)` form `m × n ⊎ (n − 1)·1`.
pub fn irreducible_poset_shape(m: u32, n: usize) -> Result<bool, AnalysisError> {
    if n == 0 {
        return Err(AnalysisError::OutOfDomain(
            "irreducible poset needs n >= 1".into(),
        ));
    }
    let lat = word_lattice(m, n)?;
    let irreducibles = lat.poset().induced(&lat.join_irreducibles());
    let grid = FinitePoset::product(&FinitePoset::chain(m as usize), &FinitePoset::chain(n));
    let expected = grid
        .map_labels(|&(i, j)| format!("{i},{j}"))
        .disjoint_union(&FinitePoset::antichain(n - 1).map_labels(|i| format!("*{i}")));
    Ok(are_isomorphic(&irreducibles, &expected).is_some())
}

/// A maximal chain of length `(m + 1)n − 1` from bottom to top.
///
/// The first letter climbs from `0` to `m`, after which each later position in
/// turn climbs from `0` to `m + 1`; every step raises a single letter by one.
pub fn longest_chain_witness(m: u32, n: usize) -> Vec<MnWord> {
    let mut letters = vec![0; n];
    let mut chain = vec![MnWord::from_valid(m, letters.clone())];
    for position in 0..n {
        let target = if position == 0 { m } else { m + 1 };
        while letters[position] < target {
            letters[position] += 1;
            chain.push(MnWord::from_valid(m, letters.clone()));
        }
    }
    chain
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::fixtures::words;

    #[test]
    fn matches_leq_construction() {
        for (m, n) in [(0, 3), (1, 3), (2, 3), (3, 2), (2, 0)] {
            let a = word_lattice(m, n).unwrap();
            let b = words(m, n);
            assert_eq!(a.poset().labels(), b.poset().labels());
            assert_eq!(a.poset().covers(), b.poset().covers());
        }
    }

    #[test]
    fn irreducible_shapes() {
        for (m, n) in [(2, 3), (0, 4), (3, 2), (1, 1), (3, 4)] {
            assert!(irreducible_poset_shape(m, n).unwrap(), "W({m},{n})");
        }
        assert!(irreducible_poset_shape(1, 0).is_err());
    }

    #[test]
    fn wrong_shape_is_rejected() {
        // The grid alone (no isolated points) must not match for n >= 2.
        let lat = word_lattice(2, 3).unwrap();
        let irreducibles = lat.poset().induced(&lat.join_irreducibles());
        let grid = FinitePoset::product(&FinitePoset::chain(2), &FinitePoset::chain(4));
        assert!(are_isomorphic(&irreducibles, &grid).is_none());
    }

    #[test]
    fn chain_witnesses() {
        let c: Vec<String> = longest_chain_witness(2, 1)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(c, ["0", "1", "2"]);
        assert_eq!(longest_chain_witness(2, 3).len(), 9);
        assert_eq!(longest_chain_witness(1, 2).len(), 4);
        for m in 0..=3 {
            for n in 1..=4 {
                let lat = word_lattice(m, n).unwrap();
                let chain = longest_chain_witness(m, n);
                assert_eq!(chain.len(), (m as usize + 1) * n);
                assert_eq!(chain.len() - 1, lat.length());
                assert!(chain[0].is_bottom());
                assert_eq!(chain.last().unwrap(), &MnWord::top(m, n).unwrap());
                for pair in chain.windows(2) {
                    assert!(lower_covers(&pair[1]).contains(&pair[0]));
                }
            }
        }
    }
}
