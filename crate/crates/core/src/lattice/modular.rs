use rayon::prelude::*;

use super::{Lattice, LatticeError};

/// `x` is left modular when `(p ∨ x) ∧ q = p ∨ (x ∧ q)` for all `p < q`.
pub fn is_left_modular<L>(lat: &Lattice<L>, x: usize) -> Result<bool, LatticeError> {
    if x >= lat.len() {
        return Err(LatticeError::UnknownElement(x));
    }
    Ok(left_modular_unchecked(lat, x))
}

fn left_modular_unchecked<L>(lat: &Lattice<L>, x: usize) -> bool {
    let p = lat.poset();
    (0..lat.len()).all(|lo| {
        let lo_x = lat.join(lo, x);
        p.up_set(lo)
            .ones()
            .filter(|&hi| hi != lo)
            .all(|hi| lat.meet(lo_x, hi) == lat.join(lo, lat.meet(x, hi)))
    })
}

/// Flags, indexed by element, telling which elements are left modular.
pub fn left_modular_elements<L: Sync>(lat: &Lattice<L>) -> Vec<bool> {
    (0..lat.len())
        .into_par_iter()
        .map(|x| left_modular_unchecked(lat, x))
        .collect()
}

/// A bottom-to-top chain of length `ℓ(P)` made of left-modular elements.
pub fn find_left_modular_chain<L: Sync>(lat: &Lattice<L>) -> Option<Vec<usize>> {
    chain_through(lat, &left_modular_elements(lat))
}

/// Longest cover path from bottom to top through flagged elements, returned
/// only if it reaches the full length of the lattice.
pub(crate) fn chain_through<L>(lat: &Lattice<L>, allowed: &[bool]) -> Option<Vec<usize>> {
    let p = lat.poset();
    let (bottom, top) = (lat.bottom(), lat.top());
    if !allowed[bottom] || !allowed[top] {
        return None;
    }
    // best[i] = longest allowed path from bottom ending at i.
    let mut best: Vec<Option<usize>> = vec![None; lat.len()];
    let mut prev = vec![usize::MAX; lat.len()];
    best[bottom] = Some(0);
    for &i in p.linear_extension() {
        if !allowed[i] {
            continue;
        }
        for &below in p.lower_covers(i) {
            if let Some(len) = best[below] {
                if best[i].is_none_or(|b| len + 1 > b) {
                    best[i] = Some(len + 1);
                    prev[i] = below;
                }
            }
        }
    }
    if best[top] != Some(lat.length()) {
        return None;
    }
    let mut chain = vec![top];
    while *chain.last().unwrap() != bottom {
        chain.push(prev[*chain.last().unwrap()]);
    }
    chain.reverse();
    Some(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::fixtures::{diamond_m3, pentagon_n5, words};
    use crate::lattice::FinitePoset;

    #[test]
    fn chains_are_left_modular() {
        let c = Lattice::new(FinitePoset::chain(5)).unwrap();
        assert!(left_modular_elements(&c).iter().all(|&f| f));
        assert_eq!(find_left_modular_chain(&c), Some(vec![0, 1, 2, 3, 4]));
    }

    #[test]
    fn pentagon() {
        // 0 < a < b < 1, 0 < c < 1.
        let n5 = pentagon_n5();
        let flags = left_modular_elements(&n5);
        // p = a < q = b: (a ∨ c) ∧ b = b but a ∨ (c ∧ b) = a.
        assert!(!flags[3]);
        assert!(flags[1] && flags[2]);
        assert!(!is_left_modular(&n5, 3).unwrap());
        assert_eq!(find_left_modular_chain(&n5), Some(vec![0, 1, 2, 4]));
        assert!(is_left_modular(&n5, 9).is_err());
    }

    #[test]
    fn diamond_is_modular() {
        let m3 = diamond_m3();
        assert!(left_modular_elements(&m3).iter().all(|&f| f));
    }

    #[test]
    fn w23_has_full_left_modular_chain() {
        let l = words(2, 3);
        let chain = find_left_modular_chain(&l).unwrap();
        assert_eq!(chain.len(), 9);
        for pair in chain.windows(2) {
            assert!(l.poset().lower_covers(pair[1]).contains(&pair[0]));
        }
        for &x in &chain {
            assert!(is_left_modular(&l, x).unwrap());
        }
    }
}
