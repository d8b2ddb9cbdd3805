use super::{FinitePoset, Lattice};
use crate::word::{enumerate, leq, MnWord};

pub(crate) fn diamond_m3() -> Lattice<&'static str> {
    let p = FinitePoset::from_covers(
        vec!["0", "a", "b", "c", "1"],
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
    )
    .unwrap();
    Lattice::new(p).unwrap()
}

/// `0 < a < b < 1` and `0 < c < 1`.
pub(crate) fn pentagon_n5() -> Lattice<&'static str> {
    let p = FinitePoset::from_covers(
        vec!["0", "a", "b", "c", "1"],
        &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
    )
    .unwrap();
    Lattice::new(p).unwrap()
}

pub(crate) fn words(m: u32, n: usize) -> Lattice<MnWord> {
    Lattice::new(
        FinitePoset::from_leq(enumerate(m, n).collect(), |a, b| leq(a, b).unwrap()).unwrap(),
    )
    .unwrap()
}

pub(crate) fn idx(l: &Lattice<MnWord>, s: &str) -> usize {
    let m = l.poset().label(0).m();
    l.poset().index_of(&MnWord::parse(m, s).unwrap()).unwrap()
}
