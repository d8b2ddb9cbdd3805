use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use super::{Bound, Lattice, LatticeError};

/// Outcome of a property check that can fail at a specific element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    FailsAt(usize),
}

impl Verdict {
    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }

    pub fn witness(self) -> Option<usize> {
        match self {
            Verdict::Holds => None,
            Verdict::FailsAt(x) => Some(x),
        }
    }
}

/// The canonical join representation of `x`, sorted by index.
///
/// Every join representation can be refined to an antichain of
/// join-irreducibles without enlarging its ideal, so the search runs over
/// those antichains and keeps the inclusion-minimal generated ideals. The
/// representation exists iff exactly one minimal ideal remains.
pub fn canonical_join_rep<L>(lat: &Lattice<L>, x: usize) -> Result<Vec<usize>, LatticeError> {
    canonical_rep(lat, x, Bound::Join)
}

/// The canonical meet representation of `x` (canonical join rep in the dual).
pub fn canonical_meet_rep<L>(lat: &Lattice<L>, x: usize) -> Result<Vec<usize>, LatticeError> {
    canonical_rep(lat, x, Bound::Meet)
}

/// Every element has a canonical join representation.
pub fn is_join_semidistributive<L: Sync>(lat: &Lattice<L>) -> Verdict {
    semidistributivity(lat, Bound::Join)
}

/// Every element has a canonical meet representation.
pub fn is_meet_semidistributive<L: Sync>(lat: &Lattice<L>) -> Verdict {
    semidistributivity(lat, Bound::Meet)
}

fn semidistributivity<L: Sync>(lat: &Lattice<L>, bound: Bound) -> Verdict {
    match (0..lat.len())
        .into_par_iter()
        .find_first(|&x| canonical_rep(lat, x, bound).is_err())
    {
        Some(x) => Verdict::FailsAt(x),
        None => Verdict::Holds,
    }
}

struct Search<'a, L> {
    lat: &'a Lattice<L>,
    bound: Bound,
    target: usize,
    /// Irreducibles on the correct side of the target.
    candidates: Vec<usize>,
    chosen: Vec<usize>,
    /// (generated ideal, representation) for every representation found.
    found: Vec<(FixedBitSet, Vec<usize>)>,
}

impl<L> Search<'_, L> {
    fn below(&self, a: usize, b: usize) -> bool {
        match self.bound {
            Bound::Join => self.lat.leq(a, b),
            Bound::Meet => self.lat.leq(b, a),
        }
    }

    fn ideal(&self, set: &[usize]) -> FixedBitSet {
        let p = self.lat.poset();
        let mut ideal = FixedBitSet::with_capacity(p.len());
        for &a in set {
            match self.bound {
                Bound::Join => ideal.union_with(p.down_set(a)),
                Bound::Meet => ideal.union_with(p.up_set(a)),
            }
        }
        ideal
    }

    fn run(&mut self, from: usize, current: usize) {
        if current == self.target {
            let ideal = self.ideal(&self.chosen);
            self.found.push((ideal, self.chosen.clone()));
            return;
        }
        for k in from..self.candidates.len() {
            let j = self.candidates[k];
            // Irreducibles already below the running bound only enlarge the ideal.
            if self.below(j, current) {
                continue;
            }
            if self
                .chosen
                .iter()
                .any(|&c| self.below(c, j) || self.below(j, c))
            {
                continue;
            }
            self.chosen.push(j);
            let next = self.lat.bound(current, j, self.bound);
            self.run(k + 1, next);
            self.chosen.pop();
        }
    }
}

fn canonical_rep<L>(lat: &Lattice<L>, x: usize, bound: Bound) -> Result<Vec<usize>, LatticeError> {
    if x >= lat.len() {
        return Err(LatticeError::UnknownElement(x));
    }
    let (irreducibles, start) = match bound {
        Bound::Join => (lat.join_irreducibles(), lat.bottom()),
        Bound::Meet => (lat.meet_irreducibles(), lat.top()),
    };
    let mut search = Search {
        lat,
        bound,
        target: x,
        candidates: Vec::new(),
        chosen: Vec::new(),
        found: Vec::new(),
    };
    search.candidates = irreducibles
        .into_iter()
        .filter(|&j| search.below(j, x))
        .collect();
    search.run(0, start);

    let found = search.found;
    let minimal: Vec<usize> = (0..found.len())
        .filter(|&i| {
            !found
                .iter()
                .any(|(other, _)| other != &found[i].0 && other.is_subset(&found[i].0))
        })
        .collect();
    let first = minimal
        .first()
        .copied()
        .ok_or(LatticeError::NoCanonicalRep {
            element: x,
            kind: bound,
        })?;
    // Antichains are determined by their ideals, so distinct minimal entries
    // mean distinct minimal ideals.
    if minimal.iter().any(|&i| found[i].0 != found[first].0) {
        return Err(LatticeError::NoCanonicalRep {
            element: x,
            kind: bound,
        });
    }
    let mut rep = found[first].1.clone();
    rep.sort_unstable();
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::fixtures::{diamond_m3, idx, pentagon_n5, words};

    #[test]
    fn bottom_and_irreducibles() {
        let l = words(2, 3);
        assert!(canonical_join_rep(&l, l.bottom()).unwrap().is_empty());
        for j in l.join_irreducibles() {
            assert_eq!(canonical_join_rep(&l, j).unwrap(), vec![j]);
        }
    }

    #[test]
    fn canonical_rep_of_231() {
        let l = words(2, 3);
        let rep = canonical_join_rep(&l, idx(&l, "231")).unwrap();
        let mut labels: Vec<String> = rep
            .iter()
            .map(|&i| l.poset().label(i).to_string())
            .collect();
        labels.sort();
        assert_eq!(labels, ["030", "111", "200"]);
    }

    #[test]
    fn representations_join_back() {
        let l = words(2, 3);
        for x in 0..l.len() {
            let rep = canonical_join_rep(&l, x).unwrap();
            assert_eq!(l.join_all(rep.iter().copied()), x);
            let rep = canonical_meet_rep(&l, x).unwrap();
            assert_eq!(l.meet_all(rep.iter().copied()), x);
        }
    }

    #[test]
    fn semidistributivity() {
        let l = words(2, 3);
        assert!(is_join_semidistributive(&l).holds());
        assert!(is_meet_semidistributive(&l).holds());
        let m3 = diamond_m3();
        assert_eq!(is_join_semidistributive(&m3), Verdict::FailsAt(4));
        assert_eq!(is_meet_semidistributive(&m3), Verdict::FailsAt(0));
        assert!(matches!(
            canonical_join_rep(&m3, 4),
            Err(LatticeError::NoCanonicalRep {
                element: 4,
                kind: Bound::Join
            })
        ));
        // N5 is semidistributive.
        let n5 = pentagon_n5();
        assert!(is_join_semidistributive(&n5).holds());
        assert!(is_meet_semidistributive(&n5).holds());
    }

    #[test]
    fn small_word_lattices_are_semidistributive() {
        for m in 0..=3 {
            for n in 0..=4 {
                let l = words(m, n);
                assert!(is_join_semidistributive(&l).holds(), "W({m},{n})");
                assert!(is_meet_semidistributive(&l).holds(), "W({m},{n})");
            }
        }
    }
}
