use super::{Bound, FinitePoset, LatticeError};

/// A finite lattice with precomputed join and meet tables.
///
/// Tables take `2·|P|²` words of memory, so this is meant for lattices of
/// up to a few thousand elements.
#[derive(Debug, Clone)]
pub struct Lattice<L> {
    poset: FinitePoset<L>,
    joins: Vec<u32>,
    meets: Vec<u32>,
    bottom: usize,
    top: usize,
}

impl<L> Lattice<L> {
    /// Verifies that every pair has a join and a meet.
    pub fn new(poset: FinitePoset<L>) -> Result<Self, LatticeError> {
        let n = poset.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut joins = vec![0u32; n * n];
        let mut meets = vec![0u32; n * n];
        for x in 0..n {
            for y in x..n {
                let j = poset.join_of(x, y)? as u32;
                let m = poset.meet_of(x, y)? as u32;
                joins[x * n + y] = j;
                joins[y * n + x] = j;
                meets[x * n + y] = m;
                meets[y * n + x] = m;
            }
        }
        let bottom = poset.linear_extension()[0];
        let top = poset.linear_extension()[n - 1];
        Ok(Lattice {
            poset,
            joins,
            meets,
            bottom,
            top,
        })
    }

    pub fn poset(&self) -> &FinitePoset<L> {
        &self.poset
    }

    pub fn into_poset(self) -> FinitePoset<L> {
        self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.poset.leq(x, y)
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.joins[x * self.len() + y] as usize
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meets[x * self.len() + y] as usize
    }

    pub(crate) fn bound(&self, x: usize, y: usize, bound: Bound) -> usize {
        match bound {
            Bound::Join => self.join(x, y),
            Bound::Meet => self.meet(x, y),
        }
    }

    /// Join of a set; the bottom for the empty set.
    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.poset.lower_covers(i).len() == 1)
            .collect()
    }

    /// Elements with exactly one upper cover.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.poset.upper_covers(i).len() == 1)
            .collect()
    }

    pub fn length(&self) -> usize {
        self.poset.length()
    }

    /// The order dual, with joins and meets exchanged.
    pub fn dual(&self) -> Lattice<L>
    where
        L: Clone,
    {
        Lattice {
            poset: self.poset.dual(),
            joins: self.meets.clone(),
            meets: self.joins.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::fixtures::{diamond_m3, words};
    use crate::word::MnWord;

    #[test]
    fn rejects_non_lattices() {
        assert!(matches!(
            Lattice::new(FinitePoset::antichain(2)),
            Err(LatticeError::NotALattice { .. })
        ));
        assert_eq!(
            Lattice::new(FinitePoset::<usize>::chain(0)).unwrap_err(),
            LatticeError::Empty
        );
    }

    #[test]
    fn irreducibles() {
        let w23 = words(2, 3);
        assert_eq!(w23.join_irreducibles().len(), 8);
        assert_eq!(w23.meet_irreducibles().len(), 8);
        let labels: Vec<String> = w23
            .join_irreducibles()
            .into_iter()
            .map(|i| w23.poset().label(i).to_string())
            .collect();
        assert_eq!(
            labels,
            ["003", "030", "100", "110", "111", "200", "220", "222"]
        );
        assert_eq!(
            w23.poset().label(w23.bottom()),
            &MnWord::bottom(2, 3).unwrap()
        );
        assert_eq!(w23.poset().label(w23.top()), &MnWord::top(2, 3).unwrap());

        let b2 = Lattice::new(FinitePoset::boolean(2)).unwrap();
        assert_eq!(b2.join_irreducibles(), vec![1, 2]);
        assert_eq!(diamond_m3().join_irreducibles().len(), 3);
    }

    #[test]
    fn dual_swaps_tables() {
        let l = diamond_m3();
        let d = l.dual();
        assert_eq!(d.join(1, 2), 0);
        assert_eq!(d.meet(1, 2), 4);
        assert_eq!(d.bottom(), 4);
    }
}
