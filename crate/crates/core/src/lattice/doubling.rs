use std::fmt;

use fixedbitset::FixedBitSet;

use super::{FinitePoset, Lattice, LatticeError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Layer {
    Lower = 1,
    Upper = 2,
}

/// Element of a doubled lattice: an original label and its layer in `P × 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Doubled<L> {
    pub label: L,
    /// Index of the element in the lattice that was doubled.
    pub origin: usize,
    pub layer: Layer,
}

impl<L: fmt::Display> fmt::Display for Doubled<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.label, self.layer as u8)
    }
}

/// Returns `(lo, hi)` when `set` equals the interval `[lo, hi]`.
pub fn interval_bounds<L>(poset: &FinitePoset<L>, set: &[usize]) -> Option<(usize, usize)> {
    let n = poset.len();
    let mut members = FixedBitSet::with_capacity(n);
    for &x in set {
        if x >= n {
            return None;
        }
        members.insert(x);
    }
    let lo = members
        .ones()
        .find(|&x| members.is_subset(poset.up_set(x)))?;
    let hi = members
        .ones()
        .find(|&x| members.is_subset(poset.down_set(x)))?;
    let interval = poset.up_set(lo) & poset.down_set(hi);
    (interval == members).then_some((lo, hi))
}

/// Day's doubling of a lattice by the interval `[lo, hi]`.
///
/// The result is the subposet of `P × 2` on `P_{≤X} × {1} ∪ ((P ∖ P_{≤X}) ∪ X) × {2}`
/// where `X = [lo, hi]` (so `P_{≤X}` is the principal ideal of `hi`). It is
/// returned as a verified lattice; elements keep their original labels and
/// indices together with the layer.
pub fn double_by_interval<L: Clone>(
    lat: &Lattice<L>,
    lo: usize,
    hi: usize,
) -> Result<Lattice<Doubled<L>>, LatticeError> {
    let p = lat.poset();
    if lo >= p.len() || hi >= p.len() {
        return Err(LatticeError::UnknownElement(lo.max(hi)));
    }
    if !p.leq(lo, hi) {
        return Err(LatticeError::NotAnInterval { lo, hi });
    }
    let ideal = p.down_set(hi);
    let interval = p.up_set(lo) & ideal;
    let mut elements = Vec::with_capacity(p.len() + interval.count_ones(..));
    for i in 0..p.len() {
        if ideal.contains(i) {
            elements.push(Doubled {
                label: p.label(i).clone(),
                origin: i,
                layer: Layer::Lower,
            });
        }
        if !ideal.contains(i) || interval.contains(i) {
            elements.push(Doubled {
                label: p.label(i).clone(),
                origin: i,
                layer: Layer::Upper,
            });
        }
    }
    let doubled = FinitePoset::from_leq(elements, |a, b| {
        p.leq(a.origin, b.origin) && a.layer <= b.layer
    })?;
    Lattice::new(doubled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::fixtures::{idx, words};
    use crate::lattice::{are_isomorphic, certify};

    #[test]
    fn singleton_doubles_to_two_chain() {
        let one = Lattice::new(FinitePoset::chain(1)).unwrap();
        let d = double_by_interval(&one, 0, 0).unwrap();
        assert!(are_isomorphic(d.poset(), &FinitePoset::chain(2)).is_some());
    }

    #[test]
    fn two_chain_by_top_gives_three_chain() {
        let two = Lattice::new(FinitePoset::chain(2)).unwrap();
        let d = double_by_interval(&two, 1, 1).unwrap();
        assert_eq!(d.len(), 3);
        assert!(are_isomorphic(d.poset(), &FinitePoset::chain(3)).is_some());
    }

    #[test]
    fn rejects_reversed_bounds() {
        let two = Lattice::new(FinitePoset::chain(2)).unwrap();
        assert_eq!(
            double_by_interval(&two, 1, 0).unwrap_err(),
            LatticeError::NotAnInterval { lo: 1, hi: 0 }
        );
    }

    #[test]
    fn size_grows_by_interval() {
        let l = words(2, 2);
        let (lo, hi) = (idx(&l, "11"), idx(&l, "23"));
        let interval = (l.poset().up_set(lo) & l.poset().down_set(hi)).count_ones(..);
        let d = double_by_interval(&l, lo, hi).unwrap();
        assert_eq!(d.len(), l.len() + interval);
        assert!(certify(d.poset()).is_lattice);
    }

    #[test]
    fn recognises_intervals() {
        let l = words(2, 2);
        let p = l.poset();
        let set: Vec<usize> = ["22", "23"].iter().map(|s| idx(&l, s)).collect();
        assert_eq!(
            interval_bounds(p, &set),
            Some((idx(&l, "22"), idx(&l, "23")))
        );
        let gap: Vec<usize> = ["00", "11"].iter().map(|s| idx(&l, s)).collect();
        assert_eq!(interval_bounds(p, &gap), None);
        assert_eq!(interval_bounds(p, &[]), None);
    }
}
