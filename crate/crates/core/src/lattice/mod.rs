//! Generic finite posets and lattices.
//!
//! A [`FinitePoset`] stores its order once as per-element reachability
//! bitsets, so comparability tests are O(1) and set-valued queries are word
//! parallel. [`Lattice`] adds precomputed join and meet tables.

mod canonical;
mod certify;
mod doubling;
mod export;
#[cfg(test)]
pub(crate) mod fixtures;
mod galois;
mod iso;
mod modular;
mod table;

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub use canonical::{
    canonical_join_rep, canonical_meet_rep, is_join_semidistributive, is_meet_semidistributive,
    Verdict,
};
pub use certify::{certify, LatticeCertificate};
pub use doubling::{double_by_interval, interval_bounds, Doubled, Layer};
pub use export::PosetJson;
pub use galois::{galois_graph, Constructability, GaloisDigraph};
pub use iso::are_isomorphic;
pub use modular::{find_left_modular_chain, is_left_modular, left_modular_elements};
pub use table::Lattice;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("not a partial order: {0}")]
    NotAPartialOrder(OrderViolation),
    #[error("not a lattice: elements {x} and {y} have no unique {bound}")]
    NotALattice { x: usize, y: usize, bound: Bound },
    #[error("the empty poset is not a lattice")]
    Empty,
    #[error("element {element} has no canonical {kind} representation")]
    NoCanonicalRep { element: usize, kind: Bound },
    #[error("[{lo}, {hi}] is not an interval")]
    NotAnInterval { lo: usize, hi: usize },
    #[error("element index {0} out of range")]
    UnknownElement(usize),
    #[error("precondition not verified: {0}")]
    PreconditionUnverified(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OrderViolation {
    #[error("element {0} is not related to itself")]
    NotReflexive(usize),
    #[error("elements {0} and {1} are mutually below each other")]
    NotAntisymmetric(usize, usize),
    #[error("{0} ≤ {1} ≤ {2} but not {0} ≤ {2}")]
    NotTransitive(usize, usize, usize),
    #[error("cover relation has a cycle through element {0}")]
    Cycle(usize),
    #[error("cover pair ({0}, {1}) is implied by transitivity")]
    RedundantCover(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Join,
    Meet,
}

impl std::fmt::Display for Bound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Bound::Join => "join",
            Bound::Meet => "meet",
        })
    }
}

/// A finite poset on indexed labels.
#[derive(Debug, Clone)]
pub struct FinitePoset<L> {
    labels: Vec<L>,
    /// Sorted `(lower, upper)` pairs.
    covers: Vec<(usize, usize)>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    /// `up[i]` holds every `j` with `i ≤ j`.
    up: Vec<FixedBitSet>,
    /// `down[i]` holds every `j` with `j ≤ i`.
    down: Vec<FixedBitSet>,
    /// A linear extension (smaller elements first).
    linear: Vec<usize>,
}

impl<L> FinitePoset<L> {
    /// Builds the poset from an order predicate; covers come from transitive
    /// reduction of the full relation.
    pub fn from_leq<F>(labels: Vec<L>, leq: F) -> Result<Self, LatticeError>
    where
        F: Fn(&L, &L) -> bool,
    {
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, a) in labels.iter().enumerate() {
            for (j, b) in labels.iter().enumerate() {
                if leq(a, b) {
                    up[i].insert(j);
                }
            }
        }
        for i in 0..n {
            if !up[i].contains(i) {
                return Err(LatticeError::NotAPartialOrder(
                    OrderViolation::NotReflexive(i),
                ));
            }
            for j in up[i].ones() {
                if j != i && up[j].contains(i) {
                    return Err(LatticeError::NotAPartialOrder(
                        OrderViolation::NotAntisymmetric(i, j),
                    ));
                }
                if !up[j].is_subset(&up[i]) {
                    let k = up[j]
                        .difference(&up[i])
                        .next()
                        .expect("nonempty difference");
                    return Err(LatticeError::NotAPartialOrder(
                        OrderViolation::NotTransitive(i, j, k),
                    ));
                }
            }
        }
        Ok(Self::from_reachability(labels, up))
    }

    /// Builds the poset from a cover relation, which must be acyclic and
    /// transitively reduced.
    pub fn from_covers(labels: Vec<L>, covers: &[(usize, usize)]) -> Result<Self, LatticeError> {
        let n = labels.len();
        let mut upper = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(LatticeError::UnknownElement(a.max(b)));
            }
            upper[a].push(b);
            indegree[b] += 1;
        }
        // Kahn's algorithm; anything left over sits on a cycle.
        let mut order = Vec::with_capacity(n);
        let mut ready: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        while let Some(i) = ready.pop() {
            order.push(i);
            for &j in &upper[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    ready.push(j);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&i| indegree[i] > 0).expect("cycle member");
            return Err(LatticeError::NotAPartialOrder(OrderViolation::Cycle(stuck)));
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &i in order.iter().rev() {
            let mut reach = FixedBitSet::with_capacity(n);
            reach.insert(i);
            for &j in &upper[i] {
                reach.union_with(&up[j]);
            }
            up[i] = reach;
        }
        let poset = Self::from_reachability(labels, up);
        let mut given: Vec<_> = covers.to_vec();
        given.sort_unstable();
        given.dedup();
        if given != poset.covers {
            let extra = given
                .iter()
                .find(|c| poset.covers.binary_search(c).is_err())
                .copied()
                .unwrap_or((0, 0));
            return Err(LatticeError::NotAPartialOrder(
                OrderViolation::RedundantCover(extra.0, extra.1),
            ));
        }
        Ok(poset)
    }

    fn from_reachability(labels: Vec<L>, up: Vec<FixedBitSet>) -> Self {
        let n = labels.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (i, set) in up.iter().enumerate() {
            for j in set.ones() {
                down[j].insert(i);
            }
        }
        let mut covers = Vec::new();
        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        for i in 0..n {
            for j in up[i].ones() {
                if j != i && up[i].intersection_count(&down[j]) == 2 {
                    covers.push((i, j));
                    upper[i].push(j);
                    lower[j].push(i);
                }
            }
        }
        covers.sort_unstable();
        for v in lower.iter_mut() {
            v.sort_unstable();
        }
        let mut linear: Vec<usize> = (0..n).collect();
        linear.sort_by_key(|&i| (down[i].count_ones(..), i));
        FinitePoset {
            labels,
            covers,
            lower,
            upper,
            up,
            down,
            linear,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &L {
        &self.labels[i]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// Elements `≥ i`, as a bitset over indices.
    pub fn up_set(&self, i: usize) -> &FixedBitSet {
        &self.up[i]
    }

    /// Elements `≤ i`, as a bitset over indices.
    pub fn down_set(&self, i: usize) -> &FixedBitSet {
        &self.down[i]
    }

    /// Indices in a linear extension of the order.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }

    pub fn index_of(&self, label: &L) -> Option<usize>
    where
        L: PartialEq,
    {
        self.labels.iter().position(|l| l == label)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.lower[i].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.upper[i].is_empty())
            .collect()
    }

    /// The downward closure `{p : p ≤ x for some x ∈ set}`, sorted.
    pub fn ideal_below(&self, set: &[usize]) -> Result<Vec<usize>, LatticeError> {
        let mut ideal = FixedBitSet::with_capacity(self.len());
        for &x in set {
            if x >= self.len() {
                return Err(LatticeError::UnknownElement(x));
            }
            ideal.union_with(&self.down[x]);
        }
        Ok(ideal.ones().collect())
    }

    /// One less than the largest chain cardinality; `0` for the empty poset.
    pub fn length(&self) -> usize {
        self.heights().into_iter().max().unwrap_or(0)
    }

    /// Longest chain length from a minimal element up to each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut height = vec![0; self.len()];
        for &i in &self.linear {
            height[i] = self.lower[i]
                .iter()
                .map(|&j| height[j] + 1)
                .max()
                .unwrap_or(0);
        }
        height
    }

    /// Least upper bound of `x` and `y`.
    pub fn join_of(&self, x: usize, y: usize) -> Result<usize, LatticeError> {
        self.extremal_bound(x, y, Bound::Join)
    }

    /// Greatest lower bound of `x` and `y`.
    pub fn meet_of(&self, x: usize, y: usize) -> Result<usize, LatticeError> {
        self.extremal_bound(x, y, Bound::Meet)
    }

    fn extremal_bound(&self, x: usize, y: usize, bound: Bound) -> Result<usize, LatticeError> {
        let n = self.len();
        if x >= n || y >= n {
            return Err(LatticeError::UnknownElement(x.max(y)));
        }
        let (common, reach) = match bound {
            Bound::Join => (&self.up[x] & &self.up[y], &self.up),
            Bound::Meet => (&self.down[x] & &self.down[y], &self.down),
        };
        // A least common upper bound has the largest up-set among candidates.
        let best = common
            .ones()
            .max_by_key(|&z| (reach[z].count_ones(..), std::cmp::Reverse(z)));
        match best {
            Some(z) if common.is_subset(&reach[z]) => Ok(z),
            _ => Err(LatticeError::NotALattice { x, y, bound }),
        }
    }

    /// The order-dual poset, on the same indices.
    pub fn dual(&self) -> Self
    where
        L: Clone,
    {
        let mut covers: Vec<_> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        covers.sort_unstable();
        FinitePoset {
            labels: self.labels.clone(),
            covers,
            lower: self.upper.clone(),
            upper: self.lower.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
            linear: self.linear.iter().rev().copied().collect(),
        }
    }

    /// Relabels every element, keeping indices and order.
    pub fn map_labels<M, F>(&self, f: F) -> FinitePoset<M>
    where
        F: FnMut(&L) -> M,
    {
        FinitePoset {
            labels: self.labels.iter().map(f).collect(),
            covers: self.covers.clone(),
            lower: self.lower.clone(),
            upper: self.upper.clone(),
            up: self.up.clone(),
            down: self.down.clone(),
            linear: self.linear.clone(),
        }
    }

    /// The subposet induced on `elements` (in the given order).
    pub fn induced(&self, elements: &[usize]) -> FinitePoset<L>
    where
        L: Clone,
    {
        let labels = elements.iter().map(|&i| self.labels[i].clone()).collect();
        let n = elements.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (a, &i) in elements.iter().enumerate() {
            for (b, &j) in elements.iter().enumerate() {
                if self.leq(i, j) {
                    up[a].insert(b);
                }
            }
        }
        Self::from_reachability(labels, up)
    }

    /// The same poset with element `i` moved to index `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> FinitePoset<L>
    where
        L: Clone,
    {
        let n = self.len();
        let mut inverse = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        self.induced(&inverse)
    }
}

impl FinitePoset<usize> {
    /// The `k`-chain `0 < 1 < … < k-1`.
    pub fn chain(k: usize) -> Self {
        Self::from_leq((0..k).collect(), |a, b| a <= b).expect("chain order")
    }

    pub fn antichain(k: usize) -> Self {
        Self::from_leq((0..k).collect(), |a, b| a == b).expect("antichain order")
    }

    /// Subsets of a `k`-set (as bitmasks) under inclusion.
    pub fn boolean(k: u32) -> Self {
        Self::from_leq((0..1usize << k).collect(), |a, b| a & !b == 0).expect("boolean order")
    }
}

impl<A: Clone, B: Clone> FinitePoset<(A, B)> {
    /// Direct product with the componentwise order.
    pub fn product(left: &FinitePoset<A>, right: &FinitePoset<B>) -> Self {
        let mut labels = Vec::with_capacity(left.len() * right.len());
        let mut index = Vec::with_capacity(labels.capacity());
        for i in 0..left.len() {
            for j in 0..right.len() {
                labels.push((left.labels[i].clone(), right.labels[j].clone()));
                index.push((i, j));
            }
        }
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (a, &(i, j)) in index.iter().enumerate() {
            for (b, &(k, l)) in index.iter().enumerate() {
                if left.leq(i, k) && right.leq(j, l) {
                    up[a].insert(b);
                }
            }
        }
        Self::from_reachability(labels, up)
    }
}

impl<L: Clone> FinitePoset<L> {
    /// Disjoint union; elements of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &FinitePoset<L>) -> Self {
        let offset = self.len();
        let n = offset + other.len();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (target, source) in up.iter_mut().zip(&self.up) {
            target.union_with(source);
        }
        for i in 0..other.len() {
            for j in other.up[i].ones() {
                up[offset + i].insert(offset + j);
            }
        }
        Self::from_reachability(labels, up)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{enumerate, leq, MnWord};

    fn w22() -> FinitePoset<MnWord> {
        FinitePoset::from_leq(enumerate(2, 2).collect(), |a, b| leq(a, b).unwrap()).unwrap()
    }

    #[test]
    fn figure_one_hasse_diagram() {
        let p = w22();
        assert_eq!(p.len(), 9);
        assert_eq!(p.covers().len(), 11);
    }

    #[test]
    fn tiny_posets() {
        let single = FinitePoset::chain(1);
        assert!(single.covers().is_empty());
        assert_eq!(single.length(), 0);
        let chain = FinitePoset::from_leq(vec![1, 2, 3], |a, b| a <= b).unwrap();
        assert_eq!(chain.covers(), &[(0, 1), (1, 2)]);
        assert_eq!(chain.length(), 2);
    }

    #[test]
    fn rejects_non_orders() {
        let err = FinitePoset::from_leq(vec![1, 2], |_, _| true).unwrap_err();
        assert_eq!(
            err,
            LatticeError::NotAPartialOrder(OrderViolation::NotAntisymmetric(0, 1))
        );
        let err = FinitePoset::from_leq(vec![1, 2], |a, b| a < b).unwrap_err();
        assert_eq!(
            err,
            LatticeError::NotAPartialOrder(OrderViolation::NotReflexive(0))
        );
        // 0 ≤ 1 ≤ 2 without 0 ≤ 2.
        let rel = |a: &usize, b: &usize| a == b || (*a, *b) == (0, 1) || (*a, *b) == (1, 2);
        assert!(matches!(
            FinitePoset::from_leq(vec![0usize, 1, 2], rel),
            Err(LatticeError::NotAPartialOrder(
                OrderViolation::NotTransitive(..)
            ))
        ));
    }

    #[test]
    fn from_covers_checks() {
        let p = FinitePoset::from_covers(vec!['a', 'b', 'c'], &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert!(matches!(
            FinitePoset::from_covers(vec!['a', 'b'], &[(0, 1), (1, 0)]),
            Err(LatticeError::NotAPartialOrder(OrderViolation::Cycle(_)))
        ));
        assert_eq!(
            FinitePoset::from_covers(vec!['a', 'b', 'c'], &[(0, 1), (1, 2), (0, 2)]).unwrap_err(),
            LatticeError::NotAPartialOrder(OrderViolation::RedundantCover(0, 2))
        );
    }

    #[test]
    fn joins_and_meets_in_w22_and_w23() {
        let p = w22();
        let idx = |s: &str| p.index_of(&MnWord::parse(2, s).unwrap()).unwrap();
        assert_eq!(p.join_of(idx("10"), idx("03")).unwrap(), idx("13"));

        let q =
            FinitePoset::from_leq(enumerate(2, 3).collect(), |a, b| leq(a, b).unwrap()).unwrap();
        let idx = |s: &str| q.index_of(&MnWord::parse(2, s).unwrap()).unwrap();
        assert_eq!(q.meet_of(idx("220"), idx("130")).unwrap(), idx("110"));
    }

    #[test]
    fn antichain_has_no_join() {
        let p = FinitePoset::antichain(2);
        assert_eq!(
            p.join_of(0, 1).unwrap_err(),
            LatticeError::NotALattice {
                x: 0,
                y: 1,
                bound: Bound::Join
            }
        );
    }

    #[test]
    fn lengths() {
        let w23 =
            FinitePoset::from_leq(enumerate(2, 3).collect(), |a, b| leq(a, b).unwrap()).unwrap();
        assert_eq!(w23.length(), 8);
        assert_eq!(w22().length(), 5);
    }

    #[test]
    fn ideals() {
        let p = w22();
        let idx = |s: &str| p.index_of(&MnWord::parse(2, s).unwrap()).unwrap();
        assert_eq!(p.ideal_below(&[idx("00")]).unwrap(), vec![idx("00")]);
        let all: Vec<usize> = (0..p.len()).collect();
        assert_eq!(p.ideal_below(&all).unwrap(), all);
        assert_eq!(
            p.ideal_below(&[idx("11")]).unwrap(),
            vec![idx("00"), idx("10"), idx("11")]
        );
        assert!(p.ideal_below(&[99]).is_err());
    }

    #[test]
    fn product_and_union() {
        let grid = FinitePoset::product(&FinitePoset::chain(2), &FinitePoset::chain(3));
        assert_eq!(grid.len(), 6);
        assert_eq!(grid.covers().len(), 7);
        assert_eq!(grid.length(), 3);
        let u = FinitePoset::chain(2).disjoint_union(&FinitePoset::chain(1));
        assert_eq!(u.len(), 3);
        assert_eq!(u.covers(), &[(0, 1)]);
        assert_eq!(FinitePoset::boolean(3).covers().len(), 12);
    }

    #[test]
    fn dual_reverses() {
        let c = FinitePoset::chain(3);
        let d = c.dual();
        assert!(d.leq(2, 0));
        assert_eq!(d.covers(), &[(1, 0), (2, 1)]);
        assert_eq!(d.length(), 2);
    }
}
