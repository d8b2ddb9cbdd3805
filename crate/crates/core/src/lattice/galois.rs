use super::{Lattice, LatticeCertificate, LatticeError};

/// Caller's statement about interval-constructability, which cannot be
/// checked for an arbitrary lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constructability {
    Asserted,
    Unknown,
}

/// Directed graph on join-irreducibles, by element index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisDigraph {
    pub vertices: Vec<usize>,
    /// Sorted `(from, to)` pairs of element indices.
    pub edges: Vec<(usize, usize)>,
}

/// Galois graph of an extremal, interval-constructable lattice: `j → j'`
/// iff `j ≠ j'` and `j' ≤ j'_* ∨ j`, where `j'_*` is the unique lower cover.
pub fn galois_graph<L>(
    lat: &Lattice<L>,
    certificate: Option<&LatticeCertificate>,
    constructability: Constructability,
) -> Result<GaloisDigraph, LatticeError> {
    match certificate {
        None => {
            return Err(LatticeError::PreconditionUnverified(
                "no extremality certificate supplied".into(),
            ))
        }
        Some(c) if !c.is_extremal => {
            return Err(LatticeError::PreconditionUnverified(
                "lattice is not certified extremal".into(),
            ))
        }
        Some(c) if c.length != lat.length() => {
            return Err(LatticeError::PreconditionUnverified(
                "certificate does not belong to this lattice".into(),
            ))
        }
        Some(_) => {}
    }
    if constructability != Constructability::Asserted {
        return Err(LatticeError::PreconditionUnverified(
            "interval-constructability not asserted".into(),
        ));
    }
    let vertices = lat.join_irreducibles();
    let star = |j: usize| lat.poset().lower_covers(j)[0];
    let mut edges = Vec::new();
    for &j in &vertices {
        for &target in &vertices {
            if j != target && lat.leq(target, lat.join(star(target), j)) {
                edges.push((j, target));
            }
        }
    }
    edges.sort_unstable();
    Ok(GaloisDigraph { vertices, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::fixtures::{diamond_m3, words};
    use crate::lattice::{certify, FinitePoset};

    #[test]
    fn w23_has_sixteen_arrows() {
        let l = words(2, 3);
        let cert = certify(l.poset());
        let g = galois_graph(&l, Some(&cert), Constructability::Asserted).unwrap();
        assert_eq!(g.vertices.len(), 8);
        assert_eq!(g.edges.len(), 16);
    }

    #[test]
    fn chain_edges_point_down() {
        let c = Lattice::new(FinitePoset::chain(5)).unwrap();
        let cert = certify(c.poset());
        let g = galois_graph(&c, Some(&cert), Constructability::Asserted).unwrap();
        let expected: Vec<(usize, usize)> =
            (1..5).flat_map(|j| (1..j).map(move |k| (j, k))).collect();
        let mut expected = expected;
        expected.sort_unstable();
        assert_eq!(g.edges, expected);
    }

    #[test]
    fn preconditions() {
        let l = words(1, 2);
        assert!(matches!(
            galois_graph(&l, None, Constructability::Asserted),
            Err(LatticeError::PreconditionUnverified(_))
        ));
        let cert = certify(l.poset());
        assert!(galois_graph(&l, Some(&cert), Constructability::Unknown).is_err());
        let m3 = diamond_m3();
        let cert = certify(m3.poset());
        assert!(galois_graph(&m3, Some(&cert), Constructability::Asserted).is_err());
    }
}
