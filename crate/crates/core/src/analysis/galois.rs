use std::fmt::Write;

use serde::Serialize;

use super::{irreducible_catalog, word_lattice, AnalysisError, Irreducible};
use crate::lattice::{certify, galois_graph, Constructability};

/// Galois graph of `W(m, n)` on its explicit irreducibles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaloisGraph {
    pub m: u32,
    pub n: usize,
    pub vertices: Vec<Irreducible>,
    /// Sorted `(from, to)` pairs of indices into `vertices`.
    pub edges: Vec<(usize, usize)>,
}

impl GaloisGraph {
    pub fn edge_labels(&self) -> Vec<(Irreducible, Irreducible)> {
        self.edges
            .iter()
            .map(|&(s, t)| (self.vertices[s], self.vertices[t]))
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph \"Galois W({},{})\" {{", self.m, self.n).unwrap();
        for (i, j) in self.vertices.iter().enumerate() {
            writeln!(out, "  {i} [label=\"{j} {}\"];", j.to_word(self.m, self.n)).unwrap();
        }
        for &(s, t) in &self.edges {
            writeln!(out, "  {s} -> {t};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn arrow(from: Irreducible, to: Irreducible) -> bool {
    match (from, to) {
        (
            Irreducible::A {
                position: s,
                level: t,
            },
            Irreducible::A {
                position: s2,
                level: t2,
            },
        ) => (s, t) != (s2, t2) && s >= s2 && t >= t2,
        (Irreducible::B { position: s }, Irreducible::A { position: s2, .. }) => s == s2,
        _ => false,
    }
}

/// The graph given by the explicit arrow rule on the irreducible catalog.
pub fn galois_graph_direct(m: u32, n: usize) -> GaloisGraph {
    let vertices = irreducible_catalog(m, n);
    let mut edges = Vec::new();
    for (i, &from) in vertices.iter().enumerate() {
        for (k, &to) in vertices.iter().enumerate() {
            if arrow(from, to) {
                edges.push((i, k));
            }
        }
    }
    GaloisGraph {
        m,
        n,
        vertices,
        edges,
    }
}

/// The generic Galois graph of the enumerated lattice, relabeled by
/// irreducible and laid out on the catalog order.
pub fn galois_graph_generic(m: u32, n: usize) -> Result<GaloisGraph, AnalysisError> {
    let lat = word_lattice(m, n)?;
    let cert = certify(lat.poset());
    let generic = galois_graph(&lat, Some(&cert), Constructability::Asserted)?;
    let vertices = irreducible_catalog(m, n);
    let position = |element: usize| -> Result<usize, AnalysisError> {
        let word = lat.poset().label(element);
        Irreducible::from_word(word)
            .and_then(|j| vertices.iter().position(|&v| v == j))
            .ok_or_else(|| {
                AnalysisError::OutOfDomain(format!("{word} is not in the irreducible catalog"))
            })
    };
    let mut edges = generic
        .edges
        .iter()
        .map(|&(s, t)| Ok((position(s)?, position(t)?)))
        .collect::<Result<Vec<_>, AnalysisError>>()?;
    edges.sort_unstable();
    Ok(GaloisGraph {
        m,
        n,
        vertices,
        edges,
    })
}
