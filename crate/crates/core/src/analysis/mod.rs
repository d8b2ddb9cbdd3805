//! Results specific to `W(m, n)`: explicit irreducibles, canonical join
//! representations, the H-triangle, in-degree counts, the Galois graph and the
//! construction by interval doubling.

mod canonical;
mod counting;
mod doubling;
mod galois;
mod htriangle;
mod irreducible;
mod structure;

use thiserror::Error;

use crate::lattice::LatticeError;
use crate::word::WordError;

pub use canonical::{atom_count, canonical_join_rep};
pub use counting::{
    conjectured_in_degree_count, in_degree_count, in_degree_distribution,
    refined_count_closed_form, refined_distribution, scan_conjecture, ConjectureReport,
    ConjectureWitness,
};
pub use doubling::{build_by_doubling, DoublingStep, DoublingTrace};
pub use galois::{galois_graph_direct, galois_graph_generic, GaloisGraph};
pub use htriangle::{
    h_coefficient_closed_form, h_triangle, h_triangle_closed_form, h_triangle_mismatches, HEntry,
    HTriangle,
};
pub use irreducible::{irreducible_catalog, Irreducible};
pub use structure::{irreducible_poset_shape, longest_chain_witness, word_lattice};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("argument out of domain: {0}")]
    OutOfDomain(String),
    #[error("doubling pipeline disagrees with enumeration: {0}")]
    PipelineMismatch(String),
    #[error("W({m},{n}) has {size} elements, above the budget of {budget}")]
    BudgetExceeded {
        m: u32,
        n: usize,
        size: String,
        budget: u64,
    },
}
