//! Construction, analysis and certification of the (m,n)-word lattices `W(m,n)`.
//!
//! - [`word`]: validated words, componentwise order, join/meet, covers, counts.
//! - [`lattice`]: generic finite posets and lattices (irreducibles, canonical
//!   join representations, semidistributivity, trimness, interval doubling,
//!   Galois graphs, isomorphism).
//! - [`analysis`]: results specific to `W(m,n)` computed from closed forms.
//! - [`oracle`]: slow brute-force references and the cross-check suite.

pub mod analysis;
pub mod lattice;
pub mod oracle;
pub mod word;

pub use word::{MnWord, WordError};
