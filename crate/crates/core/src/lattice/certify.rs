use serde::Serialize;

use super::canonical::{is_join_semidistributive, is_meet_semidistributive};
use super::modular::find_left_modular_chain;
use super::{FinitePoset, Lattice};

/// Structural facts about a finite poset, each computed directly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeCertificate {
    pub length: usize,
    #[serde(rename = "join_irreducibles")]
    pub join_irreducible_count: usize,
    #[serde(rename = "meet_irreducibles")]
    pub meet_irreducible_count: usize,
    #[serde(rename = "extremal")]
    pub is_extremal: bool,
    #[serde(rename = "trim")]
    pub is_trim: bool,
    #[serde(rename = "lattice")]
    pub is_lattice: bool,
    #[serde(rename = "join_semidistributive")]
    pub is_join_semidistributive: bool,
    #[serde(rename = "meet_semidistributive")]
    pub is_meet_semidistributive: bool,
    /// Element indices from bottom to top.
    pub left_modular_chain: Option<Vec<usize>>,
    /// An element without a canonical join representation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub join_semidistributivity_witness: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meet_semidistributivity_witness: Option<usize>,
}

/// Certifies a poset. Irreducible counts use cover degrees, so they are
/// meaningful only when `is_lattice` holds.
///
/// Trimness is reported only together with an explicit left-modular chain of
/// full length; the chain is searched for directly even when extremality and
/// semidistributivity already imply it exists.
pub fn certify<L: Clone + Sync>(poset: &FinitePoset<L>) -> LatticeCertificate {
    let join_irreducible_count = (0..poset.len())
        .filter(|&i| poset.lower_covers(i).len() == 1)
        .count();
    let meet_irreducible_count = (0..poset.len())
        .filter(|&i| poset.upper_covers(i).len() == 1)
        .count();
    let length = poset.length();
    let mut cert = LatticeCertificate {
        length,
        join_irreducible_count,
        meet_irreducible_count,
        is_extremal: false,
        is_trim: false,
        is_lattice: false,
        is_join_semidistributive: false,
        is_meet_semidistributive: false,
        left_modular_chain: None,
        join_semidistributivity_witness: None,
        meet_semidistributivity_witness: None,
    };
    let Ok(lat) = Lattice::new(poset.clone()) else {
        return cert;
    };
    cert.is_lattice = true;
    cert.is_extremal = join_irreducible_count == length && length == meet_irreducible_count;
    let join_sd = is_join_semidistributive(&lat);
    let meet_sd = is_meet_semidistributive(&lat);
    cert.is_join_semidistributive = join_sd.holds();
    cert.is_meet_semidistributive = meet_sd.holds();
    cert.join_semidistributivity_witness = join_sd.witness();
    cert.meet_semidistributivity_witness = meet_sd.witness();
    cert.left_modular_chain = find_left_modular_chain(&lat);
    cert.is_trim = cert.is_extremal && cert.left_modular_chain.is_some();
    cert
}
