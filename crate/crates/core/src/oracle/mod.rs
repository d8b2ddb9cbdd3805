//! Brute-force references and the cross-check suite.
//!
//! [`brute`] recomputes everything from the definitions by exhaustive search.
//! [`run_suite`] compares the fast implementations against it instance by
//! instance, in order of increasing `n` and then `m`, so the first
//! disagreement reported is the smallest one found.

pub mod brute;
pub mod faults;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::analysis::{
    build_by_doubling, canonical_join_rep, galois_graph_direct, h_triangle, in_degree_count,
    refined_count_closed_form, word_lattice, Irreducible,
};
use crate::lattice::certify;
use crate::word::{count_topless, count_words, enumerate, lower_covers, meet, MnWord, WordError};

pub use brute::{oracle_covers, oracle_meet, OracleLattice};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("words have different shapes")]
    ShapeMismatch,
    #[error("no unique bound for {0}")]
    NoUniqueBound(String),
}

/// Outcome of one cross-check on one `(m, n)` instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub subject: String,
    pub instance: String,
    pub agreed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl OracleReport {
    fn new(subject: &str, m: u32, n: usize, witness: Option<String>) -> Self {
        OracleReport {
            subject: subject.to_owned(),
            instance: format!("m={m},n={n}"),
            agreed: witness.is_none(),
            witness,
        }
    }
}

/// One JSON object per line.
pub fn to_json_lines(reports: &[OracleReport]) -> String {
    reports
        .iter()
        .map(|r| serde_json::to_string(r).expect("reports serialize") + "\n")
        .collect()
}

pub fn first_disagreement(reports: &[OracleReport]) -> Option<&OracleReport> {
    reports.iter().find(|r| !r.agreed)
}

/// The word-level operations under test, swappable for fault injection.
#[derive(Clone, Copy)]
pub struct Subjects {
    pub meet: fn(&MnWord, &MnWord) -> Result<MnWord, WordError>,
    pub lower_covers: fn(&MnWord) -> Vec<MnWord>,
    pub canonical_join_rep: fn(&MnWord) -> BTreeSet<Irreducible>,
}

impl Default for Subjects {
    fn default() -> Self {
        Subjects {
            meet,
            lower_covers,
            canonical_join_rep,
        }
    }
}

/// Instances `(m, n)` with `m ≤ max_m`, `n ≤ max_n`, ordered by `(n, m)` and
/// cut off once the total number of words would exceed `budget`.
pub fn plan_instances(max_m: u32, max_n: usize, budget: u64) -> Vec<(u32, usize)> {
    let mut all: Vec<(u32, usize)> = (0..=max_n)
        .flat_map(|n| (0..=max_m).map(move |m| (m, n)))
        .collect();
    all.sort_by_key(|&(m, n)| (n, m));
    let mut spent = 0u64;
    let mut planned = Vec::new();
    for (m, n) in all {
        let size = brute::words(m, n).len() as u64;
        if spent + size > budget {
            break;
        }
        spent += size;
        planned.push((m, n));
    }
    planned
}

pub fn run_suite(max_m: u32, max_n: usize, budget: u64) -> Vec<OracleReport> {
    run_suite_with(Subjects::default(), max_m, max_n, budget)
}

pub fn run_suite_with(
    subjects: Subjects,
    max_m: u32,
    max_n: usize,
    budget: u64,
) -> Vec<OracleReport> {
    plan_instances(max_m, max_n, budget)
        .into_par_iter()
        .map(|(m, n)| check_instance(&subjects, m, n))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn check_instance(subjects: &Subjects, m: u32, n: usize) -> Vec<OracleReport> {
    let oracle = match OracleLattice::new(m, n) {
        Ok(o) => o,
        Err(e) => return vec![OracleReport::new("oracle", m, n, Some(e.to_string()))],
    };
    let words: Vec<MnWord> = (0..oracle.len()).map(|x| oracle.word(x)).collect();
    let stats = Stats::collect(&oracle);
    vec![
        OracleReport::new("enumerate", m, n, check_enumerate(&oracle, &words)),
        OracleReport::new("meet", m, n, check_meet(subjects, &oracle, &words)),
        OracleReport::new("covers", m, n, check_covers(subjects, &oracle, &words)),
        OracleReport::new(
            "canonical_join_rep",
            m,
            n,
            check_cjr(subjects, &oracle, &words),
        ),
        OracleReport::new("counts", m, n, check_counts(&stats, m, n)),
        OracleReport::new("galois", m, n, check_galois(&oracle, m, n)),
        OracleReport::new("doubling", m, n, check_doubling(&oracle, m, n)),
        OracleReport::new("certificate", m, n, check_certificate(&oracle, m, n)),
    ]
}

fn join_words(ws: &[MnWord]) -> String {
    let items: Vec<String> = ws.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn check_enumerate(oracle: &OracleLattice, words: &[MnWord]) -> Option<String> {
    let (m, n) = (oracle.m, oracle.n);
    let fast: Vec<MnWord> = enumerate(m, n).collect();
    if let Some(i) = (0..words.len().max(fast.len())).find(|&i| words.get(i) != fast.get(i)) {
        let show = |w: Option<&MnWord>| w.map_or("<none>".to_owned(), ToString::to_string);
        return Some(format!(
            "position {i}: enumerate gives {}, brute force gives {}",
            show(fast.get(i)),
            show(words.get(i))
        ));
    }
    if count_words(m, n) != words.len().into() {
        return Some(format!(
            "count_words {} vs {}",
            count_words(m, n),
            words.len()
        ));
    }
    let topless = words.iter().filter(|w| w.is_topless()).count();
    (count_topless(m, n) != topless.into())
        .then(|| format!("count_topless {} vs {topless}", count_topless(m, n)))
}

fn check_meet(subjects: &Subjects, oracle: &OracleLattice, words: &[MnWord]) -> Option<String> {
    for x in 0..words.len() {
        for y in 0..words.len() {
            let expected = &words[oracle.meet(x, y)];
            match (subjects.meet)(&words[x], &words[y]) {
                Ok(got) if &got == expected => {}
                Ok(got) => {
                    return Some(format!(
                        "meet({}, {}) = {got}, expected {expected}",
                        words[x], words[y]
                    ))
                }
                Err(e) => {
                    return Some(format!(
                        "meet({}, {}) failed ({e}), expected {expected}",
                        words[x], words[y]
                    ))
                }
            }
        }
    }
    None
}

fn check_covers(subjects: &Subjects, oracle: &OracleLattice, words: &[MnWord]) -> Option<String> {
    for (x, w) in words.iter().enumerate() {
        let mut expected: Vec<MnWord> = oracle
            .lower_covers(x)
            .into_iter()
            .map(|y| words[y].clone())
            .collect();
        let mut got = (subjects.lower_covers)(w);
        expected.sort();
        got.sort();
        if got != expected {
            return Some(format!(
                "lower covers of {w}: {} expected {}",
                join_words(&got),
                join_words(&expected)
            ));
        }
        let top = w.letters().iter().filter(|&&l| l == w.top_letter()).count();
        let support: BTreeSet<u32> = w
            .letters()
            .iter()
            .copied()
            .filter(|&l| l != 0 && l != w.top_letter())
            .collect();
        if expected.len() != top + support.len() {
            return Some(format!(
                "{w} has {} lower covers but top + |Supp| = {}",
                expected.len(),
                top + support.len()
            ));
        }
    }
    None
}

fn check_cjr(subjects: &Subjects, oracle: &OracleLattice, words: &[MnWord]) -> Option<String> {
    for (x, w) in words.iter().enumerate() {
        let Some(expected) = oracle.canonical_join_rep(x) else {
            return Some(format!("{w} has no canonical join representation"));
        };
        let mut expected: Vec<MnWord> = expected.into_iter().map(|j| words[j].clone()).collect();
        let mut got: Vec<MnWord> = (subjects.canonical_join_rep)(w)
            .into_iter()
            .map(|j| j.to_word(w.m(), w.n()))
            .collect();
        expected.sort();
        got.sort();
        if got != expected {
            return Some(format!(
                "CJ({w}) = {} expected {}",
                join_words(&got),
                join_words(&expected)
            ));
        }
    }
    None
}

/// Per-word statistics computed from the oracle alone.
struct Stats {
    by_in_supp: BTreeMap<(usize, usize), u64>,
    by_in_atom: BTreeMap<(usize, usize), u64>,
}

impl Stats {
    fn collect(oracle: &OracleLattice) -> Self {
        let atoms = oracle.upper_covers(oracle.bottom());
        let mut by_in_supp = BTreeMap::new();
        let mut by_in_atom = BTreeMap::new();
        for x in 0..oracle.len() {
            let w = &oracle.words[x];
            let top = oracle.m + 1;
            let support: BTreeSet<u32> =
                w.iter().copied().filter(|&l| l != 0 && l != top).collect();
            let a = oracle.lower_covers(x).len();
            let b = oracle.canonical_join_rep(x).map_or(usize::MAX, |rep| {
                rep.iter().filter(|j| atoms.contains(j)).count()
            });
            *by_in_supp.entry((a, support.len())).or_insert(0) += 1;
            *by_in_atom.entry((a, b)).or_insert(0) += 1;
        }
        Stats {
            by_in_supp,
            by_in_atom,
        }
    }
}

fn check_counts(stats: &Stats, m: u32, n: usize) -> Option<String> {
    let h = h_triangle(m, n);
    for a in 0..=n {
        let in_a: u64 = stats
            .by_in_supp
            .range((a, 0)..=(a, usize::MAX))
            .map(|(_, c)| c)
            .sum();
        if in_degree_count(m, n, a) != in_a.into() {
            return Some(format!(
                "in_degree_count(a={a}) = {} but {in_a} words have in-degree {a}",
                in_degree_count(m, n, a)
            ));
        }
        for b in 0..=n {
            let refined = stats.by_in_supp.get(&(a, b)).copied().unwrap_or(0);
            if refined_count_closed_form(m, n, a, b) != refined.into() {
                return Some(format!(
                    "refined_count(a={a}, b={b}) = {} but {refined} words counted",
                    refined_count_closed_form(m, n, a, b)
                ));
            }
            let atom = stats.by_in_atom.get(&(a, b)).copied().unwrap_or(0);
            if h.coefficient(a, b) != atom.into() {
                return Some(format!(
                    "h_triangle(a={a}, b={b}) = {} but {atom} words counted",
                    h.coefficient(a, b)
                ));
            }
        }
    }
    None
}

fn check_galois(oracle: &OracleLattice, m: u32, n: usize) -> Option<String> {
    if n == 0 {
        return None;
    }
    let g = galois_graph_direct(m, n);
    let mut got: Vec<(Vec<u32>, Vec<u32>)> = g
        .edge_labels()
        .into_iter()
        .map(|(s, t)| {
            (
                s.to_word(m, n).letters().to_vec(),
                t.to_word(m, n).letters().to_vec(),
            )
        })
        .collect();
    got.sort();
    let expected = oracle.galois_edges();
    if got == expected {
        return None;
    }
    let show = |(s, t): &(Vec<u32>, Vec<u32>)| format!("{s:?}->{t:?}");
    let extra = got.iter().find(|e| !expected.contains(e)).map(show);
    let missing = expected.iter().find(|e| !got.contains(e)).map(show);
    Some(format!("extra edge {extra:?}, missing edge {missing:?}"))
}

fn check_doubling(oracle: &OracleLattice, m: u32, n: usize) -> Option<String> {
    let trace = match build_by_doubling(m, n) {
        Ok(t) => t,
        Err(e) => return Some(e.to_string()),
    };
    let built = trace.result();
    if built.len() != oracle.len() {
        return Some(format!(
            "doubling built {} elements, expected {}",
            built.len(),
            oracle.len()
        ));
    }
    let mut index = Vec::with_capacity(built.len());
    for w in built.labels() {
        match oracle.index(w.letters()) {
            Some(i) => index.push(i),
            None => return Some(format!("doubling produced {w}, which is not a word")),
        }
    }
    for x in 0..built.len() {
        for y in 0..built.len() {
            if built.leq(x, y) != oracle.leq(index[x], index[y]) {
                return Some(format!(
                    "order on {} and {} differs after doubling",
                    built.label(x),
                    built.label(y)
                ));
            }
        }
    }
    None
}

fn check_certificate(oracle: &OracleLattice, m: u32, n: usize) -> Option<String> {
    let lat = match word_lattice(m, n) {
        Ok(l) => l,
        Err(e) => return Some(e.to_string()),
    };
    let cert = certify(lat.poset());
    let length = oracle.length();
    let expected = [
        ("length", cert.length, length),
        (
            "join irreducibles",
            cert.join_irreducible_count,
            oracle.join_irreducibles().len(),
        ),
        (
            "meet irreducibles",
            cert.meet_irreducible_count,
            oracle.meet_irreducibles().len(),
        ),
    ];
    for (what, got, want) in expected {
        if got != want {
            return Some(format!("{what}: certificate {got}, brute force {want}"));
        }
    }
    let extremal =
        oracle.join_irreducibles().len() == length && oracle.meet_irreducibles().len() == length;
    let flags = [
        ("lattice", cert.is_lattice, true),
        ("extremal", cert.is_extremal, extremal),
        (
            "join semidistributive",
            cert.is_join_semidistributive,
            oracle.join_semidistributivity_failure().is_none(),
        ),
        (
            "meet semidistributive",
            cert.is_meet_semidistributive,
            oracle.meet_semidistributivity_failure().is_none(),
        ),
    ];
    for (what, got, want) in flags {
        if got != want {
            return Some(format!("{what}: certificate {got}, brute force {want}"));
        }
    }
    let Some(chain) = &cert.left_modular_chain else {
        return cert
            .is_trim
            .then(|| "trim without a left-modular chain".to_owned());
    };
    let chain: Vec<Option<usize>> = chain
        .iter()
        .map(|&i| oracle.index(lat.poset().label(i).letters()))
        .collect();
    let Some(chain) = chain.into_iter().collect::<Option<Vec<usize>>>() else {
        return Some("left-modular chain contains a non-word".into());
    };
    if chain.len() != length + 1 || chain[0] != oracle.bottom() || chain[length] != oracle.top() {
        return Some("left-modular chain is not a maximum chain".into());
    }
    if let Some(pair) = chain
        .windows(2)
        .find(|p| !oracle.lower_covers(p[1]).contains(&p[0]))
    {
        return Some(format!(
            "left-modular chain skips from {} to {}",
            oracle.word(pair[0]),
            oracle.word(pair[1])
        ));
    }
    chain
        .iter()
        .find(|&&x| !oracle.is_left_modular(x))
        .map(|&x| format!("{} is not left modular", oracle.word(x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_agrees() {
        let reports = run_suite(2, 3, DEFAULT_BUDGET);
        assert_eq!(reports.len(), 3 * 4 * 8);
        assert!(first_disagreement(&reports).is_none(), "{reports:?}");
        assert_eq!(reports[0].instance, "m=0,n=0");
        assert_eq!(reports.last().unwrap().instance, "m=2,n=3");
    }

    #[test]
    fn trivial_suite() {
        let reports = run_suite(0, 1, DEFAULT_BUDGET);
        assert!(reports.iter().all(|r| r.agreed));
    }

    #[test]
    fn budget_limits_instances() {
        assert_eq!(plan_instances(2, 3, 0), vec![]);
        // (0,0), (1,0), (2,0) are singletons; (0,1) has one word.
        assert_eq!(
            plan_instances(2, 3, 4),
            vec![(0, 0), (1, 0), (2, 0), (0, 1)]
        );
    }

    #[test]
    fn broken_meet_is_caught() {
        let subjects = Subjects {
            meet: faults::meet_without_prefix_min,
            ..Subjects::default()
        };
        let reports = run_suite_with(subjects, 2, 3, DEFAULT_BUDGET);
        let bad = first_disagreement(&reports).unwrap();
        assert_eq!(bad.subject, "meet");
        assert_eq!(bad.instance, "m=1,n=2");
        assert!(bad.witness.as_ref().unwrap().contains("meet(02, 11)"));
    }

    #[test]
    fn broken_covers_are_caught() {
        let subjects = Subjects {
            lower_covers: faults::covers_missing_last_top,
            ..Subjects::default()
        };
        let bad = run_suite_with(subjects, 1, 2, DEFAULT_BUDGET);
        let bad = first_disagreement(&bad).unwrap();
        assert_eq!(
            (bad.subject.as_str(), bad.instance.as_str()),
            ("covers", "m=0,n=2")
        );
    }

    #[test]
    fn json_lines() {
        let r = [
            OracleReport::new("meet", 1, 2, None),
            OracleReport::new("covers", 1, 2, Some("x".into())),
        ];
        assert_eq!(
            to_json_lines(&r),
            "{\"subject\":\"meet\",\"instance\":\"m=1,n=2\",\"agreed\":true}\n\
             {\"subject\":\"covers\",\"instance\":\"m=1,n=2\",\"agreed\":false,\"witness\":\"x\"}\n"
        );
    }
}
