use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serialize;

use crate::word::{binomial, enumerate, word_stats};

fn c(n: usize, k: usize) -> BigUint {
    binomial(n as i64, k as i64)
}

fn ci(n: i64, k: i64) -> BigInt {
    BigInt::from(binomial(n, k))
}

fn singleton(a: usize, b: usize) -> BigUint {
    BigUint::from(u8::from(a == 0 && b == 0))
}

/// Number of words with `in(w) = a` and `|Supp(w)| = b`:
/// `C(m,b)·C(n−a+b,b)·C(n−1,n−a+b−1)`.
pub fn refined_count_closed_form(m: u32, n: usize, a: usize, b: usize) -> BigUint {
    if n == 0 {
        return singleton(a, b);
    }
    if a > n + b {
        return BigUint::default();
    }
    let k = n + b - a;
    if k == 0 {
        return BigUint::default();
    }
    c(m as usize, b) * c(k, b) * c(n - 1, k - 1)
}

/// Number of words with `in(w) = a`: `Σ_b C(m,b)·C(n−a+b,n−a)·C(n−1,a−b)`.
pub fn in_degree_count(m: u32, n: usize, a: usize) -> BigUint {
    if n == 0 {
        return singleton(a, 0);
    }
    if a > n {
        return BigUint::default();
    }
    (0..=a)
        .map(|b| c(m as usize, b) * c(n - a + b, n - a) * c(n - 1, a - b))
        .sum()
}

/// The experimentally suggested closed form
/// `C(m+a,a)·C(n,a) − C(m+a−1,m)·C(n−1,a−1)`.
///
/// Only used by [`scan_conjecture`]; nothing else relies on it.
pub fn conjectured_in_degree_count(m: u32, n: usize, a: usize) -> BigInt {
    let (m, n, a) = (i64::from(m), n as i64, a as i64);
    ci(m + a, a) * ci(n, a) - ci(m + a - 1, m) * ci(n - 1, a - 1)
}

/// `counts[a]` is the number of words of `W(m, n)` with in-degree `a`.
pub fn in_degree_distribution(m: u32, n: usize) -> Vec<u64> {
    let mut counts = vec![0; n + 1];
    for w in enumerate(m, n) {
        counts[word_stats(&w).in_degree] += 1;
    }
    counts
}

/// Direct count of words by `(in(w), |Supp(w)|)`.
pub fn refined_distribution(m: u32, n: usize) -> BTreeMap<(usize, usize), u64> {
    let mut counts = BTreeMap::new();
    for w in enumerate(m, n) {
        let s = word_stats(&w);
        *counts.entry((s.in_degree, s.support.len())).or_insert(0) += 1;
    }
    counts
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureWitness {
    pub m: u32,
    pub n: usize,
    pub a: usize,
    pub proven: String,
    pub conjectured: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub max_m: u32,
    pub max_n: usize,
    pub checked: usize,
    /// Sorted by `(m, n, a)`; the first entry is the smallest witness.
    pub counterexamples: Vec<ConjectureWitness>,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Compares the conjectured formula with [`in_degree_count`] for every
/// `m ≤ max_m`, `n ≤ max_n`, `a ≤ min(n, max_a)`.
pub fn scan_conjecture(max_m: u32, max_n: usize, max_a: Option<usize>) -> ConjectureReport {
    let triples: Vec<(u32, usize, usize)> = (0..=max_m)
        .flat_map(|m| {
            (0..=max_n).flat_map(move |n| {
                let top = max_a.map_or(n, |cap| cap.min(n));
                (0..=top).map(move |a| (m, n, a))
            })
        })
        .collect();
    let mut counterexamples: Vec<ConjectureWitness> = triples
        .par_iter()
        .filter_map(|&(m, n, a)| {
            let proven = BigInt::from(in_degree_count(m, n, a));
            let conjectured = conjectured_in_degree_count(m, n, a);
            (proven != conjectured).then(|| ConjectureWitness {
                m,
                n,
                a,
                proven: proven.to_string(),
                conjectured: conjectured.to_string(),
            })
        })
        .collect();
    counterexamples.sort_by_key(|w| (w.m, w.n, w.a));
    ConjectureReport {
        max_m,
        max_n,
        checked: triples.len(),
        counterexamples,
    }
}
