//! Exhaustive reference computations on `W(m, n)`.
//!
//! Everything here works on raw letter vectors and an explicit comparability
//! matrix. Nothing calls into the word, lattice or analysis modules.

use crate::word::MnWord;

use super::OracleError;

/// Checks the two defining conditions of an `(m, n)`-word letter by letter.
pub fn is_word(m: u32, letters: &[u32]) -> bool {
    let top = m + 1;
    if letters.iter().any(|&l| l > top) {
        return false;
    }
    if letters.first() == Some(&top) {
        return false;
    }
    letters
        .iter()
        .enumerate()
        .all(|(i, &s)| !(1..=m).contains(&s) || letters[..i].iter().all(|&earlier| earlier >= s))
}

/// All `(m, n)`-words in lexicographic order, by filtering every tuple over
/// `{0, …, m+1}`.
pub fn words(m: u32, n: usize) -> Vec<Vec<u32>> {
    let base = m + 2;
    let mut out = Vec::new();
    let mut tuple = vec![0; n];
    loop {
        if is_word(m, &tuple) {
            out.push(tuple.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < base {
                break;
            }
            tuple[i] = 0;
        }
    }
}

pub fn leq(u: &[u32], v: &[u32]) -> bool {
    u.len() == v.len() && u.iter().zip(v).all(|(a, b)| a <= b)
}

fn to_word(m: u32, letters: Vec<u32>) -> MnWord {
    MnWord::new(m, letters).expect("oracle words satisfy the word conditions")
}

fn shape(u: &MnWord, v: &MnWord) -> Result<(), OracleError> {
    if u.m() != v.m() || u.n() != v.n() {
        return Err(OracleError::ShapeMismatch);
    }
    Ok(())
}

/// The greatest word below both `u` and `v`, found by scanning every word.
pub fn oracle_meet(u: &MnWord, v: &MnWord) -> Result<MnWord, OracleError> {
    shape(u, v)?;
    let below: Vec<Vec<u32>> = words(u.m(), u.n())
        .into_iter()
        .filter(|w| leq(w, u.letters()) && leq(w, v.letters()))
        .collect();
    let greatest: Vec<&Vec<u32>> = below
        .iter()
        .filter(|w| below.iter().all(|x| leq(x, w)))
        .collect();
    match greatest.as_slice() {
        [g] => Ok(to_word(u.m(), g.to_vec())),
        _ => Err(OracleError::NoUniqueBound(format!("{u} and {v}"))),
    }
}

/// Words strictly below `v` with nothing strictly in between.
pub fn oracle_covers(v: &MnWord) -> Vec<MnWord> {
    let below: Vec<Vec<u32>> = words(v.m(), v.n())
        .into_iter()
        .filter(|w| leq(w, v.letters()) && w != v.letters())
        .collect();
    below
        .iter()
        .filter(|u| !below.iter().any(|w| w != *u && leq(u, w)))
        .map(|u| to_word(v.m(), u.clone()))
        .collect()
}

/// `W(m, n)` as an explicit comparability matrix with brute-force join and
/// meet tables.
#[derive(Debug, Clone)]
pub struct OracleLattice {
    pub m: u32,
    pub n: usize,
    pub words: Vec<Vec<u32>>,
    leq: Vec<Vec<bool>>,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
}

impl OracleLattice {
    pub fn new(m: u32, n: usize) -> Result<Self, OracleError> {
        let words = words(m, n);
        let len = words.len();
        let leq: Vec<Vec<bool>> = words
            .iter()
            .map(|u| words.iter().map(|v| leq(u, v)).collect())
            .collect();
        let bound = |x: usize, y: usize, upper: bool| -> Result<usize, OracleError> {
            let rel = |a: usize, b: usize| if upper { leq[a][b] } else { leq[b][a] };
            let bounds: Vec<usize> = (0..len).filter(|&z| rel(x, z) && rel(y, z)).collect();
            let best: Vec<usize> = bounds
                .iter()
                .copied()
                .filter(|&z| bounds.iter().all(|&o| rel(z, o)))
                .collect();
            match best.as_slice() {
                [b] => Ok(*b),
                _ => Err(OracleError::NoUniqueBound(format!(
                    "{:?} and {:?}",
                    words[x], words[y]
                ))),
            }
        };
        let mut join = vec![vec![0; len]; len];
        let mut meet = vec![vec![0; len]; len];
        for x in 0..len {
            for y in 0..len {
                join[x][y] = bound(x, y, true)?;
                meet[x][y] = bound(x, y, false)?;
            }
        }
        Ok(OracleLattice {
            m,
            n,
            words,
            leq,
            join,
            meet,
        })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn index(&self, letters: &[u32]) -> Option<usize> {
        self.words.iter().position(|w| w == letters)
    }

    pub fn word(&self, x: usize) -> MnWord {
        to_word(self.m, self.words[x].clone())
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x][y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x][y]
    }

    pub fn bottom(&self) -> usize {
        (0..self.len())
            .find(|&x| (0..self.len()).all(|y| self.leq(x, y)))
            .expect("non-empty")
    }

    pub fn top(&self) -> usize {
        (0..self.len())
            .find(|&x| (0..self.len()).all(|y| self.leq(y, x)))
            .expect("non-empty")
    }

    fn covers(&self, lo: usize, hi: usize) -> bool {
        lo != hi
            && self.leq(lo, hi)
            && !(0..self.len()).any(|z| z != lo && z != hi && self.leq(lo, z) && self.leq(z, hi))
    }

    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.covers(y, x)).collect()
    }

    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.covers(x, y)).collect()
    }

    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.lower_covers(x).len() == 1)
            .collect()
    }

    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.upper_covers(x).len() == 1)
            .collect()
    }

    /// Number of covers in a longest chain.
    pub fn length(&self) -> usize {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (0..self.len()).filter(|&y| self.leq(y, x)).count());
        let mut longest = vec![0; self.len()];
        for &x in &order {
            for y in 0..self.len() {
                if y != x && self.leq(y, x) {
                    longest[x] = longest[x].max(longest[y] + 1);
                }
            }
        }
        longest.into_iter().max().unwrap_or(0)
    }

    /// Canonical join representation of `x`, or `None` when the join
    /// representations have no unique inclusion-minimal generated ideal.
    ///
    /// Every representation contains the antichain of its maximal members,
    /// which has the same join and generates the same ideal, so only
    /// antichains of join-irreducibles below `x` are enumerated.
    pub fn canonical_join_rep(&self, x: usize) -> Option<Vec<usize>> {
        let below: Vec<usize> = self
            .join_irreducibles()
            .into_iter()
            .filter(|&j| self.leq(j, x))
            .collect();
        let mut antichains = vec![Vec::new()];
        for &j in &below {
            let extended: Vec<Vec<usize>> = antichains
                .iter()
                .filter(|a| a.iter().all(|&k| !self.leq(k, j) && !self.leq(j, k)))
                .map(|a| {
                    let mut a = a.clone();
                    a.push(j);
                    a
                })
                .collect();
            antichains.extend(extended);
        }
        let bottom = self.bottom();
        let ideal = |a: &[usize]| -> Vec<bool> {
            (0..self.len())
                .map(|z| a.iter().any(|&k| self.leq(z, k)))
                .collect()
        };
        let reps: Vec<(Vec<usize>, Vec<bool>)> = antichains
            .into_iter()
            .filter(|a| a.iter().fold(bottom, |acc, &k| self.join(acc, k)) == x)
            .map(|a| {
                let i = ideal(&a);
                (a, i)
            })
            .collect();
        let subset = |a: &[bool], b: &[bool]| a.iter().zip(b).all(|(&p, &q)| !p || q);
        let minimal: Vec<&(Vec<usize>, Vec<bool>)> = reps
            .iter()
            .filter(|(_, i)| reps.iter().all(|(_, o)| !subset(o, i) || o == i))
            .collect();
        match minimal.as_slice() {
            [(a, _)] => {
                let mut a = a.clone();
                a.sort_unstable();
                Some(a)
            }
            _ => None,
        }
    }

    /// `(p ∨ x) ∧ q = p ∨ (x ∧ q)` for every `p < q`.
    pub fn is_left_modular(&self, x: usize) -> bool {
        (0..self.len()).all(|p| {
            (0..self.len()).all(|q| {
                p == q
                    || !self.leq(p, q)
                    || self.meet(self.join(p, x), q) == self.join(p, self.meet(x, q))
            })
        })
    }

    /// First `(x, y, z)` with `x ∨ y = x ∨ z` but `x ∨ (y ∧ z)` different.
    pub fn join_semidistributivity_failure(&self) -> Option<(usize, usize, usize)> {
        self.semidistributivity_failure(|a, b| self.join(a, b), |a, b| self.meet(a, b))
    }

    pub fn meet_semidistributivity_failure(&self) -> Option<(usize, usize, usize)> {
        self.semidistributivity_failure(|a, b| self.meet(a, b), |a, b| self.join(a, b))
    }

    fn semidistributivity_failure(
        &self,
        op: impl Fn(usize, usize) -> usize,
        dual: impl Fn(usize, usize) -> usize,
    ) -> Option<(usize, usize, usize)> {
        let len = self.len();
        for x in 0..len {
            for y in 0..len {
                for z in 0..len {
                    let v = op(x, y);
                    if v == op(x, z) && v != op(x, dual(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// `j → j'` iff `j ≠ j'` and `j' ≤ j'_* ∨ j`, as pairs of words.
    pub fn galois_edges(&self) -> Vec<(Vec<u32>, Vec<u32>)> {
        let irreducibles = self.join_irreducibles();
        let mut edges = Vec::new();
        for &j in &irreducibles {
            for &target in &irreducibles {
                let star = self.lower_covers(target)[0];
                if j != target && self.leq(target, self.join(star, j)) {
                    edges.push((self.words[j].clone(), self.words[target].clone()));
                }
            }
        }
        edges.sort();
        edges
    }
}
