use std::collections::{BTreeSet, HashSet};

use super::AnalysisError;
use crate::lattice::{double_by_interval, interval_bounds, Doubled, FinitePoset, Lattice, Layer};
use crate::word::{enumerate, leq, MnWord};

/// One poset of the pipeline.
#[derive(Debug, Clone)]
pub struct DoublingStep {
    /// Length of the words labelling this poset.
    pub word_length: usize,
    /// `0` for the base chain or `P^(0)`, otherwise the index `i` of `P^(i)`.
    pub stage: usize,
    /// The slice level `j = m + 1 − i` used for this doubling.
    pub level: Option<u32>,
    /// Bounds of the doubled interval, labelled as in the previous step.
    pub interval: Option<(MnWord, MnWord)>,
    pub poset: FinitePoset<MnWord>,
}

#[derive(Debug, Clone)]
pub struct DoublingTrace {
    pub m: u32,
    pub n: usize,
    pub steps: Vec<DoublingStep>,
}

impl DoublingTrace {
    pub fn result(&self) -> &FinitePoset<MnWord> {
        &self.steps.last().expect("a trace is never empty").poset
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.poset.len()).collect()
    }

    /// Sizes along the passage to words of length `word_length`, starting
    /// with the lattice it was built from (e.g. `[9, 18, 20, 25]` for `W(2,3)`).
    pub fn sizes_into(&self, word_length: usize) -> Vec<usize> {
        let first = self
            .steps
            .iter()
            .position(|s| s.word_length == word_length)
            .unwrap_or(self.steps.len());
        self.steps[first.saturating_sub(1)..]
            .iter()
            .take_while(|s| s.word_length <= word_length)
            .map(|s| s.poset.len())
            .collect()
    }
}

fn mismatch(reason: String) -> AnalysisError {
    AnalysisError::PipelineMismatch(reason)
}

/// Rebuilds `W(m, n)` from the `(m+1)`-chain `W(m, 1)` by interval doublings.
///
/// Passing from length `k` to `k + 1`, the lattice is first doubled by itself
/// (suffixes `0` and `m + 1`), then for `j = m, m−1, …, 1` by the interval
/// `{w0 : min(w) ≥ j}`, whose upper copies get their last letter set to `j`.
/// Every intermediate poset is checked to carry the componentwise order on
/// valid words, and each completed stage to have exactly the words of
/// `W(m, k + 1)`.
pub fn build_by_doubling(m: u32, n: usize) -> Result<DoublingTrace, AnalysisError> {
    let base_letters: Vec<Vec<u32>> = if n == 0 {
        vec![vec![]]
    } else {
        (0..=m).map(|l| vec![l]).collect()
    };
    let base_labels = base_letters
        .into_iter()
        .map(|letters| MnWord::new(m, letters))
        .collect::<Result<Vec<_>, _>>()?;
    let base = FinitePoset::from_leq(base_labels, |a, b| a.letters() <= b.letters())?;
    let mut steps = vec![DoublingStep {
        word_length: n.min(1),
        stage: 0,
        level: None,
        interval: None,
        poset: base.clone(),
    }];
    let mut current = Lattice::new(base)?;
    for k in 1..n {
        let (lo, hi) = (current.bottom(), current.top());
        let bounds = (
            current.poset().label(lo).clone(),
            current.poset().label(hi).clone(),
        );
        let doubled = double_by_interval(&current, lo, hi)?;
        current = relabel(&doubled, |d| {
            let suffix = if d.layer == Layer::Lower { 0 } else { m + 1 };
            d.label.extended(suffix)
        })?;
        steps.push(DoublingStep {
            word_length: k + 1,
            stage: 0,
            level: None,
            interval: Some(bounds),
            poset: current.poset().clone(),
        });
        for i in 1..=m {
            let j = m + 1 - i;
            let slice: Vec<usize> = (0..current.len())
                .filter(|&x| {
                    let letters = current.poset().label(x).letters();
                    letters[k] == 0 && letters[..k].iter().all(|&l| l >= j)
                })
                .collect();
            let (lo, hi) = interval_bounds(current.poset(), &slice).ok_or_else(|| {
                mismatch(format!("slice min >= {j} of length {k} is not an interval"))
            })?;
            let bounds = (
                current.poset().label(lo).clone(),
                current.poset().label(hi).clone(),
            );
            let members: HashSet<usize> = slice.into_iter().collect();
            let doubled = double_by_interval(&current, lo, hi)?;
            current = relabel(&doubled, |d| {
                if d.layer == Layer::Upper && members.contains(&d.origin) {
                    let mut letters = d.label.letters().to_vec();
                    letters[k] = j;
                    MnWord::new(m, letters)
                } else {
                    Ok(d.label.clone())
                }
            })?;
            steps.push(DoublingStep {
                word_length: k + 1,
                stage: i as usize,
                level: Some(j),
                interval: Some(bounds),
                poset: current.poset().clone(),
            });
        }
        let built: BTreeSet<&MnWord> = current.poset().labels().iter().collect();
        let expected: Vec<MnWord> = enumerate(m, k + 1).collect();
        if built.len() != expected.len() || expected.iter().any(|w| !built.contains(w)) {
            return Err(mismatch(format!(
                "stage for length {} has {} words, W({m},{}) has {}",
                k + 1,
                built.len(),
                k + 1,
                expected.len()
            )));
        }
    }
    Ok(DoublingTrace { m, n, steps })
}

/// Replaces the doubled labels by words and checks that the doubled order is
/// exactly the componentwise order on them.
fn relabel<F>(doubled: &Lattice<Doubled<MnWord>>, f: F) -> Result<Lattice<MnWord>, AnalysisError>
where
    F: Fn(&Doubled<MnWord>) -> Result<MnWord, crate::word::WordError>,
{
    let p = doubled.poset();
    let labels = p.labels().iter().map(&f).collect::<Result<Vec<_>, _>>()?;
    let distinct: HashSet<&MnWord> = labels.iter().collect();
    if distinct.len() != labels.len() {
        return Err(mismatch("doubling produced a repeated word".into()));
    }
    for x in 0..p.len() {
        for y in 0..p.len() {
            if p.leq(x, y) != leq(&labels[x], &labels[y])? {
                return Err(mismatch(format!(
                    "doubled order disagrees with componentwise order on {} and {}",
                    labels[x], labels[y]
                )));
            }
        }
    }
    let poset = FinitePoset::from_covers(labels, p.covers())?;
    Ok(Lattice::new(poset)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::word_lattice;
    use crate::lattice::are_isomorphic;

    #[test]
    fn w23_sizes() {
        let trace = build_by_doubling(2, 3).unwrap();
        assert_eq!(trace.sizes_into(3), [9, 18, 20, 25]);
        assert_eq!(trace.sizes(), [3, 6, 7, 9, 18, 20, 25]);
        let last = trace.steps.last().unwrap();
        assert_eq!(last.level, Some(1));
        let (lo, hi) = last.interval.as_ref().unwrap();
        assert_eq!(
            (lo.to_string(), hi.to_string()),
            ("110".into(), "230".into())
        );
    }

    #[test]
    fn w12_sizes() {
        assert_eq!(build_by_doubling(1, 2).unwrap().sizes(), [2, 4, 5]);
    }

    #[test]
    fn base_cases() {
        let chain = build_by_doubling(4, 1).unwrap();
        assert_eq!(chain.steps.len(), 1);
        assert_eq!(chain.result().length(), 4);
        let single = build_by_doubling(3, 0).unwrap();
        assert_eq!(single.sizes(), [1]);
        assert_eq!(single.result().label(0).n(), 0);
    }

    #[test]
    fn final_posets_match_enumeration() {
        for m in 0..=3 {
            for n in 0..=4 {
                let trace = build_by_doubling(m, n).unwrap();
                let built = trace.result();
                let lat = word_lattice(m, n).unwrap();
                let expected = lat.poset();
                let mut a: Vec<_> = built.labels().to_vec();
                let mut b: Vec<_> = expected.labels().to_vec();
                a.sort();
                b.sort();
                assert_eq!(a, b);
                assert!(are_isomorphic(built, expected).is_some(), "W({m},{n})");
            }
        }
    }
}
