use super::MnWord;

/// Lexicographic iterator over all `(m, n)`-words.
///
/// Each step increments the rightmost position that admits a larger letter
/// and resets the suffix to zeros, which is always valid.
#[derive(Debug, Clone)]
pub struct Words {
    m: u32,
    current: Option<Vec<u32>>,
}

impl Words {
    pub fn new(m: u32, n: usize) -> Self {
        Words {
            m,
            current: Some(vec![0; n]),
        }
    }

    /// Smallest admissible letter at `pos` that is strictly greater than `after`.
    fn next_letter(&self, letters: &[u32], pos: usize, after: u32) -> Option<u32> {
        let top = self.m + 1;
        if pos == 0 {
            return (after < self.m).then_some(after + 1);
        }
        let prefix_min = letters[..pos].iter().copied().min().unwrap_or(top);
        let cap = prefix_min.min(self.m);
        if after < cap {
            Some(after + 1)
        } else if after < top {
            Some(top)
        } else {
            None
        }
    }
}

impl Iterator for Words {
    type Item = MnWord;

    fn next(&mut self) -> Option<MnWord> {
        let letters = self.current.take()?;
        let word = MnWord::from_valid(self.m, letters.clone());
        let mut succ = letters;
        for pos in (0..succ.len()).rev() {
            if let Some(next) = self.next_letter(&succ, pos, succ[pos]) {
                succ[pos] = next;
                succ[pos + 1..].fill(0);
                self.current = Some(succ);
                break;
            }
        }
        Some(word)
    }
}

/// All `(m, n)`-words in strictly increasing lexicographic order.
pub fn enumerate(m: u32, n: usize) -> Words {
    Words::new(m, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::count_words;

    #[test]
    fn figure_one_words() {
        let words: Vec<String> = enumerate(2, 2).map(|w| w.to_string()).collect();
        assert_eq!(
            words,
            ["00", "03", "10", "11", "13", "20", "21", "22", "23"]
        );
        assert_eq!(enumerate(2, 3).count(), 25);
    }

    #[test]
    fn empty_word_enumerates_once() {
        let words: Vec<_> = enumerate(4, 0).collect();
        assert_eq!(words.len(), 1);
        assert_eq!(words[0].n(), 0);
    }

    #[test]
    fn m_zero_gives_powers_of_two() {
        for n in 1..=8 {
            assert_eq!(enumerate(0, n).count(), 1 << (n - 1));
        }
    }

    #[test]
    fn strictly_increasing_and_counted() {
        for m in 0..=6 {
            for n in 0..=6 {
                let words: Vec<_> = enumerate(m, n).collect();
                assert!(words.windows(2).all(|p| p[0].letters() < p[1].letters()));
                assert_eq!(num_bigint::BigUint::from(words.len()), count_words(m, n));
            }
        }
    }
}
