use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `C(n, k)`, taken as zero whenever `k < 0`, `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `|W(m, n)| = Σ_{k=1}^{n} C(m+k, k)·C(n−1, k−1)`, with `|W(m, 0)| = 1`.
pub fn count_words(m: u32, n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let (m, n) = (i64::from(m), n as i64);
    (1..=n)
        .map(|k| binomial(m + k, k) * binomial(n - 1, k - 1))
        .sum()
}

/// Words avoiding the top letter are weakly decreasing: `C(m+n, n)` of them.
pub fn count_topless(m: u32, n: usize) -> BigUint {
    binomial(i64::from(m) + n as i64, n as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::enumerate;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(-1, 0), BigUint::zero());
        assert_eq!(binomial(3, 4), BigUint::zero());
        assert_eq!(binomial(3, -1), BigUint::zero());
        assert_eq!(
            binomial(64, 32),
            BigUint::from(1_832_624_140_942_590_534u64)
        );
    }

    #[test]
    fn word_counts() {
        assert_eq!(count_words(2, 2), BigUint::from(9u32));
        assert_eq!(count_words(2, 3), BigUint::from(25u32));
        assert_eq!(count_words(1, 2), BigUint::from(5u32));
        assert_eq!(count_words(7, 0), BigUint::one());
        // Large parameters stay exact.
        assert!(count_words(64, 64) > BigUint::from(u128::MAX));
    }

    #[test]
    fn topless_counts() {
        assert_eq!(count_topless(2, 2), BigUint::from(6u32));
        assert_eq!(count_topless(5, 0), BigUint::one());
        assert_eq!(count_topless(0, 3), BigUint::one());
        for m in 0..=4 {
            for n in 0..=5 {
                let direct = enumerate(m, n).filter(|w| w.is_topless()).count();
                assert_eq!(count_topless(m, n), BigUint::from(direct));
            }
        }
    }
}
