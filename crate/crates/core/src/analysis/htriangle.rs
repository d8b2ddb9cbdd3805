use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigInt;
use serde::Serialize;

use super::{atom_count, AnalysisError};
use crate::word::{binomial, enumerate, word_stats};

/// Coefficients `h_{m,n,a,b}` of `H_{m,n}(x, y) = Σ x^{in(w)} y^{atom(w)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HTriangle {
    pub m: u32,
    pub n: usize,
    coefficients: BTreeMap<(usize, usize), BigInt>,
}

/// One CSV/JSON row of an [`HTriangle`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HEntry {
    pub m: u32,
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub coefficient: String,
}

impl HTriangle {
    fn zero(m: u32, n: usize) -> Self {
        let coefficients = (0..=n)
            .flat_map(|a| (0..=a).map(move |b| ((a, b), BigInt::default())))
            .collect();
        HTriangle { m, n, coefficients }
    }

    /// Zero outside `0 ≤ b ≤ a ≤ n`.
    pub fn coefficient(&self, a: usize, b: usize) -> BigInt {
        self.coefficients.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigInt {
        self.coefficients.values().sum()
    }

    /// `Σ_b h_{m,n,a,b}`.
    pub fn row_sum(&self, a: usize) -> BigInt {
        (0..=a).map(|b| self.coefficient(a, b)).sum()
    }

    pub fn entries(&self) -> Vec<HEntry> {
        self.coefficients
            .iter()
            .map(|(&(a, b), c)| HEntry {
                m: self.m,
                n: self.n,
                a,
                b,
                coefficient: c.to_string(),
            })
            .collect()
    }

    /// CSV with header `m,n,a,b,coefficient`, one row per `0 ≤ b ≤ a ≤ n`.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        for entry in self.entries() {
            writer.serialize(entry).expect("serializing into memory");
        }
        let bytes = writer.into_inner().expect("flushing into memory");
        String::from_utf8(bytes).expect("CSV output is UTF-8")
    }

    /// Renders the polynomial with terms ordered by `(a, b)`, e.g.
    /// `1 + 5x + 3xy + ...`.
    pub fn polynomial(&self) -> String {
        let mut out = String::new();
        for (&(a, b), c) in &self.coefficients {
            if c == &BigInt::default() {
                continue;
            }
            let negative = c.sign() == num_bigint::Sign::Minus;
            match (out.is_empty(), negative) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            let mut monomial = String::new();
            for (var, exp) in [("x", a), ("y", b)] {
                match exp {
                    0 => {}
                    1 => monomial.push_str(var),
                    _ => write!(monomial, "{var}^{exp}").unwrap(),
                }
            }
            if monomial.is_empty() || c.magnitude() != &1u8.into() {
                write!(out, "{}", c.magnitude()).unwrap();
            }
            out.push_str(&monomial);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Direct summation over all words of `W(m, n)`.
pub fn h_triangle(m: u32, n: usize) -> HTriangle {
    let mut t = HTriangle::zero(m, n);
    for w in enumerate(m, n) {
        let a = word_stats(&w).in_degree;
        let b = atom_count(&w);
        *t.coefficients.entry((a, b)).or_default() += 1u8;
    }
    t
}

/// The triangle filled in from [`h_coefficient_closed_form`].
pub fn h_triangle_closed_form(m: u32, n: usize) -> HTriangle {
    let mut t = HTriangle::zero(m, n);
    for (&(a, b), c) in t.coefficients.iter_mut() {
        *c = h_coefficient_closed_form(m, n, a, b).expect("indices are in range");
    }
    t
}

/// `(a, b, direct, closed form)` for every coefficient where the two differ.
pub fn h_triangle_mismatches(m: u32, n: usize) -> Vec<(usize, usize, BigInt, BigInt)> {
    let direct = h_triangle(m, n);
    let closed = h_triangle_closed_form(m, n);
    direct
        .coefficients
        .iter()
        .filter_map(|(&(a, b), d)| {
            let c = closed.coefficient(a, b);
            (d != &c).then(|| (a, b, d.clone(), c))
        })
        .collect()
}

/// Three-case closed form for `h_{m,n,a,b}`:
/// `C(m,a−b)·C(n−b,a−b)·C(n−1,b)` when `b < a − 1`,
/// `(mn − ma + m − 1)·C(n−1,a−1)` when `b = a − 1` and `C(n,a)` when `b = a`.
///
/// Agrees with [`h_triangle`] for `m ≥ 1`. At `m = 0` it does not: there every
/// irreducible is an atom, the true triangle is `C(n−1,a)` on the diagonal,
/// and the middle case evaluates to `−C(n−1,a−1)`.
pub fn h_coefficient_closed_form(
    m: u32,
    n: usize,
    a: usize,
    b: usize,
) -> Result<BigInt, AnalysisError> {
    if b > a || a > n {
        return Err(AnalysisError::OutOfDomain(format!(
            "h-coefficient needs 0 <= b <= a <= n, got a={a}, b={b}, n={n}"
        )));
    }
    let (m, n, a, b) = (i64::from(m), n as i64, a as i64, b as i64);
    let c = |x: i64, y: i64| BigInt::from(binomial(x, y));
    Ok(if b + 1 < a {
        c(m, a - b) * c(n - b, a - b) * c(n - 1, b)
    } else if b + 1 == a {
        BigInt::from(m * n - m * a + m - 1) * c(n - 1, a - 1)
    } else {
        c(n, a)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::in_degree_count;
    use crate::word::count_words;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn w23_examples() {
        let t = h_triangle(2, 3);
        assert_eq!(t.coefficient(0, 0), int(1));
        assert_eq!(t.coefficient(1, 1), int(3));
        assert_eq!(t.coefficient(1, 0), int(5));
        assert_eq!(t.coefficient(2, 0), int(3));
        assert_eq!(t.total(), int(25));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(h_coefficient_closed_form(2, 3, 1, 0).unwrap(), int(5));
        assert_eq!(h_coefficient_closed_form(2, 3, 2, 0).unwrap(), int(3));
        assert_eq!(h_coefficient_closed_form(4, 6, 0, 0).unwrap(), int(1));
        assert!(h_coefficient_closed_form(2, 3, 1, 2).is_err());
        assert!(h_coefficient_closed_form(2, 3, 4, 0).is_err());
    }

    #[test]
    fn closed_form_matches_direct() {
        for m in 1..=3 {
            for n in 0..=5 {
                assert_eq!(h_triangle(m, n), h_triangle_closed_form(m, n), "W({m},{n})");
            }
        }
    }

    #[test]
    fn closed_form_breaks_at_m0() {
        assert_eq!(h_coefficient_closed_form(0, 3, 1, 0).unwrap(), int(-1));
        assert_eq!(h_triangle(0, 3).coefficient(3, 3), int(0));
        let bad = h_triangle_mismatches(0, 3);
        assert_eq!(bad[0], (1, 0, int(0), int(-1)));
        assert!(h_triangle_mismatches(0, 0).is_empty());
        assert_eq!(
            h_triangle_mismatches(0, 1),
            [(1, 0, int(0), int(-1)), (1, 1, int(0), int(1))]
        );
        assert!(h_triangle_mismatches(2, 4).is_empty());
        assert_eq!(
            h_triangle_closed_form(0, 2).polynomial(),
            "1 - x + 2xy - x^2y + x^2y^2"
        );
    }

    #[test]
    fn marginals() {
        for m in 1..=3 {
            for n in 1..=5 {
                let t = h_triangle(m, n);
                assert_eq!(t.total(), count_words(m, n).into());
                for a in 0..=n {
                    assert_eq!(t.row_sum(a), in_degree_count(m, n, a).into());
                    assert_eq!(t.coefficient(a, a), binomial(n as i64, a as i64).into());
                }
            }
        }
    }

    #[test]
    fn exports() {
        let t = h_triangle(1, 2);
        assert_eq!(
            t.to_csv(),
            "m,n,a,b,coefficient\n1,2,0,0,1\n1,2,1,0,1\n1,2,1,1,2\n1,2,2,0,0\n1,2,2,1,0\n1,2,2,2,1\n"
        );
        assert_eq!(t.polynomial(), "1 + x + 2xy + x^2y^2");
        assert_eq!(h_triangle(3, 0).polynomial(), "1");
    }
}
