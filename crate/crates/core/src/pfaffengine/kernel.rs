use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coeffring::{Monomial, Rational, Series, TruncationContext};

/// Laurent coefficients `f_pq = c_pq β^{p+q}` of the Pfaffian kernel,
/// for `0 ≤ p ≤ pmax`, `-p ≤ q ≤ qmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelTable {
    pub pmax: i64,
    pub qmax: i64,
    entries: BTreeMap<(i64, i64), Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelEntryJson {
    pub p: i64,
    pub q: i64,
    pub coeff: String,
    pub beta: i64,
}

impl KernelTable {
    /// The rational `c_pq`.
    pub fn coeff(&self, p: i64, q: i64) -> Rational {
        self.entries.get(&(p, q)).cloned().unwrap_or_else(Rational::zero)
    }

    /// `f_pq` as a series.
    pub fn term(&self, p: i64, q: i64, ctx: TruncationContext) -> Series {
        Series::monomial(ctx, self.coeff(p, q), Monomial::beta_pow((p + q) as u32))
    }

    /// Nonzero `(p, q, c_pq)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (i64, i64, &Rational)> {
        self.entries.iter().map(|(&(p, q), c)| (p, q, c))
    }

    pub fn to_json(&self) -> Vec<KernelEntryJson> {
        self.entries()
            .map(|(p, q, c)| KernelEntryJson {
                p,
                q,
                coeff: format!("{}/{}", c.numer(), c.denom()),
                beta: p + q,
            })
            .collect()
    }
}

/// `binom(n, r)` for any integer `n` and `r ≥ 0`.
pub(crate) fn gen_binomial(n: i64, r: i64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..r {
        num *= n - t;
        den *= t + 1;
    }
    num / den
}

/// Coefficient of `t^r` in `(1 + t)^e`.
fn power_coeffs(e: i64, len: i64) -> Vec<BigInt> {
    (0..=len.max(0)).map(|r| gen_binomial(e, r)).collect()
}

/// Laurent coefficients of
/// `F = (1+βt_i)^{-e1} (1+βt_j)^{-e2} (1 - t̄_i/t̄_j)/(1 - t_i/t̄_j)`
/// with `e1 = m - i - c_i - 1` and `e2 = m - j - c_j`.
///
/// With `z = t_i/t_j` the last factor is `(1 - z)/((1+βt_i)(1 + βt_i + z))`,
/// so `F = (1+βt_i)^{-e1-1} (1+βt_j)^{-e2} (1 - z)/(1 + βt_i + z)`.
/// Everything is computed at `β = 1`; homogeneity restores `β^{p+q}`.
pub fn kernel_coeffs(i: usize, j: usize, m: usize, ci: u32, cj: u32, pmax: i64, qmax: i64) -> KernelTable {
    assert!(1 <= i && i < j && j <= m, "kernel needs 1 <= i < j <= m");
    let e1 = m as i64 - i as i64 - ci as i64 - 1;
    let e2 = m as i64 - j as i64 - cj as i64;
    let a = power_coeffs(-e1 - 1, pmax);
    let b = power_coeffs(-e2, qmax + pmax);
    // (1 - z)/(1 + t + z): coefficient of t^{p-a} z^a is
    // (-1)^p [binom(p, a) + binom(p-1, a-1)].
    let c = |p1: i64, a: i64| -> BigInt {
        let mut v = gen_binomial(p1, a);
        if a >= 1 {
            v += gen_binomial(p1 - 1, a - 1);
        }
        if p1 % 2 == 1 {
            -v
        } else {
            v
        }
    };
    let mut entries = BTreeMap::new();
    for p in 0..=pmax {
        for q in -p..=qmax {
            let mut acc = BigInt::zero();
            for p2 in 0..=p {
                let p1 = p - p2;
                for q1 in -p1..=q.min(0) {
                    let q2 = q - q1;
                    acc += &a[p2 as usize] * c(p1, -q1) * &b[q2 as usize];
                }
            }
            if !acc.is_zero() {
                entries.insert((p, q), Rational::from_integer(acc));
            }
        }
    }
    KernelTable { pmax, qmax, entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_both_signs() {
        assert_eq!(gen_binomial(5, 2), BigInt::from(10));
        assert_eq!(gen_binomial(-1, 3), BigInt::from(-1));
        assert_eq!(gen_binomial(-2, 2), BigInt::from(3));
        assert_eq!(gen_binomial(2, 3), BigInt::from(0));
        assert_eq!(gen_binomial(0, 0), BigInt::from(1));
    }

    #[test]
    fn beta_zero_values() {
        for (i, j, m, ci, cj) in [(1, 2, 2, 0, 0), (1, 2, 4, 0, 1), (2, 3, 4, 1, 0), (1, 3, 3, 0, 0)] {
            let t = kernel_coeffs(i, j, m, ci, cj, 6, 6);
            assert_eq!(t.coeff(0, 0), Rational::one());
            for p in 1..=6 {
                let expected = if p % 2 == 0 { 2 } else { -2 };
                assert_eq!(t.coeff(p, -p), Rational::from_integer(expected.into()));
            }
        }
    }

    #[test]
    fn support_constraint() {
        let t = kernel_coeffs(1, 2, 4, 0, 0, 5, 5);
        assert!(t.entries().all(|(p, q, _)| p >= 0 && p + q >= 0));
    }
}
