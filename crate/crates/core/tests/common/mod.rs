#![allow(dead_code)]

use isogroth::coeffring::{Monomial, Rational, Series, TruncationContext, Var};
use isogroth::weylcomb::SignedPermutation;
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Random sparse series in `ctx` whose terms have xab-degree at least `min_deg`.
pub fn arb_series(ctx: TruncationContext, max_terms: usize, min_deg: u32) -> impl Strategy<Value = Series> {
    let vars = ctx.variables();
    let nv = vars.len().max(1);
    let term = (
        0..3u32,
        prop::collection::vec((0..nv, 1..=2u32), 0..=3),
        -4i64..=4,
        1i64..=3,
    );
    prop::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        let mut s = Series::zero(ctx);
        for (beta, exps, n, d) in terms {
            if vars.is_empty() && !exps.is_empty() {
                continue;
            }
            let m = Monomial::new(beta, exps.into_iter().map(|(i, e)| (vars[i], e)));
            if m.xab_degree() < min_deg || m.xab_degree() > ctx.max_deg {
                continue;
            }
            s.add_term(m, rat(n, d));
        }
        s
    })
}

/// Contexts with `D ≤ 5` and at most three variables per family.
pub fn arb_ctx() -> impl Strategy<Value = TruncationContext> {
    (0..=5u32, 0..=3u32, 0..=3u32, 0..=3u32).prop_map(|(d, x, a, b)| TruncationContext::new(d, x, a, b))
}

/// Same as `arb_ctx` but with at least one variable of each kind.
pub fn arb_ctx_nonempty() -> impl Strategy<Value = TruncationContext> {
    (1..=5u32, 1..=3u32, 1..=3u32, 1..=3u32).prop_map(|(d, x, a, b)| TruncationContext::new(d, x, a, b))
}

/// Random series in b-variables only.
pub fn arb_b_series(ctx: TruncationContext, max_terms: usize) -> impl Strategy<Value = Series> {
    arb_series(ctx, max_terms, 0).prop_map(|s| s.kill(|v| !v.is_b()))
}

/// Uniform signed permutations of rank `n`.
pub fn arb_perm(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n)).prop_map(
        |(p, signs)| {
            let images: Vec<i32> = p.into_iter().zip(signs).map(|(v, s)| if s { -v } else { v }).collect();
            SignedPermutation::from_one_line(images).unwrap()
        },
    )
}

/// `(-β)^e` as a series.
pub fn neg_beta_pow(ctx: TruncationContext, e: u32) -> Series {
    let sign = if e.is_multiple_of(2) { 1 } else { -1 };
    Series::monomial(ctx, rat(sign, 1), Monomial::beta_pow(e))
}

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &[Vec<Series>], ctx: TruncationContext) -> Series {
    let n = m.len();
    if n == 0 {
        return Series::one(ctx);
    }
    let mut out = Series::zero(ctx);
    for col in 0..n {
        let minor: Vec<Vec<Series>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != col).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][col] * det(&minor, ctx);
        out = if col % 2 == 0 { out + term } else { out - term };
    }
    out
}

/// One-variable one-row classes from the closed form of the factor product:
/// with `y = x_1`, `P_0 = (1+βy)^2` and `P_n = (1+βy)(2+βy) y^n` for `n ≥ 1`,
/// then `GT_m = Σ_j (-β)^j P_{m+j}`.
pub fn one_variable_gt(m: i64, ctx: TruncationContext) -> Series {
    let y = Series::var(ctx, Var::X(1)).unwrap();
    let one = Series::one(ctx);
    let beta = Series::beta(ctx);
    let p = |n: i64| -> Series {
        if n == 0 {
            (&one + &beta * &y).pow(2)
        } else {
            (&one + &beta * &y) * (Series::from_int(ctx, 2) + &beta * &y) * y.pow(n as u32)
        }
    };
    let mut out = Series::zero(ctx);
    for n in m.max(0)..=ctx.max_deg as i64 {
        out = out + neg_beta_pow(ctx, (n - m) as u32) * p(n);
    }
    out
}

/// Coefficients of the kernel `F` at `β = 1`, by direct expansion of the
/// unsimplified rational function as a Laurent series in `(t_i, t_j)`.
/// Truncation in `q` keeps a margin of `pmax` so negative powers cannot
/// pull in missing terms.
pub fn kernel_oracle(i: i64, j: i64, m: i64, ci: i64, cj: i64, pmax: i64, qmax: i64) -> std::collections::BTreeMap<(i64, i64), BigInt> {
    use std::collections::BTreeMap;
    type L = BTreeMap<(i64, i64), BigInt>;
    let qcap = qmax + pmax + 1;
    let mul = |a: &L, b: &L| -> L {
        let mut out = L::new();
        for (&(p1, q1), c1) in a {
            for (&(p2, q2), c2) in b {
                let (p, q) = (p1 + p2, q1 + q2);
                if p <= pmax && q <= qcap {
                    *out.entry((p, q)).or_insert_with(|| BigInt::from(0)) += c1 * c2;
                }
            }
        }
        out.retain(|_, c| *c != BigInt::from(0));
        out
    };
    let one = || L::from([((0, 0), BigInt::from(1))]);
    // 1/(1+t)^e along one axis, any integer e, as Σ binom(-e, r) t^r.
    let power = |e: i64, axis: usize| -> L {
        let mut out = L::new();
        let len = if axis == 0 { pmax } else { qcap };
        let mut c = BigInt::from(1);
        for r in 0..=len {
            if r > 0 {
                c = c * BigInt::from(-e - (r - 1)) / BigInt::from(r);
            }
            if c != BigInt::from(0) {
                out.insert(if axis == 0 { (r, 0) } else { (0, r) }, c.clone());
            }
        }
        out
    };
    // t̄_i = -t_i Σ (-t_i)^e
    let mut tbar_i = L::new();
    for e in 0..pmax {
        let s = if e % 2 == 0 { -1 } else { 1 };
        tbar_i.insert((e + 1, 0), BigInt::from(s));
    }
    // 1/t̄_j = -(t_j^{-1} + 1)
    let inv_tbar_j = L::from([((0, -1), BigInt::from(-1)), ((0, 0), BigInt::from(-1))]);
    let ratio_bar = mul(&tbar_i, &inv_tbar_j);
    let mut numer = one();
    for (k, c) in &ratio_bar {
        *numer.entry(*k).or_insert_with(|| BigInt::from(0)) -= c;
    }
    numer.retain(|_, c| *c != BigInt::from(0));
    let ti_over = mul(&L::from([((1, 0), BigInt::from(1))]), &inv_tbar_j);
    let mut geom = one();
    let mut pw = one();
    for _ in 0..pmax {
        pw = mul(&pw, &ti_over);
        for (k, c) in &pw {
            *geom.entry(*k).or_insert_with(|| BigInt::from(0)) += c;
        }
    }
    let e1 = m - i - ci - 1;
    let e2 = m - j - cj;
    let f = mul(&mul(&mul(&power(e1, 0), &power(e2, 1)), &numer), &geom);
    f.into_iter().filter(|&((p, q), _)| p <= pmax && q <= qmax).collect()
}
