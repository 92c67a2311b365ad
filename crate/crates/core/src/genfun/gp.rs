use rayon::prelude::*;

use crate::coeffring::{ratio, Monomial, Series, TruncationContext, Var};
use crate::error::{Error, Result};
use crate::weylcomb::KStrictPartition;

impl Series {
    /// Exact quotient by `x_i - x_j`. The remainder `self|_{x_i := x_j}` must
    /// vanish. The quotient is valid one degree below `self`, so it is
    /// returned in a context with `max_deg - 1`.
    pub fn div_x_difference(&self, i: u32, j: u32) -> Result<Series> {
        let ctx = self.ctx();
        let (xi, xj) = (Var::X(i), Var::X(j));
        let rem = self.rename(|v| Some(if v == xi { xj } else { v }));
        if !rem.is_zero() {
            return Err(Error::NonzeroRemainder(format!("x{i} - x{j}")));
        }
        let out_ctx = ctx.with_max_deg(ctx.max_deg.saturating_sub(1));
        let mut q = Series::zero(out_ctx);
        for (m, c) in self.terms() {
            let e = m.exponent(xi);
            if e == 0 {
                continue;
            }
            let rest: Vec<(Var, u32)> = m.exps().iter().copied().filter(|&(v, _)| v != xi).collect();
            // (x_i^e - x_j^e)/(x_i - x_j) = Σ_t x_i^t x_j^{e-1-t}
            for t in 0..e {
                let mut exps = rest.clone();
                exps.push((xi, t));
                exps.push((xj, e - 1 - t));
                q.add_term(Monomial::new(m.beta(), exps), c.clone());
            }
        }
        Ok(q)
    }
}

fn permutations(n: usize) -> Vec<(Vec<u32>, bool)> {
    fn rec(cur: &mut Vec<u32>, used: &mut [bool], n: usize, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n as u32 {
            if !used[v as usize] {
                used[v as usize] = true;
                cur.push(v);
                rec(cur, used, n, out);
                cur.pop();
                used[v as usize] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n + 1], n, &mut out);
    out.into_iter()
        .map(|p| {
            let inv = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|&(a, b)| p[a] > p[b])
                .count();
            (p, inv % 2 == 1)
        })
        .collect()
}

/// `GP_λ(x_1, …, x_n)` by symmetrizing over `S_n` and dividing out the
/// Vandermonde exactly.
pub fn gp_symmetrizer(lambda: &KStrictPartition, n: u32, ctx: TruncationContext) -> Result<Series> {
    if !lambda.is_strict() || lambda.len() > n as usize {
        return Err(Error::InvalidPartition {
            k: 0,
            parts: lambda.parts().to_vec(),
            reason: format!("need a strict partition of length at most {n}"),
        });
    }
    if ctx.num_x < n {
        return Err(Error::ContextTooSmall {
            what: "gpSymmetrizer",
            need: format!("numX >= {n}"),
            have: format!("numX = {}", ctx.num_x),
        });
    }
    let r = lambda.len() as u32;
    let pairs = n * n.saturating_sub(1) / 2;
    let wide = ctx.with_max_deg(ctx.max_deg + pairs).with_num_x(n);
    let x = |i| Series::x(wide, i);
    let one = Series::one(wide);
    let beta = Series::beta(wide);

    let mut num = Series::monomial(
        wide,
        ratio(1, 1),
        Monomial::new(0, (1..=r).map(|i| (Var::X(i), lambda.part(i as usize)))),
    );
    for i in 1..=r {
        for j in i + 1..=n {
            num = num * x(i)?.oplus(&x(j)?)? * (&one + &beta * x(j)?);
        }
    }
    for i in r + 1..=n {
        for j in i + 1..=n {
            num = num * (x(i)? - x(j)?);
        }
    }

    let terms: Vec<Series> = permutations(n as usize)
        .into_par_iter()
        .map(|(p, odd)| {
            let image = num.rename(|v| match v {
                Var::X(i) => Some(Var::X(p[i as usize - 1])),
                v => Some(v),
            });
            if odd {
                -image
            } else {
                image
            }
        })
        .collect();
    let mut acc = Series::sum(wide, &terms);
    for i in 1..=n {
        for j in i + 1..=n {
            acc = acc.div_x_difference(i, j)?;
        }
    }
    let fact: i64 = (1..=(n - r) as i64).product();
    acc.scale(&ratio(1, fact)).project(ctx)
}
