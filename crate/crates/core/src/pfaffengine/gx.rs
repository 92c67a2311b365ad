use std::collections::HashMap;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{kernel_coeffs, pfaffian, KernelTable, SkewMatrix};
use crate::coeffring::{Series, TruncationContext};
use crate::error::Result;
use crate::genfun::{gt_generating_function_projected, GeneratingFunction};
use crate::weylcomb::{char_index, d_set, KStrictPartition, LieType};

/// Row and column statistics of a subset `I ⊆ D(λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetStats {
    pub pairs: Vec<(usize, usize)>,
    pub a: Vec<i64>,
    pub c: Vec<i64>,
    pub d: Vec<i64>,
}

impl SubsetStats {
    /// Statistics over indices `1..=m` (stored 0-based).
    pub fn new(pairs: Vec<(usize, usize)>, m: usize) -> Self {
        let mut a = vec![0; m];
        let mut c = vec![0; m];
        for &(i, j) in &pairs {
            a[i - 1] += 1;
            c[j - 1] += 1;
        }
        let d = a.iter().zip(&c).map(|(x, y)| x - y).collect();
        SubsetStats { pairs, a, c, d }
    }
}

/// Matrix position, column counts and summation bounds.
type KernelKey = (usize, usize, i64, i64, i64, i64);

/// One-row classes `GX_n^(ℓ)` for a fixed type and `k`, memoized.
struct OneRowFamily {
    k: u32,
    ty: LieType,
    ctx: TruncationContext,
    gfs: Mutex<HashMap<i64, GeneratingFunction>>,
    coeffs: Mutex<HashMap<(i64, i64), Series>>,
}

impl OneRowFamily {
    fn new(k: u32, ty: LieType, ctx: TruncationContext) -> Self {
        OneRowFamily {
            k,
            ty,
            ctx,
            gfs: Mutex::new(HashMap::new()),
            coeffs: Mutex::new(HashMap::new()),
        }
    }

    fn get(&self, n: i64, ell: i64) -> Result<Series> {
        if n > self.ctx.max_deg as i64 {
            return Ok(Series::zero(self.ctx));
        }
        if let Some(s) = self.coeffs.lock().unwrap().get(&(n, ell)) {
            return Ok(s.clone());
        }
        let gf = {
            let cached = self.gfs.lock().unwrap().get(&ell).cloned();
            match cached {
                Some(g) => g,
                None => {
                    let g = gt_generating_function_projected(self.k, ell, self.ty, self.ctx)?;
                    self.gfs.lock().unwrap().insert(ell, g.clone());
                    g
                }
            }
        };
        let s = gf.coefficient(n);
        self.coeffs.lock().unwrap().insert((n, ell), s.clone());
        Ok(s)
    }
}

/// `GX_λ` via the subset sum of Pfaffians. One-row entries use `b_i = 0`
/// for `i > numB`.
pub fn gx_lambda(lambda: &KStrictPartition, ty: LieType, ctx: TruncationContext) -> Result<Series> {
    gx_lambda_with_slack(lambda, ty, ctx, 0)
}

/// As [`gx_lambda`], with the `p`/`q` summation bounds widened by `slack`.
pub fn gx_lambda_with_slack(
    lambda: &KStrictPartition,
    ty: LieType,
    ctx: TruncationContext,
    slack: i64,
) -> Result<Series> {
    let r = lambda.len();
    if r == 0 {
        return Ok(Series::one(ctx));
    }
    let m = if r.is_multiple_of(2) { r } else { r + 1 };
    let chi = char_index(lambda, m).chi;
    let dset = d_set(lambda);
    let family = OneRowFamily::new(lambda.k(), ty, ctx);
    let kernels: Mutex<HashMap<KernelKey, KernelTable>> = Mutex::new(HashMap::new());
    let top = ctx.max_deg as i64;

    let subsets: Vec<u64> = (0..1u64 << dset.len()).collect();
    let values: Vec<Series> = subsets
        .into_par_iter()
        .map(|mask| -> Result<Series> {
            let pairs: Vec<(usize, usize)> = dset
                .iter()
                .enumerate()
                .filter(|&(b, _)| mask >> b & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let stats = SubsetStats::new(pairs, m);
            let base: Vec<i64> = (0..m)
                .map(|i| lambda.part(i + 1) as i64 + stats.d[i])
                .collect();
            let mut mat = SkewMatrix::zero(m, ctx);
            for i in 0..m {
                for j in i + 1..m {
                    let pmax = top - base[i] + slack;
                    let qmax = top - base[j] + slack;
                    if pmax < 0 || qmax + pmax < 0 {
                        continue;
                    }
                    let key = (i, j, stats.c[i], stats.c[j], pmax, qmax);
                    let kernel = {
                        let cached = kernels.lock().unwrap().get(&key).cloned();
                        match cached {
                            Some(t) => t,
                            None => {
                                let t = kernel_coeffs(
                                    i + 1,
                                    j + 1,
                                    m,
                                    stats.c[i] as u32,
                                    stats.c[j] as u32,
                                    pmax,
                                    qmax,
                                );
                                kernels.lock().unwrap().insert(key, t.clone());
                                t
                            }
                        }
                    };
                    let mut entry = Series::zero(ctx);
                    for (p, q, _) in kernel.entries() {
                        let left = family.get(base[i] + p, chi[i])?;
                        if left.is_zero() {
                            continue;
                        }
                        let right = family.get(base[j] + q, chi[j])?;
                        if right.is_zero() {
                            continue;
                        }
                        entry = entry + kernel.term(p, q, ctx) * left * right;
                    }
                    mat.set(i, j, entry);
                }
            }
            pfaffian(&mat)
        })
        .collect::<Result<_>>()?;
    Ok(Series::sum(ctx, &values))
}
