use std::collections::BTreeMap;

use crate::coeffring::{Series, TruncationContext};
use crate::error::{Error, Result};

/// A finitely supported series `Σ_m c_m u^m` with coefficients in the
/// truncated ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeriesU {
    ctx: TruncationContext,
    coeffs: BTreeMap<i64, Series>,
}

impl LaurentSeriesU {
    pub fn zero(ctx: TruncationContext) -> Self {
        LaurentSeriesU {
            ctx,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(ctx: TruncationContext) -> Self {
        Self::from_coeffs(ctx, [(0, Series::one(ctx))])
    }

    pub fn from_coeffs(ctx: TruncationContext, coeffs: impl IntoIterator<Item = (i64, Series)>) -> Self {
        let mut out = Self::zero(ctx);
        for (m, c) in coeffs {
            out.add_coeff(m, c);
        }
        out
    }

    /// `1 + (u + β)y = (1 + βy) + y·u`.
    pub fn linear_factor(y: &Series) -> Self {
        let ctx = y.ctx();
        let c0 = Series::one(ctx) + Series::beta(ctx) * y;
        Self::from_coeffs(ctx, [(0, c0), (1, y.clone())])
    }

    fn add_coeff(&mut self, m: i64, c: Series) {
        assert_eq!(c.ctx(), self.ctx, "truncation context mismatch in u-series");
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(m).or_insert_with(|| Series::zero(c.ctx()));
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    pub fn ctx(&self) -> TruncationContext {
        self.ctx
    }

    /// `[u^m]`.
    pub fn coefficient(&self, m: i64) -> Series {
        self.coeffs
            .get(&m)
            .cloned()
            .unwrap_or_else(|| Series::zero(self.ctx))
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (i64, &Series)> {
        self.coeffs.iter().map(|(&m, c)| (m, c))
    }

    /// Smallest and largest `m` with a nonzero coefficient.
    pub fn window(&self) -> Option<(i64, i64)> {
        let lo = *self.coeffs.keys().next()?;
        let hi = *self.coeffs.keys().next_back()?;
        Some((lo, hi))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, other: &LaurentSeriesU) -> Result<LaurentSeriesU> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch {
                left: self.ctx,
                right: other.ctx,
            });
        }
        let mut out = Self::zero(self.ctx);
        for (&i, a) in &self.coeffs {
            for (&j, b) in &other.coeffs {
                out.add_coeff(i + j, a * b);
            }
        }
        Ok(out)
    }

    /// Inverse of a u-polynomial `Σ_{j≥0} c_j u^j` whose constant term is
    /// `1 + (positive valuation)` and whose higher coefficients have
    /// valuation at least `j`. Only `u`-powers up to `max_deg` can survive.
    pub fn inverse(&self) -> Result<LaurentSeriesU> {
        let ctx = self.ctx;
        if let Some((lo, _)) = self.window() {
            if lo < 0 {
                return Err(Error::NotInvertible);
            }
        }
        let c0 = self.coefficient(0);
        let inv0 = (&c0 - Series::one(ctx)).invert_one_plus()?;
        let top = ctx.max_deg as i64;
        let mut q: Vec<Series> = vec![inv0.clone()];
        for j in 1..=top {
            let mut acc = Series::zero(ctx);
            for (&i, c) in self.coeffs.range(1..=j) {
                acc = acc + c * &q[(j - i) as usize];
            }
            q.push(-(inv0.clone() * acc));
        }
        Ok(Self::from_coeffs(ctx, q.into_iter().enumerate().map(|(j, c)| (j as i64, c))))
    }
}
