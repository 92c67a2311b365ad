use num_traits::{One, Zero};

use super::LaurentSeriesU;
use crate::coeffring::{ratio, Rational, Series, TruncationContext};
use crate::error::{Error, Result};
use crate::weylcomb::LieType;

/// The u⁻¹-prefactor multiplying the factor product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Prefactor {
    /// `1/(1+βu⁻¹)`
    Standard,
    /// `1/((1+βu⁻¹)(2+βu⁻¹))`
    Orthogonal,
}

impl Prefactor {
    pub fn for_type(ty: LieType, ell: i64) -> Prefactor {
        match ty {
            LieType::B if ell >= 0 => Prefactor::Orthogonal,
            _ => Prefactor::Standard,
        }
    }

    /// Rational part of the coefficient of `u^{-j}`; the full coefficient
    /// is this times `(-β)^j`.
    fn weight(self, j: u32) -> Rational {
        match self {
            Prefactor::Standard => Rational::one(),
            Prefactor::Orthogonal => {
                Rational::one() - Rational::new(1.into(), num_bigint::BigInt::from(2u8).pow(j + 1))
            }
        }
    }
}

/// A prefactor times a u-polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingFunction {
    pub product: LaurentSeriesU,
    pub prefactor: Prefactor,
}

impl GeneratingFunction {
    /// `[u^m]`, folding the prefactor into the polynomial coefficients.
    pub fn coefficient(&self, m: i64) -> Series {
        let ctx = self.product.ctx();
        let mut out = Series::zero(ctx);
        for (i, c) in self.product.coeffs() {
            if i < m {
                continue;
            }
            let j = (i - m) as u32;
            let sign = if j.is_multiple_of(2) { ratio(1, 1) } else { ratio(-1, 1) };
            let w = self.prefactor.weight(j) * sign;
            if !w.is_zero() {
                out = out + c.mul_monomial(&w, &crate::coeffring::Monomial::beta_pow(j));
            }
        }
        out
    }
}

fn product_of(ctx: TruncationContext, factors: impl IntoIterator<Item = LaurentSeriesU>) -> Result<LaurentSeriesU> {
    let mut acc = LaurentSeriesU::one(ctx);
    for f in factors {
        acc = acc.mul(&f)?;
    }
    Ok(acc)
}

/// Factor product with `b_1..b_count` in the ℓ-part on the branch given by
/// the sign of `ell`.
fn factor_product_raw(k: u32, ell: i64, count: u32, ctx: TruncationContext) -> Result<LaurentSeriesU> {
    if k > ctx.num_a {
        return Err(Error::ContextTooSmall {
            what: "k",
            need: format!("numA >= {k}"),
            have: format!("numA = {}", ctx.num_a),
        });
    }
    let mut num = Vec::new();
    let mut den = Vec::new();
    for i in 1..=ctx.num_x {
        let x = Series::x(ctx, i)?;
        num.push(LaurentSeriesU::linear_factor(&x));
        den.push(LaurentSeriesU::linear_factor(&x.bar()?));
    }
    for i in 1..=k {
        num.push(LaurentSeriesU::linear_factor(&Series::a(ctx, i)?));
    }
    for i in 1..=count {
        let b = Series::b(ctx, i)?;
        if ell >= 0 {
            num.push(LaurentSeriesU::linear_factor(&b));
        } else {
            den.push(LaurentSeriesU::linear_factor(&b.bar()?));
        }
    }
    let n = product_of(ctx, num)?;
    let d = product_of(ctx, den)?;
    n.mul(&d.inverse()?)
}

/// All factors of the one-row generating function except the u⁻¹-prefactor.
pub fn gt_factor_product(k: u32, ell: i64, ctx: TruncationContext) -> Result<LaurentSeriesU> {
    let need = ell.unsigned_abs() as u32;
    if ell.unsigned_abs() > ctx.num_b as u64 {
        return Err(Error::EllOutOfRange {
            ell,
            need,
            have: ctx.num_b,
        });
    }
    factor_product_raw(k, ell, need, ctx)
}

/// The full generating function for one-row classes of the given type.
pub fn gt_generating_function(k: u32, ell: i64, ty: LieType, ctx: TruncationContext) -> Result<GeneratingFunction> {
    Ok(GeneratingFunction {
        product: gt_factor_product(k, ell, ctx)?,
        prefactor: Prefactor::for_type(ty, ell),
    })
}

/// As [`gt_generating_function`], but `b_i` with `i > numB` are treated as
/// zero instead of rejected. The branch still follows the sign of `ell`.
pub(crate) fn gt_generating_function_projected(
    k: u32,
    ell: i64,
    ty: LieType,
    ctx: TruncationContext,
) -> Result<GeneratingFunction> {
    let count = (ell.unsigned_abs() as u32).min(ctx.num_b);
    Ok(GeneratingFunction {
        product: factor_product_raw(k, ell, count, ctx)?,
        prefactor: Prefactor::for_type(ty, ell),
    })
}

/// The degree-`m` one-row class `GT_m^(ℓ)` (type C) or `GT'_m^(ℓ)` (type B).
pub fn gt_coeff(m: i64, ell: i64, k: u32, ty: LieType, ctx: TruncationContext) -> Result<Series> {
    Ok(gt_generating_function(k, ell, ty, ctx)?.coefficient(m))
}

/// `(1/2) Σ_{s≥0} (-β/2)^s GT_{m+s}^(ℓ)`, for `ℓ ≥ 0`.
pub fn gt_prime_from_gt(m: i64, ell: i64, k: u32, ctx: TruncationContext) -> Result<Series> {
    if ell < 0 {
        return Err(Error::NegativeEll(ell));
    }
    let gf = gt_generating_function(k, ell, LieType::C, ctx)?;
    let mut out = Series::zero(ctx);
    let top = ctx.max_deg as i64;
    let mut s = 0u32;
    while m + s as i64 <= top {
        let sign = if s.is_multiple_of(2) { 1 } else { -1 };
        let w = Rational::new(sign.into(), num_bigint::BigInt::from(2u8).pow(s + 1));
        let g = gf.coefficient(m + s as i64);
        out = out + g.mul_monomial(&w, &crate::coeffring::Monomial::beta_pow(s));
        s += 1;
    }
    Ok(out)
}
