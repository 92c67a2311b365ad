//! Expansion of symmetric series with the cancellation property in the
//! `GP` basis, and of `GX_λ` in the `k = 0` symplectic basis.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coeffring::{Monomial, Rational, Series, SeriesJson, TruncationContext, Var};
use crate::error::{Error, Result};
use crate::genfun::checks::{has_cancellation_property, is_x_symmetric};
use crate::genfun::gp_symmetrizer;
use crate::pfaffengine::gx_lambda;
use crate::weylcomb::{KStrictPartition, LieType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    GP,
    GQ,
}

/// Coefficients `c_λ(a, b)` with `f = Σ c_λ B_λ + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionResult {
    pub basis: Basis,
    pub ctx: TruncationContext,
    pub coeffs: Vec<(KStrictPartition, Series)>,
    pub remainder: Series,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub partition: String,
    pub value: SeriesJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionJson {
    pub basis: Basis,
    pub coeffs: Vec<CoeffJson>,
    pub truncation: TruncationContext,
    pub remainder: SeriesJson,
    pub integral: bool,
}

impl ExpansionResult {
    pub fn coeff(&self, lambda: &KStrictPartition) -> Option<&Series> {
        self.coeffs.iter().find(|(p, _)| p.parts() == lambda.parts()).map(|(_, s)| s)
    }

    /// All coefficients lie in `Z[β][a, b]`.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|(_, s)| s.has_integer_coefficients())
    }

    /// `Σ c_λ B_λ + remainder`, with basis elements supplied by `basis`.
    pub fn reconstruct(&self, mut basis: impl FnMut(&KStrictPartition) -> Result<Series>) -> Result<Series> {
        let mut out = self.remainder.clone();
        for (p, c) in &self.coeffs {
            out = out.checked_add(&c.checked_mul(&basis(p)?)?)?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> ExpansionJson {
        ExpansionJson {
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, s)| CoeffJson {
                    partition: p.to_string(),
                    value: SeriesJson::from(s),
                })
                .collect(),
            truncation: self.ctx,
            remainder: SeriesJson::from(&self.remainder),
            integral: self.is_integral(),
        }
    }

    pub fn from_json(j: &ExpansionJson) -> Result<Self> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|c| Ok((KStrictPartition::parse(&c.partition, 0)?, Series::try_from(&c.value)?)))
            .collect::<Result<_>>()?;
        Ok(ExpansionResult {
            basis: j.basis,
            ctx: j.truncation,
            coeffs,
            remainder: Series::try_from(&j.remainder)?,
        })
    }
}

/// x-part and (a, b)-degree of a monomial.
fn x_key(m: &Monomial) -> (u32, Vec<u32>) {
    let ab = m.exps().iter().filter(|(v, _)| !v.is_x()).map(|&(_, e)| e).sum();
    (ab, x_exponents(m))
}

/// Dense x-exponent vector `(e_1, …, e_N)` with trailing zeros dropped.
fn x_exponents(m: &Monomial) -> Vec<u32> {
    let mut v = Vec::new();
    for &(var, e) in m.exps() {
        if let Var::X(i) = var {
            let i = i as usize;
            if v.len() < i {
                v.resize(i, 0);
            }
            v[i - 1] = e;
        }
    }
    v
}

/// The residual term to eliminate next: lowest (a, b)-degree, then lowest
/// x-degree, then the lexicographically largest x-exponent vector.
fn leading(residual: &Series) -> Option<(u32, Vec<u32>)> {
    residual
        .terms()
        .map(|(m, _)| x_key(m))
        .min_by(|(ab1, x1), (ab2, x2)| {
            ab1.cmp(ab2)
                .then_with(|| x1.iter().sum::<u32>().cmp(&x2.iter().sum::<u32>()))
                .then_with(|| x2.cmp(x1))
        })
}

/// Rational coefficient of `x^λ` (no β, no a, b) in a basis element, after
/// checking that `x^λ` is its leading term.
fn leading_coefficient(lambda: &KStrictPartition, element: &Series) -> Result<Rational> {
    let expected = (0, lambda.parts().to_vec());
    match leading(element) {
        Some(lead) if lead == expected => {}
        other => {
            return Err(Error::NotInSpan(format!(
                "basis element for {lambda} has leading term {other:?}, expected x^({lambda})"
            )))
        }
    }
    let m = Monomial::new(0, lambda.parts().iter().enumerate().map(|(i, &e)| (Var::X(i as u32 + 1), e)));
    Ok(element.coeff(&m))
}

fn greedy(
    f: &Series,
    basis: Basis,
    mut element: impl FnMut(&KStrictPartition) -> Result<Series>,
) -> Result<ExpansionResult> {
    if !is_x_symmetric(f) {
        return Err(Error::NotInSpan("input is not symmetric in x".into()));
    }
    if !has_cancellation_property(f)? {
        return Err(Error::NotInSpan("input fails the cancellation property".into()));
    }
    let ctx = f.ctx();
    let mut residual = f.clone();
    let mut coeffs: BTreeMap<Vec<u32>, Series> = BTreeMap::new();
    let mut cache: BTreeMap<Vec<u32>, (Series, Rational)> = BTreeMap::new();
    while let Some((ab, xs)) = leading(&residual) {
        let lambda = KStrictPartition::new(0, xs.clone())
            .ok()
            .filter(|l| l.is_strict())
            .ok_or_else(|| Error::NotInSpan(format!("leading x-exponent {xs:?} is not strict")))?;
        if !cache.contains_key(&xs) {
            let b = element(&lambda)?;
            let lc = leading_coefficient(&lambda, &b)?;
            cache.insert(xs.clone(), (b, lc));
        }
        let (b, lc) = &cache[&xs];
        // the (a, b)-homogeneous part of the coefficient of x^λ
        let mut g = Series::zero(ctx);
        for (m, c) in residual.terms() {
            if x_key(m) == (ab, xs.clone()) {
                let rest: Vec<(Var, u32)> = m.exps().iter().copied().filter(|(v, _)| !v.is_x()).collect();
                g.add_term(Monomial::new(m.beta(), rest), c.clone());
            }
        }
        let g = g.scale(&(Rational::from_integer(1.into()) / lc));
        residual = residual - &g * b;
        let slot = coeffs.entry(xs).or_insert_with(|| Series::zero(ctx));
        *slot = &*slot + &g;
    }
    let mut coeffs: Vec<(KStrictPartition, Series)> = coeffs
        .into_iter()
        .filter(|(_, s)| !s.is_zero())
        .map(|(xs, s)| (KStrictPartition::new(0, xs).expect("strict"), s))
        .collect();
    coeffs.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(ExpansionResult {
        basis,
        ctx,
        coeffs,
        remainder: residual,
    })
}

/// Expansion in `GP_λ(x_1, …, x_N)`, `N = numX`, with coefficients in
/// `Q[β][a, b]`.
pub fn expand_in_gp(f: &Series) -> Result<ExpansionResult> {
    let ctx = f.ctx();
    greedy(f, Basis::GP, |l| gp_symmetrizer(l, ctx.num_x, ctx))
}

/// Expansion of the symplectic `GX_λ` in the `k = 0` symplectic family
/// `GX_μ(x | b)`.
pub fn expand_gt_in_gq_basis(lambda: &KStrictPartition, ctx: TruncationContext) -> Result<ExpansionResult> {
    let f = gx_lambda(lambda, LieType::C, ctx)?;
    expand_in_gq(&f)
}

/// Expansion of an arbitrary series in the `k = 0` symplectic family.
pub fn expand_in_gq(f: &Series) -> Result<ExpansionResult> {
    let ctx = f.ctx();
    greedy(f, Basis::GQ, |l| gx_lambda(l, LieType::C, ctx))
}
