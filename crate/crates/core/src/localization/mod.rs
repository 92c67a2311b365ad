//! Localization at torus-fixed points, GKM divisibility, and the closed
//! product formula for localized one-row generating functions.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coeffring::{Assignment, Series, SeriesJson, TruncationContext, Var};
use crate::error::{Error, Result};
use crate::genfun::{GeneratingFunction, LaurentSeriesU, Prefactor};
use crate::weylcomb::{
    enumerate_sp_k, partition_to_w, roots_up_to, weyl_act, KStrictPartition, LieType, Root,
    SignedPermutation,
};

/// `b_m` for `m > 0`, `bar(b_{-m})` for `m < 0`.
fn signed_b(ctx: TruncationContext, m: i32) -> Result<Series> {
    let i = m.unsigned_abs();
    if i > ctx.num_b {
        return Err(Error::ContextTooSmall {
            what: "localization",
            need: format!("numB >= {i}"),
            have: format!("numB = {}", ctx.num_b),
        });
    }
    let b = Series::b(ctx, i)?;
    if m > 0 {
        Ok(b)
    } else {
        b.bar()
    }
}

/// Substitution for `Φ_v`; variables whose image would be killed by
/// `b_i ↦ 0 (i > cutoff)` are sent to zero directly.
fn phi_assignment(f: &Series, v: &SignedPermutation, cutoff: Option<u32>) -> Result<Assignment> {
    let ctx = f.ctx();
    let killed = |m: i32| cutoff.is_some_and(|n| m.unsigned_abs() > n);
    let mut asg = Assignment::new();
    for var in f.variables() {
        let img = match var {
            Var::X(i) => {
                let w = v.apply(i as i32);
                if w > 0 || killed(w) {
                    Series::zero(ctx)
                } else {
                    signed_b(ctx, w)?
                }
            }
            Var::A(i) => {
                let w = v.apply(i as i32);
                if killed(w) {
                    Series::zero(ctx)
                } else {
                    signed_b(ctx, -w)?
                }
            }
            Var::B(i) => {
                if killed(i as i32) {
                    Series::zero(ctx)
                } else {
                    continue;
                }
            }
        };
        asg.insert(var, img);
    }
    Ok(asg)
}

/// `Φ_v`: `x_i ↦ b_{v(i)}` when `v(i) < 0`, else 0; `a_i ↦ b_{-v(i)}`;
/// with `b_{-m} = bar(b_m)`.
pub fn phi_v(f: &Series, v: &SignedPermutation) -> Result<Series> {
    f.substitute(&phi_assignment(f, v, None)?)
}

/// Values of a class at the fixed points `SP^k(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizationTable {
    pub n: u32,
    pub k: u32,
    pub entries: Vec<(KStrictPartition, Series)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntryJson {
    pub partition: String,
    pub value: SeriesJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalizationTableJson {
    pub n: u32,
    pub k: u32,
    pub entries: Vec<TableEntryJson>,
}

impl LocalizationTable {
    pub fn get(&self, mu: &KStrictPartition) -> Option<&Series> {
        self.entries.iter().find(|(p, _)| p == mu).map(|(_, s)| s)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|(_, s)| s.is_zero())
    }

    /// The table of a constant.
    pub fn constant(n: u32, k: u32, value: Series) -> Self {
        LocalizationTable {
            n,
            k,
            entries: enumerate_sp_k(n, k).into_iter().map(|p| (p, value.clone())).collect(),
        }
    }

    pub fn to_json(&self) -> LocalizationTableJson {
        LocalizationTableJson {
            n: self.n,
            k: self.k,
            entries: self
                .entries
                .iter()
                .map(|(p, s)| TableEntryJson {
                    partition: p.to_string(),
                    value: SeriesJson::from(s),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &LocalizationTableJson) -> Result<Self> {
        let entries = j
            .entries
            .iter()
            .map(|e| {
                let p = KStrictPartition::parse(&e.partition, j.k)?;
                let s = Series::try_from(&e.value)?;
                if let Some(v) = s.variables().into_iter().find(|v| !v.is_b()) {
                    return Err(Error::NotBOnly(v));
                }
                Ok((p, s))
            })
            .collect::<Result<_>>()?;
        Ok(LocalizationTable {
            n: j.n,
            k: j.k,
            entries,
        })
    }
}

impl Serialize for LocalizationTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LocalizationTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = LocalizationTableJson::deserialize(d)?;
        LocalizationTable::from_json(&j).map_err(serde::de::Error::custom)
    }
}

/// `Ψ_n`: localize at every `w_μ`, `μ ∈ SP^k(n)`, then set `b_i = 0` for `i > n`.
pub fn psi_n(f: &Series, n: u32, k: u32) -> Result<LocalizationTable> {
    let ctx = f.ctx();
    if ctx.num_x < n || ctx.num_b < n {
        return Err(Error::ContextTooSmall {
            what: "psiN",
            need: format!("numX >= {n} and numB >= {n}"),
            have: format!("numX = {}, numB = {}", ctx.num_x, ctx.num_b),
        });
    }
    let entries = enumerate_sp_k(n, k)
        .into_par_iter()
        .map(|mu| {
            let w = partition_to_w(&mu, n)?;
            let value = f.substitute(&phi_assignment(f, &w, Some(n))?)?;
            Ok((mu, value))
        })
        .collect::<Result<_>>()?;
    Ok(LocalizationTable { n, k, entries })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GkmViolation {
    pub partition: String,
    pub root: String,
    pub neighbor: String,
    pub residue: SeriesJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GkmReport {
    pub n: u32,
    pub k: u32,
    #[serde(rename = "type")]
    pub ty: LieType,
    pub edges_checked: usize,
    pub violations: Vec<GkmViolation>,
}

impl GkmReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `ψ(s_α μ) - ψ(μ) ∈ e(α)·R` for every `μ` and `α ∈ Δ⁺_n`.
pub fn gkm_check(table: &LocalizationTable, ty: LieType) -> Result<GkmReport> {
    let n = table.n;
    let points = enumerate_sp_k(n, table.k);
    for mu in &points {
        if table.get(mu).is_none() {
            return Err(Error::MissingEntry(mu.to_string()));
        }
    }
    let roots = roots_up_to(n, ty);
    let edges: Vec<(&KStrictPartition, Root)> =
        points.iter().flat_map(|mu| roots.iter().map(move |&a| (mu, a))).collect();
    let results: Vec<Option<GkmViolation>> = edges
        .par_iter()
        .map(|&(mu, alpha)| -> Result<Option<GkmViolation>> {
            let nu = weyl_act(&alpha.reflection(), mu, n)?;
            if &nu == mu {
                return Ok(None);
            }
            let here = table.get(mu).ok_or_else(|| Error::MissingEntry(mu.to_string()))?;
            let there = table.get(&nu).ok_or_else(|| Error::MissingEntry(nu.to_string()))?;
            let residue = there.checked_sub(here)?.linear_factor_residue(alpha.factor())?;
            Ok((!residue.is_zero()).then(|| GkmViolation {
                partition: mu.to_string(),
                root: alpha.to_string(),
                neighbor: nu.to_string(),
                residue: SeriesJson::from(&residue),
            }))
        })
        .collect::<Result<_>>()?;
    Ok(GkmReport {
        n,
        k: table.k,
        ty,
        edges_checked: edges.len(),
        violations: results.into_iter().flatten().collect(),
    })
}

/// The localized one-row generating function at `w_μ`, written directly
/// as a product in the b-variables.
pub fn loc_product_formula(
    mu: &KStrictPartition,
    ell: i64,
    n: u32,
    ty: LieType,
    ctx: TruncationContext,
) -> Result<GeneratingFunction> {
    if ell.unsigned_abs() > n as u64 || ctx.num_b < n {
        return Err(Error::EllOutOfRange {
            ell,
            need: n.max(ell.unsigned_abs() as u32),
            have: ctx.num_b,
        });
    }
    let k = mu.k() as usize;
    let w = partition_to_w(mu, n)?.window(n as usize);
    let s = w[k..].iter().take_while(|&&x| x < 0).count();
    let mut num = Vec::new();
    let mut den = Vec::new();
    for &z in &w[k..k + s] {
        let z = (-z) as u32;
        let b = Series::b(ctx, z)?;
        num.push(LaurentSeriesU::linear_factor(&b.bar()?));
        den.push(LaurentSeriesU::linear_factor(&b));
    }
    for &v in &w[..k] {
        num.push(LaurentSeriesU::linear_factor(&Series::b(ctx, v as u32)?.bar()?));
    }
    for i in 1..=ell.unsigned_abs() as u32 {
        let b = Series::b(ctx, i)?;
        if ell >= 0 {
            num.push(LaurentSeriesU::linear_factor(&b));
        } else {
            den.push(LaurentSeriesU::linear_factor(&b.bar()?));
        }
    }
    let mut p = LaurentSeriesU::one(ctx);
    for f in num {
        p = p.mul(&f)?;
    }
    let mut d = LaurentSeriesU::one(ctx);
    for f in den {
        d = d.mul(&f)?;
    }
    Ok(GeneratingFunction {
        product: p.mul(&d.inverse()?)?,
        prefactor: Prefactor::for_type(ty, ell),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::gt_coeff;

    #[test]
    fn phi_examples() {
        let c = TruncationContext::new(3, 1, 1, 1);
        let s0 = SignedPermutation::simple(0);
        let b1 = Series::b(c, 1).unwrap();
        assert_eq!(phi_v(&Series::a(c, 1).unwrap(), &s0).unwrap(), b1);
        assert_eq!(phi_v(&Series::x(c, 1).unwrap(), &s0).unwrap(), b1.bar().unwrap());
        let id = SignedPermutation::identity();
        assert!(phi_v(&Series::x(c, 1).unwrap(), &id).unwrap().is_zero());
        assert_eq!(phi_v(&Series::a(c, 1).unwrap(), &id).unwrap(), b1.bar().unwrap());
    }

    #[test]
    fn constant_tables_pass() {
        let c = TruncationContext::new(3, 2, 0, 2);
        let t = psi_n(&Series::one(c), 2, 0).unwrap();
        assert_eq!(t, LocalizationTable::constant(2, 0, Series::one(c)));
        let r = gkm_check(&t, LieType::C).unwrap();
        assert!(r.is_clean());
        assert!(r.edges_checked > 0);
    }

    #[test]
    fn perturbed_table_fails() {
        let c = TruncationContext::new(3, 2, 0, 2);
        let mut t = LocalizationTable::constant(2, 0, Series::one(c));
        t.entries[1].1 = Series::from_int(c, 2);
        assert!(!gkm_check(&t, LieType::B).unwrap().is_clean());
        t.entries.pop();
        assert!(matches!(gkm_check(&t, LieType::B), Err(Error::MissingEntry(_))));
    }

    #[test]
    fn empty_point_product() {
        let c = TruncationContext::new(3, 2, 0, 2);
        let gf = loc_product_formula(&KStrictPartition::empty(0), 0, 2, LieType::C, c).unwrap();
        assert_eq!(gf.coefficient(0), Series::one(c));
        assert_eq!(gf.coefficient(-2), Series::beta(c) * Series::beta(c));
        assert!(gf.coefficient(1).is_zero());
    }

    #[test]
    fn product_formula_matches_localization() {
        let c = TruncationContext::new(3, 2, 1, 2);
        for mu in enumerate_sp_k(2, 1) {
            let w = partition_to_w(&mu, 2).unwrap();
            for ell in -2..=2 {
                let gf = loc_product_formula(&mu, ell, 2, LieType::C, c).unwrap();
                for m in -2..=3 {
                    let lhs = phi_v(&gt_coeff(m, ell, 1, LieType::C, c).unwrap(), &w).unwrap();
                    assert_eq!(lhs, gf.coefficient(m), "mu={mu} ell={ell} m={m}");
                }
            }
        }
    }
}
