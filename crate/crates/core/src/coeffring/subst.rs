//! Simultaneous substitution of variables by series, and the linear-factor
//! divisibility test built on it.

use std::collections::{BTreeMap, HashMap};

use super::{Monomial, Series, Var};
use crate::error::{Error, Result};

/// Images of variables; unassigned variables map to themselves.
pub type Assignment = BTreeMap<Var, Series>;

/// The non-unit part of a root class `e(α)` in the b-alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootFactor {
    /// `b_i`
    B(u32),
    /// `b_j - b_i`
    Diff { i: u32, j: u32 },
    /// `b_i ⊕ b_j`
    Sum { i: u32, j: u32 },
}

impl Series {
    /// Replaces every assigned variable by its image, all at once.
    pub fn substitute(&self, assignment: &Assignment) -> Result<Series> {
        let ctx = self.ctx();
        for img in assignment.values() {
            self.check_ctx(img)?;
        }
        // Group terms by their substituted part so each distinct image
        // product is formed once.
        let mut groups: BTreeMap<Monomial, Series> = BTreeMap::new();
        for (m, c) in self.raw_terms() {
            let (sub, keep) = m.split(|v| assignment.contains_key(&v));
            groups
                .entry(sub)
                .or_insert_with(|| Series::zero(ctx))
                .add_term(keep, c.clone());
        }
        let mut powers: HashMap<Var, Vec<Series>> = HashMap::new();
        let mut out = Series::zero(ctx);
        for (sub, keep) in groups {
            let mut img = Series::one(ctx);
            for &(v, e) in sub.exps() {
                let cache = powers
                    .entry(v)
                    .or_insert_with(|| vec![Series::one(ctx), assignment[&v].clone()]);
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &assignment[&v];
                    cache.push(next);
                }
                img = &img * &cache[e as usize];
                if img.is_zero() {
                    break;
                }
            }
            if !img.is_zero() {
                out = out + img * keep;
            }
        }
        Ok(out)
    }

    /// Renames variables monomially: `f(v)` is the new name, `None` sends the
    /// variable to zero. Much cheaper than [`Series::substitute`].
    pub fn rename(&self, f: impl Fn(Var) -> Option<Var>) -> Series {
        let ctx = self.ctx();
        let mut out = Series::zero(ctx);
        'terms: for (m, c) in self.raw_terms() {
            let mut exps = Vec::with_capacity(m.exps().len());
            for &(v, e) in m.exps() {
                match f(v) {
                    Some(w) => exps.push((w, e)),
                    None => continue 'terms,
                }
            }
            out.add_term(Monomial::new(m.beta(), exps), c.clone());
        }
        out
    }

    /// Sets the listed variables to zero.
    pub fn kill(&self, vars: impl Fn(Var) -> bool) -> Series {
        self.filter_terms(|m| !m.vars().any(&vars))
    }

    /// What is left after reducing modulo the linear factor. Zero exactly when
    /// the factor divides `self`.
    pub fn linear_factor_residue(&self, factor: RootFactor) -> Result<Series> {
        if let Some(v) = self.variables().into_iter().find(|v| !v.is_b()) {
            return Err(Error::NotBOnly(v));
        }
        let ctx = self.ctx();
        let mut asg = Assignment::new();
        match factor {
            RootFactor::B(i) => {
                asg.insert(Var::B(i), Series::zero(ctx));
            }
            RootFactor::Diff { i, j } => {
                asg.insert(Var::B(j), Series::b(ctx, i)?);
            }
            RootFactor::Sum { i, j } => {
                asg.insert(Var::B(j), Series::b(ctx, i)?.bar()?);
            }
        }
        self.substitute(&asg)
    }

    /// Whether `self` lies in the ideal generated by the factor.
    pub fn divisible_by_linear_factor(&self, factor: RootFactor) -> Result<bool> {
        Ok(self.linear_factor_residue(factor)?.is_zero())
    }
}

impl RootFactor {
    /// The factor itself as a series.
    pub fn to_series(self, ctx: super::TruncationContext) -> Result<Series> {
        match self {
            RootFactor::B(i) => Series::b(ctx, i),
            RootFactor::Diff { i, j } => Ok(Series::b(ctx, j)? - Series::b(ctx, i)?),
            RootFactor::Sum { i, j } => Series::b(ctx, i)?.oplus(&Series::b(ctx, j)?),
        }
    }
}

/// A single-variable assignment, `v ↦ img`.
pub fn assign(v: Var, img: Series) -> Assignment {
    let mut a = Assignment::new();
    a.insert(v, img);
    a
}
