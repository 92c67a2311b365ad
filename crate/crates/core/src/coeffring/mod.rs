//! Truncated graded power series over `Q[β]` in three alphabets `x`, `a`, `b`.
//!
//! A [`Series`] is a sparse map from [`Monomial`] to an exact rational. Every
//! series carries a [`TruncationContext`]: terms whose xab-degree (β excluded)
//! exceeds `max_deg` are dropped, and variables past the per-alphabet caps are
//! identically zero. Both are ring quotients, so every operation here is exact
//! in the quotient.

mod fgl;
mod json;
mod ops;
mod subst;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use json::{SeriesJson, TermJson};
pub use subst::{assign, Assignment, RootFactor};

/// Exact rational coefficient, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A variable of the ambient ring. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    X(u32),
    A(u32),
    B(u32),
}

impl Var {
    pub fn index(self) -> u32 {
        match self {
            Var::X(i) | Var::A(i) | Var::B(i) => i,
        }
    }

    pub fn is_x(self) -> bool {
        matches!(self, Var::X(_))
    }

    pub fn is_b(self) -> bool {
        matches!(self, Var::B(_))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::A(i) => write!(f, "a{i}"),
            Var::B(i) => write!(f, "b{i}"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad variable name {s:?}"));
        let (head, tail) = s.split_at_checked(1).ok_or_else(bad)?;
        let idx: u32 = tail.parse().map_err(|_| bad())?;
        if idx == 0 {
            return Err(bad());
        }
        match head {
            "x" => Ok(Var::X(idx)),
            "a" => Ok(Var::A(idx)),
            "b" => Ok(Var::B(idx)),
            _ => Err(bad()),
        }
    }
}

/// Where a series is cut off: xab-degree at most `max_deg`, and `x_i = 0` for
/// `i > num_x` (likewise for `a`, `b`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TruncationContext {
    pub max_deg: u32,
    pub num_x: u32,
    pub num_a: u32,
    pub num_b: u32,
}

impl TruncationContext {
    pub fn new(max_deg: u32, num_x: u32, num_a: u32, num_b: u32) -> Self {
        Self {
            max_deg,
            num_x,
            num_a,
            num_b,
        }
    }

    pub fn contains(&self, var: Var) -> bool {
        match var {
            Var::X(i) => i >= 1 && i <= self.num_x,
            Var::A(i) => i >= 1 && i <= self.num_a,
            Var::B(i) => i >= 1 && i <= self.num_b,
        }
    }

    pub fn with_max_deg(self, max_deg: u32) -> Self {
        Self { max_deg, ..self }
    }

    pub fn with_num_x(self, num_x: u32) -> Self {
        Self { num_x, ..self }
    }

    pub fn with_num_a(self, num_a: u32) -> Self {
        Self { num_a, ..self }
    }

    pub fn with_num_b(self, num_b: u32) -> Self {
        Self { num_b, ..self }
    }

    /// All materialized variables in canonical order.
    pub fn variables(&self) -> Vec<Var> {
        (1..=self.num_x)
            .map(Var::X)
            .chain((1..=self.num_a).map(Var::A))
            .chain((1..=self.num_b).map(Var::B))
            .collect()
    }
}

impl fmt::Display for TruncationContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(D={}, x:{}, a:{}, b:{})",
            self.max_deg, self.num_x, self.num_a, self.num_b
        )
    }
}

/// `β^beta · Π v^e`, with exponents sorted by variable and never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    beta: u32,
    degree: u32,
    exps: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn beta_pow(beta: u32) -> Self {
        Self {
            beta,
            ..Self::default()
        }
    }

    pub fn var(v: Var) -> Self {
        Self {
            beta: 0,
            degree: 1,
            exps: vec![(v, 1)],
        }
    }

    /// Builds a monomial from arbitrary (variable, exponent) pairs; repeated
    /// variables are merged and zero exponents dropped.
    pub fn new(beta: u32, exps: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in exps {
            *map.entry(v).or_insert(0) += e;
        }
        let exps: Vec<_> = map.into_iter().filter(|&(_, e)| e > 0).collect();
        let degree = exps.iter().map(|&(_, e)| e).sum();
        Self { beta, degree, exps }
    }

    pub(crate) fn from_sorted(beta: u32, exps: Vec<(Var, u32)>) -> Self {
        debug_assert!(exps.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(exps.iter().all(|&(_, e)| e > 0));
        let degree = exps.iter().map(|&(_, e)| e).sum();
        Self { beta, degree, exps }
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    /// Total degree in the x, a, b variables.
    pub fn xab_degree(&self) -> u32 {
        self.degree
    }

    /// Degree with `deg β = -1`.
    pub fn graded_degree(&self) -> i64 {
        self.degree as i64 - self.beta as i64
    }

    pub fn exps(&self) -> &[(Var, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.exps, &other.exps);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial {
            beta: self.beta + other.beta,
            degree: self.degree + other.degree,
            exps: out,
        }
    }

    /// Splits into the part made of variables satisfying `pred` and the rest;
    /// β stays with the rest.
    pub fn split(&self, pred: impl Fn(Var) -> bool) -> (Monomial, Monomial) {
        let (yes, no): (Vec<_>, Vec<_>) = self.exps.iter().partition(|(v, _)| pred(*v));
        (Monomial::from_sorted(0, yes), Monomial::from_sorted(self.beta, no))
    }

    fn fits(&self, ctx: &TruncationContext) -> bool {
        self.degree <= ctx.max_deg && self.exps.iter().all(|&(v, _)| ctx.contains(v))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then(self.beta.cmp(&other.beta))
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.beta {
            0 => {}
            1 => parts.push("B".to_string()),
            e => parts.push(format!("B^{e}")),
        }
        for &(v, e) in &self.exps {
            if e == 1 {
                parts.push(v.to_string());
            } else {
                parts.push(format!("{v}^{e}"));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// An element of the truncated ring. Immutable in spirit: all operations
/// return new values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    ctx: TruncationContext,
    terms: BTreeMap<Monomial, Rational>,
}

impl Series {
    pub fn zero(ctx: TruncationContext) -> Self {
        Self {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: TruncationContext) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: TruncationContext, c: Rational) -> Self {
        Self::monomial(ctx, c, Monomial::one())
    }

    pub fn from_int(ctx: TruncationContext, c: i64) -> Self {
        Self::constant(ctx, rat(c))
    }

    /// `c · β^e`.
    pub fn beta_term(ctx: TruncationContext, c: Rational, e: u32) -> Self {
        Self::monomial(ctx, c, Monomial::beta_pow(e))
    }

    pub fn beta(ctx: TruncationContext) -> Self {
        Self::beta_term(ctx, Rational::one(), 1)
    }

    /// A single variable; errors if it lies outside the context caps.
    pub fn var(ctx: TruncationContext, v: Var) -> Result<Self> {
        if !ctx.contains(v) {
            return Err(Error::VariableOutOfRange { var: v, ctx });
        }
        Ok(Self::monomial(ctx, Rational::one(), Monomial::var(v)))
    }

    pub fn x(ctx: TruncationContext, i: u32) -> Result<Self> {
        Self::var(ctx, Var::X(i))
    }

    pub fn a(ctx: TruncationContext, i: u32) -> Result<Self> {
        Self::var(ctx, Var::A(i))
    }

    pub fn b(ctx: TruncationContext, i: u32) -> Result<Self> {
        Self::var(ctx, Var::B(i))
    }

    /// `c · m`, silently zero if `m` is truncated away.
    pub fn monomial(ctx: TruncationContext, c: Rational, m: Monomial) -> Self {
        let mut s = Self::zero(ctx);
        if !c.is_zero() && m.fits(&ctx) {
            s.terms.insert(m, c);
        }
        s
    }

    /// Collects terms, summing duplicates and truncating.
    pub fn from_terms(
        ctx: TruncationContext,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut s = Self::zero(ctx);
        for (m, c) in terms {
            s.add_term(m, c);
        }
        s
    }

    pub fn ctx(&self) -> TruncationContext {
        self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The rational constant term (monomial `1`).
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    /// Smallest xab-degree of a term, `None` for zero.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.xab_degree())
    }

    /// Adds `c·m` in place, respecting truncation.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() || !m.fits(&self.ctx) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// True when every term has graded degree `d`.
    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.terms.keys().all(|m| m.graded_degree() == d)
    }

    /// Every variable that occurs.
    pub fn variables(&self) -> std::collections::BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn involves(&self, pred: impl Fn(Var) -> bool) -> bool {
        self.terms.keys().any(|m| m.vars().any(&pred))
    }

    /// Keeps only terms satisfying `pred`.
    pub fn filter_terms(&self, pred: impl Fn(&Monomial) -> bool) -> Series {
        Series {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| pred(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Moves the series into another context. Variables beyond the new caps
    /// are set to zero and degrees beyond the new cutoff dropped; raising
    /// `max_deg` would invent information and is rejected.
    pub fn project(&self, ctx: TruncationContext) -> Result<Series> {
        if ctx.max_deg > self.ctx.max_deg {
            return Err(Error::DegreeIncrease {
                from: self.ctx.max_deg,
                to: ctx.max_deg,
            });
        }
        Ok(Series {
            ctx,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.fits(&ctx))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Specializes `β = 0`.
    pub fn at_beta_zero(&self) -> Series {
        self.filter_terms(|m| m.beta() == 0)
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub(crate) fn check_ctx(&self, other: &Series) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch {
                left: self.ctx,
                right: other.ctx,
            });
        }
        Ok(())
    }

    pub(crate) fn raw_terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }
}

impl fmt::Display for Series {
    /// Canonical text form, e.g. `2*B*x1^2*b1 - x2 + 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let is_one_mono = m.beta() == 0 && m.exps().is_empty();
            if abs.is_one() {
                write!(f, "{m}")?;
            } else if is_one_mono {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
