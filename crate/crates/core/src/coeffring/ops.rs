//! Ring operations. The operator impls panic on a context mismatch; the
//! `checked_*` methods report it as an [`Error`].

use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Monomial, Rational, Series};
use crate::error::Result;

impl Series {
    pub fn checked_add(&self, other: &Series) -> Result<Series> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in other.raw_terms() {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Series) -> Result<Series> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in other.raw_terms() {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Series) -> Result<Series> {
        self.check_ctx(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Series) -> Series {
        let ctx = self.ctx();
        let max = ctx.max_deg;
        if self.is_zero() || other.is_zero() {
            return Series::zero(ctx);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        // Both maps iterate in ascending xab-degree, so the inner loop can stop
        // at the first overflow.
        for (ma, ca) in self.raw_terms() {
            let da = ma.xab_degree();
            if da > max {
                break;
            }
            for (mb, cb) in other.raw_terms() {
                if da + mb.xab_degree() > max {
                    break;
                }
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Series::from_terms(ctx, acc.into_iter().filter(|(_, c)| !c.is_zero()))
    }

    /// Multiplies every coefficient by a rational.
    pub fn scale(&self, c: &Rational) -> Series {
        if c.is_zero() {
            return Series::zero(self.ctx());
        }
        Series::from_terms(
            self.ctx(),
            self.raw_terms().iter().map(|(m, v)| (m.clone(), v * c)),
        )
    }

    /// Multiplies by a monomial `c·m` (cheaper than a full product).
    pub fn mul_monomial(&self, c: &Rational, m: &Monomial) -> Series {
        Series::from_terms(
            self.ctx(),
            self.raw_terms()
                .iter()
                .map(|(k, v)| (k.mul(m), v * c)),
        )
    }

    pub fn pow(&self, e: u32) -> Series {
        let mut out = Series::one(self.ctx());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// `[1, s, s², …, s^e]`.
    pub fn powers(&self, e: u32) -> Vec<Series> {
        let mut out = Vec::with_capacity(e as usize + 1);
        out.push(Series::one(self.ctx()));
        for i in 1..=e as usize {
            let next = &out[i - 1] * self;
            out.push(next);
        }
        out
    }

    /// Sums an iterator of series sharing `ctx`.
    pub fn sum<'a>(
        ctx: super::TruncationContext,
        items: impl IntoIterator<Item = &'a Series>,
    ) -> Series {
        let mut out = Series::zero(ctx);
        for s in items {
            assert_eq!(s.ctx(), ctx, "truncation context mismatch in sum");
            for (m, c) in s.raw_terms() {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.num_terms() == 1 && self.constant_term().is_one()
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Series> for &Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                self.$checked(rhs).expect("truncation context mismatch")
            }
        }
        impl $tr<Series> for Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Series> for Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                (&self).$method(rhs)
            }
        }
        impl $tr<Series> for &Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.scale(&-Rational::one())
    }
}

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}
