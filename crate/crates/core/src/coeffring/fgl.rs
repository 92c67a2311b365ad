//! The multiplicative formal group law `u ⊕ v = u + v + βuv`.

use super::Series;
use crate::error::{Error, Result};

impl Series {
    /// `1/(1+s)` for `s` of positive xab-valuation, i.e. `Σ_j (-s)^j`, which
    /// terminates after `max_deg` steps.
    pub fn invert_one_plus(&self) -> Result<Series> {
        if matches!(self.valuation(), Some(0)) {
            return Err(Error::NotInvertible);
        }
        let ctx = self.ctx();
        let neg = -self;
        let mut out = Series::one(ctx);
        let mut power = Series::one(ctx);
        for _ in 0..ctx.max_deg {
            power = &power * &neg;
            if power.is_zero() {
                break;
            }
            out = &out + &power;
        }
        Ok(out)
    }

    /// `u ⊕ v`.
    pub fn oplus(&self, v: &Series) -> Result<Series> {
        let uv = self.checked_mul(v)?;
        Ok(self + v + Series::beta(self.ctx()) * uv)
    }

    /// `u ⊖ v = (u - v)/(1 + βv)`.
    pub fn ominus(&self, v: &Series) -> Result<Series> {
        let diff = self.checked_sub(v)?;
        let inv = (Series::beta(self.ctx()) * v).invert_one_plus()?;
        Ok(diff * inv)
    }

    /// The formal inverse `ū = -u/(1 + βu)`.
    pub fn bar(&self) -> Result<Series> {
        let inv = (Series::beta(self.ctx()) * self).invert_one_plus()?;
        Ok(-(self * inv))
    }
}
