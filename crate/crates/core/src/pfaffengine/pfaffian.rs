use crate::coeffring::{Series, TruncationContext};
use crate::error::{Error, Result};

/// A skew-symmetric matrix given by its strict upper triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewMatrix {
    size: usize,
    ctx: TruncationContext,
    upper: Vec<Series>,
}

impl SkewMatrix {
    pub fn zero(size: usize, ctx: TruncationContext) -> Self {
        SkewMatrix {
            size,
            ctx,
            upper: vec![Series::zero(ctx); size * size.saturating_sub(1) / 2],
        }
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.size);
        i * (2 * self.size - i - 1) / 2 + (j - i - 1)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ctx(&self) -> TruncationContext {
        self.ctx
    }

    /// Sets `A_ij` (and implicitly `A_ji = -A_ij`), 0-based, `i < j`.
    pub fn set(&mut self, i: usize, j: usize, value: Series) {
        assert_eq!(value.ctx(), self.ctx, "truncation context mismatch in matrix");
        let s = self.slot(i, j);
        self.upper[s] = value;
    }

    /// `A_ij` for any `i, j` (0-based).
    pub fn get(&self, i: usize, j: usize) -> Series {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.upper[self.slot(i, j)].clone(),
            Greater => -&self.upper[self.slot(j, i)],
            Equal => Series::zero(self.ctx),
        }
    }
}

/// Pfaffian by expansion along the first row.
pub fn pfaffian(a: &SkewMatrix) -> Result<Series> {
    if a.size % 2 == 1 {
        return Err(Error::OddPfaffian(a.size));
    }
    let idx: Vec<usize> = (0..a.size).collect();
    Ok(pf_rec(a, &idx))
}

fn pf_rec(a: &SkewMatrix, idx: &[usize]) -> Series {
    if idx.is_empty() {
        return Series::one(a.ctx);
    }
    let first = idx[0];
    let mut out = Series::zero(a.ctx);
    for pos in 1..idx.len() {
        let entry = a.get(first, idx[pos]);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..]
            .iter()
            .enumerate()
            .filter(|&(p, _)| p + 1 != pos)
            .map(|(_, &v)| v)
            .collect();
        let term = entry * pf_rec(a, &rest);
        // 1-based column index pos+1 gives sign (-1)^{pos+1}
        out = if pos % 2 == 1 { out + term } else { out - term };
    }
    out
}
