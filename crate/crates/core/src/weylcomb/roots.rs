use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::SignedPermutation;
use crate::coeffring::{RootFactor, Series, TruncationContext};
use crate::error::{Error, Result};

/// Lie type of the isotropic Grassmannian: `B` odd orthogonal, `C` symplectic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    B,
    C,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieType::B => "B",
            LieType::C => "C",
        })
    }
}

impl FromStr for LieType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            _ => Err(Error::Parse(format!("unknown type {s:?}, expected B or C"))),
        }
    }
}

/// A positive root. Indices are 1-based with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Root {
    /// `ε_i` (type B)
    Short(u32),
    /// `2ε_i` (type C)
    Long(u32),
    /// `ε_j - ε_i`
    Diff { i: u32, j: u32 },
    /// `ε_j + ε_i`
    Sum { i: u32, j: u32 },
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Root::Short(i) => write!(f, "e{i}"),
            Root::Long(i) => write!(f, "2e{i}"),
            Root::Diff { i, j } => write!(f, "e{j}-e{i}"),
            Root::Sum { i, j } => write!(f, "e{j}+e{i}"),
        }
    }
}

impl Root {
    pub fn max_index(self) -> u32 {
        match self {
            Root::Short(i) | Root::Long(i) => i,
            Root::Diff { j, .. } | Root::Sum { j, .. } => j,
        }
    }

    /// The reflection `s_α` as a signed permutation.
    pub fn reflection(self) -> SignedPermutation {
        let n = self.max_index() as usize;
        let mut w: Vec<i32> = (1..=n as i32).collect();
        match self {
            Root::Short(i) | Root::Long(i) => w[i as usize - 1] = -(i as i32),
            Root::Diff { i, j } => w.swap(i as usize - 1, j as usize - 1),
            Root::Sum { i, j } => {
                w[i as usize - 1] = -(j as i32);
                w[j as usize - 1] = -(i as i32);
            }
        }
        SignedPermutation::from_one_line(w).expect("reflection is a signed permutation")
    }

    /// The non-unit factor of `e(α)` used for divisibility tests.
    pub fn factor(self) -> RootFactor {
        match self {
            Root::Short(i) | Root::Long(i) => RootFactor::B(i),
            Root::Diff { i, j } => RootFactor::Diff { i, j },
            Root::Sum { i, j } => RootFactor::Sum { i, j },
        }
    }
}

/// `Δ⁺_n` for the given type.
pub fn roots_up_to(n: u32, ty: LieType) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 1..=n {
        out.push(match ty {
            LieType::B => Root::Short(i),
            LieType::C => Root::Long(i),
        });
    }
    for j in 1..=n {
        for i in 1..j {
            out.push(Root::Diff { i, j });
            out.push(Root::Sum { i, j });
        }
    }
    out
}

/// The class `e(α)` in the b-variables.
pub fn e_of_root(alpha: Root, ctx: TruncationContext) -> Result<Series> {
    let b = |i| Series::b(ctx, i);
    match alpha {
        Root::Short(i) => b(i),
        Root::Long(i) => b(i)?.oplus(&b(i)?),
        Root::Diff { i, j } => b(j)?.ominus(&b(i)?),
        Root::Sum { i, j } => b(j)?.oplus(&b(i)?),
    }
}
