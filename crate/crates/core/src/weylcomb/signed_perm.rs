use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A signed permutation of finite support, stored by its one-line notation
/// with trailing fixed points trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity() -> Self {
        SignedPermutation { images: Vec::new() }
    }

    /// Builds `w` from `(w(1), …, w(n))`. The absolute values must be a
    /// permutation of `1..=n`.
    pub fn from_one_line(images: impl Into<Vec<i32>>) -> Result<Self> {
        let images = images.into();
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a signed permutation of 1..{n}"
                )));
            }
            seen[a] = true;
        }
        let mut w = SignedPermutation { images };
        w.trim();
        Ok(w)
    }

    fn trim(&mut self) {
        while let Some(&last) = self.images.last() {
            if last == self.images.len() as i32 {
                self.images.pop();
            } else {
                break;
            }
        }
    }

    /// The simple reflection `s_i` (`s_0` negates 1).
    pub fn simple(i: u32) -> Self {
        let i = i as usize;
        if i == 0 {
            return SignedPermutation { images: vec![-1] };
        }
        let mut images: Vec<i32> = (1..=i as i32 + 1).collect();
        images.swap(i - 1, i);
        SignedPermutation { images }
    }

    /// Largest moved index; 0 for the identity.
    pub fn support(&self) -> usize {
        self.images.len()
    }

    /// `w(i)` for any nonzero `i`.
    pub fn apply(&self, i: i32) -> i32 {
        assert!(i != 0, "signed permutations act on nonzero integers");
        let a = i.unsigned_abs() as usize;
        let v = if a <= self.images.len() {
            self.images[a - 1]
        } else {
            a as i32
        };
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// The one-line notation in a window of size `n ≥ support`.
    pub fn window(&self, n: usize) -> Vec<i32> {
        (1..=n.max(self.support()) as i32).map(|i| self.apply(i)).collect()
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let n = self.support().max(other.support());
        let images = (1..=n as i32).map(|i| self.apply(other.apply(i))).collect();
        let mut w = SignedPermutation { images };
        w.trim();
        w
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.support();
        let mut images = vec![0; n];
        for (i, &v) in self.images.iter().enumerate() {
            let pos = v.unsigned_abs() as usize - 1;
            images[pos] = if v < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        SignedPermutation { images }
    }

    /// Coxeter length: inversions plus pairs `i ≤ j` with `w(i) + w(j) < 0`.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut len = 0;
        for i in 0..w.len() {
            for j in i..w.len() {
                if i < j && w[i] > w[j] {
                    len += 1;
                }
                if w[i] + w[j] < 0 {
                    len += 1;
                }
            }
        }
        len
    }

    /// `w·s_i`: acts on positions.
    pub fn right_mul_simple(&self, i: u32) -> SignedPermutation {
        let i = i as usize;
        let mut images = self.window(i + 1);
        if i == 0 {
            images[0] = -images[0];
        } else {
            images.swap(i - 1, i);
        }
        let mut w = SignedPermutation { images };
        w.trim();
        w
    }

    /// Enumerates `W_n` (all `2^n n!` elements), in lexicographic order of
    /// one-line windows.
    pub fn all_of_rank(n: usize) -> Vec<SignedPermutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(n: usize, cur: &mut Vec<i32>, used: &mut [bool], out: &mut Vec<SignedPermutation>) {
            if cur.len() == n {
                let mut w = SignedPermutation { images: cur.clone() };
                w.trim();
                out.push(w);
                return;
            }
            for v in (-(n as i32)..=n as i32).filter(|&v| v != 0) {
                let a = v.unsigned_abs() as usize;
                if !used[a] {
                    used[a] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[a] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.images.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SignedPermutation::identity());
        }
        let images = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad signed permutation {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::from_one_line(images)
    }
}

impl TryFrom<String> for SignedPermutation {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SignedPermutation> for String {
    fn from(w: SignedPermutation) -> String {
        w.to_string()
    }
}
