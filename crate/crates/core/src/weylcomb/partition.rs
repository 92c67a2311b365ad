use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::SignedPermutation;
use crate::error::{Error, Result};

/// A `k`-strict partition: parts larger than `k` are distinct.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KStrictPartition {
    k: u32,
    parts: Vec<u32>,
}

/// Characteristic index data for a partition, padded to some length `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharIndex {
    pub chi: Vec<i64>,
    pub gamma: Vec<u32>,
}

impl KStrictPartition {
    /// Validates and strips trailing zeros.
    pub fn new(k: u32, parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition {
                    k,
                    parts,
                    reason: "parts must be weakly decreasing".into(),
                });
            }
            if w[0] > k && w[0] == w[1] {
                return Err(Error::InvalidPartition {
                    k,
                    parts: parts.clone(),
                    reason: format!("repeated part {} exceeds k", w[0]),
                });
            }
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                k,
                parts,
                reason: "zero part before a nonzero one".into(),
            });
        }
        Ok(KStrictPartition { k, parts })
    }

    pub fn empty(k: u32) -> Self {
        KStrictPartition { k, parts: Vec::new() }
    }

    /// Parses `"6,1"`; the empty string and `"0"` give the empty partition.
    pub fn parse(s: &str, k: u32) -> Result<Self> {
        KStrictPartition::new(k, parse_parts(s)?)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`; zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Membership in `SP^k(n)`: length at most `n - k`, first part at most `n + k`.
    pub fn in_rectangle(&self, n: u32) -> bool {
        n >= self.k && self.len() as u32 <= n - self.k && self.part(1) <= n + self.k
    }

    /// The same parts viewed as a `k'`-strict partition.
    pub fn with_k(&self, k: u32) -> Result<Self> {
        KStrictPartition::new(k, self.parts.clone())
    }

    /// Size ascending, then lexicographically descending.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl fmt::Display for KStrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
        })
        .collect()
}

/// The partition of a `k`-Grassmannian element.
pub fn w_to_partition(w: &SignedPermutation, k: u32) -> Result<KStrictPartition> {
    let k = k as usize;
    let one_line = w.window(k.max(w.support()));
    let not_grass = |position: usize, reason: &'static str| Error::NotGrassmannian {
        k: k as u32,
        position,
        reason,
    };
    let (v, rest) = one_line.split_at(k);
    for (p, pair) in v.windows(2).enumerate() {
        if pair[0] >= pair[1] {
            return Err(not_grass(p + 2, "first k entries must increase"));
        }
    }
    if let Some(p) = v.iter().position(|&x| x < 0) {
        return Err(not_grass(p + 1, "first k entries must be positive"));
    }
    let s = rest.iter().take_while(|&&x| x < 0).count();
    let (neg, pos) = rest.split_at(s);
    for (p, pair) in neg.windows(2).enumerate() {
        if pair[0] >= pair[1] {
            return Err(not_grass(k + p + 2, "negative block must increase"));
        }
    }
    for (p, pair) in pos.windows(2).enumerate() {
        if pair[0] >= pair[1] {
            return Err(not_grass(k + s + p + 2, "trailing positive block must increase"));
        }
    }
    if let Some(p) = pos.iter().position(|&x| x < 0) {
        return Err(not_grass(k + s + p + 1, "negative entry after the positive block"));
    }
    let mut parts: Vec<u32> = neg.iter().map(|&z| (-z) as u32 + k as u32).collect();
    for &u in pos {
        let nu = v.iter().filter(|&&x| x > u).count() as u32;
        if nu == 0 {
            break;
        }
        parts.push(nu);
    }
    KStrictPartition::new(k as u32, parts)
}

/// The minimal-length representative in `W_n` of the coset labelled by `λ`.
pub fn partition_to_w(lambda: &KStrictPartition, n: u32) -> Result<SignedPermutation> {
    if !lambda.in_rectangle(n) {
        return Err(Error::OutsideRectangle {
            partition: lambda.to_string(),
            k: lambda.k(),
            n,
        });
    }
    let k = lambda.k() as usize;
    let n = n as usize;
    let zeta: Vec<usize> = lambda
        .parts()
        .iter()
        .take_while(|&&p| p as usize > k)
        .map(|&p| p as usize - k)
        .collect();
    let s = zeta.len();
    let rest: Vec<usize> = (1..=n).filter(|x| !zeta.contains(x)).collect();
    let mut u = Vec::with_capacity(n - k - s);
    for i in 1..=n - k - s {
        let nu = lambda.part(s + i) as usize;
        u.push(rest[i + k - nu - 1]);
    }
    let v: Vec<usize> = rest.iter().copied().filter(|x| !u.contains(x)).collect();
    let mut images: Vec<i32> = v.iter().map(|&x| x as i32).collect();
    images.extend(zeta.iter().map(|&z| -(z as i32)));
    images.extend(u.iter().map(|&x| x as i32));
    SignedPermutation::from_one_line(images)
}

/// `χ_j = λ_j - j + γ_j - k` and `γ_j` for `j = 1..=m`.
pub fn char_index(lambda: &KStrictPartition, m: usize) -> CharIndex {
    let k = lambda.k() as i64;
    let mut chi = Vec::with_capacity(m);
    let mut gamma = Vec::with_capacity(m);
    for j in 1..=m {
        let lj = lambda.part(j) as i64;
        let g = (1..j)
            .filter(|&i| lambda.part(i) as i64 + lj > 2 * k + (j - i) as i64)
            .count() as u32;
        gamma.push(g);
        chi.push(lj - j as i64 + g as i64 - k);
    }
    CharIndex { chi, gamma }
}

/// Pairs `(i, j)`, `1 ≤ i < j ≤ r`, with `χ_i + χ_j < 0`, lexicographically sorted.
pub fn d_set(lambda: &KStrictPartition) -> Vec<(usize, usize)> {
    let r = lambda.len();
    let chi = char_index(lambda, r).chi;
    let mut out = Vec::new();
    for i in 1..=r {
        for j in i + 1..=r {
            if chi[i - 1] + chi[j - 1] < 0 {
                out.push((i, j));
            }
        }
    }
    out
}

/// All of `SP^k(n)` in canonical order.
pub fn enumerate_sp_k(n: u32, k: u32) -> Vec<KStrictPartition> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let max_len = (n - k) as usize;
    let mut cur = Vec::new();
    fn rec(k: u32, max_len: usize, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<KStrictPartition>) {
        out.push(KStrictPartition {
            k,
            parts: cur.clone(),
        });
        if cur.len() == max_len {
            return;
        }
        for p in (1..=bound).rev() {
            let next_bound = if p > k { p - 1 } else { p };
            cur.push(p);
            rec(k, max_len, next_bound, cur, out);
            cur.pop();
        }
    }
    rec(k, max_len, n + k, &mut cur, &mut out);
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

/// Minimal-length representative of `w·W_(k)` inside `W_n`.
pub fn coset_rep(w: &SignedPermutation, k: u32, n: usize) -> SignedPermutation {
    let k = k as usize;
    let mut one_line = w.window(n.max(k));
    let (head, tail) = one_line.split_at_mut(k);
    for x in head.iter_mut() {
        *x = x.abs();
    }
    head.sort_unstable();
    tail.sort_unstable();
    SignedPermutation::from_one_line(one_line).expect("sorting preserves the permutation")
}

/// `g·λ` through the bijection with coset representatives.
pub fn weyl_act(g: &SignedPermutation, lambda: &KStrictPartition, n: u32) -> Result<KStrictPartition> {
    let w = partition_to_w(lambda, n)?;
    if g.support() > n as usize {
        return Err(Error::InvalidPermutation(format!("{g} is not in W_{n}")));
    }
    let rep = coset_rep(&g.compose(&w), lambda.k(), n as usize);
    let mu = w_to_partition(&rep, lambda.k())?;
    assert!(mu.in_rectangle(n), "W_n action left SP^k(n)");
    Ok(mu)
}
