//! Hamming, l∞ and word distances on `S^B_n`.
//!
//! The word distance is `d_W(σ, π) = ℓ_B(π⁻¹σ)`, where the Coxeter length
//! `ℓ_B` is computed from the window as `neg + inv + nsp`. A breadth-first
//! search over the Cayley graph provides an independent check of `ℓ_B`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{compose_into, group_order, inverse_into, rank_window, SignedPermutation, MAX_N};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricKind {
    Word,
    Hamming,
    #[serde(rename = "linf")]
    LInf,
}

impl MetricKind {
    /// Column order of the data tables.
    pub const ALL: [MetricKind; 3] = [MetricKind::Word, MetricKind::Hamming, MetricKind::LInf];

    pub fn name(self) -> &'static str {
        match self {
            MetricKind::Word => "word",
            MetricKind::Hamming => "hamming",
            MetricKind::LInf => "linf",
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MetricKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "word" | "w" => Ok(MetricKind::Word),
            "hamming" | "ham" | "h" => Ok(MetricKind::Hamming),
            "linf" | "l-inf" | "linfinity" | "l_infinity" => Ok(MetricKind::LInf),
            _ => Err(format!("unknown metric `{s}` (expected word, hamming or linf)")),
        }
    }
}

fn same_size(a: &SignedPermutation, b: &SignedPermutation) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch { left: a.n(), right: b.n() });
    }
    Ok(())
}

#[inline]
pub(crate) fn hamming_raw(a: &[i8], b: &[i8]) -> u32 {
    a.iter().zip(b).filter(|(x, y)| x != y).count() as u32
}

#[inline]
pub(crate) fn l_infinity_raw(a: &[i8], b: &[i8]) -> u32 {
    a.iter().zip(b).map(|(&x, &y)| (x as i32 - y as i32).unsigned_abs()).max().unwrap_or(0)
}

/// `neg + inv + nsp` in one pass over the pairs.
#[inline]
pub(crate) fn length_raw(w: &[i8]) -> u32 {
    let mut total = 0u32;
    for (i, &a) in w.iter().enumerate() {
        total += (a < 0) as u32;
        for &b in &w[i + 1..] {
            total += (a > b) as u32 + ((a as i16 + b as i16) < 0) as u32;
        }
    }
    total
}

/// Word distance given the precomputed inverse window of the second argument.
#[inline]
pub(crate) fn word_raw(sigma: &[i8], pi_inverse: &[i8]) -> u32 {
    let mut buf = [0i8; MAX_N];
    let out = &mut buf[..sigma.len()];
    compose_into(pi_inverse, sigma, out);
    length_raw(out)
}

pub fn hamming(a: &SignedPermutation, b: &SignedPermutation) -> Result<u32> {
    same_size(a, b)?;
    Ok(hamming_raw(a.window(), b.window()))
}

pub fn l_infinity(a: &SignedPermutation, b: &SignedPermutation) -> Result<u32> {
    same_size(a, b)?;
    Ok(l_infinity_raw(a.window(), b.window()))
}

/// Number of negative entries.
pub fn negatives(p: &SignedPermutation) -> u32 {
    p.window().iter().filter(|&&v| v < 0).count() as u32
}

/// Pairs `i < j` with `σ(i) > σ(j)`.
pub fn inversions(p: &SignedPermutation) -> u32 {
    let w = p.window();
    (0..w.len()).map(|i| w[i + 1..].iter().filter(|&&b| w[i] > b).count() as u32).sum()
}

/// Pairs `i < j` with `σ(i) + σ(j) < 0`.
pub fn negative_sum_pairs(p: &SignedPermutation) -> u32 {
    let w = p.window();
    (0..w.len())
        .map(|i| w[i + 1..].iter().filter(|&&b| (w[i] as i16 + b as i16) < 0).count() as u32)
        .sum()
}

/// Coxeter length in type B: the fewest generators whose product is `p`.
pub fn length_b(p: &SignedPermutation) -> u32 {
    length_raw(p.window())
}

/// `ℓ_B(π⁻¹σ)`.
pub fn word_distance(sigma: &SignedPermutation, pi: &SignedPermutation) -> Result<u32> {
    same_size(sigma, pi)?;
    let mut inv = [0i8; MAX_N];
    inverse_into(pi.window(), &mut inv[..pi.n()]);
    Ok(word_raw(sigma.window(), &inv[..pi.n()]))
}

pub fn distance(kind: MetricKind, a: &SignedPermutation, b: &SignedPermutation) -> Result<u32> {
    match kind {
        MetricKind::Hamming => hamming(a, b),
        MetricKind::LInf => l_infinity(a, b),
        MetricKind::Word => word_distance(a, b),
    }
}

/// Cayley-graph distance from the identity for every element of `S^B_n`,
/// indexed by [`SignedPermutation::rank`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    distances: Vec<u8>,
}

impl DistanceTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.distances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.distances.is_empty()
    }

    pub fn get(&self, p: &SignedPermutation) -> Option<u32> {
        if p.n() != self.n {
            return None;
        }
        self.distances.get(rank_window(p.window()) as usize).map(|&d| d as u32)
    }

    /// `(element, distance)` in rank order.
    pub fn iter(&self) -> impl Iterator<Item = (SignedPermutation, u32)> + '_ {
        self.distances.iter().enumerate().map(move |(r, &d)| {
            (SignedPermutation::from_rank(self.n, r as u64).expect("rank in range"), d as u32)
        })
    }
}

pub const BFS_MIN_N: usize = 2;
pub const BFS_MAX_N: usize = 6;

/// Breadth-first search from the identity using right multiplication by
/// `s_0, …, s_{n-1}`.
pub fn bfs_word_lengths(n: usize) -> Result<DistanceTable> {
    if !(BFS_MIN_N..=BFS_MAX_N).contains(&n) {
        return Err(Error::SizeCap { n, min: BFS_MIN_N, max: BFS_MAX_N });
    }
    const UNSEEN: u8 = u8::MAX;
    let order = group_order(n)? as usize;
    let mut distances = vec![UNSEEN; order];
    let mut queue = VecDeque::new();
    let start = SignedPermutation::identity(n)?;
    distances[0] = 0;
    queue.push_back(start);
    while let Some(p) = queue.pop_front() {
        let d = distances[rank_window(p.window()) as usize];
        let mut w = [0i8; MAX_N];
        for k in 0..n {
            w[..n].copy_from_slice(p.window());
            if k == 0 {
                w[0] = -w[0];
            } else {
                w.swap(k - 1, k);
            }
            let r = rank_window(&w[..n]) as usize;
            if distances[r] == UNSEEN {
                distances[r] = d + 1;
                queue.push_back(SignedPermutation::from_valid(&w[..n]));
            }
        }
    }
    debug_assert!(distances.iter().all(|&d| d != UNSEEN));
    Ok(DistanceTable { n, distances })
}
