//! Peak sets of signed permutations.
//!
//! A peak is an interior position `i` (`2 <= i <= n - 1`) with
//! `σ(i-1) < σ(i) > σ(i+1)`, compared as signed integers.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{SignedPermutation, MAX_N};

/// A set of peak positions for window size `n`, stored as a bitmask
/// (bit `i` set iff position `i` is in the set).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PeakSet {
    n: u8,
    mask: u64,
}

impl PeakSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_N);
        Self { n: n as u8, mask: 0 }
    }

    /// Validates that every index lies in `2..=n-1` and that the indices
    /// are strictly increasing.
    pub fn new(n: usize, indices: &[usize]) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidSize(n));
        }
        let mut mask = 0u64;
        let mut prev = 0;
        for &i in indices {
            if i < 2 || i + 1 > n {
                return Err(Error::InvalidPeakSet(format!("index {i} is not interior for n = {n}")));
            }
            if i <= prev {
                return Err(Error::InvalidPeakSet(format!("indices must be strictly increasing, got {i} after {prev}")));
            }
            prev = i;
            mask |= 1 << i;
        }
        Ok(Self { n: n as u8, mask })
    }

    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        Self { n: n as u8, mask }
    }

    /// Parses `{}`, `∅` or a comma-separated list such as `{2,4}`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        if text == "∅" {
            return Self::new(n, &[]);
        }
        let inner = text
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::InvalidPeakSet(format!("expected `{{...}}`, got `{text}`")))?
            .trim();
        if inner.is_empty() {
            return Self::new(n, &[]);
        }
        let indices = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidPeakSet(format!("bad index `{}`", t.trim()))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, &indices)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 64 && self.mask >> i & 1 == 1
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (2..self.n()).filter(move |&i| self.contains(i))
    }

    /// True iff some signed permutation of size `n` has exactly this peak set,
    /// which happens iff no two indices are consecutive.
    pub fn is_admissible(&self) -> bool {
        self.mask & (self.mask >> 1) == 0
    }
}

impl Ord for PeakSet {
    /// By `n`, then cardinality, then lexicographically on the sorted indices.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for PeakSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PeakSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for PeakSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PeakSet(n={}, {self})", self.n)
    }
}

#[inline]
pub(crate) fn peak_mask(w: &[i8]) -> u64 {
    let mut mask = 0u64;
    for i in 1..w.len().saturating_sub(1) {
        if w[i - 1] < w[i] && w[i] > w[i + 1] {
            mask |= 1 << (i + 1);
        }
    }
    mask
}

pub fn peak_set(p: &SignedPermutation) -> PeakSet {
    PeakSet::from_mask(p.n(), peak_mask(p.window()))
}

pub fn is_admissible(set: &PeakSet) -> bool {
    set.is_admissible()
}

/// Every admissible peak set for window size `n`, ordered by cardinality and
/// then lexicographically. Always starts with the empty set.
pub fn admissible_sets(n: usize) -> Vec<PeakSet> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    collect_admissible(n, 2, &mut current, &mut out);
    out.sort();
    out
}

fn collect_admissible(n: usize, from: usize, current: &mut Vec<usize>, out: &mut Vec<PeakSet>) {
    out.push(PeakSet::new(n.max(1), current).expect("indices are interior and increasing"));
    // interior positions are 2..=n-1
    for i in from..n {
        current.push(i);
        collect_admissible(n, i + 2, current, out);
        current.pop();
    }
}

fn position_of_magnitude(w: &[i8], m: usize) -> usize {
    w.iter().position(|v| v.unsigned_abs() as usize == m).expect("every magnitude is present")
}

/// Exchanges the magnitudes `i` and `i + 1` in the window, each position
/// keeping its sign. Requires `2 <= i <= n - 1` and that the two magnitudes
/// sit at non-adjacent positions; the peak set is unchanged.
pub fn peak_preserving_value_swap(p: &SignedPermutation, i: usize) -> Result<SignedPermutation> {
    let n = p.n();
    if i < 2 || i + 1 > n {
        return Err(Error::ValueOutOfRange { value: i, n });
    }
    let w = p.window();
    let a = position_of_magnitude(w, i);
    let b = position_of_magnitude(w, i + 1);
    if a.abs_diff(b) == 1 {
        return Err(Error::AdjacentValues { value: i });
    }
    let mut out = [0i8; MAX_N];
    out[..n].copy_from_slice(w);
    out[a] = w[a].signum() * (i as i8 + 1);
    out[b] = w[b].signum() * i as i8;
    let swapped = SignedPermutation::from_valid(&out[..n]);
    assert_eq!(peak_set(&swapped), peak_set(p), "value swap changed the peak set of {p}");
    Ok(swapped)
}

/// Exchanges the entries `-n` and `-(n-1)`; the peak set is unchanged.
pub fn bar_n_swap(p: &SignedPermutation) -> Result<SignedPermutation> {
    let n = p.n();
    if n < 2 {
        return Err(Error::ValuesAbsent { n });
    }
    let w = p.window();
    let a = w.iter().position(|&v| v as i64 == -(n as i64));
    let b = w.iter().position(|&v| v as i64 == -(n as i64 - 1));
    let (Some(a), Some(b)) = (a, b) else {
        return Err(Error::ValuesAbsent { n });
    };
    let mut out = [0i8; MAX_N];
    out[..n].copy_from_slice(w);
    out.swap(a, b);
    let swapped = SignedPermutation::from_valid(&out[..n]);
    assert_eq!(peak_set(&swapped), peak_set(p), "swapping -n and -(n-1) changed the peak set of {p}");
    Ok(swapped)
}
