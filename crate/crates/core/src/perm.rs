//! Signed permutations of `{-n..-1, 1..n}` in one-line (window) notation.
//!
//! A signed permutation is determined by its window `σ(1) σ(2) … σ(n)`; the
//! values on negative arguments follow from `σ(-i) = -σ(i)`. Indices at the
//! API boundary are 1-based, storage is a fixed-capacity inline array so the
//! type is `Copy` and hot loops never allocate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest window size a [`SignedPermutation`] can hold.
pub const MAX_N: usize = 32;

/// Largest `n` for which `2^n · n!` fits in a `u64` rank.
pub const RANK_MAX_N: usize = 16;

/// An element of the hyperoctahedral group `S^B_n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    len: u8,
    // entries past `len` are always zero
    window: [i8; MAX_N],
}

/// Index of a Coxeter generator: `0` is the sign flip of the first entry,
/// `k >= 1` the adjacent transposition of positions `k` and `k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorIndex(pub usize);

impl GeneratorIndex {
    pub const SIGN_FLIP: GeneratorIndex = GeneratorIndex(0);
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidSize(n));
    }
    Ok(())
}

impl SignedPermutation {
    /// Builds a permutation from its window, validating every invariant.
    pub fn new(window: &[i64]) -> Result<Self> {
        let n = window.len();
        check_size(n)?;
        let mut seen = [false; MAX_N];
        let mut out = [0i8; MAX_N];
        for (slot, &v) in out.iter_mut().zip(window) {
            if v == 0 {
                return Err(Error::ZeroEntry);
            }
            let m = v.unsigned_abs();
            if m > n as u64 {
                return Err(Error::OutOfRange { value: v, n });
            }
            let m = m as usize;
            if seen[m - 1] {
                return Err(Error::RepeatedValue(v.abs()));
            }
            seen[m - 1] = true;
            *slot = v as i8;
        }
        Ok(Self { len: n as u8, window: out })
    }

    /// Builds from a window slice already known to be valid.
    pub(crate) fn from_valid(window: &[i8]) -> Self {
        debug_assert!(!window.is_empty() && window.len() <= MAX_N);
        let mut out = [0i8; MAX_N];
        out[..window.len()].copy_from_slice(window);
        let p = Self { len: window.len() as u8, window: out };
        debug_assert!(Self::new(&p.to_vec()).is_ok(), "invalid window {:?}", window);
        p
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_size(n)?;
        let mut out = [0i8; MAX_N];
        for (i, slot) in out.iter_mut().take(n).enumerate() {
            *slot = (i + 1) as i8;
        }
        Ok(Self { len: n as u8, window: out })
    }

    /// Coxeter generator `s_k` of `S^B_n`.
    pub fn generator(n: usize, k: GeneratorIndex) -> Result<Self> {
        Self::identity(n)?.apply_generator_right(k)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.len as usize
    }

    /// The one-line notation `σ(1) … σ(n)`.
    #[inline]
    pub fn window(&self) -> &[i8] {
        &self.window[..self.len as usize]
    }

    pub fn to_vec(&self) -> Vec<i64> {
        self.window().iter().map(|&v| v as i64).collect()
    }

    /// `σ(i)` for a 1-based index `i`, extended by `σ(-i) = -σ(i)`.
    pub fn get(&self, i: i64) -> Option<i64> {
        let m = i.unsigned_abs() as usize;
        if m == 0 || m > self.n() {
            return None;
        }
        let v = self.window[m - 1] as i64;
        Some(if i < 0 { -v } else { v })
    }

    pub fn is_identity(&self) -> bool {
        self.window().iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Every entry negated.
    pub fn barred(&self) -> Self {
        let mut out = *self;
        for v in &mut out.window[..self.len as usize] {
            *v = -*v;
        }
        out
    }

    /// The window read right to left.
    pub fn reversed(&self) -> Self {
        let mut out = *self;
        out.window[..self.len as usize].reverse();
        out
    }

    /// The product `self ∘ rhs`, i.e. `(τσ)(i) = τ(σ(i))`.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        if self.len != rhs.len {
            return Err(Error::SizeMismatch { left: self.n(), right: rhs.n() });
        }
        let mut out = *rhs;
        compose_into(self.window(), rhs.window(), &mut out.window[..rhs.len as usize]);
        Ok(out)
    }

    pub fn inverse(&self) -> Self {
        let mut out = *self;
        inverse_into(self.window(), &mut out.window[..self.len as usize]);
        out
    }

    /// `self ∘ s_k`: swaps positions `k` and `k + 1`, or negates position 1 for `k = 0`.
    pub fn apply_generator_right(&self, k: GeneratorIndex) -> Result<Self> {
        let n = self.n();
        if k.0 >= n {
            return Err(Error::IndexOutOfRange { k: k.0, n });
        }
        let mut out = *self;
        if k.0 == 0 {
            out.window[0] = -out.window[0];
        } else {
            out.window.swap(k.0 - 1, k.0);
        }
        Ok(out)
    }

    /// Dense index in `0..2^n·n!`: the lexicographic rank of the magnitude
    /// permutation, times `2^n`, plus the sign pattern read with position 1
    /// as the most significant bit.
    pub fn rank(&self) -> Result<u64> {
        let n = self.n();
        if n > RANK_MAX_N {
            return Err(Error::SizeCap { n, min: 1, max: RANK_MAX_N });
        }
        Ok(rank_window(self.window()))
    }

    /// Inverse of [`rank`](Self::rank).
    pub fn from_rank(n: usize, rank: u64) -> Result<Self> {
        let order = group_order(n)?;
        if rank >= order {
            return Err(Error::OutOfRange { value: rank as i64, n });
        }
        let signs = rank & ((1u64 << n) - 1);
        let mut lehmer = rank >> n;
        let mut pool: Vec<i8> = (1..=n as i8).collect();
        let mut out = [0i8; MAX_N];
        for i in 0..n {
            let f = factorial(n - 1 - i);
            let idx = (lehmer / f) as usize;
            lehmer %= f;
            let m = pool.remove(idx);
            let negative = signs >> (n - 1 - i) & 1 == 1;
            out[i] = if negative { -m } else { m };
        }
        Ok(Self { len: n as u8, window: out })
    }
}

pub(crate) fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// `|S^B_n| = 2^n · n!`.
pub fn group_order(n: usize) -> Result<u64> {
    if n == 0 || n > RANK_MAX_N {
        return Err(Error::SizeCap { n, min: 1, max: RANK_MAX_N });
    }
    Ok(factorial(n) << n)
}

pub(crate) fn rank_window(w: &[i8]) -> u64 {
    let n = w.len();
    let mut lehmer = 0u64;
    let mut signs = 0u64;
    for i in 0..n {
        let m = w[i].unsigned_abs();
        let smaller = w[i + 1..].iter().filter(|v| v.unsigned_abs() < m).count() as u64;
        lehmer = lehmer * (n - i) as u64 + smaller;
        signs = signs << 1 | (w[i] < 0) as u64;
    }
    lehmer << n | signs
}

/// `out = left ∘ right` on raw windows of equal length.
#[inline]
pub(crate) fn compose_into(left: &[i8], right: &[i8], out: &mut [i8]) {
    for (o, &v) in out.iter_mut().zip(right) {
        let t = left[(v.unsigned_abs() - 1) as usize];
        *o = if v < 0 { -t } else { t };
    }
}

#[inline]
pub(crate) fn inverse_into(w: &[i8], out: &mut [i8]) {
    for (i, &v) in w.iter().enumerate() {
        let pos = (i + 1) as i8;
        out[(v.unsigned_abs() - 1) as usize] = if v < 0 { -pos } else { pos };
    }
}

impl Ord for SignedPermutation {
    /// Size first, then signed lexicographic order on the window.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| self.window().cmp(other.window()))
    }
}

impl PartialOrd for SignedPermutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.window().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPermutation({self})")
    }
}

fn parse_token(tok: &str) -> Result<i64> {
    let malformed = || Error::MalformedToken(tok.to_string());
    let (negative, digits) = match tok.as_bytes().first() {
        Some(b'-') | Some(b'b') => (true, &tok[1..]),
        _ => (false, tok),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed());
    }
    let v: i64 = digits.parse().map_err(|_| malformed())?;
    Ok(if negative { -v } else { v })
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Accepts signed decimal tokens separated by whitespace or a single comma;
    /// a leading `b` on a token means the same as `-`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::InvalidSize(0));
        }
        // a separator is a run of whitespace holding at most one comma
        let mut values = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let end = rest.find(|c: char| c == ',' || c.is_whitespace()).unwrap_or(rest.len());
            if end == 0 {
                return Err(Error::MalformedToken(rest.chars().take(1).collect()));
            }
            values.push(parse_token(&rest[..end])?);
            rest = &rest[end..];
            let sep = rest.find(|c: char| c != ',' && !c.is_whitespace()).unwrap_or(rest.len());
            if rest[..sep].matches(',').count() > 1 || (sep == rest.len() && sep > 0) {
                return Err(Error::MalformedToken(rest[..sep].to_string()));
            }
            rest = &rest[sep..];
        }
        Self::new(&values)
    }
}

pub fn parse(text: &str) -> Result<SignedPermutation> {
    text.parse()
}

pub fn format(p: &SignedPermutation) -> String {
    p.to_string()
}
