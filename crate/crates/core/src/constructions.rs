//! Canonical members of a peak class and pairs realizing extremal distances.
//!
//! The four bracket constructions start from the identity, its negation, its
//! reversal and its negated reversal, then swap window positions determined
//! by the peak set:
//!
//! | construction                  | start           | swap positions |
//! |-------------------------------|-----------------|----------------|
//! | [`identity_with_peaks`]       | `1 2 … n`       | `k, k+1`       |
//! | [`negated_reverse_with_peaks`]| `-n … -2 -1`    | `k, k+1`       |
//! | [`reverse_with_peaks`]        | `n … 2 1`       | `k-1, k`       |
//! | [`negated_identity_with_peaks`]| `-1 -2 … -n`   | `k-1, k`       |
//!
//! for each `k` in the peak set. Every result is checked to have exactly
//! the requested peak set.

use crate::error::{Error, Result};
use crate::extremal::predicted_extremes;
use crate::metrics::{distance, MetricKind};
use crate::peaks::{peak_set, PeakSet};
use crate::perm::{SignedPermutation, MAX_N};

fn require_admissible(set: &PeakSet) -> Result<()> {
    if set.n() < 1 || !set.is_admissible() {
        return Err(Error::Inadmissible(set.to_string()));
    }
    Ok(())
}

/// `offset = 0` swaps positions `k, k+1`; `offset = 1` swaps `k-1, k`.
fn swap_positions(start: SignedPermutation, set: &PeakSet, offset: usize) -> Result<SignedPermutation> {
    require_admissible(set)?;
    let n = set.n();
    let mut w = [0i8; MAX_N];
    w[..n].copy_from_slice(start.window());
    for k in set.indices() {
        // 1-based positions k - offset and k + 1 - offset
        w.swap(k - 1 - offset, k - offset);
    }
    let out = SignedPermutation::from_valid(&w[..n]);
    assert_eq!(peak_set(&out), *set, "construction {out} misses its peak set");
    Ok(out)
}

pub fn identity_with_peaks(set: &PeakSet) -> Result<SignedPermutation> {
    swap_positions(SignedPermutation::identity(set.n())?, set, 0)
}

pub fn negated_reverse_with_peaks(set: &PeakSet) -> Result<SignedPermutation> {
    swap_positions(SignedPermutation::identity(set.n())?.reversed().barred(), set, 0)
}

pub fn reverse_with_peaks(set: &PeakSet) -> Result<SignedPermutation> {
    swap_positions(SignedPermutation::identity(set.n())?.reversed(), set, 1)
}

pub fn negated_identity_with_peaks(set: &PeakSet) -> Result<SignedPermutation> {
    swap_positions(SignedPermutation::identity(set.n())?.barred(), set, 1)
}

/// A pair `(σ, π)` in the class of `set` at word distance `n² - |S|`.
pub fn max_word_pair(set: &PeakSet) -> Result<(SignedPermutation, SignedPermutation)> {
    require_admissible(set)?;
    let n = set.n() as i64;
    let mut sigma = Vec::with_capacity(set.n());
    let mut pi = Vec::with_capacity(set.n());
    for j in 1..=n {
        let here = set.contains(j as usize);
        let next = set.contains(j as usize + 1);
        sigma.push(if here {
            n - j + 2
        } else if next {
            -(n - j)
        } else {
            n - j + 1
        });
        pi.push(if here { n - j + 1 } else { -(n - j + 1) });
    }
    let sigma = SignedPermutation::new(&sigma)?;
    let pi = SignedPermutation::new(&pi)?;
    assert_eq!(peak_set(&sigma), *set);
    assert_eq!(peak_set(&pi), *set);
    Ok((sigma, pi))
}

/// Class members at distance 1 from [`identity_with_peaks`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinWitnesses {
    pub base: SignedPermutation,
    /// `base` with its first entry negated; Hamming and word distance 1.
    pub sign_flip: SignedPermutation,
    /// `base` with the values 1 and 2 exchanged; l∞ distance 1.
    pub value_swap: SignedPermutation,
}

impl MinWitnesses {
    pub fn pair(&self, kind: MetricKind) -> (SignedPermutation, SignedPermutation) {
        match kind {
            MetricKind::Hamming | MetricKind::Word => (self.base, self.sign_flip),
            MetricKind::LInf => (self.base, self.value_swap),
        }
    }
}

pub fn min_witnesses(set: &PeakSet) -> Result<MinWitnesses> {
    require_admissible(set)?;
    if set.n() < 2 {
        return Err(Error::InvalidSize(set.n()));
    }
    let base = identity_with_peaks(set)?;
    let sign_flip = base.apply_generator_right(crate::perm::GeneratorIndex::SIGN_FLIP)?;
    let w: Vec<i64> = base
        .to_vec()
        .into_iter()
        .map(|v| match v {
            1 => 2,
            2 => 1,
            other => other,
        })
        .collect();
    let value_swap = SignedPermutation::new(&w)?;
    for p in [&sign_flip, &value_swap] {
        assert_eq!(peak_set(p), *set, "minimum witness {p} left the class");
    }
    Ok(MinWitnesses { base, sign_flip, value_swap })
}

/// A pair in the class of `set` attaining the maximum distance for `kind`.
pub fn max_witnesses(set: &PeakSet, kind: MetricKind) -> Result<(SignedPermutation, SignedPermutation)> {
    require_admissible(set)?;
    let n = set.n();
    if n < 2 {
        return Err(Error::InvalidSize(n));
    }
    let pair = match kind {
        MetricKind::Word => max_word_pair(set)?,
        MetricKind::Hamming => (identity_with_peaks(set)?, negated_identity_with_peaks(set)?),
        MetricKind::LInf => {
            let both_ends = set.contains(2) && set.contains(n - 1);
            if !set.contains(2) || both_ends {
                (reverse_with_peaks(set)?, negated_reverse_with_peaks(set)?)
            } else {
                (identity_with_peaks(set)?, negated_identity_with_peaks(set)?)
            }
        }
    };
    assert_eq!(
        distance(kind, &pair.0, &pair.1)?,
        predicted_extremes(set, kind)?.max,
        "{kind} maximum witness for {set} at n = {n} misses the predicted value"
    );
    Ok(pair)
}
