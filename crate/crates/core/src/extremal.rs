//! Exhaustive enumeration of `S^B_n`, brute-force extremal distances per peak
//! class, and the closed-form values they are checked against.
//!
//! Pair scans cover every unordered pair of distinct class members. Members
//! are sorted by [`SignedPermutation`]'s order first, so index order and
//! window order agree and witness tie-breaking reduces to comparing index
//! pairs. Work is split across a rayon pool; the per-chunk accumulators merge
//! with an associative, deterministic fold, so any thread count produces the
//! same report.

use rayon::prelude::*;

use crate::constructions::{max_witnesses, min_witnesses};
use crate::error::{Error, Result};
use crate::metrics::{bfs_word_lengths, distance, hamming_raw, l_infinity_raw, length_b, word_raw, MetricKind};
use crate::peaks::{admissible_sets, peak_mask, peak_set, PeakSet};
use crate::perm::{group_order, inverse_into, SignedPermutation, MAX_N};

/// Largest `n` for streaming enumeration.
pub const STREAM_CAP: usize = 8;
/// Largest `n` for pairwise scans by default.
pub const PAIRWISE_CAP: usize = 5;
/// Largest `n` for pairwise scans with `long_run` set.
pub const LONG_RUN_PAIRWISE_CAP: usize = 6;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScanOptions {
    /// Allow pairwise scans at `n = 6`.
    pub long_run: bool,
    /// Worker count; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl ScanOptions {
    pub fn pairwise_cap(&self) -> usize {
        if self.long_run {
            LONG_RUN_PAIRWISE_CAP
        } else {
            PAIRWISE_CAP
        }
    }

    fn check_pairwise(&self, n: usize, min: usize) -> Result<()> {
        let max = self.pairwise_cap();
        if n < min || n > max {
            return Err(Error::SizeCap { n, min, max });
        }
        Ok(())
    }

    fn run<R: Send>(&self, job: impl FnOnce() -> R + Send) -> R {
        match self.threads {
            Some(t) => rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .expect("thread pool")
                .install(job),
            None => job(),
        }
    }
}

/// Every element of `S^B_n` in rank order: magnitudes in lexicographic
/// order, and for each magnitude pattern all sign patterns with position 1
/// as the most significant sign bit (positive before negative).
#[derive(Clone, Debug)]
pub struct GroupIter {
    n: usize,
    magnitudes: [i8; MAX_N],
    signs: u64,
    done: bool,
}

impl Iterator for GroupIter {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        if self.done {
            return None;
        }
        let n = self.n;
        let mut w = [0i8; MAX_N];
        for i in 0..n {
            let negative = self.signs >> (n - 1 - i) & 1 == 1;
            w[i] = if negative { -self.magnitudes[i] } else { self.magnitudes[i] };
        }
        self.signs += 1;
        if self.signs == 1 << n {
            self.signs = 0;
            self.done = !next_permutation(&mut self.magnitudes[..n]);
        }
        Some(SignedPermutation::from_valid(&w[..n]))
    }
}

fn next_permutation(v: &mut [i8]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("successor exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn enumerate_group(n: usize) -> Result<GroupIter> {
    if n == 0 || n > STREAM_CAP {
        return Err(Error::SizeCap { n, min: 1, max: STREAM_CAP });
    }
    let mut magnitudes = [0i8; MAX_N];
    for (i, m) in magnitudes.iter_mut().take(n).enumerate() {
        *m = i as i8 + 1;
    }
    Ok(GroupIter { n, magnitudes, signs: 0, done: false })
}

/// The peak class of `set`; empty iff `set` is inadmissible.
pub fn enumerate_class(set: &PeakSet) -> Result<impl Iterator<Item = SignedPermutation>> {
    let n = set.n();
    if n < 2 {
        return Err(Error::SizeCap { n, min: 2, max: STREAM_CAP });
    }
    let mask = set.mask();
    Ok(enumerate_group(n)?.filter(move |p| peak_mask(p.window()) == mask))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Extremes {
    pub min: u32,
    pub max: u32,
}

/// Closed-form minimum and maximum over distinct pairs of the peak class.
pub fn predicted_extremes(set: &PeakSet, kind: MetricKind) -> Result<Extremes> {
    let n = set.n();
    if n < 2 {
        return Err(Error::InvalidSize(n));
    }
    if !set.is_admissible() {
        return Err(Error::Inadmissible(set.to_string()));
    }
    let n32 = n as u32;
    let max = match kind {
        MetricKind::Hamming => n32,
        MetricKind::LInf if set.contains(2) && set.contains(n - 1) => 2 * n32 - 1,
        MetricKind::LInf => 2 * n32,
        MetricKind::Word => n32 * n32 - set.len() as u32,
    };
    Ok(Extremes { min: 1, max })
}

/// Closed-form extremes over all distinct pairs of `S^B_n`.
pub fn predicted_overall(n: usize, kind: MetricKind) -> Result<Extremes> {
    if n < 2 {
        return Err(Error::InvalidSize(n));
    }
    let n = n as u32;
    let max = match kind {
        MetricKind::Hamming => n,
        MetricKind::LInf => 2 * n,
        MetricKind::Word => n * n,
    };
    Ok(Extremes { min: 1, max })
}

/// Which population a report describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Class(PeakSet),
    Overall,
}

impl std::fmt::Display for Scope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scope::Class(s) => write!(f, "{s}"),
            Scope::Overall => f.write_str("Overall"),
        }
    }
}

pub type Pair = (SignedPermutation, SignedPermutation);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalReport {
    pub n: usize,
    pub scope: Scope,
    pub metric: MetricKind,
    pub class_size: u64,
    pub observed_min: u32,
    pub observed_max: u32,
    pub predicted_min: u32,
    pub predicted_max: u32,
    pub min_witness: Pair,
    pub max_witness: Pair,
    pub agrees: bool,
}

impl ExtremalReport {
    fn new(n: usize, scope: Scope, metric: MetricKind, members: &[SignedPermutation], acc: &Acc, predicted: Extremes) -> Self {
        let (min, max) = (acc.min.expect("class has a pair"), acc.max.expect("class has a pair"));
        let pair = |b: Best| (members[b.i as usize], members[b.j as usize]);
        ExtremalReport {
            n,
            scope,
            metric,
            class_size: members.len() as u64,
            observed_min: min.value,
            observed_max: max.value,
            predicted_min: predicted.min,
            predicted_max: predicted.max,
            min_witness: pair(min),
            max_witness: pair(max),
            agrees: min.value == predicted.min && max.value == predicted.max,
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Best {
    value: u32,
    i: u32,
    j: u32,
}

#[derive(Clone, Copy, Debug, Default)]
struct Acc {
    min: Option<Best>,
    max: Option<Best>,
}

impl Acc {
    #[inline]
    fn offer(&mut self, value: u32, i: u32, j: u32) {
        // pairs arrive in increasing (i, j) order within one fold, so the
        // first occurrence of a value is the lexicographically smallest
        match self.min {
            Some(b) if value >= b.value => {}
            _ => self.min = Some(Best { value, i, j }),
        }
        match self.max {
            Some(b) if value <= b.value => {}
            _ => self.max = Some(Best { value, i, j }),
        }
    }

    fn merge(self, other: Acc) -> Acc {
        let key = |b: &Best| (b.i, b.j);
        let pick = |a: Option<Best>, b: Option<Best>, prefer_small: bool| match (a, b) {
            (None, x) | (x, None) => x,
            (Some(a), Some(b)) => {
                let a_wins = if a.value != b.value {
                    (a.value < b.value) == prefer_small
                } else {
                    key(&a) <= key(&b)
                };
                Some(if a_wins { a } else { b })
            }
        };
        Acc { min: pick(self.min, other.min, true), max: pick(self.max, other.max, false) }
    }
}

/// Scans all distinct pairs of `members` (sorted ascending) once, for
/// every requested metric at the same time.
fn scan_pairs(members: &[SignedPermutation], kinds: &[MetricKind], opts: &ScanOptions) -> Vec<Acc> {
    debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
    let k = kinds.len();
    let identity = || vec![Acc::default(); k];
    opts.run(|| {
        members
            .par_iter()
            .enumerate()
            .fold(identity, |mut acc, (i, a)| {
                let n = a.n();
                let aw = a.window();
                let mut inv = [0i8; MAX_N];
                inverse_into(aw, &mut inv[..n]);
                for (j, b) in members.iter().enumerate().skip(i + 1) {
                    let bw = b.window();
                    for (slot, kind) in acc.iter_mut().zip(kinds) {
                        let d = match kind {
                            MetricKind::Hamming => hamming_raw(aw, bw),
                            MetricKind::LInf => l_infinity_raw(aw, bw),
                            MetricKind::Word => word_raw(bw, &inv[..n]),
                        };
                        slot.offer(d, i as u32, j as u32);
                    }
                }
                acc
            })
            .reduce(identity, |a, b| a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect())
    })
}

fn class_members(set: &PeakSet) -> Result<Vec<SignedPermutation>> {
    let mut members: Vec<_> = enumerate_class(set)?.collect();
    members.sort_unstable();
    Ok(members)
}

fn group_members(n: usize) -> Result<Vec<SignedPermutation>> {
    let mut members: Vec<_> = enumerate_group(n)?.collect();
    members.sort_unstable();
    Ok(members)
}

fn class_reports(set: &PeakSet, kinds: &[MetricKind], opts: &ScanOptions) -> Result<Vec<ExtremalReport>> {
    let n = set.n();
    opts.check_pairwise(n, 2)?;
    if !set.is_admissible() {
        return Err(Error::Inadmissible(set.to_string()));
    }
    let members = class_members(set)?;
    let accs = scan_pairs(&members, kinds, opts);
    kinds
        .iter()
        .zip(&accs)
        .map(|(&kind, acc)| {
            Ok(ExtremalReport::new(n, Scope::Class(*set), kind, &members, acc, predicted_extremes(set, kind)?))
        })
        .collect()
}

fn overall_reports(n: usize, kinds: &[MetricKind], opts: &ScanOptions) -> Result<Vec<ExtremalReport>> {
    opts.check_pairwise(n, 2)?;
    let members = group_members(n)?;
    let accs = scan_pairs(&members, kinds, opts);
    kinds
        .iter()
        .zip(&accs)
        .map(|(&kind, acc)| Ok(ExtremalReport::new(n, Scope::Overall, kind, &members, acc, predicted_overall(n, kind)?)))
        .collect()
}

/// Brute-force extremes of `kind` over distinct pairs in the class of `set`.
pub fn brute_extremes(set: &PeakSet, kind: MetricKind, opts: &ScanOptions) -> Result<ExtremalReport> {
    Ok(class_reports(set, &[kind], opts)?.remove(0))
}

/// Brute-force extremes of `kind` over distinct pairs of the whole group.
pub fn overall_extremes(n: usize, kind: MetricKind, opts: &ScanOptions) -> Result<ExtremalReport> {
    Ok(overall_reports(n, &[kind], opts)?.remove(0))
}

pub const TABLE_MIN_N: usize = 3;

/// One report per admissible peak set and metric, then the whole-group rows;
/// rows in admissible-set order, metrics in [`MetricKind::ALL`] order.
pub fn figure1_table(n: usize, opts: &ScanOptions) -> Result<Vec<ExtremalReport>> {
    opts.check_pairwise(n, TABLE_MIN_N)?;
    let mut out = Vec::new();
    for set in admissible_sets(n) {
        out.extend(class_reports(&set, &MetricKind::ALL, opts)?);
    }
    out.extend(overall_reports(n, &MetricKind::ALL, opts)?);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Clause {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Clause { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub n: usize,
    pub clauses: Vec<Clause>,
}

impl Verification {
    pub fn all_passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Clause> {
        self.clauses.iter().find(|c| !c.passed)
    }
}

fn show_pair(p: &Pair) -> String {
    format!("{} | {}", p.0, p.1)
}

fn witness_clause(name: String, set: &PeakSet, kind: MetricKind, pair: Pair, expected: u32) -> Result<Clause> {
    let d = distance(kind, &pair.0, &pair.1)?;
    let in_class = peak_set(&pair.0) == *set && peak_set(&pair.1) == *set && pair.0 != pair.1;
    Ok(Clause::new(name, in_class && d == expected, format!("{} at distance {d}, expected {expected}", show_pair(&pair))))
}

fn extreme_clauses(r: &ExtremalReport, out: &mut Vec<Clause>) {
    let label = format!("{} {}", r.scope, r.metric);
    out.push(Clause::new(
        format!("{label} min"),
        r.observed_min == r.predicted_min,
        format!("observed {} expected {} witness {}", r.observed_min, r.predicted_min, show_pair(&r.min_witness)),
    ));
    out.push(Clause::new(
        format!("{label} max"),
        r.observed_max == r.predicted_max,
        format!("observed {} expected {} witness {}", r.observed_max, r.predicted_max, show_pair(&r.max_witness)),
    ));
}

/// Checks every closed-form extreme at size `n` against brute force, plus
/// the constructive witnesses, the word-distance upper bound on every pair,
/// and that the peak classes partition the group.
pub fn verify(n: usize, opts: &ScanOptions) -> Result<Verification> {
    opts.check_pairwise(n, 2)?;
    let mut clauses = Vec::new();
    let mut total = 0u64;
    for set in admissible_sets(n) {
        let reports = class_reports(&set, &MetricKind::ALL, opts)?;
        total += reports[0].class_size;
        let mins = min_witnesses(&set)?;
        for r in &reports {
            extreme_clauses(r, &mut clauses);
            if r.metric == MetricKind::Word {
                let bound = (n * n - set.len()) as u32;
                clauses.push(Clause::new(
                    format!("{set} word upper bound"),
                    r.observed_max <= bound,
                    format!("largest pair {} at {} vs bound {bound}", show_pair(&r.max_witness), r.observed_max),
                ));
            }
            clauses.push(witness_clause(
                format!("{set} {} constructive min", r.metric),
                &set,
                r.metric,
                mins.pair(r.metric),
                1,
            )?);
            clauses.push(witness_clause(
                format!("{set} {} constructive max", r.metric),
                &set,
                r.metric,
                max_witnesses(&set, r.metric)?,
                r.predicted_max,
            )?);
        }
    }
    let order = group_order(n)?;
    clauses.push(Clause::new(
        "peak classes partition the group",
        total == order,
        format!("sum of class sizes {total}, group order {order}"),
    ));
    for r in overall_reports(n, &MetricKind::ALL, opts)? {
        extreme_clauses(&r, &mut clauses);
    }
    Ok(Verification { n, clauses })
}

/// Compares the breadth-first Cayley-graph distance with the inversion
/// statistic on every element.
pub fn length_oracle_clause(n: usize) -> Result<Clause> {
    let table = bfs_word_lengths(n)?;
    let mismatch = table.iter().find(|(p, d)| length_b(p) != *d);
    Ok(match mismatch {
        None => Clause::new("BFS length equals inversion statistic", true, format!("{} elements", table.len())),
        Some((p, d)) => Clause::new(
            "BFS length equals inversion statistic",
            false,
            format!("{p}: BFS {d}, statistic {}", length_b(&p)),
        ),
    })
}
