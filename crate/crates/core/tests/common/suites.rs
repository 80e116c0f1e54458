//! Property checks shared by the `properties` and `acceptance` targets.

use std::collections::HashMap;

use super::{manifest, random_perm, rng_for};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, RngSeed, TestRunner};
use signed_peaks::constructions::{
    identity_with_peaks, max_word_pair, max_witnesses, min_witnesses, negated_identity_with_peaks,
    negated_reverse_with_peaks, reverse_with_peaks,
};
use signed_peaks::extremal::{enumerate_group, predicted_extremes};
use signed_peaks::metrics::{bfs_word_lengths, distance, hamming, l_infinity, length_b, word_distance};
use signed_peaks::peaks::{admissible_sets, bar_n_swap, peak_preserving_value_swap, peak_set};
use signed_peaks::perm::{format, group_order, parse};
use signed_peaks::{Error, GeneratorIndex, MetricKind, PeakSet, SignedPermutation};

fn all(n: usize) -> Vec<SignedPermutation> {
    enumerate_group(n).unwrap().collect()
}

/// Composition as functions on `±[n]`, built from lookup tables.
fn compose_oracle(tau: &SignedPermutation, sigma: &SignedPermutation) -> Vec<i64> {
    let n = sigma.n() as i64;
    let map_t: HashMap<i64, i64> = (-n..=n).filter(|&i| i != 0).map(|i| (i, tau.get(i).unwrap())).collect();
    (1..=n).map(|i| map_t[&sigma.get(i).unwrap()]).collect()
}

/// Length as the number of inversions of the full signed word
/// `σ(-n) … σ(-1) σ(1) … σ(n)`, plus negatives, halved.
fn length_oracle(p: &SignedPermutation) -> u32 {
    let n = p.n() as i64;
    let full: Vec<i64> = (-n..=n).filter(|&i| i != 0).map(|i| p.get(i).unwrap()).collect();
    let mut inv = 0u32;
    for i in 0..full.len() {
        for j in i + 1..full.len() {
            if full[i] > full[j] {
                inv += 1;
            }
        }
    }
    let neg = p.window().iter().filter(|&&v| v < 0).count() as u32;
    (inv + neg) / 2
}

fn peak_oracle(w: &[i8]) -> Vec<usize> {
    (1..w.len().saturating_sub(1)).filter(|&i| w[i - 1] < w[i] && w[i] > w[i + 1]).map(|i| i + 1).collect()
}

pub fn group_axioms_sampled() {
    let samples = manifest().rng.samples;
    for n in 1..=8 {
        let mut rng = rng_for(n);
        let e = SignedPermutation::identity(n).unwrap();
        for _ in 0..samples {
            let a = random_perm(&mut rng, n);
            let b = random_perm(&mut rng, n);
            let c = random_perm(&mut rng, n);
            let ab = a.compose(&b).unwrap();
            assert_eq!(ab.to_vec(), compose_oracle(&a, &b));
            assert_eq!(ab.compose(&c).unwrap(), a.compose(&b.compose(&c).unwrap()).unwrap());
            assert_eq!(a.compose(&e).unwrap(), a);
            assert_eq!(e.compose(&a).unwrap(), a);
            assert!(a.compose(&a.inverse()).unwrap().is_identity());
            assert!(a.inverse().compose(&a).unwrap().is_identity());
            assert_eq!(ab.barred(), a.barred().compose(&b).unwrap());
            for i in 1..=n as i64 {
                assert_eq!(a.get(-i), a.get(i).map(|v| -v));
            }
        }
    }
}

pub fn metric_axioms_sampled() {
    let samples = manifest().rng.samples;
    for n in 1..=8 {
        let mut rng = rng_for(100 + n);
        for _ in 0..samples {
            let a = random_perm(&mut rng, n);
            let b = random_perm(&mut rng, n);
            let c = random_perm(&mut rng, n);
            for kind in MetricKind::ALL {
                let ab = distance(kind, &a, &b).unwrap();
                assert_eq!(ab, distance(kind, &b, &a).unwrap(), "{kind} symmetry");
                assert_eq!(distance(kind, &a, &a).unwrap(), 0);
                assert_eq!(ab == 0, a == b, "{kind} identity of indiscernibles");
                let via = distance(kind, &a, &c).unwrap() + distance(kind, &c, &b).unwrap();
                assert!(ab <= via, "{kind} triangle on {a} / {c} / {b}");
            }
            assert!(hamming(&a, &b).unwrap() as usize <= n);
            assert!(l_infinity(&a, &b).unwrap() as usize <= 2 * n);
            assert!(word_distance(&a, &b).unwrap() as usize <= n * n);
        }
    }
}

pub fn word_distance_is_left_invariant() {
    let samples = manifest().rng.samples;
    for n in 1..=8 {
        let mut rng = rng_for(200 + n);
        let e = SignedPermutation::identity(n).unwrap();
        for _ in 0..samples {
            let a = random_perm(&mut rng, n);
            let b = random_perm(&mut rng, n);
            let g = random_perm(&mut rng, n);
            let d = word_distance(&a, &b).unwrap();
            assert_eq!(word_distance(&g.compose(&a).unwrap(), &g.compose(&b).unwrap()).unwrap(), d);
            assert_eq!(word_distance(&a, &e).unwrap(), length_b(&a));
            assert_eq!(length_b(&a), length_oracle(&a));
        }
    }
}

pub fn barred_pairs_are_antipodal() {
    let samples = manifest().rng.samples;
    for n in 1..=8 {
        let mut rng = rng_for(300 + n);
        let sq = (n * n) as u32;
        for _ in 0..samples {
            let a = random_perm(&mut rng, n);
            let b = random_perm(&mut rng, n);
            let abar = a.barred();
            assert_eq!(word_distance(&a, &abar).unwrap(), sq);
            assert_eq!(word_distance(&a, &b).unwrap() + word_distance(&abar, &b).unwrap(), sq);
        }
    }
}

pub fn coxeter_relations() {
    for n in 1..=6 {
        let gens: Vec<_> = (0..n).map(|k| SignedPermutation::generator(n, GeneratorIndex(k)).unwrap()).collect();
        let order = |g: &SignedPermutation| {
            let mut p = *g;
            let mut m = 1;
            while !p.is_identity() {
                p = p.compose(g).unwrap();
                m += 1;
            }
            m
        };
        for i in 0..n {
            assert_eq!(order(&gens[i]), 1 + usize::from(!gens[i].is_identity()));
            for j in i + 1..n {
                let expected = match (i, j) {
                    (0, 1) => 4,
                    _ if j == i + 1 => 3,
                    _ => 2,
                };
                assert_eq!(order(&gens[i].compose(&gens[j]).unwrap()), expected, "n={n} s{i} s{j}");
            }
        }
        for p in all(n).into_iter().step_by(7) {
            for k in 0..n {
                let g = GeneratorIndex(k);
                assert_eq!(p.apply_generator_right(g).unwrap(), p.compose(&gens[k]).unwrap());
            }
        }
    }
}

pub fn length_matches_breadth_first_search() {
    for n in 2..=5 {
        let table = bfs_word_lengths(n).unwrap();
        assert_eq!(table.len() as u64, group_order(n).unwrap());
        for p in enumerate_group(n).unwrap() {
            assert_eq!(table.get(&p), Some(length_b(&p)), "{p}");
        }
    }
}

pub fn length_symmetries_exhaustive() {
    for n in 1..=4 {
        for p in all(n) {
            assert_eq!(length_b(&p), length_b(&p.inverse()));
            assert_eq!(length_b(&p) + length_b(&p.barred()), (n * n) as u32);
            assert_eq!(length_b(&p), length_oracle(&p));
        }
    }
}

pub fn rank_order_is_enumeration_order() {
    for n in 1..=5 {
        for (i, p) in enumerate_group(n).unwrap().enumerate() {
            assert_eq!(p.rank().unwrap(), i as u64);
            assert_eq!(SignedPermutation::from_rank(n, i as u64).unwrap(), p);
        }
    }
}

pub fn peak_sets_and_admissibility_exhaustive() {
    for n in 1..=6 {
        let sets = admissible_sets(n);
        let mut counts: HashMap<u64, u64> = HashMap::new();
        for p in enumerate_group(n).unwrap() {
            let ps = peak_set(&p);
            assert_eq!(ps.indices().collect::<Vec<_>>(), peak_oracle(p.window()));
            assert!(ps.is_admissible());
            *counts.entry(ps.mask()).or_default() += 1;
        }
        assert_eq!(counts.len(), sets.len(), "every admissible set occurs at n={n}");
        for s in &sets {
            assert!(counts[&s.mask()] > 0);
        }
        assert_eq!(counts.values().sum::<u64>(), group_order(n).unwrap());
        let interior = n.saturating_sub(2);
        for mask in 0u64..(1 << interior) {
            let idx: Vec<usize> = (0..interior).filter(|b| mask >> b & 1 == 1).map(|b| b + 2).collect();
            let s = PeakSet::new(n, &idx).unwrap();
            assert_eq!(s.is_admissible(), counts.contains_key(&s.mask()), "{s} at n={n}");
        }
    }
}

pub fn value_swaps_keep_peaks_exhaustive() {
    for n in 2..=6 {
        for p in enumerate_group(n).unwrap() {
            for i in 2..n {
                match peak_preserving_value_swap(&p, i) {
                    Ok(q) => {
                        assert_eq!(peak_set(&q), peak_set(&p));
                        assert_ne!(q, p);
                    }
                    Err(Error::AdjacentValues { .. }) => {}
                    Err(e) => panic!("{p} {i}: {e}"),
                }
            }
            if let Ok(q) = bar_n_swap(&p) {
                assert_eq!(peak_set(&q), peak_set(&p));
            }
        }
    }
}

pub fn constructions_for_every_admissible_set() {
    for n in 2..=8 {
        for s in admissible_sets(n) {
            let e = identity_with_peaks(&s).unwrap();
            let ebs = negated_reverse_with_peaks(&s).unwrap();
            let es = reverse_with_peaks(&s).unwrap();
            let eb = negated_identity_with_peaks(&s).unwrap();
            for p in [e, ebs, es, eb] {
                assert_eq!(peak_set(&p), s);
            }
            assert!(e.compose(&e).unwrap().is_identity());
            let (sigma, pi) = max_word_pair(&s).unwrap();
            assert_eq!(peak_set(&sigma), s);
            assert_eq!(peak_set(&pi), s);
            assert_eq!(pi.inverse().compose(&sigma).unwrap(), eb);
            let d = word_distance(&sigma, &pi).unwrap();
            assert_eq!(d, length_oracle(&eb));
            assert_eq!(d as usize, n * n - s.len());
            let mins = min_witnesses(&s).unwrap();
            for kind in MetricKind::ALL {
                let (a, b) = mins.pair(kind);
                assert_eq!(peak_set(&a), s);
                assert_eq!(peak_set(&b), s);
                assert_eq!(distance(kind, &a, &b).unwrap(), 1, "{kind} min at {s}");
                let (a, b) = max_witnesses(&s, kind).unwrap();
                assert_eq!(peak_set(&a), s);
                assert_eq!(peak_set(&b), s);
                assert_eq!(distance(kind, &a, &b).unwrap(), predicted_extremes(&s, kind).unwrap().max);
            }
        }
    }
}

fn perm_strategy() -> impl Strategy<Value = SignedPermutation> {
    (1usize..=12)
        .prop_flat_map(|n| (Just((1..=n as i64).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n)))
        .prop_map(|(w, signs)| {
            let v: Vec<i64> = w.iter().zip(&signs).map(|(&x, &neg)| if neg { -x } else { x }).collect();
            SignedPermutation::new(&v).unwrap()
        })
}

pub fn parse_format_round_trip() {
    let m = manifest().proptest;
    let config = Config { cases: m.cases, rng_algorithm: RngAlgorithm::ChaCha, rng_seed: RngSeed::Fixed(m.seed), failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new(config);
    runner
        .run(&perm_strategy(), |p| {
            let text = format(&p);
            prop_assert_eq!(parse(&text).unwrap(), p);
            prop_assert_eq!(text.parse::<SignedPermutation>().unwrap(), p);
            let barred: String = p.window().iter().map(|&v| if v < 0 { format!("b{} ", -v) } else { format!("{v}, ") }).collect();
            prop_assert_eq!(parse(barred.trim_end().trim_end_matches(',')).unwrap(), p);
            Ok(())
        })
        .unwrap();
}
