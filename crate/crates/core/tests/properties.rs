use std::collections::BTreeSet;

use proptest::prelude::*;

use pwords::analysis::{self, ProfileOptions};
use pwords::completion;
use pwords::family::{self, Base, Mark, PositionRule, CATALOG};
use pwords::word::DEFAULT_EXPANSION_CAP;
use pwords::{preset, Alphabet, FamilySpec, FullWord, PartialWord, Symbol};

fn symbol() -> impl Strategy<Value = Symbol> {
    prop_oneof![Just(Symbol::Letter(0)), Just(Symbol::Letter(1)), Just(Symbol::Hole)]
}

fn partial_word(max: usize) -> impl Strategy<Value = PartialWord> {
    prop::collection::vec(symbol(), 1..=max).prop_map(PartialWord::new)
}

fn full_word(min: usize, max: usize) -> impl Strategy<Value = FullWord> {
    prop::collection::vec(0u8..2, min..=max).prop_map(FullWord)
}

fn ab() -> Alphabet {
    Alphabet::binary()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn compatibility_reflexive_and_symmetric(u in partial_word(12), v in partial_word(12)) {
        prop_assert!(u.compatible(&u));
        if u.len() == v.len() {
            prop_assert_eq!(u.compatible(&v), v.compatible(&u));
        }
    }

    #[test]
    fn completions_count_and_compatibility(u in partial_word(10)) {
        let all = u.completions_of(&ab(), DEFAULT_EXPANSION_CAP).unwrap();
        prop_assert_eq!(all.len(), 1usize << u.hole_count());
        for m in &all {
            prop_assert!(PartialWord::from(m.clone()).compatible(&u));
        }
    }

    #[test]
    fn subword_test_matches_oracle(w in partial_word(10), u in full_word(1, 4)) {
        prop_assume!(u.len() <= w.len());
        let oracle = analysis::brute_force_subword_set(&w, u.len(), &ab(), analysis::DEFAULT_ORACLE_CAP).unwrap();
        prop_assert_eq!(u.is_subword_of(&w), oracle.contains(&u));
        let fast = analysis::subword_set(&w, u.len(), &ab(), DEFAULT_EXPANSION_CAP).unwrap();
        prop_assert_eq!(fast.words, oracle.words);
    }

    #[test]
    fn periodic_partial_word_has_periodic_completion(u in partial_word(9), p in 1usize..5) {
        prop_assume!(p <= u.len());
        if u.is_p_periodic(p).unwrap() {
            let found = u
                .completions(&ab(), DEFAULT_EXPANSION_CAP)
                .unwrap()
                .any(|m| PartialWord::from(m).is_p_periodic(p).unwrap());
            prop_assert!(found);
        }
    }

    #[test]
    fn fit_finds_minimal_period(x in full_word(1, 6), reps in 8usize..12) {
        let long: Vec<u8> = x.0.iter().copied().cycle().take(x.len() * reps).collect();
        let minimal = (1..=x.len()).find(|&p| (p..long.len()).all(|i| long[i] == long[i - p])).unwrap();
        let w = PartialWord::from(FullWord(long));
        let bound = w.len() / 4;
        prop_assert_eq!(analysis::fit_ultimately_periodic(&w, bound, bound).unwrap(), Some((0, minimal)));
    }

    #[test]
    fn sampled_completions_are_deterministic(u in partial_word(12), seed in 0u64..1000) {
        let a = completion::sample_completions(&u, &ab(), 4, seed);
        let b = completion::sample_completions(&u, &ab(), 4, seed);
        prop_assert_eq!(&a, &b);
        for m in &a {
            prop_assert!(PartialWord::from(m.clone()).compatible(&u));
        }
    }

    #[test]
    fn shift_composition(p in 0usize..=8, q in 0usize..=8, idx in 0usize..8) {
        let spec = preset(CATALOG[idx]).unwrap();
        prop_assert_eq!(spec.shift(p).shift(q).materialize(64), spec.shift(p + q).materialize(64));
    }
}

#[test]
fn compatibility_is_not_transitive() {
    let parse = |t| PartialWord::parse(t, &ab()).unwrap();
    assert!(parse("a*").compatible(&parse("aa")));
    assert!(parse("a*").compatible(&parse("ab")));
    assert!(!parse("aa").compatible(&parse("ab")));
}

#[test]
fn prefix_coherence() {
    for spec in family::catalog() {
        for l in [16, 64, 256] {
            let long = spec.materialize(4 * l);
            assert_eq!(spec.materialize(l), long.truncated(l), "{} L={l}", spec.name());
        }
    }
}

#[test]
fn complexity_monotone_in_horizon() {
    for spec in family::catalog() {
        for l in [16, 32, 64, 128] {
            for n in 1..=6.min(l / 2) {
                let short = analysis::complexity(&spec, n, l).unwrap();
                let long = analysis::complexity(&spec, n, 2 * l).unwrap();
                assert!(short <= long, "{} n={n} L={l}", spec.name());
            }
        }
    }
}

#[test]
fn completions_only_lose_subwords() {
    for spec in family::catalog() {
        let l = (1..=64).rev().find(|&l| spec.materialize(l).hole_count() <= 8).unwrap();
        let w = spec.materialize(l);
        for m in w.completions(spec.alphabet(), DEFAULT_EXPANSION_CAP).unwrap() {
            for n in 1..=5.min(l) {
                let sub_m = completion::full_subword_set(&m, n);
                let sub_w = analysis::subword_set(&w, n, spec.alphabet(), DEFAULT_EXPANSION_CAP).unwrap();
                assert!(sub_m.is_subset(&sub_w), "{} n={n}", spec.name());
            }
        }
    }
}

#[test]
fn defect_nonnegative_and_nondecreasing() {
    for spec in family::catalog() {
        let profile = analysis::stabilized_profile(&spec, 8, 256, ProfileOptions::default()).unwrap();
        let d: Vec<usize> = profile.stable_rows().map(|row| row.d).collect();
        for row in profile.stable_rows() {
            assert!(row.r <= row.p, "{} n={}", spec.name(), row.n);
        }
        assert!(d.windows(2).all(|w| w[0] <= w[1]), "{}: d = {d:?}", spec.name());
    }
}

#[test]
fn all_hole_word_has_no_witness() {
    let spec = preset("trivial-holes").unwrap();
    for l in [8, 16, 32, 64, 128] {
        for n in 1..=6.min(l / 2) {
            let v = analysis::recurrence_verdict(&spec, n, l).unwrap();
            assert!(v.witnesses.is_empty() && v.all_repeat(), "n={n} L={l}");
        }
    }
}

#[test]
fn periodic_catalog_inputs_fit_with_period_one() {
    for name in ["trivial-holes", "ultimately-periodic::a*", "ultimately-periodic::a"] {
        let w = preset(name).unwrap().materialize(128);
        assert_eq!(analysis::fit_ultimately_periodic(&w, 32, 32).unwrap(), Some((0, 1)), "{name}");
    }
    let w = preset("ultimately-periodic::ab").unwrap().materialize(128);
    assert_eq!(analysis::fit_ultimately_periodic(&w, 32, 32).unwrap(), Some((0, 2)));
}

#[test]
fn greedy_completion_preserves_subwords_when_it_succeeds() {
    let mut successes = 0;
    for spec in family::catalog() {
        for (n_max, l) in [(2, 32), (3, 64), (4, 128)] {
            let Ok(result) = completion::greedy_preserving_completion(&spec, n_max, l) else {
                continue;
            };
            successes += 1;
            let w = spec.materialize(l);
            assert!(w.compatible(&PartialWord::from(result.word.clone())));
            for n in 1..=n_max {
                let sub_w = analysis::brute_force_subword_set(&w, n, spec.alphabet(), analysis::DEFAULT_ORACLE_CAP).unwrap();
                assert_eq!(completion::full_subword_set(&result.word, n).words, sub_w.words, "{} n={n} L={l}", spec.name());
            }
        }
    }
    assert!(successes >= 6, "only {successes} greedy runs succeeded");
}

/// Families with exactly `h` holes: catalog prefixes cut after their first
/// `h` holes and continued by a full word, plus a hole inside `b-at-squares`.
fn finite_hole_families() -> Vec<(FamilySpec, usize)> {
    let mut out = Vec::new();
    for name in ["trivial-holes", "hole-then-a", "paper-example", "holes-at-squares", "exp-holes:3", "ultimately-periodic::a*"] {
        let spec = preset(name).unwrap();
        for h in 1..=3 {
            let Ok(end) = spec.hole_function(h, 256) else { continue };
            for (tag, rest) in [("a", Base::Constant(0)), ("tm", Base::ThueMorse)] {
                let base = Base::PrefixThen { prefix: spec.materialize(end), rest: Box::new(rest) };
                let f = FamilySpec::new(format!("{name}/{h}/{tag}"), ab(), base, PositionRule::None).unwrap();
                out.push((f, h));
            }
        }
    }
    let squares = FamilySpec::with_marks(
        "b-at-squares/hole",
        ab(),
        Base::Constant(0),
        PositionRule::List { positions: vec![2] },
        vec![Mark { positions: PositionRule::Squares, letter: 1 }],
    )
    .unwrap();
    out.push((squares, 1));
    out
}

#[test]
fn close_completion_implies_ultimately_recurrent() {
    let (l, n_max) = (256, 6);
    let mut exercised = 0;
    for (spec, h) in finite_hole_families() {
        let w = spec.materialize(l);
        assert_eq!(w.hole_count(), h, "{}", spec.name());
        let p_w: Vec<usize> = (1..=n_max).map(|n| analysis::complexity(&spec, n, l).unwrap()).collect();
        let allowed = (1usize << h) - 2;
        let close = w.completions(spec.alphabet(), DEFAULT_EXPANSION_CAP).unwrap().any(|m| {
            let p_hat = completion::complexity_vector(&m, n_max);
            p_w.iter().zip(&p_hat).all(|(a, b)| *a <= b + allowed)
        });
        if close {
            exercised += 1;
            let shifted = spec.shift(spec.hole_function(h, l).unwrap());
            for n in 1..=n_max {
                let v = analysis::recurrence_verdict(&shifted, n, l).unwrap();
                assert!(v.all_repeat(), "{} n={n}: {:?}", spec.name(), v.witnesses);
            }
        }
    }
    assert!(exercised > 0);
}

#[test]
fn dominant_completion_contains_recurrent_proxy() {
    for spec in family::catalog() {
        let Some(l) = [16, 12, 8].into_iter().find(|&l| spec.materialize(l).hole_count() <= 12) else {
            continue;
        };
        let report = completion::most_complex_search(&spec, 3, l, 12).unwrap();
        if let Some(dominant) = &report.dominant {
            let entry = report.containment.iter().find(|c| &c.completion == dominant).unwrap();
            assert!(entry.contains_recurrent, "{}", spec.name());
            let best = report.candidates.iter().find(|c| &c.completion == dominant).unwrap();
            for other in &report.candidates {
                assert!(best.p.iter().zip(&other.p).all(|(a, b)| a >= b));
            }
        }
    }
}

#[test]
fn subword_sets_of_completions_cover_the_partial_word() {
    let spec = preset("paper-example").unwrap();
    let w = spec.materialize(12);
    for n in 1..=4 {
        let mut union = BTreeSet::new();
        for m in w.completions(spec.alphabet(), DEFAULT_EXPANSION_CAP).unwrap() {
            union.extend(completion::full_subword_set(&m, n).words);
        }
        let sub_w = analysis::subword_set(&w, n, spec.alphabet(), DEFAULT_EXPANSION_CAP).unwrap();
        assert_eq!(union, sub_w.words, "n={n}");
    }
}
