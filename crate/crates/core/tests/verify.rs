use pwords::analysis::{self, ProfileOptions};
use pwords::family::{Base, PositionRule};
use pwords::verify::{self, Predicate, Verdict, VerifyParams};
use pwords::{completion, manifest, preset, Alphabet, FamilySpec, FullWord, PartialWord};

fn run_one(name: &str, predicate: Predicate) -> verify::PredicateReport {
    let spec = preset(name).unwrap();
    let params = manifest::params_for(name).unwrap();
    verify::run(&spec, &params, &[predicate]).unwrap().remove(0)
}

#[test]
fn no_fail_on_catalog_at_pinned_parameters() {
    for entry in manifest::entries() {
        let spec = preset(&entry.family).unwrap();
        let reports = verify::run_all(&spec, &entry.params).unwrap();
        assert_eq!(reports.len(), Predicate::ALL.len());
        for (report, predicate) in reports.iter().zip(Predicate::ALL) {
            assert_eq!(report.predicate, predicate.id());
            assert_ne!(report.verdict, Verdict::Fail, "{} {}: {:#?}", entry.family, report.predicate, report);
            if report.verdict == Verdict::Inconclusive {
                assert!(!report.notes.is_empty(), "{} {}", entry.family, report.predicate);
            }
        }
    }
}

#[test]
fn reports_are_deterministic() {
    for name in ["hole-then-a", "exp-holes:3", "trivial-holes"] {
        let spec = preset(name).unwrap();
        let params = manifest::params_for(name).unwrap();
        let a = serde_json::to_string(&verify::run_all(&spec, &params).unwrap()).unwrap();
        let b = serde_json::to_string(&verify::run_all(&spec, &params).unwrap()).unwrap();
        assert_eq!(a, b, "{name}");
    }
}

fn tm_profile() -> analysis::ComplexityProfile {
    analysis::stabilized_profile(&preset("thue-morse").unwrap(), 8, 2048, ProfileOptions::default()).unwrap()
}

#[test]
fn ferenczi_fault_injection() {
    let mut p = tm_profile();
    p.rows[2].p = p.rows[1].p - 1;
    let r = verify::check_ferenczi(&p, 2);
    assert_eq!(r.condition("non-decreasing").unwrap().verdict, Verdict::Fail);
    assert_eq!(r.witnesses[0]["pair"], serde_json::json!([2, 3]));

    let mut p = tm_profile();
    p.rows[3].p = p.rows[1].p * p.rows[1].p + 1;
    let r = verify::check_ferenczi(&p, 2);
    assert_eq!(r.condition("submultiplicative").unwrap().verdict, Verdict::Fail);
    assert!(!r.witnesses.is_empty());

    let mut p = tm_profile();
    p.rows[0].p = 3;
    let r = verify::check_ferenczi(&p, 2);
    assert_eq!(r.condition("alphabet-bound").unwrap().verdict, Verdict::Fail);

    let mut p = tm_profile();
    p.rows[4].p = 5;
    p.rows[5].p = 5;
    let r = verify::check_ferenczi(&p, 2);
    assert_eq!(r.verdict, Verdict::Fail);
    assert_eq!(r.condition("bounded-after-plateau").unwrap().verdict, Verdict::Fail);
}

#[test]
fn ferenczi_pass_survives_doubling_the_horizon() {
    for name in pwords::family::CATALOG {
        let spec = preset(name).unwrap();
        let at = |l| {
            let p = analysis::stabilized_profile(&spec, 8, l, ProfileOptions::default()).unwrap();
            verify::check_ferenczi(&p, 2).verdict
        };
        if at(256) == Verdict::Pass {
            assert_eq!(at(512), Verdict::Pass, "{name}");
        }
    }
}

#[test]
fn incompatible_completion_is_rejected() {
    let spec = preset("hole-then-a").unwrap();
    let wrong = FullWord(vec![1; 16]);
    assert!(completion::complexity_gap(&spec, &wrong, 3, 16).is_err());
}

#[test]
fn pinned_constants_are_reported() {
    let r = run_one("hole-then-a", Predicate::ThetaEquivalence);
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.parameter("C").unwrap(), 2);

    let r = run_one("trivial-holes", Predicate::ThetaEquivalence);
    assert_eq!(r.parameter("C").unwrap(), 1);

    let r = run_one("hole-then-a", Predicate::UltimatelyRecurrentFromCompletions);
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.parameter("H(1)").unwrap(), 1);
}

#[test]
fn unmet_hypotheses_are_inconclusive() {
    let r = run_one("b-at-squares", Predicate::ThetaEquivalence);
    assert_eq!(r.verdict, Verdict::Inconclusive);
    let r = run_one("ultimately-periodic::a*", Predicate::RecurrentCompletions);
    assert_eq!(r.verdict, Verdict::Inconclusive);
    assert!(r.notes[0].contains("increasing gap"));
    let r = run_one("thue-morse", Predicate::CompletionGap);
    assert_eq!(r.verdict, Verdict::Inconclusive);
}

#[test]
fn recurrence_equivalences_agree_on_non_recurrent_word() {
    let r = run_one("hole-then-a", Predicate::RecurrenceEquivalences);
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.witnesses[0]["word"], "b");
}

#[test]
fn recurrent_word_with_one_hole_is_not_ultimately_periodic() {
    let base = Base::PrefixThen {
        prefix: PartialWord::parse("*", &Alphabet::binary()).unwrap(),
        rest: Box::new(Base::ThueMorse),
    };
    let spec = FamilySpec::new("hole-then-thue-morse", Alphabet::binary(), base, PositionRule::None).unwrap();
    let params = VerifyParams { horizon: 1024, n_max: 8, ..VerifyParams::default() };
    let r = verify::run(&spec, &params, &[Predicate::NotUltimatelyPeriodic]).unwrap().remove(0);
    assert_eq!(r.verdict, Verdict::Pass, "{r:#?}");
    assert_eq!(r.condition("no-periodic-fit").unwrap().verdict, Verdict::Pass);
}

#[test]
fn ultimately_periodic_prefix_is_fitted() {
    // the same hole followed by a periodic tail is caught by the fit
    let w = preset("ultimately-periodic:ba*b:ab").unwrap().materialize(256);
    assert_eq!(analysis::fit_ultimately_periodic(&w, 64, 64).unwrap(), Some((2, 2)));
}

#[test]
fn parameter_validation() {
    let spec = preset("thue-morse").unwrap();
    let params = VerifyParams { horizon: 32, n_max: 9, ..VerifyParams::default() };
    let err = verify::run_all(&spec, &params).unwrap_err();
    assert_eq!(err.code(), "PW006");
}
