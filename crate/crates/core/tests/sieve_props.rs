use std::collections::BTreeSet;

use hopf_sieve_core::sieve::{reference, Outcome};
use hopf_sieve_core::{enumerate_raw, run_sieve, CoalgebraType, RuleId, Sieve};
use proptest::prelude::*;

fn t(s: &str) -> CoalgebraType {
    s.parse().unwrap()
}

#[test]
fn sixty_reproduces_the_answer_key() {
    let report = run_sieve(60).unwrap();
    assert_eq!(report.reference_match, Some(true));
    let expected: BTreeSet<CoalgebraType> = reference::survivors()
        .into_iter()
        .map(|(_, ty)| ty)
        .collect();
    assert_eq!(report.survivor_types(), expected);
    assert_eq!(report.pointed, Some(CoalgebraType::pointed(60)));

    for (ty, rule) in reference::named_eliminations() {
        let e = report
            .eliminated
            .iter()
            .find(|e| e.ty == ty)
            .unwrap_or_else(|| panic!("{ty} not eliminated"));
        assert_eq!(e.verdict.rule, Some(rule), "{ty}");
    }
    // the remaining eliminations all carry degree 2 with trivial group-likes
    let named: BTreeSet<CoalgebraType> = reference::named_eliminations()
        .into_iter()
        .map(|(ty, _)| ty)
        .collect();
    let extra: BTreeSet<CoalgebraType> = report
        .eliminated
        .iter()
        .filter(|e| !named.contains(&e.ty))
        .map(|e| {
            assert_eq!(e.verdict.rule, Some(RuleId::Deg2B), "{}", e.ty);
            assert!(e.failed_rules.contains(&RuleId::Gh1));
            e.ty.clone()
        })
        .collect();
    assert_eq!(
        extra,
        BTreeSet::from([
            t("(1, 1; 2, 4; 3, 2; 5, 1)"),
            t("(1, 1; 2, 4; 3, 3; 4, 1)"),
            t("(1, 1; 2, 8; 3, 3)"),
        ])
    );
}

#[test]
fn trivial_grouplike_survivor_is_annotated() {
    let report = run_sieve(60).unwrap();
    let s = report
        .survivors
        .iter()
        .find(|s| s.ty == reference::trivial_grouplike_type())
        .unwrap();
    assert!(s.annotations.iter().any(|a| a.contains("imported")));
}

#[test]
fn every_eliminated_verdict_carries_rule_and_reason() {
    for n in [24, 36, 60, 72, 120] {
        for e in run_sieve(n).unwrap().eliminated {
            assert_eq!(e.verdict.outcome, Outcome::Eliminated);
            let rule = e.verdict.rule.unwrap();
            assert!(!e.verdict.reason.is_empty());
            assert!(e.verdict.reason.contains(rule.citation()));
            assert_eq!(e.failed_rules[0], rule);
        }
    }
}

#[test]
fn imported_rule_is_inert_elsewhere() {
    for n in [12, 30, 120] {
        let s = Sieve::new(n).unwrap();
        assert!(!s.rules().contains(&RuleId::Gh1));
        assert_eq!(s.run().unwrap().reference_match, None);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn report_partitions_the_raw_list(n in 1u32..=150) {
        let report = run_sieve(n).unwrap();
        let raw: BTreeSet<CoalgebraType> = enumerate_raw(n).unwrap().into_iter().collect();
        prop_assert_eq!(report.raw_count, raw.len());
        let mut seen = BTreeSet::new();
        for ty in report.survivors.iter().map(|s| &s.ty).chain(report.eliminated.iter().map(|e| &e.ty)).chain(report.pointed.iter()) {
            prop_assert!(seen.insert(ty.clone()), "duplicate {}", ty);
        }
        prop_assert_eq!(seen, raw);
        prop_assert_eq!(report.raw_count, report.survivors.len() + report.eliminated.len() + usize::from(report.pointed.is_some()));
    }

    #[test]
    fn survivors_do_not_depend_on_rule_order(order in Just(RuleId::ALL.to_vec()).prop_shuffle()) {
        let sieve = Sieve::new(60).unwrap();
        let shuffled = sieve.run_with(&order).unwrap();
        prop_assert_eq!(shuffled.survivor_types(), run_sieve(60).unwrap().survivor_types());
        prop_assert_eq!(shuffled.reference_match, Some(true));
    }

    #[test]
    fn no_rule_eliminates_a_reference_survivor(rule in prop::sample::select(&RuleId::ALL[..])) {
        let sieve = Sieve::new(60).unwrap();
        for (slot, ty) in reference::survivors() {
            let v = sieve.apply(rule, &ty);
            prop_assert!(!v.is_eliminated(), "{} killed slot {} {}: {}", rule, slot, ty, v.reason);
        }
    }

    #[test]
    fn rule_codes_round_trip(rule in prop::sample::select(&RuleId::ALL[..])) {
        prop_assert_eq!(RuleId::from_code(rule.code()), Some(rule));
        prop_assert_eq!(rule.is_imported(), rule == RuleId::Gh1);
    }
}
