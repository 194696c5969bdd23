use std::collections::BTreeSet;

use hopf_sieve_core::graded_support::verify_witness;
use hopf_sieve_core::{
    build_group, conjugation_closure, scan_supports, support_obstruction, theorem_a4,
    theorem_dihedral, Element, FiniteGroup, GroupSpec, ObstructionVerdict, SupportProblem,
};
use proptest::prelude::*;

fn group(s: &str) -> FiniteGroup {
    build_group(&s.parse::<GroupSpec>().unwrap()).unwrap()
}

fn all_supports(g: &FiniteGroup) -> Vec<BTreeSet<Element>> {
    (1..=g.order() as u32)
        .flat_map(|total| scan_supports(g, total))
        .map(|(s, _)| s)
        .collect()
}

fn verdict(g: &FiniteGroup, s: &BTreeSet<Element>) -> ObstructionVerdict {
    support_obstruction(&SupportProblem::uniform(g, s).unwrap())
        .unwrap()
        .verdict
}

#[test]
fn dihedral_theorem_for_odd_orders() {
    for n in (3..=15).step_by(2) {
        let report = theorem_dihedral(n).unwrap();
        assert_eq!(report.statement, "support ⊆ rotations");
        for (_, o) in &report.cases {
            assert_eq!(o.verdict, ObstructionVerdict::ImpossibleUnitClash);
        }
    }
    assert_eq!(theorem_a4().unwrap().statement, "support ⊆ Klein");
}

/// Shrinking a support with nonidentity elements never loses an
/// obstruction.
#[test]
fn monotone_over_all_supports() {
    for s in ["D5", "A4"] {
        let g = group(s);
        let supports = all_supports(&g);
        for small in supports.iter().filter(|x| x.len() > 1) {
            for big in supports.iter().filter(|big| small.is_subset(big)) {
                if verdict(&g, big).is_impossible() {
                    assert!(
                        verdict(&g, small).is_impossible(),
                        "{s}: {small:?} ⊆ {big:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn every_support_witness_reverifies() {
    for s in ["D3", "D5", "D7", "A4", "S4", "C6", "A5"] {
        let g = group(s);
        for support in all_supports(&g) {
            let p = SupportProblem::uniform(&g, &support).unwrap();
            let o = support_obstruction(&p).unwrap();
            assert_eq!(o, support_obstruction(&p).unwrap());
            verify_witness(&g, &support, &o).unwrap();
            assert!(support.contains(&g.identity()));
            assert_eq!(conjugation_closure(&g, &support), support);
        }
    }
}

proptest! {
    #[test]
    fn closures_are_unions_of_classes(
        s in prop::sample::select(&["D5", "D6", "A4", "S4", "A5", "C3xS3"][..]),
        seed in prop::collection::vec(any::<prop::sample::Index>(), 1..4),
    ) {
        let g = group(s);
        let seed: BTreeSet<Element> = seed.iter().map(|i| Element(i.index(g.order()))).collect();
        let closure = conjugation_closure(&g, &seed);
        prop_assert!(closure.is_superset(&seed));
        prop_assert!(closure.contains(&g.identity()));
        prop_assert_eq!(&conjugation_closure(&g, &closure), &closure);
        for class in g.conjugacy_classes().classes {
            let hit = class.iter().filter(|c| closure.contains(c)).count();
            prop_assert!(hit == 0 || hit == class.len());
        }
    }
}
