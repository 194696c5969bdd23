use std::collections::BTreeSet;

use hopf_sieve_core::{build_group, Element, GroupSpec};
use proptest::prelude::*;

fn small_spec() -> impl Strategy<Value = GroupSpec> {
    let leaf = prop_oneof![
        (1usize..=12).prop_map(GroupSpec::Cyclic),
        (3usize..=10).prop_map(GroupSpec::Dihedral),
        (1usize..=4).prop_map(GroupSpec::Symmetric),
        (1usize..=5).prop_map(GroupSpec::Alternating),
        Just(GroupSpec::Klein),
    ];
    prop_oneof![
        3 => leaf.clone(),
        1 => (leaf.clone(), leaf).prop_map(|(a, b)| GroupSpec::product(a, b)),
    ]
    .prop_filter("order cap", |s| s.order().is_ok_and(|o| o <= 120))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lagrange(spec in small_spec(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..3)) {
        let g = build_group(&spec).unwrap();
        let order = g.order();
        prop_assert_eq!(Some(order), spec.order().ok());
        prop_assert!(g.check_axioms().is_ok());
        let seed: BTreeSet<Element> = picks.iter().map(|i| Element(i.index(order))).collect();
        for &a in &seed {
            prop_assert_eq!(order % g.element_order(a).unwrap(), 0);
        }
        let h = g.subgroup_generated_by(seed.iter().copied());
        prop_assert_eq!(order % h.len(), 0);
        for &a in &h {
            for &b in &h {
                prop_assert!(h.contains(&g.mul(a, b)));
            }
        }
        let classes = g.conjugacy_classes();
        prop_assert_eq!(classes.sizes().iter().sum::<usize>(), order);
        prop_assert!(classes.sizes().iter().all(|s| order % s == 0));
        prop_assert_eq!(order % g.abelianization_order(), 0);
        if g.is_abelian() {
            prop_assert_eq!(g.abelianization_order(), order);
            prop_assert_eq!(classes.len(), order);
        }
    }

    #[test]
    fn spec_strings_round_trip(spec in small_spec()) {
        let text = spec.to_string();
        prop_assert_eq!(text.parse::<GroupSpec>().unwrap(), spec);
    }
}
