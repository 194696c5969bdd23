use std::collections::BTreeMap;

use hopf_sieve_core::typespace::{enumerate_with_grouplikes, feasible_stabilizers};
use hopf_sieve_core::{enumerate_raw, orbit_configs, CoalgebraType};
use proptest::prelude::*;

/// Every way to write `rest` as a sum of squares `d²` with `2 <= d`,
/// largest degree first; no divisibility pruning.
fn square_partitions(rest: u32, max_degree: u32) -> Vec<BTreeMap<u32, u32>> {
    if rest == 0 {
        return vec![BTreeMap::new()];
    }
    let mut out = Vec::new();
    for d in (2..=max_degree).rev() {
        if d * d > rest {
            continue;
        }
        for mut tail in square_partitions(rest - d * d, d) {
            *tail.entry(d).or_insert(0) += 1;
            out.push(tail);
        }
    }
    out
}

fn oracle(dimension: u32) -> Vec<(u32, Vec<(u32, u32)>)> {
    let mut out = Vec::new();
    for n in 1..=dimension {
        for parts in square_partitions(dimension - n, dimension) {
            let ok = dimension % n == 0 && parts.iter().all(|(&d, &c)| (c * d * d) % n == 0);
            if ok {
                out.push((n, parts.into_iter().collect()));
            }
        }
    }
    out.sort();
    out
}

fn as_raw(types: &[CoalgebraType]) -> Vec<(u32, Vec<(u32, u32)>)> {
    types
        .iter()
        .map(|t| (t.grouplikes(), t.entries().to_vec()))
        .collect()
}

#[test]
fn matches_oracle_up_to_sixty() {
    for dimension in 1..=60 {
        let got = enumerate_raw(dimension).unwrap();
        assert_eq!(as_raw(&got), oracle(dimension), "N = {dimension}");
        let mut dedup = got.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), got.len());
    }
}

#[test]
fn sixty_counts() {
    let raw = enumerate_raw(60).unwrap();
    assert_eq!(raw.len(), 35);
    assert_eq!(raw.iter().filter(|t| t.is_pointed()).count(), 1);
    assert_eq!(
        enumerate_with_grouplikes(60, 15),
        vec!["(1, 15; 3, 5)".parse::<CoalgebraType>().unwrap()]
    );
}

#[test]
fn caps() {
    assert!(enumerate_raw(0).is_err());
    assert!(enumerate_raw(601).is_err());
    assert_eq!(enumerate_raw(1).unwrap(), vec![CoalgebraType::pointed(1)]);
}

proptest! {
    #[test]
    fn enumerated_types_are_valid(dimension in 1u32..=200) {
        let raw = enumerate_raw(dimension).unwrap();
        prop_assert!(raw.windows(2).all(|w| w[0] < w[1]));
        for t in &raw {
            prop_assert_eq!(t.dimension(), dimension);
            prop_assert!(t.satisfies_nz(dimension));
            let reparsed: CoalgebraType = t.to_string().parse().unwrap();
            prop_assert_eq!(&reparsed, t);
        }
    }

    #[test]
    fn orbit_configs_respect_counting(dimension in 2u32..=120, pick in any::<prop::sample::Index>()) {
        let raw: Vec<CoalgebraType> = enumerate_raw(dimension).unwrap().into_iter().filter(|t| !t.is_pointed()).collect();
        prop_assume!(!raw.is_empty());
        let t = &raw[pick.index(raw.len())];
        let n = t.grouplikes();
        for d in t.degrees() {
            let configs = orbit_configs(t, d).unwrap();
            for c in &configs {
                prop_assert_eq!(c.degree, d);
                prop_assert_eq!(c.orbit_sizes.iter().sum::<u32>(), t.count(d));
                prop_assert!(c.orbit_sizes.windows(2).all(|w| w[0] >= w[1]));
                for (&o, &s) in c.orbit_sizes.iter().zip(&c.stabilizer_orders) {
                    prop_assert_eq!(n % o, 0);
                    prop_assert_eq!(o * s, n);
                    prop_assert_eq!((d * d) % s, 0);
                }
            }
            let mut stabs: Vec<u32> = configs.iter().flat_map(|c| c.stabilizer_orders.clone()).collect();
            stabs.sort();
            stabs.dedup();
            prop_assert_eq!(feasible_stabilizers(t, d), stabs);
        }
        prop_assert!(orbit_configs(t, 1000).is_err());
    }
}
