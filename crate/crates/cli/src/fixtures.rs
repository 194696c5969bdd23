//! The three known nontrivial simple Hopf algebras of dimension 60 and a
//! consistency check of their data against the sieve.

use hopf_sieve_core::sieve::reference;
use hopf_sieve_core::{build_group, fusion_dual_group, run_sieve, CoalgebraType, GroupSpec};

use crate::json::{FixtureJson, FixturesJson};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownExample {
    pub name: &'static str,
    pub coalgebra_type: CoalgebraType,
    pub grouplikes: GroupSpec,
    pub self_dual: bool,
    pub dual_of: Option<&'static str>,
    /// Survivor slot the type must land in.
    pub expected_slot: &'static str,
}

pub fn known_examples() -> Vec<KnownExample> {
    let ty = |s: &str| {
        s.parse::<CoalgebraType>()
            .expect("fixture types are well formed")
    };
    vec![
        KnownExample {
            name: "A0",
            coalgebra_type: ty("(1, 12; 4, 3)"),
            grouplikes: GroupSpec::Alternating(4),
            self_dual: false,
            dual_of: Some("A1"),
            expected_slot: "xi",
        },
        KnownExample {
            name: "A1",
            coalgebra_type: ty("(1, 1; 3, 2; 4, 1; 5, 1)"),
            grouplikes: GroupSpec::Cyclic(1),
            self_dual: false,
            dual_of: Some("A0"),
            expected_slot: "i",
        },
        KnownExample {
            name: "B",
            coalgebra_type: ty("(1, 4; 2, 6; 4, 2)"),
            grouplikes: GroupSpec::Klein,
            self_dual: true,
            dual_of: None,
            expected_slot: "vii",
        },
    ]
}

/// Runs every check on the shipped fixtures.
pub fn fixture_results() -> FixturesJson {
    check_examples(&known_examples())
}

/// `ok` is false on any mismatch; each example lists its problems.
pub fn check_examples(examples: &[KnownExample]) -> FixturesJson {
    let report = run_sieve(60);
    let survivors = report
        .as_ref()
        .map(|r| r.survivor_types())
        .unwrap_or_default();
    let mut out = Vec::new();
    for ex in examples {
        let mut problems = Vec::new();
        if let Err(e) = &report {
            problems.push(format!("sieve failed: {e}"));
        }
        let ty = &ex.coalgebra_type;
        if ty.dimension() != 60 {
            problems.push(format!("dimension {} ≠ 60", ty.dimension()));
        }
        let survives = survivors.contains(ty);
        if !survives {
            problems.push("type does not survive the sieve".into());
        }
        let slot = reference::slot_of(ty);
        if slot != Some(ex.expected_slot) {
            problems.push(format!("slot {slot:?}, expected ({})", ex.expected_slot));
        }
        let order = match build_group(&ex.grouplikes) {
            Ok(g) => g.order(),
            Err(e) => {
                problems.push(e.to_string());
                0
            }
        };
        if order != ty.grouplikes() as usize {
            problems.push(format!(
                "|{}| = {order} but the type has n = {}",
                ex.grouplikes,
                ty.grouplikes()
            ));
        }
        match ex.dual_of {
            Some(other) => {
                let back = examples
                    .iter()
                    .find(|e| e.name == other)
                    .and_then(|e| e.dual_of);
                if back != Some(ex.name) {
                    problems.push(format!("{other} is not recorded as dual to {}", ex.name));
                }
                if ex.self_dual {
                    problems.push("self-dual example names a distinct dual".into());
                }
            }
            None if !ex.self_dual => problems.push("no dual recorded".into()),
            None => {}
        }
        out.push(FixtureJson {
            name: ex.name.to_string(),
            ty: ty.to_string(),
            grouplikes: ex.grouplikes.to_string(),
            grouplike_order: order,
            self_dual: ex.self_dual,
            dual_of: ex.dual_of.map(str::to_string),
            expected_slot: ex.expected_slot.to_string(),
            slot: slot.map(str::to_string),
            survives,
            problems,
        });
    }
    // A1 shares its slot with k^A5, whose type comes from the character table
    if let Some(a1) = out.iter_mut().find(|f| f.name == "A1") {
        match fusion_dual_group(&GroupSpec::Alternating(5)) {
            Ok(t) if t.coalgebra_type().to_string() == a1.ty => {}
            Ok(t) => a1.problems.push(format!(
                "k^A5 has type {}, not {}",
                t.coalgebra_type(),
                a1.ty
            )),
            Err(e) => a1.problems.push(e.to_string()),
        }
    }
    FixturesJson {
        ok: out.iter().all(|f| f.problems.is_empty()),
        examples: out,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_fixtures_pass() {
        let r = fixture_results();
        assert!(r.ok, "{:#?}", r.examples);
        let orders: Vec<usize> = r.examples.iter().map(|f| f.grouplike_order).collect();
        assert_eq!(orders, [12, 1, 4]);
    }

    #[test]
    fn doctored_examples_are_reported() {
        let mut examples = known_examples();
        examples[2].expected_slot = "vi";
        examples[0].grouplikes = GroupSpec::Alternating(5);
        let r = check_examples(&examples);
        assert!(!r.ok);
        assert!(r.examples[2].problems[0].contains("expected (vi)"));
        assert!(r.examples[0].problems[0].contains("n = 12"));
        assert!(r.examples[1].problems.is_empty());
    }
}
