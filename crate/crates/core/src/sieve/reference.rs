//! Answer key for dimension 60: the surviving coalgebra types grouped into
//! thirteen slots, and the named eliminations with the rule expected to
//! remove each.

use super::RuleId;
use crate::typespace::CoalgebraType;

pub const SURVIVOR_SLOTS: [(&str, &[&str]); 13] = [
    ("i", &["(1, 1; 3, 2; 4, 1; 5, 1)"]),
    ("ii", &["(1, 2; 2, 1; 3, 6)", "(1, 2; 2, 1; 3, 2; 6, 1)"]),
    ("iii", &["(1, 2; 2, 2; 5, 2)"]),
    ("iv", &["(1, 3; 2, 12; 3, 1)", "(1, 3; 3, 1; 4, 3)"]),
    ("v", &["(1, 4; 2, 14)", "(1, 4; 2, 10; 4, 1)"]),
    ("vi", &["(1, 4; 2, 2; 4, 3)"]),
    ("vii", &["(1, 4; 2, 6; 4, 2)"]),
    (
        "viii",
        &["(1, 6; 2, 9; 3, 2)", "(1, 6; 3, 6)", "(1, 6; 3, 2; 6, 1)"],
    ),
    ("ix", &["(1, 10; 5, 2)"]),
    ("x", &["(1, 12; 2, 12)"]),
    ("xi", &["(1, 12; 4, 3)"]),
    ("xii", &["(1, 15; 3, 5)"]),
    ("xiii", &["(1, 20; 2, 10)"]),
];

pub const NAMED_ELIMINATIONS: [(&str, RuleId); 13] = [
    ("(1, 1; 3, 1; 5, 2)", RuleId::Gh1),
    ("(1, 1; 3, 3; 4, 2)", RuleId::Gh1),
    ("(1, 2; 2, 10; 3, 2)", RuleId::Closure12),
    ("(1, 2; 2, 6; 3, 2; 4, 1)", RuleId::Closure12),
    ("(1, 2; 2, 2; 3, 2; 4, 2)", RuleId::HopfMod),
    ("(1, 3; 2, 3; 3, 5)", RuleId::SelfDual2A4),
    ("(1, 3; 2, 3; 3, 1; 6, 1)", RuleId::SelfDual2A4),
    ("(1, 4; 2, 1; 4, 1; 6, 1)", RuleId::Odd2),
    ("(1, 4; 2, 5; 6, 1)", RuleId::Odd2),
    ("(1, 4; 2, 1; 3, 4; 4, 1)", RuleId::Odd2),
    ("(1, 4; 2, 5; 3, 4)", RuleId::Odd2),
    ("(1, 12; 2, 3; 6, 1)", RuleId::Odd2),
    ("(1, 12; 2, 3; 3, 4)", RuleId::Odd2),
];

fn parse(s: &str) -> CoalgebraType {
    s.parse().expect("reference types are well formed")
}

/// `(slot, type)` for all eighteen survivors, in slot order.
pub fn survivors() -> Vec<(&'static str, CoalgebraType)> {
    SURVIVOR_SLOTS
        .iter()
        .flat_map(|(slot, types)| types.iter().map(move |ty| (*slot, parse(ty))))
        .collect()
}

pub fn named_eliminations() -> Vec<(CoalgebraType, RuleId)> {
    NAMED_ELIMINATIONS
        .iter()
        .map(|(ty, r)| (parse(ty), *r))
        .collect()
}

/// Slot of a surviving type, if it is in the answer key.
pub fn slot_of(ty: &CoalgebraType) -> Option<&'static str> {
    survivors()
        .into_iter()
        .find(|(_, t)| t == ty)
        .map(|(slot, _)| slot)
}

/// The only type with trivial group-likes in dimension 60.
pub fn trivial_grouplike_type() -> CoalgebraType {
    parse(SURVIVOR_SLOTS[0].1[0])
}
