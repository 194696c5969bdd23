//! Combinatorial tools for semisimple Hopf algebras of small dimension:
//! finite groups, fusion rings of `kG` and `k^G`, coalgebra-type
//! enumeration, a rule sieve with explanations, and obstructions to
//! group-graded braided Hopf algebras.

pub mod chartables;
pub mod graded_support;
pub mod groups;
pub mod sieve;
pub mod typespace;

pub use chartables::{
    character_table, fusion_dual_group, fusion_group_algebra, CharacterTable, FusionError,
    FusionTable, Origin, RingElement,
};
pub use graded_support::{
    conjugation_closure, scan_supports, support_obstruction, theorem_a4, theorem_dihedral,
    Obstruction, ObstructionVerdict, SupportError, SupportProblem,
};
pub use groups::{
    build_group, ConjugacyClassPartition, Element, FiniteGroup, GroupError, GroupSpec,
};
pub use sieve::{run_sieve, RuleId, Sieve, SieveError, SieveReport, Verdict};
pub use typespace::{enumerate_raw, orbit_configs, CoalgebraType, OrbitConfig, TypeError};
