//! Rule engine eliminating raw coalgebra types.
//!
//! Every rule is a pure predicate on `(type, dimension)`. Rules are
//! conservative: whenever the premise of an argument cannot be
//! established from the type alone the rule passes. Dimension 60 has a
//! stored answer key in [`reference`].

pub mod reference;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::chartables::{dual_coalgebra_type, FusionError};
use crate::groups::{build_group, GroupSpec, ORDER_CAP};
use crate::typespace::{self, feasible_stabilizers, orbit_configs, CoalgebraType, TypeError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SieveError {
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error(transparent)]
    Fusion(#[from] FusionError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    Nz,
    StabOrbit,
    Deg2B,
    Odd2,
    Closure12,
    HopfMod,
    SelfDual2A4,
    Gh1,
}

impl RuleId {
    pub const ALL: [RuleId; 8] = [
        RuleId::Nz,
        RuleId::StabOrbit,
        RuleId::Deg2B,
        RuleId::Odd2,
        RuleId::Closure12,
        RuleId::HopfMod,
        RuleId::SelfDual2A4,
        RuleId::Gh1,
    ];

    /// Rules valid in every dimension.
    pub const GENERIC: [RuleId; 7] = [
        RuleId::Nz,
        RuleId::StabOrbit,
        RuleId::Deg2B,
        RuleId::Odd2,
        RuleId::Closure12,
        RuleId::HopfMod,
        RuleId::SelfDual2A4,
    ];

    pub fn code(self) -> &'static str {
        match self {
            RuleId::Nz => "R-NZ",
            RuleId::StabOrbit => "R-STAB-ORBIT",
            RuleId::Deg2B => "R-DEG2-B",
            RuleId::Odd2 => "R-ODD2",
            RuleId::Closure12 => "R-CLOSURE-12",
            RuleId::HopfMod => "R-HOPFMOD",
            RuleId::SelfDual2A4 => "R-SELFDUAL2-A4",
            RuleId::Gh1 => "R-GH1",
        }
    }

    pub fn from_code(code: &str) -> Option<RuleId> {
        RuleId::ALL.into_iter().find(|r| r.code() == code)
    }

    pub fn description(self) -> &'static str {
        match self {
            RuleId::Nz => "group-like count divides the dimension and every n_d d^2",
            RuleId::StabOrbit => {
                "degree-d irreducibles split into orbits with admissible stabilizers"
            }
            RuleId::Deg2B => {
                "every degree-2 irreducible generates a dual group algebra k^Γ that fits"
            }
            RuleId::Odd2 => "order-4 group-likes with an odd number of degree-2 irreducibles",
            RuleId::Closure12 => "degree 1 and 2 simple subcoalgebras span a Hopf subalgebra",
            RuleId::HopfMod => {
                "higher-degree blocks stable under the closure are Hopf modules over it"
            }
            RuleId::SelfDual2A4 => "a self-dual degree-2 irreducible with B[χ] = k^A4",
            RuleId::Gh1 => "trivial group-likes in dimension 60 (imported theorem)",
        }
    }

    /// The mathematical fact the rule rests on.
    pub fn citation(self) -> &'static str {
        match self {
            RuleId::Nz => "Nichols–Zoeller: n divides dim H and n divides n_d·d² for every degree d",
            RuleId::StabOrbit => {
                "Nichols–Zoeller: |G[χ]| divides (deg χ)², and G(H) permutes the degree-d irreducibles with orbits of size n/|G[χ]|"
            }
            RuleId::Deg2B => {
                "degree-2 theorem: B[χ] ≅ k^Γ with Γ ⊂ PSL2(k) non-cyclic of even order; Γ = Z2×Z2, D_m (m ≥ 3), or A4/S4/A5 as |G[χ]| = 4, 2, 1"
            }
            RuleId::Odd2 => {
                "a subgroup of order 4 in G(H) with an odd number of degree-2 irreducibles yields a Hopf subalgebra of dimension 8"
            }
            RuleId::Closure12 => {
                "if G[χ] = G(H) ≠ 1 for every degree-2 χ, the simple subcoalgebras of degrees 1 and 2 (dimensions 1 and 4) span a Hopf subalgebra"
            }
            RuleId::HopfMod => {
                "Nichols–Zoeller for Hopf modules: if B·C = C for a Hopf subalgebra B then dim B divides dim C"
            }
            RuleId::SelfDual2A4 => {
                "a self-dual degree-2 χ with G[χ] = 1 and B[χ] ≅ k^A4 has B[χ] of index 2 in k[C], so 24 divides dim H"
            }
            RuleId::Gh1 => {
                "imported theorem: a semisimple Hopf algebra of dimension 60 with G(H) = 1 has coalgebra type (1, 1; 3, 2; 4, 1; 5, 1)"
            }
        }
    }

    /// True for black-box results not re-derived combinatorially.
    pub fn is_imported(self) -> bool {
        self == RuleId::Gh1
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Pass,
    Eliminated,
    Annotated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub rule: Option<RuleId>,
    pub reason: String,
    pub annotation: Option<String>,
}

impl Verdict {
    fn pass(rule: RuleId, reason: impl Into<String>) -> Verdict {
        Verdict {
            outcome: Outcome::Pass,
            rule: Some(rule),
            reason: reason.into(),
            annotation: None,
        }
    }

    fn annotated(rule: RuleId, reason: impl Into<String>, note: impl Into<String>) -> Verdict {
        Verdict {
            outcome: Outcome::Annotated,
            rule: Some(rule),
            reason: reason.into(),
            annotation: Some(note.into()),
        }
    }

    fn eliminated(rule: RuleId, reason: impl fmt::Display) -> Verdict {
        Verdict {
            outcome: Outcome::Eliminated,
            rule: Some(rule),
            reason: format!("{reason} [{}]", rule.citation()),
            annotation: None,
        }
    }

    pub fn is_eliminated(&self) -> bool {
        self.outcome == Outcome::Eliminated
    }
}

/// A candidate for the Hopf subalgebra `B[χ] ≅ k^Γ` of a degree-2 `χ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaProfile {
    pub spec: GroupSpec,
    /// `|G[χ]|` this Γ corresponds to.
    pub stabilizer: u32,
    pub order: u32,
    /// Coalgebra type of `k^Γ`.
    pub dual_type: CoalgebraType,
    pub abelianization: u32,
}

impl GammaProfile {
    fn from_group(spec: GroupSpec, stabilizer: u32) -> Result<GammaProfile, SieveError> {
        let group = build_group(&spec).map_err(FusionError::from)?;
        Ok(GammaProfile {
            dual_type: dual_coalgebra_type(&spec)?,
            order: group.order() as u32,
            abelianization: group.abelianization_order() as u32,
            spec,
            stabilizer,
        })
    }

    // D_m beyond the group order cap: m odd has degrees 1,1 and (m-1)/2
    // twos, m even has four linear characters and (m-2)/2 twos.
    fn dihedral_closed_form(m: u32) -> GammaProfile {
        let (linear, twos) = if m % 2 == 1 {
            (2, (m - 1) / 2)
        } else {
            (4, (m - 2) / 2)
        };
        GammaProfile {
            spec: GroupSpec::Dihedral(m as usize),
            stabilizer: 2,
            order: 2 * m,
            dual_type: CoalgebraType::new(linear, [(2, twos)]).expect("n >= 1"),
            abelianization: linear,
        }
    }
}

/// Result of running every rule on one candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateOutcome {
    pub ty: CoalgebraType,
    pub verdicts: Vec<Verdict>,
}

impl CandidateOutcome {
    /// First eliminating verdict in evaluation order.
    pub fn first_failure(&self) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.is_eliminated())
    }

    pub fn failed_rules(&self) -> Vec<RuleId> {
        self.verdicts
            .iter()
            .filter(|v| v.is_eliminated())
            .filter_map(|v| v.rule)
            .collect()
    }

    pub fn annotations(&self) -> Vec<String> {
        self.verdicts
            .iter()
            .filter_map(|v| v.annotation.clone())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Survivor {
    pub ty: CoalgebraType,
    pub annotations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminatedCandidate {
    pub ty: CoalgebraType,
    /// The first failing rule's verdict.
    pub verdict: Verdict,
    /// Every rule that fails, in evaluation order.
    pub failed_rules: Vec<RuleId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveReport {
    pub dimension: u32,
    pub raw_count: usize,
    /// The pointed type `(1, N)`, excluded from the sieve as cocommutative.
    pub pointed: Option<CoalgebraType>,
    pub survivors: Vec<Survivor>,
    pub eliminated: Vec<EliminatedCandidate>,
    /// Agreement with the stored answer key; `None` without one.
    pub reference_match: Option<bool>,
}

impl SieveReport {
    pub fn survivor_types(&self) -> BTreeSet<CoalgebraType> {
        self.survivors.iter().map(|s| s.ty.clone()).collect()
    }
}

/// Rule evaluator bound to one dimension, with the candidate `Γ` for the
/// degree-2 rules precomputed.
#[derive(Debug, Clone)]
pub struct Sieve {
    dimension: u32,
    gammas: Vec<GammaProfile>,
}

impl Sieve {
    pub fn new(dimension: u32) -> Result<Sieve, SieveError> {
        if dimension == 0 || dimension > typespace::DIMENSION_CAP {
            return Err(TypeError::DimensionOutOfRange(dimension).into());
        }
        let mut gammas = Vec::new();
        let push = |gammas: &mut Vec<GammaProfile>,
                    spec: GroupSpec,
                    stabilizer: u32|
         -> Result<(), SieveError> {
            if dimension as usize % spec.order().map_err(FusionError::from)? == 0 {
                gammas.push(GammaProfile::from_group(spec, stabilizer)?);
            }
            Ok(())
        };
        push(&mut gammas, GroupSpec::Klein, 4)?;
        push(&mut gammas, GroupSpec::Alternating(4), 1)?;
        push(&mut gammas, GroupSpec::Symmetric(4), 1)?;
        push(&mut gammas, GroupSpec::Alternating(5), 1)?;
        for m in (3..=dimension / 2).filter(|m| dimension % (2 * m) == 0) {
            if 2 * m as usize <= ORDER_CAP {
                push(&mut gammas, GroupSpec::Dihedral(m as usize), 2)?;
            } else {
                gammas.push(GammaProfile::dihedral_closed_form(m));
            }
        }
        Ok(Sieve { dimension, gammas })
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    /// Every `Γ` whose order divides the dimension.
    pub fn gamma_candidates(&self) -> &[GammaProfile] {
        &self.gammas
    }

    pub fn rules(&self) -> &'static [RuleId] {
        if self.dimension == 60 {
            &RuleId::ALL
        } else {
            &RuleId::GENERIC
        }
    }

    /// Candidates `Γ` for stabilizer order `s` that fit inside `ty`: the
    /// type of `k^Γ` embeds (equals `ty` when `|Γ| = N`) and
    /// `|Γ/[Γ,Γ]|` divides `n`.
    pub fn admissible_gammas(&self, ty: &CoalgebraType, stabilizer: u32) -> Vec<&GammaProfile> {
        let n = ty.grouplikes();
        self.gammas
            .iter()
            .filter(|g| g.stabilizer == stabilizer)
            .filter(|g| {
                if g.order == self.dimension {
                    g.dual_type == *ty
                } else {
                    g.dual_type.embeds_into(ty)
                }
            })
            .filter(|g| n % g.abelianization == 0)
            .collect()
    }

    /// Stabilizer orders of degree-2 irreducibles that are orbit-feasible
    /// and admit some `Γ`.
    pub fn admissible_stabilizers(&self, ty: &CoalgebraType) -> Vec<u32> {
        if ty.count(2) == 0 {
            return Vec::new();
        }
        feasible_stabilizers(ty, 2)
            .into_iter()
            .filter(|&s| !self.admissible_gammas(ty, s).is_empty())
            .collect()
    }

    pub fn apply(&self, rule: RuleId, ty: &CoalgebraType) -> Verdict {
        match rule {
            RuleId::Nz => self.rule_nz(ty),
            RuleId::StabOrbit => self.rule_stab_orbit(ty),
            RuleId::Deg2B => self.rule_deg2_subalgebra(ty),
            RuleId::Odd2 => self.rule_odd_deg2(ty),
            RuleId::Closure12 => self.rule_closure_div(ty),
            RuleId::HopfMod => self.rule_hopf_module(ty),
            RuleId::SelfDual2A4 => self.rule_selfdual_a4(ty),
            RuleId::Gh1 => self.rule_gh1(ty),
        }
    }

    pub fn rule_nz(&self, ty: &CoalgebraType) -> Verdict {
        let rule = RuleId::Nz;
        if ty.dimension() != self.dimension {
            return Verdict::eliminated(
                rule,
                format_args!("dimension {} != {}", ty.dimension(), self.dimension),
            );
        }
        if !ty.satisfies_nz(self.dimension) {
            return Verdict::eliminated(
                rule,
                format_args!("n = {} fails the divisibility conditions", ty.grouplikes()),
            );
        }
        Verdict::pass(rule, "divisibility conditions hold")
    }

    pub fn rule_stab_orbit(&self, ty: &CoalgebraType) -> Verdict {
        let rule = RuleId::StabOrbit;
        for d in ty.degrees() {
            let configs = orbit_configs(ty, d).expect("degree taken from the type");
            if configs.is_empty() {
                return Verdict::eliminated(
                    rule,
                    format_args!(
                        "the {} irreducibles of degree {d} admit no orbit decomposition under {} group-likes",
                        ty.count(d),
                        ty.grouplikes()
                    ),
                );
            }
        }
        Verdict::pass(rule, "every degree admits an orbit decomposition")
    }

    pub fn rule_deg2_subalgebra(&self, ty: &CoalgebraType) -> Verdict {
        let rule = RuleId::Deg2B;
        if ty.count(2) == 0 {
            return Verdict::pass(rule, "no degree-2 irreducibles");
        }
        let names: Vec<String> = feasible_stabilizers(ty, 2)
            .into_iter()
            .flat_map(|s| self.admissible_gammas(ty, s))
            .map(|g| g.spec.to_string())
            .collect();
        if names.is_empty() {
            let stabs = feasible_stabilizers(ty, 2);
            return Verdict::eliminated(
                rule,
                format_args!("no admissible Γ for any feasible stabilizer order {stabs:?}"),
            );
        }
        let note = names
            .iter()
            .map(|n| format!("k^{n}"))
            .collect::<Vec<_>>()
            .join(" or ");
        Verdict::annotated(
            rule,
            format!("admissible Γ: {}", names.join(", ")),
            format!("B[χ] ≅ {note}"),
        )
    }

    pub fn rule_odd_deg2(&self, ty: &CoalgebraType) -> Verdict {
        let rule = RuleId::Odd2;
        let n2 = ty.count(2);
        if ty.grouplikes() % 4 == 0 && n2 % 2 == 1 && self.dimension % 8 != 0 {
            return Verdict::eliminated(
                rule,
                format_args!(
                    "4 | n = {} and {n2} degree-2 irreducibles force a Hopf subalgebra of dimension 8, but 8 ∤ {}",
                    ty.grouplikes(),
                    self.dimension
                ),
            );
        }
        Verdict::pass(rule, "premise absent or 8 divides the dimension")
    }

    /// Dimension of the span of degree 1 and 2 simple subcoalgebras when
    /// it is forced to be a Hopf subalgebra: every admissible stabilizer of
    /// a degree-2 irreducible equals `n > 1`.
    pub fn closure_dimension(&self, ty: &CoalgebraType) -> Option<u32> {
        let n = ty.grouplikes();
        let stabs = self.admissible_stabilizers(ty);
        if n < 2 || stabs.is_empty() || stabs.iter().any(|&s| s != n) {
            return None;
        }
        Some(n + 4 * ty.count(2))
    }

    pub fn rule_closure_div(&self, ty: &CoalgebraType) -> Verdict {
        let rule = RuleId::Closure12;
        match self.closure_dimension(ty) {
            None => Verdict::pass(rule, "G[χ] = G(H) is not forced for degree-2 irreducibles"),
            Some(b) if self.dimension % b != 0 => Verdict::eliminated(
                rule,
                format_args!("closure dimension {b} ∤ {}", self.dimension),
            ),
            Some(b) => Verdict::annotated(
                rule,
                format!("closure dimension {b} divides {}", self.dimension),
                format!("Hopf subalgebra of dimension {b}"),
            ),
        }
    }

    /// Degrees > 2 reachable from `degree` through products with
    /// degree-2 irreducibles, or `None` when some `2d'` has no
    /// decomposition into degrees > 2 of the type.
    pub fn product_closure(&self, ty: &CoalgebraType, degree: u32) -> Option<BTreeSet<u32>> {
        let big: Vec<u32> = ty.degrees().filter(|&d| d > 2).collect();
        let mut closure = BTreeSet::from([degree]);
        let mut frontier = vec![degree];
        while let Some(current) = frontier.pop() {
            let target = 2 * current as usize;
            // representable[s]: s is a sum of degrees from `big`
            let mut representable = vec![false; target + 1];
            representable[0] = true;
            for s in 1..=target {
                representable[s] = big
                    .iter()
                    .any(|&d| d as usize <= s && representable[s - d as usize]);
            }
            if !representable[target] {
                return None;
            }
            for &d in &big {
                if d as usize <= target && representable[target - d as usize] && closure.insert(d) {
                    frontier.push(d);
                }
            }
        }
        Some(closure)
    }

    pub fn rule_hopf_module(&self, ty: &CoalgebraType) -> Verdict {
        let rule = RuleId::HopfMod;
        let Some(b) = self
            .closure_dimension(ty)
            .filter(|b| self.dimension % b == 0)
        else {
            return Verdict::pass(rule, "no closure Hopf subalgebra to act");
        };
        let mut failures = Vec::new();
        for d in ty.degrees().filter(|&d| d > 2) {
            let Some(closure) = self.product_closure(ty, d) else {
                continue;
            };
            let block: u32 = closure.iter().map(|&e| ty.count(e) * e * e).sum();
            if block % b != 0 && !failures.iter().any(|(c, _)| *c == closure) {
                failures.push((closure, block));
            }
        }
        if !failures.is_empty() {
            let blocks: Vec<String> = failures
                .iter()
                .map(|(closure, block)| {
                    format!(
                        "degrees {closure:?} span a block of dimension {block} and {b} ∤ {block}"
                    )
                })
                .collect();
            return Verdict::eliminated(
                rule,
                format_args!(
                    "blocks stable under the closure of dimension {b}: {}",
                    blocks.join("; ")
                ),
            );
        }
        Verdict::pass(
            rule,
            format!("every stable block has dimension divisible by {b}"),
        )
    }

    pub fn rule_selfdual_a4(&self, ty: &CoalgebraType) -> Verdict {
        let rule = RuleId::SelfDual2A4;
        let n2 = ty.count(2);
        if n2 % 2 == 0 {
            return Verdict::pass(rule, "no forced self-dual degree-2 irreducible");
        }
        if self.admissible_stabilizers(ty) != [1] {
            return Verdict::pass(rule, "G[χ] = 1 is not forced");
        }
        let gammas = self.admissible_gammas(ty, 1);
        let [only] = gammas.as_slice() else {
            return Verdict::pass(rule, "B[χ] is not forced to be k^A4");
        };
        if only.spec != GroupSpec::Alternating(4) || only.dual_type.count(2) != 0 {
            return Verdict::pass(rule, "B[χ] is not forced to be k^A4");
        }
        let kc = 2 * only.order;
        if self.dimension % kc != 0 {
            return Verdict::eliminated(
                rule,
                format_args!(
                    "{n2} degree-2 irreducibles include a self-dual χ with B[χ] ≅ k^A4, so k[C] has dimension {kc} ∤ {}",
                    self.dimension
                ),
            );
        }
        Verdict::pass(rule, format!("{kc} divides the dimension"))
    }

    pub fn rule_gh1(&self, ty: &CoalgebraType) -> Verdict {
        let rule = RuleId::Gh1;
        if self.dimension != 60 {
            return Verdict::pass(rule, "inert outside dimension 60");
        }
        if ty.grouplikes() != 1 {
            return Verdict::pass(rule, "G(H) is nontrivial");
        }
        if *ty == reference::trivial_grouplike_type() {
            return Verdict::annotated(
                rule,
                "matches the forced type",
                "type forced by imported theorem",
            );
        }
        Verdict::eliminated(
            rule,
            format_args!(
                "imported theorem: G(H) = 1 forces {}",
                reference::trivial_grouplike_type()
            ),
        )
    }

    /// Runs `rules` in order on one candidate, recording every verdict.
    pub fn evaluate_with(&self, ty: &CoalgebraType, rules: &[RuleId]) -> CandidateOutcome {
        CandidateOutcome {
            ty: ty.clone(),
            verdicts: rules.iter().map(|&r| self.apply(r, ty)).collect(),
        }
    }

    pub fn evaluate(&self, ty: &CoalgebraType) -> CandidateOutcome {
        self.evaluate_with(ty, self.rules())
    }

    pub fn run(&self) -> Result<SieveReport, SieveError> {
        self.run_with(self.rules())
    }

    /// Sieves every raw candidate with the rules in the given order.
    pub fn run_with(&self, rules: &[RuleId]) -> Result<SieveReport, SieveError> {
        let raw = typespace::enumerate_raw(self.dimension)?;
        let raw_count = raw.len();
        let mut pointed = None;
        let mut survivors = Vec::new();
        let mut eliminated = Vec::new();
        for ty in raw {
            if ty.is_pointed() {
                pointed = Some(ty);
                continue;
            }
            let outcome = self.evaluate_with(&ty, rules);
            match outcome.first_failure() {
                Some(v) => eliminated.push(EliminatedCandidate {
                    ty: ty.clone(),
                    verdict: v.clone(),
                    failed_rules: outcome.failed_rules(),
                }),
                None => survivors.push(Survivor {
                    annotations: outcome.annotations(),
                    ty,
                }),
            }
        }
        let reference_match = (self.dimension == 60).then(|| {
            let expected: BTreeSet<CoalgebraType> = reference::survivors()
                .into_iter()
                .map(|(_, ty)| ty)
                .collect();
            survivors
                .iter()
                .map(|s| s.ty.clone())
                .collect::<BTreeSet<_>>()
                == expected
        });
        Ok(SieveReport {
            dimension: self.dimension,
            raw_count,
            pointed,
            survivors,
            eliminated,
            reference_match,
        })
    }
}

pub fn run_sieve(dimension: u32) -> Result<SieveReport, SieveError> {
    Sieve::new(dimension)?.run()
}
