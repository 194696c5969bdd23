//! Serialized shapes of every `--json` output. Field names are stable.

use serde::{Deserialize, Serialize};

use hopf_sieve_core::graded_support::{Obstruction, TheoremReport};
use hopf_sieve_core::sieve::{reference, CandidateOutcome, Outcome, Verdict};
use hopf_sieve_core::{CoalgebraType, FiniteGroup, FusionTable, Origin, SieveReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeJson {
    #[serde(rename = "type")]
    pub text: String,
    pub n: u32,
    /// `[degree, count]` for degrees at least 2.
    pub entries: Vec<[u32; 2]>,
    pub dimension: u32,
}

impl From<&CoalgebraType> for TypeJson {
    fn from(ty: &CoalgebraType) -> Self {
        TypeJson {
            text: ty.to_string(),
            n: ty.grouplikes(),
            entries: ty.entries().iter().map(|&(d, c)| [d, c]).collect(),
            dimension: ty.dimension(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateJson {
    pub dimension: u32,
    pub count: usize,
    pub types: Vec<TypeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub rule: Option<String>,
    pub outcome: String,
    pub reason: String,
    pub annotation: Option<String>,
    pub imported: bool,
}

pub fn outcome_name(outcome: Outcome) -> &'static str {
    match outcome {
        Outcome::Pass => "pass",
        Outcome::Eliminated => "eliminated",
        Outcome::Annotated => "annotated",
    }
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        VerdictJson {
            rule: v.rule.map(|r| r.code().to_string()),
            outcome: outcome_name(v.outcome).to_string(),
            reason: v.reason.clone(),
            annotation: v.annotation.clone(),
            imported: v.rule.is_some_and(|r| r.is_imported()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurvivorJson {
    #[serde(rename = "type")]
    pub ty: String,
    pub slot: Option<String>,
    pub annotations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Vec<VerdictJson>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminatedJson {
    #[serde(rename = "type")]
    pub ty: String,
    pub rule: String,
    pub imported: bool,
    pub reason: String,
    pub failed_rules: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Vec<VerdictJson>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SieveJson {
    pub dimension: u32,
    pub raw_count: usize,
    pub pointed: Option<String>,
    pub reference_match: Option<bool>,
    pub survivors: Vec<SurvivorJson>,
    pub eliminated: Vec<EliminatedJson>,
}

impl SieveJson {
    /// `explain` holds the full per-rule outcome of every candidate when
    /// requested.
    pub fn new(report: &SieveReport, explain: Option<&[CandidateOutcome]>) -> Self {
        let verdicts_of = |ty: &CoalgebraType| {
            explain.map(|all| {
                all.iter()
                    .find(|c| &c.ty == ty)
                    .map(|c| c.verdicts.iter().map(VerdictJson::from).collect())
                    .unwrap_or_default()
            })
        };
        let sixty = report.dimension == 60;
        let mut json = SieveJson {
            dimension: report.dimension,
            raw_count: report.raw_count,
            pointed: report.pointed.as_ref().map(|t| t.to_string()),
            reference_match: report.reference_match,
            survivors: report
                .survivors
                .iter()
                .map(|s| SurvivorJson {
                    ty: s.ty.to_string(),
                    slot: sixty
                        .then(|| reference::slot_of(&s.ty))
                        .flatten()
                        .map(str::to_string),
                    annotations: s.annotations.clone(),
                    verdicts: verdicts_of(&s.ty),
                })
                .collect(),
            eliminated: report
                .eliminated
                .iter()
                .map(|e| {
                    let rule = e.verdict.rule.expect("eliminations carry a rule");
                    EliminatedJson {
                        ty: e.ty.to_string(),
                        rule: rule.code().to_string(),
                        imported: rule.is_imported(),
                        reason: e.verdict.reason.clone(),
                        failed_rules: e
                            .failed_rules
                            .iter()
                            .map(|r| r.code().to_string())
                            .collect(),
                        verdicts: verdicts_of(&e.ty),
                    }
                })
                .collect(),
        };
        // answer-key order; types without a slot keep their place at the end
        let rank = |slot: &Option<String>| {
            slot.as_ref()
                .and_then(|s| {
                    reference::SURVIVOR_SLOTS
                        .iter()
                        .position(|(name, _)| name == s)
                })
                .unwrap_or(usize::MAX)
        };
        json.survivors.sort_by_key(|v| rank(&v.slot));
        json
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionLabelJson {
    pub id: usize,
    pub name: String,
    pub degree: u32,
    pub dual: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FusionJson {
    pub group: String,
    /// `"k^G"` or `"kG"`.
    pub algebra: String,
    pub labels: Vec<FusionLabelJson>,
    /// `[k, i, j, m]`: `k` occurs `m > 0` times in `i · j`.
    #[serde(rename = "N")]
    pub n: Vec<[u64; 4]>,
    /// `[degree, count]`, degree 1 first.
    #[serde(rename = "type")]
    pub ty: Vec<[u32; 2]>,
    pub max_residue: f64,
}

impl From<&FusionTable> for FusionJson {
    fn from(t: &FusionTable) -> Self {
        let (group, algebra) = match t.origin() {
            Origin::GroupAlgebra(s) => (s.to_string(), "kG"),
            Origin::DualGroupAlgebra(s) => (s.to_string(), "k^G"),
            Origin::Synthetic => (String::new(), "synthetic"),
        };
        let mut n = Vec::new();
        for i in 0..t.len() {
            for j in 0..t.len() {
                for &(k, m) in t.product(i, j) {
                    n.push([k as u64, i as u64, j as u64, m as u64]);
                }
            }
        }
        FusionJson {
            group,
            algebra: algebra.to_string(),
            labels: t
                .labels()
                .iter()
                .map(|l| FusionLabelJson {
                    id: l.id,
                    name: l.name.clone(),
                    degree: l.degree,
                    dual: l.dual,
                })
                .collect(),
            n,
            ty: t
                .coalgebra_type()
                .pairs()
                .into_iter()
                .map(|(d, c)| [d, c])
                .collect(),
            max_residue: t.max_rounding_residue(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    /// `[s, t, s·t]` as element labels.
    pub pairs: Vec<[String; 3]>,
    pub trace: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportJson {
    pub support: Vec<String>,
    pub verdict: String,
    pub witness: WitnessJson,
}

impl SupportJson {
    pub fn new(group: &FiniteGroup, support: Vec<String>, o: &Obstruction) -> Self {
        SupportJson {
            support,
            verdict: o.verdict.name().to_string(),
            witness: WitnessJson {
                pairs: o
                    .witness
                    .pairs
                    .iter()
                    .map(|&(s, t, st)| [s, t, st].map(|e| group.label(e).to_string()))
                    .collect(),
                trace: o.witness.trace.clone(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportCheckJson {
    pub group: String,
    pub total: u32,
    pub supports: Vec<SupportJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremJson {
    pub group: String,
    pub total: u32,
    pub statement: String,
    pub notes: Vec<String>,
    pub cases: Vec<SupportJson>,
}

impl TheoremJson {
    pub fn new(group: &FiniteGroup, r: &TheoremReport) -> Self {
        TheoremJson {
            group: r.group.to_string(),
            total: r.total,
            statement: r.statement.clone(),
            notes: r.notes.clone(),
            cases: r
                .cases
                .iter()
                .map(|(support, o)| SupportJson::new(group, support.clone(), o))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureJson {
    pub name: String,
    #[serde(rename = "type")]
    pub ty: String,
    pub grouplikes: String,
    pub grouplike_order: usize,
    pub self_dual: bool,
    pub dual_of: Option<String>,
    pub expected_slot: String,
    pub slot: Option<String>,
    pub survives: bool,
    pub problems: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixturesJson {
    pub ok: bool,
    pub examples: Vec<FixtureJson>,
}
