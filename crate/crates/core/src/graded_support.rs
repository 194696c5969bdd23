//! Obstructions to group-graded semisimple braided Hopf algebras.
//!
//! A braided Hopf algebra `R` over `kG` is graded `R = ⊕ R_g`, and
//! `h . R_g = R_{hgh⁻¹}` makes its support a union of conjugacy classes.
//! With one-dimensional components `u_s` on the non-identity part of the
//! support, `u_s u_t ∈ R_{st}` vanishes whenever `st` leaves the support.
//! Two patterns then contradict semisimplicity:
//!
//! * every product of non-identity components vanishes, so their span is
//!   a nonzero nilpotent ideal;
//! * the only surviving products are squares `u_s²` landing in `R_1`, and
//!   there are at least two such `s`: a square equal to 1 kills every
//!   other `u_t` (`u_t = u_s² u_t = u_s (u_s u_t) = 0`), while all-zero
//!   squares give a nilpotent ideal again.
//!
//! The checker is sound but incomplete: [`ObstructionVerdict::Unknown`] only means
//! neither pattern applies.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::groups::{build_group, Element, FiniteGroup, GroupError, GroupSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SupportError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("invalid support problem: {0}")]
    Invalid(String),
    #[error("unsupported support problem: component {label} has dimension {dim}; only one-dimensional non-identity components are handled")]
    Unsupported { label: String, dim: u32 },
    #[error("no obstruction for support {{{}}} with total dimension {total}: {verdict:?}", support.join(", "))]
    TheoremGap {
        support: Vec<String>,
        total: u32,
        verdict: ObstructionVerdict,
    },
}

/// Candidate grading data: the support and the dimension of each
/// component.
#[derive(Debug, Clone)]
pub struct SupportProblem<'g> {
    group: &'g FiniteGroup,
    dims: BTreeMap<Element, u32>,
}

impl<'g> SupportProblem<'g> {
    /// Checks that the identity is in the support and that the support is
    /// conjugation closed.
    pub fn new(group: &'g FiniteGroup, dims: BTreeMap<Element, u32>) -> Result<Self, SupportError> {
        for &e in dims.keys() {
            group.check_element(e)?;
        }
        if dims.get(&group.identity()).copied().unwrap_or(0) == 0 {
            return Err(SupportError::Invalid(
                "the identity component must be nonzero".into(),
            ));
        }
        if let Some((&e, _)) = dims.iter().find(|(_, &d)| d == 0) {
            return Err(SupportError::Invalid(format!(
                "component {} is listed with dimension 0",
                group.label(e)
            )));
        }
        let support: BTreeSet<Element> = dims.keys().copied().collect();
        if conjugation_closure(group, &support) != support {
            return Err(SupportError::Invalid(
                "support is not closed under conjugation".into(),
            ));
        }
        Ok(SupportProblem { group, dims })
    }

    /// Every component one-dimensional.
    pub fn uniform(
        group: &'g FiniteGroup,
        support: &BTreeSet<Element>,
    ) -> Result<Self, SupportError> {
        Self::new(group, support.iter().map(|&e| (e, 1)).collect())
    }

    pub fn group(&self) -> &FiniteGroup {
        self.group
    }

    pub fn support(&self) -> BTreeSet<Element> {
        self.dims.keys().copied().collect()
    }

    pub fn dims(&self) -> &BTreeMap<Element, u32> {
        &self.dims
    }

    pub fn total(&self) -> u32 {
        self.dims.values().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObstructionVerdict {
    ImpossibleNilpotent,
    ImpossibleUnitClash,
    Unknown,
}

impl ObstructionVerdict {
    pub fn is_impossible(self) -> bool {
        self != ObstructionVerdict::Unknown
    }

    pub fn name(self) -> &'static str {
        match self {
            ObstructionVerdict::ImpossibleNilpotent => "ImpossibleNilpotent",
            ObstructionVerdict::ImpossibleUnitClash => "ImpossibleUnitClash",
            ObstructionVerdict::Unknown => "Unknown",
        }
    }
}

/// All products `(s, t, st)` over pairs of non-identity support elements,
/// plus the reasoning trail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub pairs: Vec<(Element, Element, Element)>,
    pub trace: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    pub verdict: ObstructionVerdict,
    pub witness: Witness,
}

/// Smallest conjugation-closed set containing `seed` and the identity.
pub fn conjugation_closure(group: &FiniteGroup, seed: &BTreeSet<Element>) -> BTreeSet<Element> {
    let mut out = BTreeSet::from([group.identity()]);
    for &s in seed {
        out.extend(group.elements().map(|h| group.conjugate(h, s)));
    }
    out
}

pub fn support_obstruction(problem: &SupportProblem<'_>) -> Result<Obstruction, SupportError> {
    let group = problem.group;
    let e = group.identity();
    if let Some((&s, &dim)) = problem.dims.iter().find(|(&s, &d)| s != e && d > 1) {
        return Err(SupportError::Unsupported {
            label: group.label(s).to_string(),
            dim,
        });
    }
    let support = problem.support();
    let nontrivial: Vec<Element> = support.iter().copied().filter(|&s| s != e).collect();
    let pairs: Vec<(Element, Element, Element)> = nontrivial
        .iter()
        .flat_map(|&s| nontrivial.iter().map(move |&t| (s, t)))
        .map(|(s, t)| (s, t, group.mul(s, t)))
        .collect();
    let surviving: Vec<&(Element, Element, Element)> = pairs
        .iter()
        .filter(|(_, _, st)| support.contains(st))
        .collect();

    let mut trace = Vec::new();
    let verdict = if nontrivial.is_empty() {
        trace.push("support is the identity alone; R = k is possible".to_string());
        ObstructionVerdict::Unknown
    } else if surviving.is_empty() {
        trace.push(format!(
            "all {} products of non-identity components leave the support",
            pairs.len()
        ));
        trace.push("their span is a nonzero nilpotent ideal".to_string());
        ObstructionVerdict::ImpossibleNilpotent
    } else if nontrivial.len() >= 2 && surviving.iter().all(|(s, t, st)| s == t && *st == e) {
        trace.push(
            "mixed products vanish and every surviving square lands in the identity component"
                .to_string(),
        );
        trace.push("a square equal to 1 annihilates the other components".to_string());
        trace.push("all squares zero gives a nilpotent ideal".to_string());
        ObstructionVerdict::ImpossibleUnitClash
    } else {
        let (s, t, st) = surviving
            .iter()
            .find(|(s, t, st)| s != t || *st != e)
            .or(surviving.first())
            .copied()
            .copied()
            .expect("nonempty");
        trace.push(format!(
            "{} · {} = {} stays in the support",
            group.label(s),
            group.label(t),
            group.label(st)
        ));
        ObstructionVerdict::Unknown
    };
    Ok(Obstruction {
        verdict,
        witness: Witness { pairs, trace },
    })
}

/// Re-checks an obstruction's witness against the Cayley table.
pub fn verify_witness(
    group: &FiniteGroup,
    support: &BTreeSet<Element>,
    obstruction: &Obstruction,
) -> Result<(), String> {
    let e = group.identity();
    let nontrivial: BTreeSet<Element> = support.iter().copied().filter(|&s| s != e).collect();
    let listed: BTreeSet<(Element, Element)> = obstruction
        .witness
        .pairs
        .iter()
        .map(|&(s, t, _)| (s, t))
        .collect();
    let expected: BTreeSet<(Element, Element)> = nontrivial
        .iter()
        .flat_map(|&s| nontrivial.iter().map(move |&t| (s, t)))
        .collect();
    if listed != expected {
        return Err("witness does not list every pair of non-identity support elements".into());
    }
    for &(s, t, st) in &obstruction.witness.pairs {
        if group.mul(s, t) != st {
            return Err(format!(
                "{} · {} is not {}",
                group.label(s),
                group.label(t),
                group.label(st)
            ));
        }
        let ok = match obstruction.verdict {
            ObstructionVerdict::ImpossibleNilpotent => !support.contains(&st),
            ObstructionVerdict::ImpossibleUnitClash => {
                if s == t {
                    st == e || !support.contains(&st)
                } else {
                    !support.contains(&st)
                }
            }
            ObstructionVerdict::Unknown => true,
        };
        if !ok {
            return Err(format!(
                "{} · {} = {} contradicts {:?}",
                group.label(s),
                group.label(t),
                group.label(st),
                obstruction.verdict
            ));
        }
    }
    match obstruction.verdict {
        ObstructionVerdict::ImpossibleNilpotent if nontrivial.is_empty() => {
            Err("empty nilpotent witness".into())
        }
        ObstructionVerdict::ImpossibleUnitClash if nontrivial.len() < 2 => {
            Err("unit clash needs two components".into())
        }
        _ => Ok(()),
    }
}

/// Conjugation-closed supports containing the identity whose size is at
/// most `max_size` (exactly `max_size` when `exact`), as unions of
/// classes, in lexicographic order of their sorted element lists.
fn class_unions(group: &FiniteGroup, max_size: usize, exact: bool) -> Vec<BTreeSet<Element>> {
    let classes: Vec<Vec<Element>> = group
        .conjugacy_classes()
        .classes
        .into_iter()
        .filter(|c| c[0] != group.identity())
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn walk(
        classes: &[Vec<Element>],
        from: usize,
        size: usize,
        max_size: usize,
        exact: bool,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if !exact || size == max_size {
            out.push(chosen.clone());
        }
        for i in from..classes.len() {
            if size + classes[i].len() <= max_size {
                chosen.push(i);
                walk(
                    classes,
                    i + 1,
                    size + classes[i].len(),
                    max_size,
                    exact,
                    chosen,
                    out,
                );
                chosen.pop();
            }
        }
    }
    let mut picks = Vec::new();
    walk(&classes, 0, 1, max_size, exact, &mut chosen, &mut picks);
    for pick in picks {
        let mut support = BTreeSet::from([group.identity()]);
        for i in pick {
            support.extend(classes[i].iter().copied());
        }
        out.push(support);
    }
    out.sort();
    out
}

/// Every conjugation-closed support of size `total` with one-dimensional
/// components, with its verdict.
pub fn scan_supports(group: &FiniteGroup, total: u32) -> Vec<(BTreeSet<Element>, Obstruction)> {
    class_unions(group, total as usize, true)
        .into_iter()
        .map(|support| {
            let problem =
                SupportProblem::uniform(group, &support).expect("class unions are closed");
            let obstruction =
                support_obstruction(&problem).expect("all components one-dimensional");
            (support, obstruction)
        })
        .collect()
}

/// Outcome of re-deriving one of the support theorems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub group: GroupSpec,
    pub total: u32,
    pub statement: String,
    /// Every support meeting the forbidden set, with its obstruction.
    pub cases: Vec<(Vec<String>, Obstruction)>,
    pub notes: Vec<String>,
}

/// Shows that no semisimple braided Hopf algebra of dimension `total` over
/// `spec` has support meeting `forbidden`: every conjugation-closed support
/// meeting it needs all components one-dimensional and is obstructed.
fn support_theorem(
    spec: GroupSpec,
    total: u32,
    forbidden: impl Fn(&FiniteGroup, Element) -> bool,
    statement: &str,
) -> Result<TheoremReport, SupportError> {
    let group = build_group(&spec)?;
    let labels = |s: &BTreeSet<Element>| {
        s.iter()
            .map(|&e| group.label(e).to_string())
            .collect::<Vec<_>>()
    };
    let mut cases = Vec::new();
    for support in class_unions(&group, total as usize, false) {
        if !support.iter().any(|&e| forbidden(&group, e)) {
            continue;
        }
        let problem = SupportProblem::uniform(&group, &support)?;
        if problem.total() != total {
            // extra dimension would have to sit in some component; the
            // checker only decides the all-ones case
            return Err(SupportError::TheoremGap {
                support: labels(&support),
                total,
                verdict: ObstructionVerdict::Unknown,
            });
        }
        let obstruction = support_obstruction(&problem)?;
        if !obstruction.verdict.is_impossible() {
            return Err(SupportError::TheoremGap {
                support: labels(&support),
                total,
                verdict: obstruction.verdict,
            });
        }
        verify_witness(&group, &support, &obstruction).map_err(SupportError::Invalid)?;
        cases.push((labels(&support), obstruction));
    }
    Ok(TheoremReport {
        group: spec,
        total,
        statement: statement.to_string(),
        cases,
        notes: Vec::new(),
    })
}

/// For odd `n >= 3`: a semisimple braided Hopf algebra of dimension
/// `n + 1` over `D_n` is supported on the rotations.
pub fn theorem_dihedral(n: usize) -> Result<TheoremReport, SupportError> {
    if n < 3 || n % 2 == 0 {
        return Err(SupportError::Invalid(format!(
            "n = {n} must be odd and at least 3"
        )));
    }
    let mut report = support_theorem(
        GroupSpec::Dihedral(n),
        n as u32 + 1,
        |_, e| e.0 >= n,
        "support ⊆ rotations",
    )?;
    report
        .notes
        .push(format!("the {n} reflections form a single conjugacy class"));
    Ok(report)
}

/// A semisimple braided Hopf algebra of dimension 5 over `A4` is supported
/// on the Klein subgroup.
pub fn theorem_a4() -> Result<TheoremReport, SupportError> {
    let mut report = support_theorem(
        GroupSpec::Alternating(4),
        5,
        |g, e| g.element_order(e).is_ok_and(|o| o == 3),
        "support ⊆ Klein",
    )?;
    let group = build_group(&GroupSpec::Alternating(4))?;
    let c = group.find("(1 2 3)").expect("A4 contains (1 2 3)");
    let class_size = conjugation_closure(&group, &BTreeSet::from([c])).len() - 1;
    report.notes.push(format!(
        "a 3-cycle has {class_size} conjugates, so a support meeting the 3-cycles has at least {} elements",
        class_size + 1
    ));
    report
        .notes
        .push("the Klein subgroup has 4 elements, so a dimension-5 algebra supported there has a component of dimension 2".into());
    Ok(report)
}
