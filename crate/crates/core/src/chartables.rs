//! Character tables of the bundled groups and the fusion rings of `kG`
//! and `k^G`.
//!
//! Character values are double-precision complex numbers taken from
//! closed forms (roots of unity, `2cos(2πk/n)`, the golden ratio). Fusion
//! coefficients are recovered by rounding character inner products, and
//! the rounding residue is checked against [`ROUNDING_TOLERANCE`].

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

use crate::groups::{
    build_group, ConjugacyClassPartition, Element, FiniteGroup, GroupError, GroupSpec,
};
use crate::typespace::CoalgebraType;

pub const ROUNDING_TOLERANCE: f64 = 1e-6;
const ORTHOGONALITY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FusionError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("no character table for {spec}; supported: cyclic, dihedral, V4, S1-S4, A1-A5 and direct products of these")]
    Unsupported { spec: String },
    #[error("character table self-check failed for {spec}: {reason}")]
    TableCheck { spec: String, reason: String },
    #[error("fusion coefficient N({k};{i},{j}) has rounding residue {residue:e}")]
    Rounding {
        i: usize,
        j: usize,
        k: usize,
        residue: f64,
    },
    #[error("label {label} is not in a table with {len} labels")]
    ForeignLabel { label: usize, len: usize },
    #[error("fusion table inconsistency: {0}")]
    Inconsistent(String),
}

/// One irreducible character.
#[derive(Debug, Clone, PartialEq)]
pub struct Irrep {
    pub label: String,
    pub degree: u32,
    /// One value per conjugacy class, in class order.
    pub values: Vec<Complex64>,
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    group: FiniteGroup,
    classes: ConjugacyClassPartition,
    class_of: Vec<usize>,
    irreps: Vec<Irrep>,
}

impl CharacterTable {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyClassPartition {
        &self.classes
    }

    pub fn irreps(&self) -> &[Irrep] {
        &self.irreps
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.irreps.iter().map(|r| r.degree).collect()
    }

    pub fn value(&self, irrep: usize, element: Element) -> Complex64 {
        self.irreps[irrep].values[self.class_of[element.0]]
    }

    /// `(1/|G|) Σ_c |c| χ_i(c) conj(χ_j(c))`.
    pub fn inner_product(&self, i: usize, j: usize) -> Complex64 {
        let order = self.group.order() as f64;
        self.classes
            .classes
            .iter()
            .enumerate()
            .map(|(c, class)| {
                class.len() as f64 * self.irreps[i].values[c] * self.irreps[j].values[c].conj()
            })
            .sum::<Complex64>()
            / order
    }

    /// Row orthogonality and `Σ d² = |G|`.
    pub fn self_check(&self) -> Result<(), String> {
        let order = self.group.order();
        if self.irreps.len() != self.classes.len() {
            return Err(format!(
                "{} irreps for {} classes",
                self.irreps.len(),
                self.classes.len()
            ));
        }
        let sum_sq: u32 = self.irreps.iter().map(|r| r.degree * r.degree).sum();
        if sum_sq as usize != order {
            return Err(format!("sum of squared degrees {sum_sq} != {order}"));
        }
        for r in &self.irreps {
            if (r.values[0] - Complex64::new(r.degree as f64, 0.0)).norm() > ORTHOGONALITY_TOLERANCE
            {
                return Err(format!(
                    "{} has value {} at the identity",
                    r.label, r.values[0]
                ));
            }
        }
        for i in 0..self.irreps.len() {
            for j in 0..self.irreps.len() {
                let expected = if i == j { 1.0 } else { 0.0 };
                let ip = self.inner_product(i, j);
                if (ip - Complex64::new(expected, 0.0)).norm() > ORTHOGONALITY_TOLERANCE {
                    return Err(format!(
                        "<{}, {}> = {ip}",
                        self.irreps[i].label, self.irreps[j].label
                    ));
                }
            }
        }
        Ok(())
    }
}

fn root_of_unity(k: usize, n: usize) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * (k % n) as f64 / n as f64)
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Character table of a supported group, with irreps ordered by degree and
/// then construction order.
pub fn character_table(spec: &GroupSpec) -> Result<CharacterTable, FusionError> {
    let group = build_group(spec)?;
    let classes = group.conjugacy_classes();
    let class_of = classes.class_index(group.order());
    let reps: Vec<Element> = classes.classes.iter().map(|c| c[0]).collect();
    let from_fn = |label: String, degree: u32, f: &dyn Fn(Element) -> Complex64| {
        irrep_on(&reps, label, degree, f)
    };

    let mut irreps: Vec<Irrep> = match *spec {
        GroupSpec::Cyclic(n) => (0..n)
            .map(|j| {
                let label = if j == 0 {
                    "1".to_string()
                } else {
                    format!("λ{j}")
                };
                from_fn(label, 1, &|e| root_of_unity(j * e.0, n))
            })
            .collect(),
        GroupSpec::Klein => ["1", "λa", "λb", "λc"]
            .iter()
            .enumerate()
            .map(|(m, name)| {
                from_fn(name.to_string(), 1, &|e| {
                    real(if (m & e.0).count_ones() % 2 == 0 {
                        1.0
                    } else {
                        -1.0
                    })
                })
            })
            .collect(),
        GroupSpec::Dihedral(n) => dihedral_irreps(n, &reps),
        GroupSpec::Symmetric(n) => stored_irreps(spec, &group, &classes, &class_of, n, false)?,
        GroupSpec::Alternating(n) => stored_irreps(spec, &group, &classes, &class_of, n, true)?,
        GroupSpec::DirectProduct(ref a, ref b) => {
            let ta = character_table(a)?;
            let tb = character_table(b)?;
            let nb = tb.group.order();
            let mut out = Vec::new();
            for (i, ra) in ta.irreps.iter().enumerate() {
                for (j, rb) in tb.irreps.iter().enumerate() {
                    out.push(from_fn(
                        format!("{}⊗{}", ra.label, rb.label),
                        ra.degree * rb.degree,
                        &|e| ta.value(i, Element(e.0 / nb)) * tb.value(j, Element(e.0 % nb)),
                    ));
                }
            }
            out
        }
    };
    irreps.sort_by_key(|r| r.degree);

    let table = CharacterTable {
        group,
        classes,
        class_of,
        irreps,
    };
    table
        .self_check()
        .map_err(|reason| FusionError::TableCheck {
            spec: spec.to_string(),
            reason,
        })?;
    Ok(table)
}

fn irrep_on(
    reps: &[Element],
    label: String,
    degree: u32,
    f: &dyn Fn(Element) -> Complex64,
) -> Irrep {
    Irrep {
        label,
        degree,
        values: reps.iter().map(|&e| f(e)).collect(),
    }
}

fn dihedral_irreps(n: usize, reps: &[Element]) -> Vec<Irrep> {
    let from_fn = |label: String, degree: u32, f: &dyn Fn(Element) -> Complex64| {
        irrep_on(reps, label, degree, f)
    };
    let is_reflection = move |e: Element| e.0 >= n;
    let rotation = move |e: Element| e.0 % n;
    let mut out = vec![
        from_fn("1".into(), 1, &|_| real(1.0)),
        from_fn("sgn".into(), 1, &|e| {
            real(if is_reflection(e) { -1.0 } else { 1.0 })
        }),
    ];
    if n % 2 == 0 {
        // r -> -1, s -> ±1
        for (name, s_sign) in [("ε+", 1.0), ("ε-", -1.0)] {
            out.push(from_fn(name.into(), 1, &|e| {
                let r_part = if rotation(e) % 2 == 0 { 1.0 } else { -1.0 };
                real(if is_reflection(e) {
                    r_part * s_sign
                } else {
                    r_part
                })
            }));
        }
    }
    for j in 1..n.div_ceil(2) {
        out.push(from_fn(format!("ρ{j}"), 2, &|e| {
            if is_reflection(e) {
                real(0.0)
            } else {
                real(2.0 * (2.0 * PI * (j * rotation(e)) as f64 / n as f64).cos())
            }
        }));
    }
    out
}

/// A classical table keyed by class representatives in cycle notation.
struct StoredTable {
    reps: &'static [&'static str],
    irreps: Vec<(&'static str, Vec<Complex64>)>,
}

fn stored_table(n: usize, alternating: bool) -> Option<StoredTable> {
    let w = root_of_unity(1, 3);
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let r = |xs: &[f64]| xs.iter().map(|&x| real(x)).collect::<Vec<_>>();
    let table = match (n, alternating) {
        (1, _) | (2, true) => StoredTable {
            reps: &["e"],
            irreps: vec![("1", r(&[1.0]))],
        },
        (2, false) => StoredTable {
            reps: &["e", "(1 2)"],
            irreps: vec![("1", r(&[1.0, 1.0])), ("sgn", r(&[1.0, -1.0]))],
        },
        (3, true) => StoredTable {
            reps: &["e", "(1 2 3)", "(1 3 2)"],
            irreps: vec![
                ("1", r(&[1.0, 1.0, 1.0])),
                ("ω", vec![real(1.0), w, w * w]),
                ("ω²", vec![real(1.0), w * w, w]),
            ],
        },
        (3, false) => StoredTable {
            reps: &["e", "(1 2)", "(1 2 3)"],
            irreps: vec![
                ("1", r(&[1.0, 1.0, 1.0])),
                ("sgn", r(&[1.0, -1.0, 1.0])),
                ("2", r(&[2.0, 0.0, -1.0])),
            ],
        },
        (4, true) => StoredTable {
            reps: &["e", "(1 2)(3 4)", "(1 2 3)", "(1 3 2)"],
            irreps: vec![
                ("1", r(&[1.0, 1.0, 1.0, 1.0])),
                ("1'", vec![real(1.0), real(1.0), w, w * w]),
                ("1''", vec![real(1.0), real(1.0), w * w, w]),
                ("3", r(&[3.0, -1.0, 0.0, 0.0])),
            ],
        },
        (4, false) => StoredTable {
            reps: &["e", "(1 2)", "(1 2)(3 4)", "(1 2 3)", "(1 2 3 4)"],
            irreps: vec![
                ("1", r(&[1.0, 1.0, 1.0, 1.0, 1.0])),
                ("sgn", r(&[1.0, -1.0, 1.0, 1.0, -1.0])),
                ("2", r(&[2.0, 0.0, 2.0, -1.0, 0.0])),
                ("3", r(&[3.0, 1.0, -1.0, 0.0, -1.0])),
                ("3'", r(&[3.0, -1.0, -1.0, 0.0, 1.0])),
            ],
        },
        (5, true) => StoredTable {
            // (1 3 5 2 4) is the square of (1 2 3 4 5)
            reps: &["e", "(1 2)(3 4)", "(1 2 3)", "(1 2 3 4 5)", "(1 3 5 2 4)"],
            irreps: vec![
                ("1", r(&[1.0, 1.0, 1.0, 1.0, 1.0])),
                ("3", r(&[3.0, -1.0, 0.0, phi, 1.0 - phi])),
                ("3'", r(&[3.0, -1.0, 0.0, 1.0 - phi, phi])),
                ("4", r(&[4.0, 0.0, 1.0, -1.0, -1.0])),
                ("5", r(&[5.0, 1.0, -1.0, 0.0, 0.0])),
            ],
        },
        _ => return None,
    };
    Some(table)
}

fn stored_irreps(
    spec: &GroupSpec,
    group: &FiniteGroup,
    classes: &ConjugacyClassPartition,
    class_of: &[usize],
    n: usize,
    alternating: bool,
) -> Result<Vec<Irrep>, FusionError> {
    let table = stored_table(n, alternating).ok_or_else(|| FusionError::Unsupported {
        spec: spec.to_string(),
    })?;
    let check = |reason: String| FusionError::TableCheck {
        spec: spec.to_string(),
        reason,
    };
    // position of each computed class in the stored column order
    let mut column = vec![usize::MAX; classes.len()];
    for (col, rep) in table.reps.iter().enumerate() {
        let e = group
            .find(rep)
            .ok_or_else(|| check(format!("no element {rep}")))?;
        column[class_of[e.0]] = col;
    }
    if column.contains(&usize::MAX) || table.reps.len() != classes.len() {
        return Err(check(
            "stored representatives do not cover the classes".into(),
        ));
    }
    Ok(table
        .irreps
        .into_iter()
        .map(|(label, values)| Irrep {
            label: label.to_string(),
            degree: values[0].re.round() as u32,
            values: column.iter().map(|&c| values[c]).collect(),
        })
        .collect())
}

/// Where a fusion table came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    GroupAlgebra(GroupSpec),
    DualGroupAlgebra(GroupSpec),
    Synthetic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionLabel {
    pub id: usize,
    pub name: String,
    pub degree: u32,
    pub dual: usize,
}

/// A based ring with nonnegative integer structure constants
/// `N(k; i, j)`, the multiplicity of `k` in `i · j`. Label 0 is the unit.
#[derive(Debug, Clone, PartialEq)]
pub struct FusionTable {
    labels: Vec<FusionLabel>,
    // products[i * len + j] = sorted (k, N(k;i,j)) with N > 0
    products: Vec<Vec<(usize, u32)>>,
    origin: Origin,
    max_residue: f64,
}

/// A nonnegative integer combination of labels.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RingElement {
    pub coefficients: BTreeMap<usize, u64>,
}

impl RingElement {
    pub fn basis(label: usize) -> Self {
        Self::from_terms([(label, 1)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, u64)>) -> Self {
        let mut coefficients = BTreeMap::new();
        for (label, c) in terms {
            if c > 0 {
                *coefficients.entry(label).or_insert(0) += c;
            }
        }
        RingElement { coefficients }
    }

    pub fn coefficient(&self, label: usize) -> u64 {
        self.coefficients.get(&label).copied().unwrap_or(0)
    }

    pub fn degree(&self, table: &FusionTable) -> u64 {
        self.coefficients
            .iter()
            .map(|(&l, &c)| c * table.labels[l].degree as u64)
            .sum()
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        Self::from_terms(
            self.coefficients
                .iter()
                .chain(&other.coefficients)
                .map(|(&l, &c)| (l, c)),
        )
    }
}

impl FusionTable {
    /// A table from explicit data; nothing is checked here, use
    /// [`FusionTable::check_invariants`].
    pub fn new(
        labels: Vec<FusionLabel>,
        products: Vec<Vec<(usize, u32)>>,
        origin: Origin,
    ) -> FusionTable {
        FusionTable {
            labels,
            products,
            origin,
            max_residue: 0.0,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[FusionLabel] {
        &self.labels
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    /// Largest distance to the nearest integer seen while rounding
    /// character inner products; zero for exact tables.
    pub fn max_rounding_residue(&self) -> f64 {
        self.max_residue
    }

    pub fn degree(&self, label: usize) -> u32 {
        self.labels[label].degree
    }

    pub fn dual(&self, label: usize) -> usize {
        self.labels[label].dual
    }

    fn check_label(&self, label: usize) -> Result<usize, FusionError> {
        if label < self.labels.len() {
            Ok(label)
        } else {
            Err(FusionError::ForeignLabel {
                label,
                len: self.labels.len(),
            })
        }
    }

    /// Nonzero terms of `i · j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, u32)] {
        &self.products[i * self.labels.len() + j]
    }

    /// `N(k; i, j)`.
    pub fn n(&self, k: usize, i: usize, j: usize) -> u32 {
        let terms = self.product(i, j);
        terms
            .binary_search_by_key(&k, |&(l, _)| l)
            .map_or(0, |pos| terms[pos].1)
    }

    pub fn degree_one_labels(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&l| self.labels[l].degree == 1)
            .collect()
    }

    /// Bilinear extension of the structure constants.
    pub fn decompose_product(
        &self,
        a: &RingElement,
        b: &RingElement,
    ) -> Result<RingElement, FusionError> {
        for &l in a.coefficients.keys().chain(b.coefficients.keys()) {
            self.check_label(l)?;
        }
        let mut out: BTreeMap<usize, u64> = BTreeMap::new();
        for (&i, &ci) in &a.coefficients {
            for (&j, &cj) in &b.coefficients {
                for &(k, m) in self.product(i, j) {
                    *out.entry(k).or_insert(0) += ci * cj * m as u64;
                }
            }
        }
        Ok(RingElement { coefficients: out })
    }

    /// `G[χ]`: degree-one labels `g` with `N(g; χ, χ*) > 0`, cross-checked
    /// against the multiplicative stabilizer `{h : h χ = χ}`.
    pub fn stabilizer(&self, chi: usize) -> Result<BTreeSet<usize>, FusionError> {
        self.check_label(chi)?;
        let dual = self.dual(chi);
        let by_multiplicity: BTreeSet<usize> = self
            .degree_one_labels()
            .into_iter()
            .filter(|&g| self.n(g, chi, dual) > 0)
            .collect();
        let by_action: BTreeSet<usize> = self
            .degree_one_labels()
            .into_iter()
            .filter(|&h| self.product(h, chi) == [(chi, 1)])
            .collect();
        if by_multiplicity != by_action {
            return Err(FusionError::Inconsistent(format!(
                "stabilizer of {} differs: {:?} by multiplicity, {:?} by action",
                self.labels[chi].name, by_multiplicity, by_action
            )));
        }
        Ok(by_action)
    }

    pub fn coalgebra_type(&self) -> CoalgebraType {
        let n = self.labels.iter().filter(|l| l.degree == 1).count() as u32;
        CoalgebraType::new(
            n,
            self.labels
                .iter()
                .filter(|l| l.degree > 1)
                .map(|l| (l.degree, 1)),
        )
        .expect("label 0 is the unit")
    }

    pub fn check_invariants(&self) -> Result<(), String> {
        self.check_unit()?;
        self.check_degree_multiplicativity()?;
        self.check_duality()?;
        self.check_adjunction()?;
        self.check_grouplike_multiplicities()?;
        self.check_associativity()?;
        self.check_stabilizers()
    }

    pub fn check_unit(&self) -> Result<(), String> {
        if self.labels.first().map(|l| l.degree) != Some(1) {
            return Err("label 0 must have degree 1".into());
        }
        for j in 0..self.len() {
            if self.product(0, j) != [(j, 1)] || self.product(j, 0) != [(j, 1)] {
                return Err(format!("label 0 is not a unit for {j}"));
            }
        }
        Ok(())
    }

    pub fn check_degree_multiplicativity(&self) -> Result<(), String> {
        for i in 0..self.len() {
            for j in 0..self.len() {
                let lhs = self.degree(i) as u64 * self.degree(j) as u64;
                let rhs: u64 = self
                    .product(i, j)
                    .iter()
                    .map(|&(k, m)| m as u64 * self.degree(k) as u64)
                    .sum();
                if lhs != rhs {
                    return Err(format!(
                        "deg({i})deg({j}) = {lhs} but the product has degree {rhs}"
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn check_duality(&self) -> Result<(), String> {
        for i in 0..self.len() {
            if self.dual(self.dual(i)) != i {
                return Err(format!("duality is not an involution at {i}"));
            }
            for j in 0..self.len() {
                let expected = u32::from(j == self.dual(i));
                if self.n(0, i, j) != expected {
                    return Err(format!("N(0;{i},{j}) = {}", self.n(0, i, j)));
                }
            }
        }
        Ok(())
    }

    /// `N(k;i,j) = N(i*; j, k*) = N(i; k, j*)` for all triples.
    pub fn check_adjunction(&self) -> Result<(), String> {
        for k in 0..self.len() {
            for i in 0..self.len() {
                for j in 0..self.len() {
                    let base = self.n(k, i, j);
                    let second = self.n(self.dual(i), j, self.dual(k));
                    let third = self.n(i, k, self.dual(j));
                    if base != second || base != third {
                        return Err(format!(
                            "adjunction fails at (k,i,j) = ({k},{i},{j}): {base}, {second}, {third}"
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// `N(g; χ, χ*) ∈ {0, 1}` for every degree-one `g`.
    pub fn check_grouplike_multiplicities(&self) -> Result<(), String> {
        for chi in 0..self.len() {
            for g in self.degree_one_labels() {
                let m = self.n(g, chi, self.dual(chi));
                if m > 1 {
                    return Err(format!("N({g}; {chi}, {chi}*) = {m}"));
                }
            }
        }
        Ok(())
    }

    pub fn check_associativity(&self) -> Result<(), String> {
        for i in 0..self.len() {
            for j in 0..self.len() {
                let ij =
                    RingElement::from_terms(self.product(i, j).iter().map(|&(k, m)| (k, m as u64)));
                for l in 0..self.len() {
                    let jl = RingElement::from_terms(
                        self.product(j, l).iter().map(|&(k, m)| (k, m as u64)),
                    );
                    let left = self
                        .decompose_product(&ij, &RingElement::basis(l))
                        .map_err(|e| e.to_string())?;
                    let right = self
                        .decompose_product(&RingElement::basis(i), &jl)
                        .map_err(|e| e.to_string())?;
                    if left != right {
                        return Err(format!("associativity fails at ({i},{j},{l})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Every `G[χ]` is a subgroup whose order divides both `deg(χ)²` and
    /// the number of degree-one labels.
    pub fn check_stabilizers(&self) -> Result<(), String> {
        let grouplikes = self.degree_one_labels().len();
        for chi in 0..self.len() {
            let stab = self.stabilizer(chi).map_err(|e| e.to_string())?;
            let d = self.degree(chi) as usize;
            if (d * d) % stab.len() != 0 || grouplikes % stab.len() != 0 {
                return Err(format!("|G[{chi}]| = {} for degree {d}", stab.len()));
            }
            for &a in &stab {
                for &b in &stab {
                    let closed = self.product(a, b).iter().all(|(k, _)| stab.contains(k));
                    if !closed {
                        return Err(format!("G[{chi}] not closed under products"));
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for FusionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            for j in 0..self.len() {
                let terms: Vec<String> = self
                    .product(i, j)
                    .iter()
                    .map(|&(k, m)| {
                        if m == 1 {
                            self.labels[k].name.clone()
                        } else {
                            format!("{m}·{}", self.labels[k].name)
                        }
                    })
                    .collect();
                writeln!(
                    f,
                    "{} · {} = {}",
                    self.labels[i].name,
                    self.labels[j].name,
                    terms.join(" + ")
                )?;
            }
        }
        Ok(())
    }
}

/// Fusion ring of `k^G`: labels are irreducible characters of `G`, with
/// structure constants from character inner products.
pub fn fusion_dual_group(spec: &GroupSpec) -> Result<FusionTable, FusionError> {
    let table = character_table(spec)?;
    let irreps = table.irreps();
    let len = irreps.len();
    let sizes: Vec<f64> = table
        .classes()
        .sizes()
        .into_iter()
        .map(|s| s as f64)
        .collect();
    let order = table.group().order() as f64;

    let mut labels = Vec::with_capacity(len);
    for (id, r) in irreps.iter().enumerate() {
        let conj: Vec<Complex64> = r.values.iter().map(|v| v.conj()).collect();
        let dual = irreps
            .iter()
            .position(|s| {
                s.values
                    .iter()
                    .zip(&conj)
                    .all(|(a, b)| (a - b).norm() < ROUNDING_TOLERANCE)
            })
            .ok_or_else(|| FusionError::Inconsistent(format!("no dual for {}", r.label)))?;
        labels.push(FusionLabel {
            id,
            name: r.label.clone(),
            degree: r.degree,
            dual,
        });
    }

    let mut max_residue: f64 = 0.0;
    let mut products = Vec::with_capacity(len * len);
    for i in 0..len {
        for j in 0..len {
            let mut terms = Vec::new();
            for k in 0..len {
                let value: Complex64 = (0..sizes.len())
                    .map(|c| {
                        sizes[c]
                            * irreps[i].values[c]
                            * irreps[j].values[c]
                            * irreps[k].values[c].conj()
                    })
                    .sum::<Complex64>()
                    / order;
                let rounded = value.re.round();
                let residue = (value - Complex64::new(rounded, 0.0)).norm();
                if residue >= ROUNDING_TOLERANCE || rounded < 0.0 {
                    return Err(FusionError::Rounding { i, j, k, residue });
                }
                max_residue = max_residue.max(residue);
                if rounded > 0.0 {
                    terms.push((k, rounded as u32));
                }
            }
            products.push(terms);
        }
    }
    let mut out = FusionTable::new(labels, products, Origin::DualGroupAlgebra(spec.clone()));
    out.max_residue = max_residue;
    Ok(out)
}

/// Fusion ring of `kG`: labels are group elements, all of degree one.
pub fn fusion_group_algebra(spec: &GroupSpec) -> Result<FusionTable, FusionError> {
    let group = build_group(spec)?;
    let labels = group
        .elements()
        .map(|e| FusionLabel {
            id: e.0,
            name: group.label(e).to_string(),
            degree: 1,
            dual: group.inverse(e).0,
        })
        .collect();
    let products = group
        .elements()
        .flat_map(|a| group.elements().map(move |b| (a, b)))
        .map(|(a, b)| vec![(group.mul(a, b).0, 1)])
        .collect();
    Ok(FusionTable::new(
        labels,
        products,
        Origin::GroupAlgebra(spec.clone()),
    ))
}

/// Coalgebra type of `k^G`, i.e. the multiset of irreducible degrees.
pub fn dual_coalgebra_type(spec: &GroupSpec) -> Result<CoalgebraType, FusionError> {
    let table = character_table(spec)?;
    let n = table.degrees().iter().filter(|&&d| d == 1).count() as u32;
    Ok(CoalgebraType::new(
        n,
        table
            .degrees()
            .into_iter()
            .filter(|&d| d > 1)
            .map(|d| (d, 1)),
    )
    .expect("trivial character has degree 1"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    fn label(t: &FusionTable, name: &str) -> usize {
        t.labels().iter().position(|l| l.name == name).unwrap()
    }

    #[test]
    fn degrees_of_bundled_tables() {
        assert_eq!(character_table(&spec("C2")).unwrap().degrees(), vec![1, 1]);
        assert_eq!(
            character_table(&spec("D5")).unwrap().degrees(),
            vec![1, 1, 2, 2]
        );
        assert_eq!(
            character_table(&spec("D6")).unwrap().degrees(),
            vec![1, 1, 1, 1, 2, 2]
        );
        assert_eq!(
            character_table(&spec("A5")).unwrap().degrees(),
            vec![1, 3, 3, 4, 5]
        );
        assert_eq!(
            character_table(&spec("S4")).unwrap().degrees(),
            vec![1, 1, 2, 3, 3]
        );
        assert_eq!(
            character_table(&spec("A4")).unwrap().degrees(),
            vec![1, 1, 1, 3]
        );
        assert_eq!(
            character_table(&spec("S3")).unwrap().degrees(),
            vec![1, 1, 2]
        );
    }

    #[test]
    fn unsupported_spec_is_reported() {
        let err = character_table(&spec("S5")).unwrap_err();
        assert!(matches!(err, FusionError::Unsupported { .. }));
        assert!(err.to_string().contains("supported"));
        assert!(matches!(
            character_table(&spec("A5xA5")),
            Err(FusionError::Group(_))
        ));
    }

    #[test]
    fn cyclic_two() {
        let t = fusion_dual_group(&spec("C2")).unwrap();
        assert_eq!(t.product(1, 1), [(0, 1)]);
    }

    #[test]
    fn d5_degree_two_square() {
        let t = fusion_dual_group(&spec("D5")).unwrap();
        let (sgn, r1, r2) = (label(&t, "sgn"), label(&t, "ρ1"), label(&t, "ρ2"));
        assert_eq!(t.dual(r1), r1);
        let sq = t
            .decompose_product(&RingElement::basis(r1), &RingElement::basis(t.dual(r1)))
            .unwrap();
        assert_eq!(sq, RingElement::from_terms([(0, 1), (sgn, 1), (r2, 1)]));
        assert_eq!(t.stabilizer(r1).unwrap(), BTreeSet::from([0, sgn]));
    }

    #[test]
    fn a4_degree_three_square() {
        let t = fusion_dual_group(&spec("A4")).unwrap();
        let l = label(&t, "3");
        let sq = t
            .decompose_product(&RingElement::basis(l), &RingElement::basis(t.dual(l)))
            .unwrap();
        assert_eq!(
            sq,
            RingElement::from_terms([(0, 1), (1, 1), (2, 1), (l, 2)])
        );
        let full = t
            .decompose_product(&RingElement::basis(l), &RingElement::basis(l))
            .unwrap();
        assert_eq!(full.degree(&t), 9);
    }

    #[test]
    fn group_algebra_products() {
        let c3 = fusion_group_algebra(&spec("C3")).unwrap();
        assert_eq!(c3.product(1, 1), [(2, 1)]);
        let d5 = fusion_group_algebra(&spec("D5")).unwrap();
        let s = label(&d5, "s");
        assert_eq!(d5.product(s, s), [(0, 1)]);
        let (x, y) = (label(&d5, "s"), label(&d5, "s·r"));
        let sum = RingElement::from_terms([(0, 1), (x, 1), (y, 1)]);
        let square = d5.decompose_product(&sum, &sum).unwrap();
        // 1·1 + x² + y²
        assert_eq!(square.coefficient(0), 3);
        assert_eq!(square.degree(&d5), 9);
    }

    #[test]
    fn products_with_unit_and_foreign_labels() {
        let t = fusion_dual_group(&spec("D5")).unwrap();
        for x in 0..t.len() {
            let p = t
                .decompose_product(&RingElement::basis(0), &RingElement::basis(x))
                .unwrap();
            assert_eq!(p, RingElement::basis(x));
        }
        let err = t
            .decompose_product(&RingElement::basis(0), &RingElement::basis(99))
            .unwrap_err();
        assert!(matches!(err, FusionError::ForeignLabel { label: 99, .. }));
        assert!(t.stabilizer(99).is_err());
    }

    #[test]
    fn stabilizer_examples() {
        let t = fusion_dual_group(&spec("D5")).unwrap();
        for g in t.degree_one_labels() {
            assert_eq!(t.stabilizer(g).unwrap(), BTreeSet::from([0]));
        }
        let a5 = fusion_dual_group(&spec("A5")).unwrap();
        assert!(a5.labels().iter().all(|l| l.degree != 2));
        for l in a5.labels().iter().filter(|l| l.degree == 3) {
            assert_eq!(a5.stabilizer(l.id).unwrap(), BTreeSet::from([0]));
        }
    }

    #[test]
    fn coalgebra_types() {
        let ty = |t: FusionTable| t.coalgebra_type().to_string();
        assert_eq!(ty(fusion_group_algebra(&spec("C60")).unwrap()), "(1, 60)");
        assert_eq!(
            ty(fusion_dual_group(&spec("A5")).unwrap()),
            "(1, 1; 3, 2; 4, 1; 5, 1)"
        );
        assert_eq!(ty(fusion_dual_group(&spec("A4")).unwrap()), "(1, 3; 3, 1)");
        assert_eq!(
            dual_coalgebra_type(&spec("S4")).unwrap().to_string(),
            "(1, 2; 2, 1; 3, 2)"
        );
    }

    #[test]
    fn synthetic_table_violations_are_caught() {
        // Z2 with a wrong dual assignment
        let labels = vec![
            FusionLabel {
                id: 0,
                name: "1".into(),
                degree: 1,
                dual: 0,
            },
            FusionLabel {
                id: 1,
                name: "g".into(),
                degree: 1,
                dual: 0,
            },
        ];
        let products = vec![vec![(0, 1)], vec![(1, 1)], vec![(1, 1)], vec![(0, 1)]];
        let t = FusionTable::new(labels, products, Origin::Synthetic);
        assert!(t.check_unit().is_ok());
        assert!(t.check_duality().is_err());
    }
}
