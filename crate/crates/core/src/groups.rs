//! Finite groups as dense Cayley tables.
//!
//! Every group is built from a concrete presentation (rotations and
//! reflections, permutations, residues) and compiled to a multiplication
//! table over element indices `0..order`. Index 0 is always the identity.
//! Everything downstream works on [`Element`] indices only.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest group order the toolkit will construct.
pub const ORDER_CAP: usize = 240;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group {spec} has order {order}, above the cap of {ORDER_CAP}")]
    OrderCap { spec: String, order: usize },
    #[error("invalid group spec {0}")]
    InvalidSpec(String),
    #[error("cannot parse group spec {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("element index {index} out of range for group of order {order}")]
    InvalidElement { index: usize, order: usize },
}

/// Index of an element in a [`FiniteGroup`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(pub usize);

impl Element {
    pub const IDENTITY: Element = Element(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

/// The named group families.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Klein,
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn product(a: GroupSpec, b: GroupSpec) -> GroupSpec {
        GroupSpec::DirectProduct(Box::new(a), Box::new(b))
    }

    /// Order of the group this spec describes, or an error for malformed
    /// parameters. Does not apply the order cap.
    pub fn order(&self) -> Result<usize, GroupError> {
        let invalid = || GroupError::InvalidSpec(self.to_string());
        match *self {
            GroupSpec::Cyclic(n) if n >= 1 => Ok(n),
            GroupSpec::Dihedral(n) if n >= 3 => n.checked_mul(2).ok_or_else(invalid),
            GroupSpec::Symmetric(n) if (1..=5).contains(&n) => Ok(factorial(n)),
            GroupSpec::Alternating(n) if (1..=5).contains(&n) => Ok(factorial(n).div_ceil(2)),
            GroupSpec::Klein => Ok(4),
            GroupSpec::DirectProduct(ref a, ref b) => {
                a.order()?.checked_mul(b.order()?).ok_or_else(invalid)
            }
            _ => Err(invalid()),
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Klein => write!(f, "V4"),
            GroupSpec::DirectProduct(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    /// Parses `C<n>`, `D<n>`, `S<n>`, `A<n>`, `V4` and `x`-separated
    /// direct products such as `D3xD5` (left associative).
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| GroupError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = input.trim();
        if trimmed.is_empty() {
            return Err(err("empty spec"));
        }
        let mut factors = trimmed.split(['x', 'X']).map(|tok| {
            let tok = tok.trim();
            if tok.eq_ignore_ascii_case("V4") {
                return Ok(GroupSpec::Klein);
            }
            let mut chars = tok.chars();
            let family = chars.next().ok_or_else(|| err("empty factor"))?;
            let n: usize = chars
                .as_str()
                .parse()
                .map_err(|_| err(&format!("bad parameter in factor {tok:?}")))?;
            let spec = match family.to_ascii_uppercase() {
                'C' | 'Z' => GroupSpec::Cyclic(n),
                'D' => GroupSpec::Dihedral(n),
                'S' => GroupSpec::Symmetric(n),
                'A' => GroupSpec::Alternating(n),
                _ => return Err(err(&format!("unknown family in factor {tok:?}"))),
            };
            spec.order()
                .map_err(|_| err(&format!("parameter out of range in {tok:?}")))?;
            Ok(spec)
        });
        let first = factors.next().ok_or_else(|| err("empty spec"))??;
        factors.try_fold(first, |acc, next| Ok(GroupSpec::product(acc, next?)))
    }
}

/// A finite group stored as its Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    spec: GroupSpec,
    order: usize,
    cayley: Vec<usize>,
    inverses: Vec<usize>,
    labels: Vec<String>,
}

/// Conjugacy classes, each sorted, ordered by their minimal element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClassPartition {
    pub classes: Vec<Vec<Element>>,
}

impl ConjugacyClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Map from element index to the index of its class.
    pub fn class_index(&self, order: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; order];
        for (ci, class) in self.classes.iter().enumerate() {
            for e in class {
                out[e.0] = ci;
            }
        }
        out
    }
}

/// Builds the group described by `spec`.
pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup, GroupError> {
    let order = spec.order()?;
    if order > ORDER_CAP {
        return Err(GroupError::OrderCap {
            spec: spec.to_string(),
            order,
        });
    }
    let (cayley, labels) = match *spec {
        GroupSpec::Cyclic(n) => cyclic_table(n),
        GroupSpec::Dihedral(n) => dihedral_table(n),
        GroupSpec::Klein => klein_table(),
        GroupSpec::Symmetric(n) => permutation_table(n, false),
        GroupSpec::Alternating(n) => permutation_table(n, true),
        GroupSpec::DirectProduct(ref a, ref b) => {
            let ga = build_group(a)?;
            let gb = build_group(b)?;
            product_table(&ga, &gb)
        }
    };
    let group = FiniteGroup::from_table(spec.clone(), cayley, labels);
    if cfg!(debug_assertions) && group.order <= 60 {
        debug_assert!(group.check_axioms().is_ok(), "{spec}: group axioms fail");
    }
    Ok(group)
}

fn cyclic_table(n: usize) -> (Vec<usize>, Vec<String>) {
    let cayley = (0..n * n).map(|ij| (ij / n + ij % n) % n).collect();
    let labels = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        })
        .collect();
    (cayley, labels)
}

// Element `f * n + k` is s^f r^k; r^k s = s r^-k.
fn dihedral_table(n: usize) -> (Vec<usize>, Vec<String>) {
    let order = 2 * n;
    let mut cayley = vec![0; order * order];
    for a in 0..order {
        let (fa, ka) = (a / n, a % n);
        for b in 0..order {
            let (fb, kb) = (b / n, b % n);
            let k = if fb == 1 {
                (n - ka + kb) % n
            } else {
                (ka + kb) % n
            };
            cayley[a * order + b] = ((fa + fb) % 2) * n + k;
        }
    }
    let labels = (0..order)
        .map(|a| {
            let rot = match a % n {
                0 => String::new(),
                1 => "r".to_string(),
                k => format!("r^{k}"),
            };
            match (a / n, rot.is_empty()) {
                (0, true) => "e".to_string(),
                (0, false) => rot,
                (_, true) => "s".to_string(),
                (_, false) => format!("s·{rot}"),
            }
        })
        .collect();
    (cayley, labels)
}

fn klein_table() -> (Vec<usize>, Vec<String>) {
    let cayley = (0..16).map(|ij| (ij / 4) ^ (ij % 4)).collect();
    let labels = ["e", "a", "b", "c"].iter().map(|s| s.to_string()).collect();
    (cayley, labels)
}

/// Permutations of `0..n` in lexicographic order (identity first),
/// optionally restricted to even ones.
pub(crate) fn permutations(n: usize, even_only: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        if !even_only || is_even(&current) {
            out.push(current.clone());
        }
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

fn is_even(perm: &[usize]) -> bool {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    inversions % 2 == 0
}

/// Cycle notation on points `1..=n`, `e` for the identity.
pub(crate) fn cycle_label(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut next = perm[start];
        while next != start {
            seen[next] = true;
            cycle.push(next + 1);
            next = perm[next];
        }
        let body: Vec<String> = cycle.iter().map(usize::to_string).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

// Product a*b means "apply b, then a", i.e. (a*b)(x) = a(b(x)).
fn permutation_table(n: usize, even_only: bool) -> (Vec<usize>, Vec<String>) {
    let perms = permutations(n, even_only);
    let index: std::collections::HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let order = perms.len();
    let mut cayley = vec![0; order * order];
    let mut composed = vec![0; n];
    for (ia, a) in perms.iter().enumerate() {
        for (ib, b) in perms.iter().enumerate() {
            for x in 0..n {
                composed[x] = a[b[x]];
            }
            cayley[ia * order + ib] = index[composed.as_slice()];
        }
    }
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    (cayley, labels)
}

// Element (g, h) has index g * |H| + h.
fn product_table(a: &FiniteGroup, b: &FiniteGroup) -> (Vec<usize>, Vec<String>) {
    let (na, nb) = (a.order, b.order);
    let order = na * nb;
    let mut cayley = vec![0; order * order];
    for x in 0..order {
        for y in 0..order {
            let g = a.cayley[(x / nb) * na + y / nb];
            let h = b.cayley[(x % nb) * nb + y % nb];
            cayley[x * order + y] = g * nb + h;
        }
    }
    let labels = (0..order)
        .map(|x| format!("({},{})", a.labels[x / nb], b.labels[x % nb]))
        .collect();
    (cayley, labels)
}

impl FiniteGroup {
    fn from_table(spec: GroupSpec, cayley: Vec<usize>, labels: Vec<String>) -> FiniteGroup {
        let order = labels.len();
        let inverses = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| cayley[a * order + b] == 0)
                    .expect("every element has an inverse")
            })
            .collect();
        FiniteGroup {
            spec,
            order,
            cayley,
            inverses,
            labels,
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        Element::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.order).map(Element)
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        Element(self.cayley[a.0 * self.order + b.0])
    }

    #[inline]
    pub fn inverse(&self, a: Element) -> Element {
        Element(self.inverses[a.0])
    }

    pub fn conjugate(&self, by: Element, a: Element) -> Element {
        self.mul(self.mul(by, a), self.inverse(by))
    }

    pub fn label(&self, a: Element) -> &str {
        &self.labels[a.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find(&self, label: &str) -> Option<Element> {
        self.labels.iter().position(|l| l == label).map(Element)
    }

    pub fn check_element(&self, a: Element) -> Result<Element, GroupError> {
        if a.0 < self.order {
            Ok(a)
        } else {
            Err(GroupError::InvalidElement {
                index: a.0,
                order: self.order,
            })
        }
    }

    /// Exhaustive check of the group axioms on the stored table: Latin
    /// square, identity, inverses and associativity.
    pub fn check_axioms(&self) -> Result<(), String> {
        let n = self.order;
        for a in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                row[self.cayley[a * n + b]] = true;
                col[self.cayley[b * n + a]] = true;
            }
            if row.iter().chain(&col).any(|seen| !seen) {
                return Err(format!("row/column {a} is not a permutation"));
            }
            if self.cayley[a] != a || self.cayley[a * n] != a {
                return Err(format!("element 0 is not an identity at {a}"));
            }
            let inv = self.inverses[a];
            if self.cayley[a * n + inv] != 0 || self.cayley[inv * n + a] != 0 {
                return Err(format!("bad inverse for {a}"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.cayley[a * n + b];
                for c in 0..n {
                    let bc = self.cayley[b * n + c];
                    if self.cayley[ab * n + c] != self.cayley[a * n + bc] {
                        return Err(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn element_order(&self, a: Element) -> Result<usize, GroupError> {
        let a = self.check_element(a)?;
        let mut power = a;
        let mut k = 1;
        while power != Element::IDENTITY {
            power = self.mul(power, a);
            k += 1;
        }
        Ok(k)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn conjugacy_classes(&self) -> ConjugacyClassPartition {
        let mut assigned = vec![false; self.order];
        let mut classes = Vec::new();
        for a in self.elements() {
            if assigned[a.0] {
                continue;
            }
            let class: BTreeSet<Element> = self.elements().map(|g| self.conjugate(g, a)).collect();
            for e in &class {
                assigned[e.0] = true;
            }
            classes.push(class.into_iter().collect());
        }
        ConjugacyClassPartition { classes }
    }

    /// Smallest subgroup containing `seed`.
    pub fn subgroup_generated_by<I>(&self, seed: I) -> BTreeSet<Element>
    where
        I: IntoIterator<Item = Element>,
    {
        let generators: Vec<Element> = seed.into_iter().collect();
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut queue = VecDeque::from([Element::IDENTITY]);
        // In a finite group, closure under right multiplication by the
        // generators already yields inverses.
        while let Some(x) = queue.pop_front() {
            for &g in &generators {
                let y = self.mul(x, g);
                if !member[y.0] {
                    member[y.0] = true;
                    queue.push_back(y);
                }
            }
        }
        self.elements().filter(|e| member[e.0]).collect()
    }

    pub fn commutator_subgroup(&self) -> BTreeSet<Element> {
        let commutators = self.elements().flat_map(|a| {
            self.elements().map(move |b| {
                let ab = self.mul(a, b);
                let ba_inv = self.inverse(self.mul(b, a));
                self.mul(ab, ba_inv)
            })
        });
        let unique: BTreeSet<Element> = commutators.collect();
        self.subgroup_generated_by(unique)
    }

    /// Order of G/[G,G].
    pub fn abelianization_order(&self) -> usize {
        self.order / self.commutator_subgroup().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> FiniteGroup {
        build_group(&s.parse().unwrap()).unwrap()
    }

    fn reflections(d: &FiniteGroup) -> Vec<Element> {
        d.elements()
            .filter(|e| d.label(*e).starts_with('s'))
            .collect()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "C1", "C60", "D5", "S4", "A5", "V4", "D3xD5", "A5xC2", "C2xC2xC3",
        ] {
            let spec: GroupSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("D2".parse::<GroupSpec>().is_err());
        assert!("S6".parse::<GroupSpec>().is_err());
        assert!("Q8".parse::<GroupSpec>().is_err());
        assert!("".parse::<GroupSpec>().is_err());
        assert!("D3x".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn order_cap_is_enforced() {
        let err = build_group(&"A5xA5".parse().unwrap()).unwrap_err();
        assert!(matches!(err, GroupError::OrderCap { order: 3600, .. }));
        assert!(err.to_string().contains("A5xA5"));
        assert_eq!(build_group(&"D120".parse().unwrap()).unwrap().order(), 240);
        assert!(build_group(&"D121".parse().unwrap()).is_err());
    }

    #[test]
    fn small_orders() {
        let trivial = g("C1");
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.label(Element(0)), "e");
        let d5 = g("D5");
        assert_eq!(d5.order(), 10);
        assert_eq!(reflections(&d5).len(), 5);
        assert_eq!(g("A4").order(), 12);
        assert_eq!(g("S4").order(), 24);
        assert_eq!(g("A5").order(), 60);
        assert_eq!(g("D3xD5").order(), 60);
    }

    #[test]
    fn labels_are_deterministic() {
        let d5 = g("D5");
        assert_eq!(d5.labels()[..3], ["e", "r", "r^2"]);
        assert_eq!(d5.labels()[5..7], ["s", "s·r"]);
        let a4 = g("A4");
        assert_eq!(a4.label(Element(0)), "e");
        assert!(a4.find("(1 2 3)").is_some());
        assert_eq!(g("S4").labels(), g("S4").labels());
    }

    #[test]
    fn element_orders() {
        let d5 = g("D5");
        assert_eq!(d5.element_order(Element(0)).unwrap(), 1);
        let refl = reflections(&d5);
        for &x in &refl {
            assert_eq!(d5.element_order(x).unwrap(), 2);
        }
        for &x in &refl {
            for &y in &refl {
                if x != y {
                    assert_eq!(d5.element_order(d5.mul(x, y)).unwrap(), 5);
                }
            }
        }
        assert!(matches!(
            d5.element_order(Element(10)),
            Err(GroupError::InvalidElement {
                index: 10,
                order: 10
            })
        ));
    }

    #[test]
    fn class_sizes() {
        let sizes = |s: &str| {
            let mut v = g(s).conjugacy_classes().sizes();
            v.sort();
            v
        };
        assert_eq!(sizes("C7"), vec![1; 7]);
        assert_eq!(sizes("D5"), vec![1, 2, 2, 5]);
        assert_eq!(sizes("A4"), vec![1, 3, 4, 4]);
        assert_eq!(sizes("S4"), vec![1, 3, 6, 6, 8]);
        assert_eq!(sizes("A5"), vec![1, 12, 12, 15, 20]);
        let d5 = g("D5");
        let classes = d5.conjugacy_classes();
        assert_eq!(classes.classes[0], vec![Element(0)]);
        assert!(classes.classes.iter().any(|c| *c == reflections(&d5)));
    }

    #[test]
    fn abelianizations() {
        assert_eq!(g("C6").abelianization_order(), 6);
        assert_eq!(g("A4").abelianization_order(), 3);
        assert_eq!(g("A5").abelianization_order(), 1);
        assert_eq!(g("S4").abelianization_order(), 2);
        assert_eq!(g("D5").abelianization_order(), 2);
        assert_eq!(g("D6").abelianization_order(), 4);
        let a4 = g("A4");
        let klein: Vec<&str> = a4
            .commutator_subgroup()
            .iter()
            .map(|e| a4.label(*e))
            .collect();
        assert_eq!(klein.len(), 4);
        assert!(klein.iter().skip(1).all(|l| l.matches('(').count() == 2));
    }

    #[test]
    fn generated_subgroups() {
        let d5 = g("D5");
        let trivial = d5.subgroup_generated_by([]);
        assert_eq!(trivial.into_iter().collect::<Vec<_>>(), vec![Element(0)]);
        let r = d5.find("r").unwrap();
        assert_eq!(d5.subgroup_generated_by([r]).len(), 5);
        let refl = reflections(&d5);
        assert_eq!(d5.subgroup_generated_by([refl[0], refl[3]]).len(), 10);
    }

    #[test]
    fn identity_and_inverses() {
        let s4 = g("S4");
        for a in s4.elements() {
            assert_eq!(s4.mul(a, s4.inverse(a)), s4.identity());
        }
    }
}
