//! Coalgebra types `(1, n; d_1, n_1; ...; d_r, n_r)` and their raw
//! enumeration under the Nichols–Zoeller divisibility constraints.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest dimension accepted by [`enumerate_raw`].
pub const DIMENSION_CAP: u32 = 600;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TypeError {
    #[error("dimension {0} outside 1..={DIMENSION_CAP}")]
    DimensionOutOfRange(u32),
    #[error("degree {degree} does not occur in type {ty}")]
    DegreeAbsent { degree: u32, ty: String },
    #[error("malformed coalgebra type {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("invalid coalgebra type: {0}")]
    Invalid(String),
}

/// Multiset of simple-subcoalgebra sizes: `n` group-likes and, for each
/// degree `d >= 2`, `n_d` copies of the `d x d` matrix coalgebra.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoalgebraType {
    n: u32,
    entries: Vec<(u32, u32)>,
}

impl CoalgebraType {
    /// Canonicalizes `(degree, count)` pairs: merges repeated degrees and
    /// drops zero counts. Degree-1 pairs are folded into `n`.
    pub fn new(n: u32, pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, TypeError> {
        let mut n = n;
        let mut entries: Vec<(u32, u32)> = Vec::new();
        for (d, c) in pairs {
            match d {
                0 => return Err(TypeError::Invalid("degree 0".into())),
                1 => n += c,
                _ if c == 0 => {}
                _ => match entries.iter_mut().find(|(e, _)| *e == d) {
                    Some(entry) => entry.1 += c,
                    None => entries.push((d, c)),
                },
            }
        }
        if n == 0 {
            return Err(TypeError::Invalid(
                "the unit is always group-like, n >= 1".into(),
            ));
        }
        entries.sort_unstable();
        Ok(CoalgebraType { n, entries })
    }

    /// The pointed type `(1, n)`.
    pub fn pointed(n: u32) -> Self {
        CoalgebraType {
            n,
            entries: Vec::new(),
        }
    }

    /// Number of group-likes.
    pub fn grouplikes(&self) -> u32 {
        self.n
    }

    /// `(degree, count)` pairs for degrees >= 2, strictly increasing.
    pub fn entries(&self) -> &[(u32, u32)] {
        &self.entries
    }

    pub fn count(&self, degree: u32) -> u32 {
        if degree == 1 {
            return self.n;
        }
        self.entries
            .iter()
            .find(|(d, _)| *d == degree)
            .map_or(0, |(_, c)| *c)
    }

    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.iter().map(|(d, _)| *d)
    }

    pub fn dimension(&self) -> u32 {
        self.n + self.entries.iter().map(|(d, c)| c * d * d).sum::<u32>()
    }

    /// Pointed types are those of group algebras, hence cocommutative.
    pub fn is_pointed(&self) -> bool {
        self.entries.is_empty()
    }

    /// All `(degree, count)` pairs including `(1, n)`.
    pub fn pairs(&self) -> Vec<(u32, u32)> {
        std::iter::once((1, self.n))
            .chain(self.entries.iter().copied())
            .collect()
    }

    /// True when every count of `self` is bounded by the same count in
    /// `other`.
    pub fn embeds_into(&self, other: &CoalgebraType) -> bool {
        self.n <= other.n && self.entries.iter().all(|&(d, c)| c <= other.count(d))
    }

    /// `n | N` and `n | n_d d^2` for every entry.
    pub fn satisfies_nz(&self, dimension: u32) -> bool {
        dimension % self.n == 0 && self.entries.iter().all(|(d, c)| (c * d * d) % self.n == 0)
    }
}

impl fmt::Display for CoalgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(1, {}", self.n)?;
        for (d, c) in &self.entries {
            write!(f, "; {d}, {c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for CoalgebraType {
    type Err = TypeError;

    /// Parses the `(1, n; d, c; ...)` notation; parentheses and spaces are
    /// optional.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| TypeError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut pairs = Vec::new();
        for part in body.split(';') {
            let nums: Vec<u32> = part
                .split(',')
                .map(|x| x.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| err("expected integers"))?;
            match nums[..] {
                [d, c] => pairs.push((d, c)),
                _ => return Err(err("each group must be `degree, count`")),
            }
        }
        match pairs.first() {
            Some((1, _)) => {}
            _ => return Err(err("must start with `1, n`")),
        }
        let (_, n) = pairs.remove(0);
        if pairs.iter().any(|(d, _)| *d < 2) {
            return Err(err("only the first group may have degree 1"));
        }
        CoalgebraType::new(n, pairs)
    }
}

/// How the irreducibles of one degree split into orbits under left
/// multiplication by the group-likes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitConfig {
    pub degree: u32,
    /// Non-increasing.
    pub orbit_sizes: Vec<u32>,
    /// `n / o` for each orbit size `o`, in the same order.
    pub stabilizer_orders: Vec<u32>,
}

fn divisors(n: u32) -> impl DoubleEndedIterator<Item = u32> {
    (1..=n).filter(move |d| n % d == 0)
}

/// All coalgebra types of dimension `dimension` passing the
/// Nichols–Zoeller filter, sorted by `n` then entries. Includes the pointed
/// type.
pub fn enumerate_raw(dimension: u32) -> Result<Vec<CoalgebraType>, TypeError> {
    if dimension == 0 || dimension > DIMENSION_CAP {
        return Err(TypeError::DimensionOutOfRange(dimension));
    }
    let mut out: Vec<CoalgebraType> = divisors(dimension)
        .flat_map(|n| enumerate_with_grouplikes(dimension, n))
        .collect();
    out.sort();
    Ok(out)
}

/// Raw candidates with exactly `n` group-likes.
pub fn enumerate_with_grouplikes(dimension: u32, n: u32) -> Vec<CoalgebraType> {
    if n == 0 || n > dimension || dimension % n != 0 {
        return Vec::new();
    }
    let rest = dimension - n;
    let max_degree = (2..).take_while(|d| d * d <= rest).last().unwrap_or(1);
    let mut out = Vec::new();
    let mut acc = Vec::new();
    descend(n, 2, max_degree, rest, &mut acc, &mut out);
    out
}

fn descend(
    n: u32,
    degree: u32,
    max_degree: u32,
    rest: u32,
    acc: &mut Vec<(u32, u32)>,
    out: &mut Vec<CoalgebraType>,
) {
    if rest == 0 {
        out.push(CoalgebraType {
            n,
            entries: acc.clone(),
        });
        return;
    }
    if degree > max_degree {
        return;
    }
    let square = degree * degree;
    descend(n, degree + 1, max_degree, rest, acc, out);
    for count in 1..=rest / square {
        if (count * square) % n != 0 {
            continue;
        }
        acc.push((degree, count));
        descend(n, degree + 1, max_degree, rest - count * square, acc, out);
        acc.pop();
    }
}

/// Orbit decompositions of the degree-`degree` irreducibles of `ty`: orbit
/// sizes `o | n` summing to `n_d` with stabilizer order `n / o` dividing
/// `d^2`. An empty result means the degree is infeasible.
pub fn orbit_configs(ty: &CoalgebraType, degree: u32) -> Result<Vec<OrbitConfig>, TypeError> {
    let count = ty.count(degree);
    if degree < 2 || count == 0 {
        return Err(TypeError::DegreeAbsent {
            degree,
            ty: ty.to_string(),
        });
    }
    let n = ty.grouplikes();
    let sizes: Vec<u32> = divisors(n)
        .rev()
        .filter(|o| (degree * degree) % (n / o) == 0)
        .collect();
    let mut out = Vec::new();
    let mut acc = Vec::new();
    partitions_into(&sizes, 0, count, &mut acc, &mut |parts| {
        out.push(OrbitConfig {
            degree,
            orbit_sizes: parts.to_vec(),
            stabilizer_orders: parts.iter().map(|o| n / o).collect(),
        })
    });
    Ok(out)
}

// Partitions of `rest` into parts from `sizes[from..]` (descending).
fn partitions_into(
    sizes: &[u32],
    from: usize,
    rest: u32,
    acc: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u32]),
) {
    if rest == 0 {
        emit(acc);
        return;
    }
    for (i, &s) in sizes.iter().enumerate().skip(from) {
        if s <= rest {
            acc.push(s);
            partitions_into(sizes, i, rest - s, acc, emit);
            acc.pop();
        }
    }
}

/// Stabilizer orders occurring in at least one orbit configuration.
pub fn feasible_stabilizers(ty: &CoalgebraType, degree: u32) -> Vec<u32> {
    let mut out: Vec<u32> = orbit_configs(ty, degree)
        .unwrap_or_default()
        .into_iter()
        .flat_map(|c| c.stabilizer_orders)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> CoalgebraType {
        s.parse().unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(t("(1, 60)").dimension(), 60);
        assert_eq!(t("(1, 12; 4, 3)").dimension(), 60);
        assert_eq!(t("(1, 4; 2, 6; 4, 2)").dimension(), 60);
    }

    #[test]
    fn parsing_and_canonical_form() {
        let a = t("(1,4; 4,2; 2,6)");
        assert_eq!(a.to_string(), "(1, 4; 2, 6; 4, 2)");
        assert_eq!(
            a,
            CoalgebraType::new(4, [(2, 3), (4, 2), (2, 3), (5, 0)]).unwrap()
        );
        assert!("(2, 4)".parse::<CoalgebraType>().is_err());
        assert!("(1, 0)".parse::<CoalgebraType>().is_err());
        assert!("(1, 2; 1, 3)".parse::<CoalgebraType>().is_err());
        assert!("(1, 2; 3)".parse::<CoalgebraType>().is_err());
    }

    #[test]
    fn enumerate_small_and_restricted() {
        assert_eq!(enumerate_raw(1).unwrap(), vec![t("(1, 1)")]);
        assert_eq!(enumerate_with_grouplikes(60, 15), vec![t("(1, 15; 3, 5)")]);
        assert_eq!(enumerate_with_grouplikes(60, 10), vec![t("(1, 10; 5, 2)")]);
        assert!(enumerate_raw(0).is_err());
        assert!(enumerate_raw(601).is_err());
        assert!(enumerate_raw(60)
            .unwrap()
            .contains(&CoalgebraType::pointed(60)));
    }

    #[test]
    fn enumeration_order_is_canonical() {
        let raw = enumerate_raw(60).unwrap();
        assert!(raw.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(raw[0].grouplikes(), 1);
    }

    #[test]
    fn orbit_config_examples() {
        let c = orbit_configs(&t("(1, 12; 4, 3)"), 4).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].orbit_sizes, vec![3]);
        assert_eq!(c[0].stabilizer_orders, vec![4]);

        let c = orbit_configs(&t("(1, 2; 2, 1; 3, 6)"), 2).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].orbit_sizes, vec![1]);
        assert_eq!(c[0].stabilizer_orders, vec![2]);

        for c in orbit_configs(&t("(1, 1; 3, 2; 4, 1; 5, 1)"), 3).unwrap() {
            assert!(c.orbit_sizes.iter().all(|&o| o == 1));
            assert!(c.stabilizer_orders.iter().all(|&s| s == 1));
        }

        assert!(orbit_configs(&t("(1, 8; 3, 1)"), 3).unwrap().is_empty());
        assert!(matches!(
            orbit_configs(&t("(1, 12; 4, 3)"), 2),
            Err(TypeError::DegreeAbsent { degree: 2, .. })
        ));
    }

    #[test]
    fn feasible_stabilizer_sets() {
        assert_eq!(
            feasible_stabilizers(&t("(1, 2; 2, 2; 5, 2)"), 2),
            vec![1, 2]
        );
        assert_eq!(feasible_stabilizers(&t("(1, 3; 2, 3; 3, 5)"), 2), vec![1]);
        assert_eq!(
            feasible_stabilizers(&t("(1, 4; 2, 6; 4, 2)"), 2),
            vec![1, 2, 4]
        );
    }
}
