//! Representation spheres and abstract cohomology-sphere data.
//!
//! A [`RepSphere`] is the unit sphere of a sum of nontrivial 1-dimensional
//! irreducibles, given as a multiset of nonzero weights: real irreducibles
//! for p = 2, complex ones otherwise. A [`CohomSphereData`] is the abstract
//! shape of a (mod p)-cohomology n-sphere with group action: the dimension
//! `n`, the fixed-set dimension `r` (with -1 encoding the empty set), and a
//! table of fixed-set dimensions `n(H)` over corank-1 subtori. Lines absent
//! from the table carry `n(H) = r` by convention.
//!
//! [`CohomSphereData::validate`] checks the data against the Smith range,
//! the Borel formula `n - r = sum over H of (n(H) - r)`, and the parity
//! constraint for p != 2, reporting every violation rather than the first.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Error;
use crate::group::{line_of_weight, GroupSpec, SubtorusLine, Weight};

/// A representation sphere S(V) with V^G = {0}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepSphere {
    group: GroupSpec,
    weights: Vec<Weight>,
}

impl RepSphere {
    /// Builds a representation sphere, reducing weight entries to canonical
    /// representatives for prime p. Fails if the multiset is empty or any
    /// weight is zero (a zero weight would be a trivial summand, i.e.
    /// V^G != {0}).
    pub fn new(group: GroupSpec, weights: Vec<Weight>) -> Result<Self, Error> {
        if weights.is_empty() {
            return Err(Error::Domain(
                "representation sphere needs at least one weight".into(),
            ));
        }
        let mut canonical = Vec::with_capacity(weights.len());
        for (i, w) in weights.iter().enumerate() {
            let reduced = group.reduce_components(w.components())?;
            if reduced.iter().all(|&c| c == 0) {
                return Err(Error::Domain(format!(
                    "weight #{} is zero; representation spheres require V^G = {{0}}",
                    i + 1
                )));
            }
            canonical.push(Weight::new(reduced));
        }
        Ok(RepSphere {
            group,
            weights: canonical,
        })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Real dimension of S(V): `|weights| - 1` for p = 2 (real summands),
    /// `2|weights| - 1` otherwise (complex summands).
    pub fn dim(&self) -> i64 {
        let t = self.weights.len() as i64;
        if self.group.p() == 2 {
            t - 1
        } else {
            2 * t - 1
        }
    }

    /// Dimension of the fixed set S(V)^H: with `c` weights vanishing on `H`,
    /// `c - 1` for p = 2 and `2c - 1` otherwise; -1 means the empty set.
    pub fn fixed_dim(&self, line: &SubtorusLine) -> i64 {
        let c = self
            .weights
            .iter()
            .filter(|w| {
                line_of_weight(&self.group, w)
                    .map(|l| l == *line)
                    .unwrap_or(false)
            })
            .count() as i64;
        if self.group.p() == 2 {
            c - 1
        } else {
            2 * c - 1
        }
    }

    /// The cohomology-sphere shape of this representation sphere: `r = -1`
    /// and one table entry per line carrying at least one weight.
    pub fn to_cohom_data(&self) -> CohomSphereData {
        let mut counts: BTreeMap<SubtorusLine, i64> = BTreeMap::new();
        for w in &self.weights {
            let line =
                line_of_weight(&self.group, w).expect("representation sphere weights are nonzero");
            *counts.entry(line).or_insert(0) += 1;
        }
        let fixed = counts
            .into_iter()
            .map(|(line, c)| {
                let dim = if self.group.p() == 2 {
                    c - 1
                } else {
                    2 * c - 1
                };
                (line, dim)
            })
            .collect();
        CohomSphereData {
            group: self.group,
            n: self.dim(),
            r: -1,
            fixed,
        }
    }
}

/// Abstract (mod p)-cohomology n-sphere data with fixed-set dimensions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CohomSphereData {
    pub group: GroupSpec,
    /// Dimension of X; -1 encodes the empty space.
    pub n: i64,
    /// Dimension of X^G; -1 encodes the empty fixed set.
    pub r: i64,
    /// Fixed-set dimension n(H) per corank-1 subtorus. Absent lines carry
    /// n(H) = r.
    pub fixed: BTreeMap<SubtorusLine, i64>,
}

impl CohomSphereData {
    pub fn new(group: GroupSpec, n: i64, r: i64, fixed: BTreeMap<SubtorusLine, i64>) -> Self {
        CohomSphereData { group, n, r, fixed }
    }

    /// n(H), using the absent-line convention n(H) = r.
    pub fn fixed_dim(&self, line: &SubtorusLine) -> i64 {
        self.fixed.get(line).copied().unwrap_or(self.r)
    }

    /// Checks the data and returns all violations (an empty list means ok).
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if !(-1 <= self.r && self.r <= self.n) {
            out.push(Violation::SmithRange {
                n: self.n,
                r: self.r,
            });
        }
        let p = self.group.p();
        let mut seen_classes: BTreeSet<SubtorusLine> = BTreeSet::new();
        for (line, &dim) in &self.fixed {
            if line.direction().len() != self.group.rank() {
                out.push(Violation::WrongArity {
                    line: line.clone(),
                    expected: self.group.rank(),
                });
                continue;
            }
            match line_of_weight(&self.group, &Weight::new(line.direction().to_vec())) {
                Err(_) => out.push(Violation::ZeroLine { line: line.clone() }),
                Ok(normalized) => {
                    if normalized != *line {
                        out.push(Violation::UnnormalizedLine {
                            line: line.clone(),
                            normalized: normalized.clone(),
                        });
                    }
                    if !seen_classes.insert(normalized.clone()) {
                        out.push(Violation::DuplicateLine { class: normalized });
                    }
                }
            }
            if !(self.r <= dim && dim <= self.n) {
                out.push(Violation::DimRange {
                    line: line.clone(),
                    dim,
                    r: self.r,
                    n: self.n,
                });
            }
            if p != 2 && (dim - self.r).rem_euclid(2) != 0 {
                out.push(Violation::LineParity {
                    line: line.clone(),
                    diff: dim - self.r,
                });
            }
        }
        if p != 2 && (self.n - self.r).rem_euclid(2) != 0 {
            out.push(Violation::TotalParity {
                diff: self.n - self.r,
            });
        }
        let sum: i64 = self.fixed.values().map(|&dim| dim - self.r).sum();
        if self.n - self.r != sum {
            out.push(Violation::BorelSum {
                lhs: self.n - self.r,
                rhs: sum,
            });
        }
        out
    }

    /// `Err(Error::Invalid)` with the full violation list unless the data
    /// validates cleanly.
    pub fn ensure_valid(&self) -> Result<(), Error> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(violations))
        }
    }
}

/// A single consistency failure found by [`CohomSphereData::validate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    /// The Smith range -1 <= r <= n fails.
    SmithRange { n: i64, r: i64 },
    /// The Borel formula `n - r = sum_H (n(H) - r)` fails.
    BorelSum { lhs: i64, rhs: i64 },
    /// n - r is odd although p != 2.
    TotalParity { diff: i64 },
    /// n(H) - r is odd although p != 2.
    LineParity { line: SubtorusLine, diff: i64 },
    /// n(H) is outside [r, n].
    DimRange {
        line: SubtorusLine,
        dim: i64,
        r: i64,
        n: i64,
    },
    /// A table key is not in canonical form.
    UnnormalizedLine {
        line: SubtorusLine,
        normalized: SubtorusLine,
    },
    /// Two table keys name the same projective class.
    DuplicateLine { class: SubtorusLine },
    /// A table key is the zero vector.
    ZeroLine { line: SubtorusLine },
    /// A table key has the wrong number of components.
    WrongArity { line: SubtorusLine, expected: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SmithRange { n, r } => {
                write!(
                    f,
                    "Smith range violated: need -1 <= r <= n, got r = {r}, n = {n}"
                )
            }
            Violation::BorelSum { lhs, rhs } => write!(
                f,
                "Borel formula violated: n - r = {lhs} but the table sums to {rhs}"
            ),
            Violation::TotalParity { diff } => {
                write!(f, "parity violated: n - r = {diff} is odd (p != 2)")
            }
            Violation::LineParity { line, diff } => write!(
                f,
                "parity violated at line {line}: n(H) - r = {diff} is odd (p != 2)"
            ),
            Violation::DimRange { line, dim, r, n } => write!(
                f,
                "dimension out of range at line {line}: n(H) = {dim} not in [{r}, {n}]"
            ),
            Violation::UnnormalizedLine { line, normalized } => write!(
                f,
                "line {line} is not in canonical form (expected {normalized})"
            ),
            Violation::DuplicateLine { class } => {
                write!(f, "two table keys name the same subtorus {class}")
            }
            Violation::ZeroLine { line } => {
                write!(f, "table key {line} is the zero vector")
            }
            Violation::WrongArity { line, expected } => write!(
                f,
                "table key {line} has the wrong length (expected {expected} components)"
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(p: u64, k: usize) -> GroupSpec {
        GroupSpec::new(p, k).unwrap()
    }

    fn rep(p: u64, k: usize, weights: &[&[i64]]) -> RepSphere {
        RepSphere::new(
            g(p, k),
            weights.iter().map(|w| Weight::new(w.to_vec())).collect(),
        )
        .unwrap()
    }

    fn line(v: &[i64]) -> SubtorusLine {
        SubtorusLine::from_raw(v.to_vec())
    }

    #[test]
    fn sphere_dimensions() {
        assert_eq!(rep(2, 2, &[&[1, 0], &[0, 1], &[1, 1]]).dim(), 2);
        assert_eq!(rep(3, 1, &[&[1], &[2]]).dim(), 3);
        assert_eq!(rep(0, 2, &[&[1, 0], &[2, 0], &[0, 1]]).dim(), 5);
    }

    #[test]
    fn fixed_dimensions() {
        let s = rep(2, 2, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(s.fixed_dim(&line(&[1, 0])), 0);

        let s = rep(0, 2, &[&[1, 0], &[2, 0], &[0, 1]]);
        assert_eq!(s.fixed_dim(&line(&[1, 0])), 3);

        let s = rep(3, 2, &[&[1, 0]]);
        assert_eq!(s.fixed_dim(&line(&[0, 1])), -1);
    }

    #[test]
    fn to_cohom_data_examples() {
        let d = rep(2, 2, &[&[1, 0], &[0, 1], &[1, 1]]).to_cohom_data();
        assert_eq!(d.n, 2);
        assert_eq!(d.r, -1);
        assert_eq!(d.fixed.len(), 3);
        assert!(d.fixed.values().all(|&v| v == 0));

        let d = rep(3, 1, &[&[1], &[2]]).to_cohom_data();
        assert_eq!(d.n, 3);
        assert_eq!(d.fixed.get(&line(&[1])), Some(&3));
        assert_eq!(d.fixed.len(), 1);

        let d = rep(0, 2, &[&[1, 0], &[2, 0], &[0, 1]]).to_cohom_data();
        assert_eq!(d.n, 5);
        assert_eq!(d.fixed.get(&line(&[1, 0])), Some(&3));
        assert_eq!(d.fixed.get(&line(&[0, 1])), Some(&1));
    }

    #[test]
    fn to_cohom_data_validates() {
        for s in [
            rep(2, 2, &[&[1, 0], &[0, 1], &[1, 1]]),
            rep(3, 1, &[&[1], &[2]]),
            rep(0, 2, &[&[1, 0], &[2, 0], &[0, 1]]),
        ] {
            assert!(s.to_cohom_data().validate().is_empty());
        }
    }

    #[test]
    fn validate_borel_failure() {
        let mut fixed = BTreeMap::new();
        fixed.insert(line(&[1, 0]), 0);
        fixed.insert(line(&[0, 1]), 0);
        let d = CohomSphereData::new(g(2, 2), 2, -1, fixed);
        let violations = d.validate();
        assert_eq!(violations.len(), 1);
        assert!(matches!(
            violations[0],
            Violation::BorelSum { lhs: 3, rhs: 2 }
        ));
    }

    #[test]
    fn validate_parity_failure() {
        let mut fixed = BTreeMap::new();
        fixed.insert(line(&[1, 0]), 2);
        let d = CohomSphereData::new(g(3, 2), 2, -1, fixed);
        let violations = d.validate();
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::TotalParity { diff: 3 })));
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::LineParity { diff: 3, .. })));
        assert_eq!(violations.len(), 2);
    }

    #[test]
    fn validate_catches_unnormalized_and_duplicate_keys() {
        let mut fixed = BTreeMap::new();
        fixed.insert(line(&[1, 2]), 1);
        fixed.insert(line(&[2, 1]), 1); // same class as (1,2) in F_3
        let d = CohomSphereData::new(g(3, 2), 3, -1, fixed);
        let violations = d.validate();
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::UnnormalizedLine { .. })));
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::DuplicateLine { .. })));
    }

    #[test]
    fn validate_smith_and_dim_range() {
        let mut fixed = BTreeMap::new();
        fixed.insert(line(&[1]), 5);
        let d = CohomSphereData::new(g(2, 1), 3, 4, fixed);
        let violations = d.validate();
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::SmithRange { .. })));
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::DimRange { .. })));
    }

    #[test]
    fn degenerate_empty_sphere_is_valid() {
        let d = CohomSphereData::new(g(2, 1), -1, -1, BTreeMap::new());
        assert!(d.validate().is_empty());
    }

    #[test]
    fn validate_catches_bad_line_vectors() {
        let mut fixed = BTreeMap::new();
        fixed.insert(line(&[1, 0, 0]), 0); // wrong length for rank 2
        fixed.insert(line(&[0, 0]), 0); // zero vector
        let d = CohomSphereData::new(g(2, 2), 0, -1, fixed);
        let violations = d.validate();
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::WrongArity { expected: 2, .. })));
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::ZeroLine { .. })));
    }

    #[test]
    fn zero_weight_rejected() {
        assert!(RepSphere::new(g(3, 2), vec![Weight::new(vec![3, 0])]).is_err());
        assert!(RepSphere::new(g(0, 1), vec![Weight::new(vec![0])]).is_err());
        assert!(RepSphere::new(g(2, 1), vec![]).is_err());
    }

    #[test]
    fn weight_scaling_leaves_data_unchanged() {
        let a = rep(3, 2, &[&[1, 2], &[0, 1]]).to_cohom_data();
        let b = rep(3, 2, &[&[2, 4], &[0, 2]]).to_cohom_data();
        assert_eq!(a, b);

        let a = rep(0, 2, &[&[1, 2]]).to_cohom_data();
        let b = rep(0, 2, &[&[-3, -6]]).to_cohom_data();
        assert_eq!(a, b);
    }
}
