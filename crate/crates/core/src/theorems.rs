//! Decision procedures for equivariant maps and Bourgin-Yang bounds.
//!
//! Monotonicity of the length gives a necessary condition for a G-map
//! between fixed-point-free cohomology spheres: every corank-1 fixed set of
//! the source must fit inside the corresponding fixed set of the target.
//! [`borsuk_ulam_check`] reports the violating subtori, or `unknown` when
//! none exist (the condition is only necessary). For a p-torus and a
//! representation-sphere target the per-line comparison is also sufficient;
//! [`map_exists_to_rep_sphere`] decides it outright, and
//! [`canonical_target`] builds the representation sphere of the same
//! dimension and fixed-set profile that witnesses the converse.
//! [`bourgin_yang_bound`], [`bourgin_yang_manifold`] and
//! [`refined_bourgin_yang`] package the zero-set dimension estimates.

use std::fmt;

use num_rational::Rational64;

use crate::error::Error;
use crate::group::{GroupSpec, SubtorusLine, Weight};
use crate::length::length_h;
use crate::spheres::{CohomSphereData, RepSphere};

/// Three-valued existence verdict. `Unknown` means "no obstruction found by
/// a necessary condition"; only an if-and-only-if criterion returns `Yes`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Existence {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Existence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Existence::Yes => "true",
            Existence::No => "false",
            Existence::Unknown => "unknown",
        };
        write!(f, "{s}")
    }
}

/// Outcome of an equivariant-map existence check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MapVerdict {
    pub exists: Existence,
    /// Subtori where the dimension comparison fails; empty unless
    /// `exists == No`.
    pub witnesses: Vec<SubtorusLine>,
    /// Which criterion produced the verdict, with any hypothesis assertions.
    pub rationale: String,
}

/// Parameters of a Bourgin-Yang query: a G-map from a fixed-point-free
/// (mod p)-cohomology n-sphere into a space whose complement of the fixed
/// set is a (mod p)-cohomology m-sphere, with `alpha` the number of corank-1
/// subtori relevant to the zero set.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BourginYangQuery {
    pub p: u64,
    pub n: i64,
    pub m: i64,
    pub alpha: u64,
}

/// Lower bound for the dimension of the preimage of the fixed region.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BourginYangBound {
    /// (n - m)/alpha - 1 for p = 2, (n - m)/(2*alpha) - 1 otherwise.
    pub exact: Rational64,
    /// Ceiling of `exact`, the integer dimension bound.
    pub ceil: i64,
    /// Whether the zero set is guaranteed nonempty (n > m).
    pub nonempty: bool,
}

impl BourginYangBound {
    /// Canonical `num/den` text of the exact bound (reduced, denominator
    /// positive, integers rendered as `n/1`).
    pub fn exact_string(&self) -> String {
        format!("{}/{}", self.exact.numer(), self.exact.denom())
    }
}

fn require_same_group(a: &GroupSpec, b: &GroupSpec) -> Result<(), Error> {
    if a != b {
        return Err(Error::Hypothesis(format!(
            "spaces live under different groups: {a} vs {b}"
        )));
    }
    Ok(())
}

fn require_fixed_point_free(d: &CohomSphereData, role: &str) -> Result<(), Error> {
    if d.r >= 0 {
        return Err(Error::Hypothesis(format!(
            "{role} must have empty fixed set (r = -1), got r = {}",
            d.r
        )));
    }
    Ok(())
}

/// Necessary condition for a G-map X -> Y between fixed-point-free
/// cohomology spheres: `dim X^H <= dim Y^H` for every corank-1 subtorus.
/// Returns `No` with the violating lines, or `Unknown` when every comparison
/// passes. A total dimension drop (X.n > Y.n) forces a witness through the
/// Borel formula, so `Unknown` implies X.n <= Y.n.
pub fn borsuk_ulam_check(x: &CohomSphereData, y: &CohomSphereData) -> Result<MapVerdict, Error> {
    x.ensure_valid()?;
    y.ensure_valid()?;
    require_same_group(&x.group, &y.group)?;
    require_fixed_point_free(x, "source")?;
    require_fixed_point_free(y, "target")?;

    let mut lines: Vec<&SubtorusLine> = x.fixed.keys().chain(y.fixed.keys()).collect();
    lines.sort();
    lines.dedup();

    let witnesses: Vec<SubtorusLine> = lines
        .into_iter()
        .filter(|line| x.fixed_dim(line) > y.fixed_dim(line))
        .cloned()
        .collect();

    let mut rationale = String::from("Cor3.5 (necessary condition only)");
    if x.n > y.n {
        rationale.push_str("; n > m already forbids the map");
    }
    let exists = if witnesses.is_empty() {
        Existence::Unknown
    } else {
        Existence::No
    };
    Ok(MapVerdict {
        exists,
        witnesses,
        rationale,
    })
}

/// Decides whether a G-map exists from a fixed-point-free p-torus ANR
/// cohomology sphere X into the representation sphere S(V): it does exactly
/// when `dim X^H <= dim S(V)^H` for every corank-1 subtorus with nonempty
/// X^H. Never returns `Unknown`; the ANR hypothesis on X is recorded as an
/// assertion in the rationale.
pub fn map_exists_to_rep_sphere(x: &CohomSphereData, v: &RepSphere) -> Result<MapVerdict, Error> {
    if x.group.is_torus() {
        return Err(Error::Unsupported(
            "the existence criterion is established for p-torus groups only".into(),
        ));
    }
    x.ensure_valid()?;
    require_same_group(&x.group, v.group())?;
    require_fixed_point_free(x, "source")?;

    let witnesses: Vec<SubtorusLine> = x
        .fixed
        .iter()
        .filter(|(line, &dim)| dim >= 0 && v.fixed_dim(line) < dim)
        .map(|(line, _)| line.clone())
        .collect();

    let exists = if witnesses.is_empty() {
        Existence::Yes
    } else {
        Existence::No
    };
    Ok(MapVerdict {
        exists,
        witnesses,
        rationale: "Thm3.8 (source asserted to be a G-ANR)".into(),
    })
}

/// Builds the representation sphere of the same dimension and fixed-set
/// profile as X: for each table line H with nonempty fixed set, n(H) + 1
/// copies of the direction for p = 2 and (n(H) + 1)/2 copies for odd p.
/// The result always admits a map from X.
pub fn canonical_target(x: &CohomSphereData) -> Result<RepSphere, Error> {
    if x.group.is_torus() {
        return Err(Error::Unsupported(
            "the canonical target construction is established for p-torus groups only".into(),
        ));
    }
    x.ensure_valid()?;
    require_fixed_point_free(x, "source")?;

    let p = x.group.p();
    let mut weights = Vec::new();
    for (line, &dim) in &x.fixed {
        let copies = dim - x.r; // n(H) + 1 since r = -1
        let copies = if p == 2 { copies } else { copies / 2 };
        for _ in 0..copies {
            weights.push(Weight::new(line.direction().to_vec()));
        }
    }
    if weights.is_empty() {
        return Err(Error::Domain(
            "the degenerate empty sphere has no representation-sphere model".into(),
        ));
    }
    RepSphere::new(x.group, weights)
}

/// Lower bound for the dimension of Z_f, the preimage of the fixed region
/// under a G-map from a fixed-point-free cohomology n-sphere. For odd p the
/// bound assumes the target Euler class is polynomial (an assumption that
/// [`refined_bourgin_yang`] removes).
pub fn bourgin_yang_bound(q: &BourginYangQuery) -> Result<BourginYangBound, Error> {
    if q.alpha == 0 {
        return Err(Error::Domain("alpha must be >= 1".into()));
    }
    if q.p != 0 && !crate::algebra::field::is_prime(q.p) {
        return Err(Error::Domain(format!(
            "characteristic must be 0 or a prime, got {}",
            q.p
        )));
    }
    if q.n < -1 || q.m < -1 {
        return Err(Error::Domain("dimensions must be >= -1".into()));
    }
    let denom = if q.p == 2 { q.alpha } else { 2 * q.alpha } as i64;
    let exact = Rational64::new(q.n - q.m, denom) - Rational64::from_integer(1);
    Ok(BourginYangBound {
        exact,
        ceil: exact.ceil().to_integer(),
        nonempty: q.n > q.m,
    })
}

/// Optimal Bourgin-Yang estimate when the source is additionally a closed
/// orientable topological manifold, (n-1)-acyclic over the coefficient
/// field: `dim f^{-1}(A) >= n - m - 1`. The manifold and acyclicity
/// hypotheses are the caller's to assert.
pub fn bourgin_yang_manifold(n: i64, m: i64) -> i64 {
    n - m - 1
}

/// Per-line refinement with totals: sums max(0, l_H(X^H) - l_H((Y-Y^G)^H))
/// over the source table. Valid without any polynomiality assumption on the
/// target Euler class, because each restricted Euler class is a power of a
/// single linear form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RefinedBound {
    pub total: u64,
    pub per_line: Vec<(SubtorusLine, u64)>,
}

/// Lower bound for the length of Z_f from per-subtorus length differences.
pub fn refined_bourgin_yang(
    x: &CohomSphereData,
    y: &CohomSphereData,
) -> Result<RefinedBound, Error> {
    x.ensure_valid()?;
    y.ensure_valid()?;
    require_same_group(&x.group, &y.group)?;
    require_fixed_point_free(x, "source")?;
    require_fixed_point_free(y, "target")?;

    let mut per_line = Vec::new();
    let mut total = 0u64;
    for line in x.fixed.keys() {
        let lx = length_h(x, line)?.lo();
        let ly = length_h(y, line)?.lo();
        let term = lx.saturating_sub(ly);
        total += term;
        per_line.push((line.clone(), term));
    }
    Ok(RefinedBound { total, per_line })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn g(p: u64, k: usize) -> GroupSpec {
        GroupSpec::new(p, k).unwrap()
    }

    fn line(v: &[i64]) -> SubtorusLine {
        SubtorusLine::from_raw(v.to_vec())
    }

    fn data(p: u64, k: usize, n: i64, r: i64, table: &[(&[i64], i64)]) -> CohomSphereData {
        let fixed = table
            .iter()
            .map(|(l, d)| (line(l), *d))
            .collect::<BTreeMap<_, _>>();
        CohomSphereData::new(g(p, k), n, r, fixed)
    }

    fn rep(p: u64, k: usize, weights: &[&[i64]]) -> RepSphere {
        RepSphere::new(
            g(p, k),
            weights.iter().map(|w| Weight::new(w.to_vec())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn borsuk_ulam_obstruction() {
        let x = data(0, 1, 3, -1, &[(&[1], 3)]);
        let y = data(0, 1, 1, -1, &[(&[1], 1)]);
        let v = borsuk_ulam_check(&x, &y).unwrap();
        assert_eq!(v.exists, Existence::No);
        assert_eq!(v.witnesses, vec![line(&[1])]);
    }

    #[test]
    fn borsuk_ulam_identity_is_unknown() {
        let x = data(0, 1, 3, -1, &[(&[1], 3)]);
        let v = borsuk_ulam_check(&x, &x).unwrap();
        assert_eq!(v.exists, Existence::Unknown);
        assert!(v.witnesses.is_empty());
    }

    #[test]
    fn borsuk_ulam_passes_upward() {
        let x = data(3, 2, 3, -1, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let y = data(3, 2, 5, -1, &[(&[1, 0], 3), (&[0, 1], 1)]);
        let v = borsuk_ulam_check(&x, &y).unwrap();
        assert_eq!(v.exists, Existence::Unknown);
    }

    #[test]
    fn borsuk_ulam_flags_total_dimension_drop() {
        let x = data(0, 1, 3, -1, &[(&[1], 3)]);
        let y = data(0, 1, 1, -1, &[(&[1], 1)]);
        let v = borsuk_ulam_check(&x, &y).unwrap();
        assert!(v.rationale.contains("n > m"));
        let same = borsuk_ulam_check(&x, &x).unwrap();
        assert!(!same.rationale.contains("n > m"));
    }

    #[test]
    fn borsuk_ulam_group_mismatch() {
        let x = data(2, 1, 0, -1, &[(&[1], 0)]);
        let y = data(3, 1, 1, -1, &[(&[1], 1)]);
        assert!(matches!(
            borsuk_ulam_check(&x, &y),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn map_exists_positive() {
        let x = data(3, 2, 3, -1, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let v = rep(3, 2, &[&[1, 0], &[0, 1]]);
        let verdict = map_exists_to_rep_sphere(&x, &v).unwrap();
        assert_eq!(verdict.exists, Existence::Yes);
        assert!(verdict.witnesses.is_empty());
    }

    #[test]
    fn map_exists_negative_with_witness() {
        let x = data(3, 2, 3, -1, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let v = rep(3, 2, &[&[1, 0], &[1, 0]]);
        let verdict = map_exists_to_rep_sphere(&x, &v).unwrap();
        assert_eq!(verdict.exists, Existence::No);
        assert_eq!(verdict.witnesses, vec![line(&[0, 1])]);
    }

    #[test]
    fn map_exists_identity_target() {
        let v = rep(3, 2, &[&[1, 0], &[0, 1], &[1, 1]]);
        let x = v.to_cohom_data();
        let verdict = map_exists_to_rep_sphere(&x, &v).unwrap();
        assert_eq!(verdict.exists, Existence::Yes);
    }

    #[test]
    fn map_exists_unsupported_for_torus() {
        let x = data(0, 1, 1, -1, &[(&[1], 1)]);
        let v = rep(0, 1, &[&[1]]);
        assert!(matches!(
            map_exists_to_rep_sphere(&x, &v),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn canonical_target_examples() {
        let x = data(3, 2, 3, -1, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let v = canonical_target(&x).unwrap();
        let mut ws: Vec<&[i64]> = v.weights().iter().map(|w| w.components()).collect();
        ws.sort();
        assert_eq!(ws, vec![&[0, 1][..], &[1, 0][..]]);

        let x = data(2, 2, 2, -1, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 0)]);
        let v = canonical_target(&x).unwrap();
        assert_eq!(v.weights().len(), 3);
        assert_eq!(v.dim(), 2);

        let x = data(3, 1, 3, -1, &[(&[1], 3)]);
        let v = canonical_target(&x).unwrap();
        assert_eq!(v.weights().len(), 2);
        assert!(v.weights().iter().all(|w| w.components() == [1]));
    }

    #[test]
    fn canonical_target_round_trip() {
        let x = data(3, 2, 3, -1, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let v = canonical_target(&x).unwrap();
        assert_eq!(v.dim(), x.n);
        let verdict = map_exists_to_rep_sphere(&x, &v).unwrap();
        assert_eq!(verdict.exists, Existence::Yes);
    }

    #[test]
    fn bourgin_yang_values() {
        let b = bourgin_yang_bound(&BourginYangQuery {
            p: 2,
            n: 5,
            m: 2,
            alpha: 1,
        })
        .unwrap();
        assert_eq!(b.exact, Rational64::from_integer(2));
        assert_eq!(b.ceil, 2);
        assert!(b.nonempty);

        let b = bourgin_yang_bound(&BourginYangQuery {
            p: 0,
            n: 5,
            m: 1,
            alpha: 1,
        })
        .unwrap();
        assert_eq!(b.exact, Rational64::from_integer(1));
        assert_eq!(b.exact_string(), "1/1");
        assert!(b.nonempty);

        let b = bourgin_yang_bound(&BourginYangQuery {
            p: 3,
            n: 3,
            m: 3,
            alpha: 2,
        })
        .unwrap();
        assert_eq!(b.exact, Rational64::from_integer(-1));
        assert!(!b.nonempty);
    }

    #[test]
    fn bourgin_yang_ceiling() {
        let b = bourgin_yang_bound(&BourginYangQuery {
            p: 3,
            n: 6,
            m: 1,
            alpha: 1,
        })
        .unwrap();
        assert_eq!(b.exact, Rational64::new(3, 2));
        assert_eq!(b.ceil, 2);
        assert_eq!(b.exact_string(), "3/2");
    }

    #[test]
    fn bourgin_yang_rejects_bad_alpha() {
        assert!(matches!(
            bourgin_yang_bound(&BourginYangQuery {
                p: 2,
                n: 5,
                m: 2,
                alpha: 0
            }),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn manifold_bound() {
        assert_eq!(bourgin_yang_manifold(5, 2), 2);
        assert_eq!(bourgin_yang_manifold(3, 3), -1);
    }

    #[test]
    fn refined_bound_examples() {
        let x = data(0, 2, 5, -1, &[(&[1, 0], 3), (&[0, 1], 1)]);
        let y = data(0, 2, 3, -1, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = refined_bourgin_yang(&x, &y).unwrap();
        assert_eq!(b.total, 1);
        assert_eq!(b.per_line, vec![(line(&[0, 1]), 0), (line(&[1, 0]), 1)]);

        let b = refined_bourgin_yang(&x, &x).unwrap();
        assert_eq!(b.total, 0);

        let x = data(2, 2, 2, -1, &[(&[1, 0], 2)]);
        let y = data(2, 2, -1, -1, &[]);
        let b = refined_bourgin_yang(&x, &y).unwrap();
        assert_eq!(b.total, 3);
    }
}
