//! Length values and bounds for cohomology spheres.
//!
//! The central quantity is the cohomological length of the pair (X, X^G):
//! the least number of corank-1 orbit classes whose kernel-ideal generators
//! multiply into the annihilator of H*_G(X, X^G). For cohomology spheres the
//! annihilator is the principal ideal generated by the Euler class, which
//! splits as a product of powers of the linear forms s_H over the subtori
//! with nonempty fixed sets:
//!
//!   e = s_{H_1}^{k_1} * ... * s_{H_t}^{k_t},
//!   k_i = n(H_i) - r for p = 2, (n(H_i) - r)/2 otherwise.
//!
//! That factorization makes the length exactly n - r (p = 2) or (n - r)/2
//! (p = 0, or odd p with polynomial Euler class). For odd p with a
//! non-polynomial Euler class only the bracket [ceil((n-r)/2), n-r] is
//! certified: the square of the polynomial part annihilates, and the degree
//! of e forces the lower bound. The remaining operations package the general
//! upper bound alpha * (dim + 1), the lower bound by the sum of per-subtorus
//! lengths, and the A-genus value n + 1 for p-torus ANR spheres.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{linear_product, Field, LinearForm, Polynomial};
use crate::error::Error;
use crate::group::{s_h, SubtorusLine};
use crate::spheres::{CohomSphereData, RepSphere};

/// Which rule produced a [`LengthResult`]. The `Display` form is the
/// provenance tag used in reports.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LengthBasis {
    /// p = 2: length = n - r.
    CohomSphereP2,
    /// p = 0: length = (n - r)/2.
    CohomSphereTorus,
    /// Odd p with polynomial Euler class: length = (n - r)/2.
    CohomSphereOddPolynomial,
    /// Odd p, Euler class not asserted polynomial: certified interval.
    CohomSphereOddInterval,
    /// Representation sphere: length = number of weights.
    RepSphereCount,
    /// Per-subtorus length of (X^H, X^G).
    SubtorusRestriction,
}

impl fmt::Display for LengthBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            LengthBasis::CohomSphereP2 => "Thm3.1/p=2",
            LengthBasis::CohomSphereTorus => "Thm3.1/p=0",
            LengthBasis::CohomSphereOddPolynomial => "Thm3.1/p>2-polynomial",
            LengthBasis::CohomSphereOddInterval => "Thm3.1/p>2-interval",
            LengthBasis::RepSphereCount => "BartschClapp",
            LengthBasis::SubtorusRestriction => "Rem3.2",
        };
        write!(f, "{tag}")
    }
}

/// An exact length value or a certified interval [lo, hi].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LengthResult {
    exact: bool,
    lo: u64,
    hi: u64,
    basis: LengthBasis,
}

impl LengthResult {
    pub fn exact(value: u64, basis: LengthBasis) -> Self {
        LengthResult {
            exact: true,
            lo: value,
            hi: value,
            basis,
        }
    }

    pub fn interval(lo: u64, hi: u64, basis: LengthBasis) -> Self {
        assert!(lo <= hi, "interval bounds out of order");
        LengthResult {
            exact: false,
            lo,
            hi,
            basis,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    pub fn basis(&self) -> LengthBasis {
        self.basis
    }

    /// `"exact"` or `"interval"`; the serialized `kind` field.
    pub fn kind(&self) -> &'static str {
        if self.exact {
            "exact"
        } else {
            "interval"
        }
    }
}

impl fmt::Display for LengthResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact {
            write!(f, "{} ({})", self.lo, self.basis)
        } else {
            write!(f, "[{}, {}] ({})", self.lo, self.hi, self.basis)
        }
    }
}

/// The Euler class of a cohomology sphere pair, both as a factored multiset
/// of lines and as the expanded polynomial.
///
/// `cohomological_degree` is n - r: the grading of H*(BG) places the
/// generators t_i in degree 1 for p = 2 and degree 2 otherwise, so it equals
/// the polynomial degree for p = 2 and twice that otherwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EulerClassDescriptor<F: Field> {
    pub factors: BTreeMap<SubtorusLine, u32>,
    pub polynomial: Polynomial<F>,
    pub cohomological_degree: i64,
}

impl<F: Field> EulerClassDescriptor<F> {
    /// Sum of the factor multiplicities (the polynomial degree of e).
    pub fn factor_count(&self) -> u64 {
        self.factors.values().map(|&m| m as u64).sum()
    }
}

/// Euler class of a valid cohomology sphere pair: per table line H the factor
/// s_H with multiplicity n(H) - r (p = 2) or (n(H) - r)/2 (otherwise). Lines
/// with n(H) = r contribute nothing.
pub fn euler_class<F: Field>(d: &CohomSphereData) -> Result<EulerClassDescriptor<F>, Error> {
    d.ensure_valid()?;
    let field = F::for_characteristic(d.group.p())?;
    let p = d.group.p();
    let mut factors = BTreeMap::new();
    let mut forms: Vec<(LinearForm<F>, u32)> = Vec::new();
    for (line, &dim) in &d.fixed {
        let diff = dim - d.r;
        if diff == 0 {
            continue;
        }
        let mult = if p == 2 { diff } else { diff / 2 };
        let mult = u32::try_from(mult).map_err(|_| {
            Error::Overflow(format!(
                "multiplicity {mult} does not fit a machine exponent"
            ))
        })?;
        factors.insert(line.clone(), mult);
        forms.push((s_h::<F>(&d.group, line)?, mult));
    }
    let polynomial = linear_product(&field, d.group.rank(), &forms)?;
    Ok(EulerClassDescriptor {
        factors,
        polynomial,
        cohomological_degree: d.n - d.r,
    })
}

/// Length of the pair (X, X^G) for a valid cohomology sphere.
///
/// `euler_is_polynomial` is a caller assertion consulted only for odd p; it
/// holds automatically for p = 0 and p = 2 and for G-ANR spaces, but is not
/// decidable from the dimension data alone. When it is withheld the result
/// is the certified interval [ceil((n-r)/2), n-r].
pub fn length_of_pair(
    d: &CohomSphereData,
    euler_is_polynomial: bool,
) -> Result<LengthResult, Error> {
    d.ensure_valid()?;
    let p = d.group.p();
    let gap = (d.n - d.r) as u64;
    if p == 2 {
        return Ok(LengthResult::exact(gap, LengthBasis::CohomSphereP2));
    }
    if p == 0 {
        return Ok(LengthResult::exact(gap / 2, LengthBasis::CohomSphereTorus));
    }
    if euler_is_polynomial {
        Ok(LengthResult::exact(
            gap / 2,
            LengthBasis::CohomSphereOddPolynomial,
        ))
    } else {
        // gap is even for valid data; the ceiling covers callers that skip
        // the parity constraint in the non-polynomial case.
        Ok(LengthResult::interval(
            gap.div_ceil(2),
            gap,
            LengthBasis::CohomSphereOddInterval,
        ))
    }
}

/// Length of a representation sphere: the number of weights, counted with
/// multiplicity.
pub fn length_rep_sphere(s: &RepSphere) -> LengthResult {
    LengthResult::exact(s.weights().len() as u64, LengthBasis::RepSphereCount)
}

/// The per-subtorus length of (X^H, X^G): n(H) - r for p = 2 and
/// (n(H) - r)/2 otherwise, with value 0 for lines absent from the table.
/// `line` is expected in canonical form.
pub fn length_h(d: &CohomSphereData, line: &SubtorusLine) -> Result<LengthResult, Error> {
    d.ensure_valid()?;
    let diff = (d.fixed_dim(line) - d.r) as u64;
    let value = if d.group.p() == 2 { diff } else { diff / 2 };
    Ok(LengthResult::exact(value, LengthBasis::SubtorusRestriction))
}

/// General upper bound for the length of a fixed-point-free compact G-space:
/// `alpha * (dim + 1)`, where `alpha` is the number of maximal isotropy
/// orbit types.
pub fn upper_bound_length(alpha: u64, dim: i64) -> Result<u64, Error> {
    if alpha == 0 {
        return Err(Error::Domain("orbit-type count alpha must be >= 1".into()));
    }
    if dim < 0 {
        return Err(Error::Domain(format!(
            "covering dimension must be >= 0, got {dim}"
        )));
    }
    alpha
        .checked_mul(dim as u64 + 1)
        .ok_or_else(|| Error::Overflow("alpha * (dim + 1)".into()))
}

/// Lower bound for the length of X with X^G empty: the sum of the
/// per-subtorus lengths over the table lines. For cohomology spheres with
/// polynomial Euler class this is an equality.
pub fn lower_bound_length(d: &CohomSphereData) -> Result<u64, Error> {
    d.ensure_valid()?;
    if d.r >= 0 {
        return Err(Error::Hypothesis(
            "lower bound requires X^G empty (r = -1)".into(),
        ));
    }
    let lines: Vec<SubtorusLine> = d.fixed.keys().cloned().collect();
    let mut total = 0u64;
    for line in &lines {
        total += length_h(d, line)?.lo();
    }
    Ok(total)
}

/// A-category and A-genus of a fixed-point-free p-torus ANR cohomology
/// n-sphere: both equal n + 1. The ANR hypothesis is the caller's assertion.
pub fn a_genus_of_sphere(d: &CohomSphereData) -> Result<u64, Error> {
    d.ensure_valid()?;
    if d.group.is_torus() {
        return Err(Error::Unsupported(
            "the A-genus value n + 1 is established for p-torus groups only".into(),
        ));
    }
    if d.r >= 0 {
        return Err(Error::Hypothesis(
            "the A-genus value n + 1 requires X^G empty (r = -1)".into(),
        ));
    }
    Ok((d.n + 1) as u64)
}
