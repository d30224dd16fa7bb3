//! Brute-force verification of length values for representation spheres.
//!
//! The length of S(V) is the least lambda such that some orbit classes
//! A_1, ..., A_lambda make EVERY choice of omega_i in the corresponding
//! kernel ideals multiply into the annihilator. Two facts collapse that
//! double quantifier into a finite search:
//!
//! 1. each kernel ideal here is principal, generated by a linear form s_H,
//!    so every omega_i is s_H * (something) and a product of generators
//!    divides every admissible product - testing the generators' product
//!    alone is enough;
//! 2. the annihilator itself is principal, generated by the Euler
//!    polynomial e = product of the weight forms, so membership is exact
//!    divisibility by e.
//!
//! The search therefore enumerates multisets of candidate lines in
//! increasing size (nondecreasing index order within a size) and returns
//! the first multiset whose product of s_H forms is divisible by e. That
//! ordering makes the reported lambda minimal and the witness canonical
//! (lexicographically least), independent of any execution schedule.
//!
//! The Euler polynomial is built directly from the raw weights, not from
//! the factored descriptor in [`crate::length`], so the two paths stay
//! independent. Unique factorization over a field also forces any divisible
//! product to contain each line of e at least as often as e does, which is
//! why the witness found equals the factorization profile.
//!
//! Candidate lines: all lines of F_p^k for prime p; for the torus the lines
//! of the input weights (the Euler polynomial factors over exactly those).

use crate::algebra::{Field, Polynomial};
use crate::error::Error;
use crate::group::{enumerate_lines, line_of_weight, s_h, SubtorusLine};
use crate::length::{length_of_pair, length_rep_sphere};
use crate::spheres::RepSphere;

/// Outcome of a brute-force length search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OracleReport {
    /// Minimal multiset size found.
    pub lambda: u64,
    /// The canonical witness multiset, in nondecreasing line order.
    pub witness: Vec<SubtorusLine>,
    /// The closed-form value the search is compared against.
    pub formula_value: u64,
    /// Whether `lambda` equals every closed-form value consulted.
    pub agrees: bool,
    /// The lambda_max the search ran with.
    pub search_bound: u64,
}

/// Maximum number of candidate multisets a single search may enumerate.
pub const SEARCH_BUDGET: u128 = 10_000_000;

/// Membership of `candidate` in the principal ideal generated by `e`,
/// decided by exact division.
pub fn ideal_member<F: Field>(e: &Polynomial<F>, candidate: &Polynomial<F>) -> Result<bool, Error> {
    if e.is_zero() {
        return Err(Error::Domain(
            "the zero polynomial generates the zero ideal; membership test needs e != 0".into(),
        ));
    }
    e.divides(candidate)
}

/// The Euler polynomial of a representation sphere: the product of the
/// weight forms themselves, one factor per weight with multiplicity.
pub fn euler_polynomial<F: Field>(s: &RepSphere) -> Result<Polynomial<F>, Error> {
    let g = s.group();
    let field = F::for_characteristic(g.p())?;
    let mut out = Polynomial::one(field.clone(), g.rank());
    for w in s.weights() {
        let coeffs = w.components().iter().map(|&c| field.from_int(c)).collect();
        let form = crate::algebra::LinearForm::new(field.clone(), coeffs)?;
        out = out.mul(&form.to_polynomial())?;
    }
    Ok(out)
}

/// Default search bound: one more than the weight count, so an off-by-one
/// bug in the formula value would surface as disagreement instead of a
/// search failure.
pub fn default_search_bound(s: &RepSphere) -> u64 {
    s.weights().len() as u64 + 1
}

/// Number of multisets of size `size` over `lines` candidates, saturating.
fn multisets_of_size(lines: u128, size: u64) -> u128 {
    // C(lines + size - 1, size), computed incrementally; every prefix is an
    // exact binomial so the division is exact.
    let mut acc: u128 = 1;
    for i in 1..=size as u128 {
        acc = acc.saturating_mul(lines - 1 + i) / i;
    }
    acc
}

fn check_budget(lines: usize, lambda_max: u64) -> Result<(), Error> {
    if lines == 0 {
        return Ok(());
    }
    let mut total: u128 = 0;
    for size in 0..=lambda_max {
        total = total.saturating_add(multisets_of_size(lines as u128, size));
        if total > SEARCH_BUDGET {
            return Err(Error::Budget {
                candidates: total,
                limit: SEARCH_BUDGET,
            });
        }
    }
    Ok(())
}

/// Depth-first enumeration of nondecreasing index multisets of a fixed size,
/// carrying the partial product. Returns the first witness in lexicographic
/// order, or `None`.
fn find_witness<F: Field>(
    e: &Polynomial<F>,
    forms: &[Polynomial<F>],
    remaining: u64,
    start: usize,
    prefix: &Polynomial<F>,
    chosen: &mut Vec<usize>,
) -> Result<Option<Vec<usize>>, Error> {
    if remaining == 0 {
        return Ok(if ideal_member(e, prefix)? {
            Some(chosen.clone())
        } else {
            None
        });
    }
    for i in start..forms.len() {
        chosen.push(i);
        let product = prefix.mul(&forms[i])?;
        if let Some(witness) = find_witness(e, forms, remaining - 1, i, &product, chosen)? {
            return Ok(Some(witness));
        }
        chosen.pop();
    }
    Ok(None)
}

/// Exhaustive minimal-lambda search for a representation sphere.
///
/// Fails with [`Error::Budget`] before enumerating more than
/// [`SEARCH_BUDGET`] candidate multisets, and with
/// [`Error::SearchExhausted`] when no multiset of size <= `lambda_max`
/// works (a bounded-search failure, not a mathematical conclusion).
pub fn brute_force_length<F: Field>(s: &RepSphere, lambda_max: u64) -> Result<OracleReport, Error> {
    if lambda_max == 0 {
        return Err(Error::Domain("lambda_max must be >= 1".into()));
    }
    let g = s.group();
    let field = F::for_characteristic(g.p())?;

    let candidates: Vec<SubtorusLine> = if g.is_torus() {
        let mut lines: Vec<SubtorusLine> = s
            .weights()
            .iter()
            .map(|w| line_of_weight(g, w))
            .collect::<Result<_, _>>()?;
        lines.sort();
        lines.dedup();
        lines
    } else {
        enumerate_lines(g)?
    };
    check_budget(candidates.len(), lambda_max)?;

    let forms: Vec<Polynomial<F>> = candidates
        .iter()
        .map(|line| s_h::<F>(g, line).map(|f| f.to_polynomial()))
        .collect::<Result<_, _>>()?;
    let e = euler_polynomial::<F>(s)?;

    let one = Polynomial::one(field, g.rank());
    for size in 0..=lambda_max {
        let mut chosen = Vec::with_capacity(size as usize);
        if let Some(indices) = find_witness(&e, &forms, size, 0, &one, &mut chosen)? {
            let witness = indices.iter().map(|&i| candidates[i].clone()).collect();
            let formula_value = length_rep_sphere(s).lo();
            return Ok(OracleReport {
                lambda: size,
                witness,
                formula_value,
                agrees: size == formula_value,
                search_bound: lambda_max,
            });
        }
    }
    Err(Error::SearchExhausted { bound: lambda_max })
}

/// Runs the brute-force search and compares it against both closed forms:
/// the representation-sphere count and the cohomology-sphere formula applied
/// to the derived fixed-set data. `agrees` only when all three coincide.
pub fn cross_check<F: Field>(s: &RepSphere, lambda_max: u64) -> Result<OracleReport, Error> {
    let report = brute_force_length::<F>(s, lambda_max)?;
    let rep_value = length_rep_sphere(s).lo();
    let pair_value = length_of_pair(&s.to_cohom_data(), true)?.lo();
    Ok(OracleReport {
        agrees: report.lambda == rep_value && rep_value == pair_value,
        formula_value: rep_value,
        ..report
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PrimeField, Rationals};
    use crate::group::{GroupSpec, Weight};

    fn rep(p: u64, k: usize, weights: &[&[i64]]) -> RepSphere {
        RepSphere::new(
            GroupSpec::new(p, k).unwrap(),
            weights.iter().map(|w| Weight::new(w.to_vec())).collect(),
        )
        .unwrap()
    }

    fn line(v: &[i64]) -> SubtorusLine {
        SubtorusLine::from_raw(v.to_vec())
    }

    #[test]
    fn ideal_membership() {
        let f3 = PrimeField::new(3).unwrap();
        let t = Polynomial::variable(f3, 1, 0);
        let e = t.pow(2).unwrap();
        assert!(ideal_member(&e, &t.pow(3).unwrap()).unwrap());
        assert!(!ideal_member(&e, &t).unwrap());

        let q = Rationals;
        let t1 = Polynomial::variable(q, 2, 0);
        let t2 = Polynomial::variable(q, 2, 1);
        let e = t1.pow(2).unwrap().mul(&t2).unwrap();
        let cand = t1.mul(&t2.pow(2).unwrap()).unwrap();
        assert!(!ideal_member(&e, &cand).unwrap());
    }

    #[test]
    fn ideal_membership_f2_product() {
        let f2 = PrimeField::new(2).unwrap();
        let t1 = Polynomial::variable(f2, 2, 0);
        let t2 = Polynomial::variable(f2, 2, 1);
        let s = t1.add(&t2).unwrap();
        let e = t1.mul(&t2).unwrap().mul(&s).unwrap();
        let candidate = e.mul(&t1).unwrap();
        assert!(ideal_member(&e, &candidate).unwrap());
    }

    #[test]
    fn ideal_member_rejects_zero_generator() {
        let f2 = PrimeField::new(2).unwrap();
        let z = Polynomial::zero(f2, 1);
        let t = Polynomial::variable(f2, 1, 0);
        assert!(matches!(ideal_member(&z, &t), Err(Error::Domain(_))));
    }

    #[test]
    fn brute_force_f3_rank1() {
        let s = rep(3, 1, &[&[1], &[2]]);
        let report = brute_force_length::<PrimeField>(&s, 3).unwrap();
        assert_eq!(report.lambda, 2);
        assert_eq!(report.witness, vec![line(&[1]), line(&[1])]);
        assert!(report.agrees);
    }

    #[test]
    fn brute_force_f2_three_lines() {
        let s = rep(2, 2, &[&[1, 0], &[0, 1], &[1, 1]]);
        let report = brute_force_length::<PrimeField>(&s, 4).unwrap();
        assert_eq!(report.lambda, 3);
        assert_eq!(
            report.witness,
            vec![line(&[0, 1]), line(&[1, 0]), line(&[1, 1])]
        );
    }

    #[test]
    fn brute_force_trivial_sphere() {
        let s = rep(2, 1, &[&[1]]);
        let report = brute_force_length::<PrimeField>(&s, 2).unwrap();
        assert_eq!(report.lambda, 1);
        assert_eq!(report.witness, vec![line(&[1])]);
    }

    #[test]
    fn brute_force_torus_with_multiplicity() {
        // e = 2*t1^2; only candidate line is (1,0); need two factors
        let s = rep(0, 2, &[&[1, 0], &[2, 0]]);
        let report = brute_force_length::<Rationals>(&s, 3).unwrap();
        assert_eq!(report.lambda, 2);
        assert_eq!(report.witness, vec![line(&[1, 0]), line(&[1, 0])]);
    }

    #[test]
    fn cross_check_agreement() {
        let s = rep(3, 2, &[&[1, 0], &[0, 1], &[1, 1], &[1, 2]]);
        let report = cross_check::<PrimeField>(&s, 5).unwrap();
        assert_eq!(report.lambda, 4);
        assert_eq!(report.formula_value, 4);
        assert!(report.agrees);
    }

    #[test]
    fn search_exhaustion_is_reported() {
        let s = rep(2, 2, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert!(matches!(
            brute_force_length::<PrimeField>(&s, 2),
            Err(Error::SearchExhausted { bound: 2 })
        ));
    }

    #[test]
    fn budget_refusal() {
        let s = rep(5, 2, &[&[1, 0]]);
        assert!(matches!(
            brute_force_length::<PrimeField>(&s, 80),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn witness_is_minimal() {
        let s = rep(3, 2, &[&[1, 0], &[0, 1]]);
        let report = brute_force_length::<PrimeField>(&s, 3).unwrap();
        let e = euler_polynomial::<PrimeField>(&s).unwrap();
        // dropping any single element breaks membership
        for skip in 0..report.witness.len() {
            let field = PrimeField::new(3).unwrap();
            let mut product = Polynomial::one(field, 2);
            for (i, l) in report.witness.iter().enumerate() {
                if i == skip {
                    continue;
                }
                let form = s_h::<PrimeField>(s.group(), l).unwrap();
                product = product.mul(&form.to_polynomial()).unwrap();
            }
            assert!(!ideal_member(&e, &product).unwrap());
        }
    }

    #[test]
    fn determinism() {
        let s = rep(5, 2, &[&[1, 2], &[1, 2], &[0, 1]]);
        let a = brute_force_length::<PrimeField>(&s, 4).unwrap();
        let b = brute_force_length::<PrimeField>(&s, 4).unwrap();
        assert_eq!(a, b);
    }
}
