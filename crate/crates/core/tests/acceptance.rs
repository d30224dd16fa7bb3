//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `--nocapture` to see them on success).
//!
//! The instance universe for criteria 1-6 is every representation sphere
//! with p in {2, 3, 5}, rank k in {1, 2}, and 1 to 4 weights, where weights
//! are taken up to projective class (one representative per line) and
//! multisets up to permutation. All checks are exact; no tolerances.

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cohomlen_core::algebra::{factor_into_lines, PrimeField};
use cohomlen_core::group::{enumerate_lines, s_h, GroupSpec, SubtorusLine, Weight};
use cohomlen_core::length::{euler_class, length_of_pair, lower_bound_length, upper_bound_length};
use cohomlen_core::oracle::cross_check;
use cohomlen_core::spheres::{CohomSphereData, RepSphere};
use cohomlen_core::theorems::{
    borsuk_ulam_check, bourgin_yang_bound, bourgin_yang_manifold, canonical_target,
    map_exists_to_rep_sphere, BourginYangQuery, Existence,
};

const PRIMES: [u64; 3] = [2, 3, 5];
const RANKS: [usize; 2] = [1, 2];
const MAX_WEIGHTS: usize = 4;

/// All nondecreasing index multisets of sizes 1..=max over n candidates.
fn index_multisets(n: usize, max: usize) -> Vec<Vec<usize>> {
    fn extend(
        n: usize,
        size: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            extend(n, size, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for size in 1..=max {
        extend(n, size, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// The exhaustive instance universe, grouped by (p, k).
fn instance_universe() -> Vec<(GroupSpec, Vec<RepSphere>)> {
    let mut universe = Vec::new();
    for p in PRIMES {
        for k in RANKS {
            let g = GroupSpec::new(p, k).unwrap();
            let lines = enumerate_lines(&g).unwrap();
            let spheres = index_multisets(lines.len(), MAX_WEIGHTS)
                .into_iter()
                .map(|indices| {
                    let weights = indices
                        .iter()
                        .map(|&i| Weight::new(lines[i].direction().to_vec()))
                        .collect();
                    RepSphere::new(g, weights).unwrap()
                })
                .collect();
            universe.push((g, spheres));
        }
    }
    universe
}

fn report(criterion: &str, failures: &[String], detail: String) {
    if failures.is_empty() {
        println!("acceptance {criterion}: PASS ({detail})");
    } else {
        println!(
            "acceptance {criterion}: FAIL ({} failure(s))",
            failures.len()
        );
        for f in failures.iter().take(10) {
            println!("  - {f}");
        }
    }
    assert!(
        failures.is_empty(),
        "{criterion} failed: {:?}",
        &failures[..failures.len().min(3)]
    );
}

#[test]
fn criterion_1_oracle_equals_formula() {
    let mut failures = Vec::new();
    let mut count = 0usize;
    for (_, spheres) in instance_universe() {
        for s in spheres {
            count += 1;
            let lambda_max = s.weights().len() as u64;
            match cross_check::<PrimeField>(&s, lambda_max) {
                Ok(r) => {
                    if !r.agrees || r.lambda != lambda_max {
                        failures.push(format!(
                            "{:?}: lambda {} vs formula {}, agrees {}",
                            s.weights(),
                            r.lambda,
                            r.formula_value,
                            r.agrees
                        ));
                    }
                }
                Err(e) => failures.push(format!("{:?}: {e}", s.weights())),
            }
        }
    }
    report(
        "criterion 1 (oracle = formula)",
        &failures,
        format!("{count} representation spheres, exact"),
    );
}

#[test]
fn criterion_2_borel_validation() {
    let mut failures = Vec::new();
    let mut valid_instances: Vec<CohomSphereData> = Vec::new();
    for (_, spheres) in instance_universe() {
        for s in spheres {
            let d = s.to_cohom_data();
            if !d.validate().is_empty() {
                failures.push(format!("valid instance rejected: {d:?}"));
            }
            valid_instances.push(d);
        }
    }

    // 100 single-field mutations, each of which must be rejected
    let mut rng = StdRng::seed_from_u64(0x0b0e_11ed);
    for trial in 0..100 {
        let d = &valid_instances[rng.gen_range(0..valid_instances.len())];
        let mut mutant = d.clone();
        let lines: Vec<SubtorusLine> = d.fixed.keys().cloned().collect();
        match rng.gen_range(0..5) {
            0 => mutant.n += 1,
            1 => mutant.n -= 1,
            2 => {
                let line = &lines[rng.gen_range(0..lines.len())];
                *mutant.fixed.get_mut(line).unwrap() += 1;
            }
            3 => {
                let line = &lines[rng.gen_range(0..lines.len())];
                *mutant.fixed.get_mut(line).unwrap() -= 1;
            }
            _ => {
                let line = lines[rng.gen_range(0..lines.len())].clone();
                mutant.fixed.remove(&line);
            }
        }
        if mutant.validate().is_empty() {
            failures.push(format!("mutation {trial} accepted: {mutant:?}"));
        }
    }
    report(
        "criterion 2 (Borel formula validation)",
        &failures,
        format!("{} instances + 100 mutations", valid_instances.len()),
    );
}

#[test]
fn criterion_3_euler_factorization_round_trip() {
    let mut failures = Vec::new();
    let mut count = 0usize;
    for (g, spheres) in instance_universe() {
        let lines = enumerate_lines(&g).unwrap();
        let candidates: Vec<_> = lines
            .iter()
            .map(|l| s_h::<PrimeField>(&g, l).unwrap())
            .collect();
        for s in spheres {
            count += 1;
            let d = s.to_cohom_data();
            let e = euler_class::<PrimeField>(&d).unwrap();
            let fac = match factor_into_lines(&e.polynomial, &candidates) {
                Ok(Some(fac)) => fac,
                other => {
                    failures.push(format!(
                        "{:?}: factorization failed: {other:?}",
                        s.weights()
                    ));
                    continue;
                }
            };
            let recovered: BTreeMap<SubtorusLine, u32> = lines
                .iter()
                .zip(&fac.multiplicities)
                .filter(|(_, &m)| m > 0)
                .map(|(l, &m)| (l.clone(), m))
                .collect();
            if recovered != e.factors {
                failures.push(format!(
                    "{:?}: recovered {recovered:?} != factors {:?}",
                    s.weights(),
                    e.factors
                ));
            }
        }
    }
    report(
        "criterion 3 (Euler factorization round trip)",
        &failures,
        format!("{count} instances, exact multiset equality"),
    );
}

#[test]
fn criterion_4_borsuk_ulam_necessity() {
    let mut failures = Vec::new();
    let mut pairs = 0usize;
    for (_, spheres) in instance_universe() {
        let datas: Vec<CohomSphereData> = spheres.iter().map(RepSphere::to_cohom_data).collect();
        for x in &datas {
            for y in &datas {
                if x.n <= y.n {
                    continue;
                }
                pairs += 1;
                match borsuk_ulam_check(x, y) {
                    Ok(v) => {
                        if v.exists != Existence::No || v.witnesses.is_empty() {
                            failures.push(format!(
                                "n {} > m {} but verdict {:?} with {} witnesses",
                                x.n,
                                y.n,
                                v.exists,
                                v.witnesses.len()
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("check failed: {e}")),
                }
            }
        }
    }
    report(
        "criterion 4 (Borsuk-Ulam necessity)",
        &failures,
        format!("{pairs} ordered pairs with n > m, exhaustive"),
    );
}

/// Independent per-line comparison for criterion 5, built from scratch:
/// proportionality over F_p by cross-multiplication, dimensions by weight
/// counting.
fn direct_verdict(p: u64, x: &CohomSphereData, v: &RepSphere) -> bool {
    let proportional = |a: &[i64], b: &[i64]| -> bool {
        // nonzero vectors are proportional iff all 2x2 minors vanish mod p
        for i in 0..a.len() {
            for j in 0..a.len() {
                if (a[i] * b[j] - a[j] * b[i]).rem_euclid(p as i64) != 0 {
                    return false;
                }
            }
        }
        true
    };
    for (line, &dim) in &x.fixed {
        if dim < 0 {
            continue;
        }
        let c = v
            .weights()
            .iter()
            .filter(|w| proportional(w.components(), line.direction()))
            .count() as i64;
        let target_dim = if p == 2 { c - 1 } else { 2 * c - 1 };
        if target_dim < dim {
            return false;
        }
    }
    true
}

#[test]
fn criterion_5_converse_borsuk_ulam() {
    let mut failures = Vec::new();
    let mut constructions = 0usize;
    let mut comparisons = 0usize;
    for (g, spheres) in instance_universe() {
        let datas: Vec<CohomSphereData> = spheres.iter().map(RepSphere::to_cohom_data).collect();
        for (s, x) in spheres.iter().zip(&datas) {
            constructions += 1;
            let target = match canonical_target(x) {
                Ok(t) => t,
                Err(e) => {
                    failures.push(format!("{:?}: canonical target failed: {e}", s.weights()));
                    continue;
                }
            };
            if target.dim() != x.n {
                failures.push(format!(
                    "{:?}: canonical target dim {} != {}",
                    s.weights(),
                    target.dim(),
                    x.n
                ));
            }
            match map_exists_to_rep_sphere(x, &target) {
                Ok(v) if v.exists == Existence::Yes => {}
                other => failures.push(format!(
                    "{:?}: map to canonical target not certified: {other:?}",
                    s.weights()
                )),
            }
        }
        // every instance doubles as a candidate target
        for x in &datas {
            for v in &spheres {
                comparisons += 1;
                let verdict = map_exists_to_rep_sphere(x, v).unwrap();
                let expected = direct_verdict(g.p(), x, v);
                let got = verdict.exists == Existence::Yes;
                if got != expected {
                    failures.push(format!(
                        "verdict {got} != direct comparison {expected} for X {x:?}, V {:?}",
                        v.weights()
                    ));
                }
                if (verdict.exists == Existence::No) == verdict.witnesses.is_empty() {
                    failures.push(format!("witness shape broken for X {x:?}"));
                }
            }
        }
    }
    report(
        "criterion 5 (converse Borsuk-Ulam + canonical target)",
        &failures,
        format!("{constructions} constructions, {comparisons} verdicts vs direct comparison"),
    );
}

#[test]
fn criterion_6_bound_sandwich() {
    let mut failures = Vec::new();
    let mut count = 0usize;
    for (_, spheres) in instance_universe() {
        for s in spheres {
            count += 1;
            let d = s.to_cohom_data();
            let exact = length_of_pair(&d, true).unwrap();
            let lower = lower_bound_length(&d).unwrap();
            let upper = upper_bound_length(d.fixed.len() as u64, d.n).unwrap();
            if !(lower <= exact.lo() && exact.hi() <= upper) {
                failures.push(format!(
                    "{:?}: sandwich {lower} <= {} <= {upper} broken",
                    s.weights(),
                    exact.lo()
                ));
            }
            if lower != exact.lo() {
                failures.push(format!(
                    "{:?}: lower bound {lower} != exact {}",
                    s.weights(),
                    exact.lo()
                ));
            }
        }
    }
    report(
        "criterion 6 (bound sandwich with equality below)",
        &failures,
        format!("{count} instances"),
    );
}

#[test]
fn criterion_7_classical_recovery() {
    let mut failures = Vec::new();
    let mut count = 0usize;
    for n in 0i64..=20 {
        for m in 0..=n {
            count += 1;
            let b = bourgin_yang_bound(&BourginYangQuery {
                p: 2,
                n,
                m,
                alpha: 1,
            })
            .unwrap();
            let classical = n - m - 1;
            if b.exact != num_rational::Rational64::from_integer(classical)
                || b.ceil != classical
                || bourgin_yang_manifold(n, m) != classical
            {
                failures.push(format!("n {n}, m {m}: {b:?} vs classical {classical}"));
            }
        }
    }
    report(
        "criterion 7 (classical Bourgin-Yang recovery)",
        &failures,
        format!("{count} (n, m) pairs"),
    );
}

#[test]
fn criterion_8_upper_bound_tightness() {
    let mut failures = Vec::new();
    for t in 1u64..=5 {
        // t disjoint orbits: alpha = t, dim = 0
        match upper_bound_length(t, 0) {
            Ok(v) if v == t => {}
            other => failures.push(format!("t = {t}: {other:?}")),
        }
    }
    report(
        "criterion 8 (disjoint-orbit tightness)",
        &failures,
        "t in 1..=5".to_string(),
    );
}
