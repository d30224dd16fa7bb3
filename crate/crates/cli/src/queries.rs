//! Query execution: one function per subcommand, all returning a [`Report`].

use serde_json::{json, Value};

use cohomlen_core::algebra::{PrimeField, Rationals};
use cohomlen_core::group::GroupSpec;
use cohomlen_core::length::{
    a_genus_of_sphere, euler_class, length_h, length_of_pair, lower_bound_length,
    upper_bound_length,
};
use cohomlen_core::oracle::{cross_check, default_search_bound};
use cohomlen_core::spheres::CohomSphereData;
use cohomlen_core::theorems::{
    borsuk_ulam_check, bourgin_yang_bound, bourgin_yang_manifold, canonical_target,
    map_exists_to_rep_sphere, refined_bourgin_yang, BourginYangQuery,
};

use crate::document::Document;
use crate::error::CliError;
use crate::params::Params;
use crate::report::{length_value, line_value, object, oracle_value, verdict_value, Report};

/// Runs one query against a parsed document. Exit status is derived from the
/// returned report: 0 unless it carries violations.
pub fn execute(query: &str, doc: &Document, mut params: Params) -> Result<Report, CliError> {
    if let Some(declared) = &doc.query {
        if declared != query {
            return Err(CliError::usage(format!(
                "document declares query '{declared}' but '{query}' was invoked"
            )));
        }
    }
    match query {
        "length" => run_length(doc, &mut params),
        "euler" => run_euler(doc, &params),
        "validate" => run_validate(doc, &params),
        "borsuk-ulam" => run_borsuk_ulam(doc, &params),
        "map-exists" => run_map_exists(doc, &params),
        "canonical-target" => run_canonical_target(doc, &params),
        "bourgin-yang" => run_bourgin_yang(doc, &params),
        "bounds" => run_bounds(doc, &params),
        "verify" => run_verify(doc, &mut params),
        "lint" => run_lint(doc, &params),
        other => Err(CliError::usage(format!("unknown query '{other}'"))),
    }
}

fn ensured(d: CohomSphereData, name: &str) -> Result<CohomSphereData, CliError> {
    d.ensure_valid()
        .map_err(|e| CliError::data(format!("space '{name}': {e}")))?;
    Ok(d)
}

fn run_length(doc: &Document, params: &mut Params) -> Result<Report, CliError> {
    params.restrict_to(&["space", "euler_is_polynomial"])?;
    params.set_default("euler_is_polynomial", Value::Bool(true));
    let (name, spec) = doc.single_space(params)?;
    let d = ensured(spec.cohom_data(&name, &doc.group)?, &name)?;
    let polynomial = params.get_bool("euler_is_polynomial")?.unwrap_or(true);
    let result = length_of_pair(&d, polynomial)?;

    let mut provenance = vec![result.basis().to_string()];
    if doc.group.p() > 2 {
        if polynomial {
            provenance.push(
                "Euler class asserted polynomial (holds for every G-ANR \
                 cohomology sphere, Cor3.10)"
                    .into(),
            );
        } else {
            provenance.push(
                "interval follows the proof-level bounds [ceil((n-r)/2), n-r]; \
                 the statement-level bounds (n+1)/2 .. n+1 agree when r = -1"
                    .into(),
            );
        }
    }
    Ok(Report::new("length", params.echo(), length_value(&result)).with_provenance(provenance))
}

fn euler_result(d: &CohomSphereData) -> Result<Value, CliError> {
    let (factors, polynomial, degree) = if d.group.is_torus() {
        let e = euler_class::<Rationals>(d)?;
        (
            e.factors.clone(),
            e.polynomial.to_text(),
            e.cohomological_degree,
        )
    } else {
        let e = euler_class::<PrimeField>(d)?;
        (
            e.factors.clone(),
            e.polynomial.to_text(),
            e.cohomological_degree,
        )
    };
    let factors: Vec<Value> = factors
        .iter()
        .map(|(line, mult)| object(vec![("line", line_value(line)), ("mult", json!(mult))]))
        .collect();
    Ok(object(vec![
        ("factors", Value::Array(factors)),
        ("polynomial", Value::String(polynomial)),
        ("degree", json!(degree)),
    ]))
}

fn run_euler(doc: &Document, params: &Params) -> Result<Report, CliError> {
    params.restrict_to(&["space"])?;
    let (name, spec) = doc.single_space(params)?;
    let d = ensured(spec.cohom_data(&name, &doc.group)?, &name)?;
    let result = euler_result(&d)?;
    Ok(
        Report::new("euler", params.echo(), result).with_provenance(vec![
            "Thm3.1 (Euler class splits over corank-1 subtori)".into(),
        ]),
    )
}

fn run_validate(doc: &Document, params: &Params) -> Result<Report, CliError> {
    params.restrict_to(&["space"])?;
    let (name, spec) = doc.single_space(params)?;
    let violations = collect_violations(&name, spec, &doc.group);
    let result = object(vec![("ok", Value::Bool(violations.is_empty()))]);
    let mut report = Report::new("validate", params.echo(), result)
        .with_provenance(vec!["Thm2.3 (Borel formula), Smith range, parity".into()]);
    report.violations = violations;
    Ok(report)
}

fn run_borsuk_ulam(doc: &Document, params: &Params) -> Result<Report, CliError> {
    params.restrict_to(&["source", "target"])?;
    let ((sn, ss), (tn, ts)) = doc.space_pair(params)?;
    let x = ensured(ss.cohom_data(&sn, &doc.group)?, &sn)?;
    let y = ensured(ts.cohom_data(&tn, &doc.group)?, &tn)?;
    let verdict = borsuk_ulam_check(&x, &y)?;
    Ok(
        Report::new("borsuk-ulam", params.echo(), verdict_value(&verdict))
            .with_provenance(vec![verdict.rationale.clone()]),
    )
}

fn run_map_exists(doc: &Document, params: &Params) -> Result<Report, CliError> {
    params.restrict_to(&["source", "target"])?;
    let ((sn, ss), (tn, ts)) = doc.space_pair(params)?;
    let x = ensured(ss.cohom_data(&sn, &doc.group)?, &sn)?;
    let v = ts.rep_sphere(&tn, &doc.group)?;
    let verdict = map_exists_to_rep_sphere(&x, &v)?;
    Ok(
        Report::new("map-exists", params.echo(), verdict_value(&verdict))
            .with_provenance(vec![verdict.rationale.clone()]),
    )
}

fn run_canonical_target(doc: &Document, params: &Params) -> Result<Report, CliError> {
    params.restrict_to(&["space"])?;
    let (name, spec) = doc.single_space(params)?;
    let d = ensured(spec.cohom_data(&name, &doc.group)?, &name)?;
    let target = canonical_target(&d)?;
    let weights: Vec<Value> = target
        .weights()
        .iter()
        .map(|w| Value::Array(w.components().iter().map(|&c| json!(c)).collect()))
        .collect();
    let result = object(vec![
        ("group", group_value(&doc.group)),
        ("weights", Value::Array(weights)),
        ("dim", json!(target.dim())),
    ]);
    Ok(
        Report::new("canonical-target", params.echo(), result).with_provenance(vec![
            "Lemma3.7 (n(H)+1 copies of each orbit class, joined)".into(),
        ]),
    )
}

fn run_bourgin_yang(doc: &Document, params: &Params) -> Result<Report, CliError> {
    params.restrict_to(&["space", "p", "n", "m", "alpha"])?;
    let p = params.get_u64("p")?.unwrap_or(doc.group.p());
    let n = params.require_i64("n")?;
    let m = params.require_i64("m")?;
    let alpha = match params.get_u64("alpha")? {
        Some(a) => a,
        None => {
            // conservative default: every subtorus in the source's table
            let (name, spec) = doc.single_space(params).map_err(|_| {
                CliError::schema(
                    "parameter 'alpha' is required unless a source space provides \
                     its fixed-set table",
                )
            })?;
            let d = ensured(spec.cohom_data(&name, &doc.group)?, &name)?;
            d.fixed.len() as u64
        }
    };
    let bound = bourgin_yang_bound(&BourginYangQuery { p, n, m, alpha })?;
    let result = object(vec![
        ("bound_exact", Value::String(bound.exact_string())),
        ("bound_int", json!(bound.ceil)),
        ("nonempty", Value::Bool(bound.nonempty)),
    ]);
    let mut provenance = vec!["Thm4.5".to_string()];
    if p != 0 && p != 2 {
        provenance
            .push("target Euler class asserted polynomial (assumption removable, Rem5.4)".into());
    }
    provenance.push(format!(
        "alpha = {alpha} (number of relevant corank-1 subtori)"
    ));
    Ok(Report::new("bourgin-yang", params.echo(), result).with_provenance(provenance))
}

fn run_bounds(doc: &Document, params: &Params) -> Result<Report, CliError> {
    params.restrict_to(&["space", "source", "target", "alpha", "n", "m"])?;
    let mut entries: Vec<(&str, Value)> = Vec::new();
    let mut provenance: Vec<String> = Vec::new();

    // subject space: explicit `space`, unique space, or the source of a pair
    let subject = doc.single_space(params).ok().or_else(|| {
        doc.space_pair(params)
            .ok()
            .map(|((name, spec), _)| (name, spec))
    });
    if let Some((name, spec)) = &subject {
        let d = ensured(spec.cohom_data(name, &doc.group)?, name)?;
        let lower = lower_bound_length(&d)?;
        let alpha = params.get_u64("alpha")?.unwrap_or(d.fixed.len() as u64);
        let upper = upper_bound_length(alpha, d.n)?;
        let per_line: Vec<Value> = d
            .fixed
            .keys()
            .map(|line| {
                let ell = length_h(&d, line)?.lo();
                Ok(object(vec![
                    ("line", line_value(line)),
                    ("ell", json!(ell)),
                ]))
            })
            .collect::<Result<_, CliError>>()?;
        entries.push(("space", Value::String(name.clone())));
        entries.push(("lower", json!(lower)));
        entries.push(("upper", json!(upper)));
        entries.push(("alpha", json!(alpha)));
        entries.push(("dim", json!(d.n)));
        entries.push(("per_line", Value::Array(per_line)));
        provenance.push("Thm5.3 (lower: sum of per-subtorus lengths)".into());
        provenance.push("Thm4.4 (upper: alpha * (dim + 1))".into());
        if !d.group.is_torus() && d.r == -1 {
            entries.push(("a_genus", json!(a_genus_of_sphere(&d)?)));
            provenance.push("Lemma3.6 (A-genus = n + 1; source asserted to be a G-ANR)".into());
        }
    }

    if let Ok(((sn, ss), (tn, ts))) = doc.space_pair(params) {
        let x = ensured(ss.cohom_data(&sn, &doc.group)?, &sn)?;
        let y = ensured(ts.cohom_data(&tn, &doc.group)?, &tn)?;
        let refined = refined_bourgin_yang(&x, &y)?;
        let per_line: Vec<Value> = refined
            .per_line
            .iter()
            .map(|(line, ell)| object(vec![("line", line_value(line)), ("ell", json!(ell))]))
            .collect();
        entries.push((
            "refined",
            object(vec![
                ("total", json!(refined.total)),
                ("per_line", Value::Array(per_line)),
            ]),
        ));
        provenance.push("Rem5.4 (refined zero-set bound from per-subtorus differences)".into());
    }

    if let (Some(n), Some(m)) = (params.get_i64("n")?, params.get_i64("m")?) {
        entries.push(("manifold", json!(bourgin_yang_manifold(n, m))));
        provenance.push(
            "manifold Bourgin-Yang: n - m - 1 (closed orientable manifold, \
             (n-1)-acyclic source asserted)"
                .into(),
        );
    }

    if entries.is_empty() {
        return Err(CliError::schema(
            "bounds needs a space, a source/target pair, or n and m parameters",
        ));
    }
    Ok(Report::new("bounds", params.echo(), object(entries)).with_provenance(provenance))
}

fn run_verify(doc: &Document, params: &mut Params) -> Result<Report, CliError> {
    params.restrict_to(&["space", "lambda_max"])?;
    let (name, spec) = doc.single_space(params)?;
    let sphere = spec.rep_sphere(&name, &doc.group)?;
    let lambda_max = match params.get_u64("lambda_max")? {
        Some(v) => v,
        None => {
            let v = default_search_bound(&sphere);
            params.set_default("lambda_max", json!(v));
            v
        }
    };
    let report = if doc.group.is_torus() {
        cross_check::<Rationals>(&sphere, lambda_max)?
    } else {
        cross_check::<PrimeField>(&sphere, lambda_max)?
    };
    Ok(
        Report::new("verify", params.echo(), oracle_value(&report)).with_provenance(vec![
            "exhaustive annihilator-membership search over line multisets".into(),
            "BartschClapp (formula: length = number of weights)".into(),
            "Thm3.1 (formula applied to the derived fixed-set data)".into(),
        ]),
    )
}

fn collect_violations(
    name: &str,
    spec: &crate::document::SpaceSpec,
    group: &GroupSpec,
) -> Vec<String> {
    match spec.cohom_data(name, group) {
        Err(e) => vec![format!("space '{name}': {}", e.message)],
        Ok(d) => d
            .validate()
            .into_iter()
            .map(|v| format!("space '{name}': {v}"))
            .collect(),
    }
}

fn run_lint(doc: &Document, params: &Params) -> Result<Report, CliError> {
    params.restrict_to(&[])?;
    if doc.spaces.is_empty() {
        return Err(CliError::schema("document defines no spaces to lint"));
    }
    let mut all = Vec::new();
    let mut per_space: Vec<(&str, Value)> = Vec::new();
    let mut space_values = serde_json::Map::new();
    for (name, spec) in &doc.spaces {
        let violations = collect_violations(name, spec, &doc.group);
        space_values.insert(
            name.clone(),
            object(vec![
                ("kind", Value::String(spec.kind().into())),
                ("ok", Value::Bool(violations.is_empty())),
                (
                    "violations",
                    Value::Array(violations.iter().map(|v| json!(v)).collect()),
                ),
            ]),
        );
        all.extend(violations);
    }
    per_space.push(("spaces", Value::Object(space_values)));
    per_space.push(("ok", Value::Bool(all.is_empty())));
    let mut report = Report::new("lint", params.echo(), object(per_space))
        .with_provenance(vec!["Thm2.3 (Borel formula), Smith range, parity".into()]);
    report.violations = all;
    Ok(report)
}

fn group_value(g: &GroupSpec) -> Value {
    object(vec![("p", json!(g.p())), ("rank", json!(g.rank()))])
}
