//! Input document model.
//!
//! A query document is a single JSON object:
//!
//! ```json
//! {
//!   "schema": 1,
//!   "group": {"p": 2, "rank": 2},
//!   "spaces": {
//!     "X": {"type": "rep_sphere", "weights": [[1,0],[0,1],[1,1]]},
//!     "Y": {"type": "cohom_sphere", "n": 3, "r": -1,
//!           "fixed": [{"line": [1,0], "dim": 1}]}
//!   },
//!   "query": "length",
//!   "parameters": {"euler_is_polynomial": true}
//! }
//! ```
//!
//! `schema` and `query` are optional; when present, `schema` must be 1 and
//! `query` must match the subcommand. Weight and line entries are integers;
//! for prime p they are reduced to canonical representatives internally.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::Value;

use cohomlen_core::group::{GroupSpec, SubtorusLine, Weight};
use cohomlen_core::spheres::{CohomSphereData, RepSphere};

use crate::error::CliError;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default)]
    schema: Option<u64>,
    group: RawGroup,
    #[serde(default)]
    spaces: BTreeMap<String, RawSpace>,
    #[serde(default)]
    query: Option<String>,
    #[serde(default)]
    parameters: BTreeMap<String, Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    p: u64,
    rank: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpace {
    #[serde(rename = "type")]
    kind: String,
    #[serde(default)]
    weights: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    n: Option<i64>,
    #[serde(default)]
    r: Option<i64>,
    #[serde(default)]
    fixed: Option<Vec<RawFixed>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFixed {
    line: Vec<i64>,
    dim: i64,
}

/// A parsed space description, kept raw so that linting can report broken
/// data instead of refusing to load it.
#[derive(Clone, Debug)]
pub enum SpaceSpec {
    Rep {
        weights: Vec<Vec<i64>>,
    },
    Cohom {
        n: i64,
        r: i64,
        fixed: Vec<(Vec<i64>, i64)>,
    },
}

impl SpaceSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            SpaceSpec::Rep { .. } => "rep_sphere",
            SpaceSpec::Cohom { .. } => "cohom_sphere",
        }
    }

    /// Builds the representation sphere, or fails when the space is not a
    /// rep_sphere (schema-level) or its weights are invalid (data-level).
    pub fn rep_sphere(&self, name: &str, group: &GroupSpec) -> Result<RepSphere, CliError> {
        match self {
            SpaceSpec::Rep { weights } => {
                let ws = weights.iter().cloned().map(Weight::new).collect();
                RepSphere::new(*group, ws)
                    .map_err(|e| CliError::data(format!("space '{name}': {e}")))
            }
            SpaceSpec::Cohom { .. } => Err(CliError::schema(format!(
                "space '{name}' must be a rep_sphere for this query"
            ))),
        }
    }

    /// Builds cohomology-sphere data; representation spheres are converted.
    pub fn cohom_data(&self, name: &str, group: &GroupSpec) -> Result<CohomSphereData, CliError> {
        match self {
            SpaceSpec::Rep { .. } => Ok(self.rep_sphere(name, group)?.to_cohom_data()),
            SpaceSpec::Cohom { n, r, fixed } => {
                let mut table = BTreeMap::new();
                for (line, dim) in fixed {
                    if table
                        .insert(SubtorusLine::from_raw(line.clone()), *dim)
                        .is_some()
                    {
                        return Err(CliError::schema(format!(
                            "space '{name}': duplicate fixed-table line {line:?}"
                        )));
                    }
                }
                Ok(CohomSphereData::new(*group, *n, *r, table))
            }
        }
    }
}

/// A space together with the name it carries in the document.
pub type NamedSpace<'a> = (String, &'a SpaceSpec);

#[derive(Clone, Debug)]
pub struct Document {
    pub group: GroupSpec,
    pub spaces: BTreeMap<String, SpaceSpec>,
    pub query: Option<String>,
    pub parameters: BTreeMap<String, Value>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let raw: RawDocument = serde_json::from_str(text)
            .map_err(|e| CliError::parse(format!("invalid query document: {e}")))?;
        if let Some(v) = raw.schema {
            if v != SCHEMA_VERSION {
                return Err(CliError::schema(format!(
                    "unsupported schema version {v} (expected {SCHEMA_VERSION})"
                )));
            }
        }
        let group = GroupSpec::new(raw.group.p, raw.group.rank)
            .map_err(|e| CliError::schema(format!("group: {e}")))?;
        let mut spaces = BTreeMap::new();
        for (name, s) in raw.spaces {
            let spec = match s.kind.as_str() {
                "rep_sphere" => {
                    if s.n.is_some() || s.r.is_some() || s.fixed.is_some() {
                        return Err(CliError::schema(format!(
                            "space '{name}': rep_sphere takes only 'weights'"
                        )));
                    }
                    let weights = s.weights.ok_or_else(|| {
                        CliError::schema(format!("space '{name}': rep_sphere needs 'weights'"))
                    })?;
                    SpaceSpec::Rep { weights }
                }
                "cohom_sphere" => {
                    if s.weights.is_some() {
                        return Err(CliError::schema(format!(
                            "space '{name}': cohom_sphere does not take 'weights'"
                        )));
                    }
                    let n = s.n.ok_or_else(|| {
                        CliError::schema(format!("space '{name}': cohom_sphere needs 'n'"))
                    })?;
                    let r = s.r.ok_or_else(|| {
                        CliError::schema(format!("space '{name}': cohom_sphere needs 'r'"))
                    })?;
                    let fixed = s
                        .fixed
                        .unwrap_or_default()
                        .into_iter()
                        .map(|f| (f.line, f.dim))
                        .collect();
                    SpaceSpec::Cohom { n, r, fixed }
                }
                other => {
                    return Err(CliError::schema(format!(
                        "space '{name}': unknown type '{other}' \
                         (expected rep_sphere or cohom_sphere)"
                    )))
                }
            };
            spaces.insert(name, spec);
        }
        Ok(Document {
            group,
            spaces,
            query: raw.query,
            parameters: raw.parameters,
        })
    }

    /// The space a single-space query works on: the `space` parameter when
    /// given, otherwise the document's unique space.
    pub fn single_space(
        &self,
        params: &crate::params::Params,
    ) -> Result<(String, &SpaceSpec), CliError> {
        if let Some(name) = params.get_str("space")? {
            let spec = self
                .spaces
                .get(&name)
                .ok_or_else(|| CliError::schema(format!("space '{name}' is not defined")))?;
            return Ok((name, spec));
        }
        if self.spaces.len() == 1 {
            let (name, spec) = self.spaces.iter().next().unwrap();
            return Ok((name.clone(), spec));
        }
        Err(CliError::schema(
            "document defines several spaces; select one with --param space=NAME",
        ))
    }

    /// Source/target pair for two-space queries: `source`/`target`
    /// parameters, falling back to spaces named `X` and `Y`.
    pub fn space_pair(
        &self,
        params: &crate::params::Params,
    ) -> Result<(NamedSpace<'_>, NamedSpace<'_>), CliError> {
        let lookup = |name: String| -> Result<NamedSpace<'_>, CliError> {
            let spec = self
                .spaces
                .get(&name)
                .ok_or_else(|| CliError::schema(format!("space '{name}' is not defined")))?;
            Ok((name, spec))
        };
        let source = params
            .get_str("source")?
            .or_else(|| self.spaces.contains_key("X").then(|| "X".to_string()));
        let target = params
            .get_str("target")?
            .or_else(|| self.spaces.contains_key("Y").then(|| "Y".to_string()));
        match (source, target) {
            (Some(s), Some(t)) => Ok((lookup(s)?, lookup(t)?)),
            _ => Err(CliError::schema(
                "this query needs two spaces; name them X and Y or pass \
                 --param source=NAME --param target=NAME",
            )),
        }
    }
}
