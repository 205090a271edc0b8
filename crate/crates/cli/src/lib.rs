//! Command implementations behind the `chi-certify` binary: graph analysis,
//! certificate generation, verification suites and bound sweeps.

pub mod input;
pub mod suites;
pub mod sweep;

use std::fmt;
use std::time::Duration;

use chi_certify::certify::{
    broom_bound, certify_broom_theorem, certify_path_theorem, path_bound, Certificate,
};
use chi_certify::chromatic::{chromatic_number, clique_number};
use chi_certify::connectivity::vertex_connectivity;
use chi_certify::graph::to_graph6;
use chi_certify::patterns::{contains_induced, contains_subgraph_kdt, PatternSpec, Validate};
use chi_certify::{Budget, Error, Graph, VertexSet};
use serde::Serialize;

pub use input::Instance;
pub use suites::{Suite, SuiteOptions, SuiteReport};

pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const BUDGET: i32 = 3;
    pub const SKIPPED: i32 = 4;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: exit::USAGE,
            message: message.into(),
        }
    }

    /// Budget exhaustion and failed constructive steps have their own exit
    /// codes; anything else is a usage or input error.
    pub fn from_core(context: &str, e: Error) -> Self {
        let code = match e {
            Error::BudgetExhausted => exit::BUDGET,
            Error::ProofStep(_) => exit::FAILURE,
            _ => exit::USAGE,
        };
        CliError {
            code,
            message: format!("{context}: {e}"),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pipeline {
    Path,
    Broom,
    /// `bound_k(p, q, s, t)` with the balloon/biclique search above it.
    Structure,
}

impl Pipeline {
    pub fn name(self) -> &'static str {
        match self {
            Pipeline::Path => "path",
            Pipeline::Broom => "broom",
            Pipeline::Structure => "structure",
        }
    }
}

/// Per-instance limits.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Limits {
    pub budget_ms: Option<u64>,
    pub node_limit: Option<u64>,
}

impl Limits {
    pub fn budget(&self) -> Budget {
        Budget::new(self.node_limit, self.budget_ms.map(Duration::from_millis))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Flag {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    pub present: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Analysis {
    pub id: String,
    pub graph6: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub chi: usize,
    pub coloring: Vec<usize>,
    pub omega: usize,
    pub clique: VertexSet,
    pub kappa: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub induced_path: Option<Flag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kdt_subgraph: Option<Flag>,
}

/// `χ` with a colouring, `ω` with a clique, `κ`, and the optional pattern
/// flags.
pub fn analyze(
    inst: &Instance,
    p: Option<usize>,
    d: Option<usize>,
    t: Option<usize>,
    limits: &Limits,
) -> CliResult<Analysis> {
    let g = &inst.graph;
    let budget = limits.budget();
    let ctx = |e| CliError::from_core(&inst.id, e);
    let (chi, coloring) = chromatic_number(g, &budget).map_err(ctx)?;
    let (omega, clique) = clique_number(g, &budget).map_err(ctx)?;
    let induced_path = match p {
        Some(p) => {
            Some(Flag {
                p: Some(p),
                d: None,
                t: None,
                present: contains_induced(g, &PatternSpec::Path(p), &budget)
                    .map_err(ctx)?
                    .is_some(),
            })
        }
        None => None,
    };
    let kdt_subgraph = match (d, t) {
        (Some(d), Some(t)) => Some(Flag {
            p: None,
            d: Some(d),
            t: Some(t),
            present: contains_subgraph_kdt(g, d, t, &budget).map_err(ctx)?.is_some(),
        }),
        _ => None,
    };
    Ok(Analysis {
        id: inst.id.clone(),
        graph6: to_graph6(g),
        n: g.n(),
        edges: g.edges().collect(),
        chi,
        coloring: coloring.colors,
        omega,
        clique,
        kappa: vertex_connectivity(g),
        induced_path,
        kdt_subgraph,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PipelineParams {
    pub p: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub d: usize,
    pub t: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateRecord {
    pub id: String,
    pub graph6: String,
    pub pipeline: &'static str,
    pub params: PipelineParams,
    pub bound: u64,
    pub certificate: Certificate,
    pub valid: bool,
}

/// Stated bound of a pipeline.
pub fn pipeline_bound(pipeline: Pipeline, params: &PipelineParams) -> chi_certify::Result<u64> {
    let (p, d, t) = (params.p as u64, params.d as u64, params.t as u64);
    match pipeline {
        Pipeline::Path => path_bound(p, d, t),
        Pipeline::Broom => broom_bound(p, params.r.unwrap_or(1) as u64, d, t),
        Pipeline::Structure => Err(Error::InvalidArgument(
            "the structure search has no certificate pipeline".into(),
        )),
    }
}

pub fn run_pipeline(
    g: &Graph,
    pipeline: Pipeline,
    params: &PipelineParams,
    budget: &Budget,
) -> chi_certify::Result<Certificate> {
    match pipeline {
        Pipeline::Path => certify_path_theorem(g, params.p, params.d, params.t, budget),
        Pipeline::Broom => certify_broom_theorem(
            g,
            params.p,
            params.r.unwrap_or(1),
            params.d,
            params.t,
            budget,
        ),
        Pipeline::Structure => Err(Error::InvalidArgument(
            "the structure search has no certificate pipeline".into(),
        )),
    }
}

pub fn certify(
    inst: &Instance,
    pipeline: Pipeline,
    params: &PipelineParams,
    limits: &Limits,
) -> CliResult<CertificateRecord> {
    let ctx = |e| CliError::from_core(&inst.id, e);
    let bound = pipeline_bound(pipeline, params).map_err(ctx)?;
    let certificate = run_pipeline(&inst.graph, pipeline, params, &limits.budget()).map_err(ctx)?;
    let valid = certificate.validate(&inst.graph);
    Ok(CertificateRecord {
        id: inst.id.clone(),
        graph6: to_graph6(&inst.graph),
        pipeline: pipeline.name(),
        params: *params,
        bound,
        certificate,
        valid,
    })
}

/// Exit code for a set of suite reports: failures dominate skips.
pub fn verify_exit_code(reports: &[SuiteReport]) -> i32 {
    use suites::Status;
    let statuses: Vec<Status> = reports.iter().map(|r| r.status()).collect();
    if statuses.contains(&Status::Fail) {
        exit::FAILURE
    } else if statuses.contains(&Status::Skipped) {
        exit::SKIPPED
    } else {
        exit::SUCCESS
    }
}

pub fn verify_csv(reports: &[SuiteReport]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::usage(e.to_string());
    w.write_record(["suite", "property", "status", "checked", "failures", "skipped", "counterexample"])
        .map_err(io)?;
    for r in reports {
        for p in &r.properties {
            w.write_record([
                r.suite.as_str(),
                p.name.as_str(),
                &p.status.to_string(),
                &p.checked.to_string(),
                &p.failures.to_string(),
                &p.skipped.to_string(),
                p.counterexample.as_deref().unwrap_or(""),
            ])
            .map_err(io)?;
        }
    }
    finish_csv(w)
}

pub(crate) fn finish_csv(w: csv::Writer<Vec<u8>>) -> CliResult<String> {
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::usage(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::usage(e.to_string()))
}

pub fn analysis_csv(rows: &[Analysis]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::usage(e.to_string());
    w.write_record(["id", "graph6", "n", "m", "chi", "omega", "kappa"])
        .map_err(io)?;
    for a in rows {
        w.write_record([
            a.id.clone(),
            a.graph6.clone(),
            a.n.to_string(),
            a.edges.len().to_string(),
            a.chi.to_string(),
            a.omega.to_string(),
            a.kappa.to_string(),
        ])
        .map_err(io)?;
    }
    finish_csv(w)
}

/// One JSON document per line.
pub fn json_lines<T: Serialize>(items: &[T]) -> CliResult<String> {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(item).map_err(|e| CliError::usage(e.to_string()))?);
        out.push('\n');
    }
    Ok(out)
}
