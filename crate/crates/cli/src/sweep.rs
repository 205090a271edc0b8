//! Bound-slack sweeps: one row per instance and grid point.

use chi_certify::certify::{bound_k, find_structure, Structure};
use chi_certify::chromatic::{chromatic_number, clique_number};
use chi_certify::patterns::Validate;
use chi_certify::{Error, Graph};
use rayon::prelude::*;
use serde::Serialize;

use crate::{pipeline_bound, run_pipeline, CliError, CliResult, Instance, Limits, Pipeline, PipelineParams};

/// Parameter lists; a sweep uses the cartesian product of the lists its
/// pipeline reads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub p: Vec<usize>,
    pub q: Vec<usize>,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub d: Vec<usize>,
    pub r: Vec<usize>,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            p: vec![1],
            q: vec![1],
            s: vec![1],
            t: vec![1],
            d: vec![2],
            r: vec![1],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Point {
    Pipeline(PipelineParams),
    Structure { p: usize, q: usize, s: usize, t: usize },
}

impl Point {
    fn name(&self, pipeline: Pipeline) -> String {
        match *self {
            Point::Pipeline(PipelineParams { p, r: Some(r), d, t }) => {
                format!("{}_bound({p},{r},{d},{t})", pipeline.name())
            }
            Point::Pipeline(PipelineParams { p, d, t, .. }) => {
                format!("{}_bound({p},{d},{t})", pipeline.name())
            }
            Point::Structure { p, q, s, t } => format!("bound_k({p},{q},{s},{t})"),
        }
    }
}

impl Grid {
    fn points(&self, pipeline: Pipeline) -> Vec<Point> {
        let mut out = Vec::new();
        match pipeline {
            Pipeline::Structure => {
                for &p in &self.p {
                    for &q in &self.q {
                        for &s in &self.s {
                            for &t in &self.t {
                                out.push(Point::Structure { p, q, s, t });
                            }
                        }
                    }
                }
            }
            Pipeline::Path | Pipeline::Broom => {
                let rs: Vec<Option<usize>> = if pipeline == Pipeline::Broom {
                    self.r.iter().map(|&r| Some(r)).collect()
                } else {
                    vec![None]
                };
                for &p in &self.p {
                    for &r in &rs {
                        for &d in &self.d {
                            for &t in &self.t {
                                out.push(Point::Pipeline(PipelineParams { p, r, d, t }));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub graph_id: String,
    pub n: usize,
    pub chi: Option<usize>,
    pub omega: Option<usize>,
    pub bound_name: String,
    pub bound_value: u64,
    /// `bound_value - chi`, as a decimal string.
    pub slack: Option<String>,
    pub certificate_kind: String,
}

pub const SKIPPED: &str = "skipped";
pub const INVALID: &str = "invalid";

fn point_bound(point: &Point, pipeline: Pipeline) -> chi_certify::Result<u64> {
    match *point {
        Point::Pipeline(params) => pipeline_bound(pipeline, &params),
        Point::Structure { p, q, s, t } => bound_k(p as u64, q as u64, s as u64, t as u64),
    }
}

fn certificate_kind(
    g: &Graph,
    chi: usize,
    bound: u64,
    point: &Point,
    pipeline: Pipeline,
    limits: &Limits,
) -> chi_certify::Result<String> {
    let budget = limits.budget();
    match *point {
        Point::Pipeline(params) => {
            let cert = run_pipeline(g, pipeline, &params, &budget)?;
            Ok(if cert.validate(g) { cert.kind() } else { INVALID }.to_string())
        }
        Point::Structure { p, q, s, t } => {
            if chi as u64 <= bound {
                return Ok("bounded_coloring".to_string());
            }
            let st = find_structure(g, p, q, s, t, &budget)?;
            let kind = match st {
                Structure::Balloon(_) => "balloon",
                Structure::Biclique(_) => "biclique",
            };
            Ok(if st.validate(g) { kind } else { INVALID }.to_string())
        }
    }
}

fn instance_rows(
    inst: &Instance,
    pipeline: Pipeline,
    points: &[(Point, u64)],
    limits: &Limits,
) -> CliResult<Vec<SweepRow>> {
    let g = &inst.graph;
    let budget = limits.budget();
    let measured = chromatic_number(g, &budget)
        .and_then(|(chi, _)| Ok((chi, clique_number(g, &budget)?.0)));
    let (chi, omega) = match measured {
        Ok(x) => (Some(x.0), Some(x.1)),
        Err(Error::BudgetExhausted) => (None, None),
        Err(e) => return Err(CliError::from_core(&inst.id, e)),
    };
    points
        .iter()
        .map(|(point, bound)| {
            let kind = match chi {
                None => SKIPPED.to_string(),
                Some(chi) => match certificate_kind(g, chi, *bound, point, pipeline, limits) {
                    Ok(k) => k,
                    Err(Error::BudgetExhausted) => SKIPPED.to_string(),
                    Err(e) => return Err(CliError::from_core(&inst.id, e)),
                },
            };
            Ok(SweepRow {
                graph_id: inst.id.clone(),
                n: g.n(),
                chi,
                omega,
                bound_name: point.name(pipeline),
                bound_value: *bound,
                slack: chi.map(|c| (*bound as i128 - c as i128).to_string()),
                certificate_kind: kind,
            })
        })
        .collect()
}

/// Rows in instance order, then grid order. Instances run in parallel.
pub fn sweep(
    instances: &[Instance],
    pipeline: Pipeline,
    grid: &Grid,
    limits: &Limits,
) -> CliResult<Vec<SweepRow>> {
    let points = grid
        .points(pipeline)
        .into_iter()
        .map(|pt| {
            let b = point_bound(&pt, pipeline)
                .map_err(|e| CliError::usage(format!("{}: {e}", pt.name(pipeline))))?;
            Ok((pt, b))
        })
        .collect::<CliResult<Vec<_>>>()?;
    if points.is_empty() {
        return Err(CliError::usage("empty parameter grid"));
    }
    let per_instance: Vec<CliResult<Vec<SweepRow>>> = instances
        .par_iter()
        .map(|inst| instance_rows(inst, pipeline, &points, limits))
        .collect();
    let mut rows = Vec::new();
    for r in per_instance {
        rows.extend(r?);
    }
    Ok(rows)
}

pub fn rows_csv(rows: &[SweepRow]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| CliError::usage(e.to_string()))?;
    }
    if rows.is_empty() {
        w.write_record([
            "graph_id",
            "n",
            "chi",
            "omega",
            "bound_name",
            "bound_value",
            "slack",
            "certificate_kind",
        ])
        .map_err(|e| CliError::usage(e.to_string()))?;
    }
    crate::finish_csv(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::expand_generator;

    #[test]
    fn complete_graph_slack() {
        let insts: Vec<Instance> = (13..=16)
            .flat_map(|n| expand_generator(&format!("complete:{n}"), None, 1).unwrap())
            .collect();
        let rows = sweep(&insts, Pipeline::Structure, &Grid::default(), &Limits::default()).unwrap();
        let slack: Vec<_> = rows.iter().map(|r| r.slack.clone().unwrap()).collect();
        assert_eq!(slack, ["0", "-1", "-2", "-3"]);
        assert_eq!(rows[0].certificate_kind, "bounded_coloring");
        assert_eq!(rows[1].certificate_kind, "biclique");
        let csv = rows_csv(&rows).unwrap();
        assert!(csv.starts_with("graph_id,n,chi,omega,bound_name,bound_value,slack,certificate_kind\n"));
        assert!(csv.contains("complete:14,14,14,14,\"bound_k(1,1,1,1)\",13,-1,biclique\n"));
    }

    #[test]
    fn mycielski_chi_column() {
        let insts: Vec<Instance> = ["cycle:5", "mycielski:cycle:5"]
            .iter()
            .flat_map(|s| expand_generator(s, None, 1).unwrap())
            .collect();
        let rows = sweep(&insts, Pipeline::Path, &Grid::default(), &Limits::default()).unwrap();
        let chi: Vec<_> = rows.iter().map(|r| r.chi.unwrap()).collect();
        assert_eq!(chi, [3, 4]);
    }

    #[test]
    fn budget_marks_rows() {
        let insts = expand_generator("gnp:20:0.5:1", None, 1).unwrap();
        let limits = Limits {
            budget_ms: None,
            node_limit: Some(1),
        };
        let rows = sweep(&insts, Pipeline::Path, &Grid::default(), &limits).unwrap();
        assert_eq!(rows[0].certificate_kind, SKIPPED);
        assert_eq!(rows[0].chi, None);
    }
}
