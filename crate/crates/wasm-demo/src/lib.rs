//! Browser bindings: run the generators from a static page.
//!
//! Every exported function returns a JSON string. The plain `*_json`
//! functions hold the logic and are what the native tests exercise.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use chordgen::experiment::{run_once, Generator};
use chordgen::graph_analysis::{aggregate_reports, maximal_cliques, run_report, HistogramBin, RunReport};
use chordgen::{chordal_gen, rng, Error, Result};

/// Largest `n` accepted from the page; keeps a click under a few seconds.
pub const MAX_N: usize = 5000;
/// Largest `n` for a drawable instance.
pub const MAX_DRAW_N: usize = 60;

pub fn generator(method: &str, p1: f64, p2: f64) -> Result<Generator> {
    Ok(match method {
        "growing" => {
            if !(p1 >= 1.0 && p1.fract() == 0.0) {
                return Err(Error::InvalidArgument(format!("k must be a positive integer, got {p1}")));
            }
            Generator::growing(p1 as usize)
        }
        "connecting" => Generator::connecting(p1),
        "pruned" => Generator::pruned(p1, p2),
        "alg1" => Generator::alg1(p1),
        other => return Err(Error::InvalidArgument(format!("unknown method `{other}`"))),
    })
}

fn check_n(n: usize, limit: usize) -> Result<()> {
    if n == 0 || n > limit {
        return Err(Error::InvalidArgument(format!("n must lie in 1..={limit}, got {n}")));
    }
    Ok(())
}

fn runs_report(n: usize, generator: Generator, runs: usize, seed: u64, connect: bool) -> Result<RunReport> {
    generator.validate(n)?;
    if runs == 0 {
        return Err(Error::InvalidArgument("runs must be at least 1".into()));
    }
    let connect = connect && !matches!(generator, Generator::Alg1 { .. });
    let reports = (0..runs)
        .map(|i| run_report(&run_once(n, generator, seed + i as u64, connect)?.graph))
        .collect::<Result<Vec<_>>>()?;
    aggregate_reports(&reports)
}

#[derive(Serialize)]
struct ReportView {
    report: RunReport,
    bins: Vec<HistogramBin>,
}

pub fn report_json(
    method: &str,
    n: usize,
    p1: f64,
    p2: f64,
    runs: usize,
    seed: u64,
    connect: bool,
) -> Result<String> {
    check_n(n, MAX_N)?;
    let report = runs_report(n, generator(method, p1, p2)?, runs, seed, connect)?;
    let bins = report.histogram_bins();
    Ok(serde_json::to_string(&ReportView { report, bins })?)
}

#[derive(Serialize)]
struct SweepPoint {
    value: f64,
    density: f64,
    components: f64,
    clique_count: f64,
    clique_max: f64,
}

/// Averaged statistics for each value of the method's first parameter.
pub fn sweep_json(method: &str, n: usize, values: &[f64], p2: f64, runs: usize, seed: u64) -> Result<String> {
    check_n(n, MAX_N)?;
    let points = values
        .iter()
        .map(|&value| {
            let r = runs_report(n, generator(method, value, p2)?, runs, seed, false)?;
            Ok(SweepPoint {
                value,
                density: r.density,
                components: r.component_count,
                clique_count: r.clique_count,
                clique_max: r.clique_max,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(serde_json::to_string(&points)?)
}

#[derive(Serialize)]
struct InstanceView {
    host_edges: Vec<(usize, usize)>,
    subtrees: Vec<Vec<usize>>,
    graph_edges: Vec<(usize, usize)>,
    cliques: Vec<Vec<usize>>,
}

/// Host tree, subtrees, graph and maximal cliques of one small run.
pub fn instance_json(method: &str, n: usize, p1: f64, p2: f64, seed: u64, connect: bool) -> Result<String> {
    check_n(n, MAX_DRAW_N)?;
    let view = match generator(method, p1, p2)? {
        Generator::Subtrees(m) => {
            let out = chordal_gen(n, m, &mut rng::from_seed(seed), connect)?;
            InstanceView {
                host_edges: out.host.edges().to_vec(),
                subtrees: out.subtrees.subtrees.iter().map(|t| t.nodes.clone()).collect(),
                graph_edges: out.graph.edges().collect(),
                cliques: out.clique_tree.cliques,
            }
        }
        g @ Generator::Alg1 { .. } => {
            g.validate(n)?;
            let graph = run_once(n, g, seed, false)?.graph;
            InstanceView {
                host_edges: Vec::new(),
                subtrees: Vec::new(),
                graph_edges: graph.edges().collect(),
                cliques: maximal_cliques(&graph)?,
            }
        }
    };
    Ok(serde_json::to_string(&view)?)
}

fn js(result: Result<String>) -> std::result::Result<String, JsError> {
    result.map_err(|e| JsError::new(&e.to_string()))
}

/// Aggregate report and histogram over `runs` seeded runs.
#[wasm_bindgen]
pub fn generate_report(
    method: &str,
    n: usize,
    p1: f64,
    p2: f64,
    runs: usize,
    seed: u32,
    connect: bool,
) -> std::result::Result<String, JsError> {
    js(report_json(method, n, p1, p2, runs, seed as u64, connect))
}

/// Density and clique statistics along a sweep of the first parameter.
#[wasm_bindgen]
pub fn density_curve(
    method: &str,
    n: usize,
    values: Vec<f64>,
    p2: f64,
    runs: usize,
    seed: u32,
) -> std::result::Result<String, JsError> {
    js(sweep_json(method, n, &values, p2, runs, seed as u64))
}

/// A small instance for drawing.
#[wasm_bindgen]
pub fn small_instance(
    method: &str,
    n: usize,
    p1: f64,
    p2: f64,
    seed: u32,
    connect: bool,
) -> std::result::Result<String, JsError> {
    js(instance_json(method, n, p1, p2, seed as u64, connect))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn report_has_matching_histogram() {
        let v: Value = serde_json::from_str(&report_json("growing", 200, 10.0, 0.0, 3, 1, false).unwrap()).unwrap();
        let count = v["report"]["clique_count"].as_f64().unwrap();
        let binned: f64 = v["bins"].as_array().unwrap().iter().map(|b| b["count"].as_f64().unwrap()).sum();
        assert!((count - binned).abs() < 1e-9);
    }

    #[test]
    fn sweep_density_rises_with_lambda() {
        let v: Value = serde_json::from_str(&sweep_json("connecting", 300, &[0.5, 2.0, 5.0], 0.0, 2, 3).unwrap()).unwrap();
        let d: Vec<f64> = v.as_array().unwrap().iter().map(|p| p["density"].as_f64().unwrap()).collect();
        assert!(d[0] < d[1] && d[1] < d[2], "{d:?}");
    }

    #[test]
    fn instance_lists_every_subtree() {
        let v: Value = serde_json::from_str(&instance_json("pruned", 20, 0.5, 0.5, 4, true).unwrap()).unwrap();
        assert_eq!(v["subtrees"].as_array().unwrap().len(), 20);
        assert_eq!(v["host_edges"].as_array().unwrap().len(), 19);
        let alg1: Value = serde_json::from_str(&instance_json("alg1", 20, 0.1, 0.0, 4, false).unwrap()).unwrap();
        assert!(alg1["subtrees"].as_array().unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(report_json("growing", 10, 2.5, 0.0, 1, 0, false).is_err());
        assert!(report_json("nope", 10, 1.0, 0.0, 1, 0, false).is_err());
        assert!(report_json("growing", MAX_N + 1, 1.0, 0.0, 1, 0, false).is_err());
        assert!(instance_json("growing", MAX_DRAW_N + 1, 1.0, 0.0, 0, false).is_err());
        assert!(report_json("alg1", 10, 0.5, 0.0, 0, 0, false).is_err());
    }
}
