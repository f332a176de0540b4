//! Batch experiments: repeated seeded runs, statistics and output files.
//!
//! Run `i` of an experiment with base seed `s` uses a fresh generator seeded
//! with `s + i`, so any single row can be reproduced on its own.

use std::fs::File;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use rayon::prelude::*;

use crate::baseline_alg1::{self, Alg1Params};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph_analysis::{self, RunReport};
use crate::host_tree::HostTree;
use crate::intersection_builder::{self, Method, PipelineWork};
use crate::io::{self, GraphFormat};
use crate::rng;
use crate::subtree_methods::{ConnectingParams, GrowingParams, PrunedParams};

/// Which generator an experiment runs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Generator {
    Subtrees(Method),
    Alg1 { ubc: f64 },
}

impl Generator {
    pub fn growing(k: usize) -> Self {
        Generator::Subtrees(Method::Growing(GrowingParams { k }))
    }

    pub fn connecting(lambda: f64) -> Self {
        Generator::Subtrees(Method::Connecting(ConnectingParams { lambda }))
    }

    pub fn pruned(f: f64, s: f64) -> Self {
        Generator::Subtrees(Method::Pruned(PrunedParams { f, s }))
    }

    pub fn alg1(ubc: f64) -> Self {
        Generator::Alg1 { ubc }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Generator::Subtrees(Method::Growing(_)) => "growing",
            Generator::Subtrees(Method::Connecting(_)) => "connecting",
            Generator::Subtrees(Method::Pruned(_)) => "pruned",
            Generator::Alg1 { .. } => "alg1",
        }
    }

    /// Parameter column names and display values, in table order.
    pub fn params(&self) -> Vec<(&'static str, String)> {
        match *self {
            Generator::Subtrees(Method::Growing(p)) => vec![("k", p.k.to_string())],
            Generator::Subtrees(Method::Connecting(p)) => vec![("lambda", p.lambda.to_string())],
            Generator::Subtrees(Method::Pruned(p)) => {
                vec![("f", p.f.to_string()), ("s", p.s.to_string())]
            }
            Generator::Alg1 { ubc } => vec![("ubc", ubc.to_string())],
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            Generator::Subtrees(method) => {
                if n == 0 {
                    return Err(Error::invalid("n must be at least 1"));
                }
                method.validate(n)
            }
            Generator::Alg1 { ubc } => Alg1Params { n, ubc: *ubc }.validate(),
        }
    }
}

/// One generated graph with the work counters of the subtree pipeline.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub graph: Graph,
    pub host: Option<HostTree>,
    pub work: Option<PipelineWork>,
}

pub fn run_once(n: usize, generator: Generator, seed: u64, connect: bool) -> Result<RunOutcome> {
    let mut rng = rng::from_seed(seed);
    match generator {
        Generator::Subtrees(method) => {
            let out = intersection_builder::chordal_gen(n, method, &mut rng, connect)?;
            Ok(RunOutcome {
                graph: out.graph,
                host: Some(out.host),
                work: Some(out.work),
            })
        }
        Generator::Alg1 { ubc } => {
            // Always connected; `connect` has nothing to do.
            let graph = baseline_alg1::generate_alg1(Alg1Params { n, ubc }, &mut rng)?;
            Ok(RunOutcome {
                graph,
                host: None,
                work: None,
            })
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub n: usize,
    pub generator: Generator,
    pub runs: usize,
    pub seed: u64,
    pub connect: bool,
    pub graph_out: Option<PathBuf>,
    pub graph_format: GraphFormat,
    pub tree_out: Option<PathBuf>,
    pub stats_out: Option<PathBuf>,
    pub hist_out: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn new(n: usize, generator: Generator) -> Self {
        ExperimentConfig {
            n,
            generator,
            runs: 10,
            seed: 0,
            connect: false,
            graph_out: None,
            graph_format: GraphFormat::EdgeList,
            tree_out: None,
            stats_out: None,
            hist_out: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::invalid("runs must be at least 1"));
        }
        self.generator.validate(self.n)
    }
}

#[derive(Clone, Debug)]
pub struct ExperimentOutput {
    pub runs: Vec<RunReport>,
    pub aggregate: RunReport,
    pub files: Vec<PathBuf>,
}

/// `path` itself for single-run experiments, otherwise `stem.run<i>.ext`.
pub fn run_path(path: &Path, run: usize, runs: usize) -> PathBuf {
    if runs == 1 {
        return path.to_path_buf();
    }
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}.run{run}.{}", ext.to_string_lossy()),
        None => format!("{stem}.run{run}"),
    };
    path.with_file_name(name)
}

/// Sibling of the stats file holding per-run rows at full precision.
pub fn raw_stats_path(stats: &Path) -> PathBuf {
    let stem = stats.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    stats.with_file_name(format!("{stem}.raw.csv"))
}

pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentOutput> {
    config.validate()?;
    let writes = Mutex::new(Vec::<PathBuf>::new());

    let reports: Vec<RunReport> = (0..config.runs)
        .into_par_iter()
        .map(|i| -> Result<RunReport> {
            let outcome = run_once(config.n, config.generator, config.seed + i as u64, config.connect)?;
            let report = graph_analysis::run_report(&outcome.graph)?;
            if config.graph_out.is_some() || config.tree_out.is_some() {
                let mut files = writes.lock().expect("writer lock");
                if let Some(path) = &config.graph_out {
                    let path = run_path(path, i, config.runs);
                    io::emit_graph(&outcome.graph, config.graph_format, &path)?;
                    files.push(path);
                }
                if let (Some(path), Some(host)) = (&config.tree_out, &outcome.host) {
                    let path = run_path(path, i, config.runs);
                    io::emit_tree(host, config.graph_format, &path)?;
                    files.push(path);
                }
            }
            Ok(report)
        })
        .collect::<Result<_>>()?;

    let aggregate = graph_analysis::aggregate_reports(&reports)?;
    let mut files = writes.into_inner().expect("writer lock");
    files.sort();
    if let Some(path) = &config.stats_out {
        write_stats(path, config, &aggregate)?;
        files.push(path.clone());
        let raw = raw_stats_path(path);
        write_raw_stats(&raw, config, &reports, &aggregate)?;
        files.push(raw);
    }
    if let Some(path) = &config.hist_out {
        write_histogram(path, &aggregate)?;
        files.push(path.clone());
    }
    Ok(ExperimentOutput {
        runs: reports,
        aggregate,
        files,
    })
}

const STAT_COLUMNS: [&str; 8] = [
    "density",
    "m",
    "components",
    "clique_count",
    "clique_min",
    "clique_max",
    "clique_mean",
    "clique_sd",
];

fn header(generator: &Generator) -> Vec<String> {
    let mut cols = vec!["n".to_string()];
    cols.extend(generator.params().into_iter().map(|(name, _)| name.to_string()));
    cols.extend(STAT_COLUMNS.iter().map(|c| c.to_string()));
    cols
}

fn stat_values(r: &RunReport) -> [f64; 8] {
    [
        r.density,
        r.m,
        r.component_count,
        r.clique_count,
        r.clique_min,
        r.clique_max,
        r.clique_mean,
        r.clique_sd,
    ]
}

/// Table row: density to three decimals, the other statistics to one.
pub fn table_row(config: &ExperimentConfig, r: &RunReport) -> Vec<String> {
    let mut row = vec![config.n.to_string()];
    row.extend(config.generator.params().into_iter().map(|(_, v)| v));
    let values = stat_values(r);
    row.push(format!("{:.3}", values[0]));
    row.extend(values[1..].iter().map(|v| format!("{v:.1}")));
    row
}

fn write_stats(path: &Path, config: &ExperimentConfig, aggregate: &RunReport) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(header(&config.generator))?;
    w.write_record(table_row(config, aggregate))?;
    w.flush()?;
    Ok(())
}

fn write_raw_stats(
    path: &Path,
    config: &ExperimentConfig,
    reports: &[RunReport],
    aggregate: &RunReport,
) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    let mut cols = vec!["run".to_string(), "seed".to_string()];
    cols.extend(header(&config.generator));
    w.write_record(&cols)?;
    let raw_row = |label: String, seed: String, r: &RunReport| {
        let mut row = vec![label, seed, config.n.to_string()];
        row.extend(config.generator.params().into_iter().map(|(_, v)| v));
        row.extend(stat_values(r).iter().map(|v| v.to_string()));
        row
    };
    for (i, r) in reports.iter().enumerate() {
        w.write_record(raw_row(i.to_string(), (config.seed + i as u64).to_string(), r))?;
    }
    w.write_record(raw_row("mean".into(), String::new(), aggregate))?;
    w.flush()?;
    Ok(())
}

fn write_histogram(path: &Path, aggregate: &RunReport) -> Result<()> {
    let bins = aggregate.histogram_bins();
    let mut out = File::create(path)?;
    serde_json::to_writer_pretty(&mut out, &bins)?;
    writeln!(out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn run_paths() {
        assert_eq!(run_path(Path::new("out/g.txt"), 3, 1), PathBuf::from("out/g.txt"));
        assert_eq!(run_path(Path::new("out/g.txt"), 3, 10), PathBuf::from("out/g.run3.txt"));
        assert_eq!(run_path(Path::new("g"), 0, 2), PathBuf::from("g.run0"));
        assert_eq!(raw_stats_path(Path::new("a/s.csv")), PathBuf::from("a/s.raw.csv"));
    }

    #[test]
    fn pruned_without_deletions_is_complete() {
        let mut config = ExperimentConfig::new(40, Generator::pruned(0.0, 0.5));
        config.runs = 1;
        let out = run_experiment(&config).unwrap();
        assert_eq!(out.aggregate.density, 1.0);
        assert_eq!(table_row(&config, &out.aggregate)[3], "1.000");
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut config = ExperimentConfig::new(10, Generator::growing(3));
        config.runs = 0;
        assert!(run_experiment(&config).is_err());
        assert!(run_experiment(&ExperimentConfig::new(10, Generator::growing(11))).is_err());
        assert!(run_experiment(&ExperimentConfig::new(0, Generator::alg1(0.1))).is_err());
        assert!(run_experiment(&ExperimentConfig::new(10, Generator::connecting(-1.0))).is_err());
    }

    #[test]
    fn aggregate_is_reproducible() {
        let config = ExperimentConfig::new(120, Generator::connecting(1.5));
        let a = run_experiment(&config).unwrap();
        let b = run_experiment(&config).unwrap();
        assert_eq!(a.runs, b.runs);
        assert_eq!(a.aggregate, b.aggregate);
        assert_eq!(a.runs.len(), 10);
    }
}
