use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use chordgen::experiment::{self, ExperimentConfig, Generator};
use chordgen::graph_analysis;
use chordgen::intersection_builder;
use chordgen::io::{self, GraphFormat};
use chordgen::oracle;

#[derive(Parser, Debug)]
#[command(name = "chordgen", version, about = "Random chordal graphs from subtrees of a random tree")]
#[command(args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    #[command(flatten)]
    generate: GenerateArgs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Debugging helpers backed by brute-force reference code.
    #[command(hide = true)]
    Oracle(OracleArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MethodArg {
    Growing,
    Connecting,
    Pruned,
    Alg1,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FormatArg {
    Edgelist,
    Dimacs,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => GraphFormat::EdgeList,
            FormatArg::Dimacs => GraphFormat::Dimacs,
        }
    }
}

#[derive(Args, Debug)]
struct GenerateArgs {
    /// Number of vertices (and host tree nodes).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Subtree size bound for `growing`.
    #[arg(long)]
    k: Option<usize>,
    /// Poisson mean for `connecting`.
    #[arg(long)]
    lambda: Option<f64>,
    /// Fraction of host edges deleted by `pruned`.
    #[arg(long)]
    f: Option<f64>,
    /// Selection barrier for `pruned`.
    #[arg(long)]
    s: Option<f64>,
    /// Upper bound coefficient for `alg1`.
    #[arg(long)]
    ubc: Option<f64>,
    #[arg(long, default_value_t = 10)]
    runs: usize,
    /// Base seed; run i uses seed + i.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Patch each output into a connected graph.
    #[arg(long)]
    connect: bool,
    /// Graph file; with several runs, `stem.run<i>.ext` per run.
    #[arg(long)]
    graph_out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    graph_format: FormatArg,
    /// Host tree file, named like --graph-out.
    #[arg(long)]
    tree_out: Option<PathBuf>,
    /// Aggregate stats CSV; per-run rows go to `stem.raw.csv`.
    #[arg(long)]
    stats_out: Option<PathBuf>,
    /// Averaged clique-size histogram as JSON.
    #[arg(long)]
    hist_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OracleArgs {
    /// Build the lower-bound instance for this p and report its sizes.
    #[arg(long)]
    lower_bound: Option<usize>,
    /// Check a graph file against the brute-force chordality and clique oracles.
    #[arg(long)]
    check: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: FormatArg,
}

fn required<T>(value: Option<T>, flag: &str, method: &str) -> Result<T> {
    value.with_context(|| format!("--{flag} is required for --method {method}"))
}

fn generator(args: &GenerateArgs) -> Result<Generator> {
    let method = args.method.context("--method is required")?;
    let extra = |flag: &str, present: bool| -> Result<()> {
        if present {
            bail!("--{flag} does not apply to this method");
        }
        Ok(())
    };
    Ok(match method {
        MethodArg::Growing => {
            extra("lambda", args.lambda.is_some())?;
            extra("f", args.f.is_some() || args.s.is_some())?;
            extra("ubc", args.ubc.is_some())?;
            Generator::growing(required(args.k, "k", "growing")?)
        }
        MethodArg::Connecting => {
            extra("k", args.k.is_some())?;
            extra("f", args.f.is_some() || args.s.is_some())?;
            extra("ubc", args.ubc.is_some())?;
            Generator::connecting(required(args.lambda, "lambda", "connecting")?)
        }
        MethodArg::Pruned => {
            extra("k", args.k.is_some())?;
            extra("lambda", args.lambda.is_some())?;
            extra("ubc", args.ubc.is_some())?;
            Generator::pruned(required(args.f, "f", "pruned")?, required(args.s, "s", "pruned")?)
        }
        MethodArg::Alg1 => {
            extra("k", args.k.is_some())?;
            extra("lambda", args.lambda.is_some())?;
            extra("f", args.f.is_some() || args.s.is_some())?;
            Generator::alg1(required(args.ubc, "ubc", "alg1")?)
        }
    })
}

fn config(args: &GenerateArgs) -> Result<ExperimentConfig> {
    let n = args.n.context("--n is required")?;
    let generator = generator(args)?;
    if args.connect && matches!(generator, Generator::Alg1 { .. }) {
        bail!("--connect does not apply to --method alg1");
    }
    if args.tree_out.is_some() && matches!(generator, Generator::Alg1 { .. }) {
        bail!("--tree-out does not apply to --method alg1");
    }
    let mut config = ExperimentConfig::new(n, generator);
    config.runs = args.runs;
    config.seed = args.seed;
    config.connect = args.connect;
    config.graph_out = args.graph_out.clone();
    config.graph_format = args.graph_format.into();
    config.tree_out = args.tree_out.clone();
    config.stats_out = args.stats_out.clone();
    config.hist_out = args.hist_out.clone();
    config.validate()?;
    Ok(config)
}

fn generate(args: &GenerateArgs) -> Result<()> {
    let config = config(args).map_err(Usage)?;
    let out = experiment::run_experiment(&config)?;
    let columns: Vec<String> = std::iter::once("n".to_string())
        .chain(config.generator.params().into_iter().map(|(c, _)| c.to_string()))
        .chain(
            ["density", "m", "components", "clique_count", "clique_min", "clique_max", "clique_mean", "clique_sd"]
                .map(String::from),
        )
        .collect();
    println!("{}", columns.join("\t"));
    println!("{}", experiment::table_row(&config, &out.aggregate).join("\t"));
    for path in &out.files {
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}

fn run_oracle(args: &OracleArgs) -> Result<()> {
    if args.lower_bound.is_none() && args.check.is_none() {
        return Err(Usage(anyhow::anyhow!("oracle needs --lower-bound or --check")).into());
    }
    if let Some(p) = args.lower_bound {
        let inst = oracle::lower_bound_instance(p).map_err(|e| Usage(e.into()))?;
        let graph = intersection_builder::intersection_graph(&inst.host, &inst.subtrees);
        let (components, _) = graph_analysis::connected_components(&graph);
        println!(
            "p={p} n={} m={} expected_m={} total_size={} components={}",
            graph.n(),
            graph.m(),
            inst.expected_m,
            inst.expected_total_size,
            components
        );
        if graph.m() != inst.expected_m {
            bail!("edge count {} differs from {}", graph.m(), inst.expected_m);
        }
    }
    if let Some(path) = &args.check {
        let graph = io::parse_graph(path, args.format.into())?;
        let fast = graph_analysis::is_chordal(&graph);
        let slow = oracle::brute_force_chordal(&graph)?;
        println!("chordal fast={fast} brute_force={slow}");
        if fast != slow {
            bail!("chordality tests disagree");
        }
        if fast {
            let mut a = graph_analysis::maximal_cliques(&graph)?;
            let mut b = oracle::brute_force_cliques(&graph)?;
            a.iter_mut().for_each(|c| c.sort_unstable());
            a.sort();
            b.sort();
            println!("cliques fast={} brute_force={}", a.len(), b.len());
            if a != b {
                bail!("maximal clique lists disagree");
            }
        }
    }
    Ok(())
}

/// Marks an error as a usage problem (exit code 2).
#[derive(Debug)]
struct Usage(anyhow::Error);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for Usage {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Some(Command::Oracle(args)) => run_oracle(args),
        None => generate(&cli.generate),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            if err.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
