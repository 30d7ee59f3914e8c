//! Thin command-line front end over the library pipelines.
//!
//! Exit codes: 0 success, 1 failed assertion (witness separations or
//! stability violations), 2 invalid input with a JSON diagnostic on stderr.

use clap::{Args, Parser, Subcommand, ValueEnum};
use graph_ph::diagram::{Mode, PersistenceDiagram};
use graph_ph::error::Error;
use graph_ph::events::{
    backward_events, extended_events, fb_events, fg_events, forward_events, hourglass_events,
    sigma_tau_events, EventSequence,
};
use graph_ph::filtration::Filtration;
use graph_ph::generators::{grid_graph, random_vertex_filtration, sparse_graph, threshold_schedule, tree_with_chords};
use graph_ph::graph::Graph;
use graph_ph::modes::{engine_diagram, ff_shortcut, forward_persistence};
use graph_ph::oracle::oracle_diagram;
use graph_ph::permutation::Permutation;
use graph_ph::schedule::HourglassSchedule;
use graph_ph::stability::stability_fuzz;
use graph_ph::witness::run_witness_suite;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "ph", version, about = "Persistence of graphs under inclusion and contraction schedules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a persistence diagram with the streaming engines.
    Compute(ComputeArgs),
    /// Compute the same diagram with the brute-force oracle, for diffing.
    Oracle(ComputeArgs),
    /// Bottleneck distance between two diagram files.
    Distance(DistanceArgs),
    /// Run the bundled separation fixtures.
    Witness,
    /// Fuzz the two-function stability bound.
    Stability(StabilityArgs),
    /// Generate synthetic graphs and time the engine phases.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Forward,
    Backward,
    Fb,
    Fg,
    SigmaTau,
    Extended,
    Ff,
    Hourglass,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TimeArg {
    Step,
    Function,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Graph file: {"n": int, "edges": [[u, v], ...]}.
    #[arg(long)]
    graph: String,
    /// Filtration file: {"vertex_values": [...], "edge_values": [...]};
    /// edge values default to the endpoint maximum.
    #[arg(long)]
    filtration: String,
    /// Second filtration file (mode fg).
    #[arg(long)]
    g: Option<String>,
    /// Inclusion-order permutation file, a JSON array (mode sigma-tau).
    #[arg(long)]
    sigma: Option<String>,
    /// Contraction-order permutation file, a JSON array (mode sigma-tau).
    #[arg(long)]
    tau: Option<String>,
    /// Schedule file: [{"op": "include"|"contract", "ic": int}, ...]
    /// (mode hourglass).
    #[arg(long)]
    schedule: Option<String>,
    /// Coordinates to report: combinatorial steps or filtration values.
    #[arg(long, value_enum, default_value = "step")]
    time: TimeArg,
    /// Drop zero-persistence pairs.
    #[arg(long)]
    drop_zero: bool,
    /// Output file; stdout when absent.
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct DistanceArgs {
    #[arg(long)]
    dim: u8,
    /// Remove the single dimension-0 essential pair from each side first.
    #[arg(long)]
    exclude_essential: bool,
    a: String,
    b: String,
}

#[derive(Args)]
struct StabilityArgs {
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Maximum vertex count per trial graph.
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    /// Perturbation radius.
    #[arg(long, default_value_t = 0.5)]
    epsilon: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GeneratorArg {
    Sparse,
    Grid,
    TreeChords,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum, default_value = "sparse")]
    generator: GeneratorArg,
    #[arg(long, default_value_t = 100_000)]
    edges: usize,
    #[arg(long, default_value_t = 2000)]
    cycles: usize,
    #[arg(long, default_value_t = 300)]
    rows: usize,
    #[arg(long, default_value_t = 300)]
    cols: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also generate a size-bounded schedule that contracts whenever the
    /// live simplex count exceeds this threshold.
    #[arg(long)]
    threshold: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(args) => run_compute(args, false),
        Command::Oracle(args) => run_compute(args, true),
        Command::Distance(args) => run_distance(args),
        Command::Witness => return run_witness(),
        Command::Stability(args) => return run_stability(args),
        Command::Bench(args) => run_bench(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", diagnostic(&e));
            ExitCode::from(2)
        }
    }
}

fn diagnostic(e: &Error) -> String {
    serde_json::json!({ "error": e.to_string() }).to_string()
}

fn read(path: &str) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
}

fn load_graph_and_filtration(args: &ComputeArgs) -> Result<(Graph, Filtration), Error> {
    let graph = Graph::from_json(&read(&args.graph)?)?;
    let filtration = Filtration::from_json(&graph, &read(&args.filtration)?)?;
    Ok((graph, filtration))
}

fn events_for(
    args: &ComputeArgs,
    graph: &Graph,
    f: &Filtration,
) -> Result<(EventSequence, Mode), Error> {
    match args.mode {
        ModeArg::Forward => Ok((forward_events(graph, f), Mode::Forward)),
        ModeArg::Backward => Ok((backward_events(graph, f)?, Mode::Backward)),
        ModeArg::Fb => Ok((fb_events(graph, f)?, Mode::Fb)),
        ModeArg::Fg => {
            let path = args
                .g
                .as_ref()
                .ok_or_else(|| Error::MissingValue("--g filtration file".into()))?;
            let g = Filtration::from_json(graph, &read(path)?)?;
            Ok((fg_events(graph, f, &g), Mode::Fg))
        }
        ModeArg::SigmaTau => {
            let sigma_path = args
                .sigma
                .as_ref()
                .ok_or_else(|| Error::MissingValue("--sigma permutation file".into()))?;
            let tau_path = args
                .tau
                .as_ref()
                .ok_or_else(|| Error::MissingValue("--tau permutation file".into()))?;
            let sigma = Permutation::from_json(&read(sigma_path)?)?;
            let tau = Permutation::from_json(&read(tau_path)?)?;
            Ok((sigma_tau_events(graph, f, &sigma, &tau)?, Mode::SigmaTau))
        }
        ModeArg::Extended => Ok((extended_events(graph, f)?, Mode::Extended)),
        ModeArg::Ff => Ok((fg_events(graph, f, f), Mode::Fg)),
        ModeArg::Hourglass => {
            let path = args
                .schedule
                .as_ref()
                .ok_or_else(|| Error::MissingValue("--schedule file".into()))?;
            let schedule = HourglassSchedule::from_json(&read(path)?)?;
            Ok((hourglass_events(graph, f, &schedule)?, Mode::Hourglass))
        }
    }
}

fn run_compute(args: ComputeArgs, use_oracle: bool) -> Result<(), Error> {
    let (graph, f) = load_graph_and_filtration(&args)?;
    let (seq, mode) = events_for(&args, &graph, &f)?;

    let mut diagram = if use_oracle || args.mode == ModeArg::Hourglass {
        oracle_diagram(&graph, &seq, mode)
    } else if args.mode == ModeArg::Forward {
        forward_persistence(&graph, &f)
    } else if args.mode == ModeArg::Ff && !use_oracle {
        ff_shortcut(&graph, &f)?
    } else {
        engine_diagram(&graph, &seq, mode)?
    };

    match args.time {
        TimeArg::Function => {
            if seq.step_values.is_none() {
                return Err(Error::FunctionTimeUndefined(mode.as_str().to_string()));
            }
        }
        TimeArg::Step => {
            for p in &mut diagram.pairs {
                p.birth_value = None;
                p.death_value = None;
            }
            diagram.shift = None;
        }
    }
    if args.drop_zero {
        diagram.drop_zero_length();
    }

    let text = diagram.to_json();
    match &args.output {
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|e| Error::Io(format!("{path}: {e}")))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn run_distance(args: DistanceArgs) -> Result<(), Error> {
    let a = PersistenceDiagram::from_json(&read(&args.a)?)?;
    let b = PersistenceDiagram::from_json(&read(&args.b)?)?;
    let distance = if args.exclude_essential {
        if args.dim != 0 {
            return Err(Error::MissingValue(
                "--exclude-essential applies to dimension 0".into(),
            ));
        }
        graph_ph::metrics::bottleneck_excluding_essential(&a, &b)?
    } else {
        graph_ph::metrics::bottleneck_distance(&a, &b, args.dim)?
    };
    if distance.is_infinite() {
        println!("inf");
    } else {
        println!("{distance}");
    }
    Ok(())
}

fn run_witness() -> ExitCode {
    match run_witness_suite() {
        Ok(checks) => {
            let mut failed = 0;
            for c in &checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                println!("{status}  {} — {}", c.name, c.detail);
                if !c.passed {
                    failed += 1;
                }
            }
            println!(
                "{} checks, {} failed",
                checks.len(),
                failed,
            );
            if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", diagnostic(&e));
            ExitCode::from(2)
        }
    }
}

fn run_stability(args: StabilityArgs) -> ExitCode {
    match stability_fuzz(args.seed, args.trials, args.max_n, args.epsilon) {
        Ok(report) => {
            println!(
                "{} trials, {} violations, max distance/bound ratio {:.4}",
                report.trials,
                report.violations.len(),
                report.max_ratio
            );
            for v in report.violations.iter().take(5) {
                println!(
                    "  violation: trial {} dim {} distance {} > bound {}",
                    v.trial, v.dim, v.distance, v.bound
                );
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", diagnostic(&e));
            ExitCode::from(2)
        }
    }
}

fn run_bench(args: BenchArgs) -> Result<(), Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let graph = match args.generator {
        GeneratorArg::Sparse => sparse_graph(&mut rng, args.edges, args.cycles),
        GeneratorArg::Grid => grid_graph(args.rows, args.cols),
        GeneratorArg::TreeChords => tree_with_chords(&mut rng, args.edges, args.cycles),
    };
    let f = random_vertex_filtration(&mut rng, &graph, 0, 255);
    println!(
        "graph: {} vertices, {} edges, {} levels",
        graph.n_vertices(),
        graph.n_edges(),
        f.n_levels()
    );

    let t = Instant::now();
    let seq = fb_events(&graph, &f)?;
    let sort_time = t.elapsed();

    let n_forward = seq.forward_steps.expect("phase separated");
    let t = Instant::now();
    let forward = graph_ph::forward::run_forward(&graph, &seq.events[..n_forward], 0);
    let forward_time = t.elapsed();
    let n_cycles = forward.basis.columns.len();

    let t = Instant::now();
    let mut state = graph_ph::backward::BackwardState::new(&graph, forward);
    for (offset, event) in seq.events[n_forward..].iter().enumerate() {
        state.apply(event, n_forward + offset)?;
    }
    let stats = state.stats;
    let (pairs, _) = state.finish();
    let backward_time = t.elapsed();

    println!("sort+schedule: {sort_time:?}");
    println!("forward:       {forward_time:?} ({n_cycles} cycles)");
    println!("backward:      {backward_time:?}");
    println!(
        "peak basis columns: {} ({} supernode cycles, {} forward cycles closed)",
        stats.peak_columns, stats.supernode_cycles, stats.forward_cycles_closed
    );
    println!("total pairs: {}", pairs.len());

    if let Some(threshold) = args.threshold {
        let t = Instant::now();
        let (schedule, peak) = threshold_schedule(&graph, &f, threshold);
        let max_ic = graph_ph::complexes::intermediate_complexes(&graph, &f)
            .iter()
            .map(|ic| ic.vertices.len() + ic.edges.len())
            .max()
            .unwrap_or(0);
        println!(
            "threshold schedule ({threshold}): {} ops, peak live {} (bound {} + {} = {}), built in {:?}",
            schedule.ops().len(),
            peak,
            threshold,
            max_ic,
            threshold + max_ic,
            t.elapsed()
        );
    }
    Ok(())
}
