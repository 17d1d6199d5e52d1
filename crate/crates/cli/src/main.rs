//! `voltpath`: energetic shortest paths from the command line.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 bad usage, 3 unreadable or
//! invalid input, 4 negative cycle, 5 target unreachable, 6 solvers
//! disagree with the oracles.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use voltpath::io::{allpairs_table, beta_table, parse_problem, render, serialize_problem, solve_table, Format, ProblemFile, Report};
use voltpath::solvers::{
    all_pairs_with, compute_potential, e_bellman_ford, e_dijkstra, min_initial_charge, single_source, Algorithm,
    NegativeCycleReport, Potential,
};
use voltpath::testkit::{audit, generate, small_instance, GeneratorSpec, Topology};
use voltpath::{preprocess_costs, BatteryConfig, Capacity, Error, Graph};

#[derive(Parser)]
#[command(name = "voltpath", version, about = "Energetic shortest paths for battery-constrained vehicles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Energetic cost, final charge and predecessor of every vertex from a source.
    Solve(SolveArgs),
    /// Energetic cost between every ordered pair of vertices.
    Allpairs(ProblemArgs),
    /// Minimum initial charge needed at every vertex to reach a target.
    Beta(BetaArgs),
    /// Generate a random instance without negative cycles.
    Gen(GenArgs),
    /// Compare the solvers against the brute-force oracles.
    Check(CheckArgs),
    /// Time e-BF and e-Dijkstra on generated graphs; prints TSV.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Ebf,
    Edijkstra,
    Auto,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Ebf => Algorithm::BellmanFord,
            AlgorithmArg::Edijkstra => Algorithm::Dijkstra,
            AlgorithmArg::Auto => Algorithm::Auto,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Tsv,
    Json,
}

#[derive(Args)]
struct ProblemArgs {
    /// Problem file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    graph: PathBuf,
    /// Battery capacity; overrides the file's `b` line.
    #[arg(long)]
    battery: Option<i64>,
    /// Initial charge; defaults to the file's value or a full battery.
    #[arg(long)]
    initial: Option<i64>,
    #[arg(long, value_enum, default_value = "auto")]
    algorithm: AlgorithmArg,
    #[arg(long, value_enum, default_value = "tsv")]
    format: FormatArg,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    /// 1-based source vertex; defaults to the file's `s` line.
    #[arg(long)]
    source: Option<usize>,
    /// 1-based target vertex; prints the path to it.
    #[arg(long)]
    target: Option<usize>,
}

#[derive(Args)]
struct BetaArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    #[arg(long)]
    target: Option<usize>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 100)]
    battery: i64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Potentials are drawn from [-P, P]; defaults to the capacity.
    #[arg(long)]
    potential_range: Option<i64>,
    /// Reduced costs are drawn from [0, R]; defaults to the capacity.
    #[arg(long)]
    reduced_range: Option<i64>,
    /// Put vertices on a ring and keep arcs within this many steps.
    #[arg(long)]
    ring: Option<usize>,
    /// 1-based source to record in the file.
    #[arg(long)]
    source: Option<usize>,
}

#[derive(Args)]
struct CheckArgs {
    /// Audit this file instead of generated instances.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    battery: Option<i64>,
    #[arg(long)]
    initial: Option<i64>,
    #[arg(long, default_value_t = 200)]
    instances: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest vertex count of generated instances.
    #[arg(long, default_value_t = 8)]
    n: usize,
    /// Largest arc count of generated instances.
    #[arg(long, default_value_t = 16)]
    m: usize,
}

#[derive(Args)]
struct BenchArgs {
    /// Vertex counts, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "1000,10000")]
    n: Vec<usize>,
    /// Arcs per vertex.
    #[arg(long, default_value_t = 4)]
    density: usize,
    /// Arc counts, comma separated; overrides the density.
    #[arg(long, value_delimiter = ',')]
    m: Vec<usize>,
    #[arg(long, default_value_t = 5)]
    reps: usize,
    #[arg(long, default_value_t = 1_000_000)]
    battery: i64,
    #[arg(long, default_value_t = 1000)]
    potential_range: i64,
    #[arg(long, default_value_t = 1000)]
    reduced_range: i64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    ring: Option<usize>,
}

enum Failure {
    Io(String),
    Usage(String),
    Input(String),
    NegativeCycle(String),
    Unreachable(String),
    Disagree(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Input(_) => 3,
            Failure::NegativeCycle(_) => 4,
            Failure::Unreachable(_) => 5,
            Failure::Disagree(_) => 6,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Io(m)
            | Failure::Usage(m)
            | Failure::Input(m)
            | Failure::NegativeCycle(m)
            | Failure::Unreachable(m)
            | Failure::Disagree(m) => m,
        }
    }
}

fn cycle_listing(report: &NegativeCycleReport) -> String {
    let vertices: Vec<String> = report.vertices.iter().map(|v| (v + 1).to_string()).collect();
    format!(
        "negative cycle of cost {} through vertices {}",
        report.total_cost,
        vertices.join(" ")
    )
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NegativeCycle(r) => Failure::NegativeCycle(cycle_listing(&r)),
            Error::NegativeSelfLoop { vertex, cost, .. } => {
                Failure::NegativeCycle(format!("negative self-loop of cost {cost} at vertex {}", vertex + 1))
            }
            Error::VertexOutOfRange { vertex, n } => {
                Failure::Usage(format!("vertex {} is outside 1..={n}", vertex + 1))
            }
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("reading {}: {e}", path.display())))
    }
}

fn emit(out: &mut impl Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes()).map_err(|e| Failure::Io(e.to_string()))
}

fn vertex_arg(id: usize, n: usize, what: &str) -> Result<usize, Failure> {
    if id == 0 || id > n {
        return Err(Failure::Usage(format!("{what} {id} is outside 1..={n}")));
    }
    Ok(id - 1)
}

struct Loaded {
    file: ProblemFile,
    /// Costs clipped into [-B, B].
    graph: Graph,
    battery: BatteryConfig,
}

fn battery_from(file: Option<BatteryConfig>, capacity: Option<i64>, initial: Option<i64>) -> Result<BatteryConfig, Failure> {
    let cap = capacity
        .or(file.map(|b| b.capacity().get()))
        .ok_or_else(|| Failure::Usage("no battery capacity: add a `b` line or pass --battery".into()))?;
    let initial = initial.unwrap_or(match (file, capacity) {
        (Some(b), None) => b.initial(),
        _ => cap,
    });
    BatteryConfig::new(cap, initial).map_err(|e| Failure::Usage(e.to_string()))
}

fn load(args: &ProblemArgs) -> Result<Loaded, Failure> {
    let file = parse_problem(&read_input(&args.graph)?)?;
    let battery = battery_from(file.battery, args.battery, args.initial)?;
    let graph = preprocess_costs(&file.graph, battery.capacity())?;
    Ok(Loaded { file, graph, battery })
}

fn format_of(f: FormatArg) -> Format {
    match f {
        FormatArg::Tsv => Format::Tsv,
        FormatArg::Json => Format::Json,
    }
}

fn cmd_solve(args: &SolveArgs, out: &mut impl Write) -> Outcome {
    let loaded = load(&args.problem)?;
    let n = loaded.graph.n();
    let source = match args.source {
        Some(s) => vertex_arg(s, n, "source")?,
        None => loaded
            .file
            .source
            .ok_or_else(|| Failure::Usage("no source: add an `s` line or pass --source".into()))?,
    };
    let target = match args.target {
        Some(t) => Some(vertex_arg(t, n, "target")?),
        None => loaded.file.target,
    };
    let result = single_source(&loaded.graph, loaded.battery, source, args.problem.algorithm.into())?;
    let path = target.and_then(|t| result.path_to(t)).map(|p| p.vertices(&loaded.graph));
    let report = Report {
        table: solve_table(&result),
        path,
    };
    emit(out, &render(&report, format_of(args.problem.format)))?;
    match target {
        Some(t) if !result.energy(t).is_finite() => Err(Failure::Unreachable(format!(
            "vertex {} is unreachable from {}",
            t + 1,
            source + 1
        ))),
        _ => Ok(()),
    }
}

fn cmd_allpairs(args: &ProblemArgs, out: &mut impl Write) -> Outcome {
    let loaded = load(args)?;
    if loaded.battery.initial_depletion() != 0 {
        return Err(Failure::Usage("allpairs assumes a full battery; drop --initial".into()));
    }
    let potential = match Algorithm::from(args.algorithm) {
        Algorithm::Auto if !loaded.graph.has_negative_cost() => Potential::zero(&loaded.graph)?,
        _ => compute_potential(&loaded.graph)?,
    };
    let all = all_pairs_with(&loaded.graph, loaded.battery.capacity(), &potential)?;
    let report = Report {
        table: allpairs_table(&all),
        path: None,
    };
    emit(out, &render(&report, format_of(args.format)))
}

fn cmd_beta(args: &BetaArgs, out: &mut impl Write) -> Outcome {
    let loaded = load(&args.problem)?;
    let target = match args.target {
        Some(t) => vertex_arg(t, loaded.graph.n(), "target")?,
        None => loaded
            .file
            .target
            .ok_or_else(|| Failure::Usage("no target: add a `t` line or pass --target".into()))?,
    };
    let charges = min_initial_charge(&loaded.graph, loaded.battery.capacity(), target, args.problem.algorithm.into())?;
    let report = Report {
        table: beta_table(&charges),
        path: None,
    };
    emit(out, &render(&report, format_of(args.problem.format)))
}

fn cmd_gen(args: &GenArgs, out: &mut impl Write) -> Outcome {
    let spec = GeneratorSpec {
        potential_range: args.potential_range.unwrap_or(args.battery),
        reduced_cost_range: args.reduced_range.unwrap_or(args.battery),
        topology: args.ring.map_or(Topology::Uniform, |span| Topology::Ring { span }),
        ..GeneratorSpec::new(args.n, args.m, args.battery, args.seed)
    };
    let inst = generate(&spec).map_err(|e| Failure::Usage(e.to_string()))?;
    let source = args.source.map(|s| vertex_arg(s, args.n, "source")).transpose()?;
    let file = ProblemFile {
        battery: Some(BatteryConfig::full(inst.capacity)),
        source,
        ..ProblemFile::new(inst.graph)
    };
    emit(out, &serialize_problem(&file))
}

fn cmd_check(args: &CheckArgs, out: &mut impl Write) -> Outcome {
    let mut agree = 0u64;
    let mut total = 0u64;
    let mut first_problem = None;
    let mut tally = |a: voltpath::testkit::Audit| {
        total += 1;
        if a.agrees() {
            agree += 1;
        } else if first_problem.is_none() {
            first_problem = a.mismatches.first().cloned();
        }
    };
    if let Some(path) = &args.graph {
        let file = parse_problem(&read_input(path)?)?;
        let battery = battery_from(file.battery, args.battery, args.initial)?;
        tally(audit(&file.graph, battery)?);
    } else {
        for i in 0..args.instances {
            let inst = small_instance(args.seed.wrapping_add(i), args.n, args.m, args.battery.unwrap_or(8))
                .map_err(|e| Failure::Usage(e.to_string()))?;
            tally(audit(&inst.graph, BatteryConfig::full(inst.capacity))?);
        }
    }
    emit(out, &format!("{agree}/{total} agree\n"))?;
    match first_problem {
        Some(p) => Err(Failure::Disagree(p)),
        None => Ok(()),
    }
}

fn median_seconds(reps: usize, mut run: impl FnMut()) -> f64 {
    let mut times: Vec<f64> = (0..reps.max(1))
        .map(|_| {
            let start = Instant::now();
            run();
            start.elapsed().as_secs_f64()
        })
        .collect();
    times.sort_by(f64::total_cmp);
    times[times.len() / 2]
}

fn cmd_bench(args: &BenchArgs, out: &mut impl Write) -> Outcome {
    if !args.m.is_empty() && args.m.len() != args.n.len() {
        return Err(Failure::Usage("--m needs one value per --n".into()));
    }
    let capacity = Capacity::new(args.battery).map_err(|e| Failure::Usage(e.to_string()))?;
    emit(out, "n\tm\talgorithm\tseconds\n")?;
    for (i, &n) in args.n.iter().enumerate() {
        let m = args.m.get(i).copied().unwrap_or(n * args.density);
        let spec = GeneratorSpec {
            potential_range: args.potential_range,
            reduced_cost_range: args.reduced_range,
            topology: args.ring.map_or(Topology::Uniform, |span| Topology::Ring { span }),
            ..GeneratorSpec::new(n, m, args.battery, args.seed)
        };
        let inst = generate(&spec).map_err(|e| Failure::Usage(e.to_string()))?;
        let g = &inst.graph;
        let m = g.m();
        let mut failure = None;
        let potential = median_seconds(args.reps, || {
            if let Err(e) = compute_potential(g) {
                failure = Some(e);
            }
        });
        let p = compute_potential(g)?;
        let ebf = median_seconds(args.reps, || {
            if let Err(e) = e_bellman_ford(g, capacity, 0) {
                failure = Some(e);
            }
        });
        let edij = median_seconds(args.reps, || {
            if let Err(e) = e_dijkstra(g, &p, capacity, 0) {
                failure = Some(e);
            }
        });
        if let Some(e) = failure {
            return Err(e.into());
        }
        for (name, secs) in [("potential", potential), ("ebf", ebf), ("edijkstra", edij)] {
            emit(out, &format!("{n}\t{m}\t{name}\t{secs:.6}\n"))?;
        }
    }
    Ok(())
}

fn configure_threads() {
    if let Some(k) = std::env::var("VOLTPATH_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // an existing global pool is fine too
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let outcome = match &cli.command {
        Command::Solve(a) => cmd_solve(a, &mut out),
        Command::Allpairs(a) => cmd_allpairs(a, &mut out),
        Command::Beta(a) => cmd_beta(a, &mut out),
        Command::Gen(a) => cmd_gen(a, &mut out),
        Command::Check(a) => cmd_check(a, &mut out),
        Command::Bench(a) => cmd_bench(a, &mut out),
    };
    let flushed = out.flush();
    match outcome {
        Ok(()) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(()) => {
            eprintln!("voltpath: {}", flushed.unwrap_err());
            ExitCode::from(1)
        }
        Err(f) => {
            eprintln!("voltpath: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
