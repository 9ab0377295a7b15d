//! Command-line front end: build codes, compute k-metric dimensions,
//! construct covering designs, decode words, and run seeded channel
//! simulations. Outputs are human tables by default and JSON with `--json`.
//!
//! Exit codes: 0 success, 2 invalid parameters, 3 verification or decode
//! failure, 4 instance too large for exhaustive search, 1 I/O trouble.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use gkcode::codec::{DecodeOutcome, GraphCode, ReceivedWord};
use gkcode::designs::{
    greedy_covering, minimal_covering_bruteforce, petrov_covering, schonheim_bound,
    uncovering_for_code, verify_covering, verify_uncovering, CoveringDesign, DesignCheck,
    Uncovering,
};
use gkcode::graphs::{
    all_pairs_distances, build_cycle, build_grid, build_path, parse_graph_text, Graph,
};
use gkcode::resolving::{
    construct_basis, dimension_report, DimSource, ReportOptions, DEFAULT_BRUTE_FORCE_CAP,
};
use gkcode::Error as LibError;

#[derive(Parser)]
#[command(
    name = "gkcode",
    version,
    about = "Error-correcting codes from k-resolving sets of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute k-metric dimensions and witness bases
    Kdim(KdimArgs),
    /// Build a code from a graph and k
    Build(BuildArgs),
    /// Decode a received word against a code file
    Decode(DecodeArgs),
    /// Run seeded encode -> channel -> decode trials
    Simulate(SimulateArgs),
    /// Construct, bound, or verify covering designs
    Covering(CoveringArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphArgs {
    /// Path on N vertices
    #[arg(long, value_name = "N")]
    path: Option<usize>,
    /// Cycle on N vertices
    #[arg(long, value_name = "N")]
    cycle: Option<usize>,
    /// Grid with S rows and T columns
    #[arg(long, num_args = 2, value_names = ["S", "T"])]
    grid: Option<Vec<usize>>,
    /// Plain-text graph file: first line n, then one `u v` edge per line
    #[arg(long, value_name = "FILE")]
    graph_file: Option<PathBuf>,
}

impl GraphArgs {
    fn build(&self) -> Result<Graph, CliError> {
        if let Some(n) = self.path {
            return Ok(build_path(n)?);
        }
        if let Some(n) = self.cycle {
            return Ok(build_cycle(n)?);
        }
        if let Some(st) = &self.grid {
            return Ok(build_grid(st[0], st[1])?);
        }
        let file = self.graph_file.as_ref().expect("clap enforces the group");
        Ok(parse_graph_text(&fs::read_to_string(file)?)?)
    }
}

#[derive(Args)]
struct KdimArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Single k or inclusive range, e.g. `4` or `1..4`
    #[arg(long, value_name = "K|A..B")]
    k: String,
    /// Report closed-form constructions only; skip brute-force confirmation
    #[arg(long)]
    construct_only: bool,
    /// Vertex cap for the exhaustive search
    #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
    brute_cap: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long)]
    k: usize,
    /// Write the code file here
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Print the code file JSON instead of the table
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DecodeArgs {
    /// Code file produced by `build`
    #[arg(long, value_name = "FILE")]
    code: PathBuf,
    /// Error budget the uncovering must handle
    #[arg(long)]
    rprime: usize,
    /// Uncovering file; constructed on the fly when absent
    #[arg(long, value_name = "FILE")]
    uncovering_file: Option<PathBuf>,
    #[arg(long)]
    json: bool,
    /// Received symbols, one per code position
    #[arg(required = true, value_name = "SYMBOL")]
    word: Vec<u32>,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long)]
    k: usize,
    /// Errors injected per trial (also the uncovering's error budget)
    #[arg(long)]
    errors: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write one CSV row per trial
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
    /// Include mean wall-clock per decode in the report (breaks
    /// byte-for-byte determinism of the JSON output)
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true)))]
struct CoveringArgs {
    /// Partition construction over nu = A*KAPPA + B points (needs --tau)
    #[arg(long, num_args = 3, value_names = ["A", "B", "KAPPA"], allow_negative_numbers = true, group = "mode")]
    petrov: Option<Vec<i64>>,
    /// Exhaustive minimal covering for NU KAPPA TAU
    #[arg(long, num_args = 3, value_names = ["NU", "KAPPA", "TAU"], group = "mode")]
    brute: Option<Vec<usize>>,
    /// Greedy covering for NU KAPPA TAU
    #[arg(long, num_args = 3, value_names = ["NU", "KAPPA", "TAU"], group = "mode")]
    greedy: Option<Vec<usize>>,
    /// Print the Schönheim bound for NU KAPPA TAU
    #[arg(long, num_args = 3, value_names = ["NU", "KAPPA", "TAU"], group = "mode")]
    bound: Option<Vec<usize>>,
    /// Coverage strength for --petrov
    #[arg(long)]
    tau: Option<usize>,
    /// Write the covering design here
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Also write the complemented uncovering here
    #[arg(long, value_name = "FILE")]
    uncovering_out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug)]
enum CliError {
    Lib(LibError),
    Io(std::io::Error),
    Usage(String),
}

impl From<LibError> for CliError {
    fn from(e: LibError) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) => match e {
                LibError::InvalidParameter(_)
                | LibError::DisconnectedGraph
                | LibError::NoKResolvingSet { .. }
                | LibError::UnsupportedK { .. }
                | LibError::ParametersBelowThreshold(_) => 2,
                LibError::NotKResolving { .. } | LibError::ConstructionUnavailable(_) => 3,
                LibError::InstanceTooLarge(_) => 4,
            },
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

const SUCCESS: ExitCode = ExitCode::SUCCESS;
const VERIFY_FAILURE: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Kdim(args) => cmd_kdim(args),
        Command::Build(args) => cmd_build(args),
        Command::Decode(args) => cmd_decode(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Covering(args) => cmd_covering(args),
    }
}

/// Accepts `4` or an inclusive range `1..4`.
fn parse_k_spec(spec: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("cannot parse k specification `{spec}`"));
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi
            .trim()
            .trim_start_matches('=')
            .parse()
            .map_err(|_| bad())?;
        if lo > hi {
            return Err(CliError::Usage(format!("empty k range `{spec}`")));
        }
        Ok((lo..=hi).collect())
    } else {
        Ok(vec![spec.trim().parse().map_err(|_| bad())?])
    }
}

fn cmd_kdim(args: KdimArgs) -> Result<ExitCode, CliError> {
    let graph = args.graph.build()?;
    let ks = parse_k_spec(&args.k)?;
    let options = ReportOptions {
        construct_only: args.construct_only,
        brute_cap: args.brute_cap,
    };
    let report = dimension_report(&graph, &ks, &options)?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        println!("graph: {}", report.graph);
        println!("max k: {}", report.max_k);
        println!("{:>4} {:>6}  {:<12} basis", "k", "dim_k", "source");
        for entry in &report.entries {
            let source = match entry.source {
                DimSource::Construction => "construction",
                DimSource::BruteForce => "brute-force",
                DimSource::Confirmed => "confirmed",
            };
            println!(
                "{:>4} {:>6}  {:<12} {:?}",
                entry.k, entry.dim, source, entry.basis.vertices
            );
        }
    }
    Ok(SUCCESS)
}

fn cmd_build(args: BuildArgs) -> Result<ExitCode, CliError> {
    let graph = args.graph.build()?;
    let dm = all_pairs_distances(&graph);
    let basis = construct_basis(&graph, &dm, args.k)?;
    let code = GraphCode::build(&dm, &basis)?;

    if let Some(path) = &args.out {
        fs::write(path, code.to_json())?;
    }
    if args.json {
        println!("{}", code.to_json());
    } else {
        println!(
            "graph: {}  n: {}  length: {}  alphabet: {}  min distance: {}  corrects: {}",
            code.graph(),
            code.size(),
            code.length(),
            code.alphabet_size(),
            code.min_distance(),
            code.correction_capability()
        );
        println!("resolving set: {:?}", code.resolving_set().vertices);
        for (u, row) in code.matrix().iter().enumerate() {
            let symbols: Vec<String> = row.iter().map(u32::to_string).collect();
            println!("{u:>4} | {}", symbols.join(" "));
        }
    }
    Ok(SUCCESS)
}

fn load_uncovering(path: &PathBuf) -> Result<Uncovering, CliError> {
    let text = fs::read_to_string(path)?;
    let raw: Uncovering = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("bad uncovering file: {e}")))?;
    // Revalidate structure through the checked constructor.
    Ok(Uncovering::new(
        raw.nu,
        raw.block_size,
        raw.tau,
        raw.blocks,
    )?)
}

fn cmd_decode(args: DecodeArgs) -> Result<ExitCode, CliError> {
    let code = GraphCode::from_json(&fs::read_to_string(&args.code)?)?;
    let unc = match &args.uncovering_file {
        Some(path) => load_uncovering(path)?,
        None => {
            let r = (code.k().saturating_sub(1)) / 2;
            uncovering_for_code(code.length(), r, args.rprime)?
        }
    };
    let word = ReceivedWord(args.word.clone());
    let result = code.decode(&word, &unc, args.rprime)?;

    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&result).expect("result serializes")
        );
    } else {
        match &result.outcome {
            DecodeOutcome::Decoded { vertex, codeword } => println!(
                "decoded vertex {vertex} with codeword {codeword:?} ({} blocks tried)",
                result.blocks_tried
            ),
            DecodeOutcome::Failed { reason } => println!(
                "decode failed after {} blocks: {reason}",
                result.blocks_tried
            ),
        }
    }
    match result.outcome {
        DecodeOutcome::Decoded { .. } => Ok(SUCCESS),
        DecodeOutcome::Failed { .. } => Ok(ExitCode::from(VERIFY_FAILURE)),
    }
}

#[derive(Serialize, Deserialize)]
struct CodeParams {
    graph: String,
    n: usize,
    length: usize,
    alphabet_size: u32,
    min_distance: usize,
    correction_capability: usize,
}

#[derive(Serialize, Deserialize)]
struct UncoveringParams {
    nu: usize,
    block_size: usize,
    tau: usize,
    blocks: usize,
}

#[derive(Serialize, Deserialize)]
struct ExperimentReport {
    code: CodeParams,
    uncovering: UncoveringParams,
    errors_injected: usize,
    r_prime: usize,
    trials: usize,
    successes: usize,
    failures: usize,
    seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mean_decode_micros: Option<f64>,
}

/// splitmix64; derives independent per-trial seeds from the master seed.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn cmd_simulate(args: SimulateArgs) -> Result<ExitCode, CliError> {
    let graph = args.graph.build()?;
    let dm = all_pairs_distances(&graph);
    let basis = construct_basis(&graph, &dm, args.k)?;
    let code = GraphCode::build(&dm, &basis)?;

    let r = (args.k.saturating_sub(1)) / 2;
    if args.errors > r {
        return Err(CliError::Lib(LibError::InvalidParameter(format!(
            "cannot inject {} errors: a k = {} code corrects at most r = {r}",
            args.errors, args.k
        ))));
    }
    let r_prime = args.errors.max(1);
    let unc = uncovering_for_code(code.length(), r, r_prime)?;

    let mut csv = args
        .csv
        .as_ref()
        .map(|path| fs::File::create(path))
        .transpose()?;
    if let Some(file) = &mut csv {
        use std::io::Write;
        writeln!(
            file,
            "trial,vertex,errors_injected,decoded_vertex,blocks_tried,success"
        )?;
    }

    let mut successes = 0;
    let mut failures = 0;
    let mut decode_time = std::time::Duration::ZERO;
    for trial in 0..args.trials {
        let tseed = mix(args.seed ^ (trial as u64).wrapping_mul(0x517cc1b727220a95));
        let vertex = (tseed % code.size() as u64) as usize;
        let word = code.channel(vertex, args.errors, mix(tseed ^ 0xd6e8feb86659fd93))?;
        let started = Instant::now();
        let result = code.decode(&word, &unc, r_prime)?;
        decode_time += started.elapsed();

        let decoded = result.decoded_vertex();
        let success = decoded == Some(vertex);
        if success {
            successes += 1;
        } else {
            failures += 1;
        }
        if let Some(file) = &mut csv {
            use std::io::Write;
            writeln!(
                file,
                "{trial},{vertex},{},{},{},{success}",
                args.errors,
                decoded.map_or(String::new(), |v| v.to_string()),
                result.blocks_tried
            )?;
        }
    }

    let mean_decode_micros = args
        .timing
        .then(|| decode_time.as_secs_f64() * 1e6 / args.trials.max(1) as f64);
    let report = ExperimentReport {
        code: CodeParams {
            graph: code.graph().to_string(),
            n: code.size(),
            length: code.length(),
            alphabet_size: code.alphabet_size(),
            min_distance: code.min_distance(),
            correction_capability: code.correction_capability(),
        },
        uncovering: UncoveringParams {
            nu: unc.nu,
            block_size: unc.block_size,
            tau: unc.tau,
            blocks: unc.blocks.len(),
        },
        errors_injected: args.errors,
        r_prime,
        trials: args.trials,
        successes,
        failures,
        seed: args.seed,
        mean_decode_micros,
    };

    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        println!(
            "code {}: n={} l={} alphabet={} D={} r={}",
            report.code.graph,
            report.code.n,
            report.code.length,
            report.code.alphabet_size,
            report.code.min_distance,
            report.code.correction_capability
        );
        println!(
            "uncovering: nu={} block_size={} tau={} blocks={}",
            report.uncovering.nu,
            report.uncovering.block_size,
            report.uncovering.tau,
            report.uncovering.blocks
        );
        println!(
            "{} trials, {} errors each, seed {}: {} succeeded, {} failed",
            report.trials, report.errors_injected, report.seed, report.successes, report.failures
        );
        if let Some(micros) = report.mean_decode_micros {
            println!("mean decode time: {micros:.2} us");
        }
    }
    if failures > 0 {
        Ok(ExitCode::from(VERIFY_FAILURE))
    } else {
        Ok(SUCCESS)
    }
}

fn triple(values: &[usize]) -> (usize, usize, usize) {
    (values[0], values[1], values[2])
}

fn cmd_covering(args: CoveringArgs) -> Result<ExitCode, CliError> {
    if let Some(v) = &args.bound {
        let (nu, kappa, tau) = triple(v);
        let bound = schonheim_bound(nu, kappa, tau)?;
        if args.json {
            println!(
                "{}",
                serde_json::json!({ "nu": nu, "kappa": kappa, "tau": tau, "schonheim_bound": bound })
            );
        } else {
            println!("{bound}");
        }
        return Ok(SUCCESS);
    }

    let design: CoveringDesign = if let Some(p) = &args.petrov {
        let tau = args
            .tau
            .ok_or_else(|| CliError::Usage("--petrov needs --tau".into()))?;
        let a = usize::try_from(p[0])
            .map_err(|_| CliError::Usage("--petrov A must be non-negative".into()))?;
        let kappa = usize::try_from(p[2])
            .map_err(|_| CliError::Usage("--petrov KAPPA must be non-negative".into()))?;
        petrov_covering(a, p[1], kappa, tau)?
    } else if let Some(v) = &args.brute {
        let (nu, kappa, tau) = triple(v);
        minimal_covering_bruteforce(nu, kappa, tau)?
    } else if let Some(v) = &args.greedy {
        let (nu, kappa, tau) = triple(v);
        greedy_covering(nu, kappa, tau)?
    } else {
        unreachable!("clap enforces the mode group");
    };

    let check = verify_covering(&design);
    let bound = schonheim_bound(design.nu, design.kappa, design.tau)?;
    let unc = design.complement();
    debug_assert_eq!(verify_uncovering(&unc).holds(), check.holds());

    if let Some(path) = &args.out {
        fs::write(
            path,
            serde_json::to_string_pretty(&design).expect("design serializes"),
        )?;
    }
    if let Some(path) = &args.uncovering_out {
        fs::write(
            path,
            serde_json::to_string_pretty(&unc).expect("design serializes"),
        )?;
    }

    if args.json {
        println!(
            "{}",
            serde_json::json!({
                "design": design,
                "verified": check.holds(),
                "schonheim_bound": bound,
            })
        );
    } else {
        println!(
            "({}, {}, {})-covering: {} blocks (Schönheim bound {bound})",
            design.nu,
            design.kappa,
            design.tau,
            design.blocks.len()
        );
        match &check {
            DesignCheck::Holds => println!("verification: every {}-subset is covered", design.tau),
            DesignCheck::Violation { witness } => {
                println!("verification FAILED: {witness:?} is uncovered")
            }
        }
        for block in &design.blocks {
            let parts: Vec<String> = block.iter().map(usize::to_string).collect();
            println!("  {}", parts.join(" "));
        }
    }
    if check.holds() {
        Ok(SUCCESS)
    } else {
        Ok(ExitCode::from(VERIFY_FAILURE))
    }
}
