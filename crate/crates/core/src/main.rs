//! Command-line front end: exact counting, generating functions, uniform
//! sampling, cost benchmarks, and the acceptance checklist.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;

use culminating::analysis::measure_cost;
use culminating::counting::{
    culminating_counts_upto, fixed_height_counts_upto, positive_counts_upto,
};
use culminating::genfunc::{ck_coeffs, dk_nk};
use culminating::samplers::{
    derive_seed, Method, PositiveBackend, PreparedSampler, SampleError, WalkRng,
};
use culminating::verify;
use culminating::word::StepSystem;

const EXIT_RUNTIME: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_EMPTY_CLASS: u8 = 3;
const EXIT_GIVE_UP: u8 = 4;

#[derive(Parser)]
#[command(
    name = "culminating",
    version,
    about = "Counting, generating functions, uniform random generation, and \
             benchmarks for culminating lattice paths with steps +a/-b"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print exact counts per length (culminating by default)
    Count(CountArgs),
    /// Print the rational generating function of height-k culminating walks
    Gf(GfArgs),
    /// Draw uniform random walks, one JSON record per line
    Sample(SampleArgs),
    /// Measure sampler cost and emit plot-ready CSV
    Bench(BenchArgs),
    /// Run the acceptance checklist; exits 0 iff every check passes
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct CountArgs {
    /// Up-step height
    #[arg(long)]
    a: u32,
    /// Down-step depth
    #[arg(long)]
    b: u32,
    /// Largest length to count
    #[arg(long)]
    n: usize,
    /// Count only culminating walks of this final height
    #[arg(long)]
    k: Option<usize>,
    /// Count positive walks instead of culminating walks
    #[arg(long, conflicts_with = "k")]
    positive: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GfArgs {
    #[arg(long)]
    a: u32,
    #[arg(long)]
    b: u32,
    /// Final height of the counted walks (k >= a)
    #[arg(long)]
    k: usize,
    /// Number of series coefficients to print
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long)]
    a: u32,
    #[arg(long)]
    b: u32,
    /// Walk length (target size for the Boltzmann method)
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    method: Method,
    /// Final height for the fixed-height method
    #[arg(long)]
    k: Option<usize>,
    /// Master seed; record i uses a seed derived from it by index
    #[arg(long, env = "CULM_SEED", default_value_t = 0)]
    seed: u64,
    /// Number of records to draw
    #[arg(long, default_value_t = 1)]
    samples: usize,
    /// Boltzmann size tolerance
    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,
    /// Positive-walk backend for the rejection methods
    #[arg(long, value_enum, default_value_t = PositiveBackend::Auto)]
    backend: PositiveBackend,
    /// Worker threads; records merge deterministically by index
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    a: u32,
    #[arg(long)]
    b: u32,
    /// One or more lengths (comma-separated or repeated)
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    n: Vec<usize>,
    #[arg(long, value_enum)]
    method: Method,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, env = "CULM_SEED", default_value_t = 0)]
    seed: u64,
    /// Trials per length
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,
    #[arg(long, value_enum, default_value_t = PositiveBackend::Auto)]
    backend: PositiveBackend,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Fast exact checks only (oracle capped at n <= 14)
    #[arg(long)]
    quick: bool,
}

enum CliError {
    Usage(String),
    Runtime(String),
    EmptyClass(String),
    GiveUp(String),
    ChecksFailed(usize),
}

impl From<SampleError> for CliError {
    fn from(e: SampleError) -> Self {
        match e {
            SampleError::EmptyClass(_) => CliError::EmptyClass(e.to_string()),
            SampleError::GiveUp { .. } => CliError::GiveUp(e.to_string()),
            SampleError::InvalidConfig(_) => CliError::Usage(e.to_string()),
            other => CliError::Runtime(other.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count(args) => cmd_count(args),
        Command::Gf(args) => cmd_gf(args),
        Command::Sample(args) => cmd_sample(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_RUNTIME)
        }
        Err(CliError::EmptyClass(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_EMPTY_CLASS)
        }
        Err(CliError::GiveUp(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_GIVE_UP)
        }
        Err(CliError::ChecksFailed(count)) => {
            eprintln!("error: {count} acceptance check(s) failed");
            ExitCode::from(EXIT_RUNTIME)
        }
    }
}

fn make_system(a: u32, b: u32) -> Result<StepSystem, CliError> {
    StepSystem::new(a, b).map_err(|e| CliError::Usage(e.to_string()))
}

fn open_output(path: Option<&PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn thread_pool(workers: usize) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| CliError::Runtime(e.to_string()))
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

fn cmd_count(args: CountArgs) -> Result<(), CliError> {
    let sys = make_system(args.a, args.b)?;
    if args.k == Some(0) {
        return Err(CliError::Usage("k must be at least 1".into()));
    }
    let mut out = open_output(args.output.as_ref())?;
    // --positive adds a second column in text mode and switches the exported
    // sequence in csv/json mode, which carry a single `count` column.
    let (label, counts): (String, Vec<BigUint>) = if let Some(k) = args.k {
        (
            format!("culminating (height {k})"),
            fixed_height_counts_upto(&sys, args.n, k),
        )
    } else if args.positive {
        ("positive".into(), positive_counts_upto(&sys, args.n))
    } else {
        ("culminating".into(), culminating_counts_upto(&sys, args.n))
    };
    match args.format {
        Format::Text => {
            if args.positive && args.k.is_none() {
                let culminating = culminating_counts_upto(&sys, args.n);
                writeln!(
                    out,
                    "# system ({},{}): n, culminating, positive",
                    args.a, args.b
                )?;
                for n in 1..=args.n {
                    writeln!(out, "{n}\t{}\t{}", culminating[n], counts[n])?;
                }
            } else {
                writeln!(out, "# system ({},{}): n, {label}", args.a, args.b)?;
                for n in 1..=args.n {
                    writeln!(out, "{n}\t{}", counts[n])?;
                }
            }
        }
        Format::Csv => {
            writeln!(out, "n,count")?;
            for n in 1..=args.n {
                writeln!(out, "{n},{}", counts[n])?;
            }
        }
        Format::Json => {
            for n in 1..=args.n {
                writeln!(out, "{{\"n\":{n},\"count\":\"{}\"}}", counts[n])?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

// ---------------------------------------------------------------------------
// gf
// ---------------------------------------------------------------------------

fn cmd_gf(args: GfArgs) -> Result<(), CliError> {
    let sys = make_system(args.a, args.b)?;
    if args.k < sys.a() as usize {
        return Err(CliError::Usage(format!(
            "k must be at least a = {} (heights below a hold no culminating walk)",
            sys.a()
        )));
    }
    let mut out = open_output(args.output.as_ref())?;
    let (d, t) = dk_nk(&sys, args.k);
    let coeffs = ck_coeffs(&sys, args.k, args.n);
    writeln!(
        out,
        "# system ({},{}), culminating walks of height k = {}",
        args.a, args.b, args.k
    )?;
    writeln!(out, "D_{} = {}", args.k, d)?;
    writeln!(out, "t^2*N_{} = {}", args.k, t)?;
    let rendered: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    writeln!(
        out,
        "C_{}[t^0..t^{}] = {}",
        args.k,
        args.n,
        rendered.join(", ")
    )?;
    out.flush()?;
    Ok(())
}

// ---------------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------------

fn cmd_sample(args: SampleArgs) -> Result<(), CliError> {
    let sys = make_system(args.a, args.b)?;
    if args.method == Method::FixedHeight && args.k.is_none() {
        return Err(CliError::Usage("--method fixed-height requires --k".into()));
    }
    if args.method == Method::Boltzmann && sys.a() < sys.b() {
        eprintln!(
            "warning: Boltzmann rejection at negative drift may need many attempts \
             (sizes concentrate far from the mean)"
        );
    }
    let prepared = PreparedSampler::prepare(
        args.method,
        &sys,
        args.n,
        args.k,
        args.epsilon,
        args.backend,
    )?;
    let pool = thread_pool(args.workers)?;
    let records: Result<Vec<_>, SampleError> = pool.install(|| {
        (0..args.samples)
            .into_par_iter()
            .map(|i| {
                let mut rng = WalkRng::from_seed(derive_seed(args.seed, i as u64));
                prepared.sample(&mut rng)
            })
            .collect()
    });
    let records = records?;
    let mut out = open_output(args.output.as_ref())?;
    for record in &records {
        let line = serde_json::to_string(record).map_err(|e| CliError::Runtime(e.to_string()))?;
        writeln!(out, "{line}")?;
    }
    out.flush()?;
    Ok(())
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

fn cmd_bench(args: BenchArgs) -> Result<(), CliError> {
    let sys = make_system(args.a, args.b)?;
    if args.method == Method::FixedHeight && args.k.is_none() {
        return Err(CliError::Usage("--method fixed-height requires --k".into()));
    }
    if args.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    if args.n.is_empty() {
        return Err(CliError::Usage("--n needs at least one length".into()));
    }
    let pool = thread_pool(args.workers)?;
    let mut out = open_output(args.output.as_ref())?;
    writeln!(out, "method,a,b,n,trials,mean_attempts,mean_steps,stddev")?;
    for (row, &n) in args.n.iter().enumerate() {
        let prepared =
            PreparedSampler::prepare(args.method, &sys, n, args.k, args.epsilon, args.backend)?;
        let row_seed = derive_seed(args.seed, row as u64);
        let report = pool.install(|| measure_cost(&prepared, &sys, n, args.trials, row_seed))?;
        writeln!(
            out,
            "{},{},{},{},{},{:.6},{:.6},{:.6}",
            report.method,
            report.a,
            report.b,
            report.n,
            report.trials,
            report.mean_attempts,
            report.mean_steps,
            report.stddev_steps
        )?;
    }
    out.flush()?;
    Ok(())
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let results = verify::run_all(args.quick);
    let mut failed = 0usize;
    for result in &results {
        println!("{result}");
        if !result.pass {
            failed += 1;
        }
    }
    println!(
        "{}/{} checks passed{}",
        results.len() - failed,
        results.len(),
        if args.quick { " (quick mode)" } else { "" }
    );
    if failed > 0 {
        return Err(CliError::ChecksFailed(failed));
    }
    Ok(())
}
