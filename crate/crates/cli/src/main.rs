use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use menage_cli::{compute_terms, render, verify, Cache, Failure, Format, Method, SequenceId, SequenceSpec};

/// Counts seatings of couples around a table with no spouses adjacent and no
/// long same-gender runs.
#[derive(Parser)]
#[command(name = "menage", version)]
struct Cli {
    /// Log per-term timings to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit terms of a sequence.
    Compute(ComputeArgs),
    /// Compute terms with several methods and compare them.
    Verify(VerifyArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("sequence").required(true).args(["seq", "raw_k"])))]
struct ComputeArgs {
    /// Published sequence to emit.
    #[arg(long, value_enum)]
    seq: Option<SequenceId>,
    /// Emit raw counts for this run bound instead.
    #[arg(long)]
    raw_k: Option<usize>,
    #[arg(long, default_value_t = 1)]
    from: usize,
    #[arg(long)]
    to: usize,
    #[arg(long, value_enum, default_value_t = Method::Transfer)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// JSON-lines cache of computed terms.
    #[arg(long, env = "MENAGE_CACHE")]
    cache: Option<PathBuf>,
    /// Ignore cached values (fresh results are still recorded).
    #[arg(long)]
    recompute: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    methods: Vec<Method>,
}

fn compute(args: ComputeArgs) -> Result<(), Failure> {
    let spec = match (args.seq, args.raw_k) {
        (Some(id), _) => SequenceSpec::published(id),
        (None, Some(k)) if k >= 2 => SequenceSpec::raw(k),
        (None, Some(k)) => return Err(Failure::Usage(format!("run bound must be >= 2, got {k}"))),
        (None, None) => unreachable!("clap requires one of --seq, --raw-k"),
    };
    let mut cache = match &args.cache {
        Some(path) => Some(
            Cache::load(path)
                .map_err(|e| Failure::Usage(format!("cannot read cache {}: {e}", path.display())))?,
        ),
        None => None,
    };
    let terms = compute_terms(&spec, args.from, args.to, args.method, cache.as_mut(), args.recompute)?;
    print!("{}", render(&spec, args.method, &terms, args.format));
    Ok(())
}

fn run_verify(args: VerifyArgs) -> Result<(), Failure> {
    let report = verify(args.k, args.n_min, args.n_max, &args.methods)?;
    print!("{}", report.text);
    if report.all_agree() {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("methods disagree at n = {:?}", report.mismatches)))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let level = if cli.verbose { "info" } else { "warn" };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();

    let result = match cli.command {
        Command::Compute(args) => compute(args),
        Command::Verify(args) => run_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("menage: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
