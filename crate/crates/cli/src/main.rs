use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hookdec::verify::{run_suite, Suite};
use hookdec::{hook, lr, Error, Limits, Partition};

mod cache;

/// Multiplicities of irreducible modules in hook components of tensor
/// powers of matrix spaces.
#[derive(Parser)]
#[command(name = "hookdec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Littlewood–Richardson coefficient c^λ_{μν}.
    Lr(LrArgs),
    /// Print a single multiplicity.
    Mult(MultArgs),
    /// Print every nonzero multiplicity for one hook component.
    Table(TableArgs),
    /// Run verification suites and print one PASS/FAIL line per check.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct LrArgs {
    #[arg(long)]
    lambda: Partition,
    #[arg(long)]
    mu: Partition,
    #[arg(long)]
    nu: Partition,
}

#[derive(Clone, Copy, ValueEnum)]
enum MultKind {
    Rect,
    Square,
    SquareGraded,
}

#[derive(Args)]
struct MultArgs {
    #[arg(long, value_enum)]
    kind: MultKind,
    #[arg(long)]
    lambda: Partition,
    /// Second partition; required for `rect`.
    #[arg(long)]
    mu: Option<Partition>,
    /// Hook index: the component of the hook (n−t, 1^t).
    #[arg(long)]
    t: usize,
    /// Number of skew-symmetric factors; required for `square-graded`.
    #[arg(long)]
    j: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Rect,
    Square,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum, default_value = "rect")]
    kind: TableKind,
    #[arg(long)]
    n: usize,
    /// Row bound on λ (defaults to n for `rect`, unbounded for `square`).
    #[arg(long)]
    k: Option<usize>,
    /// Row bound on μ (`rect` only; defaults to n).
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    t: usize,
    /// Restrict to j skew-symmetric factors (`square` only).
    #[arg(long)]
    j: Option<usize>,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Rect,
    Square,
    Bn,
    Bounds,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Rect => Suite::Rect,
            SuiteArg::Square => Suite::Square,
            SuiteArg::Bn => Suite::Bn,
            SuiteArg::Bounds => Suite::Bounds,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    #[arg(long)]
    max_n: usize,
    /// Lift the default size caps to --max-n.
    #[arg(long)]
    unsafe_max_n: bool,
}

/// Caps for `verify`: rectangular checks up to n = 6, square-matrix checks
/// up to 2n = 8.
fn cli_limits() -> Limits {
    Limits {
        rect_n: 6,
        square_n: 4,
        ..Limits::default()
    }
}

enum Failure {
    Lib(Error),
    Precondition(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(f: &Failure) -> u8 {
    match f {
        Failure::Verification => 1,
        Failure::Precondition(_) => 3,
        Failure::Lib(e) => match e {
            Error::Parse { .. } => 2,
            Error::ResourceLimit { .. } | Error::Overflow(_) => 4,
            Error::FormMismatch { .. } | Error::NegativeMultiplicity(_) | Error::InvalidTable(_) => 1,
            _ => 3,
        },
    }
}

fn run_lr(args: LrArgs, out: &mut impl Write) -> Result<(), Failure> {
    let c = lr::lr_coefficient(&args.lambda, &args.mu, &args.nu);
    writeln!(out, "{c}").map_err(io_failure)?;
    Ok(())
}

fn run_mult(args: MultArgs, out: &mut impl Write) -> Result<(), Failure> {
    if !matches!(args.kind, MultKind::Rect) && args.mu.is_some() {
        return Err(Failure::Precondition("--mu is only accepted with --kind rect".into()));
    }
    if !matches!(args.kind, MultKind::SquareGraded) && args.j.is_some() {
        return Err(Failure::Precondition(
            "--j is only accepted with --kind square-graded".into(),
        ));
    }
    let value = match args.kind {
        MultKind::Rect => {
            let mu = args
                .mu
                .ok_or_else(|| Failure::Precondition("--kind rect requires --mu".into()))?;
            hook::mult_rect(&args.lambda, &mu, args.t)?
        }
        MultKind::Square => hook::mult_hook_square(&args.lambda, args.t)?,
        MultKind::SquareGraded => {
            let j = args
                .j
                .ok_or_else(|| Failure::Precondition("--kind square-graded requires --j".into()))?;
            hook::mult_hook_square_graded(&args.lambda, args.t, j)?
        }
    };
    writeln!(out, "{value}").map_err(io_failure)?;
    Ok(())
}

fn run_table(args: TableArgs, out: &mut impl Write) -> Result<(), Failure> {
    let table = match args.kind {
        TableKind::Rect => {
            if args.j.is_some() {
                return Err(Failure::Precondition("--j is only accepted with --kind square".into()));
            }
            let k = args.k.unwrap_or(args.n.max(1));
            let m = args.m.unwrap_or(args.n.max(1));
            hook::mult_rect_table(args.n, k, m, args.t)?
        }
        TableKind::Square => {
            if args.m.is_some() {
                return Err(Failure::Precondition("--m is only accepted with --kind rect".into()));
            }
            hook::mult_hook_square_table(args.n, args.k, args.t, args.j)?
        }
    };
    let text = match args.format {
        Format::Tsv => table.to_tsv(),
        Format::Json => table.to_json(),
    };
    out.write_all(text.as_bytes()).map_err(io_failure)?;
    Ok(())
}

fn run_verify(args: VerifyArgs, out: &mut impl Write) -> Result<(), Failure> {
    let mut limits = cli_limits();
    if args.unsafe_max_n {
        limits = limits.raised_to(args.max_n);
    }
    let outcomes = run_suite(args.suite.into(), args.max_n, &limits)?;
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    for outcome in &outcomes {
        writeln!(out, "{outcome}").map_err(io_failure)?;
    }
    writeln!(
        out,
        "{} checks, {} passed, {} failed",
        outcomes.len(),
        outcomes.len() - failed,
        failed
    )
    .map_err(io_failure)?;
    if failed > 0 {
        return Err(Failure::Verification);
    }
    Ok(())
}

fn io_failure(e: io::Error) -> Failure {
    Failure::Precondition(format!("cannot write output: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = cache::TableCache::from_env();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Lr(args) => run_lr(args, &mut out),
        Command::Mult(args) => run_mult(args, &mut out),
        Command::Table(args) => run_table(args, &mut out),
        Command::Verify(args) => run_verify(args, &mut out),
    };
    let _ = out.flush();
    if let Some(cache) = cache {
        if let Err(e) = cache.persist() {
            eprintln!("warning: could not write character table cache: {e}");
        }
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Lib(e) => eprintln!("error: {e}"),
                Failure::Precondition(msg) => eprintln!("error: {msg}"),
                Failure::Verification => eprintln!("verification failed"),
            }
            ExitCode::from(exit_code(&failure))
        }
    }
}
