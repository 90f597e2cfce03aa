//! Argument parsing and the process-level concerns: worker pool, CI mode,
//! writing outputs and manifests.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperlambda_core::extremal::{EnumerationConfig, EnumerationMode, Reduction};
use hyperlambda_core::polyform::DEFAULT_ORACLE_CAP;
use hyperlambda_core::SolverConfig;

use crate::commands::{
    execute, parse_orders, Format, Invocation, LambdaArgs, OracleArgs, PropertyKind, SequenceArgs, Suite, SweepArgs, VerifyArgs,
    DEFAULT_ALPHAS,
};
use crate::error::{input_error, CliError};
use crate::input;
use crate::manifest::{replay, RunManifest};

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "HYPERLAMBDA_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "hyperlambda", version, about = "Spectral parameters, Lagrangians and extremal searches for uniform hypergraphs")]
struct Cli {
    /// Worker threads (default: $HYPERLAMBDA_WORKERS, else all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Write a run manifest to this path.
    #[arg(long, global = true, value_name = "PATH")]
    manifest: Option<PathBuf>,
    /// Seed for every random choice; required when $CI is set.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct SolverOpts {
    /// Stationarity tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Number of multistart points.
    #[arg(long)]
    starts: Option<usize>,
    /// Iteration cap per start.
    #[arg(long)]
    max_iter: Option<usize>,
}

#[derive(Args, Debug, Clone, Copy)]
#[group(multiple = false)]
struct FormatOpts {
    /// JSON output (default).
    #[arg(long)]
    json: bool,
    /// CSV output.
    #[arg(long)]
    csv: bool,
}

impl FormatOpts {
    fn format(self) -> Format {
        if self.csv {
            Format::Csv
        } else {
            Format::Json
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReductionArg {
    Off,
    On,
    Auto,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve for lambda_alpha (or its minimum over the signed sphere).
    Lambda {
        /// `.hg` file or construction shorthand.
        input: String,
        /// Norm exponent (default: the uniformity r).
        #[arg(long)]
        alpha: Option<f64>,
        /// Minimize P_G over the signed sphere instead.
        #[arg(long)]
        min: bool,
        #[command(flatten)]
        solver: SolverOpts,
        #[command(flatten)]
        format: FormatOpts,
    },
    /// Check the bound catalog against solved values.
    Verify {
        input: String,
        /// Exponents to solve at (default: r).
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<f64>,
        /// Suites to run (default: all).
        #[arg(long, value_enum, value_delimiter = ',')]
        suite: Vec<Suite>,
        /// Turan density of a flat property containing the graph.
        #[arg(long)]
        pi: Option<f64>,
        #[command(flatten)]
        solver: SolverOpts,
    },
    /// Edge densities and lambda_alpha(P, n) over a range of orders.
    Sequence {
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value = "mon")]
        property: PropertyKind,
        /// Forbidden graphs (files or shorthands).
        #[arg(long, value_delimiter = ',')]
        forbid: Vec<String>,
        /// Chromatic number at most p.
        #[arg(long)]
        chi: Option<usize>,
        /// Weak chromatic number at most q.
        #[arg(long)]
        weak_chi: Option<usize>,
        /// Also solve lambda_alpha(P, n) at this exponent.
        #[arg(long)]
        alpha: Option<f64>,
        /// Orders, `a..b` inclusive or a single n.
        #[arg(long = "n", value_name = "RANGE")]
        orders: String,
        /// Write `<PATH>.csv` and `<PATH>.json`.
        #[arg(long, value_name = "PATH")]
        out: Option<String>,
        #[arg(long, value_enum, default_value = "auto")]
        reduction: ReductionArg,
        /// Random labeled graphs per order instead of exhaustive search.
        #[arg(long)]
        samples: Option<usize>,
        #[command(flatten)]
        solver: SolverOpts,
        #[command(flatten)]
        format: FormatOpts,
    },
    /// Solve across a grid of exponents.
    Sweep {
        input: String,
        #[arg(long, value_delimiter = ',')]
        alphas: Vec<f64>,
        #[command(flatten)]
        solver: SolverOpts,
        #[command(flatten)]
        format: FormatOpts,
    },
    /// Exact blow-up values r! e(G(k)) / p^r against the Lagrangian.
    Oracle {
        input: String,
        #[arg(long = "p", value_delimiter = ',', required = true)]
        ps: Vec<usize>,
        /// Largest number of compositions per denominator.
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: u64,
        #[command(flatten)]
        solver: SolverOpts,
        #[command(flatten)]
        format: FormatOpts,
    },
    /// Re-run a manifest and check that the output is identical.
    Replay {
        manifest: PathBuf,
    },
}

fn solver_config(o: &SolverOpts, seed: u64) -> SolverConfig {
    let mut c = SolverConfig { rng_seed: seed, ..SolverConfig::default() };
    if let Some(t) = o.tol {
        c.tolerance = t;
    }
    if let Some(s) = o.starts {
        c.num_starts = s;
    }
    if let Some(m) = o.max_iter {
        c.max_iterations = m;
    }
    c
}

/// Whether `$CI` is set to something other than empty, `0` or `false`.
pub fn ci_mode() -> bool {
    std::env::var("CI").is_ok_and(|v| !v.is_empty() && v != "0" && !v.eq_ignore_ascii_case("false"))
}

fn workers(flag: Option<usize>) -> Result<usize, CliError> {
    let w = match flag {
        Some(w) => w,
        None => match std::env::var(WORKERS_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| input_error!("{WORKERS_ENV}={v:?} is not a worker count"))?,
            Err(_) => std::thread::available_parallelism().map_or(1, usize::from),
        },
    };
    if w == 0 {
        return Err(input_error!("worker count must be at least 1"));
    }
    Ok(w)
}

fn resolve(cmd: Command, seed: u64, cwd: &Path) -> Result<Invocation, CliError> {
    Ok(match cmd {
        Command::Lambda { input, alpha, min, solver, format } => {
            let alpha = match alpha {
                Some(a) => a,
                None => input::load(&input, cwd)?.graph.uniformity() as f64,
            };
            Invocation::Lambda(LambdaArgs { input, alpha, min, format: format.format(), solver: solver_config(&solver, seed) })
        }
        Command::Verify { input, alpha, suite, pi, solver } => {
            let alphas = if alpha.is_empty() { vec![input::load(&input, cwd)?.graph.uniformity() as f64] } else { alpha };
            let suites = if suite.is_empty() { vec![Suite::All] } else { suite };
            Invocation::Verify(VerifyArgs { input, alphas, suites, pi, solver: solver_config(&solver, seed) })
        }
        Command::Sequence {
            r,
            property,
            forbid,
            chi,
            weak_chi,
            alpha,
            orders,
            out,
            reduction,
            samples,
            solver,
            format,
        } => {
            let enumeration = EnumerationConfig {
                canonical_reduction: match reduction {
                    ReductionArg::Off => Reduction::Off,
                    ReductionArg::On => Reduction::On,
                    ReductionArg::Auto => Reduction::Auto,
                },
                rng_seed: seed,
                mode: samples.map_or(EnumerationMode::Exhaustive, |samples| EnumerationMode::Sampled { samples }),
                solver: solver_config(&solver, seed),
                ..EnumerationConfig::default()
            };
            Invocation::Sequence(SequenceArgs {
                r,
                property,
                forbid,
                chi,
                weak_chi,
                alpha,
                orders: parse_orders(&orders)?,
                out,
                format: format.format(),
                enumeration,
            })
        }
        Command::Sweep { input, alphas, solver, format } => Invocation::Sweep(SweepArgs {
            input,
            alphas: if alphas.is_empty() { DEFAULT_ALPHAS.to_vec() } else { alphas },
            format: format.format(),
            solver: solver_config(&solver, seed),
        }),
        Command::Oracle { input, ps, cap, solver, format } => {
            Invocation::Oracle(OracleArgs { input, ps, cap, format: format.format(), solver: solver_config(&solver, seed) })
        }
        Command::Replay { .. } => unreachable!("replay is handled before resolution"),
    })
}

fn write_files(files: &[(PathBuf, String)], base: &Path) -> Result<(), CliError> {
    for (rel, text) in files {
        let path = base.join(rel);
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        }
        std::fs::write(&path, text).map_err(|e| CliError::io(&path, e))?;
    }
    Ok(())
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).and_then(|()| out.flush()).map_err(|e| CliError::io("<stdout>", e))
}

fn run_inner(args: Vec<OsString>, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                emit(out, &text)?;
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return Ok(code);
        }
    };
    let workers = workers(cli.workers)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| input_error!("cannot start {workers} worker(s): {e}"))?;
    let cwd = std::env::current_dir().map_err(|e| CliError::io(".", e))?;
    if let Command::Replay { manifest } = &cli.command {
        let m = RunManifest::load(&cwd.join(manifest))?;
        let r = pool.install(|| replay(&m))?;
        write_files(&r.outcome.files, &m.working_directory)?;
        emit(out, &r.outcome.stdout)?;
        if !r.identical {
            let _ = writeln!(err, "replay of {} does not reproduce the recorded output", manifest.display());
        }
        return Ok(r.exit().code());
    }
    let seed = match cli.seed {
        Some(s) => s,
        None if ci_mode() => return Err(input_error!("--seed is required when CI is set")),
        None => SolverConfig::default().rng_seed,
    };
    let inv = resolve(cli.command, seed, &cwd)?;
    let start = Instant::now();
    let outcome = pool.install(|| execute(&inv, &cwd))?;
    let wall = start.elapsed().as_secs_f64();
    write_files(&outcome.files, &cwd)?;
    emit(out, &outcome.stdout)?;
    if let Some(path) = &cli.manifest {
        let m = RunManifest::record(&inv, &outcome, workers, &cwd, wall);
        let path = cwd.join(path);
        std::fs::write(&path, m.to_json()?).map_err(|e| CliError::io(&path, e))?;
    }
    Ok(outcome.exit.code())
}

/// Runs the command line `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    match run_inner(args.into_iter().map(Into::into).collect(), out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
