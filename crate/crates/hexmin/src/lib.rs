//! Command-line front end for `hexmin-core`.
//!
//! `run` parses an argument vector, dispatches to the library and writes all
//! data to the given output stream; diagnostics go to the error stream. Exit
//! codes: 0 on success, 1 when a check finds violations, 2 on usage errors.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hexmin_core::bounds::{self, check_inequality, default_region, lemma_ids, paper_constants, CheckReport};
use hexmin_core::moduli::reduce_to_fundamental;
use hexmin_core::optimize::{minimize, Functional, MinimizeOptions};
use hexmin_core::{ModuliPoint, SeriesTruncation};
use rayon::prelude::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "LATTICE_THREADS";

/// Significant digits of every printed number.
pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "hexmin",
    version,
    about = "Lattice energies on the moduli space of planar lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a functional at one point.
    Eval {
        #[command(flatten)]
        functional: FunctionalArgs,
        /// Point as `x,y` with `y > 0`.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        z: ModuliPoint,
    },
    /// Reduce a point to the fundamental domain and print the generator word.
    Reduce {
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        z: ModuliPoint,
    },
    /// Tabulate a functional on a rectangle as `x,y,value` CSV.
    Landscape {
        #[command(flatten)]
        functional: FunctionalArgs,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "0,0.5")]
        xrange: (f64, f64),
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "0.85,2")]
        yrange: (f64, f64),
        /// Grid points per axis.
        #[arg(long, default_value_t = 50)]
        res: usize,
    },
    /// Minimize a functional over the fundamental domain.
    Minimize {
        #[command(flatten)]
        functional: FunctionalArgs,
        /// Upper end of the `y` search range.
        #[arg(long, default_value_t = 4.0, allow_negative_numbers = true)]
        y_max: f64,
        /// Coarse grid points per axis.
        #[arg(long, default_value_t = 48)]
        grid: usize,
    },
    /// Sample lemma inequalities on grids and report the slack.
    Verify {
        /// A lemma id, or `all`.
        #[arg(long, default_value = "all")]
        lemma: String,
        /// Grid points per axis.
        #[arg(long, default_value_t = bounds::DEFAULT_RESOLUTION)]
        grid: usize,
        /// Slack below `-tolerance` counts as a violation.
        #[arg(long, default_value_t = bounds::DEFAULT_TOLERANCE, allow_negative_numbers = true)]
        tolerance: f64,
    },
    /// Recompute the printed constants.
    Constants,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FunctionalName {
    Theta,
    #[value(name = "R", alias = "r")]
    R,
    Generalized,
    Corollary,
}

#[derive(Debug, Args)]
struct FunctionalArgs {
    #[arg(long, value_enum, default_value = "R")]
    functional: FunctionalName,
    #[arg(long, default_value_t = 1.5, allow_negative_numbers = true)]
    alpha: f64,
    /// Exponent of the generalized energy.
    #[arg(long)]
    k: Option<u32>,
    /// Upper exponent of the corollary energy.
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
}

/// A rejected flag and the reason.
struct Usage(String);

impl FunctionalArgs {
    fn resolve(&self) -> Result<(Functional, f64), Usage> {
        if !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return Err(Usage(format!(
                "--alpha must be positive and finite, got {}",
                self.alpha
            )));
        }
        let f = match self.functional {
            FunctionalName::Theta => Functional::Theta,
            FunctionalName::R => Functional::R,
            FunctionalName::Generalized => match self.k {
                Some(k) if k >= 1 => Functional::Generalized { k },
                Some(k) => return Err(Usage(format!("--k must be at least 1, got {k}"))),
                None => return Err(Usage("--k is required for --functional generalized".into())),
            },
            FunctionalName::Corollary => match self.beta {
                Some(b) if b > self.alpha && b.is_finite() => Functional::Corollary { beta: b },
                Some(b) => return Err(Usage(format!("--beta must be finite and exceed --alpha, got {b}"))),
                None => return Err(Usage("--beta is required for --functional corollary".into())),
            },
        };
        if self.k.is_some() && self.functional != FunctionalName::Generalized {
            return Err(Usage("--k only applies to --functional generalized".into()));
        }
        if self.beta.is_some() && self.functional != FunctionalName::Corollary {
            return Err(Usage("--beta only applies to --functional corollary".into()));
        }
        Ok((f, self.alpha))
    }
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected two comma-separated numbers, got `{s}`"))?;
    let p = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("`{}`: {e}", t.trim()));
    let (a, b) = (p(a)?, p(b)?);
    if !a.is_finite() || !b.is_finite() {
        return Err(format!("`{s}` is not finite"));
    }
    Ok((a, b))
}

fn parse_point(s: &str) -> Result<ModuliPoint, String> {
    let (x, y) = parse_pair(s)?;
    ModuliPoint::new(x, y).map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = parse_pair(s)?;
    if lo >= hi {
        return Err(format!("range `{s}` needs lo < hi"));
    }
    Ok((lo, hi))
}

/// `v` with 12 significant digits, fixed notation for exponents in `[-4, 12)`,
/// trailing zeros dropped.
pub fn fmt_num(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Worker pool capped by `LATTICE_THREADS`; without it rayon picks the size.
fn thread_pool() -> Result<rayon::ThreadPool, Usage> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(raw) = std::env::var_os(THREADS_ENV) {
        let n = raw
            .to_str()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&n| n >= 1)
            .ok_or_else(|| Usage(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
        builder = builder.num_threads(n);
    }
    builder
        .build()
        .map_err(|e| Usage(format!("cannot start worker pool: {e}")))
}

/// Runs the CLI with the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI; `argv[0]` is the program name.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = dispatch(cli.command, out, err);
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Usage> for Failure {
    fn from(u: Usage) -> Self {
        Failure::Usage(u.0)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<hexmin_core::Error> for Failure {
    fn from(e: hexmin_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let trunc = SeriesTruncation::default();
    match command {
        Command::Eval { functional, z } => {
            let (f, alpha) = functional.resolve()?;
            writeln!(out, "{}", fmt_num(f.eval(alpha, z, &trunc)?))?;
        }
        Command::Reduce { z } => {
            let (w, trace) = reduce_to_fundamental(z)?;
            writeln!(out, "x,y,word")?;
            writeln!(out, "{},{},{}", fmt_num(w.x), fmt_num(w.y), trace.word())?;
        }
        Command::Landscape {
            functional,
            xrange,
            yrange,
            res,
        } => {
            let (f, alpha) = functional.resolve()?;
            if res < 2 {
                return Err(Usage(format!("--res must be at least 2, got {res}")).into());
            }
            if yrange.0 <= 0.0 {
                return Err(Usage(format!("--yrange must lie in y > 0, got lower end {}", yrange.0)).into());
            }
            let axis = |(lo, hi): (f64, f64), i: usize| {
                if i + 1 == res {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / (res - 1) as f64
                }
            };
            // Row-major: y is the outer index, x the inner one.
            let cells: Vec<(f64, f64)> = (0..res)
                .flat_map(|j| (0..res).map(move |i| (axis(xrange, i), axis(yrange, j))))
                .collect();
            let pool = thread_pool()?;
            let values: Vec<hexmin_core::Result<f64>> = pool.install(|| {
                cells
                    .par_iter()
                    .map(|&(x, y)| f.eval(alpha, ModuliPoint { x, y }, &trunc))
                    .collect()
            });
            let mut buf = String::from("x,y,value\n");
            for (&(x, y), v) in cells.iter().zip(values) {
                buf.push_str(&format!("{},{},{}\n", fmt_num(x), fmt_num(y), fmt_num(v?)));
            }
            out.write_all(buf.as_bytes())?;
        }
        Command::Minimize {
            functional,
            y_max,
            grid,
        } => {
            let (f, alpha) = functional.resolve()?;
            if !(y_max > 1.0 && y_max.is_finite()) {
                return Err(Usage(format!("--y-max must be finite and above 1, got {y_max}")).into());
            }
            if grid < 2 {
                return Err(Usage(format!("--grid must be at least 2, got {grid}")).into());
            }
            let opts = MinimizeOptions {
                y_max,
                grid,
                ..MinimizeOptions::default()
            };
            let m = minimize(f, alpha, &opts)?;
            writeln!(out, "functional,alpha,x,y,value,iterations,converged")?;
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                f.id(),
                fmt_num(alpha),
                fmt_num(m.argmin.x),
                fmt_num(m.argmin.y),
                fmt_num(m.value),
                m.iterations,
                m.converged
            )?;
        }
        Command::Verify { lemma, grid, tolerance } => return verify(&lemma, grid, tolerance, out, err),
        Command::Constants => {
            let rows = paper_constants(&trunc)?;
            writeln!(out, "name,computed,printed,abs_diff,tolerance,reproduced")?;
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.name,
                    fmt_num(r.computed),
                    fmt_num(r.printed),
                    fmt_num(r.abs_diff),
                    fmt_num(r.tolerance),
                    r.reproduced()
                )?;
            }
            let missed = rows.iter().filter(|r| !r.reproduced()).count();
            writeln!(err, "{} of {} constants reproduced", rows.len() - missed, rows.len())?;
            if missed > 0 {
                return Ok(EXIT_VIOLATIONS);
            }
        }
    }
    Ok(EXIT_OK)
}

fn verify(lemma: &str, grid: usize, tolerance: f64, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    if grid < 2 {
        return Err(Usage(format!("--grid must be at least 2, got {grid}")).into());
    }
    if !(tolerance >= 0.0 && tolerance.is_finite()) {
        return Err(Usage(format!("--tolerance must be finite and non-negative, got {tolerance}")).into());
    }
    let ids: Vec<&str> = if lemma == "all" {
        lemma_ids()
    } else {
        let known = lemma_ids();
        match known.iter().find(|&&id| id == lemma) {
            Some(&id) => vec![id],
            None => return Err(Usage(format!("--lemma: unknown lemma id `{lemma}`")).into()),
        }
    };
    let trunc = SeriesTruncation::default();
    let pool = thread_pool()?;
    let reports: Vec<hexmin_core::Result<CheckReport>> = pool.install(|| {
        ids.par_iter()
            .map(|id| {
                let region = default_region(id, grid)?;
                check_inequality(id, &region, &trunc, tolerance)
            })
            .collect()
    });
    let reports = reports.into_iter().collect::<hexmin_core::Result<Vec<_>>>()?;
    let mut buf = String::from("lemma_id,points,min_slack,worst_point,violations\n");
    for r in &reports {
        let worst: Vec<String> = r.worst_point.iter().map(|&v| fmt_num(v)).collect();
        buf.push_str(&format!(
            "{},{},{},{},{}\n",
            r.lemma_id,
            r.points_tested,
            fmt_num(r.min_slack),
            worst.join(";"),
            r.violations.len()
        ));
    }
    out.write_all(buf.as_bytes())?;
    let failing: Vec<&CheckReport> = reports.iter().filter(|r| !r.passed()).collect();
    writeln!(
        err,
        "checked {} lemma(s) on {grid} points per axis at tolerance {}",
        reports.len(),
        fmt_num(tolerance)
    )?;
    for r in &failing {
        writeln!(
            err,
            "  {}: {} violation(s), min slack {}",
            r.lemma_id,
            r.violations.len(),
            fmt_num(r.min_slack)
        )?;
    }
    if failing.is_empty() {
        writeln!(err, "no violations")?;
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_VIOLATIONS)
    }
}
