//! Command-line front end: real and complex spectra, accumulation curves and
//! special-function self-checks as CSV tables or SVG plots.
//!
//! Exit codes: 0 success, 2 bad arguments, 3 numerical failure, 4 excluded
//! parameter. Failures print `error[<category>]: <message>` on stderr.

mod commands;
mod error;
mod svg;
mod table;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coulomb_spectra::contour::SearchConfig;
use coulomb_spectra::nsa_spectrum::Quadrant;
use coulomb_spectra::sa_spectrum::{BoundaryCondition, Method};
use commands::Report;
use error::CliError;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

/// Environment variable naming the default output directory.
const OUT_DIR_ENV: &str = "COULOMB_SPECTRA_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "coulomb-spectra", version, about = "Spectra of Schrödinger operators with the potential −γ/(1+|x|)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,
    /// Output file; defaults to `<command>.<format>` inside
    /// $COULOMB_SPECTRA_OUT_DIR when that is set, else standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Csv,
    Svg,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Svg => "svg",
        }
    }
}

#[derive(Args, Debug, Clone, Copy)]
struct SearchArgs {
    /// Newton stopping tolerance (relative step).
    #[arg(long, default_value_t = SearchConfig::default().newton_tol)]
    newton_tol: f64,
    /// Maximum rectangle subdivision depth.
    #[arg(long, default_value_t = SearchConfig::default().max_depth)]
    max_depth: usize,
    /// Largest accepted change of arg M between edge samples.
    #[arg(long, default_value_t = SearchConfig::default().arg_step)]
    arg_step: f64,
}

impl SearchArgs {
    fn config(&self) -> Result<SearchConfig, CliError> {
        if !(self.newton_tol > 0.0 && self.arg_step > 0.0 && self.arg_step < 3.0) {
            return Err(CliError::Usage("need newton-tol > 0 and 0 < arg-step < 3".into()));
        }
        Ok(SearchConfig { newton_tol: self.newton_tol, max_depth: self.max_depth, arg_step: self.arg_step, ..SearchConfig::default() })
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Real eigenvalues −λ_n of the Dirichlet or Neumann half-line problem.
    SaEigs {
        /// Coupling γ > 0.
        #[arg(long)]
        gamma: f64,
        /// Boundary condition at the origin (dirichlet | neumann).
        #[arg(long, default_value = "dirichlet")]
        bc: BoundaryCondition,
        /// Number of eigenvalues.
        #[arg(long, default_value_t = 30)]
        n_max: usize,
        /// char_exact | char_reduced | asymptotic | oracle.
        #[arg(long, default_value = "char_exact")]
        method: Method,
    },
    /// Complex eigenvalues of the symmetric indefinite operator in one quadrant.
    NsaEigs {
        /// Coupling γ > 0.
        #[arg(long)]
        gamma: f64,
        /// Smallest |Re μ|.
        #[arg(long, default_value_t = 0.005)]
        re_min: f64,
        /// Largest |Re μ|.
        #[arg(long, default_value_t = 0.2)]
        re_max: f64,
        /// Quadrant 1–4 (or I–IV).
        #[arg(long, default_value = "1")]
        quadrant: Quadrant,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Accumulation curves τ∓(t) = t + Υ∓ t^{3/2}.
    Curves {
        /// Coupling γ > 0.
        #[arg(long)]
        gamma: f64,
        /// Smallest curve parameter.
        #[arg(long, default_value_t = 1e-4)]
        t_min: f64,
        /// Largest curve parameter.
        #[arg(long, default_value_t = 0.2)]
        t_max: f64,
        /// Number of log-spaced samples.
        #[arg(long, default_value_t = 200)]
        points: usize,
    },
    /// Oracle, exact and two-term eigenvalues with relative errors.
    Compare {
        /// Coupling γ > 0.
        #[arg(long)]
        gamma: f64,
        /// Boundary condition at the origin.
        #[arg(long, default_value = "dirichlet")]
        bc: BoundaryCondition,
        /// Number of eigenvalues.
        #[arg(long, default_value_t = 30)]
        n_max: usize,
    },
    /// Complex eigenvalues with couplings γ₊ (x > 0) and γ₋ (x < 0).
    Nonsym {
        /// Coupling on x > 0.
        #[arg(long)]
        gamma_plus: f64,
        /// Coupling on x < 0.
        #[arg(long)]
        gamma_minus: f64,
        /// Smallest |Re μ|.
        #[arg(long, default_value_t = 0.01)]
        re_min: f64,
        /// Largest |Re μ|.
        #[arg(long, default_value_t = 0.2)]
        re_max: f64,
        /// Quadrant 1–4 (or I–IV).
        #[arg(long, default_value = "1")]
        quadrant: Quadrant,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Bessel identities and the uniform Kummer expansion's decay rate.
    SpecfunCheck,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::SaEigs { .. } => "sa-eigs",
            Command::NsaEigs { .. } => "nsa-eigs",
            Command::Curves { .. } => "curves",
            Command::Compare { .. } => "compare",
            Command::Nonsym { .. } => "nonsym",
            Command::SpecfunCheck => "specfun-check",
        }
    }
}

/// Runs the command; returns the report and the number of failed checks.
fn execute(command: &Command) -> Result<(Report, usize), CliError> {
    let report = match *command {
        Command::SaEigs { gamma, bc, n_max, method } => commands::sa_eigs(gamma, bc, n_max, method)?,
        Command::NsaEigs { gamma, re_min, re_max, quadrant, search } => {
            commands::nsa_eigs(gamma, (re_min, re_max), quadrant, &search.config()?)?
        }
        Command::Curves { gamma, t_min, t_max, points } => commands::curves(gamma, (t_min, t_max), points)?,
        Command::Compare { gamma, bc, n_max } => commands::compare(gamma, bc, n_max)?,
        Command::Nonsym { gamma_plus, gamma_minus, re_min, re_max, quadrant, search } => {
            commands::nonsym(gamma_plus, gamma_minus, (re_min, re_max), quadrant, &search.config()?)?
        }
        Command::SpecfunCheck => return commands::specfun_check(),
    };
    Ok((report, 0))
}

fn open_output(cli: &Cli) -> Result<Box<dyn Write>, CliError> {
    let path = match (&cli.output.output, std::env::var_os(OUT_DIR_ENV)) {
        (Some(p), _) => Some(p.clone()),
        (None, Some(dir)) => {
            let dir = PathBuf::from(dir);
            std::fs::create_dir_all(&dir)?;
            Some(dir.join(format!("{}.{}", cli.command.name(), cli.output.format.extension())))
        }
        (None, None) => None,
    };
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let (report, failures) = execute(&cli.command)?;
    let mut out = open_output(cli)?;
    match cli.output.format {
        Format::Csv => report.table.write_csv(&mut out)?,
        Format::Svg => {
            let plot = report
                .plot
                .ok_or_else(|| CliError::Usage(format!("{} has no SVG output", cli.command.name())))?;
            out.write_all(plot.render().as_bytes())?;
        }
    }
    out.flush()?;
    if failures > 0 {
        return Err(CliError::ChecksFailed(failures));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let category = e.category();
            eprintln!("error[{category}]: {e}");
            category.exit_code()
        }
    }
}
