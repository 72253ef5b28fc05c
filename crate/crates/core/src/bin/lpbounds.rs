use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lpbounds::energy::{BesselSeries, Potential};
use lpbounds::lattice::{theta_coefficients, Lattice, ThetaMode};
use lpbounds::quadrature::build_rule;
use lpbounds::report::{
    bounds_csv, plot_fs, plot_fs_csv, table_bd, table_bd_csv, BoundReport, GaussReport, SRange,
    UlbReport,
};
use lpbounds::special::bessel_zeros_cached;
use lpbounds::{Error, Result};

/// Directory for cached Bessel-zero tables.
const CACHE_ENV: &str = "LPBOUNDS_CACHE_DIR";
const CACHED_ZEROS: usize = 1024;

#[derive(Parser)]
#[command(name = "lpbounds", version, about = "Linear-programming energy bounds on spheres")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Θ, ξ, A and C̃ at one s or along an s-range.
    Bounds {
        #[arg(long)]
        d: u32,
        #[arg(long, conflicts_with = "s_range", required_unless_present = "s_range")]
        s: Option<f64>,
        #[arg(long = "s-range")]
        s_range: Option<String>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Add Riesz ULB values for these point counts (JSON only).
        #[arg(long = "N", value_delimiter = ',')]
        n: Vec<u64>,
        #[command(flatten)]
        output: Output,
    },
    /// The B_d table.
    TableBd {
        #[command(flatten)]
        output: Output,
    },
    /// Curve data for f(s) = (C̃/A)^{1/s}.
    PlotFs {
        #[arg(long)]
        d: u32,
        #[arg(long = "s-range")]
        s_range: String,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[command(flatten)]
        output: Output,
    },
    /// The Levenshtein 1/N-quadrature rule.
    Quadrature {
        #[arg(long)]
        d: u32,
        #[arg(long = "N")]
        n: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Universal lower bound for N points.
    Ulb {
        #[arg(long)]
        d: u32,
        #[arg(long = "N")]
        n: u64,
        /// riesz:<s> or gauss:<alpha>
        #[arg(long)]
        potential: String,
        #[command(flatten)]
        output: Output,
    },
    /// Gaussian energy bound at density rho.
    Gauss {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        rho: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Theta-series coefficients (m, N(m)) of a lattice.
    Theta {
        #[arg(long)]
        lattice: String,
        #[arg(long = "m-max")]
        m_max: usize,
        #[arg(long)]
        enumerate: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn series(d: u32, tol: f64) -> Result<BesselSeries> {
    match std::env::var_os(CACHE_ENV) {
        Some(dir) => {
            let table = bessel_zeros_cached(dir.as_ref(), 0.5 * d as f64, CACHED_ZEROS, tol)?;
            BesselSeries::from_table(d, table)
        }
        None => BesselSeries::new(d),
    }
}

fn render(format: Format, csv: impl FnOnce() -> String, json: impl FnOnce() -> String) -> String {
    match format {
        Format::Csv => csv(),
        Format::Json => {
            let mut s = json();
            s.push('\n');
            s
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    let res = match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    res.map_err(|e| Error::Resource(format!("cannot write output: {e}")))
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Bounds { d, s, s_range, tol, n, output } => {
            let grid = match (s, s_range) {
                (Some(s), _) => vec![s],
                (None, Some(r)) => SRange::parse(&r)?.points(),
                (None, None) => unreachable!("clap requires one of --s, --s-range"),
            };
            let mut bessel = series(d, tol)?;
            let reports = grid
                .iter()
                .map(|&s| BoundReport::compute_with(&mut bessel, s, tol, &n))
                .collect::<Result<Vec<_>>>()?;
            let text = render(
                output.format,
                || bounds_csv(&reports),
                || serde_json::to_string_pretty(&reports).unwrap(),
            );
            emit(&output.out, &text)
        }
        Command::TableBd { output } => {
            let rows = table_bd()?;
            let text = render(
                output.format,
                || table_bd_csv(&rows),
                || serde_json::to_string_pretty(&rows).unwrap(),
            );
            emit(&output.out, &text)
        }
        Command::PlotFs { d, s_range, tol, output } => {
            let rows = plot_fs(d, &SRange::parse(&s_range)?, tol)?;
            let text = render(
                output.format,
                || plot_fs_csv(&rows),
                || serde_json::to_string_pretty(&rows).unwrap(),
            );
            emit(&output.out, &text)
        }
        Command::Quadrature { d, n, output } => {
            let rule = build_rule(d, n)?;
            let text = render(output.format, || rule.to_csv(), || rule.to_json());
            emit(&output.out, &text)
        }
        Command::Ulb { d, n, potential, output } => {
            let h: Potential = potential.parse()?;
            let report = UlbReport::compute(d, n, &h)?;
            let text = render(output.format, || report.to_csv(), || report.to_json());
            emit(&output.out, &text)
        }
        Command::Gauss { d, alpha, rho, output } => {
            let report = GaussReport::compute(d, alpha, rho)?;
            let text = render(output.format, || report.to_csv(), || report.to_json());
            emit(&output.out, &text)
        }
        Command::Theta { lattice, m_max, enumerate, out } => {
            let lattice = Lattice::from_name(&lattice)?;
            let mode = if enumerate || !matches!(lattice, Lattice::D4 | Lattice::E8 | Lattice::Leech) {
                ThetaMode::Enumeration
            } else {
                ThetaMode::Formula
            };
            emit(&out, &theta_coefficients(lattice, m_max, mode)?.to_csv())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("lpbounds: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
