//! Command-line surface.

use clap::{Args, Parser, Subcommand, ValueEnum};
use masterint::{parse_complex_literal, Complex, QuadratureOptions, DEFAULT_TOLERANCE};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "masterint",
    version,
    about = "Numerically verify the master integral identity and its worked cases"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Pass when the sides agree to this relative (or absolute) difference
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE, value_parser = positive)]
    pub tol: f64,

    /// Also write the report records to PATH as a JSON array
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,

    /// Format of the report printed on stdout
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    #[command(flatten)]
    pub quadrature: QuadratureArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every built-in case at its default parameters
    VerifyAll,
    /// Run one built-in case
    Verify {
        /// Case id (see `list`)
        case: String,
        /// Override a parameter, e.g. `--param a=1+2i`
        #[arg(long = "param", value_name = "NAME=VALUE", value_parser = parse_assignment)]
        params: Vec<(String, Complex)>,
    },
    /// Check the master formula for a transform F(k) given as an expression
    Custom {
        /// Expression in `k`, e.g. "1/(k+2)"
        #[arg(long = "F", value_name = "EXPR")]
        f: String,
        /// Kernel parameter
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        a: Complex,
        /// Bind another identifier used in EXPR
        #[arg(long = "param", value_name = "NAME=VALUE", value_parser = parse_assignment)]
        params: Vec<(String, Complex)>,
    },
    /// Check the seed integral on a grid of (a, t)
    KernelCheck {
        /// Grid points per axis
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..=50))]
        points: u32,
        #[arg(long, default_value_t = 0.3, value_parser = positive)]
        a_min: f64,
        #[arg(long, default_value_t = 3.0, value_parser = positive)]
        a_max: f64,
        #[arg(long, default_value_t = 0.2, value_parser = positive)]
        t_min: f64,
        #[arg(long, default_value_t = 2.0, value_parser = positive)]
        t_max: f64,
    },
    /// List the built-in cases and their parameters
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Args)]
pub struct QuadratureArgs {
    /// Absolute quadrature tolerance
    #[arg(long, global = true, value_parser = positive)]
    pub abs_tol: Option<f64>,
    /// Relative quadrature tolerance
    #[arg(long, global = true, value_parser = positive)]
    pub rel_tol: Option<f64>,
    /// Bisection budget per panel
    #[arg(long, global = true)]
    pub max_subdivisions: Option<usize>,
    /// Half-width of the first window on unbounded domains
    #[arg(long, global = true, value_parser = positive)]
    pub initial_truncation: Option<f64>,
    /// Largest window half-width
    #[arg(long, global = true, value_parser = positive)]
    pub max_truncation: Option<f64>,
    /// Factor by which the window grows
    #[arg(long, global = true, value_parser = positive)]
    pub window_growth: Option<f64>,
}

impl QuadratureArgs {
    pub fn options(&self) -> masterint::Result<QuadratureOptions> {
        let d = QuadratureOptions::default();
        let opts = QuadratureOptions {
            abs_tol: self.abs_tol.unwrap_or(d.abs_tol),
            rel_tol: self.rel_tol.unwrap_or(d.rel_tol),
            max_subdivisions: self.max_subdivisions.unwrap_or(d.max_subdivisions),
            initial_truncation: self.initial_truncation.unwrap_or(d.initial_truncation),
            max_truncation: self.max_truncation.unwrap_or(d.max_truncation),
            window_growth: self.window_growth.unwrap_or(d.window_growth),
        };
        opts.validate()?;
        Ok(opts)
    }
}

fn positive(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("`{s}`: {e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{s}` must be a positive finite number"))
    }
}

fn parse_complex(s: &str) -> Result<Complex, String> {
    parse_complex_literal(s).map_err(|e| e.to_string())
}

fn parse_assignment(s: &str) -> Result<(String, Complex), String> {
    let (name, value) = s.split_once('=').ok_or_else(|| format!("`{s}` is not NAME=VALUE"))?;
    let name = name.trim();
    let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !valid {
        return Err(format!("`{name}` is not a parameter name"));
    }
    Ok((name.to_owned(), parse_complex(value)?))
}
