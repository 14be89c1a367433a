//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a residual check failed, 2 usage error,
//! 3 domain error (singular point, stencil leaving the chart, bad grid).

mod commands;
pub mod table;

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::error::Error;
use crate::modes::Parity;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "dsmaxwell", version, about = "Electromagnetic modes in de Sitter space: catalogues, sampling and residual checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Frequencies ω = n + 1 + j over ranges of j and n.
    Spectrum(SpectrumArgs),
    /// The radial function R(r) and R′(r) of one mode.
    Radial(RadialArgs),
    /// Sample the 3-vector or DKP field of one mode on a grid.
    Field(FieldArgs),
    /// Sample the potentials (g₁, g₂, g₃) of an electric mode in a chosen gauge.
    Potentials(PotentialsArgs),
    /// Run residual suites over ranges of modes.
    Verify(VerifyArgs),
}

/// Inclusive integer range written `a..b` or a single integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub start: i64,
    pub end: i64,
}

impl IntRange {
    pub fn iter(self) -> RangeInclusive<i64> {
        self.start..=self.end
    }

    pub fn len(self) -> u64 {
        (i128::from(self.end) - i128::from(self.start) + 1).clamp(0, i128::from(u64::MAX)) as u64
    }

    pub fn is_empty(self) -> bool {
        self.len() == 0
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |x: &str| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| format!("'{x}' is not an integer"))
        };
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if start > end {
            return Err(format!("range {start}..{end} is empty"));
        }
        Ok(Self { start, end })
    }
}

/// Pair of reals written `a,b`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RealPair(pub [f64; 2]);

impl FromStr for RealPair {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s.split_once(',').ok_or_else(|| format!("expected 'a,b', got '{s}'"))?;
        let p = |x: &str| x.trim().parse::<f64>().map_err(|_| format!("'{x}' is not a number"));
        let pair = [p(a)?, p(b)?];
        if !(pair[0].is_finite() && pair[1].is_finite()) {
            return Err(format!("'{s}' must be finite"));
        }
        Ok(Self(pair))
    }
}

/// Complex number written `re` or `re,im`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexArg(pub Complex64);

impl FromStr for ComplexArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let p = |x: &str| x.trim().parse::<f64>().map_err(|_| format!("'{x}' is not a number"));
        let z = match s.split_once(',') {
            Some((a, b)) => Complex64::new(p(a)?, p(b)?),
            None => Complex64::new(p(s)?, 0.0),
        };
        if !z.is_finite() {
            return Err(format!("'{s}' must be finite"));
        }
        Ok(Self(z))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Magnetic,
    Electric,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::Magnetic => Parity::Magnetic,
            ParityArg::Electric => Parity::Electric,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParitySelect {
    Magnetic,
    Electric,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldForm {
    Mo,
    Dkp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GaugeArg {
    Landau,
    Lorentz,
    Gradient,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Mo,
    Dkp,
    Maxwell,
    Gauge,
    All,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct ModeArgs {
    #[arg(long)]
    pub j: i64,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub m: i64,
    #[arg(long, default_value_t = 0)]
    pub n: i64,
    #[arg(long, value_enum, default_value = "magnetic")]
    pub parity: ParityArg,
}

#[derive(Debug, Args)]
pub struct TrGridArgs {
    #[arg(long, default_value = "-2,2", allow_hyphen_values = true)]
    pub t_range: RealPair,
    #[arg(long, default_value = "0.05,3.0915926535897933")]
    pub r_range: RealPair,
    #[arg(long, default_value_t = 5)]
    pub n_t: usize,
    #[arg(long, default_value_t = 5)]
    pub n_r: usize,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long, default_value = "1..3")]
    pub j: IntRange,
    #[arg(long, default_value = "0..3")]
    pub n: IntRange,
    /// c/ρ; the last column is ω times this.
    #[arg(long, default_value_t = 1.0)]
    pub unit_scale: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct RadialArgs {
    #[arg(long)]
    pub j: i64,
    #[arg(long, default_value_t = 0)]
    pub n: i64,
    #[arg(long, default_value = "0.05,3.0915926535897933")]
    pub r_range: RealPair,
    #[arg(long, default_value_t = 9)]
    pub n_r: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    #[command(flatten)]
    pub mode: ModeArgs,
    #[arg(long, value_enum, default_value = "mo")]
    pub form: FieldForm,
    #[command(flatten)]
    pub grid: TrGridArgs,
    #[arg(long, default_value = "1.5707963267948966,1.5707963267948966")]
    pub theta_range: RealPair,
    #[arg(long, default_value_t = 1)]
    pub n_theta: usize,
    #[arg(long, default_value_t = 1)]
    pub n_phi: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PotentialsArgs {
    #[command(flatten)]
    pub mode: ModeArgs,
    #[arg(long, value_enum, default_value = "landau")]
    pub gauge: GaugeArg,
    /// Gradient amplitude for the Lorentz gauge, `re` or `re,im`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub amplitude: ComplexArg,
    /// Frequency of the gradient solution (defaults to ω + 2).
    #[arg(long)]
    pub omega_g: Option<u32>,
    #[command(flatten)]
    pub grid: TrGridArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: SuiteArg,
    #[arg(long, default_value = "1..2")]
    pub j: IntRange,
    #[arg(long, default_value = "0..1")]
    pub n: IntRange,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub m: i64,
    #[arg(long, value_enum, default_value = "both")]
    pub parity: ParitySelect,
    /// One tolerance for every residual, replacing the per-suite defaults.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, default_value_t = 40)]
    pub n_t: usize,
    #[arg(long, default_value_t = 40)]
    pub n_r: usize,
    /// Step of the (t, r) stencils.
    #[arg(long, default_value_t = 5e-3)]
    pub fd_step: f64,
    #[arg(long, default_value_t = 8)]
    pub fd_accuracy: u8,
    /// Step of the four-dimensional Maxwell check.
    #[arg(long, default_value_t = 1e-4)]
    pub maxwell_step: f64,
    #[arg(long, default_value_t = 50)]
    pub maxwell_points: usize,
    #[arg(long, default_value_t = 20240607)]
    pub seed: u64,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub amplitude: ComplexArg,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(m) => write!(f, "domain error: {m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_domain() {
            CliError::Domain(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Parse `args` (program name first) and run, writing results to `out`
/// and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = match &cli.command {
        Command::Spectrum(a) => commands::spectrum(a, out),
        Command::Radial(a) => commands::radial(a, out),
        Command::Field(a) => commands::field(a, out),
        Command::Potentials(a) => commands::potentials(a, out),
        Command::Verify(a) => commands::verify(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "dsmaxwell: {e}");
            e.exit_code()
        }
    }
}

/// Entry point of the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["dsmaxwell"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn parses_ranges_and_pairs() {
        assert_eq!("1..3".parse::<IntRange>().unwrap(), IntRange { start: 1, end: 3 });
        assert_eq!("2".parse::<IntRange>().unwrap().len(), 1);
        assert!("3..1".parse::<IntRange>().is_err());
        assert!("a..1".parse::<IntRange>().is_err());
        assert_eq!("-1,2".parse::<RealPair>().unwrap().0, [-1.0, 2.0]);
        assert!("1".parse::<RealPair>().is_err());
        assert_eq!("0.5,-1".parse::<ComplexArg>().unwrap().0, Complex64::new(0.5, -1.0));
    }

    #[test]
    fn spectrum_rows() {
        let (code, out, _) = run_capture(&["spectrum", "--j", "1..2", "--n", "0..1", "--format", "csv"]);
        assert_eq!(code, 0);
        let omegas: Vec<&str> = out
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(2).unwrap())
            .collect();
        assert_eq!(omegas, ["2", "3", "3", "4"]);
        let (_, scaled, _) = run_capture(&[
            "spectrum", "--j", "1..2", "--n", "0..1", "--format", "csv", "--unit-scale", "2",
        ]);
        let last: Vec<f64> = scaled
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(3).unwrap().parse().unwrap())
            .collect();
        assert_eq!(last, [4.0, 6.0, 6.0, 8.0]);
    }

    #[test]
    fn usage_errors_exit_2() {
        let (code, _, err) = run_capture(&["spectrum", "--j", "0..1"]);
        assert_eq!(code, 2);
        assert!(err.contains("j"), "{err}");
        assert_eq!(run_capture(&["spectrum", "--unit-scale", "0"]).0, 2);
        assert_eq!(run_capture(&["bogus"]).0, 2);
        assert_eq!(run_capture(&["field", "--j", "1", "--m", "5"]).0, 2);
        assert_eq!(
            run_capture(&["potentials", "--j", "1", "--parity", "magnetic"]).0,
            2
        );
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn singular_grid_exits_3() {
        let (code, _, err) = run_capture(&["field", "--j", "1", "--r-range", "0,1"]);
        assert_eq!(code, 3, "{err}");
    }

    #[test]
    fn magnetic_field_has_zero_f6() {
        let (code, out, _) = run_capture(&[
            "field", "--j", "1", "--form", "dkp", "--n-t", "1", "--n-r", "1", "--format", "json",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let rec = &v["records"][0];
        assert_eq!(rec["f6"]["re"].as_f64(), Some(0.0));
        assert_eq!(rec["f6"]["im"].as_f64(), Some(0.0));
        assert!(rec["f5"]["re"].as_f64().unwrap().abs() + rec["f5"]["im"].as_f64().unwrap().abs() > 0.0);
    }

    #[test]
    fn json_and_csv_agree() {
        let base = ["field", "--j", "2", "--m", "1", "--n", "1", "--parity", "electric", "--form", "dkp", "--n-t", "2", "--n-r", "2"];
        let (_, json, _) = run_capture(&[&base[..], &["--format", "json"]].concat());
        let (_, csv, _) = run_capture(&[&base[..], &["--format", "csv"]].concat());
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let mut rdr = csv::Reader::from_reader(csv.as_bytes());
        let headers = rdr.headers().unwrap().clone();
        for (rec, row) in v["records"].as_array().unwrap().iter().zip(rdr.records()) {
            let row = row.unwrap();
            for (h, cell) in headers.iter().zip(row.iter()) {
                let x: f64 = cell.parse().unwrap();
                let j = if let Some(name) = h.strip_prefix("Re_") {
                    rec[name]["re"].as_f64().unwrap()
                } else if let Some(name) = h.strip_prefix("Im_") {
                    rec[name]["im"].as_f64().unwrap()
                } else {
                    rec[h].as_f64().unwrap()
                };
                assert!((x - j).abs() <= 1e-15 * x.abs().max(1.0));
            }
        }
    }

    #[test]
    fn m_zero_rows_are_phi_independent() {
        let (code, out, _) = run_capture(&[
            "field", "--j", "1", "--n-t", "1", "--n-r", "1", "--n-phi", "4", "--format", "json",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let recs = v["records"].as_array().unwrap();
        assert_eq!(recs.len(), 4);
        for r in recs {
            assert_eq!(r["psi1"], recs[0]["psi1"]);
            assert_eq!(r["psi3"], recs[0]["psi3"]);
        }
    }
}
