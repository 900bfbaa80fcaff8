//! Command-line surface and the serializable run configuration.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use polyschwarz::{Family, MultiIndex, QuadratureSettings};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(
    name = "polyschwarz",
    version,
    about = "Verify Schwarz-Pick type derivative bounds for pluriharmonic maps of the polydisk"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    /// Write the resolved run configuration to this file before running.
    #[arg(long, global = true, value_name = "PATH")]
    pub save_config: Option<PathBuf>,

    #[command(subcommand)]
    pub action: Action,
}

#[derive(Debug, Subcommand)]
pub enum Action {
    #[command(flatten)]
    Command(Command),
    /// Re-run a configuration saved with --save-config.
    Replay {
        #[arg(value_name = "CONFIG")]
        config: PathBuf,
    },
}

/// Everything needed to reproduce a run, together with the input files.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub global: GlobalOpts,
    #[serde(flatten)]
    pub command: Command,
}

impl RunConfig {
    pub fn quadrature(&self) -> QuadratureSettings {
        QuadratureSettings {
            nodes: self.global.nodes,
            radius: self.global.radius,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct GlobalOpts {
    /// Seed for generated maps and searches.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Tolerance override for pass/fail decisions.
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    /// Quadrature nodes per dimension.
    #[arg(long, global = true)]
    pub nodes: Option<usize>,

    /// Uniform quadrature radius.
    #[arg(long, global = true)]
    pub radius: Option<f64>,

    /// Output file. Defaults to standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Print machine-readable JSON on standard output.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Clone, Debug, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Command {
    /// Check the derivative bound on a grid of points.
    Verify(VerifyArgs),
    /// Check the gradient bound on a grid of points.
    Gradient(GradientArgs),
    /// Check the growth bound on a grid of points.
    Growth(GrowthArgs),
    /// Check the coefficient bound on extracted Fourier coefficients.
    Coeffs(CoeffsArgs),
    /// Evaluate the normalized |cos| integral.
    Lemma(LemmaArgs),
    /// Write the truncated extremal series to a map file.
    Extremal(ExtremalArgs),
    /// Write a random map with coefficient l1 norm below one.
    Random(RandomArgs),
    /// Search for maps that come close to the derivative bound.
    Sharpness(SharpnessArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Verify(_) => "verify",
            Self::Gradient(_) => "gradient",
            Self::Growth(_) => "growth",
            Self::Coeffs(_) => "coeffs",
            Self::Lemma(_) => "lemma",
            Self::Extremal(_) => "extremal",
            Self::Random(_) => "random",
            Self::Sharpness(_) => "sharpness",
        }
    }
}

/// Where to evaluate pointwise checks. Without `--grid` or `--z` the
/// origin is used.
#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct PointArgs {
    /// Points per axis. Axis value `i` is `cap·i/(g-1)·exp(2πi·i/g)`.
    #[arg(long, conflicts_with = "z")]
    pub grid: Option<usize>,

    /// Largest modulus on each grid axis.
    #[arg(long, default_value_t = 0.9)]
    pub radius_cap: f64,

    /// A single point as `re1,im1,re2,im2,...`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_point)]
    pub z: Option<Point>,

    /// Write a CSV sweep instead of JSON lines.
    #[arg(long)]
    pub csv: bool,
}

/// Coordinates of a single point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub Vec<Complex64>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodKind {
    Exact,
    Cauchy,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct VerifyArgs {
    #[arg(long)]
    pub map: PathBuf,

    /// Multi-index as comma-separated positive integers. Repeatable.
    #[arg(long, required = true, value_parser = parse_alpha)]
    pub alpha: Vec<MultiIndex>,

    #[arg(long, value_enum, default_value_t = MethodKind::Exact)]
    pub method: MethodKind,

    #[command(flatten)]
    pub points: PointArgs,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct GradientArgs {
    #[arg(long)]
    pub map: PathBuf,

    /// Quasi-random directions sampled before refinement.
    #[arg(long, default_value_t = polyschwarz::bounds::DEFAULT_DIRECTION_SAMPLES)]
    pub samples: usize,

    #[command(flatten)]
    pub points: PointArgs,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct GrowthArgs {
    #[arg(long)]
    pub map: PathBuf,

    #[command(flatten)]
    pub points: PointArgs,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct CoeffsArgs {
    #[arg(long)]
    pub map: PathBuf,

    #[arg(long, default_value_t = 6)]
    pub max_degree: u32,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct LemmaArgs {
    #[arg(long)]
    pub m: u32,

    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub gamma: f64,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct ExtremalArgs {
    /// Unimodular factor, `re` or `re,im`.
    #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = parse_complex)]
    pub gamma: Complex64,

    /// Zero of the disk automorphism.
    #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = parse_complex)]
    pub a: Complex64,

    /// Unimodular rotation of the disk automorphism.
    #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = parse_complex)]
    pub lambda: Complex64,

    /// Truncation degree of the series.
    #[arg(long, default_value_t = 32)]
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct RandomArgs {
    #[arg(long)]
    pub n: usize,

    /// Codomain dimension.
    #[arg(long = "N", default_value_t = 1)]
    pub codim: usize,

    #[arg(long)]
    pub degree: u32,

    /// The coefficient l1 norm is `1 - margin`.
    #[arg(long, default_value_t = 1e-3)]
    pub margin: f64,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct SharpnessArgs {
    /// Dimension. Defaults to the length of `--alpha`.
    #[arg(long)]
    pub n: Option<usize>,

    #[arg(long, value_parser = parse_alpha)]
    pub alpha: MultiIndex,

    #[arg(long, default_value_t = 2000)]
    pub budget: usize,

    #[arg(long, default_value_t = Family::ColonnaTensor)]
    pub family: Family,
}

pub fn parse_alpha(s: &str) -> Result<MultiIndex, String> {
    let parts = s
        .split(',')
        .map(|p| {
            let p = p.trim();
            match p.parse::<u32>() {
                Ok(0) => Err("every component of alpha must be positive".to_string()),
                Ok(v) => Ok(v),
                Err(_) => Err(format!("{p:?} is not a positive integer")),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    MultiIndex::new(parts).map_err(|e| e.to_string())
}

fn parse_floats(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|p| {
            let p = p.trim();
            p.parse::<f64>()
                .map_err(|_| format!("{p:?} is not a number"))
        })
        .collect()
}

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    match parse_floats(s)?.as_slice() {
        [re] => Ok(Complex64::new(*re, 0.0)),
        [re, im] => Ok(Complex64::new(*re, *im)),
        _ => Err("expected `re` or `re,im`".into()),
    }
}

pub fn parse_point(s: &str) -> Result<Point, String> {
    let v = parse_floats(s)?;
    if v.is_empty() || v.len() % 2 != 0 {
        return Err("expected an even number of values `re1,im1,re2,im2,...`".into());
    }
    Ok(Point(
        v.chunks(2).map(|c| Complex64::new(c[0], c[1])).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn alpha_parsing() {
        assert_eq!(parse_alpha("1, 2").unwrap().components(), &[1, 2]);
        assert!(parse_alpha("1,0").unwrap_err().contains("positive"));
        assert!(parse_alpha("1,x").is_err());
        assert!(parse_alpha("").is_err());
    }

    #[test]
    fn complex_and_point_parsing() {
        assert_eq!(parse_complex("-0.5").unwrap(), Complex64::new(-0.5, 0.0));
        assert_eq!(parse_complex("0.1,-2").unwrap(), Complex64::new(0.1, -2.0));
        assert!(parse_complex("1,2,3").is_err());
        assert_eq!(parse_point("0.1,0.2,0.3,0.4").unwrap().0.len(), 2);
        assert!(parse_point("0.1,0.2,0.3").is_err());
    }

    #[test]
    fn run_config_round_trips() {
        let cli = Cli::try_parse_from([
            "polyschwarz",
            "--seed",
            "3",
            "verify",
            "--map",
            "f.json",
            "--alpha",
            "1,1",
            "--alpha",
            "2,1",
            "--grid",
            "4",
            "--method",
            "cauchy",
            "--nodes",
            "64",
        ])
        .unwrap();
        let Action::Command(command) = cli.action else {
            panic!()
        };
        let cfg = RunConfig {
            global: cli.global,
            command,
        };
        let text = serde_json::to_string(&cfg).unwrap();
        assert!(text.contains("\"command\":\"verify\""));
        let back: RunConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cfg);
        assert_eq!(back.quadrature().nodes, Some(64));
    }

    #[test]
    fn negative_values_parse() {
        let cli = Cli::try_parse_from([
            "polyschwarz",
            "extremal",
            "--a",
            "-0.3,0.2",
            "--lambda",
            "0,-1",
            "--degree",
            "8",
        ])
        .unwrap();
        let Action::Command(Command::Extremal(args)) = cli.action else {
            panic!()
        };
        assert_eq!(args.a, Complex64::new(-0.3, 0.2));
        assert_eq!(args.lambda, Complex64::new(0.0, -1.0));
    }
}
