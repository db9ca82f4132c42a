//! Command-line front end. The `kplus` binary is a thin wrapper over
//! [`main_with_args`], which keeps every code path testable in-process.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::error::{Error, Result};
use crate::geometry::Centroids;
use crate::input::parse_csv;
use crate::kplus::{run_kplus, KPlusConfig, SplitThresholds};
use crate::lloyd::{run_lloyd, InitStrategy, LloydConfig};
use crate::plot::render_svg;
use crate::report::{emit_results, ClusteringRun, OutputFormat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Kmeans,
    Kplus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InitArg {
    First,
    Random,
    Explicit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

fn parse_coords(s: &str) -> std::result::Result<Vec<f64>, String> {
    s.split(',')
        .map(|c| {
            let c = c.trim();
            c.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("invalid coordinate {c:?} in {s:?}"))
        })
        .collect()
}

/// Cluster a CSV dataset with K-Means or K+ Means.
#[derive(Debug, Clone, Parser)]
#[command(name = "kplus", version)]
pub struct RunSpec {
    /// CSV file: optional header row, optional leading label column.
    #[arg(long)]
    pub input: PathBuf,

    #[arg(long, value_enum, default_value = "kplus")]
    pub algorithm: Algorithm,

    /// Initial cluster count; defaults to the number of --centroid flags.
    #[arg(long = "k")]
    pub k: Option<usize>,

    /// Initialisation; defaults to `explicit` with --centroid, else `first`.
    #[arg(long, value_enum)]
    pub init: Option<InitArg>,

    /// Explicit initial centroid, e.g. `--centroid 1,4`. Repeatable.
    #[arg(long = "centroid", value_parser = parse_coords)]
    pub centroids: Vec<Vec<f64>>,

    /// Seed for `--init random` [default: 0].
    #[arg(long)]
    pub seed: Option<u64>,

    /// Split when a cluster's mean distance exceeds tau times the baseline [default: 1.5].
    #[arg(long)]
    pub tau: Option<f64>,

    /// Split only if the cluster's max distance is at least kappa times its mean [default: 1.25].
    #[arg(long)]
    pub kappa: Option<f64>,

    /// Centroid movement tolerance for convergence [default: 1e-9].
    #[arg(long = "tol")]
    pub movement_tolerance: Option<f64>,

    /// Lloyd iteration cap per run [default: 100].
    #[arg(long = "max-iter")]
    pub max_iterations: Option<usize>,

    /// Never grow beyond this many clusters [default: number of points].
    #[arg(long)]
    pub max_clusters: Option<usize>,

    /// Cap on split passes [default: number of points].
    #[arg(long = "max-outer")]
    pub max_outer_iterations: Option<usize>,

    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,

    /// Write an SVG scatter plot here (2-D data only).
    #[arg(long = "plot")]
    pub plot_path: Option<PathBuf>,
}

impl RunSpec {
    fn lloyd_config(&self) -> Result<LloydConfig> {
        let explicit = !self.centroids.is_empty();
        let init = match (self.init, explicit) {
            (Some(InitArg::Explicit), false) => {
                return Err(Error::InvalidConfig(
                    "--init explicit needs at least one --centroid".into(),
                ))
            }
            (Some(InitArg::First | InitArg::Random), true) => {
                return Err(Error::InvalidConfig(
                    "--centroid cannot be combined with --init first/random".into(),
                ))
            }
            (_, true) => InitStrategy::Explicit(Centroids::new(&self.centroids)?),
            (Some(InitArg::Random), false) => InitStrategy::SeededSample,
            (Some(InitArg::First) | None, false) => InitStrategy::FirstDistinct,
        };
        let k = match (self.k, explicit) {
            (Some(k), true) if k != self.centroids.len() => {
                return Err(Error::InvalidConfig(format!(
                    "--k {k} does not match the {} --centroid values",
                    self.centroids.len()
                )))
            }
            (Some(k), _) => k,
            (None, true) => self.centroids.len(),
            (None, false) => {
                return Err(Error::InvalidConfig(
                    "--k is required unless --centroid is given".into(),
                ))
            }
        };
        let mut config = LloydConfig::new(k)
            .with_init(init)
            .with_seed(self.seed.unwrap_or(0));
        if let Some(tol) = self.movement_tolerance {
            config.movement_tolerance = tol;
        }
        if let Some(max) = self.max_iterations {
            config.max_iterations = max;
        }
        Ok(config)
    }

    fn thresholds(&self) -> Result<SplitThresholds> {
        let mut th = SplitThresholds::default();
        if let Some(tau) = self.tau {
            th.avg_ratio_tau = tau;
        }
        if let Some(kappa) = self.kappa {
            th.max_ratio_kappa = kappa;
        }
        th.validate()?;
        Ok(th)
    }
}

/// Executes one run, writing the report to `out` and the plot (if requested).
pub fn run_cli(spec: &RunSpec, out: &mut impl Write) -> Result<()> {
    let dataset = parse_csv(&spec.input)?;
    let lloyd = spec.lloyd_config()?;
    let thresholds = spec.thresholds()?;

    let run = match spec.algorithm {
        Algorithm::Kmeans => ClusteringRun::KMeans(run_lloyd(&dataset, &lloyd)?),
        Algorithm::Kplus => {
            let config = KPlusConfig {
                lloyd,
                thresholds,
                max_clusters: spec.max_clusters,
                max_outer_iterations: spec.max_outer_iterations,
            };
            ClusteringRun::KPlus(run_kplus(&dataset, &config)?)
        }
    };

    if let Some(path) = &spec.plot_path {
        let svg = render_svg(&dataset, run.final_state())?;
        std::fs::write(path, svg).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        })?;
    }

    let report = emit_results(&dataset, &run, spec.format.into())?;
    out.write_all(report.as_bytes())
        .map_err(|source| Error::Io {
            path: "<stdout>".into(),
            source,
        })
}

/// Parses `args` and runs; returns the process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let spec = match RunSpec::try_parse_from(args) {
        Ok(spec) => spec,
        Err(e) => {
            let code = e.exit_code();
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match run_cli(&spec, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
