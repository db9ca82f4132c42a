//! Machine-readable run reports (JSON and CSV).
//!
//! Distance statistics are rounded to four decimals in the JSON report;
//! every other number is written at full precision using Rust's shortest
//! round-trip formatting, so repeated runs produce identical bytes and CSV
//! coordinates parse back to the exact input values.

use serde::Serialize;

use crate::error::Result;
use crate::geometry::{cluster_stats, ClusterStats, Dataset};
use crate::kplus::{KPlusResult, StopReason};
use crate::lloyd::KMeansResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

/// A completed run of either algorithm.
#[derive(Debug, Clone, PartialEq)]
pub enum ClusteringRun {
    KMeans(KMeansResult),
    KPlus(KPlusResult),
}

impl ClusteringRun {
    pub fn algorithm(&self) -> &'static str {
        match self {
            Self::KMeans(_) => "kmeans",
            Self::KPlus(_) => "kplus",
        }
    }

    /// The converged K-Means state the run ended in.
    pub fn final_state(&self) -> &KMeansResult {
        match self {
            Self::KMeans(r) => r,
            Self::KPlus(r) => &r.final_result,
        }
    }
}

fn round4(x: f64) -> f64 {
    (x * 1e4).round() / 1e4 + 0.0
}

#[derive(Serialize)]
struct StatsJson {
    cluster: usize,
    size: usize,
    min: f64,
    max: f64,
    avg: f64,
    nearest_point: usize,
    farthest_point: usize,
}

impl From<&ClusterStats> for StatsJson {
    fn from(s: &ClusterStats) -> Self {
        Self {
            cluster: s.cluster,
            size: s.size,
            min: round4(s.min_dist),
            max: round4(s.max_dist),
            avg: round4(s.avg_dist),
            nearest_point: s.nearest_point,
            farthest_point: s.farthest_point,
        }
    }
}

#[derive(Serialize)]
struct SplitJson {
    iteration: usize,
    source_cluster: usize,
    outlier_point: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    outlier_label: Option<String>,
    outlier_distance: f64,
    trigger_stats: StatsJson,
    sse_before: f64,
    sse_after: f64,
}

#[derive(Serialize)]
struct IterationsJson {
    lloyd_final_run: usize,
    lloyd_total: usize,
    outer: usize,
}

#[derive(Serialize)]
struct ReportJson {
    algorithm: &'static str,
    n: usize,
    dim: usize,
    initial_k: usize,
    final_k: usize,
    labels: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    point_labels: Option<Vec<String>>,
    centroids: Vec<Vec<f64>>,
    clusters: Vec<StatsJson>,
    empty_clusters: Vec<usize>,
    sse: f64,
    converged: bool,
    iterations: IterationsJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    stop_reason: Option<&'static str>,
    splits: Vec<SplitJson>,
}

fn json_report(dataset: &Dataset, run: &ClusteringRun) -> Result<String> {
    let state = run.final_state();
    let (initial_k, stats, empty, splits, iterations, stop_reason) = match run {
        ClusteringRun::KMeans(r) => {
            let report = cluster_stats(dataset, &r.assignment, &r.centroids)?;
            let iterations = IterationsJson {
                lloyd_final_run: r.iterations_used,
                lloyd_total: r.iterations_used,
                outer: 0,
            };
            (
                r.k(),
                report.clusters,
                report.empty,
                Vec::new(),
                iterations,
                None,
            )
        }
        ClusteringRun::KPlus(r) => {
            let splits = r
                .splits
                .iter()
                .map(|s| SplitJson {
                    iteration: s.iteration,
                    source_cluster: s.source_cluster,
                    outlier_point: s.outlier_point,
                    outlier_label: dataset.label(s.outlier_point).map(str::to_owned),
                    outlier_distance: round4(s.trigger_stats.max_dist),
                    trigger_stats: (&s.trigger_stats).into(),
                    sse_before: s.sse_before,
                    sse_after: s.sse_after,
                })
                .collect();
            let iterations = IterationsJson {
                lloyd_final_run: r.final_result.iterations_used,
                lloyd_total: r.total_lloyd_iterations,
                outer: r.outer_iterations,
            };
            let reason = match r.stop_reason {
                StopReason::Stable => "stable",
                StopReason::MaxClusters => "max_clusters",
                StopReason::MaxOuterIterations => "max_outer_iterations",
            };
            (
                r.initial_k,
                r.stats.clone(),
                r.empty_clusters.clone(),
                splits,
                iterations,
                Some(reason),
            )
        }
    };

    let report = ReportJson {
        algorithm: run.algorithm(),
        n: dataset.len(),
        dim: dataset.dim(),
        initial_k,
        final_k: state.k(),
        labels: state.assignment.labels().to_vec(),
        point_labels: dataset.labels().map(<[String]>::to_vec),
        centroids: state.centroids.to_rows(),
        clusters: stats.iter().map(StatsJson::from).collect(),
        empty_clusters: empty,
        sse: state.final_sse,
        converged: state.converged,
        iterations,
        stop_reason,
        splits,
    };
    let mut out = serde_json::to_string_pretty(&report).expect("report serializes");
    out.push('\n');
    Ok(out)
}

fn csv_report(dataset: &Dataset, run: &ClusteringRun) -> String {
    let labels = run.final_state().assignment.labels();
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());

    let mut header: Vec<String> = Vec::new();
    if dataset.labels().is_some() {
        header.push("label".into());
    }
    header.extend((1..=dataset.dim()).map(|i| format!("x{i}")));
    header.push("cluster".into());
    w.write_record(&header).expect("in-memory write");

    for (i, p) in dataset.points().enumerate() {
        let mut row: Vec<String> = Vec::with_capacity(p.len() + 2);
        if let Some(label) = dataset.label(i) {
            row.push(label.to_owned());
        }
        row.extend(p.iter().map(|c| c.to_string()));
        row.push(labels[i].to_string());
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

/// Renders a finished run in the requested format.
pub fn emit_results(
    dataset: &Dataset,
    run: &ClusteringRun,
    format: OutputFormat,
) -> Result<String> {
    match format {
        OutputFormat::Json => json_report(dataset, run),
        OutputFormat::Csv => Ok(csv_report(dataset, run)),
    }
}
