//! K+ Means: K-Means that grows `k` by promoting outliers.
//!
//! After Lloyd converges, each cluster's member-to-centroid distances are
//! summarised as Min/Max/Avg. A cluster is flagged when its average distance
//! stands out against the other clusters and its maximum distance stands out
//! against its own average. The member farthest from the flagged cluster's
//! centroid then becomes an extra representative, Lloyd reconverges with
//! `k + 1` centroids, and the check repeats. The run stops once no cluster is
//! flagged (or a cluster-count / outer-iteration cap is reached).
//!
//! Flagging rule for cluster `i` (clusters of size one never participate):
//!
//! ```text
//! baseline_i = mean(avg_j for j != i, size_j >= 2)
//! flag i  <=>  baseline_i > eps
//!          &&  avg_i > tau * baseline_i
//!          &&  max_i >= kappa * avg_i
//! ```

use crate::error::{Error, Result};
use crate::geometry::{
    check_consistency, cluster_stats, distance, Assignment, Centroids, ClusterStats, Dataset,
};
use crate::lloyd::{run_lloyd, KMeansResult, LloydConfig};

pub const DEFAULT_TAU: f64 = 1.5;
pub const DEFAULT_KAPPA: f64 = 1.25;
pub const DEFAULT_BASELINE_EPSILON: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitThresholds {
    /// Ratio of a cluster's avg distance to the baseline above which it is suspicious.
    pub avg_ratio_tau: f64,
    /// Ratio of max to avg distance required before a suspicious cluster splits.
    pub max_ratio_kappa: f64,
    pub baseline_epsilon: f64,
}

impl Default for SplitThresholds {
    fn default() -> Self {
        Self {
            avg_ratio_tau: DEFAULT_TAU,
            max_ratio_kappa: DEFAULT_KAPPA,
            baseline_epsilon: DEFAULT_BASELINE_EPSILON,
        }
    }
}

impl SplitThresholds {
    pub fn new(tau: f64, kappa: f64) -> Self {
        Self {
            avg_ratio_tau: tau,
            max_ratio_kappa: kappa,
            ..Self::default()
        }
    }

    // negated comparisons so that NaN is rejected too
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn validate(&self) -> Result<()> {
        // tau may be +inf to disable splitting altogether
        if !(self.avg_ratio_tau > 1.0) {
            return Err(Error::InvalidConfig(format!(
                "tau must be greater than 1, got {}",
                self.avg_ratio_tau
            )));
        }
        if !(self.max_ratio_kappa >= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "kappa must be at least 1, got {}",
                self.max_ratio_kappa
            )));
        }
        if !(self.baseline_epsilon > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "baseline epsilon must be positive, got {}",
                self.baseline_epsilon
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KPlusConfig {
    /// Configuration of the initial run; reruns reuse its tolerance and cap.
    pub lloyd: LloydConfig,
    pub thresholds: SplitThresholds,
    /// Defaults to `n` when `None`.
    pub max_clusters: Option<usize>,
    /// Cap on stats/flag passes. Defaults to `n` when `None`.
    pub max_outer_iterations: Option<usize>,
}

impl KPlusConfig {
    pub fn new(lloyd: LloydConfig) -> Self {
        Self {
            lloyd,
            thresholds: SplitThresholds::default(),
            max_clusters: None,
            max_outer_iterations: None,
        }
    }

    pub fn with_thresholds(mut self, thresholds: SplitThresholds) -> Self {
        self.thresholds = thresholds;
        self
    }

    pub fn with_max_clusters(mut self, max_clusters: usize) -> Self {
        self.max_clusters = Some(max_clusters);
        self
    }

    pub fn with_max_outer_iterations(mut self, max_outer: usize) -> Self {
        self.max_outer_iterations = Some(max_outer);
        self
    }

    fn resolved_caps(&self, dataset: &Dataset) -> Result<(usize, usize)> {
        self.lloyd.validate(dataset)?;
        self.thresholds.validate()?;
        let n = dataset.len();
        let max_clusters = self.max_clusters.unwrap_or(n);
        if max_clusters < self.lloyd.k || max_clusters > n {
            return Err(Error::InvalidConfig(format!(
                "max_clusters must lie in [{}, {n}], got {max_clusters}",
                self.lloyd.k
            )));
        }
        let max_outer = self.max_outer_iterations.unwrap_or(n);
        if max_outer == 0 {
            return Err(Error::InvalidConfig(
                "max_outer_iterations must be at least 1".into(),
            ));
        }
        Ok((max_clusters, max_outer))
    }
}

/// One outlier promotion.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitEvent {
    /// Zero-based outer iteration in which the split happened.
    pub iteration: usize,
    pub source_cluster: usize,
    pub outlier_point: usize,
    pub trigger_stats: ClusterStats,
    pub sse_before: f64,
    pub sse_after: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    /// No cluster was flagged.
    Stable,
    MaxClusters,
    MaxOuterIterations,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KPlusResult {
    pub final_result: KMeansResult,
    /// Stats of every nonempty cluster of the final state.
    pub stats: Vec<ClusterStats>,
    pub empty_clusters: Vec<usize>,
    pub splits: Vec<SplitEvent>,
    pub initial_k: usize,
    pub final_k: usize,
    /// Number of stats/flag passes performed.
    pub outer_iterations: usize,
    /// Lloyd iterations summed over the initial run and every rerun.
    pub total_lloyd_iterations: usize,
    pub stop_reason: StopReason,
}

/// Picks the cluster to split, if any.
///
/// Among suspicious clusters the one with the largest average distance wins,
/// lowest cluster index on ties.
pub fn flag_suspicious(stats: &[ClusterStats], thresholds: &SplitThresholds) -> Option<usize> {
    let eligible: Vec<&ClusterStats> = stats.iter().filter(|s| s.size >= 2).collect();
    if eligible.len() < 2 {
        return None;
    }
    let others = (eligible.len() - 1) as f64;

    let mut best: Option<&ClusterStats> = None;
    for s in &eligible {
        let baseline = eligible
            .iter()
            .filter(|o| o.cluster != s.cluster)
            .map(|o| o.avg_dist)
            .sum::<f64>()
            / others;
        let suspicious = baseline > thresholds.baseline_epsilon
            && s.avg_dist > thresholds.avg_ratio_tau * baseline
            && s.max_dist >= thresholds.max_ratio_kappa * s.avg_dist;
        if !suspicious {
            continue;
        }
        let better = match best {
            None => true,
            Some(b) => {
                s.avg_dist > b.avg_dist || (s.avg_dist == b.avg_dist && s.cluster < b.cluster)
            }
        };
        if better {
            best = Some(s);
        }
    }
    best.map(|s| s.cluster)
}

/// The member of `cluster` farthest from its centroid (lowest point index on ties).
pub fn find_outlier(
    dataset: &Dataset,
    assignment: &Assignment,
    centroids: &Centroids,
    cluster: usize,
) -> Result<usize> {
    check_consistency(dataset, assignment, centroids)?;
    if cluster >= centroids.k() {
        return Err(Error::InvalidConfig(format!(
            "cluster {cluster} does not exist (k = {})",
            centroids.k()
        )));
    }
    let centre = centroids.position(cluster);
    assignment
        .members(cluster)
        .map(|i| (i, distance(dataset.point(i), centre)))
        .fold(None, |best: Option<(usize, f64)>, (i, d)| match best {
            Some((_, bd)) if bd >= d => best,
            _ => Some((i, d)),
        })
        .map(|(i, _)| i)
        .ok_or(Error::EmptyCluster(cluster))
}

/// Reruns Lloyd from `previous`'s centroids plus the position of `outlier`.
pub fn split_rerun(
    dataset: &Dataset,
    previous: &KMeansResult,
    outlier: usize,
    base: &LloydConfig,
) -> Result<KMeansResult> {
    let mut seeds = previous.centroids.clone();
    seeds.push(dataset.point(outlier))?;
    let config = LloydConfig {
        seed: base.seed,
        max_iterations: base.max_iterations,
        movement_tolerance: base.movement_tolerance,
        ..LloydConfig::explicit(seeds)
    };
    run_lloyd(dataset, &config)
}

pub fn run_kplus(dataset: &Dataset, config: &KPlusConfig) -> Result<KPlusResult> {
    let (max_clusters, max_outer) = config.resolved_caps(dataset)?;
    let initial_k = config.lloyd.k;

    let mut current = run_lloyd(dataset, &config.lloyd)?;
    let mut total_lloyd_iterations = current.iterations_used;
    let mut splits = Vec::new();
    let mut outer = 0;

    let (report, stop_reason) = loop {
        outer += 1;
        let report = cluster_stats(dataset, &current.assignment, &current.centroids)?;
        if current.k() >= max_clusters {
            break (report, StopReason::MaxClusters);
        }
        let Some(flagged) = flag_suspicious(&report.clusters, &config.thresholds) else {
            break (report, StopReason::Stable);
        };
        if outer >= max_outer {
            break (report, StopReason::MaxOuterIterations);
        }
        let trigger = *report.get(flagged).expect("flagged cluster has stats");
        let outlier = find_outlier(dataset, &current.assignment, &current.centroids, flagged)?;
        let next = split_rerun(dataset, &current, outlier, &config.lloyd)?;
        total_lloyd_iterations += next.iterations_used;
        splits.push(SplitEvent {
            iteration: outer - 1,
            source_cluster: flagged,
            outlier_point: outlier,
            trigger_stats: trigger,
            sse_before: current.final_sse,
            sse_after: next.final_sse,
        });
        current = next;
    };

    Ok(KPlusResult {
        final_k: current.k(),
        final_result: current,
        stats: report.clusters,
        empty_clusters: report.empty,
        splits,
        initial_k,
        outer_iterations: outer,
        total_lloyd_iterations,
        stop_reason,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture::{table1, TABLE1_INIT};

    fn stats(triples: &[(f64, f64, f64)]) -> Vec<ClusterStats> {
        triples
            .iter()
            .enumerate()
            .map(|(cluster, &(min_dist, max_dist, avg_dist))| ClusterStats {
                cluster,
                size: 3,
                min_dist,
                max_dist,
                avg_dist,
                nearest_point: 0,
                farthest_point: 0,
            })
            .collect()
    }

    #[test]
    fn flags_the_worked_example_cluster() {
        let th = SplitThresholds::new(1.5, 1.25);
        let s = stats(&[(0.33, 1.20, 0.86), (1.30, 3.29, 2.39)]);
        assert_eq!(flag_suspicious(&s, &th), Some(1));
    }

    #[test]
    fn similar_averages_are_not_flagged() {
        let th = SplitThresholds::new(1.5, 1.25);
        let s = stats(&[(0.33, 1.20, 0.86), (0.71, 1.58, 1.14), (0.67, 1.05, 0.92)]);
        assert_eq!(flag_suspicious(&s, &th), None);
    }

    #[test]
    fn single_cluster_never_flagged() {
        let s = stats(&[(0.0, 100.0, 50.0)]);
        assert_eq!(flag_suspicious(&s, &SplitThresholds::default()), None);
    }

    #[test]
    fn singletons_are_excluded_from_baseline() {
        let mut s = stats(&[(0.0, 0.0, 0.0), (1.0, 3.0, 2.0), (0.5, 1.5, 1.0)]);
        s[0].size = 1;
        // baseline for cluster 1 is 1.0 (cluster 2 only)
        assert_eq!(flag_suspicious(&s, &SplitThresholds::default()), Some(1));
        s[2].size = 1;
        assert_eq!(flag_suspicious(&s, &SplitThresholds::default()), None);
    }

    #[test]
    fn degenerate_baseline_blocks_flagging() {
        let s = stats(&[(0.0, 0.0, 0.0), (1.0, 3.0, 2.0)]);
        assert_eq!(flag_suspicious(&s, &SplitThresholds::default()), None);
    }

    #[test]
    fn max_ratio_gate() {
        // avg far above baseline but max close to avg: no split
        let s = stats(&[(0.5, 1.5, 1.0), (4.0, 4.5, 4.2)]);
        assert_eq!(flag_suspicious(&s, &SplitThresholds::new(1.5, 1.25)), None);
        assert_eq!(
            flag_suspicious(&s, &SplitThresholds::new(1.5, 1.0)),
            Some(1)
        );
    }

    #[test]
    fn largest_average_wins_then_lowest_index() {
        let s = stats(&[
            (0.1, 0.2, 0.15),
            (0.1, 0.2, 0.15),
            (1.0, 9.0, 3.0),
            (1.0, 9.0, 3.0),
        ]);
        assert_eq!(
            flag_suspicious(&s, &SplitThresholds::new(1.5, 1.25)),
            Some(2)
        );
        let s = stats(&[
            (0.1, 0.2, 0.15),
            (0.1, 0.2, 0.15),
            (1.0, 9.0, 3.0),
            (1.0, 9.0, 4.0),
        ]);
        assert_eq!(
            flag_suspicious(&s, &SplitThresholds::new(1.5, 1.25)),
            Some(3)
        );
    }

    #[test]
    fn threshold_validation() {
        assert!(SplitThresholds::new(1.0, 1.25).validate().is_err());
        assert!(SplitThresholds::new(1.5, 0.9).validate().is_err());
        assert!(SplitThresholds::new(f64::NAN, 1.25).validate().is_err());
        assert!(SplitThresholds::new(f64::INFINITY, 1.0).validate().is_ok());
    }

    #[test]
    fn outlier_of_worked_example() {
        let data = table1();
        let a = Assignment::new(vec![0, 0, 0, 1, 1, 1, 1, 1, 1, 1], 2).unwrap();
        let c = Centroids::new(&[[4.0 / 3.0, 3.0], [50.0 / 7.0, 33.0 / 7.0]]).unwrap();
        let p = find_outlier(&data, &a, &c, 1).unwrap();
        assert_eq!(p, 5);
        let d = distance(data.point(p), c.position(1));
        assert!((d - 3.29).abs() <= 0.005);
    }

    #[test]
    fn outlier_edge_cases() {
        let data = Dataset::new(&[[1.0, 1.0], [1.0, 1.0], [1.0, 1.0], [5.0, 5.0]]).unwrap();
        let a = Assignment::new(vec![0, 0, 0, 1], 3).unwrap();
        let c = Centroids::new(&[[1.0, 1.0], [5.0, 5.0], [0.0, 0.0]]).unwrap();
        assert_eq!(find_outlier(&data, &a, &c, 0).unwrap(), 0);
        assert_eq!(find_outlier(&data, &a, &c, 1).unwrap(), 3);
        assert!(matches!(
            find_outlier(&data, &a, &c, 2),
            Err(Error::EmptyCluster(2))
        ));
    }

    #[test]
    fn worked_example_kplus() {
        let data = table1();
        let init = Centroids::new(&TABLE1_INIT).unwrap();
        let r = run_kplus(&data, &KPlusConfig::new(LloydConfig::explicit(init))).unwrap();
        assert_eq!(r.final_k, 3);
        assert_eq!(r.stop_reason, StopReason::Stable);
        assert_eq!(r.splits.len(), 1);
        assert_eq!(r.splits[0].outlier_point, 5);
        assert_eq!(r.splits[0].source_cluster, 1);
        assert_eq!(r.outer_iterations, 2);
        assert_eq!(
            r.final_result.assignment.groups(),
            vec![vec![0, 1, 2], vec![6, 7, 8, 9], vec![3, 4, 5]]
        );
        assert!((r.final_result.final_sse - 34.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn identical_points_never_split() {
        let data = Dataset::new(&[[2.0, 2.0]; 6]).unwrap();
        let r = run_kplus(&data, &KPlusConfig::new(LloydConfig::new(1))).unwrap();
        assert_eq!(r.final_k, 1);
        assert!(r.splits.is_empty());
        let s = r.stats[0];
        assert_eq!((s.min_dist, s.max_dist, s.avg_dist), (0.0, 0.0, 0.0));
    }

    #[test]
    fn caps_are_respected() {
        let data = table1();
        let init = Centroids::new(&TABLE1_INIT).unwrap();
        let config = KPlusConfig::new(LloydConfig::explicit(init.clone())).with_max_clusters(2);
        let r = run_kplus(&data, &config).unwrap();
        assert_eq!((r.final_k, r.stop_reason), (2, StopReason::MaxClusters));

        let config = KPlusConfig::new(LloydConfig::explicit(init)).with_max_outer_iterations(1);
        let r = run_kplus(&data, &config).unwrap();
        assert_eq!(
            (r.final_k, r.stop_reason),
            (2, StopReason::MaxOuterIterations)
        );
        assert!(r.splits.is_empty());
    }

    #[test]
    fn bad_caps_rejected() {
        let data = table1();
        let config = KPlusConfig::new(LloydConfig::new(3)).with_max_clusters(2);
        assert!(run_kplus(&data, &config).is_err());
        let config = KPlusConfig::new(LloydConfig::new(3)).with_max_clusters(11);
        assert!(run_kplus(&data, &config).is_err());
        let config = KPlusConfig::new(LloydConfig::new(3)).with_max_outer_iterations(0);
        assert!(run_kplus(&data, &config).is_err());
    }
}
