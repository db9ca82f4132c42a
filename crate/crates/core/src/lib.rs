//! Deterministic K-Means and K+ Means clustering.
//!
//! K+ Means starts from an ordinary Lloyd run with a user-chosen `k`, then
//! repeatedly inspects the Min/Max/Avg member-to-centroid distances of every
//! cluster. When one cluster's average distance is far above the others' and
//! its farthest member is far above its own average, that member is promoted
//! to a new representative and Lloyd reconverges with one more cluster. The
//! number of clusters therefore adapts to the data.
//!
//! ```
//! use kplus_means::{fixture, run_kplus, Centroids, KPlusConfig, LloydConfig};
//!
//! let data = fixture::table1();
//! let init = Centroids::new(&fixture::TABLE1_INIT).unwrap();
//! let result = run_kplus(&data, &KPlusConfig::new(LloydConfig::explicit(init))).unwrap();
//! assert_eq!(result.final_k, 3);
//! assert_eq!(result.splits[0].outlier_point, 5); // p6
//! ```
//!
//! See the `examples/` directory of this crate for one program per major
//! capability, and the `kplus` binary for command-line use.

pub mod cli;
pub mod error;
pub mod fixture;
pub mod geometry;
pub mod input;
pub mod kplus;
pub mod lloyd;
pub mod plot;
pub mod report;

pub use error::{Error, Result};
pub use geometry::{
    centroid_of, cluster_stats, euclidean_distance, sse, Assignment, Centroids, ClusterStats,
    Dataset, Point, StatsReport,
};
pub use input::{parse_csv, parse_csv_str};
pub use kplus::{
    find_outlier, flag_suspicious, run_kplus, KPlusConfig, KPlusResult, SplitEvent,
    SplitThresholds, StopReason,
};
pub use lloyd::{
    assign_points, init_centroids, run_lloyd, update_centroids, InitStrategy, KMeansResult,
    LloydConfig,
};
pub use plot::{emit_plot, render_svg};
pub use report::{emit_results, ClusteringRun, OutputFormat};
