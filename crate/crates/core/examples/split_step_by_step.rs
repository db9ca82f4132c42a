//! One K+ Means pass done by hand with the building blocks: statistics,
//! flagging, outlier lookup and the rerun with an extra representative.
//!
//!     cargo run --example split_step_by_step

use kplus_means::fixture::{table1, TABLE1_INIT};
use kplus_means::kplus::split_rerun;
use kplus_means::{
    cluster_stats, find_outlier, flag_suspicious, run_lloyd, Centroids, LloydConfig,
    SplitThresholds,
};

fn main() -> kplus_means::Result<()> {
    let data = table1();
    let config = LloydConfig::explicit(Centroids::new(&TABLE1_INIT)?);
    let thresholds = SplitThresholds::default();
    let mut state = run_lloyd(&data, &config)?;

    loop {
        let report = cluster_stats(&data, &state.assignment, &state.centroids)?;
        println!("k = {}", state.k());
        for s in &report.clusters {
            println!(
                "  cluster {}: size {}, min {:.4}, max {:.4}, avg {:.4}",
                s.cluster, s.size, s.min_dist, s.max_dist, s.avg_dist
            );
        }
        let Some(cluster) = flag_suspicious(&report.clusters, &thresholds) else {
            println!("  nothing flagged, done");
            break;
        };
        let outlier = find_outlier(&data, &state.assignment, &state.centroids, cluster)?;
        println!(
            "  cluster {cluster} flagged; promoting point {} {:?}",
            data.label(outlier).unwrap_or("?"),
            data.point(outlier)
        );
        state = split_rerun(&data, &state, outlier, &config)?;
    }
    Ok(())
}
