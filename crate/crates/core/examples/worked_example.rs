//! K-Means and K+ Means side by side on the bundled ten-point fixture,
//! starting both from p1 and p5.
//!
//!     cargo run --example worked_example

use kplus_means::fixture::{table1, TABLE1_INIT};
use kplus_means::{
    cluster_stats, run_kplus, run_lloyd, Centroids, Dataset, KPlusConfig, LloydConfig,
};

fn names(data: &Dataset, members: &[usize]) -> String {
    members
        .iter()
        .map(|&i| data.label(i).unwrap_or("?"))
        .collect::<Vec<_>>()
        .join(",")
}

fn main() -> kplus_means::Result<()> {
    let data = table1();
    let init = Centroids::new(&TABLE1_INIT)?;

    let kmeans = run_lloyd(&data, &LloydConfig::explicit(init.clone()))?;
    println!(
        "K-Means (k = 2), {} iterations, SSE {:.4}",
        kmeans.iterations_used, kmeans.final_sse
    );
    let stats = cluster_stats(&data, &kmeans.assignment, &kmeans.centroids)?;
    for (members, s) in kmeans.assignment.groups().iter().zip(&stats.clusters) {
        println!(
            "  c{} {{{}}}  min {:.2}  max {:.2}  avg {:.2}",
            s.cluster + 1,
            names(&data, members),
            s.min_dist,
            s.max_dist,
            s.avg_dist
        );
    }

    let kplus = run_kplus(&data, &KPlusConfig::new(LloydConfig::explicit(init)))?;
    println!();
    println!(
        "K+ Means (initial k = 2) -> k+ = {}, SSE {:.4}",
        kplus.final_k, kplus.final_result.final_sse
    );
    for split in &kplus.splits {
        println!(
            "  pass {}: cluster c{} (avg {:.2}, max {:.2}) -> promote {} ; SSE {:.4} -> {:.4}",
            split.iteration + 1,
            split.source_cluster + 1,
            split.trigger_stats.avg_dist,
            split.trigger_stats.max_dist,
            data.label(split.outlier_point).unwrap_or("?"),
            split.sse_before,
            split.sse_after,
        );
    }
    for (members, s) in kplus
        .final_result
        .assignment
        .groups()
        .iter()
        .zip(&kplus.stats)
    {
        println!(
            "  c{} {{{}}}  min {:.2}  max {:.2}  avg {:.2}",
            s.cluster + 1,
            names(&data, members),
            s.min_dist,
            s.max_dist,
            s.avg_dist
        );
    }
    Ok(())
}
