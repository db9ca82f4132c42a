//! K+ Means on three blobs plus a pair of far outliers, and how the two split
//! thresholds change what gets promoted.
//!
//!     cargo run --example outlier_splitting

use kplus_means::{run_kplus, Dataset, KPlusConfig, LloydConfig, SplitThresholds};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

fn main() -> kplus_means::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let noise = Normal::new(0.0, 1.0).unwrap();
    let centres = [(0.0, 0.0), (15.0, 0.0), (0.0, 15.0)];
    let mut points: Vec<[f64; 2]> = (0..120)
        .map(|i| {
            let (cx, cy) = centres[i % 3];
            [cx + noise.sample(&mut rng), cy + noise.sample(&mut rng)]
        })
        .collect();
    // a small far-off group that the (0, 0) blob absorbs at k = 3
    points.extend([[-25.0, -20.0], [-29.0, -16.0]]);
    let data = Dataset::new(&points)?;

    for (tau, kappa) in [(1.5, 1.25), (3.0, 1.25), (1.5, 4.0), (f64::INFINITY, 1.0)] {
        let config =
            KPlusConfig::new(LloydConfig::new(3)).with_thresholds(SplitThresholds::new(tau, kappa));
        let r = run_kplus(&data, &config)?;
        let promoted: Vec<usize> = r.splits.iter().map(|s| s.outlier_point).collect();
        println!(
            "tau {tau:>4} kappa {kappa:>4}: k {} -> {}, promoted {:?}, SSE {:.1}, stop {:?}",
            r.initial_k, r.final_k, promoted, r.final_result.final_sse, r.stop_reason
        );
    }
    Ok(())
}
