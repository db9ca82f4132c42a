//! The three ways of placing the first centroids, and how Lloyd's SSE falls
//! iteration by iteration from each of them.
//!
//!     cargo run --example init_strategies

use kplus_means::{run_lloyd, Centroids, Dataset, InitStrategy, LloydConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

fn main() -> kplus_means::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let noise = Normal::new(0.0, 0.8).unwrap();
    let centres = [[0.0, 0.0], [6.0, 1.0], [3.0, 7.0]];
    let points: Vec<[f64; 2]> = (0..300)
        .map(|i| {
            let c = centres[i % 3];
            [c[0] + noise.sample(&mut rng), c[1] + noise.sample(&mut rng)]
        })
        .collect();
    let data = Dataset::new(&points)?;

    let configs = [
        ("first distinct", LloydConfig::new(3)),
        (
            "seeded sample (seed 1)",
            LloydConfig::new(3)
                .with_init(InitStrategy::SeededSample)
                .with_seed(1),
        ),
        (
            "seeded sample (seed 2)",
            LloydConfig::new(3)
                .with_init(InitStrategy::SeededSample)
                .with_seed(2),
        ),
        (
            "explicit",
            LloydConfig::explicit(Centroids::new(&[[-5.0, -5.0], [10.0, 0.0], [0.0, 10.0]])?),
        ),
    ];
    for (name, config) in configs {
        let r = run_lloyd(&data, &config)?;
        let trace: Vec<String> = r.sse_history.iter().map(|s| format!("{s:.1}")).collect();
        println!(
            "{name:>24}: converged={} after {} iterations, SSE trace [{}]",
            r.converged,
            r.iterations_used,
            trace.join(", ")
        );
    }
    Ok(())
}
