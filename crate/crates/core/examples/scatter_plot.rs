//! Write SVG scatter plots of the fixture before and after K+ Means.
//!
//!     cargo run --example scatter_plot -- out_dir
//!
//! Files default to the system temp directory.

use std::path::PathBuf;

use kplus_means::fixture::{table1, TABLE1_INIT};
use kplus_means::{emit_plot, run_kplus, run_lloyd, Centroids, KPlusConfig, LloydConfig};

fn main() -> kplus_means::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    let data = table1();
    let config = LloydConfig::explicit(Centroids::new(&TABLE1_INIT)?);

    let kmeans = run_lloyd(&data, &config)?;
    let kmeans_path = dir.join("kmeans.svg");
    emit_plot(&data, &kmeans, &kmeans_path)?;

    let kplus = run_kplus(&data, &KPlusConfig::new(config))?;
    let kplus_path = dir.join("kplus.svg");
    emit_plot(&data, &kplus.final_result, &kplus_path)?;

    println!("wrote {} ({} clusters)", kmeans_path.display(), kmeans.k());
    println!(
        "wrote {} ({} clusters)",
        kplus_path.display(),
        kplus.final_k
    );
    Ok(())
}
