//! Load a CSV file and print JSON and CSV reports for it.
//!
//!     cargo run --example csv_report -- path/to/points.csv 3
//!
//! Without arguments the bundled fixture is used with k = 2.

use kplus_means::fixture::TABLE1_PATH;
use kplus_means::{
    emit_results, parse_csv, run_kplus, ClusteringRun, KPlusConfig, LloydConfig, OutputFormat,
};

fn main() -> kplus_means::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args.next().unwrap_or_else(|| TABLE1_PATH.to_string());
    let k = args.next().and_then(|k| k.parse().ok()).unwrap_or(2);

    let data = parse_csv(&path)?;
    println!(
        "read {} points of dimension {} from {path}",
        data.len(),
        data.dim()
    );

    let run = ClusteringRun::KPlus(run_kplus(&data, &KPlusConfig::new(LloydConfig::new(k)))?);
    print!("{}", emit_results(&data, &run, OutputFormat::Json)?);
    print!("{}", emit_results(&data, &run, OutputFormat::Csv)?);
    Ok(())
}
