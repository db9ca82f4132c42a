//! The bundled ten-point demonstration dataset (`p1`..`p10`).

use crate::geometry::Dataset;
use crate::input::parse_csv_str;

/// Raw CSV text of the bundled fixture, header and labels included.
pub const TABLE1_CSV: &str = include_str!("../data/table1.csv");

/// Path of the fixture file inside this crate's source tree.
pub const TABLE1_PATH: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/table1.csv");

/// Initial centroids used in the demonstration runs: `p1` and `p5`.
pub const TABLE1_INIT: [[f64; 2]; 2] = [[1.0, 4.0], [8.0, 3.0]];

pub fn table1() -> Dataset {
    parse_csv_str(TABLE1_CSV, "table1.csv").expect("bundled fixture parses")
}
