use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("point has no coordinates")]
    ZeroDimension,

    #[error("non-finite coordinate {value} at point {point}, axis {axis}")]
    NonFinite {
        point: usize,
        axis: usize,
        value: f64,
    },

    #[error("dataset contains no points")]
    EmptyDataset,

    #[error("cannot take the centroid of an empty member list")]
    NoMembers,

    #[error("cluster {0} has no members")]
    EmptyCluster(usize),

    #[error("assignment covers {labels} points but the dataset has {points}")]
    AssignmentLength { labels: usize, points: usize },

    #[error("label {label} at point {point} is out of range for {k} clusters")]
    LabelOutOfRange {
        point: usize,
        label: usize,
        k: usize,
    },

    #[error("assignment references {assignment} clusters but {centroids} centroids were given")]
    ClusterCountMismatch { assignment: usize, centroids: usize },

    #[error("requested {k} clusters but only {available} {what} points are available")]
    NotEnoughPoints {
        k: usize,
        available: usize,
        what: &'static str,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {message}", path.display())]
    Csv { path: PathBuf, message: String },

    #[error("{}: row {row}, column {column}: {message}", path.display())]
    Parse {
        path: PathBuf,
        row: usize,
        column: usize,
        message: String,
    },

    #[error("scatter plots need 2-D data, got {0} dimensions")]
    PlotDimension(usize),
}
