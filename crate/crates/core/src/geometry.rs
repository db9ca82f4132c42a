//! Points, datasets, centroids and the per-cluster statistics every
//! algorithm in this crate is built on.
//!
//! Coordinates are stored row-major in flat `Vec<f64>` buffers so that the
//! assignment scan stays cache friendly for large `n`. All values are kept at
//! full `f64` precision; rounding only happens when results are reported.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// A single finite, `d`-dimensional coordinate vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        check_finite(0, &coords)?;
        Ok(Self(coords))
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl AsRef<[f64]> for Point {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

fn check_finite(point: usize, coords: &[f64]) -> Result<()> {
    match coords.iter().position(|c| !c.is_finite()) {
        Some(axis) => Err(Error::NonFinite {
            point,
            axis,
            value: coords[axis],
        }),
        None => Ok(()),
    }
}

/// Flattens rows into a single buffer, validating dimension and finiteness.
fn flatten<R: AsRef<[f64]>>(rows: &[R]) -> Result<(usize, Vec<f64>)> {
    let first = rows.first().ok_or(Error::EmptyDataset)?;
    let dim = first.as_ref().len();
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut coords = Vec::with_capacity(dim * rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_ref();
        if row.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: row.len(),
            });
        }
        check_finite(i, row)?;
        coords.extend_from_slice(row);
    }
    Ok((dim, coords))
}

/// An ordered, non-empty collection of points sharing one dimension.
///
/// Point indices are stable: index `i` always refers to the `i`-th row the
/// dataset was built from. Optional per-point labels (e.g. `p1`, `p2`) are
/// carried along for reporting only.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    dim: usize,
    coords: Vec<f64>,
    labels: Option<Vec<String>>,
}

impl Dataset {
    pub fn new<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let (dim, coords) = flatten(rows)?;
        Ok(Self {
            dim,
            coords,
            labels: None,
        })
    }

    /// Builds a dataset from an already flattened row-major buffer.
    pub fn from_flat(dim: usize, coords: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if coords.is_empty() {
            return Err(Error::EmptyDataset);
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: coords.len() % dim,
            });
        }
        for (i, row) in coords.chunks_exact(dim).enumerate() {
            check_finite(i, row)?;
        }
        Ok(Self {
            dim,
            coords,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::InvalidConfig(format!(
                "{} labels given for {} points",
                labels.len(),
                self.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    /// Always `false`; a dataset holds at least one point.
    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, index: usize) -> &[f64] {
        &self.coords[index * self.dim..(index + 1) * self.dim]
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dim)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, index: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[index].as_str())
    }

    /// Number of pairwise-distinct points (exact coordinate equality).
    pub fn distinct_count(&self) -> usize {
        let mut seen = HashSet::new();
        self.points().filter(|p| seen.insert(coord_key(p))).count()
    }
}

/// Hashable key for exact coordinate equality; `-0.0` and `0.0` collapse.
pub(crate) fn coord_key(p: &[f64]) -> Vec<u64> {
    p.iter().map(|c| (c + 0.0).to_bits()).collect()
}

/// Cluster representatives, one position per cluster.
#[derive(Debug, Clone, PartialEq)]
pub struct Centroids {
    dim: usize,
    coords: Vec<f64>,
}

impl Centroids {
    pub fn new<R: AsRef<[f64]>>(positions: &[R]) -> Result<Self> {
        let (dim, coords) = flatten(positions)?;
        Ok(Self { dim, coords })
    }

    pub(crate) fn from_flat_unchecked(dim: usize, coords: Vec<f64>) -> Self {
        debug_assert!(dim > 0 && coords.len().is_multiple_of(dim));
        Self { dim, coords }
    }

    pub fn k(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn position(&self, cluster: usize) -> &[f64] {
        &self.coords[cluster * self.dim..(cluster + 1) * self.dim]
    }

    pub fn positions(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dim)
    }

    /// Appends a new representative, returning its cluster index.
    pub fn push(&mut self, position: &[f64]) -> Result<usize> {
        if position.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: position.len(),
            });
        }
        check_finite(self.k(), position)?;
        self.coords.extend_from_slice(position);
        Ok(self.k() - 1)
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.positions().map(<[f64]>::to_vec).collect()
    }
}

/// A partition of the dataset: one cluster label per point index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    labels: Vec<usize>,
    k: usize,
}

impl Assignment {
    pub fn new(labels: Vec<usize>, k: usize) -> Result<Self> {
        if let Some((point, &label)) = labels.iter().enumerate().find(|(_, &l)| l >= k) {
            return Err(Error::LabelOutOfRange { point, label, k });
        }
        Ok(Self { labels, k })
    }

    pub(crate) fn new_unchecked(labels: Vec<usize>, k: usize) -> Self {
        debug_assert!(labels.iter().all(|&l| l < k));
        Self { labels, k }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, point: usize) -> usize {
        self.labels[point]
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Point indices belonging to `cluster`, in ascending order.
    pub fn members(&self, cluster: usize) -> impl Iterator<Item = usize> + '_ {
        self.labels
            .iter()
            .enumerate()
            .filter(move |(_, &l)| l == cluster)
            .map(|(i, _)| i)
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &l in &self.labels {
            sizes[l] += 1;
        }
        sizes
    }

    /// Membership as a list of point-index groups, one per cluster.
    pub fn groups(&self) -> Vec<Vec<usize>> {
        let mut groups = vec![Vec::new(); self.k];
        for (i, &l) in self.labels.iter().enumerate() {
            groups[l].push(i);
        }
        groups
    }
}

/// Min/Max/Avg distance from the members of one cluster to its centroid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClusterStats {
    pub cluster: usize,
    pub size: usize,
    pub min_dist: f64,
    pub max_dist: f64,
    pub avg_dist: f64,
    /// Lowest-index member attaining `min_dist`.
    pub nearest_point: usize,
    /// Lowest-index member attaining `max_dist`.
    pub farthest_point: usize,
}

/// Statistics for every nonempty cluster plus the indices of empty ones.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct StatsReport {
    pub clusters: Vec<ClusterStats>,
    pub empty: Vec<usize>,
}

impl StatsReport {
    pub fn get(&self, cluster: usize) -> Option<&ClusterStats> {
        self.clusters.iter().find(|s| s.cluster == cluster)
    }
}

pub(crate) fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

pub(crate) fn distance(a: &[f64], b: &[f64]) -> f64 {
    squared_distance(a, b).sqrt()
}

/// Euclidean distance between two points of equal dimension.
pub fn euclidean_distance(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    Ok(distance(a, b))
}

/// Coordinatewise arithmetic mean of a nonempty member list.
pub fn centroid_of<'a, I>(members: I) -> Result<Point>
where
    I: IntoIterator<Item = &'a [f64]>,
{
    let mut iter = members.into_iter();
    let first = iter.next().ok_or(Error::NoMembers)?;
    let mut sum = first.to_vec();
    let mut count = 1usize;
    for m in iter {
        if m.len() != sum.len() {
            return Err(Error::DimensionMismatch {
                expected: sum.len(),
                found: m.len(),
            });
        }
        for (s, c) in sum.iter_mut().zip(m) {
            *s += c;
        }
        count += 1;
    }
    for s in &mut sum {
        *s /= count as f64;
    }
    Point::new(sum)
}

pub(crate) fn check_consistency(
    dataset: &Dataset,
    assignment: &Assignment,
    centroids: &Centroids,
) -> Result<()> {
    if assignment.len() != dataset.len() {
        return Err(Error::AssignmentLength {
            labels: assignment.len(),
            points: dataset.len(),
        });
    }
    if assignment.k() != centroids.k() {
        return Err(Error::ClusterCountMismatch {
            assignment: assignment.k(),
            centroids: centroids.k(),
        });
    }
    if centroids.dim() != dataset.dim() {
        return Err(Error::DimensionMismatch {
            expected: dataset.dim(),
            found: centroids.dim(),
        });
    }
    Ok(())
}

/// Per-cluster Min/Max/Avg of member-to-centroid distances.
///
/// Empty clusters get no statistics; their indices are listed in
/// [`StatsReport::empty`].
pub fn cluster_stats(
    dataset: &Dataset,
    assignment: &Assignment,
    centroids: &Centroids,
) -> Result<StatsReport> {
    check_consistency(dataset, assignment, centroids)?;
    let k = centroids.k();
    let mut acc: Vec<Option<ClusterStats>> = vec![None; k];
    let mut sums = vec![0.0; k];
    for (i, p) in dataset.points().enumerate() {
        let c = assignment.label(i);
        let d = distance(p, centroids.position(c));
        sums[c] += d;
        match &mut acc[c] {
            None => {
                acc[c] = Some(ClusterStats {
                    cluster: c,
                    size: 1,
                    min_dist: d,
                    max_dist: d,
                    avg_dist: 0.0,
                    nearest_point: i,
                    farthest_point: i,
                })
            }
            Some(s) => {
                s.size += 1;
                if d < s.min_dist {
                    s.min_dist = d;
                    s.nearest_point = i;
                }
                if d > s.max_dist {
                    s.max_dist = d;
                    s.farthest_point = i;
                }
            }
        }
    }
    let mut report = StatsReport::default();
    for (c, entry) in acc.into_iter().enumerate() {
        match entry {
            Some(mut s) => {
                // the mean can drift one ulp outside [min, max]
                s.avg_dist = (sums[c] / s.size as f64).clamp(s.min_dist, s.max_dist);
                report.clusters.push(s);
            }
            None => report.empty.push(c),
        }
    }
    Ok(report)
}

/// Within-cluster sum of squared distances to the assigned centroids.
pub fn sse(dataset: &Dataset, assignment: &Assignment, centroids: &Centroids) -> Result<f64> {
    check_consistency(dataset, assignment, centroids)?;
    Ok(sse_unchecked(dataset, assignment.labels(), centroids))
}

pub(crate) fn sse_unchecked(dataset: &Dataset, labels: &[usize], centroids: &Centroids) -> f64 {
    dataset
        .points()
        .zip(labels)
        .map(|(p, &c)| squared_distance(p, centroids.position(c)))
        .sum()
}
