//! Classic K-Means via Lloyd iterations.
//!
//! A run alternates two steps until the centroids stop moving:
//!
//! 1. **Assign**: every point joins its nearest centroid (ties go to the
//!    lowest centroid index).
//! 2. **Update**: every nonempty cluster's centroid becomes the arithmetic
//!    mean of its members. A cluster that lost all of its members is re-seeded
//!    at the point farthest from the centroid of the largest cluster, so `k`
//!    never silently shrinks.
//!
//! Neither step can increase the within-cluster sum of squares, and the SSE
//! after every iteration is recorded in [`KMeansResult::sse_history`].

use std::collections::HashSet;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{
    check_consistency, coord_key, distance, squared_distance, sse_unchecked, Assignment, Centroids,
    Dataset,
};

pub const DEFAULT_MAX_ITERATIONS: usize = 100;
pub const DEFAULT_MOVEMENT_TOLERANCE: f64 = 1e-9;

/// How the first `k` centroids are placed.
#[derive(Debug, Clone, PartialEq, Default)]
pub enum InitStrategy {
    /// Use these positions verbatim.
    Explicit(Centroids),
    /// The first `k` pairwise-distinct points in index order.
    #[default]
    FirstDistinct,
    /// `k` distinct point indices drawn uniformly using the configured seed.
    SeededSample,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LloydConfig {
    pub k: usize,
    pub max_iterations: usize,
    /// Largest per-centroid displacement still counted as "not moving".
    pub movement_tolerance: f64,
    pub init: InitStrategy,
    pub seed: u64,
}

impl LloydConfig {
    pub fn new(k: usize) -> Self {
        Self {
            k,
            max_iterations: DEFAULT_MAX_ITERATIONS,
            movement_tolerance: DEFAULT_MOVEMENT_TOLERANCE,
            init: InitStrategy::FirstDistinct,
            seed: 0,
        }
    }

    /// Starts from the given centroid positions; `k` is taken from them.
    pub fn explicit(centroids: Centroids) -> Self {
        let mut config = Self::new(centroids.k());
        config.init = InitStrategy::Explicit(centroids);
        config
    }

    pub fn with_init(mut self, init: InitStrategy) -> Self {
        self.init = init;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_max_iterations(mut self, max_iterations: usize) -> Self {
        self.max_iterations = max_iterations;
        self
    }

    pub fn with_movement_tolerance(mut self, tolerance: f64) -> Self {
        self.movement_tolerance = tolerance;
        self
    }

    pub fn validate(&self, dataset: &Dataset) -> Result<()> {
        if self.k == 0 {
            return Err(Error::InvalidConfig("k must be at least 1".into()));
        }
        if self.k > dataset.len() {
            return Err(Error::NotEnoughPoints {
                k: self.k,
                available: dataset.len(),
                what: "data",
            });
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidConfig(
                "max_iterations must be at least 1".into(),
            ));
        }
        if !(self.movement_tolerance >= 0.0 && self.movement_tolerance.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "movement tolerance must be finite and nonnegative, got {}",
                self.movement_tolerance
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KMeansResult {
    pub centroids: Centroids,
    pub assignment: Assignment,
    pub iterations_used: usize,
    pub converged: bool,
    pub final_sse: f64,
    /// SSE after each iteration's update step; the last entry is `final_sse`.
    pub sse_history: Vec<f64>,
}

impl KMeansResult {
    pub fn k(&self) -> usize {
        self.centroids.k()
    }
}

/// Places the initial `k` centroids according to `config.init`.
pub fn init_centroids(dataset: &Dataset, config: &LloydConfig) -> Result<Centroids> {
    config.validate(dataset)?;
    let k = config.k;
    match &config.init {
        InitStrategy::Explicit(centroids) => {
            if centroids.k() != k {
                return Err(Error::InvalidConfig(format!(
                    "{} explicit centroids given for k = {k}",
                    centroids.k()
                )));
            }
            if centroids.dim() != dataset.dim() {
                return Err(Error::DimensionMismatch {
                    expected: dataset.dim(),
                    found: centroids.dim(),
                });
            }
            Ok(centroids.clone())
        }
        InitStrategy::FirstDistinct => {
            let mut seen = HashSet::new();
            let mut coords = Vec::with_capacity(k * dataset.dim());
            for p in dataset.points() {
                if seen.len() == k {
                    break;
                }
                if seen.insert(coord_key(p)) {
                    coords.extend_from_slice(p);
                }
            }
            if seen.len() < k {
                return Err(Error::NotEnoughPoints {
                    k,
                    available: seen.len(),
                    what: "distinct",
                });
            }
            Ok(Centroids::from_flat_unchecked(dataset.dim(), coords))
        }
        InitStrategy::SeededSample => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let mut coords = Vec::with_capacity(k * dataset.dim());
            for i in index::sample(&mut rng, dataset.len(), k) {
                coords.extend_from_slice(dataset.point(i));
            }
            Ok(Centroids::from_flat_unchecked(dataset.dim(), coords))
        }
    }
}

fn nearest(p: &[f64], centroids: &Centroids) -> usize {
    let mut best = 0;
    let mut best_d = f64::INFINITY;
    for (c, pos) in centroids.positions().enumerate() {
        let d = squared_distance(p, pos);
        if d < best_d {
            best_d = d;
            best = c;
        }
    }
    best
}

/// Labels every point with its nearest centroid, lowest index on ties.
pub fn assign_points(dataset: &Dataset, centroids: &Centroids) -> Result<Assignment> {
    if centroids.dim() != dataset.dim() {
        return Err(Error::DimensionMismatch {
            expected: dataset.dim(),
            found: centroids.dim(),
        });
    }
    let labels = dataset.points().map(|p| nearest(p, centroids)).collect();
    Ok(Assignment::new_unchecked(labels, centroids.k()))
}

/// Recomputes centroids as member means, re-seeding empty clusters.
pub fn update_centroids(
    dataset: &Dataset,
    assignment: &Assignment,
    previous: &Centroids,
) -> Result<Centroids> {
    check_consistency(dataset, assignment, previous)?;
    let dim = dataset.dim();
    let k = previous.k();
    let mut coords = vec![0.0; k * dim];
    let mut counts = vec![0usize; k];
    for (p, &c) in dataset.points().zip(assignment.labels()) {
        counts[c] += 1;
        for (s, x) in coords[c * dim..(c + 1) * dim].iter_mut().zip(p) {
            *s += x;
        }
    }
    for (c, &n) in counts.iter().enumerate() {
        let slot = &mut coords[c * dim..(c + 1) * dim];
        if n == 0 {
            slot.copy_from_slice(previous.position(c));
        } else {
            for s in slot {
                *s /= n as f64;
            }
        }
    }

    if counts.contains(&0) {
        reseed_empty(dataset, assignment, &counts, &mut coords);
    }
    Ok(Centroids::from_flat_unchecked(dim, coords))
}

/// Moves each empty cluster's centroid onto the point farthest from the
/// centroid of the largest cluster. Points already used are skipped, falling
/// back to the next largest cluster.
fn reseed_empty(dataset: &Dataset, assignment: &Assignment, counts: &[usize], coords: &mut [f64]) {
    let dim = dataset.dim();
    let mut by_size: Vec<usize> = (0..counts.len()).filter(|&c| counts[c] > 0).collect();
    by_size.sort_by(|&a, &b| counts[b].cmp(&counts[a]).then(a.cmp(&b)));
    let mut used = HashSet::new();

    for empty in (0..counts.len()).filter(|&c| counts[c] == 0) {
        for &donor in &by_size {
            let centre = coords[donor * dim..(donor + 1) * dim].to_vec();
            let farthest = assignment
                .members(donor)
                .filter(|i| !used.contains(i))
                .map(|i| (i, distance(dataset.point(i), &centre)))
                .fold(None, |best: Option<(usize, f64)>, (i, d)| match best {
                    Some((_, bd)) if bd >= d => best,
                    _ => Some((i, d)),
                });
            if let Some((i, _)) = farthest {
                used.insert(i);
                coords[empty * dim..(empty + 1) * dim].copy_from_slice(dataset.point(i));
                break;
            }
        }
    }
}

fn max_displacement(a: &Centroids, b: &Centroids) -> f64 {
    a.positions()
        .zip(b.positions())
        .map(|(x, y)| distance(x, y))
        .fold(0.0, f64::max)
}

/// Runs Lloyd iterations until no centroid moves more than the tolerance or
/// the iteration cap is hit.
pub fn run_lloyd(dataset: &Dataset, config: &LloydConfig) -> Result<KMeansResult> {
    let mut centroids = init_centroids(dataset, config)?;
    let mut sse_history = Vec::new();
    let mut assignment = None;
    let mut converged = false;

    for _ in 0..config.max_iterations {
        let current = assign_points(dataset, &centroids)?;
        let updated = update_centroids(dataset, &current, &centroids)?;
        let shift = max_displacement(&centroids, &updated);
        sse_history.push(sse_unchecked(dataset, current.labels(), &updated));
        centroids = updated;
        assignment = Some(current);
        if shift <= config.movement_tolerance {
            converged = true;
            break;
        }
    }

    let assignment = assignment.expect("max_iterations >= 1");
    Ok(KMeansResult {
        centroids,
        assignment,
        iterations_used: sse_history.len(),
        converged,
        final_sse: *sse_history.last().expect("at least one iteration"),
        sse_history,
    })
}
