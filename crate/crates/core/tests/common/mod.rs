//! Independent reference computations for the integration tests. Nothing in
//! here calls into the clustering code paths it is used to check.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

pub const TABLE1: [[f64; 2]; 10] = [
    [1.0, 4.0],
    [1.0, 3.0],
    [2.0, 2.0],
    [7.0, 2.0],
    [8.0, 3.0],
    [9.0, 2.0],
    [5.0, 6.0],
    [6.0, 7.0],
    [7.0, 6.0],
    [8.0, 7.0],
];

pub fn naive_dist(a: &[f64], b: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..a.len() {
        s += (a[i] - b[i]) * (a[i] - b[i]);
    }
    s.sqrt()
}

pub fn naive_mean(points: &[Vec<f64>], members: &[usize]) -> Vec<f64> {
    let d = points[0].len();
    let mut m = vec![0.0; d];
    for &i in members {
        for j in 0..d {
            m[j] += points[i][j];
        }
    }
    for v in &mut m {
        *v /= members.len() as f64;
    }
    m
}

/// Direct double-loop SSE: outer over clusters, inner over members.
pub fn naive_sse(points: &[Vec<f64>], labels: &[usize], centroids: &[Vec<f64>]) -> f64 {
    let mut total = 0.0;
    for (c, centre) in centroids.iter().enumerate() {
        for (i, p) in points.iter().enumerate() {
            if labels[i] == c {
                for j in 0..p.len() {
                    total += (p[j] - centre[j]) * (p[j] - centre[j]);
                }
            }
        }
    }
    total
}

/// (cluster, size, min, max, avg) per nonempty cluster, by naive loops.
pub fn naive_stats(
    points: &[Vec<f64>],
    labels: &[usize],
    centroids: &[Vec<f64>],
) -> Vec<(usize, usize, f64, f64, f64)> {
    let mut out = Vec::new();
    for (c, centre) in centroids.iter().enumerate() {
        let mut dists = Vec::new();
        for (i, p) in points.iter().enumerate() {
            if labels[i] == c {
                dists.push(naive_dist(p, centre));
            }
        }
        if dists.is_empty() {
            continue;
        }
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        let mut sum = 0.0;
        for &d in &dists {
            min = min.min(d);
            max = max.max(d);
            sum += d;
        }
        out.push((c, dists.len(), min, max, sum / dists.len() as f64));
    }
    out
}

/// Every partition of `0..n` into exactly `k` nonempty blocks, as label
/// vectors in restricted-growth form.
pub fn partitions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(
        i: usize,
        n: usize,
        k: usize,
        used: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == n {
            if used == k {
                out.push(cur.clone());
            }
            return;
        }
        // not enough points left to open the remaining blocks
        if k - used > n - i {
            return;
        }
        for b in 0..used.min(k) {
            cur.push(b);
            rec(i + 1, n, k, used, cur, out);
            cur.pop();
        }
        if used < k {
            cur.push(used);
            rec(i + 1, n, k, used + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Globally optimal SSE over all partitions into exactly `k` nonempty groups.
pub fn brute_force_optimum(points: &[Vec<f64>], k: usize) -> (f64, Vec<usize>) {
    let mut best = (f64::INFINITY, Vec::new());
    for labels in partitions(points.len(), k) {
        let centroids: Vec<Vec<f64>> = (0..k)
            .map(|c| {
                let members: Vec<usize> = (0..points.len()).filter(|&i| labels[i] == c).collect();
                naive_mean(points, &members)
            })
            .collect();
        let s = naive_sse(points, &labels, &centroids);
        if s < best.0 {
            best = (s, labels);
        }
    }
    best
}

/// Membership as a sorted set of sorted groups (label numbering ignored).
pub fn canonical_groups(labels: &[usize]) -> Vec<Vec<usize>> {
    let k = labels.iter().copied().max().map_or(0, |m| m + 1);
    let mut groups = vec![Vec::new(); k];
    for (i, &l) in labels.iter().enumerate() {
        groups[l].push(i);
    }
    groups.retain(|g| !g.is_empty());
    groups.sort();
    groups
}

pub fn uniform_points(rng: &mut ChaCha8Rng, n: usize, d: usize, scale: f64) -> Vec<Vec<f64>> {
    (0..n)
        .map(|_| (0..d).map(|_| rng.random_range(-scale..scale)).collect())
        .collect()
}

/// Gaussian blobs around `centres`, round-robin, unit standard deviation.
pub fn blobs(rng: &mut ChaCha8Rng, n: usize, centres: &[Vec<f64>], sd: f64) -> Vec<Vec<f64>> {
    let normal = Normal::new(0.0, sd).unwrap();
    (0..n)
        .map(|i| {
            centres[i % centres.len()]
                .iter()
                .map(|c| c + normal.sample(rng))
                .collect()
        })
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn partition_counts_match_stirling_numbers() {
    assert_eq!(partitions(4, 2).len(), 7);
    assert_eq!(partitions(5, 3).len(), 25);
    assert_eq!(partitions(8, 3).len(), 966);
    assert_eq!(partitions(3, 3).len(), 1);
    assert_eq!(partitions(2, 3).len(), 0);
}
