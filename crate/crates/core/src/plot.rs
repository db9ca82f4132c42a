//! Static SVG scatter plots of 2-D clusterings.
//!
//! Points are filled circles coloured by cluster index from a fixed
//! eight-colour palette; centroids are drawn as crosses in the same colour.
//! The axes span the data bounding box plus a 10% margin on every side.
//! Coordinates are printed with two decimals so output is byte-stable.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::geometry::Dataset;
use crate::lloyd::KMeansResult;

pub const PALETTE: [&str; 8] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
];

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const PAD: f64 = 40.0;
const POINT_RADIUS: f64 = 5.0;
const CROSS_HALF: f64 = 7.0;

pub fn cluster_color(cluster: usize) -> &'static str {
    PALETTE[cluster % PALETTE.len()]
}

struct Axis {
    lo: f64,
    hi: f64,
}

impl Axis {
    fn fit(values: impl Iterator<Item = f64>) -> Self {
        let (min, max) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
        let span = max - min;
        // a zero span would collapse the axis; pad by one unit instead
        let margin = if span > 0.0 { 0.1 * span } else { 1.0 };
        Self {
            lo: min - margin,
            hi: max + margin,
        }
    }

    fn map(&self, v: f64, from: f64, to: f64) -> f64 {
        from + (v - self.lo) / (self.hi - self.lo) * (to - from)
    }
}

/// Renders the final state of a run as an SVG document.
pub fn render_svg(dataset: &Dataset, result: &KMeansResult) -> Result<String> {
    if dataset.dim() != 2 {
        return Err(Error::PlotDimension(dataset.dim()));
    }
    let xs = Axis::fit(dataset.points().map(|p| p[0]));
    let ys = Axis::fit(dataset.points().map(|p| p[1]));
    let sx = |x: f64| xs.map(x, PAD, WIDTH - PAD);
    let sy = |y: f64| ys.map(y, HEIGHT - PAD, PAD);

    let mut svg = String::new();
    let w = &mut svg;
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    )
    .unwrap();
    writeln!(w, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(
        w,
        r#"<g class="axes" stroke="black" stroke-width="1"><line x1="{PAD}" y1="{b}" x2="{r}" y2="{b}"/><line x1="{PAD}" y1="{PAD}" x2="{PAD}" y2="{b}"/></g>"#,
        b = HEIGHT - PAD,
        r = WIDTH - PAD,
    )
    .unwrap();
    writeln!(
        w,
        r#"<g class="ticks" font-family="sans-serif" font-size="11"><text x="{PAD}" y="{ty}" text-anchor="start">{:.2}</text><text x="{r}" y="{ty}" text-anchor="end">{:.2}</text><text x="{lx}" y="{b}" text-anchor="end">{:.2}</text><text x="{lx}" y="{t}" text-anchor="end">{:.2}</text></g>"#,
        xs.lo,
        xs.hi,
        ys.lo,
        ys.hi,
        ty = HEIGHT - PAD + 16.0,
        r = WIDTH - PAD,
        lx = PAD - 4.0,
        b = HEIGHT - PAD,
        t = PAD + 4.0,
    )
    .unwrap();

    writeln!(w, r#"<g class="points" stroke="black" stroke-width="0.5">"#).unwrap();
    for (i, p) in dataset.points().enumerate() {
        let c = result.assignment.label(i);
        writeln!(
            w,
            r#"<circle cx="{:.2}" cy="{:.2}" r="{POINT_RADIUS}" fill="{}"/>"#,
            sx(p[0]),
            sy(p[1]),
            cluster_color(c)
        )
        .unwrap();
    }
    writeln!(w, "</g>").unwrap();

    writeln!(w, r#"<g class="centroids" stroke-width="2.5">"#).unwrap();
    for (c, pos) in result.centroids.positions().enumerate() {
        let (x, y) = (sx(pos[0]), sy(pos[1]));
        writeln!(
            w,
            r#"<path class="centroid" d="M{:.2} {:.2}L{:.2} {:.2}M{:.2} {:.2}L{:.2} {:.2}" stroke="{}"/>"#,
            x - CROSS_HALF,
            y - CROSS_HALF,
            x + CROSS_HALF,
            y + CROSS_HALF,
            x - CROSS_HALF,
            y + CROSS_HALF,
            x + CROSS_HALF,
            y - CROSS_HALF,
            cluster_color(c)
        )
        .unwrap();
    }
    writeln!(w, "</g>").unwrap();
    writeln!(w, "</svg>").unwrap();
    Ok(svg)
}

/// Writes [`render_svg`] output to `path`.
pub fn emit_plot(dataset: &Dataset, result: &KMeansResult, path: impl AsRef<Path>) -> Result<()> {
    let svg = render_svg(dataset, result)?;
    let path = path.as_ref();
    fs::write(path, svg).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
