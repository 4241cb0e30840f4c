//! The discrete ground set for greedy covering: interval boundaries on T's
//! parameter domain derived from critical points of the free-space diagram
//! between the simplified curve and T.
//!
//! For every free-space cell, up to six x-coordinates are distinguished:
//! the leftmost and rightmost points of the cell's free region, and the
//! ends of the free intervals on the cell's bottom and top boundary edges.
//! On each vertical line through such an x, the endpoints of the free
//! components are critical points; their y-coordinates, plus 1 and n, cut
//! `[1, n]` into the universe intervals.

use rayon::prelude::*;

use crate::freespace::{cell_x_extremes, curve_free_intervals, free_interval_on_edge};
use crate::geom::{ParamInterval, PolyCurve, Tolerance};

/// Which extreme-point role produced a critical x-coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalKind {
    InteriorMin,
    InteriorMax,
    BottomMin,
    BottomMax,
    TopMin,
    TopMax,
    /// Produced for a caller-chosen line rather than a cell extreme.
    QueryLine,
}

/// An endpoint of a free component on the vertical line at `x`.
#[derive(Debug, Clone, Copy)]
pub struct CriticalPoint {
    pub x: f64,
    pub y: f64,
    pub kind: CriticalKind,
}

/// Interior-disjoint closed intervals covering `[1, n]`, stored as their
/// shared boundary sequence.
#[derive(Debug, Clone)]
pub struct Universe {
    boundaries: Vec<f64>,
}

impl Universe {
    /// Build directly from a strictly increasing boundary sequence.
    pub fn from_boundaries(boundaries: Vec<f64>) -> Self {
        assert!(!boundaries.is_empty());
        assert!(boundaries.windows(2).all(|p| p[0] < p[1]));
        Universe { boundaries }
    }

    pub fn boundaries(&self) -> &[f64] {
        &self.boundaries
    }

    pub fn interval_count(&self) -> usize {
        self.boundaries.len().saturating_sub(1)
    }

    pub fn interval(&self, idx: usize) -> ParamInterval {
        ParamInterval::new(self.boundaries[idx], self.boundaries[idx + 1])
    }

    /// The full covered range.
    pub fn span(&self) -> ParamInterval {
        ParamInterval::new(self.boundaries[0], *self.boundaries.last().unwrap())
    }
}

/// The up to six critical x-coordinates of one cell, in edge-local
/// coordinates on the `p0 p1` axis, tagged with their roles.
pub fn cell_critical_xs(
    p0: &crate::geom::Point,
    p1: &crate::geom::Point,
    q0: &crate::geom::Point,
    q1: &crate::geom::Point,
    radius: f64,
) -> Vec<(f64, CriticalKind)> {
    let mut out = Vec::with_capacity(6);
    if let Some((lo, hi)) = cell_x_extremes(p0, p1, q0, q1, radius) {
        out.push((lo, CriticalKind::InteriorMin));
        out.push((hi, CriticalKind::InteriorMax));
    }
    if let Some((lo, hi)) = free_interval_on_edge(p0, p1, q0, radius) {
        out.push((lo, CriticalKind::BottomMin));
        out.push((hi, CriticalKind::BottomMax));
    }
    if let Some((lo, hi)) = free_interval_on_edge(p0, p1, q1, radius) {
        out.push((lo, CriticalKind::TopMin));
        out.push((hi, CriticalKind::TopMax));
    }
    out
}

/// Sorted, deduplicated critical x-coordinates of column `i` of the free
/// space between `w` and `t`, in w's parameter domain.
pub fn critical_xs_for_column(
    w: &PolyCurve,
    t: &PolyCurve,
    i: usize,
    delta_prime: f64,
    tol: &Tolerance,
) -> Vec<f64> {
    let radius = delta_prime + tol.eps_geom;
    let (p0, p1) = w.edge(i);
    let mut xs: Vec<f64> = Vec::new();
    for j in 1..t.n().max(2) {
        if t.n() == 1 {
            break;
        }
        let (q0, q1) = t.edge(j);
        for (s, _) in cell_critical_xs(p0, p1, q0, q1, radius) {
            xs.push(i as f64 + s);
        }
    }
    xs.sort_by(f64::total_cmp);
    dedup_close(&mut xs, tol.eps_param);
    xs
}

/// Ascending endpoints of the free components on the vertical line at `x`:
/// the parameters `y` where `|w(x) - t(y)| = radius` transitions. A
/// component shorter than the parameter tolerance yields one point.
pub fn critical_points_on_line(
    w: &PolyCurve,
    t: &PolyCurve,
    x: f64,
    delta_prime: f64,
    tol: &Tolerance,
) -> Vec<CriticalPoint> {
    let radius = delta_prime + tol.eps_geom;
    let center = w.eval_clamped(x);
    let mut out = Vec::new();
    for (lo, hi) in curve_free_intervals(t, &center, radius) {
        out.push(CriticalPoint {
            x,
            y: lo,
            kind: CriticalKind::QueryLine,
        });
        if hi - lo > tol.eps_param {
            out.push(CriticalPoint {
                x,
                y: hi,
                kind: CriticalKind::QueryLine,
            });
        }
    }
    out
}

fn dedup_close(values: &mut Vec<f64>, eps: f64) {
    let mut kept = 0;
    for idx in 0..values.len() {
        if kept == 0 || values[idx] - values[kept - 1] > eps {
            values[kept] = values[idx];
            kept += 1;
        }
    }
    values.truncate(kept);
}

fn column_boundary_ys(
    w: &PolyCurve,
    t: &PolyCurve,
    i: usize,
    delta_prime: f64,
    tol: &Tolerance,
) -> Vec<f64> {
    critical_xs_for_column(w, t, i, delta_prime, tol)
        .into_iter()
        .flat_map(|x| {
            critical_points_on_line(w, t, x, delta_prime, tol)
                .into_iter()
                .map(|p| p.y)
        })
        .collect()
}

/// Build the universe over `t` from all critical points of the free space
/// between `w` and `t`. Columns are processed independently and merged
/// deterministically; only boundary coordinates are retained.
pub fn build_universe(w: &PolyCurve, t: &PolyCurve, delta_prime: f64, tol: &Tolerance) -> Universe {
    let n = t.n();
    if n == 1 {
        return Universe {
            boundaries: vec![1.0],
        };
    }
    let columns: Vec<usize> = (1..w.n()).collect();
    let mut ys: Vec<f64> = columns
        .into_par_iter()
        .map(|i| column_boundary_ys(w, t, i, delta_prime, tol))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    ys.sort_by(f64::total_cmp);

    let hi = n as f64;
    let mut boundaries = vec![1.0];
    for y in ys {
        if y - boundaries.last().unwrap() > tol.eps_param && y < hi - tol.eps_param {
            boundaries.push(y);
        }
    }
    boundaries.push(hi);
    Universe { boundaries }
}

/// All critical points with their roles, column by column. Desk-scale
/// companion to [`build_universe`] for inspection and tests; the clustering
/// pipeline itself never stores these.
pub fn collect_critical_points(
    w: &PolyCurve,
    t: &PolyCurve,
    delta_prime: f64,
    tol: &Tolerance,
) -> Vec<CriticalPoint> {
    let radius = delta_prime + tol.eps_geom;
    let mut out = Vec::new();
    if t.n() == 1 {
        return out;
    }
    for i in 1..w.n() {
        let (p0, p1) = w.edge(i);
        let mut tagged: Vec<(f64, CriticalKind)> = Vec::new();
        for j in 1..t.n() {
            let (q0, q1) = t.edge(j);
            for (s, kind) in cell_critical_xs(p0, p1, q0, q1, radius) {
                tagged.push((i as f64 + s, kind));
            }
        }
        tagged.sort_by(|a, b| a.0.total_cmp(&b.0));
        tagged.dedup_by(|next, kept| next.0 - kept.0 <= tol.eps_param);
        for (x, kind) in tagged {
            for p in critical_points_on_line(w, t, x, delta_prime, tol) {
                out.push(CriticalPoint { kind, ..p });
            }
        }
    }
    out
}
