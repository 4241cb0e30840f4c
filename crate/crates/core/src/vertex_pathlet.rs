//! Vertex-to-vertex candidate pathlets.
//!
//! For a start vertex i of the simplification S, every subcurve
//! `S[i, i+j]` is scored by how many residual universe intervals its
//! matchable trajectory ranges cover. The matchable ranges come from
//! reachability between free-component endpoints on the integer lines
//! x = i and x = i + j of the free-space diagram of (S, T): per free
//! component on the end line, the lowest start that reaches the
//! component's top yields the widest interval the component can
//! contribute, and every other matchable range into that component is
//! contained in it.

use crate::coverage::CoverageIndex;
use crate::error::PathletError;
use crate::freespace::curve_free_intervals;
use crate::geom::{ParamInterval, PolyCurve, Tolerance};
use crate::pathlet::{Pathlet, RefSource};
use crate::reach::{build_rect_domain, build_reach_graph};
use crate::universe::{critical_points_on_line, CriticalPoint};
use rayon::prelude::*;

/// Largest end offset j such that `S[i, i+j]` stays inside S and has at
/// most `ell` vertices.
fn max_end_offset(n_s: usize, i: usize, ell: usize) -> usize {
    (ell - 1).min(n_s - i)
}

/// All free-component endpoints on the integer lines x = i .. i + j_max of
/// the free-space diagram of (S, T), in line order then ascending y.
pub fn vertex_critical_points(
    s: &PolyCurve,
    t: &PolyCurve,
    i: usize,
    ell: usize,
    delta_prime: f64,
    tol: &Tolerance,
) -> Vec<CriticalPoint> {
    let j_max = max_end_offset(s.n(), i, ell);
    (0..=j_max)
        .flat_map(|j| critical_points_on_line(s, t, (i + j) as f64, delta_prime, tol))
        .collect()
}

/// Best candidate over the end vertices i+1 .. i+j_max for the fixed start
/// vertex i, scored against the residual universe. Ends with equal scores
/// resolve to the smaller j. A zero-score placeholder on `S[i, i+1]` is
/// returned when nothing is matchable.
pub fn best_vertex_pathlet_at(
    s: &PolyCurve,
    t: &PolyCurve,
    i: usize,
    ell: usize,
    delta_prime: f64,
    tol: &Tolerance,
    index: &CoverageIndex,
) -> Result<Pathlet, PathletError> {
    let j_max = max_end_offset(s.n(), i, ell);
    debug_assert!(i >= 1 && j_max >= 1);
    let radius = delta_prime + tol.eps_geom;
    let window = s.subcurve(i as f64, (i + j_max) as f64)?;
    let dom = build_rect_domain(&window, t, delta_prime, tol);

    // Marker points: per start-line component its bottom endpoint, per
    // end-line component its top endpoint. Coordinates are local to the
    // window (line x = i maps to x = 1).
    let mut markers: Vec<(f64, f64)> = Vec::new();
    let mut starts: Vec<usize> = Vec::new();
    for (lo, _hi) in curve_free_intervals(t, s.vertex(i), radius) {
        starts.push(markers.len());
        markers.push((1.0, lo));
    }
    let mut ends_per_j: Vec<Vec<(usize, f64)>> = Vec::with_capacity(j_max);
    for j in 1..=j_max {
        let line_x = (1 + j) as f64;
        let mut ends = Vec::new();
        for (_lo, hi) in curve_free_intervals(t, s.vertex(i + j), radius) {
            ends.push((markers.len(), hi));
            markers.push((line_x, hi));
        }
        ends_per_j.push(ends);
    }

    let graph = build_reach_graph(&dom, &markers)?;
    let annotations = graph.annotate_min_start(&starts);

    let mut best: Option<(usize, usize, Vec<ParamInterval>)> = None;
    for (j, ends) in ends_per_j.iter().enumerate() {
        let mut intervals = Vec::new();
        for &(marker, hi) in ends {
            let y = graph.z_annotation(&annotations, marker);
            if y.is_finite() {
                debug_assert!(y <= hi);
                intervals.push(ParamInterval::new(y, hi));
            }
        }
        let score = index.residual_coverage(&intervals);
        if best.as_ref().is_none_or(|(s, _, _)| score > *s) {
            best = Some((score, j + 1, intervals));
        }
    }

    let (score, j, intervals) = best.unwrap_or((0, 1, Vec::new()));
    Ok(Pathlet {
        reference: s.subcurve(i as f64, (i + j) as f64)?,
        source: RefSource::Vertex {
            start: i,
            end: i + j,
        },
        intervals,
        score,
    })
}

/// Best vertex-to-vertex candidate over all start vertices. Equal scores
/// resolve to the smaller start vertex, then the smaller end vertex.
pub fn best_vertex_pathlet(
    s: &PolyCurve,
    t: &PolyCurve,
    ell: usize,
    delta_prime: f64,
    tol: &Tolerance,
    index: &CoverageIndex,
) -> Result<Pathlet, PathletError> {
    if s.n() == 1 {
        return Ok(Pathlet::empty(
            s.clone(),
            RefSource::Vertex { start: 1, end: 1 },
        ));
    }
    let candidates: Vec<Pathlet> = (1..s.n())
        .into_par_iter()
        .map(|i| best_vertex_pathlet_at(s, t, i, ell, delta_prime, tol, index))
        .collect::<Result<_, _>>()?;
    let mut iter = candidates.into_iter();
    let mut best = iter.next().expect("s.n() >= 2 yields a candidate");
    for cand in iter {
        if cand.score > best.score {
            best = cand;
        }
    }
    Ok(best)
}
