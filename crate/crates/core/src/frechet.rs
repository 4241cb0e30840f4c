//! Decision procedure for the continuous Frechet distance.

use crate::freespace::free_interval_on_edge;
use crate::geom::{PolyCurve, Tolerance};

/// Decide whether the continuous Frechet distance between `p` and `q` is at
/// most `delta`.
///
/// Comparisons are made against `delta + tol.eps_geom`, so queries exactly
/// at the distance answer `true` despite rounding.
pub fn frechet_decide(p: &PolyCurve, q: &PolyCurve, delta: f64, tol: &Tolerance) -> bool {
    if !delta.is_finite() || delta < 0.0 {
        return false;
    }
    decide_radius(p, q, delta + tol.eps_geom)
}

/// The decision with an explicit comparison radius and no slack.
pub fn decide_radius(p: &PolyCurve, q: &PolyCurve, radius: f64) -> bool {
    let n = p.n();
    let m = q.n();
    if n == 1 {
        return q.points().iter().all(|v| v.dist(p.vertex(1)) <= radius);
    }
    if m == 1 {
        return p.points().iter().all(|v| v.dist(q.vertex(1)) <= radius);
    }
    if p.vertex(1).dist(q.vertex(1)) > radius || p.vertex(n).dist(q.vertex(m)) > radius {
        return false;
    }

    // Reachable portion of each vertical cell boundary in the current
    // column, bottom to top; index j-1 holds the boundary spanning Q edge j.
    let mut left_reach: Vec<Option<(f64, f64)>> = Vec::with_capacity(m - 1);
    let mut connected = true;
    for j in 1..m {
        let (q0, q1) = q.edge(j);
        let reach = if connected {
            match free_interval_on_edge(q0, q1, p.vertex(1), radius) {
                Some((lo, hi)) if lo <= 0.0 => {
                    connected = hi >= 1.0;
                    Some((0.0, hi))
                }
                _ => {
                    connected = false;
                    None
                }
            }
        } else {
            None
        };
        left_reach.push(reach);
    }

    let mut bottom_connected = true;
    for i in 1..n {
        let (p0, p1) = p.edge(i);

        // Reachable portion of this column's bottom boundary, fed only by
        // travel along the diagram's bottom edge.
        let mut bottom_reach = if bottom_connected {
            match free_interval_on_edge(p0, p1, q.vertex(1), radius) {
                Some((lo, hi)) if lo <= 0.0 => {
                    bottom_connected = hi >= 1.0;
                    Some((0.0, hi))
                }
                _ => {
                    bottom_connected = false;
                    None
                }
            }
        } else {
            None
        };

        for j in 1..m {
            let (q0, q1) = q.edge(j);
            let from_left = left_reach[j - 1];
            let from_bottom = bottom_reach;

            let right_free = free_interval_on_edge(q0, q1, p1, radius);
            let top_free = free_interval_on_edge(p0, p1, q.vertex(j + 1), radius);

            left_reach[j - 1] = right_free.and_then(|(lo, hi)| {
                if from_bottom.is_some() {
                    Some((lo, hi))
                } else {
                    let (llo, _) = from_left?;
                    let lo = lo.max(llo);
                    (lo <= hi).then_some((lo, hi))
                }
            });
            bottom_reach = top_free.and_then(|(lo, hi)| {
                if from_left.is_some() {
                    Some((lo, hi))
                } else {
                    let (blo, _) = from_bottom?;
                    let lo = lo.max(blo);
                    (lo <= hi).then_some((lo, hi))
                }
            });
        }

        let at_top = bottom_reach.is_some_and(|(_, hi)| hi >= 1.0);
        let at_right = left_reach[m - 2].is_some_and(|(_, hi)| hi >= 1.0);
        if i == n - 1 {
            return at_top || at_right;
        }
    }
    unreachable!("loop returns at the final column")
}
