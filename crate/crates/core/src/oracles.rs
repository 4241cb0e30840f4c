//! Brute-force reference implementations used by tests and fixture
//! generation. Deliberately simple and slow, and none of them share search
//! logic with the production code they check.

use crate::frechet::frechet_decide;
use crate::geom::{Point, PolyCurve, Tolerance};

/// Discrete Frechet distance between two point sequences.
pub fn discrete_frechet(p: &[Point], q: &[Point]) -> f64 {
    assert!(!p.is_empty() && !q.is_empty());
    let m = q.len();
    let mut prev = vec![f64::INFINITY; m];
    let mut row = vec![f64::INFINITY; m];
    for (i, pi) in p.iter().enumerate() {
        for (j, qj) in q.iter().enumerate() {
            let d = pi.dist(qj);
            let best_prev = if i == 0 && j == 0 {
                0.0
            } else {
                let mut b = f64::INFINITY;
                if i > 0 {
                    b = b.min(prev[j]);
                }
                if j > 0 {
                    b = b.min(row[j - 1]);
                }
                if i > 0 && j > 0 {
                    b = b.min(prev[j - 1]);
                }
                b
            };
            row[j] = d.max(best_prev);
        }
        std::mem::swap(&mut prev, &mut row);
    }
    prev[m - 1]
}

/// Sample a curve so that consecutive samples are at most `h` apart in
/// space. Returns the samples and the largest gap actually realized.
pub fn sample_curve(curve: &PolyCurve, h: f64) -> (Vec<Point>, f64) {
    assert!(h > 0.0);
    let n = curve.n();
    if n == 1 {
        return (vec![curve.vertex(1).clone()], 0.0);
    }
    let mut samples = vec![curve.vertex(1).clone()];
    let mut max_gap: f64 = 0.0;
    for i in 1..n {
        let (a, b) = curve.edge(i);
        let len = a.dist(b);
        let pieces = (len / h).ceil().max(1.0) as usize;
        for k in 1..=pieces {
            samples.push(a.lerp(b, k as f64 / pieces as f64));
        }
        max_gap = max_gap.max(len / pieces as f64);
    }
    (samples, max_gap)
}

/// Sandwich decision for `d_F(p, q) <= delta` by refining a discrete
/// Frechet upper bound. Returns `None` when the query sits too close to
/// the boundary to resolve within the refinement budget.
pub fn oracle_frechet_decide(p: &PolyCurve, q: &PolyCurve, delta: f64) -> Option<bool> {
    let scale = p.bbox_diameter().max(q.bbox_diameter()).max(1e-12);
    let mut h = scale / 8.0;
    for _ in 0..14 {
        let (ps, gap_p) = sample_curve(p, h);
        let (qs, gap_q) = sample_curve(q, h);
        let upper = discrete_frechet(&ps, &qs);
        if upper <= delta {
            return Some(true);
        }
        if upper - (gap_p + gap_q) > delta {
            return Some(false);
        }
        h /= 2.0;
    }
    None
}

/// A boolean sampling of a free-space predicate over a rectangle, the
/// ground structure for the bimonotone reachability oracle.
pub struct GridFreeSpace {
    x0: f64,
    y0: f64,
    dx: f64,
    dy: f64,
    nx: usize,
    ny: usize,
    free: Vec<bool>,
}

/// Node set reachable from one start point, produced by [`GridFreeSpace::reach_from`].
pub struct ReachSet<'g> {
    grid: &'g GridFreeSpace,
    reached: Vec<bool>,
}

impl GridFreeSpace {
    /// Sample `free` on an `(nx + 1) x (ny + 1)` lattice over the rectangle
    /// `[x_lo, x_hi] x [y_lo, y_hi]`.
    pub fn build(
        rect: (f64, f64, f64, f64),
        nx: usize,
        ny: usize,
        free: impl Fn(f64, f64) -> bool,
    ) -> Self {
        let (x_lo, x_hi, y_lo, y_hi) = rect;
        assert!(x_hi >= x_lo && y_hi >= y_lo);
        let dx = if nx == 0 { 0.0 } else { (x_hi - x_lo) / nx as f64 };
        let dy = if ny == 0 { 0.0 } else { (y_hi - y_lo) / ny as f64 };
        let mut cells = vec![false; (nx + 1) * (ny + 1)];
        for a in 0..=nx {
            let x = x_lo + a as f64 * dx;
            for b in 0..=ny {
                let y = y_lo + b as f64 * dy;
                cells[a * (ny + 1) + b] = free(x, y);
            }
        }
        GridFreeSpace {
            x0: x_lo,
            y0: y_lo,
            dx,
            dy,
            nx,
            ny,
            free: cells,
        }
    }

    fn node_x(&self, a: usize) -> f64 {
        self.x0 + a as f64 * self.dx
    }

    fn node_y(&self, b: usize) -> f64 {
        self.y0 + b as f64 * self.dy
    }

    /// Monotone wavefront from `from`: a node is reached when it is free
    /// and its left, lower, or lower-left diagonal neighbor is reached, or
    /// when it couples to `from` (at most one step up-right of it, with no
    /// grid line strictly between, so the joining segment stays in one
    /// free-space cell).
    pub fn reach_from(&self, from: (f64, f64)) -> ReachSet<'_> {
        let (fx, fy) = from;
        let stride = self.ny + 1;
        let mut reached = vec![false; self.free.len()];
        for a in 0..=self.nx {
            let x = self.node_x(a);
            if x < fx {
                continue;
            }
            for b in 0..=self.ny {
                let idx = a * stride + b;
                if !self.free[idx] {
                    continue;
                }
                let y = self.node_y(b);
                if y < fy {
                    continue;
                }
                let seeded = x <= fx + self.dx + 1e-12
                    && y <= fy + self.dy + 1e-12
                    && !integer_strictly_between(fx, x)
                    && !integer_strictly_between(fy, y);
                let from_left = a > 0 && reached[idx - stride];
                let from_down = b > 0 && reached[idx - 1];
                let from_diag = a > 0 && b > 0 && reached[idx - stride - 1];
                reached[idx] = seeded || from_left || from_down || from_diag;
            }
        }
        ReachSet {
            grid: self,
            reached,
        }
    }
}

/// Whether an integer lies in the open interval (lo, hi).
fn integer_strictly_between(lo: f64, hi: f64) -> bool {
    let first = lo.floor() + 1.0;
    first < hi
}

impl ReachSet<'_> {
    /// Whether a reached node couples to `to`: at most one step down-left
    /// of it, with no grid line strictly between.
    pub fn reaches(&self, to: (f64, f64)) -> bool {
        let (tx, ty) = to;
        let g = self.grid;
        let stride = g.ny + 1;
        let a_hi = if g.dx == 0.0 {
            0
        } else {
            (((tx - g.x0) / g.dx).floor() as i64).clamp(0, g.nx as i64) as usize
        };
        let b_hi = if g.dy == 0.0 {
            0
        } else {
            (((ty - g.y0) / g.dy).floor() as i64).clamp(0, g.ny as i64) as usize
        };
        for a in a_hi.saturating_sub(1)..=a_hi.min(g.nx) {
            let x = g.node_x(a);
            if x > tx + 1e-12 || x < tx - g.dx - 1e-12 || integer_strictly_between(x, tx) {
                continue;
            }
            for b in b_hi.saturating_sub(1)..=b_hi.min(g.ny) {
                let y = g.node_y(b);
                if y > ty + 1e-12 || y < ty - g.dy - 1e-12 || integer_strictly_between(y, ty) {
                    continue;
                }
                if self.reached[a * stride + b] {
                    return true;
                }
            }
        }
        false
    }
}

/// Pairwise bimonotone reachability among `points` under the sampled
/// predicate at one resolution. Pairs lying in one free-space cell with
/// componentwise dominance are decided directly (the joining segment is
/// free by per-cell convexity); other pairs go through the lattice.
pub fn reach_matrix_at(
    rect: (f64, f64, f64, f64),
    points: &[(f64, f64)],
    steps_per_unit: usize,
    free: impl Fn(f64, f64) -> bool,
) -> Vec<Vec<bool>> {
    let (x_lo, x_hi, y_lo, y_hi) = rect;
    let nx = (((x_hi - x_lo) * steps_per_unit as f64).ceil() as usize).max(1);
    let ny = (((y_hi - y_lo) * steps_per_unit as f64).ceil() as usize).max(1);
    let grid = GridFreeSpace::build(rect, nx, ny, &free);
    points
        .iter()
        .map(|&from| {
            let set = grid.reach_from(from);
            points
                .iter()
                .map(|&to| {
                    let direct = to.0 >= from.0
                        && to.1 >= from.1
                        && !integer_strictly_between(from.0, to.0)
                        && !integer_strictly_between(from.1, to.1)
                        && free(from.0, from.1)
                        && free(to.0, to.1);
                    direct || set.reaches(to)
                })
                .collect()
        })
        .collect()
}

/// Pairwise bimonotone reachability accumulated over the given ascending
/// sampling rates. Every positive answer is sound (the witnessing lattice
/// path maps to a free monotone path), and refining only adds connections,
/// so levels are OR-ed; negatives mean "not found within the resolution
/// budget". The flag reports whether the final refinement added nothing
/// new.
pub fn oracle_reach_matrix_with_levels(
    rect: (f64, f64, f64, f64),
    points: &[(f64, f64)],
    free: impl Fn(f64, f64) -> bool,
    levels: &[usize],
) -> (Vec<Vec<bool>>, bool) {
    let (first, rest) = levels.split_first().expect("at least one level");
    let mut accum = reach_matrix_at(rect, points, *first, &free);
    let mut stable = rest.is_empty();
    for &steps in rest {
        let next = reach_matrix_at(rect, points, steps, &free);
        stable = true;
        for (acc_row, row) in accum.iter_mut().zip(next) {
            for (acc, got) in acc_row.iter_mut().zip(row) {
                if got && !*acc {
                    *acc = true;
                    stable = false;
                }
            }
        }
    }
    (accum, stable)
}

/// [`oracle_reach_matrix_with_levels`] at the default refinement schedule.
pub fn oracle_reach_matrix_stable(
    rect: (f64, f64, f64, f64),
    points: &[(f64, f64)],
    free: impl Fn(f64, f64) -> bool,
) -> (Vec<Vec<bool>>, bool) {
    oracle_reach_matrix_with_levels(rect, points, free, &[64, 128, 256, 512, 1024])
}

/// [`oracle_reach_matrix_stable`] without the stability flag.
pub fn oracle_reach_matrix(
    rect: (f64, f64, f64, f64),
    points: &[(f64, f64)],
    free: impl Fn(f64, f64) -> bool,
) -> Vec<Vec<bool>> {
    oracle_reach_matrix_stable(rect, points, free).0
}

/// Single-pair refined reachability query.
pub fn oracle_bimonotone_reachable(
    rect: (f64, f64, f64, f64),
    from: (f64, f64),
    to: (f64, f64),
    free: impl Fn(f64, f64) -> bool,
) -> bool {
    if to.0 < from.0 || to.1 < from.1 {
        return false;
    }
    oracle_reach_matrix(rect, &[from, to], free)[0][1]
}

/// Minimum vertex count over simplifications that shortcut between curve
/// vertices, where each shortcut must stay within Frechet `delta` of the
/// subcurve it replaces.
pub fn oracle_min_simplification(t: &PolyCurve, delta: f64, tol: &Tolerance) -> usize {
    let n = t.n();
    if n == 1 {
        return 1;
    }
    let mut best = vec![usize::MAX; n + 1];
    best[1] = 1;
    for j in 2..=n {
        for i in 1..j {
            if best[i] == usize::MAX {
                continue;
            }
            let seg = PolyCurve::segment(t.vertex(i).clone(), t.vertex(j).clone())
                .expect("vertices are valid points");
            let sub = t
                .subcurve(i as f64, j as f64)
                .expect("integer vertex parameters are in domain");
            if frechet_decide(&seg, &sub, delta, tol) {
                best[j] = best[j].min(best[i] + 1);
            }
        }
    }
    best[n]
}

/// Maximal runs of `y` in `[1, n]` where `t(y)` lies within `radius` of
/// `center`, found by dense scanning with bisection refinement of each
/// transition.
pub fn oracle_line_components(
    t: &PolyCurve,
    center: &Point,
    radius: f64,
    steps: usize,
) -> Vec<(f64, f64)> {
    let inside = |y: f64| t.eval_clamped(y).dist(center) <= radius;
    let span = (t.n() as f64) - 1.0;
    let at = |k: usize| 1.0 + span * k as f64 / steps as f64;
    let refine = |mut lo: f64, mut hi: f64| {
        // Invariant: inside(lo) != inside(hi); returns the crossing.
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if inside(mid) == inside(lo) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    };
    if t.n() == 1 {
        return if inside(1.0) { vec![(1.0, 1.0)] } else { vec![] };
    }
    let mut components = Vec::new();
    let mut open: Option<f64> = None;
    let mut prev = at(0);
    let mut prev_in = inside(prev);
    if prev_in {
        open = Some(prev);
    }
    for k in 1..=steps {
        let cur = at(k);
        let cur_in = inside(cur);
        if cur_in != prev_in {
            let crossing = refine(prev, cur);
            if cur_in {
                open = Some(crossing);
            } else {
                components.push((open.take().expect("run was open"), crossing));
            }
        }
        prev = cur;
        prev_in = cur_in;
    }
    if let Some(start) = open {
        components.push((start, prev));
    }
    components
}

/// Best achievable vertex-to-vertex candidate score by exhaustive
/// enumeration: every subcurve `s[i, i+j]` with at most `ell` vertices,
/// every pairing of a start-line component bottom with an end-line
/// component top, reachability by the resolution-refined lattice walk,
/// residual coverage by linear scan.
#[allow(clippy::too_many_arguments)]
pub fn oracle_best_vertex_score(
    s: &PolyCurve,
    t: &PolyCurve,
    ell: usize,
    delta_prime: f64,
    boundaries: &[f64],
    covered: &[bool],
    eps: f64,
    tol: &Tolerance,
    levels: &[usize],
) -> usize {
    let radius = delta_prime + tol.eps_geom;
    let mut best = 0;
    for i in 1..s.n() {
        for j in 1..=(ell - 1).min(s.n() - i) {
            let rect = (i as f64, (i + j) as f64, 1.0, t.n() as f64);
            let start_lows: Vec<f64> = oracle_line_components(t, s.vertex(i), radius, 4096)
                .into_iter()
                .map(|(lo, _)| lo)
                .collect();
            let end_highs: Vec<f64> = oracle_line_components(t, s.vertex(i + j), radius, 4096)
                .into_iter()
                .map(|(_, hi)| hi)
                .collect();
            if start_lows.is_empty() || end_highs.is_empty() {
                continue;
            }
            let mut points: Vec<(f64, f64)> =
                start_lows.iter().map(|&y| (i as f64, y)).collect();
            points.extend(end_highs.iter().map(|&y| ((i + j) as f64, y)));
            let (matrix, _) = oracle_reach_matrix_with_levels(
                rect,
                &points,
                |x, y| s.eval_clamped(x).dist(&t.eval_clamped(y)) <= radius,
                levels,
            );
            let mut intervals = Vec::new();
            for (b, &hi) in end_highs.iter().enumerate() {
                let reached = start_lows
                    .iter()
                    .enumerate()
                    .filter(|&(a, _)| matrix[a][start_lows.len() + b])
                    .map(|(_, &lo)| lo)
                    .fold(f64::INFINITY, f64::min);
                if reached.is_finite() {
                    intervals.push(crate::geom::ParamInterval::new(reached.min(hi), hi));
                }
            }
            best = best.max(oracle_residual_coverage(boundaries, covered, &intervals, eps));
        }
    }
    best
}

/// Best achievable subedge candidate score by exhaustive enumeration over
/// one curve's edges: candidate reference ranges are all ordered pairs
/// drawn from `candidate_xs(edge_curve)` per oriented edge, matchable
/// ranges pair start-component bottoms with end-component tops, and
/// reachability runs on the resolution-refined lattice over the edge's
/// full parameter rectangle.
#[allow(clippy::too_many_arguments)]
pub fn oracle_best_subedge_score(
    s: &PolyCurve,
    t: &PolyCurve,
    delta_prime: f64,
    candidate_xs: impl Fn(&PolyCurve) -> Vec<f64>,
    boundaries: &[f64],
    covered: &[bool],
    eps: f64,
    tol: &Tolerance,
    levels: &[usize],
) -> usize {
    let radius = delta_prime + tol.eps_geom;
    let mut best = 0;
    for edge in 1..s.n() {
        let (a, b) = s.edge(edge);
        for seg in [
            PolyCurve::segment(a.clone(), b.clone()).expect("edge endpoints"),
            PolyCurve::segment(b.clone(), a.clone()).expect("edge endpoints"),
        ] {
            let xs = candidate_xs(&seg);
            // One reachability matrix per oriented edge: rows and columns
            // span every line's component bottoms and tops at once.
            let lines: Vec<(f64, Vec<(f64, f64)>)> = xs
                .iter()
                .map(|&x| {
                    let comps =
                        oracle_line_components(t, &seg.eval_clamped(x), radius, 4096);
                    (x, comps)
                })
                .collect();
            let mut points = Vec::new();
            let mut lows: Vec<Vec<usize>> = Vec::new();
            let mut highs: Vec<Vec<(usize, f64)>> = Vec::new();
            for (x, comps) in &lines {
                let mut lo_ids = Vec::new();
                let mut hi_ids = Vec::new();
                for &(lo, hi) in comps {
                    lo_ids.push(points.len());
                    points.push((*x, lo));
                    hi_ids.push((points.len(), hi));
                    points.push((*x, hi));
                }
                lows.push(lo_ids);
                highs.push(hi_ids);
            }
            if points.is_empty() {
                continue;
            }
            let rect = (1.0, 2.0, 1.0, t.n() as f64);
            let (matrix, _) = oracle_reach_matrix_with_levels(
                rect,
                &points,
                |x, y| seg.eval_clamped(x).dist(&t.eval_clamped(y)) <= radius,
                levels,
            );
            for from in 0..lines.len() {
                for to in (from + 1)..lines.len() {
                    let mut intervals = Vec::new();
                    for &(hi_id, hi) in &highs[to] {
                        let reached = lows[from]
                            .iter()
                            .filter(|&&lo_id| matrix[lo_id][hi_id])
                            .map(|&lo_id| points[lo_id].1)
                            .fold(f64::INFINITY, f64::min);
                        if reached.is_finite() {
                            intervals
                                .push(crate::geom::ParamInterval::new(reached.min(hi), hi));
                        }
                    }
                    best = best
                        .max(oracle_residual_coverage(boundaries, covered, &intervals, eps));
                }
            }
        }
    }
    best
}

/// Exact free-space membership check for a monotone path in the parameter
/// rectangle of `w` against `t`, made of axis-parallel legs and in-cell
/// chords. Along an axis-parallel leg the distance to the fixed opposite
/// point is convex on each edge span, so the leg stays within `delta` iff
/// it does at the leg ends and at every integer crossing. A chord leg must
/// stay inside one closed cell; there the free region is convex (it is the
/// sublevel set of a convex function of (x, y) over the cell), so the
/// chord is free iff its endpoints are. Legs must not decrease either
/// coordinate, else the path is rejected.
pub fn oracle_path_free(w: &PolyCurve, t: &PolyCurve, delta: f64, path: &[(f64, f64)]) -> bool {
    let within = |x: f64, y: f64| w.eval_clamped(x).dist(&t.eval_clamped(y)) <= delta;
    let Some(&(x0, y0)) = path.first() else {
        return true;
    };
    if !within(x0, y0) {
        return false;
    }
    for pair in path.windows(2) {
        let (ux, uy) = pair[0];
        let (wx, wy) = pair[1];
        if wx < ux || wy < uy {
            return false;
        }
        let crossings_free = if ux == wx {
            ((uy.floor() as i64 + 1)..=(wy.ceil() as i64 - 1))
                .all(|j| within(ux, j as f64))
        } else if uy == wy {
            ((ux.floor() as i64 + 1)..=(wx.ceil() as i64 - 1))
                .all(|i| within(i as f64, uy))
        } else {
            // Chord: both coordinate spans must fit one closed cell.
            wx <= ux.floor() + 1.0 && wy <= uy.floor() + 1.0
        };
        if !crossings_free || !within(wx, wy) {
            return false;
        }
    }
    true
}

/// Residual coverage by exhaustive scan: walk every universe interval, test
/// containment in the union of the query intervals, skip covered ones.
/// Containment allows `eps` slack on both ends, matching the production
/// semantics by definition rather than by shared code.
pub fn oracle_residual_coverage(
    boundaries: &[f64],
    covered: &[bool],
    queries: &[crate::geom::ParamInterval],
    eps: f64,
) -> usize {
    let mut merged: Vec<(f64, f64)> = queries.iter().map(|q| (q.lo, q.hi)).collect();
    merged.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut union: Vec<(f64, f64)> = Vec::new();
    for (lo, hi) in merged {
        match union.last_mut() {
            Some(last) if lo <= last.1 + eps => last.1 = last.1.max(hi),
            _ => union.push((lo, hi)),
        }
    }
    let mut count = 0;
    for t in 0..covered.len() {
        if covered[t] {
            continue;
        }
        let (u, v) = (boundaries[t], boundaries[t + 1]);
        if union.iter().any(|&(a, b)| a <= u + eps && v <= b + eps) {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(rows: &[&[f64]]) -> PolyCurve {
        PolyCurve::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn discrete_frechet_on_vertex_lists() {
        let p = curve(&[&[0.0, 0.0], &[2.0, 0.0]]);
        let q = curve(&[&[0.0, 1.0], &[2.0, 1.0]]);
        let d = discrete_frechet(p.points(), q.points());
        assert!((d - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sandwich_decision_matches_known_distances() {
        let p = curve(&[&[0.0, 0.0], &[4.0, 0.0]]);
        let q = curve(&[&[0.0, 0.0], &[2.0, 1.0], &[4.0, 0.0]]);
        assert_eq!(oracle_frechet_decide(&p, &q, 1.2), Some(true));
        assert_eq!(oracle_frechet_decide(&p, &q, 0.7), Some(false));
    }

    #[test]
    fn grid_reach_blocked_by_wall() {
        // Free space is everything except a vertical wall around x = 1
        // with a gap above y = 0.8. The wall straddles a grid line, as
        // free-space nonconvexity always does cell-to-cell.
        let free = |x: f64, y: f64| !(0.9..=1.1).contains(&x) || y > 0.8;
        let rect = (0.0, 2.0, 0.0, 1.0);
        assert!(oracle_bimonotone_reachable(
            rect,
            (0.0, 0.0),
            (2.0, 1.0),
            free
        ));
        assert!(!oracle_bimonotone_reachable(
            rect,
            (0.0, 0.0),
            (2.0, 0.5),
            free
        ));
        assert!(!oracle_bimonotone_reachable(
            rect,
            (2.0, 0.0),
            (0.0, 1.0),
            free
        ));
    }

    #[test]
    fn grid_reach_needs_monotone_route() {
        // A staircase obstacle that forces the path to pass through the
        // notch at (0.5, 0.5).
        let free = |x: f64, y: f64| (x < 0.45 && y < 0.55) || (x > 0.4 && y > 0.4);
        let rect = (0.0, 1.0, 0.0, 1.0);
        assert!(oracle_bimonotone_reachable(
            rect,
            (0.0, 0.0),
            (1.0, 1.0),
            free
        ));
    }

    #[test]
    fn min_simplification_degenerates_on_lines() {
        let collinear = curve(&[&[0.0, 0.0], &[1.0, 0.0], &[2.0, 0.0], &[5.0, 0.0]]);
        assert_eq!(
            oracle_min_simplification(&collinear, 0.0, &Tolerance::default()),
            2
        );
        let segment = curve(&[&[0.0, 0.0], &[1.0, 1.0]]);
        assert_eq!(
            oracle_min_simplification(&segment, 0.5, &Tolerance::default()),
            2
        );
    }

    #[test]
    fn min_simplification_counts_zigzag_teeth() {
        // Square-wave teeth of amplitude 1: with delta well below 1 the
        // simplification must keep a vertex per extremum.
        let mut rows: Vec<Vec<f64>> = Vec::new();
        for k in 0..8 {
            rows.push(vec![k as f64, if k % 2 == 0 { 0.0 } else { 1.0 }]);
        }
        let zigzag = PolyCurve::from_rows(rows).unwrap();
        let size = oracle_min_simplification(&zigzag, 0.05, &Tolerance::default());
        assert_eq!(size, 8);
        let coarse = oracle_min_simplification(&zigzag, 10.0, &Tolerance::default());
        assert_eq!(coarse, 2);
    }
}
