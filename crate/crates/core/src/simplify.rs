//! Curve simplification whose breakpoints align with pathlet boundaries.
//!
//! The simplification S of T shortcuts runs of T by straight segments while
//! keeping every segment within Frechet distance `2 * delta` of the run it
//! replaces. Breakpoints are chosen greedily: each one is (up to the search
//! tolerance) the right end of a connected component of the feasible set
//! `B(a) = {b >= a : d_F(segment(T(a), T(b)), T[a, b]) <= 2 delta}`.

use crate::frechet::frechet_decide;
use crate::geom::{dist_point_segment, Point, PolyCurve, Tolerance};

/// A simplification of a curve T: breakpoints `1 = a_0 < ... < a_r = n` on
/// T's domain and the shortcut curve through `T(a_0), ..., T(a_r)`. Edge
/// `i` of the curve corresponds to the piece `T[a_{i-1}, a_i]`.
#[derive(Debug, Clone)]
pub struct Simplification {
    pub breakpoints: Vec<f64>,
    pub curve: PolyCurve,
}

/// Feasible parameter range `{s in [0, 1]}` of points p on the edge
/// `e0 e1` such that the segment from `apex` to p passes within `rho` of
/// `center`. The region of such p is convex, so the range is one interval.
fn stab_interval(apex: &Point, e0: &Point, e1: &Point, center: &Point, rho: f64) -> Option<(f64, f64)> {
    if apex.dist(center) <= rho {
        return Some((0.0, 1.0));
    }
    let f = |s: f64| {
        let p = e0.lerp(e1, s);
        dist_point_segment(center.coords(), apex.coords(), p.coords())
    };
    // Coarse scan for a feasible bracket, then refine; f is quasiconvex so
    // its sublevel set is an interval.
    const SCAN: usize = 64;
    let mut best_s = 0.0;
    let mut best_f = f64::INFINITY;
    for k in 0..=SCAN {
        let s = k as f64 / SCAN as f64;
        let v = f(s);
        if v < best_f {
            best_f = v;
            best_s = s;
        }
    }
    let (mut lo, mut hi) = (
        (best_s - 1.0 / SCAN as f64).max(0.0),
        (best_s + 1.0 / SCAN as f64).min(1.0),
    );
    for _ in 0..40 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if f(m1) <= f(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    let s_min = 0.5 * (lo + hi);
    if f(s_min).min(best_f) > rho {
        return None;
    }
    let s_feas = if f(s_min) <= rho { s_min } else { best_s };

    let lower = if f(0.0) <= rho {
        0.0
    } else {
        let (mut bad, mut good) = (0.0, s_feas);
        for _ in 0..60 {
            let mid = 0.5 * (bad + good);
            if f(mid) <= rho {
                good = mid;
            } else {
                bad = mid;
            }
        }
        good
    };
    let upper = if f(1.0) <= rho {
        1.0
    } else {
        let (mut good, mut bad) = (s_feas, 1.0);
        for _ in 0..60 {
            let mid = 0.5 * (good + bad);
            if f(mid) <= rho {
                good = mid;
            } else {
                bad = mid;
            }
        }
        good
    };
    Some((lower, upper))
}

fn shortcut_ok(t: &PolyCurve, a: f64, b: f64, delta: f64, tol: &Tolerance) -> bool {
    let seg = PolyCurve::segment(t.eval_clamped(a), t.eval_clamped(b))
        .expect("curve points are finite");
    let sub = t.subcurve(a, b).expect("parameters validated by caller");
    frechet_decide(&seg, &sub, 2.0 * delta, tol)
}

/// Maximum `b` in `[max(i, a), i + 1]` such that the segment from T(a) to
/// T(b) stays within Frechet distance `2 * delta` of T[a, b], or `None` if
/// no parameter on edge `i` qualifies.
///
/// The candidate is bounded above by intersecting, over every curve vertex
/// j in [a, i], the parameter range where the shortcut segment still passes
/// within `2 * delta` of T(j); the bound is then validated with the full
/// Frechet decision and lowered if validation fails.
pub fn max_b_on_edge(
    t: &PolyCurve,
    a: f64,
    edge: usize,
    delta: f64,
    tol: &Tolerance,
) -> Option<f64> {
    let n = t.n();
    debug_assert!((1..n).contains(&edge));
    debug_assert!(a >= 1.0 && a < (edge + 1) as f64);
    let s_floor = (a - edge as f64).max(0.0);
    let apex = t.eval_clamped(a);
    let (e0, e1) = t.edge(edge);
    let rho = 2.0 * delta + tol.eps_geom;

    let mut s_lo = s_floor;
    let mut s_hi = 1.0f64;
    let j_first = a.ceil() as usize;
    for j in j_first..=edge {
        let (lo, hi) = stab_interval(&apex, e0, e1, t.vertex(j), rho)?;
        s_lo = s_lo.max(lo);
        s_hi = s_hi.min(hi);
        if s_lo > s_hi {
            return None;
        }
    }

    let b_cand = edge as f64 + s_hi;
    if shortcut_ok(t, a, b_cand, delta, tol) {
        return Some(b_cand);
    }

    // The stabbing bound ignores matching order, so the candidate can
    // overshoot; walk down for a validated point, then bisect back up to
    // the transition.
    let floor_b = edge as f64 + s_lo;
    let mut step = tol.eps_param;
    let mut found = None;
    while b_cand - step >= floor_b {
        let probe = b_cand - step;
        if shortcut_ok(t, a, probe, delta, tol) {
            found = Some(probe);
            break;
        }
        step *= 2.0;
    }
    let mut good = match found {
        Some(g) => g,
        None => {
            if shortcut_ok(t, a, floor_b, delta, tol) {
                floor_b
            } else {
                return None;
            }
        }
    };
    let mut bad = b_cand;
    while bad - good > tol.eps_param {
        let mid = 0.5 * (good + bad);
        if shortcut_ok(t, a, mid, delta, tol) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    Some(good)
}

enum Probe {
    Empty,
    Interior(f64),
    Full,
}

fn classify(t: &PolyCurve, a: f64, edge: usize, delta: f64, tol: &Tolerance) -> Probe {
    match max_b_on_edge(t, a, edge, delta, tol) {
        None => Probe::Empty,
        Some(b) if b >= (edge + 1) as f64 => Probe::Full,
        Some(b) => Probe::Interior(b),
    }
}

/// The next greedy breakpoint after `a`: the right end of a connected
/// component of the feasible set B(a), located by exponential search over
/// edges followed by binary search.
pub fn next_breakpoint(t: &PolyCurve, a: f64, delta: f64, tol: &Tolerance) -> f64 {
    let n = t.n();
    debug_assert!(a >= 1.0 && a < n as f64);
    let first_edge = (a.floor() as usize).min(n - 1);

    // Exponential phase: the first probed edge is always fully feasible
    // (a shortcut within one edge is exact), so the search makes at least
    // one whole-edge step of progress.
    let mut last_full = first_edge;
    let mut step = 1usize;
    let mut probe = first_edge;
    let empty_edge = loop {
        match classify(t, a, probe, delta, tol) {
            Probe::Interior(b) => return b,
            Probe::Full => {
                if probe == n - 1 {
                    return n as f64;
                }
                last_full = probe;
                probe = (probe + step).min(n - 1);
                step *= 2;
            }
            Probe::Empty => break probe,
        }
    };

    // Binary phase: the component through the right end of `last_full`
    // terminates before `empty_edge`.
    let (mut lo, mut hi) = (last_full, empty_edge);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match classify(t, a, mid, delta, tol) {
            Probe::Interior(b) => return b,
            Probe::Full => lo = mid,
            Probe::Empty => hi = mid,
        }
    }
    // Adjacent Full/Empty edges: the component max sits at the shared
    // edge endpoint, which the Full probe already validated.
    (lo + 1) as f64
}

/// Greedy simplification of `t`: starts at T(1), repeatedly extends by
/// `next_breakpoint`, ends at T(n). At most `n` vertices.
pub fn build_simplification(t: &PolyCurve, delta: f64, tol: &Tolerance) -> Simplification {
    let n = t.n();
    let mut breakpoints = vec![1.0];
    let mut a = 1.0;
    while a < n as f64 {
        let b = next_breakpoint(t, a, delta, tol);
        debug_assert!(b > a, "breakpoint search must advance");
        let b = if b <= a {
            (a.floor() + 1.0).min(n as f64)
        } else {
            b
        };
        breakpoints.push(b);
        a = b;
    }
    let points = breakpoints.iter().map(|&p| t.eval_clamped(p)).collect();
    let curve = PolyCurve::new(points).expect("breakpoints evaluate to finite points");
    Simplification { breakpoints, curve }
}

/// Structural validity: breakpoints span [1, n] in increasing order, the
/// curve interpolates them, and every shortcut edge respects the
/// `2 * delta` Frechet bound against its piece of `t`.
pub fn verify_simplification(t: &PolyCurve, s: &Simplification, delta: f64, tol: &Tolerance) -> bool {
    let n = t.n() as f64;
    let bp = &s.breakpoints;
    if bp.is_empty() || bp[0] != 1.0 || *bp.last().unwrap() != n {
        return false;
    }
    if bp.windows(2).any(|w| w[0] >= w[1]) {
        return false;
    }
    if s.curve.n() != bp.len() {
        return false;
    }
    for (k, &p) in bp.iter().enumerate() {
        if s.curve.vertex(k + 1).dist(&t.eval_clamped(p)) > tol.eps_geom {
            return false;
        }
    }
    bp.windows(2)
        .all(|w| shortcut_ok(t, w[0], w[1], delta, tol))
}

/// Greedy maximality: nudging any interior breakpoint outward by
/// `10 * eps_param` makes its shortcut edge fail the `2 * delta` bound.
pub fn verify_greedy_maximality(
    t: &PolyCurve,
    s: &Simplification,
    delta: f64,
    tol: &Tolerance,
) -> bool {
    let n = t.n() as f64;
    s.breakpoints.windows(2).all(|w| {
        let (a, b) = (w[0], w[1]);
        let extended = b + 10.0 * tol.eps_param;
        if extended >= n {
            return true;
        }
        !shortcut_ok(t, a, extended, delta, tol)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::oracle_min_simplification;

    fn curve(rows: &[&[f64]]) -> PolyCurve {
        PolyCurve::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn square_wave(teeth: usize) -> PolyCurve {
        let rows = (0..teeth)
            .map(|k| vec![k as f64, (k % 2) as f64])
            .collect();
        PolyCurve::from_rows(rows).unwrap()
    }

    #[test]
    fn max_b_full_on_collinear_curve() {
        let t = curve(&[&[0.0, 0.0], &[1.0, 0.0], &[2.0, 0.0]]);
        let b = max_b_on_edge(&t, 1.0, 2, 0.1, &tol()).unwrap();
        assert_eq!(b, 3.0);
    }

    #[test]
    fn max_b_stops_where_tent_apex_escapes() {
        // Apex (1, 1) constrains the shortcut from (0, 0) onto the edge
        // (1,1)-(2,0): the distance to the shortcut hits 0.2 at s = 1/7.
        let t = curve(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 0.0]]);
        let b = max_b_on_edge(&t, 1.0, 2, 0.1, &tol()).unwrap();
        assert!((b - (2.0 + 1.0 / 7.0)).abs() < 1e-5, "b = {b}");
    }

    #[test]
    fn max_b_full_when_delta_dominates() {
        let t = curve(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 0.0], &[3.0, 1.0]]);
        let b = max_b_on_edge(&t, 1.0, 3, 10.0, &tol()).unwrap();
        assert_eq!(b, 4.0);
    }

    #[test]
    fn max_b_empty_when_edge_unreachable() {
        // Shortcuts from the origin onto the last edge never pass near the
        // detour vertex (0, 5), so no parameter on that edge is feasible.
        let t = curve(&[&[0.0, 0.0], &[0.0, 5.0], &[10.0, 5.0], &[10.0, 0.0]]);
        assert!(max_b_on_edge(&t, 1.0, 3, 0.1, &tol()).is_none());
    }

    #[test]
    fn next_breakpoint_collinear_reaches_end() {
        let rows: Vec<Vec<f64>> = (0..50).map(|k| vec![k as f64, 0.0]).collect();
        let t = PolyCurve::from_rows(rows).unwrap();
        assert_eq!(next_breakpoint(&t, 1.0, 0.5, &tol()), 50.0);
        assert_eq!(next_breakpoint(&t, 17.25, 0.5, &tol()), 50.0);
    }

    #[test]
    fn next_breakpoint_enters_first_tooth() {
        let wave = square_wave(10);
        let b = next_breakpoint(&wave, 1.0, 0.05, &tol());
        assert!(b > 2.0 && b < 2.2, "b = {b}");

        // Linear scan over edges finds the same first component maximum.
        let mut linear = None;
        for edge in 1..wave.n() {
            match max_b_on_edge(&wave, 1.0, edge, 0.05, &tol()) {
                Some(v) if v >= (edge + 1) as f64 => continue,
                Some(v) => {
                    linear = Some(v);
                    break;
                }
                None => break,
            }
        }
        assert!((b - linear.unwrap()).abs() < 1e-6);
    }

    #[test]
    fn next_breakpoint_from_final_subedge() {
        let t = curve(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 0.0], &[3.0, 1.0]]);
        let b = next_breakpoint(&t, 3.5, 0.01, &tol());
        assert_eq!(b, 4.0);
    }

    #[test]
    fn build_collapses_collinear_input() {
        let rows: Vec<Vec<f64>> = (0..100).map(|k| vec![k as f64, 0.0]).collect();
        let t = PolyCurve::from_rows(rows).unwrap();
        let s = build_simplification(&t, 0.1, &tol());
        assert_eq!(s.curve.n(), 2);
        assert_eq!(s.breakpoints, vec![1.0, 100.0]);
        assert!(verify_simplification(&t, &s, 0.1, &tol()));
    }

    #[test]
    fn build_at_zero_delta_skips_collinear_vertices_only() {
        let t = curve(&[
            &[0.0, 0.0],
            &[1.0, 0.0],
            &[2.0, 0.0],
            &[2.0, 1.0],
            &[2.0, 2.0],
        ]);
        let s = build_simplification(&t, 0.0, &tol());
        assert_eq!(s.curve.n(), 3);
        assert!(verify_simplification(&t, &s, 0.0, &tol()));
    }

    #[test]
    fn build_keeps_every_tooth_of_square_wave() {
        let wave = square_wave(10);
        let s = build_simplification(&wave, 0.05, &tol());
        assert!(verify_simplification(&wave, &s, 0.05, &tol()));
        assert!(verify_greedy_maximality(&wave, &s, 0.05, &tol()));
        assert!(s.curve.n() >= 9, "|S| = {}", s.curve.n());
    }

    #[test]
    fn build_single_point_and_single_edge() {
        let p = PolyCurve::from_rows(vec![vec![3.0, 4.0]]).unwrap();
        let s = build_simplification(&p, 1.0, &tol());
        assert_eq!(s.breakpoints, vec![1.0]);

        let e = curve(&[&[0.0, 0.0], &[5.0, 5.0]]);
        let s = build_simplification(&e, 1.0, &tol());
        assert_eq!(s.breakpoints, vec![1.0, 2.0]);
    }

    #[test]
    fn size_close_to_vertex_restricted_optimum() {
        // A noisy circle: 16 vertices of radius 10 with deterministic
        // radial perturbations below 0.05.
        let rows: Vec<Vec<f64>> = (0..16)
            .map(|k| {
                let angle = k as f64 * std::f64::consts::TAU / 15.0;
                let r = 10.0 + 0.05 * ((k * 7 % 5) as f64 / 5.0 - 0.4);
                vec![r * angle.cos(), r * angle.sin()]
            })
            .collect();
        let t = PolyCurve::from_rows(rows).unwrap();
        let s = build_simplification(&t, 0.5, &tol());
        assert!(verify_simplification(&t, &s, 0.5, &tol()));
        let opt = oracle_min_simplification(&t, 0.5, &tol());
        assert!(
            s.curve.n() <= opt + 2,
            "|S| = {}, oracle = {}",
            s.curve.n(),
            opt
        );
    }

    #[test]
    fn maximality_holds_on_zigzag() {
        let t = curve(&[
            &[0.0, 0.0],
            &[1.0, 0.8],
            &[2.0, -0.3],
            &[3.0, 1.1],
            &[4.0, 0.2],
            &[5.0, 0.9],
        ]);
        let s = build_simplification(&t, 0.2, &tol());
        assert!(verify_simplification(&t, &s, 0.2, &tol()));
        assert!(verify_greedy_maximality(&t, &s, 0.2, &tol()));
    }
}
