//! Free-space primitives shared by the Frechet decision procedure, the
//! candidate-interval construction, and reachability.
//!
//! All functions here are exact up to floating-point rounding: callers that
//! want robustness against ties inflate the radius themselves.

use crate::geom::{dot, norm_sq, sub, Point, PolyCurve};

/// `b * b - 4.0 * a * c` with the products' round-off compensated via fused
/// multiply-adds. The naive expression cancels catastrophically when the
/// quadratic grazes zero, which at radii near ε_geom turns misses into
/// phantom free intervals; the compensated value keeps the sign reliable
/// down to the rounding of `a`, `b`, `c` themselves.
fn discriminant(a: f64, b: f64, c: f64) -> f64 {
    let p = b * b;
    let dp = b.mul_add(b, -p);
    let ac = a * c;
    let dac = a.mul_add(c, -ac);
    (p - 4.0 * ac) + (dp - 4.0 * dac)
}

/// The parameter range `{s in [0, 1] : |p0 + s (p1 - p0) - center| <= radius}`,
/// or `None` if the edge misses the ball entirely.
pub fn free_interval_on_edge(
    p0: &Point,
    p1: &Point,
    center: &Point,
    radius: f64,
) -> Option<(f64, f64)> {
    let u = sub(p1.coords(), p0.coords());
    let w = sub(p0.coords(), center.coords());
    let a = norm_sq(&u);
    if a == 0.0 {
        return (norm_sq(&w) <= radius * radius).then_some((0.0, 1.0));
    }
    let b = 2.0 * dot(&w, &u);
    let c = norm_sq(&w) - radius * radius;
    let disc = discriminant(a, b, c);
    if disc < 0.0 {
        return None;
    }
    let sq = disc.sqrt();
    let lo = ((-b - sq) / (2.0 * a)).max(0.0);
    let hi = ((-b + sq) / (2.0 * a)).min(1.0);
    if lo > hi {
        return None;
    }
    // The discriminant's sign is only as reliable as the rounded inputs, so
    // a grazing miss can still produce a sliver of "roots". Demand that the
    // interval's midpoint actually realizes the claimed distance, with
    // slack far above evaluation noise yet far below ε_geom.
    let mid = 0.5 * (lo + hi);
    let at_mid: Vec<f64> = w.iter().zip(&u).map(|(wc, uc)| wc + mid * uc).collect();
    let slack = 1e-12 * (1.0 + a.sqrt() + norm_sq(&w).sqrt());
    let reach = radius + slack;
    (norm_sq(&at_mid) <= reach * reach).then_some((lo, hi))
}

/// Free components of a whole curve against one ball, as merged intervals
/// in the curve's parameter domain `[1, n]`.
pub fn curve_free_intervals(curve: &PolyCurve, center: &Point, radius: f64) -> Vec<(f64, f64)> {
    let n = curve.n();
    if n == 1 {
        let inside = curve.vertex(1).dist(center) <= radius;
        return if inside { vec![(1.0, 1.0)] } else { vec![] };
    }
    let mut merged: Vec<(f64, f64)> = Vec::new();
    for i in 1..n {
        let (p0, p1) = curve.edge(i);
        if let Some((s0, s1)) = free_interval_on_edge(p0, p1, center, radius) {
            let lo = i as f64 + s0;
            let hi = i as f64 + s1;
            match merged.last_mut() {
                Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
                _ => merged.push((lo, hi)),
            }
        }
    }
    merged
}

/// Extreme horizontal coordinates of the free region inside one free-space
/// cell, in edge-local coordinates.
///
/// The cell pairs the edge `p0 p1` (horizontal axis, parameter `s`) with the
/// edge `q0 q1` (vertical axis, parameter `t`); its free region is
/// `{(s, t) in [0,1]^2 : |P(s) - Q(t)| <= radius}`, a convex set. Returns
/// the minimum and maximum `s` over that set, or `None` when it is empty.
pub fn cell_x_extremes(
    p0: &Point,
    p1: &Point,
    q0: &Point,
    q1: &Point,
    radius: f64,
) -> Option<(f64, f64)> {
    let u = sub(p1.coords(), p0.coords());
    let v = sub(q1.coords(), q0.coords());
    let w = sub(p0.coords(), q0.coords());
    let v_sq = norm_sq(&v);
    if v_sq == 0.0 {
        return free_interval_on_edge(p0, p1, q0, radius);
    }
    if norm_sq(&u) == 0.0 {
        return free_interval_on_edge(q0, q1, p0, radius).map(|_| (0.0, 1.0));
    }

    let mut candidates: Vec<f64> = Vec::with_capacity(8);
    if free_interval_on_edge(q0, q1, p0, radius).is_some() {
        candidates.push(0.0);
    }
    if free_interval_on_edge(q0, q1, p1, radius).is_some() {
        candidates.push(1.0);
    }
    for center in [q0, q1] {
        if let Some((s0, s1)) = free_interval_on_edge(p0, p1, center, radius) {
            candidates.push(s0);
            candidates.push(s1);
        }
    }

    // Tangency points: extreme s of the slab {s : dist(P(s), line(Q)) <= r},
    // admissible when the closest line parameter falls inside [0, 1].
    let uv = dot(&u, &v) / v_sq.sqrt();
    let wv = dot(&w, &v) / v_sq.sqrt();
    let alpha = norm_sq(&u) - uv * uv;
    let beta = 2.0 * (dot(&w, &u) - wv * uv);
    let gamma = norm_sq(&w) - wv * wv - radius * radius;
    let mut roots: Vec<f64> = Vec::new();
    if alpha.abs() > 0.0 {
        let disc = discriminant(alpha, beta, gamma);
        if disc >= 0.0 {
            let sq = disc.sqrt();
            roots.push((-beta - sq) / (2.0 * alpha));
            roots.push((-beta + sq) / (2.0 * alpha));
        }
    } else if beta != 0.0 {
        roots.push(-gamma / beta);
    }
    for s in roots {
        if (0.0..=1.0).contains(&s) {
            let at: Vec<f64> = w.iter().zip(&u).map(|(wc, uc)| wc + s * uc).collect();
            let t = dot(&at, &v) / v_sq;
            if (0.0..=1.0).contains(&t) {
                candidates.push(s);
            }
        }
    }

    let lo = candidates.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = candidates
        .iter()
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max);
    (lo <= hi).then_some((lo, hi))
}
