use serde::{Deserialize, Serialize};

use crate::error::PathletError;

/// A point in `d`-dimensional Euclidean space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub Vec<f64>);

impl Point {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dist(&self, other: &Point) -> f64 {
        dist(&self.0, &other.0)
    }

    /// Linear interpolation: `self + t * (other - self)`.
    pub fn lerp(&self, other: &Point, t: f64) -> Point {
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + t * (b - a))
                .collect(),
        )
    }
}

pub(crate) fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm_sq(a: &[f64]) -> f64 {
    dot(a, a)
}

pub(crate) fn dist_sq(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

pub(crate) fn dist(a: &[f64], b: &[f64]) -> f64 {
    dist_sq(a, b).sqrt()
}

/// Distance from point `p` to the closed segment `[a, b]`.
pub fn dist_point_segment(p: &[f64], a: &[f64], b: &[f64]) -> f64 {
    let ab = sub(b, a);
    let len_sq = norm_sq(&ab);
    if len_sq == 0.0 {
        return dist(p, a);
    }
    let t = (dot(&sub(p, a), &ab) / len_sq).clamp(0.0, 1.0);
    let closest: Vec<f64> = a.iter().zip(&ab).map(|(x, d)| x + t * d).collect();
    dist(p, &closest)
}

/// A polygonal curve with vertices `T(1), ..., T(n)` and parameter domain
/// `[1, n]`. `T(i + s)` for `s` in `[0, 1]` interpolates linearly along the
/// edge from vertex `i` to vertex `i + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyCurve {
    points: Vec<Point>,
    dim: usize,
}

impl PolyCurve {
    pub fn new(points: Vec<Point>) -> Result<Self, PathletError> {
        if points.is_empty() {
            return Err(PathletError::EmptyCurve);
        }
        let dim = points[0].dim();
        for (index, p) in points.iter().enumerate() {
            if p.dim() != dim {
                return Err(PathletError::DimMismatch {
                    index,
                    got: p.dim(),
                    expected: dim,
                });
            }
            if p.0.iter().any(|c| !c.is_finite()) {
                return Err(PathletError::NonFinite { index });
            }
        }
        Ok(PolyCurve { points, dim })
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self, PathletError> {
        Self::new(rows.into_iter().map(Point).collect())
    }

    /// Two-point curve through `a` and `b`.
    pub fn segment(a: Point, b: Point) -> Result<Self, PathletError> {
        Self::new(vec![a, b])
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Vertex by 1-based index, matching the parameter domain.
    pub fn vertex(&self, i: usize) -> &Point {
        &self.points[i - 1]
    }

    /// Endpoints of edge `i`, the part of the curve over `[i, i + 1]`.
    pub fn edge(&self, i: usize) -> (&Point, &Point) {
        (&self.points[i - 1], &self.points[i])
    }

    pub fn domain(&self) -> ParamInterval {
        ParamInterval::new(1.0, self.n() as f64)
    }

    pub fn eval(&self, t: f64) -> Result<Point, PathletError> {
        let n = self.n();
        if !t.is_finite() || t < 1.0 || t > n as f64 {
            return Err(PathletError::ParamOutOfDomain { value: t, n });
        }
        Ok(self.eval_clamped(t))
    }

    /// Evaluation with `t` clamped into the domain. Callers use this after
    /// establishing domain membership themselves.
    pub fn eval_clamped(&self, t: f64) -> Point {
        let n = self.n();
        let t = t.clamp(1.0, n as f64);
        let i = (t.floor() as usize).min(n.saturating_sub(1)).max(1);
        if n == 1 {
            return self.points[0].clone();
        }
        let frac = t - i as f64;
        self.points[i - 1].lerp(&self.points[i], frac)
    }

    /// The subcurve over `[a, b]`, with `1 <= a <= b <= n`. Its vertices are
    /// `T(a)`, the curve vertices strictly between `a` and `b`, and `T(b)`.
    pub fn subcurve(&self, a: f64, b: f64) -> Result<PolyCurve, PathletError> {
        let n = self.n() as f64;
        for t in [a, b] {
            if !t.is_finite() || t < 1.0 || t > n {
                return Err(PathletError::ParamOutOfDomain {
                    value: t,
                    n: self.n(),
                });
            }
        }
        if b < a {
            return Err(PathletError::ParamOutOfDomain {
                value: b,
                n: self.n(),
            });
        }
        let mut params = vec![a];
        let mut k = a.floor() as i64 + 1;
        while (k as f64) < b {
            params.push(k as f64);
            k += 1;
        }
        if b > a {
            params.push(b);
        }
        let points = params.into_iter().map(|t| self.eval_clamped(t)).collect();
        PolyCurve::new(points)
    }

    pub fn reversed(&self) -> PolyCurve {
        let mut points = self.points.clone();
        points.reverse();
        PolyCurve {
            points,
            dim: self.dim,
        }
    }

    /// Euclidean diagonal of the axis-aligned bounding box.
    pub fn bbox_diameter(&self) -> f64 {
        let mut acc = 0.0;
        for d in 0..self.dim {
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for p in &self.points {
                lo = lo.min(p.0[d]);
                hi = hi.max(p.0[d]);
            }
            acc += (hi - lo) * (hi - lo);
        }
        acc.sqrt()
    }
}

/// A closed interval `[lo, hi]` in a curve's parameter domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamInterval {
    pub lo: f64,
    pub hi: f64,
}

impl ParamInterval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "interval [{lo}, {hi}] is reversed");
        ParamInterval { lo, hi }
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.len() <= 0.0
    }

    pub fn contains(&self, t: f64, eps: f64) -> bool {
        t >= self.lo - eps && t <= self.hi + eps
    }

    /// Whether the two closed intervals intersect, with `eps` slack.
    pub fn intersects(&self, other: &ParamInterval, eps: f64) -> bool {
        self.lo <= other.hi + eps && other.lo <= self.hi + eps
    }
}

impl Serialize for ParamInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.lo, self.hi].serialize(s)
    }
}

impl<'de> Deserialize<'de> for ParamInterval {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [lo, hi] = <[f64; 2]>::deserialize(d)?;
        Ok(ParamInterval { lo, hi })
    }
}

/// Numeric slack used by geometric predicates and parameter searches.
///
/// `eps_geom` inflates distance comparisons; `eps_param` is the resolution
/// of searches over curve parameters.
#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    pub eps_geom: f64,
    pub eps_param: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps_geom: 1e-9,
            eps_param: 1e-7,
        }
    }
}

impl Tolerance {
    /// Scale the geometric slack to the input: `1e-9` relative to the
    /// bounding-box diameter, with an absolute floor for tiny inputs.
    pub fn for_input(curve: &PolyCurve) -> Self {
        Tolerance {
            eps_geom: 1e-9 * curve.bbox_diameter().max(1.0),
            eps_param: 1e-7,
        }
    }
}
