//! Greedy clustering driver.
//!
//! Repeatedly takes the better of the best vertex-to-vertex candidate and
//! the best subedge candidate, commits its matchable intervals to the
//! coverage index, and stops when the whole universe is covered. Each pick
//! is a constant-factor approximation of the best single pathlet, which
//! gives the standard greedy set-cover guarantee against the optimal
//! clustering size.

use crate::coverage::{merge_touching, CoverageIndex};
use crate::error::PathletError;
use crate::frechet::frechet_decide;
use crate::geom::{ParamInterval, PolyCurve, Tolerance};
use crate::pathlet::{Pathlet, RefSource};
use crate::simplify::{build_simplification, Simplification};
use crate::subedge_pathlet::{best_subedge_pathlet, build_subedge_searches};
use crate::universe::build_universe;
use crate::vertex_pathlet::best_vertex_pathlet;

#[derive(Debug, Clone, Copy)]
pub struct IterationStats {
    /// Uncovered universe intervals before this iteration's commit.
    pub residual_before: usize,
    /// Residual coverage of the committed pathlet.
    pub score: usize,
    /// Covered universe intervals after the commit.
    pub covered_after: usize,
}

#[derive(Debug, Clone)]
pub struct Clustering {
    /// Pathlets in commit order.
    pub pathlets: Vec<Pathlet>,
    pub n: usize,
    pub ell: usize,
    pub delta: f64,
    /// Matching radius of the pathlets, four times `delta`.
    pub delta_prime: f64,
    pub simplification: Simplification,
    pub universe_size: usize,
    pub iterations: Vec<IterationStats>,
}

/// Drops intervals that fail the decision procedure at the original
/// radius. Used after a stall inflates the working radius: anything the
/// inflated search finds must still be certified at the radius the
/// clustering promises.
fn certify_intervals(
    pathlet: &mut Pathlet,
    t: &PolyCurve,
    delta_prime: f64,
    index: &CoverageIndex,
    tol: &Tolerance,
) -> Result<(), PathletError> {
    let mut kept = Vec::with_capacity(pathlet.intervals.len());
    for iv in &pathlet.intervals {
        let sub = t.subcurve(iv.lo, iv.hi)?;
        if frechet_decide(&pathlet.reference, &sub, delta_prime + tol.eps_geom, tol) {
            kept.push(*iv);
        }
    }
    pathlet.intervals = kept;
    pathlet.score = index.residual_coverage(&pathlet.intervals);
    Ok(())
}

pub fn cluster(
    t: &PolyCurve,
    ell: usize,
    delta: f64,
    tol: &Tolerance,
) -> Result<Clustering, PathletError> {
    if ell < 2 {
        return Err(PathletError::EllTooSmall { ell });
    }
    if !delta.is_finite() || delta < 0.0 {
        return Err(PathletError::InvalidDelta { delta });
    }
    let n = t.n();
    let delta_prime = 4.0 * delta;
    let simplification = build_simplification(t, delta, tol);

    if n == 1 {
        let pathlet = Pathlet {
            reference: t.clone(),
            source: RefSource::Vertex { start: 1, end: 1 },
            intervals: vec![ParamInterval::new(1.0, 1.0)],
            score: 1,
        };
        return Ok(Clustering {
            pathlets: vec![pathlet],
            n,
            ell,
            delta,
            delta_prime,
            simplification,
            universe_size: 1,
            iterations: vec![IterationStats {
                residual_before: 1,
                score: 1,
                covered_after: 1,
            }],
        });
    }

    let s = simplification.curve.clone();
    let universe = build_universe(&s, t, delta_prime, tol);
    let mut index = CoverageIndex::new(&universe, tol);
    let universe_size = index.universe_len();

    let mut working_radius = delta_prime;
    let mut searches = build_subedge_searches(&s, t, working_radius, tol);
    let mut inflated = false;

    let mut pathlets: Vec<Pathlet> = Vec::new();
    let mut iterations: Vec<IterationStats> = Vec::new();
    while !index.is_fully_covered() {
        let residual_before = index.universe_len() - index.covered_count();
        let mut vertex = best_vertex_pathlet(&s, t, ell, working_radius, tol, &index)?;
        let mut subedge = best_subedge_pathlet(&searches, &index)?;
        if inflated {
            certify_intervals(&mut vertex, t, delta_prime, &index, tol)?;
            if let Some(p) = subedge.as_mut() {
                certify_intervals(p, t, delta_prime, &index, tol)?;
            }
        }
        let pick = match subedge {
            Some(p) if p.score > vertex.score => p,
            _ => vertex,
        };
        if pick.score == 0 {
            if !inflated {
                inflated = true;
                working_radius = delta_prime + 10.0 * tol.eps_geom;
                searches = build_subedge_searches(&s, t, working_radius, tol);
                continue;
            }
            return Err(PathletError::Stalled {
                uncovered: index.uncovered_runs(),
            });
        }
        index.commit(&pick.intervals);
        iterations.push(IterationStats {
            residual_before,
            score: pick.score,
            covered_after: index.covered_count(),
        });
        pathlets.push(pick);
    }

    Ok(Clustering {
        pathlets,
        n,
        ell,
        delta,
        delta_prime,
        simplification,
        universe_size,
        iterations,
    })
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    /// Pathlet index and interval for each failed matching check.
    pub frechet_failures: Vec<(usize, ParamInterval)>,
    /// Pathlet indices whose reference has more vertices than allowed.
    pub complexity_failures: Vec<usize>,
    /// Portions of the trajectory's parameter range left uncovered.
    pub coverage_gaps: Vec<ParamInterval>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.frechet_failures.is_empty()
            && self.complexity_failures.is_empty()
            && self.coverage_gaps.is_empty()
    }
}

/// Checks a clustering against its definition: every interval matches its
/// reference within `delta_prime` (plus geometric slack), every reference
/// has at most `ell` vertices, and the intervals jointly cover the whole
/// parameter range of `t`.
pub fn validate_clustering(
    t: &PolyCurve,
    clustering: &Clustering,
    ell: usize,
    delta_prime: f64,
    tol: &Tolerance,
) -> ValidationReport {
    let mut report = ValidationReport::default();
    let mut all_intervals: Vec<ParamInterval> = Vec::new();
    for (idx, pathlet) in clustering.pathlets.iter().enumerate() {
        if pathlet.reference.n() > ell {
            report.complexity_failures.push(idx);
        }
        for iv in &pathlet.intervals {
            let ok = match t.subcurve(iv.lo, iv.hi) {
                Ok(sub) => {
                    frechet_decide(&pathlet.reference, &sub, delta_prime + tol.eps_geom, tol)
                }
                Err(_) => false,
            };
            if !ok {
                report.frechet_failures.push((idx, *iv));
            }
            all_intervals.push(*iv);
        }
    }

    let n = t.n() as f64;
    if all_intervals.is_empty() {
        report.coverage_gaps.push(ParamInterval::new(1.0, n));
        return report;
    }
    let merged = merge_touching(&all_intervals, tol.eps_param);
    let mut cursor = 1.0;
    for iv in &merged {
        if iv.lo > cursor + tol.eps_param {
            report.coverage_gaps.push(ParamInterval::new(cursor, iv.lo));
        }
        cursor = cursor.max(iv.hi);
    }
    if cursor < n - tol.eps_param {
        report.coverage_gaps.push(ParamInterval::new(cursor, n));
    }
    report
}
