//! Subedge candidate pathlets.
//!
//! References here are subsegments `e[x, x']` of one edge of the
//! simplification S, taken in either direction. Candidate endpoints are
//! restricted to the critical x-coordinates of the free-space diagram of
//! the oriented edge against T (the per-cell extreme points), and end
//! coordinates to power-of-two strides through that sorted sequence. The
//! restriction keeps the search near-linear per edge while every subedge
//! pathlet retains a candidate with at least one-eighth of its residual
//! coverage: one-fourth from snapping endpoints to critical points across
//! the four orientation/endpoint cases, one-half from the stride split.

use crate::coverage::CoverageIndex;
use crate::error::PathletError;
use crate::freespace::curve_free_intervals;
use crate::geom::{ParamInterval, PolyCurve, Tolerance};
use crate::pathlet::{Pathlet, RefSource};
use crate::reach::{build_rect_domain, RectDomain};
use crate::universe::critical_xs_for_column;
use rayon::prelude::*;

/// Critical x-coordinates on one oriented edge's `[1, 2]` parameter range,
/// with the free components of T on each vertical line.
#[derive(Debug, Clone)]
pub struct SubedgeCriticalSet {
    pub xs: Vec<f64>,
    pub components: Vec<Vec<(f64, f64)>>,
    pub reversed: bool,
}

pub fn subedge_critical_set(
    edge_curve: &PolyCurve,
    t: &PolyCurve,
    reversed: bool,
    delta_prime: f64,
    tol: &Tolerance,
) -> SubedgeCriticalSet {
    debug_assert_eq!(edge_curve.n(), 2);
    let radius = delta_prime + tol.eps_geom;
    let xs = critical_xs_for_column(edge_curve, t, 1, delta_prime, tol);
    let components = xs
        .iter()
        .map(|&x| curve_free_intervals(t, &edge_curve.eval_clamped(x), radius))
        .collect();
    SubedgeCriticalSet {
        xs,
        components,
        reversed,
    }
}

/// Search state for one oriented edge. Everything here depends only on S,
/// T, and the matching radius, so the driver builds it once and reuses it
/// across greedy iterations.
#[derive(Debug, Clone)]
pub struct SubedgeSearch {
    pub edge: usize,
    pub curve: PolyCurve,
    pub crit: SubedgeCriticalSet,
    pub dom: RectDomain,
}

/// Search states for every edge of `s` in both directions, ordered by edge
/// index with the forward direction first. This order is the tie-break
/// order of [`best_subedge_pathlet`].
pub fn build_subedge_searches(
    s: &PolyCurve,
    t: &PolyCurve,
    delta_prime: f64,
    tol: &Tolerance,
) -> Vec<SubedgeSearch> {
    let tasks: Vec<(usize, bool)> = (1..s.n())
        .flat_map(|edge| [(edge, false), (edge, true)])
        .collect();
    tasks
        .into_par_iter()
        .map(|(edge, reversed)| {
            let (a, b) = s.edge(edge);
            let (from, to) = if reversed { (b, a) } else { (a, b) };
            let curve = PolyCurve::segment(from.clone(), to.clone()).expect("edge endpoints");
            let crit = subedge_critical_set(&curve, t, reversed, delta_prime, tol);
            let dom = build_rect_domain(&curve, t, delta_prime, tol);
            SubedgeSearch {
                edge,
                curve,
                crit,
                dom,
            }
        })
        .collect()
}

/// Best candidate anchored at critical coordinate index `i` (0-based) of
/// one oriented edge: ends run through indices i + 2^k, the matchable
/// ranges per end come from one reachability graph over all of them.
/// Equal scores resolve to the shorter stride. None when no end index is
/// in range or nothing starts at x_i.
pub fn best_subedge_pathlet_at(
    search: &SubedgeSearch,
    i: usize,
    index: &CoverageIndex,
) -> Result<Option<Pathlet>, PathletError> {
    let crit = &search.crit;
    let m = crit.xs.len();
    if i + 1 >= m {
        return Ok(None);
    }
    let mut markers: Vec<(f64, f64)> = Vec::new();
    let mut starts: Vec<usize> = Vec::new();
    for &(lo, _hi) in &crit.components[i] {
        starts.push(markers.len());
        markers.push((crit.xs[i], lo));
    }
    if starts.is_empty() {
        return Ok(None);
    }
    let mut slots: Vec<(usize, Vec<(usize, f64)>)> = Vec::new();
    let mut stride = 1;
    while i + stride < m {
        let end = i + stride;
        let mut ends = Vec::new();
        for &(_lo, hi) in &crit.components[end] {
            ends.push((markers.len(), hi));
            markers.push((crit.xs[end], hi));
        }
        slots.push((end, ends));
        stride *= 2;
    }

    let graph = crate::reach::build_reach_graph(&search.dom, &markers)?;
    let annotations = graph.annotate_min_start(&starts);

    let mut best: Option<(usize, usize, Vec<ParamInterval>)> = None;
    for (end, ends) in &slots {
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
            best = Some((score, *end, intervals));
        }
    }
    let (score, end, intervals) = best.expect("i + 1 < m yields at least one slot");

    let x_from = crit.xs[i];
    let x_to = crit.xs[end];
    let reference = PolyCurve::segment(
        search.curve.eval_clamped(x_from),
        search.curve.eval_clamped(x_to),
    )?;
    Ok(Some(Pathlet {
        reference,
        source: RefSource::Subedge {
            edge: search.edge,
            reversed: crit.reversed,
            x_from,
            x_to,
        },
        intervals,
        score,
    }))
}

/// Best subedge candidate over the prepared searches. Equal scores resolve
/// to the earlier search (smaller edge, forward before reversed), then the
/// smaller anchor index, then the shorter stride. None when no oriented
/// edge has two critical coordinates.
pub fn best_subedge_pathlet(
    searches: &[SubedgeSearch],
    index: &CoverageIndex,
) -> Result<Option<Pathlet>, PathletError> {
    let tasks: Vec<(usize, usize)> = searches
        .iter()
        .enumerate()
        .flat_map(|(si, search)| (0..search.crit.xs.len()).map(move |i| (si, i)))
        .collect();
    let candidates: Vec<Option<Pathlet>> = tasks
        .into_par_iter()
        .map(|(si, i)| best_subedge_pathlet_at(&searches[si], i, index))
        .collect::<Result<_, _>>()?;
    let mut best: Option<Pathlet> = None;
    for cand in candidates.into_iter().flatten() {
        if best.as_ref().is_none_or(|b| cand.score > b.score) {
            best = Some(cand);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frechet::frechet_decide;
    use crate::universe::build_universe;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn curve(rows: &[&[f64]]) -> PolyCurve {
        PolyCurve::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn fresh_index(s: &PolyCurve, t: &PolyCurve, delta_prime: f64) -> CoverageIndex {
        CoverageIndex::new(&build_universe(s, t, delta_prime, &tol()), &tol())
    }

    #[test]
    fn single_traversal_covers_everything() {
        let s = curve(&[&[0.0, 0.0], &[4.0, 0.0]]);
        let t = s.clone();
        let delta_prime = 0.5;
        let index = fresh_index(&s, &t, delta_prime);
        let searches = build_subedge_searches(&s, &t, delta_prime, &tol());
        assert_eq!(searches.len(), 2);
        // The free band touches both vertical boundary lines, so both ends
        // of the parameter range are critical coordinates.
        assert!(searches[0].crit.xs.first().unwrap() - 1.0 < 1e-9);
        assert!(2.0 - searches[0].crit.xs.last().unwrap() < 1e-9);
        let p = best_subedge_pathlet(&searches, &index).unwrap().unwrap();
        assert_eq!(p.score, index.universe_len());
        let span = p.intervals.iter().fold((f64::MAX, f64::MIN), |acc, iv| {
            (acc.0.min(iv.lo), acc.1.max(iv.hi))
        });
        assert!(span.0 <= 1.0 + 1e-6 && span.1 >= 2.0 - 1e-6);
    }

    #[test]
    fn empty_free_space_has_no_candidates() {
        let s = curve(&[&[100.0, 0.0], &[104.0, 0.0]]);
        let t = curve(&[&[0.0, 0.0], &[1.0, 0.0], &[2.0, 0.0]]);
        let index = fresh_index(&s, &t, 0.5);
        let searches = build_subedge_searches(&s, &t, 0.5, &tol());
        assert!(searches.iter().all(|s| s.crit.xs.is_empty()));
        assert!(best_subedge_pathlet(&searches, &index).unwrap().is_none());
    }

    #[test]
    fn oscillation_is_covered_per_direction() {
        // T sweeps the same segment four times, alternating direction. A
        // single oriented subedge can match the two same-direction sweeps
        // but not the opposing ones.
        let s = curve(&[&[0.0, 0.0], &[4.0, 0.0]]);
        let t = curve(&[
            &[0.0, 0.0],
            &[4.0, 0.0],
            &[0.0, 0.0],
            &[4.0, 0.0],
            &[0.0, 0.0],
        ]);
        let delta_prime = 0.5;
        let index = fresh_index(&s, &t, delta_prime);
        let searches = build_subedge_searches(&s, &t, delta_prime, &tol());
        let p = best_subedge_pathlet(&searches, &index).unwrap().unwrap();
        assert!(p.score > 0);
        // Two of the four traversals run with the reference's direction.
        assert!(2 * p.score >= index.universe_len() - 2);
        for iv in &p.intervals {
            let sub = t.subcurve(iv.lo, iv.hi).unwrap();
            assert!(frechet_decide(&p.reference, &sub, delta_prime + tol().eps_geom, &tol()));
        }
    }

    #[test]
    fn emitted_intervals_stay_within_frechet_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(905);
        for _ in 0..15 {
            let tn = rng.gen_range(3..=6);
            let rows = (0..tn)
                .map(|_| vec![rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)])
                .collect();
            let t = PolyCurve::from_rows(rows).unwrap();
            let sn = rng.gen_range(2..=3);
            let rows = (0..sn)
                .map(|_| vec![rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)])
                .collect();
            let s = PolyCurve::from_rows(rows).unwrap();
            let delta_prime = rng.gen_range(0.4..1.2);
            let index = fresh_index(&s, &t, delta_prime);
            let searches = build_subedge_searches(&s, &t, delta_prime, &tol());
            let Some(p) = best_subedge_pathlet(&searches, &index).unwrap() else {
                continue;
            };
            for iv in &p.intervals {
                let sub = t.subcurve(iv.lo, iv.hi).unwrap();
                assert!(
                    frechet_decide(&p.reference, &sub, delta_prime + tol().eps_geom, &tol()),
                    "interval {iv:?} exceeds the bound for {:?}",
                    p.source
                );
            }
        }
    }

    #[test]
    fn critical_point_budget_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(1333);
        for _ in 0..10 {
            let tn = rng.gen_range(2..=7);
            let rows = (0..tn)
                .map(|_| vec![rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)])
                .collect();
            let t = PolyCurve::from_rows(rows).unwrap();
            let s = curve(&[&[-0.5, 0.0], &[0.5, 0.0]]);
            let delta_prime = rng.gen_range(0.3..1.0);
            let searches = build_subedge_searches(&s, &t, delta_prime, &tol());
            for search in &searches {
                let n = t.n();
                let points: usize = search
                    .crit
                    .components
                    .iter()
                    .map(|comps| 2 * comps.len())
                    .sum();
                assert!(points <= 4 * n * n, "{points} points for n = {n}");
            }
        }
    }
}
