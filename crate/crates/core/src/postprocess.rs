//! Conversion of pathlets to interior-disjoint form.
//!
//! A pathlet's matched intervals may overlap. Some consumers require the
//! intervals of each pathlet to be pairwise interior-disjoint, so this
//! module thins an interval set to ply at most two without changing its
//! union and then splits it into two interior-disjoint groups. Touching
//! intervals such as `[a, b]` and `[b, c]` count as interior-disjoint.

use crate::cluster::Clustering;
use crate::geom::ParamInterval;
use crate::pathlet::Pathlet;

/// Largest number of intervals sharing a common point. Touching closed
/// intervals share their boundary point and therefore count as overlapping
/// here, so a chain of pairwise-touching intervals has ply two.
pub fn ply(intervals: &[ParamInterval]) -> usize {
    // Sweep over endpoint events; at equal coordinates starts are applied
    // before ends so that a shared boundary point is counted once for each
    // interval containing it.
    let mut events: Vec<(f64, i32)> = Vec::with_capacity(intervals.len() * 2);
    for iv in intervals {
        events.push((iv.lo, 1));
        events.push((iv.hi, -1));
    }
    events.sort_by(|a, b| a.0.total_cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut depth = 0i32;
    let mut max_depth = 0i32;
    for (_, delta) in events {
        depth += delta;
        max_depth = max_depth.max(depth);
    }
    max_depth.max(0) as usize
}

/// Thin `intervals` to a subset with ply at most two and the same union.
///
/// Endpoint comparisons are exact: the procedure only discards intervals
/// whose every point is covered by the retained ones, so the union is
/// preserved without slack.
pub fn reduce_ply(intervals: &[ParamInterval]) -> Vec<ParamInterval> {
    let mut sorted: Vec<ParamInterval> = intervals.to_vec();
    sorted.sort_by(|a, b| a.lo.total_cmp(&b.lo).then(b.hi.total_cmp(&a.hi)));

    // With ties broken by larger upper bound first, an interval is contained
    // in an earlier one exactly when it does not extend the largest upper
    // bound seen so far.
    let mut survivors: Vec<ParamInterval> = Vec::with_capacity(sorted.len());
    let mut max_hi = f64::NEG_INFINITY;
    for iv in sorted {
        if iv.hi > max_hi {
            max_hi = iv.hi;
            survivors.push(iv);
        }
    }

    // Both bounds now increase strictly. When a new interval still reaches
    // back to the second-to-last retained one, the last retained interval
    // lies inside the union of its two neighbours and can be dropped.
    let mut reduced: Vec<ParamInterval> = Vec::with_capacity(survivors.len());
    for iv in survivors {
        while reduced.len() >= 2 && iv.lo <= reduced[reduced.len() - 2].hi {
            reduced.pop();
        }
        reduced.push(iv);
    }
    reduced
}

/// Split a pathlet into two pathlets whose interval sets are each pairwise
/// interior-disjoint and together cover the same part of the trajectory.
///
/// The interval set is first thinned with [`reduce_ply`]; the first output
/// greedily takes every interval that does not properly overlap the ones
/// already taken, and the second output receives the rest. Both outputs
/// keep the parent's reference curve and selection score.
pub fn split_interior_disjoint(pathlet: &Pathlet) -> (Pathlet, Pathlet) {
    let reduced = reduce_ply(&pathlet.intervals);
    let mut first: Vec<ParamInterval> = Vec::with_capacity(reduced.len());
    let mut second: Vec<ParamInterval> = Vec::new();
    let mut last_hi = f64::NEG_INFINITY;
    for iv in reduced {
        if iv.lo >= last_hi {
            last_hi = iv.hi;
            first.push(iv);
        } else {
            second.push(iv);
        }
    }
    let make = |intervals: Vec<ParamInterval>| Pathlet {
        reference: pathlet.reference.clone(),
        source: pathlet.source,
        intervals,
        score: pathlet.score,
    };
    (make(first), make(second))
}

/// Replace every pathlet of `clustering` whose intervals overlap by its two
/// interior-disjoint halves. Already-disjoint pathlets pass through with
/// their intervals thinned of redundant overlaps; empty halves are dropped,
/// so the result has at most twice as many pathlets and the same coverage.
pub fn make_interior_disjoint(clustering: Clustering) -> Clustering {
    let mut pathlets: Vec<Pathlet> = Vec::with_capacity(clustering.pathlets.len() * 2);
    for pathlet in &clustering.pathlets {
        let (first, second) = split_interior_disjoint(pathlet);
        if !first.intervals.is_empty() {
            pathlets.push(first);
        }
        if !second.intervals.is_empty() {
            pathlets.push(second);
        }
    }
    Clustering {
        pathlets,
        ..clustering
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coverage::merge_touching;
    use crate::geom::{Point, PolyCurve};
    use crate::pathlet::RefSource;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn iv(lo: f64, hi: f64) -> ParamInterval {
        ParamInterval::new(lo, hi)
    }

    fn pairwise_interior_disjoint(intervals: &[ParamInterval]) -> bool {
        let mut sorted = intervals.to_vec();
        sorted.sort_by(|a, b| a.lo.total_cmp(&b.lo));
        sorted.windows(2).all(|w| w[1].lo >= w[0].hi)
    }

    fn unions_equal(a: &[ParamInterval], b: &[ParamInterval]) -> bool {
        merge_touching(a, 0.0) == merge_touching(b, 0.0)
    }

    #[test]
    fn chain_drops_middle_interval() {
        let input = vec![iv(1.0, 3.0), iv(2.0, 4.0), iv(3.0, 5.0)];
        let reduced = reduce_ply(&input);
        assert_eq!(reduced, vec![iv(1.0, 3.0), iv(3.0, 5.0)]);
        assert!(unions_equal(&input, &reduced));
    }

    #[test]
    fn contained_interval_is_dropped() {
        let input = vec![iv(1.0, 10.0), iv(2.0, 3.0)];
        assert_eq!(reduce_ply(&input), vec![iv(1.0, 10.0)]);
    }

    #[test]
    fn disjoint_input_is_unchanged() {
        let input = vec![iv(0.0, 1.0), iv(2.0, 3.0), iv(4.0, 5.0)];
        assert_eq!(reduce_ply(&input), input);
    }

    #[test]
    fn ply_counts_touching_intervals_as_meeting() {
        assert_eq!(ply(&[iv(1.0, 3.0), iv(3.0, 5.0)]), 2);
        assert_eq!(ply(&[iv(0.0, 1.0), iv(2.0, 3.0)]), 1);
        assert_eq!(ply(&[iv(0.0, 4.0), iv(1.0, 3.0), iv(2.0, 5.0)]), 3);
        assert_eq!(ply(&[]), 0);
    }

    fn dummy_pathlet(intervals: Vec<ParamInterval>) -> Pathlet {
        let reference =
            PolyCurve::new(vec![Point(vec![0.0, 0.0]), Point(vec![1.0, 0.0])]).unwrap();
        Pathlet {
            reference,
            source: RefSource::Vertex { start: 1, end: 2 },
            intervals,
            score: 7,
        }
    }

    #[test]
    fn overlapping_chain_splits_alternately() {
        let input = vec![
            iv(0.0, 10.0),
            iv(8.0, 20.0),
            iv(18.0, 30.0),
            iv(28.0, 40.0),
        ];
        let (first, second) = split_interior_disjoint(&dummy_pathlet(input.clone()));
        assert_eq!(first.intervals, vec![iv(0.0, 10.0), iv(18.0, 30.0)]);
        assert_eq!(second.intervals, vec![iv(8.0, 20.0), iv(28.0, 40.0)]);
        let combined: Vec<ParamInterval> = first
            .intervals
            .iter()
            .chain(&second.intervals)
            .copied()
            .collect();
        assert!(unions_equal(&input, &combined));
        assert_eq!(first.score, 7);
        assert_eq!(second.score, 7);
    }

    #[test]
    fn disjoint_pathlet_splits_into_itself_and_empty() {
        let input = vec![iv(1.0, 2.0), iv(3.0, 4.0)];
        let (first, second) = split_interior_disjoint(&dummy_pathlet(input.clone()));
        assert_eq!(first.intervals, input);
        assert!(second.intervals.is_empty());
    }

    #[test]
    fn empty_pathlet_splits_into_empty_halves() {
        let (first, second) = split_interior_disjoint(&dummy_pathlet(Vec::new()));
        assert!(first.intervals.is_empty());
        assert!(second.intervals.is_empty());
    }

    #[test]
    fn random_sets_keep_union_and_bound_ply() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..200 {
            let count = rng.gen_range(1..=40);
            let input: Vec<ParamInterval> = (0..count)
                .map(|_| {
                    let lo = rng.gen_range(0.0..50.0);
                    let len = rng.gen_range(0.0..10.0);
                    iv(lo, lo + len)
                })
                .collect();
            let reduced = reduce_ply(&input);
            assert!(ply(&reduced) <= 2);
            assert!(unions_equal(&input, &reduced));
            assert!(reduced.iter().all(|r| input.contains(r)));

            let (first, second) = split_interior_disjoint(&dummy_pathlet(input.clone()));
            assert!(pairwise_interior_disjoint(&first.intervals));
            assert!(pairwise_interior_disjoint(&second.intervals));
            let combined: Vec<ParamInterval> = first
                .intervals
                .iter()
                .chain(&second.intervals)
                .copied()
                .collect();
            assert!(unions_equal(&input, &combined));
        }
    }
}
