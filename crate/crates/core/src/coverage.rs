//! Residual-coverage queries for the greedy covering loop.
//!
//! The universe intervals are ordered and interior-disjoint, so their
//! flattened endpoint list alternates lo/hi. A rank difference over that
//! list counts endpoints inside a query; after subtracting the at most two
//! intervals straddling the query ends, half the remainder is the number of
//! fully contained intervals. Covered counts over the same index range come
//! from a Fenwick tree, so a query costs O(log |universe|) per interval.

use crate::geom::{ParamInterval, Tolerance};
use crate::universe::Universe;

/// Union of overlapping or touching intervals, sorted by lower end.
/// Endpoints within `eps` of each other count as touching.
pub fn merge_touching(intervals: &[ParamInterval], eps: f64) -> Vec<ParamInterval> {
    let mut sorted: Vec<ParamInterval> = intervals.to_vec();
    sorted.sort_by(|a, b| a.lo.total_cmp(&b.lo).then(a.hi.total_cmp(&b.hi)));
    let mut merged: Vec<ParamInterval> = Vec::new();
    for iv in sorted {
        match merged.last_mut() {
            Some(last) if iv.lo <= last.hi + eps => {
                last.hi = last.hi.max(iv.hi);
            }
            _ => merged.push(iv),
        }
    }
    merged
}

/// Number of intervals from an ordered disjoint family fully inside
/// `query`, given the family's flattened endpoint list `[lo1, hi1, lo2,
/// hi2, ...]`. Containment allows `eps` slack on both ends.
pub fn count_contained(endpoints: &[f64], query: ParamInterval, eps: f64) -> usize {
    let lo_rank = endpoints.partition_point(|&x| x < query.lo - eps);
    let hi_rank = endpoints.partition_point(|&x| x <= query.hi + eps);
    let inside = hi_rank.saturating_sub(lo_rank);
    if inside == 0 {
        return 0;
    }
    let straddle = lo_rank % 2 + hi_rank % 2;
    debug_assert!(straddle <= 2);
    debug_assert_eq!((inside - straddle) % 2, 0);
    (inside - straddle) / 2
}

struct Fenwick {
    tree: Vec<usize>,
}

impl Fenwick {
    fn new(len: usize) -> Self {
        Fenwick {
            tree: vec![0; len + 1],
        }
    }

    fn add(&mut self, mut idx: usize) {
        idx += 1;
        while idx < self.tree.len() {
            self.tree[idx] += 1;
            idx += idx & idx.wrapping_neg();
        }
    }

    /// Sum over indices `< idx`.
    fn prefix(&self, mut idx: usize) -> usize {
        let mut sum = 0;
        while idx > 0 {
            sum += self.tree[idx];
            idx -= idx & idx.wrapping_neg();
        }
        sum
    }

    fn range(&self, lo: usize, hi_inclusive: usize) -> usize {
        self.prefix(hi_inclusive + 1) - self.prefix(lo)
    }
}

/// Queryable coverage state over a fixed universe.
pub struct CoverageIndex {
    boundaries: Vec<f64>,
    endpoints: Vec<f64>,
    covered: Vec<bool>,
    covered_tree: Fenwick,
    covered_count: usize,
    eps: f64,
}

impl CoverageIndex {
    pub fn new(universe: &Universe, tol: &Tolerance) -> Self {
        let boundaries = universe.boundaries().to_vec();
        let count = universe.interval_count();
        let mut endpoints = Vec::with_capacity(2 * count);
        for t in 0..count {
            endpoints.push(boundaries[t]);
            endpoints.push(boundaries[t + 1]);
        }
        CoverageIndex {
            boundaries,
            endpoints,
            covered: vec![false; count],
            covered_tree: Fenwick::new(count),
            covered_count: 0,
            eps: tol.eps_param,
        }
    }

    pub fn universe_len(&self) -> usize {
        self.covered.len()
    }

    pub fn covered_count(&self) -> usize {
        self.covered_count
    }

    pub fn is_fully_covered(&self) -> bool {
        self.covered_count == self.covered.len()
    }

    pub fn covered_flags(&self) -> &[bool] {
        &self.covered
    }

    pub fn boundaries(&self) -> &[f64] {
        &self.boundaries
    }

    /// Indices of universe intervals fully inside `query`, or None.
    fn contained_range(&self, query: ParamInterval) -> Option<(usize, usize)> {
        let lo_rank = self.endpoints.partition_point(|&x| x < query.lo - self.eps);
        let hi_rank = self.endpoints.partition_point(|&x| x <= query.hi + self.eps);
        let first = lo_rank.div_ceil(2);
        if hi_rank < 2 {
            return None;
        }
        let last = (hi_rank - 2) / 2;
        if first > last {
            return None;
        }
        debug_assert_eq!(
            last - first + 1,
            count_contained(&self.endpoints, query, self.eps)
        );
        Some((first, last))
    }

    /// Number of not-yet-covered universe intervals inside the union of the
    /// given intervals.
    pub fn residual_coverage(&self, intervals: &[ParamInterval]) -> usize {
        let mut residual = 0;
        for query in merge_touching(intervals, self.eps) {
            if let Some((first, last)) = self.contained_range(query) {
                let total = last - first + 1;
                let already = self.covered_tree.range(first, last);
                residual += total - already;
            }
        }
        residual
    }

    /// Mark every universe interval inside the union as covered.
    /// Re-committing covered intervals is a no-op.
    pub fn commit(&mut self, intervals: &[ParamInterval]) {
        for query in merge_touching(intervals, self.eps) {
            let Some((first, last)) = self.contained_range(query) else {
                continue;
            };
            for t in first..=last {
                if !self.covered[t] {
                    self.covered[t] = true;
                    self.covered_tree.add(t);
                    self.covered_count += 1;
                }
            }
        }
    }

    /// Maximal runs of uncovered universe intervals, for diagnostics.
    pub fn uncovered_runs(&self) -> Vec<ParamInterval> {
        let mut runs = Vec::new();
        let mut open: Option<(f64, f64)> = None;
        for (t, &flag) in self.covered.iter().enumerate() {
            if flag {
                if let Some((lo, hi)) = open.take() {
                    runs.push(ParamInterval::new(lo, hi));
                }
            } else {
                let lo = self.boundaries[t];
                let hi = self.boundaries[t + 1];
                open = match open {
                    Some((run_lo, _)) => Some((run_lo, hi)),
                    None => Some((lo, hi)),
                };
            }
        }
        if let Some((lo, hi)) = open {
            runs.push(ParamInterval::new(lo, hi));
        }
        runs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn iv(lo: f64, hi: f64) -> ParamInterval {
        ParamInterval::new(lo, hi)
    }

    /// A universe with boundaries 1..=n as integers.
    fn unit_universe(n: usize) -> Universe {
        Universe::from_boundaries((1..=n).map(|k| k as f64).collect())
    }

    #[test]
    fn count_contained_matches_hand_counts() {
        let endpoints = [1.0, 2.0, 2.0, 3.0, 3.0, 4.0];
        let eps = 1e-7;
        assert_eq!(count_contained(&endpoints, iv(1.5, 3.5), eps), 1);
        assert_eq!(count_contained(&endpoints, iv(1.0, 4.0), eps), 3);
        assert_eq!(count_contained(&endpoints, iv(2.0, 2.0), eps), 0);
        assert_eq!(count_contained(&endpoints, iv(2.2, 2.8), eps), 0);
    }

    #[test]
    fn residual_subtracts_committed() {
        let u = unit_universe(4);
        assert_eq!(u.interval_count(), 3);
        let mut idx = CoverageIndex::new(&u, &Tolerance::default());
        assert_eq!(idx.residual_coverage(&[iv(1.5, 4.0)]), 2);
        idx.commit(&[iv(1.0, 2.0)]);
        assert_eq!(idx.residual_coverage(&[iv(1.5, 4.0)]), 2);
        assert_eq!(idx.residual_coverage(&[iv(1.0, 4.0)]), 2);
        assert_eq!(idx.residual_coverage(&[]), 0);
    }

    #[test]
    fn touching_intervals_merge_before_counting() {
        let u = unit_universe(4);
        let mut idx = CoverageIndex::new(&u, &Tolerance::default());
        let split = [iv(1.0, 2.5), iv(2.5, 4.0)];
        assert_eq!(idx.residual_coverage(&split), 3);
        idx.commit(&[iv(1.0, 2.0)]);
        assert_eq!(idx.residual_coverage(&split), 2);
    }

    #[test]
    fn commit_is_idempotent() {
        let u = unit_universe(5);
        let mut idx = CoverageIndex::new(&u, &Tolerance::default());
        idx.commit(&[iv(1.0, 3.0)]);
        let after_first = idx.covered_count();
        assert_eq!(idx.residual_coverage(&[iv(1.0, 3.0)]), 0);
        idx.commit(&[iv(1.0, 3.0)]);
        assert_eq!(idx.covered_count(), after_first);
        idx.commit(&[]);
        assert_eq!(idx.covered_count(), after_first);
    }

    #[test]
    fn uncovered_runs_merge_adjacent_gaps() {
        let u = unit_universe(6);
        let mut idx = CoverageIndex::new(&u, &Tolerance::default());
        idx.commit(&[iv(2.0, 3.0)]);
        let runs = idx.uncovered_runs();
        assert_eq!(runs.len(), 2);
        assert_eq!((runs[0].lo, runs[0].hi), (1.0, 2.0));
        assert_eq!((runs[1].lo, runs[1].hi), (3.0, 6.0));
    }

    #[test]
    fn random_queries_match_linear_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(04_2217);
        for _ in 0..50 {
            let m = rng.gen_range(1..40);
            let u = unit_universe(m + 1);
            let mut idx = CoverageIndex::new(&u, &Tolerance::default());
            let hi = (m + 1) as f64;
            let random_set = |rng: &mut ChaCha8Rng| {
                let count = rng.gen_range(0..4);
                (0..count)
                    .map(|_| {
                        let a = rng.gen_range(1.0..hi);
                        let b = rng.gen_range(a..=hi);
                        iv(a, b)
                    })
                    .collect::<Vec<_>>()
            };
            for _ in 0..20 {
                let commit_set = random_set(&mut rng);
                idx.commit(&commit_set);
                let query = random_set(&mut rng);
                let got = idx.residual_coverage(&query);
                let want = crate::oracles::oracle_residual_coverage(
                    u.boundaries(),
                    idx.covered_flags(),
                    &query,
                    Tolerance::default().eps_param,
                );
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn residual_is_monotone_under_commits() {
        let u = unit_universe(12);
        let mut idx = CoverageIndex::new(&u, &Tolerance::default());
        let query = [iv(2.0, 9.0)];
        let mut prev = idx.residual_coverage(&query);
        for k in 0..10 {
            idx.commit(&[iv(1.0 + k as f64, 2.0 + k as f64)]);
            let cur = idx.residual_coverage(&query);
            assert!(cur <= prev);
            prev = cur;
        }
    }
}
