//! Directed reachability over the free-space diagram of a short reference
//! curve against T, after reducing all obstacles to the parameter-space
//! grid lines. Inside a cell (between grid lines) the free region is
//! obstacle-free, so monotone reachability within a cell is componentwise
//! dominance; only the crossings of grid lines constrain paths.
//!
//! Two constructions share one vertex set (marker points, free-interval
//! endpoints on grid lines, free grid corners, chained axis projections,
//! and bend points): the production graph adds rails along grid lines and
//! per-cell dominance gadgets; the reference graph connects every
//! axis-aligned visible pair. Their reachability must be identical, which
//! is what the differential tests check.

use std::collections::HashMap;

use crate::error::PathletError;
use crate::freespace::curve_free_intervals;
use crate::geom::{PolyCurve, Tolerance};

/// The `[1, width] x [1, height]` parameter rectangle with free intervals
/// recorded on every integer grid line. Everything off the grid lines is
/// free.
#[derive(Debug, Clone)]
pub struct RectDomain {
    width: usize,
    height: usize,
    /// Free intervals (in y) on the vertical line x = i + 1.
    vlines: Vec<Vec<(f64, f64)>>,
    /// Free intervals (in x) on the horizontal line y = j + 1.
    hlines: Vec<Vec<(f64, f64)>>,
    eps: f64,
}

fn merge_gaps(intervals: Vec<(f64, f64)>, eps: f64) -> Vec<(f64, f64)> {
    let mut out: Vec<(f64, f64)> = Vec::with_capacity(intervals.len());
    for (lo, hi) in intervals {
        match out.last_mut() {
            Some(last) if lo <= last.1 + eps => last.1 = last.1.max(hi),
            _ => out.push((lo, hi)),
        }
    }
    out
}

fn in_intervals(intervals: &[(f64, f64)], t: f64, eps: f64) -> bool {
    let idx = intervals.partition_point(|iv| iv.0 <= t + eps);
    idx > 0 && intervals[idx - 1].1 >= t - eps
}

fn span_contained(intervals: &[(f64, f64)], a: f64, b: f64, eps: f64) -> bool {
    let idx = intervals.partition_point(|iv| iv.0 <= a + eps);
    idx > 0 && intervals[idx - 1].1 >= b - eps
}

impl RectDomain {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Grid-line membership is exact: every coordinate meant to lie on a
    /// line is constructed as the integer itself, and free features can be
    /// far smaller than any snapping tolerance, so near-line points must
    /// stay interior.
    fn line_index(&self, coord: f64, max: usize) -> Option<usize> {
        if coord.fract() == 0.0 && coord >= 1.0 && coord <= max as f64 {
            Some(coord as usize)
        } else {
            None
        }
    }

    /// Free test for a single point; grid-line points consult the line's
    /// free intervals, interior points are always free.
    pub fn point_free(&self, x: f64, y: f64) -> bool {
        if x < 1.0 - self.eps
            || x > self.width as f64 + self.eps
            || y < 1.0 - self.eps
            || y > self.height as f64 + self.eps
        {
            return false;
        }
        let on_v = self.line_index(x, self.width);
        let on_h = self.line_index(y, self.height);
        if let Some(i) = on_v {
            if !in_intervals(&self.vlines[i - 1], y, self.eps) {
                return false;
            }
        }
        if let Some(j) = on_h {
            if !in_intervals(&self.hlines[j - 1], x, self.eps) {
                return false;
            }
        }
        true
    }

    /// Free test for the horizontal segment at height `y` from `x0` to `x1`.
    pub fn hseg_free(&self, y: f64, x0: f64, x1: f64) -> bool {
        debug_assert!(x0 <= x1 + self.eps);
        if let Some(j) = self.line_index(y, self.height) {
            return span_contained(&self.hlines[j - 1], x0, x1, self.eps);
        }
        let first = x0.floor() as i64 + 1;
        let last = x1.floor() as i64;
        for i in first..=last {
            if i < 1 || i > self.width as i64 {
                continue;
            }
            if !in_intervals(&self.vlines[i as usize - 1], y, self.eps) {
                return false;
            }
        }
        true
    }

    /// Free test for the vertical segment at `x` from `y0` to `y1`.
    pub fn vseg_free(&self, x: f64, y0: f64, y1: f64) -> bool {
        debug_assert!(y0 <= y1 + self.eps);
        if let Some(i) = self.line_index(x, self.width) {
            return span_contained(&self.vlines[i - 1], y0, y1, self.eps);
        }
        let first = y0.floor() as i64 + 1;
        let last = y1.floor() as i64;
        for j in first..=last {
            if j < 1 || j > self.height as i64 {
                continue;
            }
            if !in_intervals(&self.hlines[j as usize - 1], x, self.eps) {
                return false;
            }
        }
        true
    }

    pub fn vline_intervals(&self, i: usize) -> &[(f64, f64)] {
        &self.vlines[i - 1]
    }

    pub fn hline_intervals(&self, j: usize) -> &[(f64, f64)] {
        &self.hlines[j - 1]
    }

    /// Non-free sub-segments per grid line, as (line index, lo, hi) with
    /// vertical lines first. Complements of the stored free intervals.
    pub fn obstacle_segments(&self) -> (Vec<(usize, f64, f64)>, Vec<(usize, f64, f64)>) {
        let complement = |intervals: &[(f64, f64)], span_hi: f64| {
            let mut out = Vec::new();
            let mut cursor = 1.0;
            for &(lo, hi) in intervals {
                if lo > cursor {
                    out.push((cursor, lo));
                }
                cursor = cursor.max(hi);
            }
            if cursor < span_hi {
                out.push((cursor, span_hi));
            }
            out
        };
        let mut vertical = Vec::new();
        for (idx, ivs) in self.vlines.iter().enumerate() {
            for (lo, hi) in complement(ivs, self.height as f64) {
                vertical.push((idx + 1, lo, hi));
            }
        }
        let mut horizontal = Vec::new();
        for (idx, ivs) in self.hlines.iter().enumerate() {
            for (lo, hi) in complement(ivs, self.width as f64) {
                horizontal.push((idx + 1, lo, hi));
            }
        }
        (vertical, horizontal)
    }
}

/// Record the free intervals of the diagram between `w` and `t` on every
/// grid line of the parameter rectangle.
pub fn build_rect_domain(
    w: &PolyCurve,
    t: &PolyCurve,
    delta_prime: f64,
    tol: &Tolerance,
) -> RectDomain {
    let radius = delta_prime + tol.eps_geom;
    let vlines = (1..=w.n())
        .map(|i| merge_gaps(curve_free_intervals(t, w.vertex(i), radius), tol.eps_param))
        .collect();
    let hlines = (1..=t.n())
        .map(|j| merge_gaps(curve_free_intervals(w, t.vertex(j), radius), tol.eps_param))
        .collect();
    RectDomain {
        width: w.n(),
        height: t.n(),
        vlines,
        hlines,
        eps: tol.eps_param,
    }
}

/// Directed graph whose arcs all point rightward or upward; for marker
/// points p, q a path p -> q exists iff a bimonotone free path exists in
/// the domain.
#[derive(Debug, Clone)]
pub struct ReachGraph {
    verts: Vec<(f64, f64)>,
    adj: Vec<Vec<u32>>,
    z_verts: Vec<u32>,
    /// Vertex indices sorted by (y, x); a topological order.
    order: Vec<u32>,
}

struct Builder<'a> {
    dom: &'a RectDomain,
    verts: Vec<(f64, f64)>,
    index: HashMap<(u64, u64), u32>,
    arcs: Vec<(u32, u32)>,
}

impl<'a> Builder<'a> {
    fn new(dom: &'a RectDomain) -> Self {
        Builder {
            dom,
            verts: Vec::new(),
            index: HashMap::new(),
            arcs: Vec::new(),
        }
    }

    fn add_vertex(&mut self, x: f64, y: f64) -> u32 {
        let key = (x.to_bits(), y.to_bits());
        if let Some(&idx) = self.index.get(&key) {
            return idx;
        }
        let idx = self.verts.len() as u32;
        self.verts.push((x, y));
        self.index.insert(key, idx);
        idx
    }

    fn contains(&self, x: f64, y: f64) -> bool {
        self.index.contains_key(&(x.to_bits(), y.to_bits()))
    }

    fn add_arc(&mut self, from: u32, to: u32) {
        if from != to {
            self.arcs.push((from, to));
        }
    }

    /// Extend axis projections from every vertex, including ones created
    /// by earlier projections: upward across horizontal lines and
    /// rightward across vertical lines, stopping at the first blocked
    /// crossing. Hitting an existing vertex ends the walk; that vertex
    /// carries its own chain.
    fn project_chains(&mut self) {
        let mut cursor = 0;
        while cursor < self.verts.len() {
            let from = cursor as u32;
            let (x, y) = self.verts[cursor];
            cursor += 1;

            let mut prev = from;
            let mut prev_y = y;
            let first_j = y.floor() as i64 + 1;
            for j in first_j..=self.dom.height() as i64 {
                let jy = j as f64;
                if !self.dom.vseg_free(x, prev_y, jy) || !self.dom.point_free(x, jy) {
                    break;
                }
                let existed = self.contains(x, jy);
                let next = self.add_vertex(x, jy);
                self.add_arc(prev, next);
                if existed {
                    break;
                }
                prev = next;
                prev_y = jy;
            }

            let mut prev = from;
            let mut prev_x = x;
            let first_i = x.floor() as i64 + 1;
            for i in first_i..=self.dom.width() as i64 {
                let ix = i as f64;
                if !self.dom.hseg_free(y, prev_x, ix) || !self.dom.point_free(ix, y) {
                    break;
                }
                let existed = self.contains(ix, y);
                let next = self.add_vertex(ix, y);
                self.add_arc(prev, next);
                if existed {
                    break;
                }
                prev = next;
                prev_x = ix;
            }
        }
    }

    /// Connect consecutive vertices along every grid line where the
    /// joining segment is free.
    fn add_rails(&mut self) {
        let mut on_v: Vec<Vec<(f64, u32)>> = vec![Vec::new(); self.dom.width()];
        let mut on_h: Vec<Vec<(f64, u32)>> = vec![Vec::new(); self.dom.height()];
        for (idx, &(x, y)) in self.verts.iter().enumerate() {
            if x.fract() == 0.0 && x >= 1.0 && x <= self.dom.width() as f64 {
                on_v[x as usize - 1].push((y, idx as u32));
            }
            if y.fract() == 0.0 && y >= 1.0 && y <= self.dom.height() as f64 {
                on_h[y as usize - 1].push((x, idx as u32));
            }
        }
        for (line, entries) in on_v.iter_mut().enumerate() {
            entries.sort_by(|a, b| a.0.total_cmp(&b.0));
            let x = (line + 1) as f64;
            for pair in entries.windows(2) {
                if self.dom.vseg_free(x, pair[0].0, pair[1].0) {
                    self.arcs.push((pair[0].1, pair[1].1));
                }
            }
        }
        for (line, entries) in on_h.iter_mut().enumerate() {
            entries.sort_by(|a, b| a.0.total_cmp(&b.0));
            let y = (line + 1) as f64;
            for pair in entries.windows(2) {
                if self.dom.hseg_free(y, pair[0].0, pair[1].0) {
                    self.arcs.push((pair[0].1, pair[1].1));
                }
            }
        }
    }

    /// Connect every dominated vertex pair sharing a closed cell by a
    /// direct arc. The arc stands for the straight chord between the two
    /// points: its interior stays inside the open cell where everything is
    /// free, and both endpoints were verified free when created, so no
    /// further test is needed. Pairs on a common grid line are excluded;
    /// the chord would run along the line's obstacles and rails already
    /// decide those. The chords are what let a path slip diagonally
    /// through a lattice corner whose two lines are blocked on either
    /// side, which no axis-parallel detour can do.
    fn add_cell_gadgets(&mut self) {
        let width = self.dom.width();
        let height = self.dom.height();
        if width < 2 || height < 2 {
            // Degenerate rectangle: grid lines only, rails cover it.
            return;
        }

        let mut members: Vec<Vec<u32>> = vec![Vec::new(); (width - 1) * (height - 1)];
        let cell_id = |cx: usize, cy: usize| (cy - 1) * (width - 1) + (cx - 1);
        let cell_range = |coord: f64, max: usize| {
            // Closed-cell membership: a coordinate exactly on a grid line
            // belongs to the cells on both sides.
            let hi = (coord.floor() as i64).clamp(1, max as i64 - 1) as usize;
            let lo = if coord.fract() == 0.0 {
                ((coord as i64) - 1).clamp(1, max as i64 - 1) as usize
            } else {
                hi
            };
            lo..=hi
        };

        for (idx, &(x, y)) in self.verts.iter().enumerate() {
            for cx in cell_range(x, width) {
                for cy in cell_range(y, height) {
                    members[cell_id(cx, cy)].push(idx as u32);
                }
            }
        }

        for cell in &members {
            for &a in cell {
                let (ax, ay) = self.verts[a as usize];
                for &b in cell {
                    if a == b {
                        continue;
                    }
                    let (bx, by) = self.verts[b as usize];
                    if bx < ax || by < ay {
                        continue;
                    }
                    if ax == bx && ax.fract() == 0.0 {
                        continue;
                    }
                    if ay == by && ay.fract() == 0.0 {
                        continue;
                    }
                    self.add_arc(a, b);
                }
            }
        }
    }

    fn base_vertices(&mut self, z: &[(f64, f64)]) -> Result<Vec<u32>, PathletError> {
        let mut z_verts = Vec::with_capacity(z.len());
        for &(x, y) in z {
            if !self.dom.point_free(x, y) {
                return Err(PathletError::PointInObstacle { x, y });
            }
            z_verts.push(self.add_vertex(x, y));
        }
        for i in 1..=self.dom.width() {
            for &(lo, hi) in self.dom.vline_intervals(i) {
                self.add_vertex(i as f64, lo);
                self.add_vertex(i as f64, hi);
            }
        }
        for j in 1..=self.dom.height() {
            for &(lo, hi) in self.dom.hline_intervals(j) {
                self.add_vertex(lo, j as f64);
                self.add_vertex(hi, j as f64);
            }
        }
        for i in 1..=self.dom.width() {
            for j in 1..=self.dom.height() {
                if self.dom.point_free(i as f64, j as f64) {
                    self.add_vertex(i as f64, j as f64);
                }
            }
        }
        Ok(z_verts)
    }

    fn finish(self, z_verts: Vec<u32>) -> ReachGraph {
        let mut arcs = self.arcs;
        arcs.sort_unstable();
        arcs.dedup();
        let mut adj = vec![Vec::new(); self.verts.len()];
        for (from, to) in arcs {
            adj[from as usize].push(to);
        }
        let mut order: Vec<u32> = (0..self.verts.len() as u32).collect();
        order.sort_by(|&a, &b| {
            let va = self.verts[a as usize];
            let vb = self.verts[b as usize];
            va.1.total_cmp(&vb.1).then(va.0.total_cmp(&vb.0))
        });
        ReachGraph {
            verts: self.verts,
            adj,
            z_verts,
            order,
        }
    }
}

/// The production construction: projections, rails, and cell gadgets.
pub fn build_reach_graph(
    domain: &RectDomain,
    z: &[(f64, f64)],
) -> Result<ReachGraph, PathletError> {
    let mut b = Builder::new(domain);
    let z_verts = b.base_vertices(z)?;
    b.project_chains();
    b.add_rails();
    b.add_cell_gadgets();
    Ok(b.finish(z_verts))
}

/// Reference construction over the identical vertex set: every
/// axis-aligned visible pair is connected (via consecutive steps, which
/// preserves reachability), plus the same in-cell chords the production
/// construction uses. Serves as the differential check for
/// [`build_reach_graph`].
pub fn reach_graph_naive(
    domain: &RectDomain,
    z: &[(f64, f64)],
) -> Result<ReachGraph, PathletError> {
    let mut b = Builder::new(domain);
    let z_verts = b.base_vertices(z)?;
    b.project_chains();
    b.add_rails();
    b.arcs.clear();

    let mut by_x: HashMap<u64, Vec<(f64, u32)>> = HashMap::new();
    let mut by_y: HashMap<u64, Vec<(f64, u32)>> = HashMap::new();
    for (idx, &(x, y)) in b.verts.iter().enumerate() {
        by_x.entry(x.to_bits()).or_default().push((y, idx as u32));
        by_y.entry(y.to_bits()).or_default().push((x, idx as u32));
    }
    let mut arcs = Vec::new();
    for (xbits, mut entries) in by_x {
        let x = f64::from_bits(xbits);
        entries.sort_by(|a, b| a.0.total_cmp(&b.0));
        for pair in entries.windows(2) {
            if domain.vseg_free(x, pair[0].0, pair[1].0) {
                arcs.push((pair[0].1, pair[1].1));
            }
        }
    }
    for (ybits, mut entries) in by_y {
        let y = f64::from_bits(ybits);
        entries.sort_by(|a, b| a.0.total_cmp(&b.0));
        for pair in entries.windows(2) {
            if domain.hseg_free(y, pair[0].0, pair[1].0) {
                arcs.push((pair[0].1, pair[1].1));
            }
        }
    }
    b.arcs = arcs;
    b.add_cell_gadgets();
    Ok(b.finish(z_verts))
}

impl ReachGraph {
    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn arc_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn vertices(&self) -> &[(f64, f64)] {
        &self.verts
    }

    pub fn arcs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(from, tos)| tos.iter().map(move |&to| (from as u32, to)))
    }

    pub fn z_vertex(&self, z_idx: usize) -> u32 {
        self.z_verts[z_idx]
    }

    /// Flags over all vertices reachable from the marker point `z_idx`.
    pub fn reach_from_z(&self, z_idx: usize) -> Vec<bool> {
        let mut seen = vec![false; self.verts.len()];
        let mut stack = vec![self.z_verts[z_idx]];
        seen[self.z_verts[z_idx] as usize] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Vertex coordinates along some path between two marker points, or
    /// None when the target is unreachable. Consecutive points differ in
    /// exactly one coordinate.
    pub fn path_between_z(&self, from_z: usize, to_z: usize) -> Option<Vec<(f64, f64)>> {
        let start = self.z_verts[from_z];
        let goal = self.z_verts[to_z];
        let mut parent: Vec<u32> = vec![u32::MAX; self.verts.len()];
        let mut stack = vec![start];
        parent[start as usize] = start;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v as usize] {
                if parent[w as usize] == u32::MAX {
                    parent[w as usize] = v;
                    stack.push(w);
                }
            }
        }
        if parent[goal as usize] == u32::MAX {
            return None;
        }
        let mut path = vec![self.verts[goal as usize]];
        let mut v = goal;
        while v != start {
            v = parent[v as usize];
            path.push(self.verts[v as usize]);
        }
        path.reverse();
        Some(path)
    }

    /// Pairwise reachability over the marker points, in input order.
    /// Entry [a][b] answers "does a bimonotone free path a -> b exist".
    pub fn z_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.z_verts.len())
            .map(|a| {
                let seen = self.reach_from_z(a);
                self.z_verts
                    .iter()
                    .map(|&v| seen[v as usize])
                    .collect()
            })
            .collect()
    }

    /// Per-vertex minimum over the start markers that reach it of the
    /// start's y-coordinate; +inf when unreachable. Vertices are processed
    /// in (y, x) order, a topological order since arcs never decrease
    /// either coordinate.
    pub fn annotate_min_start(&self, start_zs: &[usize]) -> Vec<f64> {
        let mut ann = vec![f64::INFINITY; self.verts.len()];
        for &z in start_zs {
            let v = self.z_verts[z] as usize;
            ann[v] = ann[v].min(self.verts[v].1);
        }
        for &v in &self.order {
            let av = ann[v as usize];
            if av.is_finite() {
                for &w in &self.adj[v as usize] {
                    if av < ann[w as usize] {
                        ann[w as usize] = av;
                    }
                }
            }
        }
        ann
    }

    pub fn z_annotation(&self, annotations: &[f64], z_idx: usize) -> f64 {
        annotations[self.z_verts[z_idx] as usize]
    }
}
