//! Shared data model for candidate reference curves and their matched
//! trajectory intervals.

use crate::geom::{ParamInterval, PolyCurve};

/// Where a reference curve sits inside the simplification S.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RefSource {
    /// The vertex-to-vertex subcurve `S[start, end]`, vertices inclusive.
    Vertex { start: usize, end: usize },
    /// A subsegment of edge `edge` of S (the segment from vertex `edge` to
    /// vertex `edge + 1`). `x_from < x_to` live on the edge's own `[1, 2]`
    /// parameter domain; `reversed` means the edge was flipped end-to-end
    /// before the range was taken.
    Subedge {
        edge: usize,
        reversed: bool,
        x_from: f64,
        x_to: f64,
    },
}

impl RefSource {
    /// Parameter range of the reference on S's domain, with the larger
    /// value first when the reference runs against S's direction.
    pub fn span_on_s(&self) -> (f64, f64) {
        match *self {
            RefSource::Vertex { start, end } => (start as f64, end as f64),
            RefSource::Subedge {
                edge,
                reversed: false,
                x_from,
                x_to,
            } => (edge as f64 + x_from - 1.0, edge as f64 + x_to - 1.0),
            RefSource::Subedge {
                edge,
                reversed: true,
                x_from,
                x_to,
            } => (edge as f64 + 2.0 - x_from, edge as f64 + 2.0 - x_to),
        }
    }
}

/// A reference curve with the trajectory intervals it represents. `score`
/// is the number of residual universe intervals the pathlet covered at the
/// moment it was chosen; it is not updated by later commits.
#[derive(Debug, Clone)]
pub struct Pathlet {
    pub reference: PolyCurve,
    pub source: RefSource,
    pub intervals: Vec<ParamInterval>,
    pub score: usize,
}

impl Pathlet {
    pub fn empty(reference: PolyCurve, source: RefSource) -> Self {
        Pathlet {
            reference,
            source,
            intervals: Vec::new(),
            score: 0,
        }
    }
}
