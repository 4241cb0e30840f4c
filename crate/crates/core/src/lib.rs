//! Subtrajectory clustering of polygonal curves under the continuous
//! Frechet distance.
//!
//! The central entry point is [`cluster::cluster`], which covers an input
//! curve with a small set of pathlets: short reference curves, each matched
//! to a collection of subcurves of the input that stay within Frechet
//! distance `4 * delta` of the reference. References have at most `ell`
//! vertices.
//!
//! Supporting machinery is exposed because it is useful on its own:
//!
//! * [`frechet::frechet_decide`] answers continuous Frechet distance
//!   decision queries between two polygonal curves.
//! * [`simplify::build_simplification`] computes a curve simplification
//!   whose breakpoints align with pathlet boundaries.
//! * [`reach::build_reach_graph`] builds a directed graph that encodes
//!   bimonotone reachability inside a free-space diagram.

pub mod cluster;
pub mod coverage;
pub mod error;
pub mod frechet;
pub mod freespace;
pub mod geom;
pub mod oracles;
pub mod pathlet;
pub mod postprocess;
pub mod reach;
pub mod simplify;
pub mod subedge_pathlet;
pub mod universe;
pub mod vertex_pathlet;

pub use cluster::{cluster, validate_clustering, Clustering, ValidationReport};
pub use error::PathletError;
pub use geom::{ParamInterval, Point, PolyCurve, Tolerance};
pub use pathlet::{Pathlet, RefSource};
pub use postprocess::{make_interior_disjoint, reduce_ply, split_interior_disjoint};
