//! Trajectory input and result serialization.
//!
//! Input is CSV: one vertex per line, at least two comma-separated
//! coordinates, every row the same dimension. Blank lines and lines starting
//! with `#` are skipped; a single leading non-numeric header row is
//! tolerated. Output documents serialize with `serde_json` in pretty form
//! plus a trailing newline, so identical runs produce identical bytes.

use std::fs;
use std::path::Path;

use pathlet::cluster::Clustering;
use pathlet::geom::{ParamInterval, PolyCurve, Tolerance};
use pathlet::simplify::Simplification;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

/// Reads a trajectory from a CSV file. Errors carry the 1-based row number
/// of the offending line.
pub fn read_trajectory(path: &Path) -> Result<PolyCurve, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut dim: Option<usize> = None;
    let mut saw_data = false;
    for (idx, line) in text.lines().enumerate() {
        let row_no = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let parsed: Result<Vec<f64>, _> = fields.iter().map(|f| f.parse::<f64>()).collect();
        let values = match parsed {
            Ok(v) => v,
            Err(_) if !saw_data => continue, // header row
            Err(_) => {
                return Err(format!(
                    "{}: row {row_no}: expected comma-separated numbers, got {line:?}",
                    path.display()
                ));
            }
        };
        saw_data = true;
        if values.len() < 2 {
            return Err(format!(
                "{}: row {row_no}: a vertex needs at least 2 coordinates, got {}",
                path.display(),
                values.len()
            ));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(format!(
                "{}: row {row_no}: coordinate {v} is not finite",
                path.display()
            ));
        }
        match dim {
            None => dim = Some(values.len()),
            Some(d) if d != values.len() => {
                return Err(format!(
                    "{}: row {row_no}: expected {d} coordinates, got {}",
                    path.display(),
                    values.len()
                ));
            }
            Some(_) => {}
        }
        rows.push(values);
    }
    if rows.is_empty() {
        return Err(format!("{}: no trajectory vertices found", path.display()));
    }
    PolyCurve::from_rows(rows).map_err(|e| format!("{}: {e}", path.display()))
}

#[derive(Serialize)]
pub struct ToleranceDoc {
    pub eps_geom: f64,
    pub eps_param: f64,
}

impl From<&Tolerance> for ToleranceDoc {
    fn from(t: &Tolerance) -> Self {
        ToleranceDoc {
            eps_geom: t.eps_geom,
            eps_param: t.eps_param,
        }
    }
}

#[derive(Serialize)]
pub struct SimplificationDoc {
    pub breakpoints: Vec<f64>,
    pub vertices: Vec<Vec<f64>>,
}

impl From<&Simplification> for SimplificationDoc {
    fn from(s: &Simplification) -> Self {
        SimplificationDoc {
            breakpoints: s.breakpoints.clone(),
            vertices: curve_rows(&s.curve),
        }
    }
}

#[derive(Serialize)]
pub struct ReferenceDoc {
    /// Which curve the reference lives on; always the simplification.
    pub curve: &'static str,
    /// Parameter span on the simplification; `from > to` for a reversed
    /// subedge reference.
    pub from: f64,
    pub to: f64,
    pub vertices: Vec<Vec<f64>>,
}

#[derive(Serialize)]
pub struct PathletDoc {
    pub reference: ReferenceDoc,
    pub intervals: Vec<ParamInterval>,
    pub residual_score: usize,
}

#[derive(Serialize)]
pub struct ClusterParams {
    pub input: String,
    pub ell: usize,
    pub delta: f64,
    pub delta_prime: f64,
    pub tolerance: ToleranceDoc,
    pub interior_disjoint: bool,
}

#[derive(Serialize)]
pub struct ClusterStats {
    pub iterations: usize,
    pub universe_size: usize,
    pub covered_per_iteration: Vec<usize>,
}

#[derive(Serialize)]
pub struct ClusterDoc {
    pub schema_version: u32,
    pub params: ClusterParams,
    pub simplification: SimplificationDoc,
    pub pathlets: Vec<PathletDoc>,
    pub stats: ClusterStats,
}

pub fn cluster_doc(
    clustering: &Clustering,
    input: &Path,
    tol: &Tolerance,
    interior_disjoint: bool,
) -> ClusterDoc {
    let pathlets = clustering
        .pathlets
        .iter()
        .map(|p| {
            let (from, to) = p.source.span_on_s();
            PathletDoc {
                reference: ReferenceDoc {
                    curve: "S",
                    from,
                    to,
                    vertices: curve_rows(&p.reference),
                },
                intervals: p.intervals.clone(),
                residual_score: p.score,
            }
        })
        .collect();
    ClusterDoc {
        schema_version: SCHEMA_VERSION,
        params: ClusterParams {
            input: input.display().to_string(),
            ell: clustering.ell,
            delta: clustering.delta,
            delta_prime: clustering.delta_prime,
            tolerance: tol.into(),
            interior_disjoint,
        },
        simplification: (&clustering.simplification).into(),
        pathlets,
        stats: ClusterStats {
            iterations: clustering.iterations.len(),
            universe_size: clustering.universe_size,
            covered_per_iteration: clustering
                .iterations
                .iter()
                .map(|it| it.covered_after)
                .collect(),
        },
    }
}

#[derive(Serialize)]
pub struct StallDoc {
    pub schema_version: u32,
    pub error: &'static str,
    pub uncovered: Vec<ParamInterval>,
}

#[derive(Serialize)]
pub struct SimplifyParams {
    pub input: String,
    pub delta: f64,
    pub tolerance: ToleranceDoc,
}

#[derive(Serialize)]
pub struct SimplifyDoc {
    pub schema_version: u32,
    pub params: SimplifyParams,
    pub simplification: SimplificationDoc,
}

#[derive(Serialize)]
pub struct CriticalPointDoc {
    pub x: f64,
    pub y: f64,
    pub kind: String,
}

#[derive(Serialize)]
pub struct ReachGraphDoc {
    pub vertices: Vec<[f64; 2]>,
    pub arcs: Vec<[usize; 2]>,
}

#[derive(Serialize)]
pub struct InspectDoc {
    pub schema_version: u32,
    pub input: String,
    pub delta: f64,
    pub delta_prime: f64,
    pub columns: [usize; 2],
    pub critical_points: Vec<CriticalPointDoc>,
    pub reach: ReachGraphDoc,
}

pub fn curve_rows(c: &PolyCurve) -> Vec<Vec<f64>> {
    c.points().iter().map(|p| p.0.clone()).collect()
}

/// Serializes a document and writes it with a trailing newline.
pub fn write_json<T: Serialize>(path: &Path, doc: &T) -> Result<(), String> {
    let mut body = serde_json::to_string_pretty(doc)
        .map_err(|e| format!("cannot serialize {}: {e}", path.display()))?;
    body.push('\n');
    fs::write(path, body).map_err(|e| format!("cannot write {}: {e}", path.display()))
}
