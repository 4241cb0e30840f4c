//! `pathlet`: subtrajectory clustering under the continuous Frechet
//! distance. Reads CSV trajectories, writes JSON results and optional SVG
//! renderings.
//!
//! Exit codes: 0 on success, 1 on input or usage errors, 2 when the greedy
//! cover stalls (the stall payload still lands in the output JSON).

mod io;
mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pathlet::cluster::cluster;
use pathlet::geom::{PolyCurve, Tolerance};
use pathlet::oracles::{oracle_frechet_decide, oracle_min_simplification};
use pathlet::pathlet::RefSource;
use pathlet::postprocess::make_interior_disjoint;
use pathlet::reach::{build_rect_domain, build_reach_graph};
use pathlet::simplify::build_simplification;
use pathlet::universe::collect_critical_points;
use pathlet::PathletError;

#[derive(Parser)]
#[command(
    name = "pathlet",
    version,
    about = "Subtrajectory clustering under the continuous Frechet distance"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cover a trajectory with pathlets and write clustering.json.
    Cluster(ClusterArgs),
    /// Simplify a trajectory and write simplification.json.
    Simplify(SimplifyArgs),
    /// Render a free-space diagram window and write fsd.svg.
    InspectFsd(InspectArgs),
    /// Reference computations, printed as JSON on stdout.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Args)]
struct ToleranceArgs {
    /// Absolute geometric tolerance override (default scales with the
    /// input's bounding box).
    #[arg(long)]
    eps_geom: Option<f64>,
    /// Absolute parameter-space tolerance override.
    #[arg(long)]
    eps_param: Option<f64>,
}

impl ToleranceArgs {
    fn resolve(&self, t: &PolyCurve) -> Tolerance {
        let mut tol = Tolerance::for_input(t);
        if let Some(g) = self.eps_geom {
            tol.eps_geom = g;
        }
        if let Some(p) = self.eps_param {
            tol.eps_param = p;
        }
        tol
    }
}

#[derive(Args)]
struct ClusterArgs {
    /// Input trajectory CSV (one vertex per line).
    #[arg(long)]
    input: PathBuf,
    /// Maximum reference-curve complexity (vertices), at least 2.
    #[arg(long)]
    ell: usize,
    /// Frechet radius for the simplification; pathlets match within 4x.
    #[arg(long)]
    delta: f64,
    /// Output directory (created if missing).
    #[arg(long)]
    out: PathBuf,
    /// Also write clustering.svg.
    #[arg(long)]
    svg: bool,
    /// Split pathlets so their covered intervals are interior-disjoint.
    #[arg(long)]
    interior_disjoint: bool,
    #[command(flatten)]
    tolerance: ToleranceArgs,
}

#[derive(Args)]
struct SimplifyArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    delta: f64,
    #[arg(long)]
    out: PathBuf,
    /// Also write simplification.svg.
    #[arg(long)]
    svg: bool,
    #[command(flatten)]
    tolerance: ToleranceArgs,
}

#[derive(Args)]
struct InspectArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    delta: f64,
    /// Simplification vertex range "i:j" spanning the window's columns.
    #[arg(long)]
    column_range: String,
    #[arg(long)]
    out: PathBuf,
    /// Run the clustering with this complexity bound and overlay the
    /// committed matchings that touch the window.
    #[arg(long)]
    ell: Option<usize>,
    /// Also write fsd.json with critical points and the reachability graph.
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    tolerance: ToleranceArgs,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Minimum vertex count of any curve on the input's vertices within
    /// the Frechet radius. Exponential in spirit; intended for small inputs.
    MinSimplification {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        delta: f64,
    },
    /// Sandwich decision for the Frechet distance between two trajectories:
    /// within is true, false, or null when the sandwich does not resolve.
    Frechet {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        other: PathBuf,
        #[arg(long)]
        delta: f64,
    },
}

fn main() -> ExitCode {
    if let Ok(raw) = std::env::var("PATHLET_THREADS") {
        if let Ok(n) = raw.trim().parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Cluster(args) => cmd_cluster(&args),
        Command::Simplify(args) => cmd_simplify(&args),
        Command::InspectFsd(args) => cmd_inspect_fsd(&args),
        Command::Oracle(cmd) => cmd_oracle(&cmd),
    };
    if std::env::var_os("PATHLET_STATS").is_some() {
        if let Some(kb) = peak_rss_kb() {
            eprintln!("peak_rss_kb={kb}");
        }
    }
    match outcome {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Peak resident set size of this process in kB, from the kernel's
/// accounting. Reported on stderr when PATHLET_STATS is set.
fn peak_rss_kb() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    line.split_whitespace().nth(1)?.parse().ok()
}

fn ensure_out_dir(dir: &Path) -> Result<(), String> {
    std::fs::create_dir_all(dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))
}

fn cmd_cluster(args: &ClusterArgs) -> Result<ExitCode, String> {
    let t = io::read_trajectory(&args.input)?;
    let tol = args.tolerance.resolve(&t);
    ensure_out_dir(&args.out)?;
    let json_path = args.out.join("clustering.json");
    let clustering = match cluster(&t, args.ell, args.delta, &tol) {
        Ok(c) => c,
        Err(PathletError::Stalled { uncovered }) => {
            let doc = io::StallDoc {
                schema_version: io::SCHEMA_VERSION,
                error: "stall",
                uncovered,
            };
            io::write_json(&json_path, &doc)?;
            eprintln!(
                "error: greedy cover stalled; uncovered intervals written to {}",
                json_path.display()
            );
            return Ok(ExitCode::from(2));
        }
        Err(e) => return Err(e.to_string()),
    };
    let clustering = if args.interior_disjoint {
        make_interior_disjoint(clustering)
    } else {
        clustering
    };
    let doc = io::cluster_doc(&clustering, &args.input, &tol, args.interior_disjoint);
    io::write_json(&json_path, &doc)?;
    if args.svg {
        let svg_path = args.out.join("clustering.svg");
        std::fs::write(&svg_path, svg::clustering_svg(&t, &clustering))
            .map_err(|e| format!("cannot write {}: {e}", svg_path.display()))?;
    }
    println!(
        "{} pathlets in {} iterations -> {}",
        clustering.pathlets.len(),
        clustering.iterations.len(),
        json_path.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_simplify(args: &SimplifyArgs) -> Result<ExitCode, String> {
    let t = io::read_trajectory(&args.input)?;
    let tol = args.tolerance.resolve(&t);
    if !(args.delta.is_finite() && args.delta >= 0.0) {
        return Err(format!("delta must be finite and nonnegative, got {}", args.delta));
    }
    let s = build_simplification(&t, args.delta, &tol);
    ensure_out_dir(&args.out)?;
    let doc = io::SimplifyDoc {
        schema_version: io::SCHEMA_VERSION,
        params: io::SimplifyParams {
            input: args.input.display().to_string(),
            delta: args.delta,
            tolerance: (&tol).into(),
        },
        simplification: (&s).into(),
    };
    let json_path = args.out.join("simplification.json");
    io::write_json(&json_path, &doc)?;
    if args.svg {
        let svg_path = args.out.join("simplification.svg");
        std::fs::write(&svg_path, svg::simplification_svg(&t, &s.curve))
            .map_err(|e| format!("cannot write {}: {e}", svg_path.display()))?;
    }
    println!(
        "{} of {} vertices kept -> {}",
        s.curve.n(),
        t.n(),
        json_path.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn parse_column_range(raw: &str, max: usize) -> Result<(usize, usize), String> {
    let (a, b) = raw
        .split_once(':')
        .ok_or_else(|| format!("column range must look like i:j, got {raw:?}"))?;
    let i: usize = a
        .trim()
        .parse()
        .map_err(|_| format!("bad column index {a:?}"))?;
    let j: usize = b
        .trim()
        .parse()
        .map_err(|_| format!("bad column index {b:?}"))?;
    if i < 1 || j > max || i >= j {
        return Err(format!(
            "column range {i}:{j} out of range (simplification has {max} vertices)"
        ));
    }
    Ok((i, j))
}

/// Matching path of one committed pathlet through its own window, mapped to
/// simplification coordinates. None when the interval's endpoints fail to
/// connect, which only happens if the replayed graph differs from the
/// committed one.
fn matching_in_s_coords(
    s_curve: &PolyCurve,
    t: &PolyCurve,
    source: &RefSource,
    interval: pathlet::ParamInterval,
    delta_prime: f64,
    tol: &Tolerance,
) -> Option<Vec<(f64, f64)>> {
    let (window, markers, to_s): (PolyCurve, [(f64, f64); 2], Box<dyn Fn(f64) -> f64>) =
        match *source {
            RefSource::Vertex { start, end } => {
                let window = s_curve.subcurve(start as f64, end as f64).ok()?;
                let hi = (end - start + 1) as f64;
                (
                    window,
                    [(1.0, interval.lo), (hi, interval.hi)],
                    Box::new(move |x| x + start as f64 - 1.0),
                )
            }
            RefSource::Subedge {
                edge,
                reversed,
                x_from,
                x_to,
            } => {
                let (a, b) = s_curve.edge(edge);
                let rows = if reversed {
                    vec![b.0.clone(), a.0.clone()]
                } else {
                    vec![a.0.clone(), b.0.clone()]
                };
                let window = PolyCurve::from_rows(rows).ok()?;
                let map: Box<dyn Fn(f64) -> f64> = if reversed {
                    Box::new(move |x| edge as f64 + 2.0 - x)
                } else {
                    Box::new(move |x| edge as f64 + x - 1.0)
                };
                (window, [(x_from, interval.lo), (x_to, interval.hi)], map)
            }
        };
    let domain = build_rect_domain(&window, t, delta_prime, tol);
    let graph = build_reach_graph(&domain, &markers).ok()?;
    let path = graph.path_between_z(0, 1)?;
    let mut mapped: Vec<(f64, f64)> = path.into_iter().map(|(x, y)| (to_s(x), y)).collect();
    if mapped.len() >= 2 && mapped.first().unwrap().0 > mapped.last().unwrap().0 {
        mapped.reverse();
    }
    Some(mapped)
}

/// Keeps the portion of an x-monotone polyline with x in [lo, hi],
/// interpolating the boundary crossings.
fn clip_to_columns(path: &[(f64, f64)], lo: f64, hi: f64) -> Vec<(f64, f64)> {
    let mut out: Vec<(f64, f64)> = Vec::new();
    for k in 0..path.len() {
        let (x, y) = path[k];
        if x < lo {
            if let Some(&(x2, y2)) = path.get(k + 1) {
                if x2 > lo {
                    let t = (lo - x) / (x2 - x);
                    out.push((lo, y + t * (y2 - y)));
                }
            }
            continue;
        }
        if x > hi {
            if k > 0 {
                let (px, py) = path[k - 1];
                if px < hi {
                    let t = (hi - px) / (x - px);
                    out.push((hi, py + t * (y - py)));
                }
            }
            break;
        }
        out.push((x, y));
    }
    out
}

fn cmd_inspect_fsd(args: &InspectArgs) -> Result<ExitCode, String> {
    let t = io::read_trajectory(&args.input)?;
    let tol = args.tolerance.resolve(&t);
    if !(args.delta.is_finite() && args.delta >= 0.0) {
        return Err(format!("delta must be finite and nonnegative, got {}", args.delta));
    }
    let s = build_simplification(&t, args.delta, &tol);
    let (col_lo, col_hi) = parse_column_range(&args.column_range, s.curve.n())?;
    let delta_prime = 4.0 * args.delta;
    let window = s
        .curve
        .subcurve(col_lo as f64, col_hi as f64)
        .map_err(|e| e.to_string())?;
    let domain = build_rect_domain(&window, &t, delta_prime, &tol);
    let crits = collect_critical_points(&window, &t, delta_prime, &tol);

    let mut matchings: Vec<(usize, Vec<(f64, f64)>)> = Vec::new();
    if let Some(ell) = args.ell {
        match cluster(&t, ell, args.delta, &tol) {
            Ok(clustering) => {
                for (idx, p) in clustering.pathlets.iter().enumerate() {
                    let (a, b) = p.source.span_on_s();
                    let (span_lo, span_hi) = (a.min(b), a.max(b));
                    if span_hi < col_lo as f64 || span_lo > col_hi as f64 {
                        continue;
                    }
                    for iv in &p.intervals {
                        let Some(path) = matching_in_s_coords(
                            &s.curve,
                            &t,
                            &p.source,
                            *iv,
                            clustering.delta_prime,
                            &tol,
                        ) else {
                            continue;
                        };
                        let clipped = clip_to_columns(&path, col_lo as f64, col_hi as f64);
                        if clipped.len() >= 2 {
                            let local: Vec<(f64, f64)> = clipped
                                .iter()
                                .map(|&(x, y)| (x - col_lo as f64 + 1.0, y))
                                .collect();
                            matchings.push((idx, local));
                        }
                    }
                }
            }
            Err(e) => eprintln!("warning: clustering overlay skipped: {e}"),
        }
    }

    ensure_out_dir(&args.out)?;
    let crit_xy: Vec<(f64, f64)> = crits.iter().map(|c| (c.x, c.y)).collect();
    let svg_body = svg::fsd_svg(&domain, col_lo as f64, &crit_xy, &matchings);
    let svg_path = args.out.join("fsd.svg");
    std::fs::write(&svg_path, svg_body)
        .map_err(|e| format!("cannot write {}: {e}", svg_path.display()))?;

    if args.json {
        let graph = build_reach_graph(&domain, &[]).map_err(|e| e.to_string())?;
        let doc = io::InspectDoc {
            schema_version: io::SCHEMA_VERSION,
            input: args.input.display().to_string(),
            delta: args.delta,
            delta_prime,
            columns: [col_lo, col_hi],
            critical_points: crits
                .iter()
                .map(|c| io::CriticalPointDoc {
                    x: c.x,
                    y: c.y,
                    kind: format!("{:?}", c.kind),
                })
                .collect(),
            reach: io::ReachGraphDoc {
                vertices: graph.vertices().iter().map(|&(x, y)| [x, y]).collect(),
                arcs: graph
                    .arcs()
                    .map(|(u, v)| [u as usize, v as usize])
                    .collect(),
            },
        };
        io::write_json(&args.out.join("fsd.json"), &doc)?;
    }
    println!(
        "window {}:{} with {} critical points -> {}",
        col_lo,
        col_hi,
        crits.len(),
        svg_path.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(cmd: &OracleCommand) -> Result<ExitCode, String> {
    match cmd {
        OracleCommand::MinSimplification { input, delta } => {
            let t = io::read_trajectory(input)?;
            let tol = Tolerance::for_input(&t);
            let k = oracle_min_simplification(&t, *delta, &tol);
            println!("{{\"min_vertices\": {k}}}");
        }
        OracleCommand::Frechet {
            input,
            other,
            delta,
        } => {
            let p = io::read_trajectory(input)?;
            let q = io::read_trajectory(other)?;
            let within = match oracle_frechet_decide(&p, &q, *delta) {
                Some(true) => "true",
                Some(false) => "false",
                None => "null",
            };
            println!("{{\"within\": {within}}}");
        }
    }
    Ok(ExitCode::SUCCESS)
}
