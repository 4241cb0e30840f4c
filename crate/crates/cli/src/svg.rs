//! Hand-rolled SVG renderers. Coordinates are written with four decimal
//! places so repeated runs emit identical bytes. Curves in more than two
//! dimensions are drawn by their first two coordinates.

use std::fmt::Write as _;

use pathlet::cluster::Clustering;
use pathlet::geom::PolyCurve;
use pathlet::reach::RectDomain;

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

pub fn color(idx: usize) -> &'static str {
    PALETTE[idx % PALETTE.len()]
}

struct Frame {
    min_x: f64,
    min_y: f64,
    scale: f64,
    height: f64,
}

impl Frame {
    /// Fits the union of the curves' xy bounding boxes into a 760x560 plot
    /// area with a 20px margin.
    fn fit(curves: &[&PolyCurve]) -> Frame {
        let (mut min_x, mut min_y) = (f64::INFINITY, f64::INFINITY);
        let (mut max_x, mut max_y) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for c in curves {
            for p in c.points() {
                min_x = min_x.min(p.0[0]);
                max_x = max_x.max(p.0[0]);
                min_y = min_y.min(p.0[1]);
                max_y = max_y.max(p.0[1]);
            }
        }
        let span_x = (max_x - min_x).max(1e-9);
        let span_y = (max_y - min_y).max(1e-9);
        let scale = (760.0 / span_x).min(560.0 / span_y);
        Frame {
            min_x,
            min_y,
            scale,
            height: span_y * scale + 40.0,
        }
    }

    fn map(&self, p: &[f64]) -> (f64, f64) {
        (
            20.0 + (p[0] - self.min_x) * self.scale,
            self.height - 20.0 - (p[1] - self.min_y) * self.scale,
        )
    }

    fn width(&self) -> f64 {
        800.0
    }
}

fn open_svg(out: &mut String, width: f64, height: f64) {
    let _ = write!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" \
         viewBox=\"0 0 {width:.4} {height:.4}\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    );
}

fn polyline(out: &mut String, pts: &[(f64, f64)], stroke: &str, width: f64, dashed: bool) {
    if pts.is_empty() {
        return;
    }
    if pts.len() == 1 {
        let _ = write!(
            out,
            "<circle cx=\"{:.4}\" cy=\"{:.4}\" r=\"{width:.4}\" fill=\"{stroke}\"/>\n",
            pts[0].0, pts[0].1
        );
        return;
    }
    let mut d = String::new();
    for (x, y) in pts {
        if !d.is_empty() {
            d.push(' ');
        }
        let _ = write!(d, "{x:.4},{y:.4}");
    }
    let dash = if dashed { " stroke-dasharray=\"6,4\"" } else { "" };
    let _ = write!(
        out,
        "<polyline points=\"{d}\" fill=\"none\" stroke=\"{stroke}\" \
         stroke-width=\"{width:.4}\" stroke-linejoin=\"round\" stroke-linecap=\"round\"{dash}/>\n"
    );
}

fn curve_points(frame: &Frame, c: &PolyCurve) -> Vec<(f64, f64)> {
    c.points().iter().map(|p| frame.map(&p.0)).collect()
}

/// Densely sampled subcurve in frame coordinates. Sampling at the vertex
/// grid plus the fractional ends reproduces the exact polyline.
fn subcurve_points(frame: &Frame, c: &PolyCurve, lo: f64, hi: f64) -> Vec<(f64, f64)> {
    let mut params = vec![lo];
    let mut v = lo.floor() + 1.0;
    while v < hi {
        if v > lo {
            params.push(v);
        }
        v += 1.0;
    }
    params.push(hi);
    params
        .iter()
        .map(|&x| frame.map(&c.eval_clamped(x).0))
        .collect()
}

/// Input trajectory in gray, simplification in red with vertex markers.
pub fn simplification_svg(t: &PolyCurve, s: &PolyCurve) -> String {
    let frame = Frame::fit(&[t, s]);
    let mut out = String::new();
    open_svg(&mut out, frame.width(), frame.height);
    polyline(&mut out, &curve_points(&frame, t), "#9a9a9a", 1.5, false);
    let s_pts = curve_points(&frame, s);
    polyline(&mut out, &s_pts, "#d62728", 2.5, false);
    for (x, y) in &s_pts {
        let _ = write!(
            out,
            "<circle cx=\"{x:.4}\" cy=\"{y:.4}\" r=\"3.5\" fill=\"#d62728\"/>\n"
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Input trajectory in gray, each pathlet's covered subcurves in its own
/// color, its reference curve dashed in the same color.
pub fn clustering_svg(t: &PolyCurve, clustering: &Clustering) -> String {
    let mut curves: Vec<&PolyCurve> = vec![t];
    for p in &clustering.pathlets {
        curves.push(&p.reference);
    }
    let frame = Frame::fit(&curves);
    let mut out = String::new();
    open_svg(&mut out, frame.width(), frame.height);
    polyline(&mut out, &curve_points(&frame, t), "#bbbbbb", 1.2, false);
    for (idx, p) in clustering.pathlets.iter().enumerate() {
        let c = color(idx);
        for iv in &p.intervals {
            let pts = subcurve_points(&frame, t, iv.lo, iv.hi);
            polyline(&mut out, &pts, c, 2.8, false);
        }
        polyline(&mut out, &curve_points(&frame, &p.reference), c, 1.6, true);
    }
    out.push_str("</svg>\n");
    out
}

/// One free-space window: obstacles black, critical points red, matching
/// paths colored. `x_offset` shifts the window's local column coordinates
/// onto the simplification's parameter axis for the tick labels;
/// `critical_points` and `matchings` are already in window-local
/// coordinates.
pub fn fsd_svg(
    domain: &RectDomain,
    x_offset: f64,
    critical_points: &[(f64, f64)],
    matchings: &[(usize, Vec<(f64, f64)>)],
) -> String {
    let w = domain.width() as f64;
    let h = domain.height() as f64;
    let span_x = (w - 1.0).max(1.0);
    let span_y = (h - 1.0).max(1.0);
    let plot_w = 720.0;
    let plot_h = (plot_w * span_y / span_x).clamp(180.0, 720.0);
    let margin = 45.0;
    let sx = plot_w / span_x;
    let sy = plot_h / span_y;
    let map = |x: f64, y: f64| -> (f64, f64) {
        (margin + (x - 1.0) * sx, margin + plot_h - (y - 1.0) * sy)
    };
    let mut out = String::new();
    open_svg(&mut out, plot_w + 2.0 * margin, plot_h + 2.0 * margin);
    for i in 1..=domain.width() {
        let (px, _) = map(i as f64, 1.0);
        let (_, top) = map(i as f64, h);
        let (_, bot) = map(i as f64, 1.0);
        let _ = write!(
            out,
            "<line x1=\"{px:.4}\" y1=\"{top:.4}\" x2=\"{px:.4}\" y2=\"{bot:.4}\" \
             stroke=\"#dddddd\" stroke-width=\"1\"/>\n\
             <text x=\"{px:.4}\" y=\"{:.4}\" font-size=\"11\" text-anchor=\"middle\" \
             fill=\"#555555\">{:.0}</text>\n",
            bot + 16.0,
            x_offset + i as f64 - 1.0
        );
    }
    for j in 1..=domain.height() {
        let (_, py) = map(1.0, j as f64);
        let (left, _) = map(1.0, j as f64);
        let (right, _) = map(w, j as f64);
        let _ = write!(
            out,
            "<line x1=\"{left:.4}\" y1=\"{py:.4}\" x2=\"{right:.4}\" y2=\"{py:.4}\" \
             stroke=\"#dddddd\" stroke-width=\"1\"/>\n\
             <text x=\"{:.4}\" y=\"{:.4}\" font-size=\"11\" text-anchor=\"end\" \
             fill=\"#555555\">{j}</text>\n",
            left - 6.0,
            py + 4.0
        );
    }
    let (vertical, horizontal) = domain.obstacle_segments();
    for (i, lo, hi) in &vertical {
        let (x0, y0) = map(*i as f64, *lo);
        let (x1, y1) = map(*i as f64, *hi);
        let _ = write!(
            out,
            "<line x1=\"{x0:.4}\" y1=\"{y0:.4}\" x2=\"{x1:.4}\" y2=\"{y1:.4}\" \
             stroke=\"black\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n"
        );
    }
    for (j, lo, hi) in &horizontal {
        let (x0, y0) = map(*lo, *j as f64);
        let (x1, y1) = map(*hi, *j as f64);
        let _ = write!(
            out,
            "<line x1=\"{x0:.4}\" y1=\"{y0:.4}\" x2=\"{x1:.4}\" y2=\"{y1:.4}\" \
             stroke=\"black\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n"
        );
    }
    for (idx, path) in matchings {
        let pts: Vec<(f64, f64)> = path.iter().map(|&(x, y)| map(x, y)).collect();
        polyline(&mut out, &pts, color(*idx), 2.2, false);
    }
    for &(x, y) in critical_points {
        let (px, py) = map(x, y);
        let _ = write!(
            out,
            "<circle cx=\"{px:.4}\" cy=\"{py:.4}\" r=\"2.6\" fill=\"#d62728\"/>\n"
        );
    }
    out.push_str("</svg>\n");
    out
}
