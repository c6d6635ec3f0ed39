//! SVG figures of placed dissections in the two usual drawing styles:
//! exact (pieces touching, hinges as dots) and exaggerated (pieces pulled
//! apart, hinges as short bars joining them).

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::dissect::HingedDissection;
use crate::error::{Error, Result};
use crate::exactnum::{epsilon, RigidMotion, Scalar};
use crate::geom::Polygon;
use crate::realize::Realization;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Style {
    Exact,
    Exaggerated,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RenderSpec {
    /// Stroke width in pixels.
    pub stroke_width: f64,
    /// Pixels per unit length.
    pub scale: f64,
    /// Hinge dot radius in pixels.
    pub hinge_radius: f64,
    pub shading: bool,
    pub style: Style,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec { stroke_width: 1.5, scale: 100.0, hinge_radius: 3.0, shading: true, style: Style::Exact }
    }
}

impl RenderSpec {
    pub fn exaggerated() -> Self {
        RenderSpec { style: Style::Exaggerated, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("stroke width", self.stroke_width), ("scale", self.scale), ("hinge radius", self.hinge_radius)]
        {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Invalid(format!("{name} must be positive")));
            }
        }
        Ok(())
    }
}

/// Fraction by which exaggerated pieces shrink toward their centres.
const GAP: f64 = 0.08;

const FILLS: [&str; 4] = ["#d9d9d9", "#b3b3b3", "#ececec", "#c6c6c6"];

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    pad: f64,
}

impl Frame {
    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        ((x - self.min_x) * self.scale + self.pad, (self.max_y - y) * self.scale + self.pad)
    }
}

fn shrink(pts: &[(f64, f64)], p: (f64, f64)) -> (f64, f64) {
    let n = pts.len() as f64;
    let cx = pts.iter().map(|q| q.0).sum::<f64>() / n;
    let cy = pts.iter().map(|q| q.1).sum::<f64>() / n;
    (p.0 + (cx - p.0) * GAP, p.1 + (cy - p.1) * GAP)
}

/// Renders pieces of `d` placed by `motions` over the outline `cells`.
pub fn emit_svg_parts<S: Scalar>(
    d: &HingedDissection<S>,
    motions: &[RigidMotion<S>],
    cells: &[Polygon<S>],
    spec: &RenderSpec,
) -> Result<String> {
    spec.validate()?;
    if motions.len() != d.len() {
        return Err(Error::Invalid(format!("{} motions for {} pieces", motions.len(), d.len())));
    }
    let placed: Vec<Vec<(f64, f64)>> = d.placed(motions).iter().map(Polygon::to_f64).collect();
    let outline: Vec<Vec<(f64, f64)>> = cells.iter().map(Polygon::to_f64).collect();
    let all = placed.iter().chain(outline.iter()).flatten();
    let (mut lo, mut hi) = ((f64::INFINITY, f64::INFINITY), (f64::NEG_INFINITY, f64::NEG_INFINITY));
    for &(x, y) in all {
        lo = (lo.0.min(x), lo.1.min(y));
        hi = (hi.0.max(x), hi.1.max(y));
    }
    if !lo.0.is_finite() {
        lo = (0.0, 0.0);
        hi = (0.0, 0.0);
    }
    let pad = 4.0 * spec.hinge_radius + spec.stroke_width;
    let f = Frame { min_x: lo.0, max_y: hi.1, scale: spec.scale, pad };
    let w = (hi.0 - lo.0) * spec.scale + 2.0 * pad;
    let h = (hi.1 - lo.1) * spec.scale + 2.0 * pad;

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        num(w),
        num(h),
        num(w),
        num(h)
    );
    if !S::EXACT {
        let _ = writeln!(s, "<!-- approximate arithmetic, epsilon {:e} -->", epsilon());
    }
    let exaggerated = spec.style == Style::Exaggerated;
    let sw = num(spec.stroke_width);
    let _ = writeln!(s, "<g class=\"target\" fill=\"none\" stroke=\"#999999\" stroke-width=\"{sw}\" stroke-dasharray=\"4 3\">");
    for c in &outline {
        let pts: Vec<String> = c.iter().map(|&p| f.map(p)).map(|(x, y)| format!("{},{}", num(x), num(y))).collect();
        let _ = writeln!(s, "  <polygon points=\"{}\"/>", pts.join(" "));
    }
    s.push_str("</g>\n");
    let _ = writeln!(s, "<g class=\"pieces\" stroke=\"#000000\" stroke-width=\"{sw}\" stroke-linejoin=\"round\">");
    for (i, poly) in placed.iter().enumerate() {
        let mut path = String::new();
        for (k, &p) in poly.iter().enumerate() {
            let q = if exaggerated { shrink(poly, p) } else { p };
            let (x, y) = f.map(q);
            let _ = write!(path, "{}{} {} ", if k == 0 { "M" } else { "L" }, num(x), num(y));
        }
        path.push('Z');
        let fill = if spec.shading || exaggerated { FILLS[i % FILLS.len()] } else { "none" };
        let _ = writeln!(s, "  <path id=\"piece-{i}\" d=\"{path}\" fill=\"{fill}\"/>");
    }
    s.push_str("</g>\n");
    s.push_str("<g class=\"hinges\" fill=\"#000000\" stroke=\"#000000\">\n");
    for (k, hg) in d.hinges.iter().enumerate() {
        let pa = motions[hg.a.piece].apply(d.anchor(hg.a)).to_f64();
        if exaggerated {
            let pb = motions[hg.b.piece].apply(d.anchor(hg.b)).to_f64();
            let (x1, y1) = f.map(shrink(&placed[hg.a.piece], pa));
            let (x2, y2) = f.map(shrink(&placed[hg.b.piece], pb));
            let _ = writeln!(
                s,
                "  <line id=\"hinge-{k}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke-width=\"{}\" stroke-linecap=\"round\"/>",
                num(x1),
                num(y1),
                num(x2),
                num(y2),
                num(spec.hinge_radius)
            );
        } else {
            let (x, y) = f.map(pa);
            let _ = writeln!(
                s,
                "  <circle id=\"hinge-{k}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                num(x),
                num(y),
                num(spec.hinge_radius)
            );
        }
    }
    s.push_str("</g>\n</svg>\n");
    Ok(s)
}

/// Renders a realization over its target outline.
pub fn emit_svg<S: Scalar>(r: &Realization<S>, spec: &RenderSpec) -> Result<String> {
    emit_svg_parts(&r.dissection, &r.motions, &r.target.cells, spec)
}
