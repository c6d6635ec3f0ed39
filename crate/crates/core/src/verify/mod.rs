//! Checks that a realization is a valid, non-overlapping rotation of its
//! hinged dissection into the target.

mod chords;

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

pub use chords::chords_noncrossing;

use crate::dissect::HingedDissection;
use crate::error::{Error, Result};
use crate::exactnum::{epsilon, MarginScope, Margins, RigidMotion, Scalar};
use crate::geom::predicates::cmp_angle;
use crate::geom::{interiors_overlap, Point, Polygon, Region};
use crate::realize::Realization;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Structure,
    Orientation,
    HingeCoincidence,
    Disjointness,
    Containment,
    Area,
    HingeNoncrossing,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Structure,
        Check::Orientation,
        Check::HingeCoincidence,
        Check::Disjointness,
        Check::Containment,
        Check::Area,
        Check::HingeNoncrossing,
    ];
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: Check,
    pub passed: bool,
    /// First counterexample, when failed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub exact: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub margins: Option<Margins>,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.len() == Check::ALL.len() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> Vec<Check> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.check).collect()
    }

    pub fn get(&self, c: Check) -> Option<&CheckResult> {
        self.checks.iter().find(|r| r.check == c)
    }
}

/// Runs all seven checks on a realization.
pub fn verify_configuration<S: Scalar>(r: &Realization<S>) -> VerificationReport {
    verify_parts(&r.dissection, &r.motions, &r.target.region())
}

/// The checks for a dissection placed by `motions` against `region`.
pub fn verify_parts<S: Scalar>(
    d: &HingedDissection<S>,
    motions: &[RigidMotion<S>],
    region: &Region<S>,
) -> VerificationReport {
    let scope = (!S::EXACT).then(MarginScope::start);
    let mut checks = Vec::new();
    let mut push = |check: Check, res: std::result::Result<(), String>| {
        checks.push(CheckResult { check, passed: res.is_ok(), counterexample: res.err() });
    };
    let structure = check_structure(d, motions);
    let ok = structure.is_ok();
    push(Check::Structure, structure);
    if ok {
        let placed = d.placed(motions);
        push(Check::Orientation, check_orientation(motions));
        push(Check::HingeCoincidence, check_hinges(d, motions));
        push(Check::Disjointness, check_disjoint(&placed));
        push(Check::Containment, check_containment(&placed, region));
        push(Check::Area, check_area(d, region));
        push(Check::HingeNoncrossing, check_noncrossing(d, &placed, motions));
    }
    VerificationReport {
        exact: S::EXACT,
        epsilon: (!S::EXACT).then(epsilon),
        margins: scope.map(|s| s.finish()),
        checks,
    }
}

/// Whether the interiors of two placed simple polygons share no point.
/// Touching along edges or at vertices is allowed.
pub fn interiors_disjoint<S: Scalar>(p: &Polygon<S>, q: &Polygon<S>) -> Result<bool> {
    for (name, poly) in [("first", p), ("second", q)] {
        if poly.len() < 3 || poly.area2().is_zero() {
            return Err(Error::Invalid(format!("{name} polygon is degenerate")));
        }
    }
    Ok(!interiors_overlap(p, q))
}

fn check_structure<S: Scalar>(d: &HingedDissection<S>, motions: &[RigidMotion<S>]) -> std::result::Result<(), String> {
    if motions.len() != d.pieces.len() {
        return Err(format!("{} motions for {} pieces", motions.len(), d.pieces.len()));
    }
    d.validate().map_err(|e| e.to_string())?;
    for h in &d.hinges {
        if h.a.piece == h.b.piece {
            return Err(format!("hinge joins piece {} to itself", h.a.piece));
        }
    }
    Ok(())
}

fn check_orientation<S: Scalar>(motions: &[RigidMotion<S>]) -> std::result::Result<(), String> {
    for (i, m) in motions.iter().enumerate() {
        if !m.is_rotation() {
            let det = m.determinant();
            return Err(format!("motion {i} is not a rotation (determinant {det})"));
        }
    }
    Ok(())
}

fn check_hinges<S: Scalar>(d: &HingedDissection<S>, motions: &[RigidMotion<S>]) -> std::result::Result<(), String> {
    for (k, h) in d.hinges.iter().enumerate() {
        let pa = motions[h.a.piece].apply(d.anchor(h.a));
        let pb = motions[h.b.piece].apply(d.anchor(h.b));
        if !pa.same(&pb) {
            return Err(format!("hinge {k}: {} vs {}", pa.key(), pb.key()));
        }
    }
    Ok(())
}

fn check_disjoint<S: Scalar>(placed: &[Polygon<S>]) -> std::result::Result<(), String> {
    for i in 0..placed.len() {
        for j in i + 1..placed.len() {
            if interiors_overlap(&placed[i], &placed[j]) {
                return Err(format!("pieces {i} and {j} overlap"));
            }
        }
    }
    Ok(())
}

fn check_containment<S: Scalar>(placed: &[Polygon<S>], region: &Region<S>) -> std::result::Result<(), String> {
    for (i, p) in placed.iter().enumerate() {
        if !region.contains_polygon(p) {
            return Err(format!("piece {i} leaves the target"));
        }
    }
    Ok(())
}

fn check_area<S: Scalar>(d: &HingedDissection<S>, region: &Region<S>) -> std::result::Result<(), String> {
    let a = d.total_area();
    let b = region.area();
    if a.same(&b) {
        Ok(())
    } else {
        Err(format!("pieces have area {a}, target {b}"))
    }
}

/// Direction in which the boundary of `poly` leaves vertex `v`.
fn wedge_start<S: Scalar>(poly: &Polygon<S>, p: &Point<S>) -> Option<Point<S>> {
    let i = poly.vertex_index(p)?;
    Some(poly.vertex(i + 1).sub(p))
}

/// Chord-diagram test at one point: `pieces` are the placed polygons having
/// the point as a vertex, `links` pairs of indices into `pieces`.
pub fn hinge_noncrossing_at_point<S: Scalar>(
    point: &Point<S>,
    pieces: &[&Polygon<S>],
    links: &[(usize, usize)],
) -> bool {
    let dirs: Vec<Point<S>> = pieces
        .iter()
        .map(|p| wedge_start(p, point).unwrap_or_else(Point::origin))
        .collect();
    let mut order: Vec<usize> = (0..pieces.len()).collect();
    order.sort_by(|&a, &b| cmp_angle(&dirs[a], &dirs[b]).then(a.cmp(&b)));
    let mut pos = vec![0; pieces.len()];
    for (k, &i) in order.iter().enumerate() {
        pos[i] = k;
    }
    let chords: Vec<(usize, usize)> = links.iter().map(|&(a, b)| (pos[a], pos[b])).collect();
    chords_noncrossing(&chords)
}

fn check_noncrossing<S: Scalar>(
    d: &HingedDissection<S>,
    placed: &[Polygon<S>],
    motions: &[RigidMotion<S>],
) -> std::result::Result<(), String> {
    // Group hinges by their image point.
    let mut groups: Vec<(Point<S>, Vec<usize>)> = Vec::new();
    for (k, h) in d.hinges.iter().enumerate() {
        let p = motions[h.a.piece].apply(d.anchor(h.a));
        match groups.iter_mut().find(|(q, _)| q.same(&p)) {
            Some((_, v)) => v.push(k),
            None => groups.push((p, vec![k])),
        }
    }
    for (p, hs) in groups {
        if hs.len() < 2 {
            continue;
        }
        let mut ids: Vec<usize> = hs.iter().flat_map(|&k| [d.hinges[k].a.piece, d.hinges[k].b.piece]).collect();
        ids.sort();
        ids.dedup();
        let polys: Vec<&Polygon<S>> = ids.iter().map(|&i| &placed[i]).collect();
        let links: Vec<(usize, usize)> = hs
            .iter()
            .map(|&k| {
                let h = d.hinges[k];
                let a = ids.binary_search(&h.a.piece).expect("listed");
                let b = ids.binary_search(&h.b.piece).expect("listed");
                (a, b)
            })
            .collect();
        if !hinge_noncrossing_at_point(&p, &polys, &links) {
            return Err(format!("hinges {hs:?} cross at {}", p.key()));
        }
    }
    Ok(())
}

/// Compares a placement of two wedges by angle; exposed for tests.
pub fn cmp_wedges<S: Scalar>(a: &Point<S>, b: &Point<S>) -> Ordering {
    cmp_angle(a, b)
}
