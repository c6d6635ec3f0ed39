use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::exactnum::{RigidMotion, Scalar};
use crate::geom::predicates::{on_segment, orient, segment_contacts, split_segment};
use crate::geom::Point;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

/// A simple polygon given by its vertex cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polygon<S>(pub Vec<Point<S>>);

impl<S: Scalar> Polygon<S> {
    pub fn new(pts: Vec<Point<S>>) -> Self {
        Polygon(pts)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex(&self, i: usize) -> &Point<S> {
        &self.0[i % self.0.len()]
    }

    /// Edges `(v_i, v_{i+1})` in order.
    pub fn edges(&self) -> impl Iterator<Item = (&Point<S>, &Point<S>)> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| (&self.0[i], &self.0[(i + 1) % n]))
    }

    /// Twice the signed area.
    pub fn area2(&self) -> S {
        self.edges().fold(S::zero(), |acc, (a, b)| acc.add(&a.cross(b)))
    }

    pub fn signed_area(&self) -> S {
        self.area2().half()
    }

    pub fn area(&self) -> S {
        let a = self.signed_area();
        if a.is_neg() {
            a.neg()
        } else {
            a
        }
    }

    pub fn is_ccw(&self) -> bool {
        self.area2().is_pos()
    }

    pub fn reversed(&self) -> Self {
        Polygon(self.0.iter().rev().cloned().collect())
    }

    pub fn ccw(&self) -> Self {
        if self.area2().is_neg() {
            self.reversed()
        } else {
            self.clone()
        }
    }

    pub fn transformed(&self, m: &RigidMotion<S>) -> Self {
        Polygon(self.0.iter().map(|p| m.apply(p)).collect())
    }

    pub fn translated(&self, t: &Point<S>) -> Self {
        Polygon(self.0.iter().map(|p| p.add(t)).collect())
    }

    /// Cyclic shift so that vertex `i` comes first.
    pub fn rotated_to(&self, i: usize) -> Self {
        let n = self.0.len();
        Polygon((0..n).map(|k| self.0[(i + k) % n].clone()).collect())
    }

    pub fn vertex_index(&self, p: &Point<S>) -> Option<usize> {
        self.0.iter().position(|q| q.same(p))
    }

    pub fn vertex_average(&self) -> Point<S> {
        let n = S::from_int(self.0.len() as i64);
        let sum = self.0.iter().fold(Point::origin(), |acc: Point<S>, p| acc.add(p));
        Point::new(sum.x.div(&n).expect("nonempty"), sum.y.div(&n).expect("nonempty"))
    }

    /// Area centroid.
    pub fn centroid(&self) -> Point<S> {
        let a6 = self.area2().mul(&S::from_int(3));
        let mut cx = S::zero();
        let mut cy = S::zero();
        for (p, q) in self.edges() {
            let c = p.cross(q);
            cx = cx.add(&p.x.add(&q.x).mul(&c));
            cy = cy.add(&p.y.add(&q.y).mul(&c));
        }
        Point::new(cx.div(&a6).expect("nonzero area"), cy.div(&a6).expect("nonzero area"))
    }

    /// Lexicographically smallest and largest corners of the bounding box.
    pub fn bbox(&self) -> (Point<S>, Point<S>) {
        let mut lo = self.0[0].clone();
        let mut hi = self.0[0].clone();
        for p in &self.0[1..] {
            lo = Point::new(lo.x.min_s(&p.x), lo.y.min_s(&p.y));
            hi = Point::new(hi.x.max_s(&p.x), hi.y.max_s(&p.y));
        }
        (lo, hi)
    }

    /// Point location by boundary test, then winding number.
    pub fn locate(&self, p: &Point<S>) -> Location {
        if self.edges().any(|(a, b)| on_segment(p, a, b)) {
            return Location::Boundary;
        }
        if winding(self, p) != 0 {
            Location::Inside
        } else {
            Location::Outside
        }
    }

    /// Drops vertices where the boundary runs straight on, except those
    /// listed in `keep`. Returns the new polygon and, for every old index,
    /// its new index if kept.
    pub fn strip_collinear(&self, keep: &[usize]) -> (Self, Vec<Option<usize>>) {
        let n = self.0.len();
        let mut map = vec![None; n];
        let mut out = Vec::new();
        for i in 0..n {
            let prev = &self.0[(i + n - 1) % n];
            let next = &self.0[(i + 1) % n];
            let straight = orient(prev, &self.0[i], next) == Ordering::Equal
                && next.sub(&self.0[i]).dot(&self.0[i].sub(prev)).is_pos();
            if !straight || keep.contains(&i) {
                map[i] = Some(out.len());
                out.push(self.0[i].clone());
            }
        }
        (Polygon(out), map)
    }

    /// Subdivides edges so that every listed point on the boundary becomes
    /// a vertex.
    pub fn with_vertices_at(&self, pts: &[Point<S>]) -> Self {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            let on: Vec<Point<S>> = pts
                .iter()
                .filter(|p| on_segment(p, a, b) && !p.same(a) && !p.same(b))
                .cloned()
                .collect();
            for (s, _) in split_segment(a, b, &on) {
                out.push(s);
            }
        }
        Polygon(out)
    }

    pub fn to_f64(&self) -> Vec<(f64, f64)> {
        self.0.iter().map(|p| p.to_f64()).collect()
    }
}

pub(crate) fn winding<S: Scalar>(poly: &Polygon<S>, p: &Point<S>) -> i32 {
    let mut wn = 0;
    for (a, b) in poly.edges() {
        if a.y.cmp_s(&p.y) != Ordering::Greater {
            if b.y.cmp_s(&p.y) == Ordering::Greater && orient(a, b, p) == Ordering::Greater {
                wn += 1;
            }
        } else if b.y.cmp_s(&p.y) != Ordering::Greater && orient(a, b, p) == Ordering::Less {
            wn -= 1;
        }
    }
    wn
}

fn boxes_overlap<S: Scalar>(p: &Polygon<S>, q: &Polygon<S>) -> bool {
    let (plo, phi) = p.bbox();
    let (qlo, qhi) = q.bbox();
    plo.x.cmp_s(&qhi.x) == Ordering::Less
        && qlo.x.cmp_s(&phi.x) == Ordering::Less
        && plo.y.cmp_s(&qhi.y) == Ordering::Less
        && qlo.y.cmp_s(&phi.y) == Ordering::Less
}

/// Boundary contacts of every edge of `a` with the boundary loops `b`,
/// yielding sub-segments of `a`'s edges.
pub(crate) fn split_against<S: Scalar>(
    a: &Polygon<S>,
    loops: &[&Polygon<S>],
) -> Vec<(Point<S>, Point<S>)> {
    let mut out = Vec::new();
    for (p, q) in a.edges() {
        let mut cuts = Vec::new();
        for l in loops {
            for (c, d) in l.edges() {
                cuts.extend(segment_contacts(p, q, c, d));
            }
        }
        out.extend(split_segment(p, q, &cuts));
    }
    out
}

/// Direction of the loop edge that contains `m` in its interior, if any.
pub(crate) fn boundary_edge_dir<S: Scalar>(loops: &[&Polygon<S>], m: &Point<S>) -> Option<Point<S>> {
    for l in loops {
        for (c, d) in l.edges() {
            if on_segment(m, c, d) {
                return Some(d.sub(c));
            }
        }
    }
    None
}

/// True when the interiors of the two simple polygons intersect.
pub fn interiors_overlap<S: Scalar>(p: &Polygon<S>, q: &Polygon<S>) -> bool {
    if !boxes_overlap(p, q) {
        return false;
    }
    let p = p.ccw();
    let q = q.ccw();
    for (a, b) in [(&p, &q), (&q, &p)] {
        for (s, e) in split_against(a, &[b]) {
            let m = s.mid(&e);
            match b.locate(&m) {
                Location::Inside => return true,
                Location::Boundary => {
                    if let Some(dir) = boundary_edge_dir(&[b], &m) {
                        if dir.dot(&e.sub(&s)).is_pos() {
                            return true;
                        }
                    }
                }
                Location::Outside => {}
            }
        }
    }
    false
}
