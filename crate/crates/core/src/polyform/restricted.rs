use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exactnum::{RigidMotion, Scalar};
use crate::geom::predicates::{orient, segment_contacts};
use crate::geom::{interiors_overlap, Point, Polygon, Region};

/// A copy `p -> ±p + t` of the base polygon.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound(serialize = "S: Serialize", deserialize = "S: Deserialize<'de>"))]
pub struct Copy<S> {
    pub flipped: bool,
    pub t: Point<S>,
}

impl<S: Scalar> Copy<S> {
    pub fn motion(&self) -> RigidMotion<S> {
        let r = if self.flipped { S::from_int(-1) } else { S::one() };
        RigidMotion { t: self.t.clone(), ..RigidMotion::rotation(r, S::zero()) }
    }

    fn cmp(&self, o: &Self) -> Ordering {
        self.flipped.cmp(&o.flipped).then_with(|| self.t.cmp_lex(&o.t))
    }
}

/// A restricted polyform: copies of one polygon, each the half-turn image
/// of a neighbour about the midpoint of their shared edge.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound(serialize = "S: Serialize", deserialize = "S: Deserialize<'de>"))]
pub struct RestrictedForm<S> {
    pub base: Polygon<S>,
    pub copies: Vec<Copy<S>>,
}

impl<S: Scalar> RestrictedForm<S> {
    pub fn single(base: &Polygon<S>) -> Self {
        RestrictedForm { base: base.ccw(), copies: vec![Copy { flipped: false, t: Point::origin() }] }
    }

    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }

    pub fn cell_polygons(&self) -> Vec<Polygon<S>> {
        self.copies.iter().map(|c| self.base.transformed(&c.motion())).collect()
    }

    pub fn region(&self) -> Region<S> {
        Region::from_cells(&self.cell_polygons())
    }

    /// Translates so the first copy in sorted order sits at the origin.
    pub fn normalized(&self) -> Self {
        let mut copies = self.copies.clone();
        copies.sort_by(|a, b| a.cmp(b));
        let t0 = copies[0].t.clone();
        for c in copies.iter_mut() {
            c.t = c.t.sub(&t0);
        }
        RestrictedForm { base: self.base.clone(), copies }
    }

    pub fn key(&self) -> String {
        self.copies
            .iter()
            .map(|c| format!("{}{}", if c.flipped { '-' } else { '+' }, c.t.key()))
            .collect::<Vec<_>>()
            .join("|")
    }

    /// Index lists of copies sharing a full edge.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let polys = self.cell_polygons();
        (0..polys.len())
            .map(|i| {
                (0..polys.len())
                    .filter(|&j| j != i && share_full_edge(&polys[i], &polys[j]))
                    .collect()
            })
            .collect()
    }
}

pub(crate) fn share_full_edge<S: Scalar>(a: &Polygon<S>, b: &Polygon<S>) -> bool {
    a.edges().any(|(p, q)| b.edges().any(|(u, v)| u.same(q) && v.same(p)))
}

/// True when every boundary contact of positive length between the two
/// polygons is a complete common edge.
pub(crate) fn edge_to_edge<S: Scalar>(a: &Polygon<S>, b: &Polygon<S>) -> bool {
    for (p, q) in a.edges() {
        for (u, v) in b.edges() {
            if orient(p, q, u) != Ordering::Equal || orient(p, q, v) != Ordering::Equal {
                continue;
            }
            let contacts = segment_contacts(p, q, u, v);
            let long = contacts.iter().any(|x| !x.same(&contacts[0]));
            if long && !(u.same(q) && v.same(p)) {
                return false;
            }
        }
    }
    true
}

/// All restricted n-forms of `base`, distinct up to translation.
pub fn enumerate_restricted<S: Scalar>(base: &Polygon<S>, n: usize) -> Vec<RestrictedForm<S>> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeMap<String, RestrictedForm<S>> = BTreeMap::new();
    let one = RestrictedForm::single(base);
    level.insert(one.key(), one);
    for _ in 1..n {
        let mut next = BTreeMap::new();
        for f in level.values() {
            let polys = f.cell_polygons();
            for (ci, c) in f.copies.iter().enumerate() {
                for (a, b) in polys[ci].edges() {
                    let m2 = a.add(b);
                    let cand = Copy { flipped: !c.flipped, t: m2.sub(&c.t) };
                    if f.copies.iter().any(|o| o.flipped == cand.flipped && o.t.same(&cand.t)) {
                        continue;
                    }
                    let poly = f.base.transformed(&cand.motion());
                    let ok = polys
                        .iter()
                        .all(|p| !interiors_overlap(p, &poly) && edge_to_edge(p, &poly));
                    if !ok {
                        continue;
                    }
                    let mut copies = f.copies.clone();
                    copies.push(cand);
                    let g = RestrictedForm { base: f.base.clone(), copies }.normalized();
                    next.entry(g.key()).or_insert(g);
                }
            }
        }
        level = next;
    }
    level.into_values().collect()
}
