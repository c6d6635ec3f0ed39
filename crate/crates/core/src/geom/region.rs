use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::exactnum::Scalar;
use crate::geom::polygon::{boundary_edge_dir, split_against, winding};
use crate::geom::predicates::{cmp_angle_from, on_segment};
use crate::geom::{Location, Point, Polygon};

/// A planar region: outer loops counterclockwise, holes clockwise.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound(serialize = "S: Serialize", deserialize = "S: Deserialize<'de>"))]
pub struct Region<S> {
    pub loops: Vec<Polygon<S>>,
}

impl<S: Scalar> Region<S> {
    pub fn from_polygon(p: &Polygon<S>) -> Self {
        Region { loops: vec![p.ccw()] }
    }

    /// Union of edge-to-edge cells: shared edges cancel, the rest is linked
    /// into loops taking the sharpest left turn at pinch vertices.
    pub fn from_cells(cells: &[Polygon<S>]) -> Self {
        let mut edges: Vec<(Point<S>, Point<S>)> = Vec::new();
        for c in cells {
            for (a, b) in c.ccw().edges() {
                if let Some(k) = edges.iter().position(|(x, y)| x.same(b) && y.same(a)) {
                    edges.swap_remove(k);
                } else {
                    edges.push((a.clone(), b.clone()));
                }
            }
        }
        let mut loops = Vec::new();
        let mut used = vec![false; edges.len()];
        for start in 0..edges.len() {
            if used[start] {
                continue;
            }
            let mut lp = Vec::new();
            let mut cur = start;
            loop {
                used[cur] = true;
                let (a, b) = &edges[cur];
                lp.push(a.clone());
                let back = a.sub(b);
                let next = (0..edges.len())
                    .filter(|&k| !used[k] && edges[k].0.same(b))
                    .max_by(|&i, &j| {
                        cmp_angle_from(&back, &edges[i].1.sub(b), &edges[j].1.sub(b))
                    });
                match next {
                    Some(k) => cur = k,
                    None => break,
                }
            }
            loops.push(Polygon(lp));
        }
        Region { loops }
    }

    pub fn area(&self) -> S {
        self.loops.iter().fold(S::zero(), |acc, l| acc.add(&l.signed_area()))
    }

    pub fn holes(&self) -> usize {
        self.loops.iter().filter(|l| l.area2().is_neg()).count()
    }

    pub fn locate(&self, p: &Point<S>) -> Location {
        if self.loops.iter().any(|l| l.edges().any(|(a, b)| on_segment(p, a, b))) {
            return Location::Boundary;
        }
        let w: i32 = self.loops.iter().map(|l| winding(l, p)).sum();
        if w != 0 {
            Location::Inside
        } else {
            Location::Outside
        }
    }

    /// True when the polygon lies in the closed region.
    pub fn contains_polygon(&self, piece: &Polygon<S>) -> bool {
        let piece = piece.ccw();
        let loops: Vec<&Polygon<S>> = self.loops.iter().collect();
        for (s, e) in split_against(&piece, &loops) {
            let m = s.mid(&e);
            match self.locate(&m) {
                Location::Outside => return false,
                Location::Boundary => match boundary_edge_dir(&loops, &m) {
                    Some(dir) if dir.dot(&e.sub(&s)).signum() == Ordering::Greater => {}
                    _ => return false,
                },
                Location::Inside => {}
            }
        }
        for l in &self.loops {
            for (s, e) in split_against(l, &[&piece]) {
                if piece.locate(&s.mid(&e)) == Location::Inside {
                    return false;
                }
            }
        }
        true
    }
}
