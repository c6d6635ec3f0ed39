//! Cutting a polygon into one piece per vertex, cyclically hinged at the
//! midpoints of its edges.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::dissect::family::{FamilySpec, LibraryBuilder, SplicePoints};
use crate::dissect::{HingedDissection, Topology};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::geom::predicates::{orient, segment_contacts};
use crate::geom::{Point, Polygon};

/// Rejects polygons with fewer than three corners, straight or repeated
/// vertices, or touching edges. Returns the counterclockwise copy.
pub fn check_simple<S: Scalar>(p: &Polygon<S>) -> Result<Polygon<S>> {
    let n = p.len();
    if n < 3 || p.area2().is_zero() {
        return Err(Error::Invalid("degenerate polygon".into()));
    }
    let p = p.ccw();
    for i in 0..n {
        if orient(p.vertex(i + n - 1), p.vertex(i), p.vertex(i + 1)) == Ordering::Equal {
            return Err(Error::Invalid(format!("vertex {i} is straight or repeated")));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            let c = segment_contacts(p.vertex(i), p.vertex(i + 1), p.vertex(j), p.vertex(j + 1));
            let allowed = if adjacent { 1 } else { 0 };
            if c.len() > allowed {
                return Err(Error::Invalid(format!("edges {i} and {j} touch")));
            }
        }
    }
    Ok(p)
}

/// Ear-clipping triangulation of a simple counterclockwise polygon.
pub fn triangulate<S: Scalar>(p: &Polygon<S>) -> Result<Vec<[usize; 3]>> {
    let mut idx: Vec<usize> = (0..p.len()).collect();
    let mut out = Vec::new();
    while idx.len() > 3 {
        let m = idx.len();
        let ear = (0..m).find(|&i| {
            let (a, b, c) = (idx[(i + m - 1) % m], idx[i], idx[(i + 1) % m]);
            let (pa, pb, pc) = (&p.0[a], &p.0[b], &p.0[c]);
            if orient(pa, pb, pc) != Ordering::Greater {
                return false;
            }
            idx.iter().all(|&o| {
                if o == a || o == b || o == c {
                    return true;
                }
                let q = &p.0[o];
                // Outside or strictly beyond some edge of the ear.
                orient(pa, pb, q) == Ordering::Less
                    || orient(pb, pc, q) == Ordering::Less
                    || orient(pc, pa, q) == Ordering::Less
            })
        });
        let i = ear.ok_or_else(|| Error::Invalid("polygon has no ear".into()))?;
        out.push([idx[(i + m - 1) % m], idx[i], idx[(i + 1) % m]]);
        idx.remove(i);
    }
    out.push([idx[0], idx[1], idx[2]]);
    Ok(out)
}

/// Cuts `p` into one piece per vertex: triangulate, join triangle centroids
/// to the midpoints of all triangle edges, and take the faces. Piece `i`
/// surrounds vertex `i` and is hinged to piece `i + 1` at the midpoint of
/// edge `i`.
pub fn cut_restricted<S: Scalar>(p: &Polygon<S>) -> Result<HingedDissection<S>> {
    let p = check_simple(p)?;
    let k = p.len();
    let tris = triangulate(&p)?;
    // Nodes: 0..k boundary midpoints, then one per diagonal, then centroids.
    let mut pts: Vec<Point<S>> = (0..k).map(|i| p.vertex(i).mid(p.vertex(i + 1))).collect();
    let mut diag: Vec<(usize, usize)> = Vec::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); k];
    let third = S::from_ratio(1, 3);
    for t in &tris {
        let c = t.iter().fold(Point::origin(), |acc, &v| acc.add(&p.0[v])).scale(&third);
        pts.push(c);
        adj.push(Vec::new());
        let ci = pts.len() - 1;
        for e in 0..3 {
            let (u, v) = (t[e], t[(e + 1) % 3]);
            let node = if (u + 1) % k == v {
                u
            } else if (v + 1) % k == u {
                v
            } else {
                let key = (u.min(v), u.max(v));
                match diag.iter().position(|d| *d == key) {
                    Some(j) => k + j,
                    None => {
                        diag.push(key);
                        pts.push(p.0[u].mid(&p.0[v]));
                        adj.push(Vec::new());
                        pts.len() - 1
                    }
                }
            };
            adj[ci].push(node);
            adj[node].push(ci);
        }
    }
    let pieces = (0..k)
        .map(|i| {
            let prev = (i + k - 1) % k;
            let mut poly = vec![pts[prev].clone(), p.vertex(i).clone(), pts[i].clone()];
            let path = tree_path(&adj, i, prev);
            for &node in &path[1..path.len() - 1] {
                poly.push(pts[node].clone());
            }
            (Polygon(poly), 0, 2)
        })
        .collect();
    Ok(HingedDissection::chain(pieces, Topology::Cycle))
}

pub(crate) fn tree_path(adj: &[Vec<usize>], from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; adj.len()];
    prev[from] = from;
    let mut q = VecDeque::from([from]);
    while let Some(x) = q.pop_front() {
        for &y in &adj[x] {
            if prev[y] == usize::MAX {
                prev[y] = x;
                q.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    let mut x = to;
    while x != from {
        x = prev[x];
        path.push(x);
    }
    path.reverse();
    path
}

pub fn restricted_spec<S: Scalar>(p: &Polygon<S>) -> Result<FamilySpec<S>> {
    let one = cut_restricted(p)?;
    let cell = p.ccw();
    let k = one.len();
    let pieces: Vec<_> = (0..k).map(|i| (one.pieces[i].clone(), 0, 2)).collect();
    let mut lib = LibraryBuilder::new();
    let t = lib.template(vec![cell], &pieces);
    Ok(FamilySpec {
        name: format!("restricted-{k}"),
        library: lib.library,
        base: t.clone(),
        cell_templates: vec![t],
        topology: Topology::Cycle,
        splice: SplicePoints::Midpoint,
    })
}

/// kn pieces: `n` copies of the cut-up of `p` in one cycle.
pub fn h_restricted<S: Scalar>(p: &Polygon<S>, n: usize) -> Result<HingedDissection<S>> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    restricted_spec(p)?.dissection(n)
}
