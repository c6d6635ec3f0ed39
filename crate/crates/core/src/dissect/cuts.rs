//! Cutting a piece into parts along interior polylines between boundary
//! points.

use crate::dissect::restricted::{tree_path, triangulate};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::geom::predicates::{in_open_segment, on_segment, segments_cross};
use crate::geom::{Location, Point, Polygon};

/// Inserts `p` as a vertex when it lies inside an edge. Returns the new
/// polygon and the index of `p`.
pub fn insert_point<S: Scalar>(poly: &Polygon<S>, p: &Point<S>) -> Option<(Polygon<S>, usize)> {
    if let Some(i) = poly.vertex_index(p) {
        return Some((poly.clone(), i));
    }
    let n = poly.len();
    let i = (0..n).find(|&i| on_segment(p, poly.vertex(i), poly.vertex(i + 1)))?;
    let mut v = poly.0.clone();
    v.insert(i + 1, p.clone());
    Some((Polygon(v), i + 1))
}

/// Whether the open segment `pq` runs through the interior of `poly`.
pub fn visible<S: Scalar>(poly: &Polygon<S>, p: &Point<S>, q: &Point<S>) -> bool {
    if p.same(q) || poly.locate(&p.mid(q)) != Location::Inside {
        return false;
    }
    if poly.0.iter().any(|v| in_open_segment(v, p, q)) {
        return false;
    }
    !poly.edges().any(|(a, b)| segments_cross(a, b, p, q))
}

/// Interior points of a cut path from vertex `from` to vertex `to` through
/// the triangulation: vertex, triangle centroid, diagonal midpoints,
/// centroids, vertex.
fn network_path<S: Scalar>(poly: &Polygon<S>, from: usize, to: usize) -> Result<Vec<Point<S>>> {
    let n = poly.len();
    let tris = triangulate(poly)?;
    let third = S::from_ratio(1, 3);
    let mut pts: Vec<Point<S>> = poly.0.clone();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut diag: Vec<((usize, usize), usize)> = Vec::new();
    let mut first_tri: Vec<Option<usize>> = vec![None; n];
    for t in &tris {
        let c = t.iter().fold(Point::origin(), |acc, &v| acc.add(&poly.0[v])).scale(&third);
        pts.push(c);
        adj.push(Vec::new());
        let ci = pts.len() - 1;
        for e in 0..3 {
            first_tri[t[e]].get_or_insert(ci);
            let (u, v) = (t[e], t[(e + 1) % 3]);
            if (u + 1) % n == v || (v + 1) % n == u {
                continue;
            }
            let key = (u.min(v), u.max(v));
            let node = match diag.iter().find(|d| d.0 == key) {
                Some(d) => d.1,
                None => {
                    pts.push(poly.0[u].mid(&poly.0[v]));
                    adj.push(Vec::new());
                    diag.push((key, pts.len() - 1));
                    pts.len() - 1
                }
            };
            adj[ci].push(node);
            adj[node].push(ci);
        }
    }
    for v in [from, to] {
        let c = first_tri[v].ok_or_else(|| Error::Invalid("vertex outside triangulation".into()))?;
        adj[v].push(c);
        adj[c].push(v);
    }
    let path = tree_path(&adj, from, to);
    Ok(path[1..path.len() - 1].iter().map(|&i| pts[i].clone()).collect())
}

/// Interior points of a cut from vertex `from` to vertex `to`: the straight
/// segment when possible, otherwise a path through the triangulation.
pub fn cut_path<S: Scalar>(poly: &Polygon<S>, from: usize, to: usize) -> Result<Vec<Point<S>>> {
    if visible(poly, poly.vertex(from), poly.vertex(to)) {
        return Ok(Vec::new());
    }
    network_path(poly, from, to)
}

/// Vertex indices from `i` counterclockwise to `j`, both included.
pub fn arc<S>(poly: &Polygon<S>, i: usize, j: usize) -> Vec<usize> {
    let n = poly.0.len();
    let mut v = vec![i];
    let mut k = i;
    while k != j {
        k = (k + 1) % n;
        v.push(k);
    }
    v
}

fn pts<S: Scalar>(poly: &Polygon<S>, idx: &[usize]) -> Vec<Point<S>> {
    idx.iter().map(|&i| poly.vertex(i).clone()).collect()
}

/// Splits `poly` into one part per port, part `j` running along the
/// boundary from port `j` to port `j + 1` and back through the interior.
/// Ports must be distinct vertex indices in increasing order; there must be
/// at least two. Each part is returned with its first and last boundary
/// vertex as `(in, out)`.
pub fn split_at_ports<S: Scalar>(poly: &Polygon<S>, ports: &[usize]) -> Result<Vec<(Polygon<S>, usize, usize)>> {
    let d = ports.len();
    debug_assert!(d >= 2);
    // Try a single interior point seen from every port first.
    let mut centers = vec![poly.vertex_average(), poly.centroid()];
    if let Ok(tris) = triangulate(poly) {
        let third = S::from_ratio(1, 3);
        centers.extend(
            tris.iter().map(|t| t.iter().fold(Point::origin(), |acc, &v| acc.add(&poly.0[v])).scale(&third)),
        );
    }
    let star = centers.into_iter().find(|c| {
        poly.locate(c) == Location::Inside && ports.iter().all(|&p| visible(poly, c, poly.vertex(p)))
    });
    let mut out = Vec::with_capacity(d);
    for j in 0..d {
        let (s, e) = (ports[j], ports[(j + 1) % d]);
        let boundary = arc(poly, s, e);
        let back = if d == 2 {
            let path = cut_path(poly, e, s)?;
            if path.is_empty() {
                path
            } else if let Some(c) = &star {
                vec![c.clone()]
            } else {
                path
            }
        } else if let Some(c) = &star {
            vec![c.clone()]
        } else {
            network_path(poly, e, s)?
        };
        let mut v = pts(poly, &boundary);
        let last = v.len() - 1;
        v.extend(back);
        out.push((Polygon(v), 0, last));
    }
    Ok(out)
}
