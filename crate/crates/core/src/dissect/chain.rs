//! Turning any connected hinged dissection into a cycle, and adding hinges
//! at polygon edge midpoints.

use std::collections::VecDeque;

use crate::dissect::cuts::{arc, cut_path, insert_point, split_at_ports, visible};
use crate::dissect::extendible::Folding;
use crate::dissect::{HingedDissection, Topology};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::geom::{Location, Point, Polygon};

/// A dissection derived by cutting pieces of another, with the original
/// piece each new piece was cut from. New pieces keep the original local
/// frames, so motions carry over through `origin`.
#[derive(Clone, Debug)]
pub struct Derived<S> {
    pub dissection: HingedDissection<S>,
    pub origin: Vec<usize>,
}

impl<S: Scalar> Derived<S> {
    pub fn lift<T: Clone>(&self, per_original: &[T]) -> Vec<T> {
        self.origin.iter().map(|&o| per_original[o].clone()).collect()
    }
}

#[derive(Clone, Copy, Debug)]
enum Port {
    /// Hinge to `(piece, vertex)` in the spanning tree.
    Tree(usize, usize),
    /// Extra cut end on a leaf piece.
    Aux,
}

/// Edge midpoint of `poly` farthest from vertex `v`, on an edge not
/// touching `v`.
fn far_midpoint<S: Scalar>(poly: &Polygon<S>, v: usize) -> Point<S> {
    let n = poly.len();
    let h = poly.vertex(v);
    (0..n)
        .filter(|&i| i != v && (i + 1) % n != v)
        .map(|i| poly.vertex(i).mid(poly.vertex(i + 1)))
        .max_by(|a, b| a.sub(h).norm2().cmp_s(&b.sub(h).norm2()))
        .expect("polygon has an edge away from each vertex")
}

/// Cyclic hinged dissection with at most `3n - 3` pieces that folds into
/// everything `h` folds into: cut every piece along interior lines ending
/// at its spanning-tree hinges, then walk around the tree.
pub fn chain_to_cycle_derived<S: Scalar>(h: &HingedDissection<S>) -> Result<Derived<S>> {
    let n = h.len();
    if n == 0 {
        return Err(Error::Invalid("empty dissection".into()));
    }
    if n == 1 {
        let dissection = HingedDissection { pieces: h.pieces.clone(), hinges: Vec::new(), topology: Topology::Cycle };
        return Ok(Derived { dissection, origin: vec![0] });
    }
    // Spanning tree by breadth-first search over hinges.
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut q = VecDeque::from([0]);
    let mut tree = Vec::new();
    while let Some(x) = q.pop_front() {
        for hg in &h.hinges {
            for (a, b) in [(hg.a, hg.b), (hg.b, hg.a)] {
                if a.piece == x && !seen[b.piece] {
                    seen[b.piece] = true;
                    tree.push((a, b));
                    q.push_back(b.piece);
                }
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Invalid("hinge graph is disconnected".into()));
    }
    let mut polys = h.pieces.clone();
    let mut ports: Vec<Vec<(usize, Port)>> = vec![Vec::new(); n];
    for &(a, b) in &tree {
        ports[a.piece].push((a.vertex, Port::Tree(b.piece, b.vertex)));
        ports[b.piece].push((b.vertex, Port::Tree(a.piece, a.vertex)));
    }
    for (i, ps) in ports.iter_mut().enumerate() {
        ps.sort_by_key(|p| p.0);
        if ps.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Invalid(format!("piece {i} has two tree hinges at one vertex")));
        }
    }
    // Leaves get a second cut end; with two pieces the second stays whole so
    // the count stays at 3n - 3.
    for i in 0..n {
        if ports[i].len() != 1 || (n == 2 && i == 1) {
            continue;
        }
        let v = ports[i][0].0;
        let m = far_midpoint(&polys[i], v);
        let (p2, at) = insert_point(&polys[i], &m).expect("midpoint is on the boundary");
        let remap = |x: usize| if x >= at { x + 1 } else { x };
        polys[i] = p2;
        ports[i][0].0 = remap(v);
        ports[i].push((at, Port::Aux));
        ports[i].sort_by_key(|p| p.0);
        // Neighbours refer to this piece's vertex indices.
        for j in 0..n {
            for p in ports[j].iter_mut() {
                if let Port::Tree(pc, pv) = &mut p.1 {
                    if *pc == i {
                        *pv = remap(*pv);
                    }
                }
            }
        }
    }
    // Parts of each piece.
    let mut parts: Vec<Vec<(Polygon<S>, usize, usize)>> = Vec::with_capacity(n);
    for i in 0..n {
        if ports[i].len() == 1 {
            let v = ports[i][0].0;
            parts.push(vec![(polys[i].clone(), v, v)]);
        } else {
            let idx: Vec<usize> = ports[i].iter().map(|p| p.0).collect();
            parts.push(split_at_ports(&polys[i], &idx)?);
        }
    }
    // Walk: part j of a piece ends at port j + 1, which leads to the part of
    // the neighbour starting at the same hinge.
    let total: usize = parts.iter().map(|p| p.len()).sum();
    let mut order = Vec::with_capacity(total);
    let (mut x, mut j) = (0usize, 0usize);
    loop {
        order.push((x, j));
        let d = ports[x].len();
        let (_, port) = ports[x][(j + 1) % d];
        (x, j) = match port {
            Port::Aux => (x, (j + 1) % d),
            Port::Tree(nb, nv) => (nb, ports[nb].iter().position(|p| p.0 == nv).expect("port on neighbour")),
        };
        if (x, j) == (0, 0) || order.len() > total {
            break;
        }
    }
    if order.len() != total {
        return Err(Error::Invalid("tree walk did not visit every part".into()));
    }
    let pieces = order.iter().map(|&(x, j)| parts[x][j].clone()).collect();
    let origin = order.iter().map(|&(x, _)| x).collect();
    Ok(Derived { dissection: HingedDissection::chain(pieces, Topology::Cycle), origin })
}

pub fn chain_to_cycle<S: Scalar>(h: &HingedDissection<S>) -> Result<HingedDissection<S>> {
    Ok(chain_to_cycle_derived(h)?.dissection)
}

/// Splits a cycle piece with hinges at vertices `a` (in) and `b` (out) by a
/// cut ending at boundary vertex `m`, so that the two halves are hinged at
/// `m`. Returns the halves in cycle order.
fn split_for_midpoint<S: Scalar>(
    poly: &Polygon<S>,
    a: usize,
    b: usize,
    m: usize,
) -> Result<[(Polygon<S>, usize, usize); 2]> {
    let n = poly.len();
    let pos = |i: usize| (i + n - a) % n;
    let pb = if a == b { n } else { pos(b) };
    let on_first = pos(m) < pb;
    // Cut end candidates on the other side, nearest first to the middle.
    let cands: Vec<usize> = if a == b {
        vec![a]
    } else if on_first {
        arc(poly, b, a)
    } else {
        arc(poly, a, b)
    };
    let r = cands
        .iter()
        .copied()
        .find(|&r| r != m && visible(poly, poly.vertex(m), poly.vertex(r)))
        .unwrap_or(if on_first || a == b { b } else { a });
    let path = cut_path(poly, m, r)?;
    let rev: Vec<Point<S>> = path.iter().rev().cloned().collect();
    let take = |idx: Vec<usize>| idx.iter().map(|&i| poly.vertex(i).clone()).collect::<Vec<_>>();
    let (x, y) = if a == b || on_first {
        // X: a .. m, cut back to r, r .. a.   Y: m .. r, cut back to m.
        let mut x = take(arc(poly, a, m));
        x.extend(path.iter().cloned());
        if r != a {
            let tail = arc(poly, r, a);
            x.extend(take(tail[..tail.len() - 1].to_vec()));
        }
        let mut y = take(arc(poly, m, r));
        y.extend(rev);
        (x, y)
    } else {
        // X: m .. a .. r, cut back to m.   Y: r .. m, cut back to r.
        let mut x = take(arc(poly, m, r));
        x.extend(rev);
        let mut y = take(arc(poly, r, m));
        y.extend(path.iter().cloned());
        (x, y)
    };
    let (px, py) = (Polygon(x), Polygon(y));
    let find = |p: &Polygon<S>, i: usize| p.vertex_index(poly.vertex(i)).expect("kept vertex");
    Ok([(px.clone(), find(&px, a), find(&px, m)), (py.clone(), find(&py, m), find(&py, b))])
}

/// Adds a hinge at the midpoint of every edge of every folding's polygon
/// that lacks one, cutting the piece whose boundary holds the midpoint.
pub fn add_midpoint_hinges_derived<S: Scalar>(h: &HingedDissection<S>, foldings: &[Folding<S>]) -> Result<Derived<S>> {
    if h.topology != Topology::Cycle {
        return Err(Error::Invalid("midpoint hinges need a cyclic dissection".into()));
    }
    let n = h.len();
    let mut cur: Vec<(Polygon<S>, usize, usize, usize)> = (0..n)
        .map(|i| {
            let (inn, out) = h.anchors(i);
            let inn = inn.ok_or_else(|| Error::Invalid(format!("piece {i} has no hinge")))?;
            let out = out.ok_or_else(|| Error::Invalid(format!("piece {i} has no hinge")))?;
            Ok((h.pieces[i].clone(), inn, out, i))
        })
        .collect::<Result<_>>()?;
    for (fi, f) in foldings.iter().enumerate() {
        if f.motions.len() != n {
            return Err(Error::Invalid(format!("folding {fi} has {} motions for {n} pieces", f.motions.len())));
        }
        for (a, b) in f.polygon.edges() {
            let m = a.mid(b);
            let hinged = cur.iter().any(|(p, _, out, o)| f.motions[*o].apply(p.vertex(*out)).same(&m));
            if hinged {
                continue;
            }
            let hit = cur
                .iter()
                .position(|(p, _, _, o)| p.transformed(&f.motions[*o]).locate(&m) == Location::Boundary)
                .ok_or_else(|| Error::Invalid(format!("edge midpoint of folding {fi} is on no piece")))?;
            let (poly, inn, out, o) = cur[hit].clone();
            let local = f.motions[o].inverse().apply(&m);
            let (poly2, mi) = insert_point(&poly, &local).expect("on boundary");
            let shift = |x: usize| if poly2.len() > poly.len() && x >= mi { x + 1 } else { x };
            let halves = split_for_midpoint(&poly2, shift(inn), shift(out), mi)?;
            let [x, y] = halves;
            cur.splice(hit..=hit, [(x.0, x.1, x.2, o), (y.0, y.1, y.2, o)]);
        }
    }
    let origin = cur.iter().map(|c| c.3).collect();
    let pieces = cur.into_iter().map(|(p, i, o, _)| (p, i, o)).collect();
    Ok(Derived { dissection: HingedDissection::chain(pieces, Topology::Cycle), origin })
}

pub fn add_midpoint_hinges<S: Scalar>(h: &HingedDissection<S>, foldings: &[Folding<S>]) -> Result<HingedDissection<S>> {
    Ok(add_midpoint_hinges_derived(h, foldings)?.dissection)
}
