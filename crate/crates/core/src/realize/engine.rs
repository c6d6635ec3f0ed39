//! Cell-by-cell construction of a realization by splicing template copies
//! into the hinge cycle at shared-edge hinge points.

use crate::dissect::family::{congruences, same_polygon, FamilySpec, Template};
use crate::dissect::{SplicePoints, Topology};
use crate::error::{Error, Result};
use crate::exactnum::{RigidMotion, Scalar};
use crate::geom::{Point, Polygon};
use crate::polyform::gluing_sequence;
use crate::realize::{Realization, Target, TraceStep};
use crate::verify::hinge_noncrossing_at_point;

/// Upper bound on explored search nodes before giving up.
const NODE_LIMIT: usize = 20_000;

#[derive(Clone, Debug)]
struct WPiece<S> {
    lib: usize,
    motion: RigidMotion<S>,
    poly: Polygon<S>,
    cell: usize,
}

#[derive(Clone, Debug)]
struct World<S> {
    pieces: Vec<WPiece<S>>,
    next: Vec<usize>,
    /// Link that is not a hinge (path topology).
    open: Option<usize>,
    /// Template frame to world, per covered cell.
    cell_motion: Vec<Option<RigidMotion<S>>>,
    trace: Vec<(TraceStep, Option<usize>)>,
}

struct Ctx<'a, S> {
    spec: &'a FamilySpec<S>,
    cells: &'a [Polygon<S>],
    nodes: usize,
}

impl<S: Scalar> World<S> {
    fn out_point(&self, spec: &FamilySpec<S>, x: usize) -> Point<S> {
        let l = &spec.library[self.pieces[x].lib];
        self.pieces[x].motion.apply(l.polygon.vertex(l.out))
    }

    /// Piece indices in link order, starting after the open link when there
    /// is one.
    fn order(&self) -> Vec<usize> {
        let start = self.open.map(|o| self.next[o]).unwrap_or(0);
        let mut v = vec![start];
        let mut x = self.next[start];
        while x != start {
            v.push(x);
            x = self.next[x];
        }
        v
    }

    fn ids(&self) -> Vec<usize> {
        self.order().iter().map(|&i| self.pieces[i].lib).collect()
    }

    fn add_template(&mut self, spec: &FamilySpec<S>, t: &Template<S>, g: &RigidMotion<S>, cell_of: &[usize]) -> usize {
        let base = self.pieces.len();
        for (i, pl) in t.pieces.iter().enumerate() {
            let motion = g.compose(&pl.motion);
            let poly = spec.library[pl.lib].polygon.transformed(&motion);
            let cell = cell_of.get(i).copied().unwrap_or(cell_of[0]);
            self.pieces.push(WPiece { lib: pl.lib, motion, poly, cell });
        }
        let m = t.pieces.len();
        for i in 0..m {
            self.next.push(base + (i + 1) % m);
        }
        base
    }

    /// Non-crossing of all closed links at `p`.
    fn noncrossing_at(&self, spec: &FamilySpec<S>, p: &Point<S>) -> bool {
        let mut ids: Vec<usize> = Vec::new();
        let mut links = Vec::new();
        for x in 0..self.pieces.len() {
            if Some(x) == self.open || !self.out_point(spec, x).same(p) {
                continue;
            }
            let y = self.next[x];
            for z in [x, y] {
                if !ids.contains(&z) {
                    ids.push(z);
                }
            }
            links.push((ids.iter().position(|&z| z == x).unwrap(), ids.iter().position(|&z| z == y).unwrap()));
        }
        if links.len() < 2 {
            return true;
        }
        let polys: Vec<&Polygon<S>> = ids.iter().map(|&i| &self.pieces[i].poly).collect();
        hinge_noncrossing_at_point(p, &polys, &links)
    }
}

fn matches_canonical(ids: &[usize], canon: &[usize], cyclic: bool) -> bool {
    let n = ids.len();
    if n != canon.len() {
        return false;
    }
    let shifts = if cyclic { n } else { 1 };
    (0..shifts).any(|r| (0..n).all(|i| ids[(i + r) % n] == canon[i]))
}

/// Shared edges of two cells as `(a, b)` in the child's orientation.
fn shared_edges<S: Scalar>(child: &Polygon<S>, parent: &Polygon<S>) -> Vec<(Point<S>, Point<S>)> {
    child
        .edges()
        .filter(|(a, b)| parent.edges().any(|(c, d)| c.same(b) && d.same(a)))
        .map(|(a, b)| (a.clone(), b.clone()))
        .collect()
}

fn case_label<S: Scalar>(child: &Polygon<S>, parent: &Polygon<S>, a: &Point<S>, b: &Point<S>, p: &Point<S>) -> String {
    let kind = if p.same(&a.mid(b)) { "midpoint" } else { "endpoint" };
    if child.len() != 3 || parent.len() != 3 {
        return kind.into();
    }
    // Right isosceles cells: hypotenuse is the longest edge.
    let longest = |q: &Polygon<S>| {
        q.edges().map(|(u, v)| v.sub(u).norm2()).fold(S::zero(), |m, x| m.max_s(&x))
    };
    let e = b.sub(a).norm2();
    if e.same(&longest(child)) && e.same(&longest(parent)) {
        return format!("{kind}:hyp-hyp");
    }
    // Far vertices on a common line through the shared edge end make a big
    // triangle; otherwise the union is a parallelogram.
    let far = |q: &Polygon<S>| q.0.iter().find(|v| !v.same(a) && !v.same(b)).cloned().expect("triangle");
    let (fc, fp) = (far(child), far(parent));
    let straight = [a, b].iter().any(|v| fc.sub(v).cross(&fp.sub(v)).is_zero());
    if straight {
        format!("{kind}:leg-leg-triangle")
    } else {
        format!("{kind}:leg-leg-parallelogram")
    }
}

fn template_for<'a, S: Scalar>(spec: &'a FamilySpec<S>, cell: &Polygon<S>) -> Option<&'a Template<S>> {
    spec.cell_templates.iter().find(|t| !congruences(&t.cells[0], cell).is_empty())
}

fn point_f64<S: Scalar>(p: &Point<S>) -> (f64, f64) {
    p.to_f64()
}

fn search<S: Scalar>(
    ctx: &mut Ctx<'_, S>,
    world: World<S>,
    steps: &[crate::polyform::GluingStep],
    done: usize,
) -> Option<World<S>> {
    ctx.nodes += 1;
    if ctx.nodes > NODE_LIMIT {
        return None;
    }
    if done == steps.len() {
        return Some(world);
    }
    let spec = ctx.spec;
    let step = steps[done];
    let c = step.cell;
    let par = step.parent.expect("non-root step has a parent");
    let child = &ctx.cells[c];
    let parent = &ctx.cells[par];
    let mut points = Vec::new();
    for (a, b) in shared_edges(child, parent) {
        let here = match spec.splice {
            SplicePoints::Corners => vec![a.clone(), b.clone()],
            SplicePoints::Midpoint => vec![a.mid(&b)],
            SplicePoints::All => vec![a.mid(&b), a.clone(), b.clone()],
        };
        points.extend(here.into_iter().map(|p| (p, a.clone(), b.clone())));
    }
    let t = template_for(spec, child)?;
    let gs = congruences(&t.cells[0], child);
    let sigmas = congruences(parent, child);
    let gp = world.cell_motion[par].clone();
    let canon = spec.canonical_ids(spec.base_cells() + done + 1).ok()?;
    let cyclic = spec.topology == Topology::Cycle;
    for (p, a, b) in &points {
        // Preferred placements: symmetries of the parent-child union fixing p.
        let mut order: Vec<usize> = (0..gs.len()).collect();
        let preferred = |g: &RigidMotion<S>| {
            gp.as_ref().is_some_and(|gp| {
                sigmas.iter().any(|s| s.apply(p).same(p) && s.compose(gp).same(g))
            })
        };
        order.sort_by_key(|&i| !preferred(&gs[i]));
        let mut hosts: Vec<usize> = (0..world.pieces.len())
            .filter(|&x| Some(x) != world.open && world.out_point(spec, x).same(p))
            .collect();
        hosts.sort_by_key(|&x| world.pieces[x].cell != par);
        for &gi in &order {
            let g = &gs[gi];
            let m = t.pieces.len();
            for k in 0..m {
                let l = &spec.library[t.pieces[k].lib];
                let tp = g.compose(&t.pieces[k].motion).apply(l.polygon.vertex(l.out));
                if !tp.same(p) {
                    continue;
                }
                for &x in &hosts {
                    let mut w = world.clone();
                    let y = w.next[x];
                    let base = w.add_template(spec, t, g, &[c]);
                    w.next[x] = base + (k + 1) % m;
                    w.next[base + k] = y;
                    if !matches_canonical(&w.ids(), &canon, cyclic) || !w.noncrossing_at(spec, p) {
                        continue;
                    }
                    w.cell_motion[c] = Some(g.clone());
                    let label = case_label(child, parent, a, b, p);
                    w.trace.push((
                        TraceStep { cell: c, parent: Some(par), point: Some(point_f64(p)), host: None, placement: gi, case: label },
                        Some(x),
                    ));
                    if let Some(done) = search(ctx, w, steps, done + 1) {
                        return Some(done);
                    }
                }
            }
        }
    }
    None
}

/// Realizes `spec` on the cells of `target` with the given cell adjacency.
pub fn realize_cells<S: Scalar>(spec: &FamilySpec<S>, target: Target<S>, adj: &[Vec<usize>]) -> Result<Realization<S>> {
    let cells = target.cells.clone();
    let n = cells.len();
    let c = spec.base_cells();
    let canon = spec.canonical_ids(n)?;
    if n == 0 || adj.len() != n {
        return Err(Error::Invalid("target has no cells or mismatched adjacency".into()));
    }
    let seq = gluing_sequence(adj);
    if seq.len() != n {
        return Err(Error::Invalid("target cells are not connected".into()));
    }
    // Base placements.
    let mut bases: Vec<(RigidMotion<S>, Vec<usize>)> = Vec::new();
    if c == 1 {
        for g in congruences(&spec.base.cells[0], &cells[seq[0].cell]) {
            bases.push((g, vec![seq[0].cell]));
        }
    } else if c == 2 && n >= 2 {
        let (p1, p2) = (seq[0].cell, seq[1].cell);
        for g in congruences(&spec.base.cells[1], &cells[p2]) {
            if same_polygon(&spec.base.cells[0].transformed(&g), &cells[p1]) {
                bases.push((g, vec![p1, p2]));
            }
        }
    }
    if bases.is_empty() {
        return Err(Error::Realize { step: 0, reason: "no placement of the base template".into() });
    }
    let mut ctx = Ctx { spec, cells: &cells, nodes: 0 };
    for (gi, (g, covered)) in bases.iter().enumerate() {
        let mut w = World { pieces: Vec::new(), next: Vec::new(), open: None, cell_motion: vec![None; n], trace: Vec::new() };
        // Pieces of the base lie in the cell containing their centroid.
        let owners: Vec<usize> = spec
            .base
            .pieces
            .iter()
            .map(|pl| {
                let poly = spec.library[pl.lib].polygon.transformed(&g.compose(&pl.motion));
                let ctr = poly.centroid();
                *covered.iter().find(|&&ci| cells[ci].locate(&ctr) != crate::geom::Location::Outside).unwrap_or(&covered[0])
            })
            .collect();
        w.add_template(spec, &spec.base, g, &owners);
        if spec.topology == Topology::Path {
            w.open = Some(spec.base.pieces.len() - 1);
        }
        for &ci in covered {
            w.cell_motion[ci] = Some(g.clone());
        }
        for s in &seq[..c] {
            w.trace.push((
                TraceStep { cell: s.cell, parent: s.parent, point: None, host: None, placement: gi, case: "base".into() },
                None,
            ));
        }
        if let Some(w) = search(&mut ctx, w, &seq[c..], 0) {
            return Ok(finish(spec, w, target, &canon));
        }
        if ctx.nodes > NODE_LIMIT {
            break;
        }
    }
    Err(Error::Realize { step: c, reason: format!("no splice sequence found for {}", spec.name) })
}

fn finish<S: Scalar>(spec: &FamilySpec<S>, w: World<S>, target: Target<S>, canon: &[usize]) -> Realization<S> {
    let mut order = w.order();
    if spec.topology == Topology::Cycle {
        let ids: Vec<usize> = order.iter().map(|&i| w.pieces[i].lib).collect();
        let n = ids.len();
        let r = (0..n).find(|&r| (0..n).all(|i| ids[(i + r) % n] == canon[i])).expect("matched before");
        order.rotate_left(r);
    }
    let mut pos = vec![0; w.pieces.len()];
    for (k, &i) in order.iter().enumerate() {
        pos[i] = k;
    }
    let dissection = spec.dissection_from_ids(canon);
    let motions = order.iter().map(|&i| w.pieces[i].motion.clone()).collect();
    let trace = w
        .trace
        .into_iter()
        .map(|(mut t, host)| {
            t.host = host.map(|h| pos[h]);
            t
        })
        .collect();
    Realization { family: spec.name.clone(), dissection, motions, target, trace }
}
