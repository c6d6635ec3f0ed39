//! Chains between two regular polygons whose copies concatenate into
//! dissections of every polyform of either kind.

use serde::{Deserialize, Serialize};

use crate::dissect::family::{FamilySpec, LibraryBuilder, SplicePoints};
use crate::dissect::{HingeEnd, HingedDissection, Topology};
use crate::error::{Error, Result};
use crate::exactnum::{ApproxScalar, RigidMotion, Scalar};
use crate::geom::{Point, Polygon};

type A = ApproxScalar;

/// One of the two shapes an extendible chain folds into.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound(serialize = "S: Serialize", deserialize = "S: Deserialize<'de>"))]
pub struct Folding<S> {
    pub polygon: Polygon<S>,
    pub motions: Vec<RigidMotion<S>>,
}

/// A path dissection with its foldings into polygons `p` and `q`, whose
/// first and last pieces meet at `start` and `end` in both.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound(serialize = "S: Serialize", deserialize = "S: Deserialize<'de>"))]
pub struct ExtendibleChain<S> {
    pub chain: HingedDissection<S>,
    pub p: Folding<S>,
    pub q: Folding<S>,
    pub start: HingeEnd,
    pub end: HingeEnd,
}

fn pt(x: f64, y: f64) -> Point<A> {
    Point::new(ApproxScalar(x), ApproxScalar(y))
}

/// Foot of the perpendicular from `p` to the line `ab`.
fn foot(p: &Point<A>, a: &Point<A>, b: &Point<A>) -> Point<A> {
    let d = b.sub(a);
    let t = p.sub(a).dot(&d).div(&d.norm2()).expect("distinct points");
    a.add(&d.scale(&t))
}

/// Named points of the four-piece triangle-to-square dissection on the
/// unit-side triangle `A C B`.
struct Dudeney {
    a: Point<A>,
    b: Point<A>,
    c: Point<A>,
    d: Point<A>,
    e: Point<A>,
    j: Point<A>,
    k: Point<A>,
    l: Point<A>,
    m: Point<A>,
}

impl Dudeney {
    fn new() -> Self {
        let h = 3f64.sqrt() / 2.0;
        let (a, c, b) = (pt(0.0, 0.0), pt(1.0, 0.0), pt(0.5, h));
        let d = a.mid(&b);
        let e = b.mid(&c);
        // |EJ| equals the side of the square of equal area.
        let side2 = 3f64.sqrt() / 4.0;
        let ex = e.x.0;
        let jx = ex - (side2 - e.y.0 * e.y.0).sqrt();
        let j = pt(jx, 0.0);
        let k = pt(jx + 0.5, 0.0);
        let l = foot(&d, &e, &j);
        let m = foot(&k, &e, &j);
        Dudeney { a, b, c, d, e, j, k, l, m }
    }

    /// Square-folding motions for the pieces around `A`, around `C` and the
    /// small triangle.
    fn square_motions(&self) -> (RigidMotion<A>, RigidMotion<A>, RigidMotion<A>) {
        let ma = RigidMotion::half_turn(&self.d);
        let mc = RigidMotion::half_turn(&self.e);
        let far = self.e.scale(&ApproxScalar(2.0)).sub(&self.k);
        let mt = RigidMotion::half_turn(&far).compose(&mc);
        (ma, mc, mt)
    }

    fn triangle(&self) -> Polygon<A> {
        Polygon(vec![self.a.clone(), self.c.clone(), self.b.clone()])
    }

    fn square(&self) -> Polygon<A> {
        let (ma, mc, mt) = self.square_motions();
        Polygon(vec![ma.apply(&self.l), mt.apply(&self.m), mc.apply(&self.m), self.l.clone()]).ccw()
    }
}

/// The classic four-piece hinged triangle-to-square dissection as a path,
/// folded into the unit-side triangle and the square of equal area.
pub fn dudeney_chain() -> (HingedDissection<A>, Folding<A>, Folding<A>) {
    let g = Dudeney::new();
    let pieces = vec![
        (Polygon(vec![g.a.clone(), g.j.clone(), g.l.clone(), g.d.clone()]), 1, 3),
        (Polygon(vec![g.d.clone(), g.l.clone(), g.e.clone(), g.b.clone()]), 0, 2),
        (Polygon(vec![g.k.clone(), g.c.clone(), g.e.clone(), g.m.clone()]), 2, 0),
        (Polygon(vec![g.j.clone(), g.k.clone(), g.m.clone()]), 1, 0),
    ];
    let chain = HingedDissection::chain(pieces, Topology::Path);
    let id = RigidMotion::identity();
    let (ma, mc, mt) = g.square_motions();
    let tri = Folding { polygon: g.triangle(), motions: vec![id.clone(); 4] };
    let sq = Folding { polygon: g.square(), motions: vec![ma, id, mc, mt] };
    (chain, tri, sq)
}

/// The four-piece dissection with three extra cuts: the small triangle is
/// cut from the base midpoint to its right angle and to the midpoint of its
/// left leg, and the largest piece from its right angle to a point near the
/// apex. Seven pieces, ends meeting at the point `J` on the base.
pub fn dudeney_extendible_chain() -> ExtendibleChain<A> {
    let g = Dudeney::new();
    let n = g.a.mid(&g.c);
    let q = g.m.mid(&g.j);
    let bp = g.d.add(&g.b.sub(&g.d).scale(&ApproxScalar(0.9)));
    let pieces = vec![
        (Polygon(vec![g.a.clone(), g.j.clone(), g.l.clone(), g.d.clone()]), 1, 3),
        (Polygon(vec![g.d.clone(), g.l.clone(), bp.clone()]), 0, 1),
        (Polygon(vec![g.l.clone(), g.e.clone(), g.b.clone(), bp]), 0, 1),
        (Polygon(vec![g.k.clone(), g.c.clone(), g.e.clone(), g.m.clone()]), 2, 0),
        (Polygon(vec![n.clone(), g.k.clone(), g.m.clone()]), 1, 2),
        (Polygon(vec![n.clone(), g.m.clone(), q.clone()]), 1, 0),
        (Polygon(vec![g.j.clone(), n, q]), 1, 0),
    ];
    let chain = HingedDissection::chain(pieces, Topology::Path);
    let id = RigidMotion::identity();
    let (ma, mc, mt) = g.square_motions();
    ExtendibleChain {
        chain,
        p: Folding { polygon: g.triangle(), motions: vec![id.clone(); 7] },
        q: Folding { polygon: g.square(), motions: vec![ma, id.clone(), id, mc, mt.clone(), mt.clone(), mt] },
        start: HingeEnd { piece: 0, vertex: 1 },
        end: HingeEnd { piece: 6, vertex: 0 },
    }
}

impl<S: Scalar> ExtendibleChain<S> {
    fn hinge_points(&self, f: &Folding<S>) -> Vec<Point<S>> {
        self.chain
            .hinges
            .iter()
            .map(|h| f.motions[h.a.piece].apply(self.chain.anchor(h.a)))
            .collect()
    }

    /// Edges of the folding's polygon without a hinge at an end or at the
    /// midpoint.
    pub fn bare_edges(&self, f: &Folding<S>) -> Vec<usize> {
        let hs = self.hinge_points(f);
        f.polygon
            .edges()
            .enumerate()
            .filter(|(_, (a, b))| {
                let m = a.mid(b);
                !hs.iter().any(|h| h.same(a) || h.same(b) || h.same(&m))
            })
            .map(|(i, _)| i)
            .collect()
    }

    /// The three extendibility conditions.
    pub fn validate(&self) -> Result<()> {
        self.chain.validate()?;
        if self.chain.topology != Topology::Path {
            return Err(Error::Invalid("extendible chains are paths".into()));
        }
        let n = self.chain.len();
        if self.start.piece != 0 || self.end.piece != n - 1 {
            return Err(Error::Invalid("ends must lie on the first and last pieces".into()));
        }
        let (first_in, _) = self.chain.anchors(0);
        let (_, last_out) = self.chain.anchors(n - 1);
        if first_in.is_some() || last_out.is_some() {
            return Err(Error::Invalid("path ends carry hinges".into()));
        }
        for (name, f) in [("P", &self.p), ("Q", &self.q)] {
            if f.motions.len() != n {
                return Err(Error::Invalid(format!("folding {name} has {} motions", f.motions.len())));
            }
            let bare = self.bare_edges(f);
            if !bare.is_empty() {
                return Err(Error::Invalid(format!("edges {bare:?} of {name} carry no hinge")));
            }
            let s = f.motions[0].apply(self.chain.anchor(self.start));
            let e = f.motions[n - 1].apply(self.chain.anchor(self.end));
            if !s.same(&e) {
                return Err(Error::Invalid(format!("chain ends do not meet in {name}")));
            }
        }
        Ok(())
    }

    /// Family description whose base and cell templates are the chain
    /// folded into `P` (`into_q` false) or `Q`.
    pub fn spec(&self, into_q: bool) -> Result<FamilySpec<S>> {
        self.validate()?;
        let n = self.chain.len();
        let mut lib = LibraryBuilder::new();
        for i in 0..n {
            lib.declare(self.chain.pieces[i].clone(), self.inn(i), self.out(i));
        }
        let template = |lib: &mut LibraryBuilder<S>, f: &Folding<S>| {
            let pieces: Vec<_> = (0..n)
                .map(|i| (self.chain.pieces[i].transformed(&f.motions[i]), self.inn(i), self.out(i)))
                .collect();
            lib.template(vec![f.polygon.ccw()], &pieces)
        };
        let tp = template(&mut lib, &self.p);
        let tq = template(&mut lib, &self.q);
        let base = if into_q { tq.clone() } else { tp.clone() };
        Ok(FamilySpec {
            name: format!("extendible-{n}"),
            library: lib.library,
            base,
            cell_templates: vec![tp, tq],
            topology: Topology::Path,
            splice: SplicePoints::All,
        })
    }

    fn inn(&self, i: usize) -> usize {
        if i == 0 {
            self.start.vertex
        } else {
            self.chain.anchors(i).0.expect("interior piece")
        }
    }

    fn out(&self, i: usize) -> usize {
        if i + 1 == self.chain.len() {
            self.end.vertex
        } else {
            self.chain.anchors(i).1.expect("interior piece")
        }
    }
}

/// `n` copies of the chain joined end to start.
pub fn concat_extendible<S: Scalar>(c: &ExtendibleChain<S>, n: usize) -> Result<HingedDissection<S>> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    c.spec(false)?.dissection(n)
}
