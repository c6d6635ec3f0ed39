//! Hinged dissections that are universal for the lattice families.

use crate::dissect::family::{merge_across, regular_polygon, FamilySpec, LibraryBuilder, SplicePoints, Template};
use crate::dissect::{HingedDissection, Topology};
use crate::error::{Error, Result};
use crate::exactnum::{ExactScalar, RigidMotion, Scalar};
use crate::geom::{Point, Polygon};

type Piece<S> = (Polygon<S>, usize, usize);

fn p<S: Scalar>(x: S, y: S) -> Point<S> {
    Point::new(x, y)
}

fn q<S: Scalar>(n: i64, d: i64) -> S {
    S::from_ratio(n, d)
}

fn unit_square<S: Scalar>(x: i64, y: i64) -> Polygon<S> {
    Polygon(vec![Point::int(x, y), Point::int(x + 1, y), Point::int(x + 1, y + 1), Point::int(x, y + 1)])
}

/// Right isosceles triangle with unit legs, hinged at both ends of its
/// hypotenuse, apex to the left of travel.
fn half_square_piece<S: Scalar>() -> Piece<S> {
    let r2 = S::from_exact(&ExactScalar::sqrt2());
    let h = r2.half();
    (Polygon(vec![Point::origin(), p(r2, S::zero()), p(h.clone(), h)]), 0, 1)
}

/// The two half squares of the unit square split along the diagonal from
/// (0,0) to (1,1), as a two-piece cycle.
fn square_halves<S: Scalar>() -> [Piece<S>; 2] {
    [
        (Polygon(vec![Point::int(0, 0), Point::int(1, 0), Point::int(1, 1)]), 2, 0),
        (Polygon(vec![Point::int(1, 1), Point::int(0, 1), Point::int(0, 0)]), 2, 0),
    ]
}

pub fn polyomino_2n_spec<S: Scalar>() -> FamilySpec<S> {
    let mut lib = LibraryBuilder::new();
    let (t, i, o) = half_square_piece();
    lib.declare(t, i, o);
    let cell = lib.template(vec![unit_square(0, 0)], &square_halves());
    FamilySpec {
        name: "polyomino-2n".into(),
        library: lib.library,
        base: cell.clone(),
        cell_templates: vec![cell],
        topology: Topology::Cycle,
        splice: SplicePoints::Corners,
    }
}

pub fn polyomino_2nm2_spec<S: Scalar>() -> FamilySpec<S> {
    let mut lib = LibraryBuilder::new();
    let (t, i, o) = half_square_piece();
    lib.declare(t, i, o);
    let cell = lib.template(vec![unit_square(0, 0)], &square_halves());
    // The lower half square absorbs the slippery square to its right.
    let trapezoid = Polygon(vec![Point::int(0, 0), Point::int(2, 0), Point::int(2, 1), Point::int(1, 1)]);
    let base = lib.template(
        vec![unit_square(1, 0), unit_square(0, 0)],
        &[(trapezoid, 3, 0), square_halves()[1].clone()],
    );
    FamilySpec {
        name: "polyomino-2n-2".into(),
        library: lib.library,
        base,
        cell_templates: vec![cell],
        topology: Topology::Cycle,
        splice: SplicePoints::Corners,
    }
}

fn check_k<S: Scalar>(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::Invalid(format!("k = {k} is not a polygon")));
    }
    if S::EXACT && ![3, 4, 6].contains(&k) {
        return Err(Error::UnsupportedExact(format!("regular {k}-gons do not tile; use approx mode")));
    }
    Ok(())
}

struct KGon<S> {
    v: Vec<Point<S>>,
    c: Point<S>,
    poly: Polygon<S>,
}

impl<S: Scalar> KGon<S> {
    fn new(k: usize) -> Result<Self> {
        check_k::<S>(k)?;
        let poly = regular_polygon::<S>(k)?;
        Ok(KGon { v: poly.0.clone(), c: poly.vertex_average(), poly })
    }
    fn k(&self) -> usize {
        self.v.len()
    }
    fn vx(&self, i: usize) -> Point<S> {
        self.v[i % self.k()].clone()
    }
    /// Sectors `i..i+len` merged, hinged at the outer two vertices.
    fn fan(&self, i: usize, len: usize) -> Piece<S> {
        let mut pts: Vec<Point<S>> = (0..=len).map(|j| self.vx(i + j)).collect();
        pts.push(self.c.clone());
        (Polygon(pts), 0, len)
    }
    /// The neighbouring k-gon across edge 0, which is the slippery cell.
    fn below(&self) -> Polygon<S> {
        let m = self.v[0].mid(&self.v[1]);
        self.poly.transformed(&RigidMotion::half_turn(&m))
    }
    /// Merges the slippery cell into a piece whose edge 0 is the shared edge.
    fn absorb(&self, piece: &Piece<S>) -> Piece<S> {
        let (merged, map) = merge_across(&piece.0, 0, &self.below()).expect("shared edge");
        (merged, map[piece.1], map[piece.2])
    }
    /// Half decomposition starting at sector 0: a single sector first when
    /// k is odd, then doubles.
    fn halves(&self) -> Vec<Piece<S>> {
        let k = self.k();
        let mut out = Vec::new();
        let mut i = 0;
        if k % 2 == 1 {
            out.push(self.fan(0, 1));
            i = 1;
        }
        while i < k {
            out.push(self.fan(i, 2));
            i += 2;
        }
        out
    }
}

fn spec<S: Scalar>(
    name: String,
    lib: LibraryBuilder<S>,
    base: Template<S>,
    cell: Template<S>,
    splice: SplicePoints,
) -> FamilySpec<S> {
    FamilySpec {
        name,
        library: lib.library,
        base,
        cell_templates: vec![cell],
        topology: Topology::Cycle,
        splice,
    }
}

pub fn polyregular_kn_spec<S: Scalar>(k: usize) -> Result<FamilySpec<S>> {
    let g = KGon::<S>::new(k)?;
    let mut lib = LibraryBuilder::new();
    let sectors: Vec<_> = (0..k).map(|i| g.fan(i, 1)).collect();
    let cell = lib.template(vec![g.poly.clone()], &sectors);
    Ok(spec(format!("kn-{k}"), lib, cell.clone(), cell, SplicePoints::Corners))
}

pub fn polyregular_knmk_spec<S: Scalar>(k: usize) -> Result<FamilySpec<S>> {
    let g = KGon::<S>::new(k)?;
    let mut lib = LibraryBuilder::new();
    let sectors: Vec<_> = (0..k).map(|i| g.fan(i, 1)).collect();
    let cell = lib.template(vec![g.poly.clone()], &sectors);
    let mut base_pieces = sectors.clone();
    base_pieces[0] = g.absorb(&sectors[0]);
    let base = lib.template(vec![g.below(), g.poly.clone()], &base_pieces);
    Ok(spec(format!("kn-k-{k}"), lib, base, cell, SplicePoints::Corners))
}

pub fn polyregular_half_spec<S: Scalar>(k: usize) -> Result<FamilySpec<S>> {
    let g = KGon::<S>::new(k)?;
    let mut lib = LibraryBuilder::new();
    let cell = lib.template(vec![g.poly.clone()], &g.halves());
    Ok(spec(format!("half-{k}"), lib, cell.clone(), cell, SplicePoints::Corners))
}

pub fn polyregular_half_m1_spec<S: Scalar>(k: usize) -> Result<FamilySpec<S>> {
    let g = KGon::<S>::new(k)?;
    let mut lib = LibraryBuilder::new();
    let halves = g.halves();
    let cell = lib.template(vec![g.poly.clone()], &halves);
    let mut base_pieces = halves.clone();
    base_pieces[0] = g.absorb(&halves[0]);
    let base = lib.template(vec![g.below(), g.poly.clone()], &base_pieces);
    Ok(spec(format!("half-m1-{k}"), lib, base, cell, SplicePoints::Corners))
}

pub fn polyabolo_4n_spec<S: Scalar>() -> FamilySpec<S> {
    let a = Point::int(0, 0);
    let b = Point::int(1, 0);
    let c = Point::int(0, 1);
    let m = p(q(1, 2), q(1, 2));
    let mab = p(q(1, 2), S::zero());
    let mac = p(S::zero(), q(1, 2));
    let pieces = [
        (Polygon(vec![a.clone(), mab.clone(), m.clone()]), 2, 1),
        (Polygon(vec![mab.clone(), b.clone(), m.clone()]), 0, 2),
        (Polygon(vec![m.clone(), c.clone(), mac.clone()]), 0, 2),
        (Polygon(vec![a.clone(), m, mac]), 2, 1),
    ];
    let mut lib = LibraryBuilder::new();
    let cell = lib.template(vec![Polygon(vec![a, b, c])], &pieces);
    spec("polyabolo-4n".into(), lib, cell.clone(), cell, SplicePoints::Midpoint)
}

/// 2n right isosceles triangles hinged at hypotenuse ends; realizes every
/// n-omino.
pub fn h_polyomino_2n<S: Scalar>(n: usize) -> Result<HingedDissection<S>> {
    polyomino_2n_spec::<S>().dissection(n)
}

/// 2n - 2 pieces for n-ominoes, n >= 2.
pub fn h_polyomino_2nm2<S: Scalar>(n: usize) -> Result<HingedDissection<S>> {
    polyomino_2nm2_spec::<S>().dissection(n)
}

/// kn sector triangles for polyforms of regular k-gons.
pub fn h_polyregular_kn<S: Scalar>(k: usize, n: usize) -> Result<HingedDissection<S>> {
    polyregular_kn_spec::<S>(k)?.dissection(n)
}

/// kn - k + 1 pieces, n >= 2.
pub fn h_polyregular_knmk<S: Scalar>(k: usize, n: usize) -> Result<HingedDissection<S>> {
    polyregular_knmk_spec::<S>(k)?.dissection(n)
}

/// ceil(k/2) n pieces from merged sector pairs.
pub fn h_polyregular_half<S: Scalar>(k: usize, n: usize) -> Result<HingedDissection<S>> {
    polyregular_half_spec::<S>(k)?.dissection(n)
}

/// ceil(k/2) n - 1 pieces, n >= 2.
pub fn h_polyregular_half_m1<S: Scalar>(k: usize, n: usize) -> Result<HingedDissection<S>> {
    polyregular_half_m1_spec::<S>(k)?.dissection(n)
}

/// 4n pieces hinged at cell-edge midpoints; realizes every n-abolo.
pub fn h_polyabolo_4n<S: Scalar>(n: usize) -> Result<HingedDissection<S>> {
    polyabolo_4n_spec::<S>().dissection(n)
}
