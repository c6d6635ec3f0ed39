use crate::dissect::{HingedDissection, Topology};
use crate::error::{Error, Result};
use crate::exactnum::{RigidMotion, Scalar};
use crate::geom::{Point, Polygon};

/// A piece shape with its entry and exit hinge vertices.
#[derive(Clone, Debug)]
pub struct LibPiece<S> {
    pub polygon: Polygon<S>,
    pub inn: usize,
    pub out: usize,
}

/// A library piece placed inside a template's reference cells.
#[derive(Clone, Debug)]
pub struct Placed<S> {
    pub lib: usize,
    pub motion: RigidMotion<S>,
}

/// Decomposition of one or two reference cells into a cyclic sequence of
/// library pieces. For two cells the first is the slippery cell.
#[derive(Clone, Debug)]
pub struct Template<S> {
    pub cells: Vec<Polygon<S>>,
    pub pieces: Vec<Placed<S>>,
}

/// Where new cells may be spliced on a shared edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplicePoints {
    Corners,
    Midpoint,
    All,
}

/// Everything the constructors and the realizer need about one family of
/// universal hinged dissections.
#[derive(Clone, Debug)]
pub struct FamilySpec<S> {
    pub name: String,
    pub library: Vec<LibPiece<S>>,
    pub base: Template<S>,
    pub cell_templates: Vec<Template<S>>,
    pub topology: Topology,
    pub splice: SplicePoints,
}

impl<S: Scalar> FamilySpec<S> {
    /// Number of cells covered by the base template.
    pub fn base_cells(&self) -> usize {
        self.base.cells.len()
    }

    /// Library id sequence of the canonical dissection for `n` cells.
    pub fn canonical_ids(&self, n: usize) -> Result<Vec<usize>> {
        let c = self.base_cells();
        if n < c {
            return Err(Error::Invalid(format!("{} needs at least {c} cells", self.name)));
        }
        let mut ids: Vec<usize> = self.base.pieces.iter().map(|p| p.lib).collect();
        let unit: Vec<usize> = self.cell_templates[0].pieces.iter().map(|p| p.lib).collect();
        for _ in c..n {
            ids.extend(&unit);
        }
        Ok(ids)
    }

    /// The canonical hinged dissection for `n` cells.
    pub fn dissection(&self, n: usize) -> Result<HingedDissection<S>> {
        let ids = self.canonical_ids(n)?;
        Ok(self.dissection_from_ids(&ids))
    }

    /// The same family with every length multiplied by `k`.
    pub fn scaled(&self, k: &S) -> Self {
        let poly = |p: &Polygon<S>| Polygon(p.0.iter().map(|v| v.scale(k)).collect());
        let tpl = |t: &Template<S>| Template {
            cells: t.cells.iter().map(poly).collect(),
            pieces: t
                .pieces
                .iter()
                .map(|pl| Placed { lib: pl.lib, motion: RigidMotion { t: pl.motion.t.scale(k), ..pl.motion.clone() } })
                .collect(),
        };
        FamilySpec {
            name: self.name.clone(),
            library: self
                .library
                .iter()
                .map(|l| LibPiece { polygon: poly(&l.polygon), inn: l.inn, out: l.out })
                .collect(),
            base: tpl(&self.base),
            cell_templates: self.cell_templates.iter().map(tpl).collect(),
            topology: self.topology,
            splice: self.splice,
        }
    }

    pub fn dissection_from_ids(&self, ids: &[usize]) -> HingedDissection<S> {
        let pieces = ids
            .iter()
            .map(|&i| {
                let l = &self.library[i];
                (l.polygon.clone(), l.inn, l.out)
            })
            .collect();
        HingedDissection::chain(pieces, self.topology)
    }
}

/// Builder that deduplicates congruent pieces (same anchors) into one
/// library entry.
pub struct LibraryBuilder<S> {
    pub library: Vec<LibPiece<S>>,
}

impl<S: Scalar> LibraryBuilder<S> {
    pub fn new() -> Self {
        LibraryBuilder { library: Vec::new() }
    }

    /// Registers a shape explicitly so later pieces match against it.
    pub fn declare(&mut self, polygon: Polygon<S>, inn: usize, out: usize) -> usize {
        self.library.push(LibPiece { polygon, inn, out });
        self.library.len() - 1
    }

    /// Finds or adds the library entry for a placed piece and returns its
    /// placement.
    pub fn place(&mut self, world: &Polygon<S>, inn: usize, out: usize) -> Placed<S> {
        for (id, l) in self.library.iter().enumerate() {
            if let Some(m) = fit_anchored(&l.polygon, l.inn, l.out, world, inn, out) {
                return Placed { lib: id, motion: m };
            }
        }
        let id = self.declare(world.clone(), inn, out);
        Placed { lib: id, motion: RigidMotion::identity() }
    }

    pub fn template(&mut self, cells: Vec<Polygon<S>>, pieces: &[(Polygon<S>, usize, usize)]) -> Template<S> {
        let pieces = pieces.iter().map(|(p, i, o)| self.place(p, *i, *o)).collect();
        Template { cells, pieces }
    }
}

impl<S: Scalar> Default for LibraryBuilder<S> {
    fn default() -> Self {
        Self::new()
    }
}

/// Rotation plus translation taking `src[i]` to `dst[i]` for all `i`.
pub fn fit_motion<S: Scalar>(src: &[Point<S>], dst: &[Point<S>]) -> Option<RigidMotion<S>> {
    if src.len() != dst.len() || src.len() < 2 {
        return None;
    }
    let u = src[1].sub(&src[0]);
    let w = dst[1].sub(&dst[0]);
    let l2 = u.norm2();
    if !l2.same(&w.norm2()) || l2.is_zero() {
        return None;
    }
    let c = u.dot(&w).div(&l2).ok()?;
    let s = u.cross(&w).div(&l2).ok()?;
    let r = RigidMotion::rotation(c, s);
    let t = dst[0].sub(&r.apply(&src[0]));
    let m = RigidMotion { t, ..r };
    if src.iter().zip(dst).all(|(p, q)| m.apply(p).same(q)) {
        Some(m)
    } else {
        None
    }
}

/// Motion taking polygon `a` onto polygon `b` with anchor `ai -> bi` and
/// `ao -> bo`.
pub fn fit_anchored<S: Scalar>(
    a: &Polygon<S>,
    ai: usize,
    ao: usize,
    b: &Polygon<S>,
    bi: usize,
    bo: usize,
) -> Option<RigidMotion<S>> {
    let n = a.len();
    if n != b.len() || (ao + n - ai) % n != (bo + n - bi) % n {
        return None;
    }
    fit_motion(&a.rotated_to(ai).0, &b.rotated_to(bi).0)
}

/// All orientation-preserving congruences taking polygon `a` onto `b`.
pub fn congruences<S: Scalar>(a: &Polygon<S>, b: &Polygon<S>) -> Vec<RigidMotion<S>> {
    let n = a.len();
    if n != b.len() {
        return Vec::new();
    }
    (0..n).filter_map(|s| fit_motion(&a.0, &b.rotated_to(s).0)).collect()
}

/// Same vertex cycle up to a cyclic shift.
pub fn same_polygon<S: Scalar>(a: &Polygon<S>, b: &Polygon<S>) -> bool {
    let n = a.len();
    n == b.len() && (0..n).any(|s| (0..n).all(|i| a.0[i].same(b.vertex(i + s))))
}

/// Regular k-gon with unit sides, first edge from the origin along +x.
pub fn regular_polygon<S: Scalar>(k: usize) -> Result<Polygon<S>> {
    if k < 3 {
        return Err(Error::Invalid(format!("k = {k} is not a polygon")));
    }
    let mut pts = vec![Point::origin()];
    for i in 0..k - 1 {
        let (c, s) = S::unit_vector(i as i64, k as i64)
            .ok_or_else(|| Error::UnsupportedExact(format!("regular {k}-gon")))?;
        let last = pts.last().expect("nonempty").clone();
        pts.push(last.add(&Point::new(c, s)));
    }
    Ok(Polygon(pts))
}

/// Replaces the edge `a[i] -> a[i+1]` of `a` by the boundary of `b`, which
/// must contain the reversed edge. Returns the merged polygon and the index
/// that `a`'s vertex `j` takes in it.
pub fn merge_across<S: Scalar>(a: &Polygon<S>, i: usize, b: &Polygon<S>) -> Option<(Polygon<S>, Vec<usize>)> {
    let n = a.len();
    let p = a.vertex(i).clone();
    let q = a.vertex(i + 1).clone();
    let m = b.len();
    let j = (0..m).find(|&j| b.vertex(j).same(&q) && b.vertex(j + 1).same(&p))?;
    let mut out = Vec::new();
    let mut map = vec![0; n];
    for k in 0..n {
        let idx = (i + 1 + k) % n;
        map[idx] = out.len();
        out.push(a.vertex(idx).clone());
        if idx == i {
            // walk b from p round to q, skipping both
            for t in 2..m {
                out.push(b.vertex(j + t).clone());
            }
        }
    }
    Some((Polygon(out), map))
}
