//! One path of right isosceles triangles for ominoes at two scales, and
//! the polyabolo dissection seen as omino dissections.

use crate::dissect::family::fit_motion;
use crate::dissect::{h_polyabolo_4n, polyomino_2n_spec, HingedDissection, Topology};
use crate::error::{Error, Result};
use crate::exactnum::{ExactScalar, Scalar};
use crate::polyform::{Cell, Family, Polyform};
use crate::realize::{realize, realize_cells, FamilyId, Realization, Target};

/// `4n` right isosceles triangles with unit legs, hinged in a path at the
/// ends of their hypotenuses.
pub fn dual_omino_path<S: Scalar>(n: usize) -> Result<HingedDissection<S>> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let mut d = polyomino_2n_spec::<S>().dissection(2 * n)?;
    d.hinges.pop();
    d.topology = Topology::Path;
    Ok(d)
}

/// Realizes [`dual_omino_path`] on a `2n`-omino of unit squares or on an
/// `n`-omino of squares with side `√2`, chosen by the size of `target`.
pub fn realize_dual_omino<S: Scalar>(n: usize, target: &Polyform) -> Result<Realization<S>> {
    if target.family != Family::Omino {
        return Err(Error::Invalid("dual realization needs an omino target".into()));
    }
    let path = dual_omino_path::<S>(n)?;
    if target.len() == 2 * n {
        let r = realize::<S>(FamilyId::Polyomino2n, target)?;
        return Ok(Realization { family: "dual-omino".into(), dissection: path, ..r });
    }
    if target.len() != n {
        return Err(Error::Invalid(format!("target has {} cells, expected {n} or {}", target.len(), 2 * n)));
    }
    // Pairs of triangles merge into triangles with legs √2, which realize
    // the √2-scaled omino as the cyclic family does at unit scale.
    let r2 = S::from_exact(&ExactScalar::sqrt2());
    let spec = polyomino_2n_spec::<S>().scaled(&r2);
    let big = realize_cells(&spec, Target::scaled_polyform(target, &r2), &target.adjacency())?;
    let lib = &path.pieces[0];
    // Path piece: hypotenuse from vertex 0 to vertex 1, apex 2.
    let (li, lo, apex) = (0, 1, 2);
    let big_lib = &spec.library[0];
    let mut motions = Vec::with_capacity(4 * n);
    // Walk the big cycle backwards; each big triangle splits at its
    // altitude into two small ones hinged at its apex.
    for i in (0..big.motions.len()).rev() {
        let g = &big.motions[i];
        let bp = big_lib.polygon.transformed(g);
        let (p, q) = (bp.vertex(big_lib.inn).clone(), bp.vertex(big_lib.out).clone());
        let r = bp.vertex(3 - big_lib.inn - big_lib.out).clone();
        let o = p.mid(&q);
        for (a, b) in [(&q, &r), (&r, &p)] {
            let src = [lib.vertex(li).clone(), lib.vertex(lo).clone(), lib.vertex(apex).clone()];
            let dst = [a.clone(), b.clone(), o.clone()];
            let m = fit_motion(&src, &dst).ok_or_else(|| Error::Realize {
                step: i,
                reason: "half of a big triangle is not congruent to the path piece".into(),
            })?;
            motions.push(m);
        }
    }
    let trace = big.trace;
    Ok(Realization { family: "dual-omino".into(), dissection: path, motions, target: big.target, trace })
}

/// Abolo cells filling the square `(x, y)` of an omino drawn with side √2
/// and turned by 45°.
pub fn omino_as_abolo_quarters(f: &Polyform) -> Polyform {
    let mut cells = Vec::new();
    for c in &f.cells {
        let (u, v) = (c.x - c.y, c.x + c.y);
        cells.push(Cell { x: u, y: v, t: 3 });
        cells.push(Cell { x: u - 1, y: v, t: 2 });
        cells.push(Cell { x: u, y: v + 1, t: 0 });
        cells.push(Cell { x: u - 1, y: v + 1, t: 1 });
    }
    Polyform::new(Family::Abolo, cells)
}

/// Abolo cells splitting each unit square along its rising diagonal.
pub fn omino_as_abolo_halves(f: &Polyform) -> Polyform {
    let cells = f.cells.iter().flat_map(|c| [Cell { t: 1, ..*c }, Cell { t: 3, ..*c }]).collect();
    Polyform::new(Family::Abolo, cells)
}

/// The `16n`-piece polyabolo dissection realized on the straight `n`-omino
/// of √2-squares and on the straight `2n`-omino of unit squares.
pub fn realize_polyabolo_as_omino_bridge<S: Scalar>(n: usize) -> Result<(Realization<S>, Realization<S>)> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let small = Polyform::new(Family::Omino, (0..n as i32).map(|x| Cell { x, y: 0, t: 0 }).collect());
    let large = Polyform::new(Family::Omino, (0..2 * n as i32).map(|x| Cell { x, y: 0, t: 0 }).collect());
    realize_bridge_pair(&small, &large)
}

/// Realizes the polyabolo dissection on an `n`-omino of √2-squares and a
/// `2n`-omino of unit squares.
pub fn realize_bridge_pair<S: Scalar>(small: &Polyform, large: &Polyform) -> Result<(Realization<S>, Realization<S>)> {
    if small.family != Family::Omino || large.family != Family::Omino || large.len() != 2 * small.len() {
        return Err(Error::Invalid("bridge needs an n-omino and a 2n-omino".into()));
    }
    let a = realize::<S>(FamilyId::Polyabolo4n, &omino_as_abolo_quarters(small))?;
    let b = realize::<S>(FamilyId::Polyabolo4n, &omino_as_abolo_halves(large))?;
    debug_assert_eq!(a.dissection.len(), h_polyabolo_4n::<S>(4 * small.len())?.len());
    Ok((a, b))
}
