//! Builds realizations of the universal dissections on concrete targets.

mod dual;
mod engine;
mod types;

use std::fmt;
use std::str::FromStr;

pub use dual::{
    dual_omino_path, omino_as_abolo_halves, omino_as_abolo_quarters, realize_bridge_pair, realize_dual_omino,
    realize_polyabolo_as_omino_bridge,
};
pub use engine::realize_cells;
pub use types::{Realization, Target, TraceStep};

use crate::dissect::{self, ExtendibleChain, FamilySpec};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::dissect::family::same_polygon;
use crate::geom::Polygon;
use crate::polyform::{Family, Polyform, RestrictedForm};

/// A constructor together with its parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyId {
    Polyomino2n,
    Polyomino2nm2,
    Kn(usize),
    Knmk(usize),
    Half(usize),
    HalfM1(usize),
    Polyabolo4n,
}

impl FamilyId {
    pub fn spec<S: Scalar>(self) -> Result<FamilySpec<S>> {
        match self {
            FamilyId::Polyomino2n => Ok(dissect::polyomino_2n_spec()),
            FamilyId::Polyomino2nm2 => Ok(dissect::polyomino_2nm2_spec()),
            FamilyId::Kn(k) => dissect::polyregular_kn_spec(k),
            FamilyId::Knmk(k) => dissect::polyregular_knmk_spec(k),
            FamilyId::Half(k) => dissect::polyregular_half_spec(k),
            FamilyId::HalfM1(k) => dissect::polyregular_half_m1_spec(k),
            FamilyId::Polyabolo4n => Ok(dissect::polyabolo_4n_spec()),
        }
    }

    /// Lattice family whose forms this constructor realizes.
    pub fn target_family(self) -> Result<Family> {
        let k = match self {
            FamilyId::Polyomino2n | FamilyId::Polyomino2nm2 => return Ok(Family::Omino),
            FamilyId::Polyabolo4n => return Ok(Family::Abolo),
            FamilyId::Kn(k) | FamilyId::Knmk(k) | FamilyId::Half(k) | FamilyId::HalfM1(k) => k,
        };
        match k {
            3 => Ok(Family::Iamond),
            4 => Ok(Family::Omino),
            6 => Ok(Family::Hex),
            _ => Err(Error::Invalid(format!("regular {k}-gons have no lattice polyforms"))),
        }
    }

    /// Number of pieces for `n` cells.
    pub fn piece_count(self, n: usize) -> usize {
        let half = |k: usize| k.div_ceil(2);
        match self {
            FamilyId::Polyomino2n => 2 * n,
            FamilyId::Polyomino2nm2 => 2 * n.saturating_sub(1),
            FamilyId::Kn(k) => k * n,
            FamilyId::Knmk(k) => k * n.saturating_sub(1),
            FamilyId::Half(k) => half(k) * n,
            FamilyId::HalfM1(k) => half(k) * n.saturating_sub(1),
            FamilyId::Polyabolo4n => 4 * n,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Polyomino2n => write!(f, "polyomino_2n"),
            FamilyId::Polyomino2nm2 => write!(f, "polyomino_2nm2"),
            FamilyId::Kn(k) => write!(f, "polyregular_kn:{k}"),
            FamilyId::Knmk(k) => write!(f, "polyregular_knmk:{k}"),
            FamilyId::Half(k) => write!(f, "polyregular_half:{k}"),
            FamilyId::HalfM1(k) => write!(f, "polyregular_half_m1:{k}"),
            FamilyId::Polyabolo4n => write!(f, "polyabolo_4n"),
        }
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    /// Accepts `polyomino_2n`, `polyregular_kn:3` and the like.
    fn from_str(s: &str) -> Result<Self> {
        let (name, k) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b.parse::<usize>().map_err(|_| Error::Parse(format!("bad k in {s:?}")))?)),
            None => (s, None),
        };
        let need_k = || k.ok_or_else(|| Error::Parse(format!("{name} needs a parameter, as in {name}:3")));
        Ok(match name {
            "polyomino_2n" => FamilyId::Polyomino2n,
            "polyomino_2nm2" => FamilyId::Polyomino2nm2,
            "polyregular_kn" => FamilyId::Kn(need_k()?),
            "polyregular_knmk" => FamilyId::Knmk(need_k()?),
            "polyregular_half" => FamilyId::Half(need_k()?),
            "polyregular_half_m1" => FamilyId::HalfM1(need_k()?),
            "polyabolo_4n" => FamilyId::Polyabolo4n,
            _ => return Err(Error::Parse(format!("unknown family {s:?}"))),
        })
    }
}

/// Realizes the family's dissection for `target.len()` cells on `target`.
pub fn realize<S: Scalar>(family: FamilyId, target: &Polyform) -> Result<Realization<S>> {
    let fam = family.target_family()?;
    if fam != target.family {
        return Err(Error::Invalid(format!("{family} realizes {}s, not {}s", fam.name(), target.family.name())));
    }
    target.validate()?;
    let spec = family.spec::<S>()?;
    realize_cells(&spec, Target::from_polyform(target), &target.adjacency())
}

/// Realizes the restricted dissection of `base` on a restricted form.
pub fn realize_restricted<S: Scalar>(base: &Polygon<S>, target: &RestrictedForm<S>) -> Result<Realization<S>> {
    if !same_polygon(&base.ccw(), &target.base.ccw()) {
        return Err(Error::Invalid("target is made of a different polygon".into()));
    }
    let spec = dissect::restricted_spec(base)?;
    realize_cells(&spec, Target::from_restricted(target), &target.adjacency())
}

/// Realizes `n` concatenated copies of an extendible chain on a polyform
/// whose cells are congruent to one of the chain's two foldings.
pub fn realize_extendible<S: Scalar>(c: &ExtendibleChain<S>, target: &Polyform) -> Result<Realization<S>> {
    target.validate()?;
    let sides = target.family.sides();
    let into_q = if c.p.polygon.len() == sides {
        false
    } else if c.q.polygon.len() == sides {
        true
    } else {
        return Err(Error::Invalid(format!("chain folds into neither {}-gon", sides)));
    };
    let poly = if into_q { &c.q.polygon } else { &c.p.polygon };
    // Scale unit-side cells up to the folding's side length.
    let side2 = poly.vertex(1).sub(poly.vertex(0)).norm2();
    let k = if side2.same(&S::one()) {
        S::one()
    } else {
        S::from_f64(side2.to_f64().sqrt())
            .ok_or_else(|| Error::UnsupportedExact("irrational cell scale".into()))?
    };
    let spec = c.spec(into_q)?;
    realize_cells(&spec, Target::scaled_polyform(target, &k), &target.adjacency())
}
