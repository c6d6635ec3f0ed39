use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{Angle15, ExactScalar, Scalar};
use crate::geom::Point;

/// Planar motion `p -> M p + t`.
///
/// Constructors only produce rotations. The matrix is stored in full so
/// that deserialized data can be checked for reflections or shears.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound(serialize = "S: Serialize", deserialize = "S: Deserialize<'de>"))]
pub struct RigidMotion<S> {
    pub m: [[S; 2]; 2],
    pub t: Point<S>,
}

impl<S: Scalar> RigidMotion<S> {
    pub fn identity() -> Self {
        Self::rotation(S::one(), S::zero())
    }

    /// Rotation about the origin by the angle with the given cos and sin.
    pub fn rotation(cos: S, sin: S) -> Self {
        RigidMotion {
            m: [[cos.clone(), sin.neg()], [sin, cos]],
            t: Point::origin(),
        }
    }

    pub fn translation(t: Point<S>) -> Self {
        RigidMotion { t, ..Self::identity() }
    }

    pub fn from_angle15(a: Angle15, t: Point<S>) -> Self {
        let r = Self::rotation(S::from_exact(&a.cos()), S::from_exact(&a.sin()));
        RigidMotion { t, ..r }
    }

    /// Rotation by `2*pi*num/den` about `center`.
    pub fn rotation_about(center: &Point<S>, num: i64, den: i64) -> Result<Self> {
        let (c, s) = S::unit_vector(num, den)
            .ok_or_else(|| Error::UnsupportedExact(format!("rotation by {num}/{den} turn")))?;
        Ok(Self::rotation_cs_about(center, c, s))
    }

    pub fn rotation_cs_about(center: &Point<S>, cos: S, sin: S) -> Self {
        let r = Self::rotation(cos, sin);
        let moved = r.apply(center);
        RigidMotion { t: center.sub(&moved), ..r }
    }

    /// Half turn about `center`.
    pub fn half_turn(center: &Point<S>) -> Self {
        Self::rotation_cs_about(center, S::from_int(-1), S::zero())
    }

    pub fn cos(&self) -> &S {
        &self.m[0][0]
    }

    pub fn sin(&self) -> &S {
        &self.m[1][0]
    }

    pub fn apply(&self, p: &Point<S>) -> Point<S> {
        Point::new(
            self.m[0][0].mul(&p.x).add(&self.m[0][1].mul(&p.y)).add(&self.t.x),
            self.m[1][0].mul(&p.x).add(&self.m[1][1].mul(&p.y)).add(&self.t.y),
        )
    }

    /// Applies only the linear part.
    pub fn apply_vec(&self, p: &Point<S>) -> Point<S> {
        Point::new(
            self.m[0][0].mul(&p.x).add(&self.m[0][1].mul(&p.y)),
            self.m[1][0].mul(&p.x).add(&self.m[1][1].mul(&p.y)),
        )
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let m = &self.m;
        let n = &other.m;
        let e = |i: usize, j: usize| m[i][0].mul(&n[0][j]).add(&m[i][1].mul(&n[1][j]));
        RigidMotion {
            m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
            t: self.apply(&other.t),
        }
    }

    /// Inverse of a rotation motion (transpose of the linear part).
    pub fn inverse(&self) -> Self {
        let mt = [
            [self.m[0][0].clone(), self.m[1][0].clone()],
            [self.m[0][1].clone(), self.m[1][1].clone()],
        ];
        let r = RigidMotion { m: mt, t: Point::origin() };
        let t = r.apply_vec(&self.t).neg();
        RigidMotion { t, ..r }
    }

    pub fn determinant(&self) -> S {
        self.m[0][0].mul(&self.m[1][1]).sub(&self.m[0][1].mul(&self.m[1][0]))
    }

    /// True when the linear part is a proper rotation.
    pub fn is_rotation(&self) -> bool {
        let [[a, b], [c, d]] = &self.m;
        a.same(d) && b.same(&c.neg()) && a.mul(a).add(&c.mul(c)).same(&S::one())
    }

    pub fn same(&self, o: &Self) -> bool {
        (0..2).all(|i| (0..2).all(|j| self.m[i][j].same(&o.m[i][j]))) && self.t.same(&o.t)
    }

    /// Angle in degrees, for display.
    pub fn degrees(&self) -> f64 {
        self.sin().to_f64().atan2(self.cos().to_f64()).to_degrees()
    }

    pub fn to_approx(&self) -> RigidMotion<crate::exactnum::ApproxScalar> {
        use crate::exactnum::ApproxScalar as A;
        let f = |s: &S| A(s.to_f64());
        RigidMotion {
            m: [[f(&self.m[0][0]), f(&self.m[0][1])], [f(&self.m[1][0]), f(&self.m[1][1])]],
            t: Point::new(f(&self.t.x), f(&self.t.y)),
        }
    }
}

impl RigidMotion<ExactScalar> {
    /// The rotation angle when it is a multiple of 15 degrees.
    pub fn angle15(&self) -> Option<Angle15> {
        if !self.is_rotation() {
            return None;
        }
        (0..24).map(Angle15::new).find(|a| a.cos() == self.m[0][0] && a.sin() == self.m[1][0])
    }
}
