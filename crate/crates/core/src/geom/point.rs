use serde::{Deserialize, Serialize};

use crate::exactnum::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point<S> {
    pub fn new(x: S, y: S) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point::new(S::zero(), S::zero())
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point::new(S::from_int(x), S::from_int(y))
    }

    pub fn add(&self, o: &Self) -> Self {
        Point::new(self.x.add(&o.x), self.y.add(&o.y))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Point::new(self.x.sub(&o.x), self.y.sub(&o.y))
    }

    pub fn neg(&self) -> Self {
        Point::new(self.x.neg(), self.y.neg())
    }

    pub fn scale(&self, k: &S) -> Self {
        Point::new(self.x.mul(k), self.y.mul(k))
    }

    pub fn dot(&self, o: &Self) -> S {
        self.x.mul(&o.x).add(&self.y.mul(&o.y))
    }

    pub fn cross(&self, o: &Self) -> S {
        self.x.mul(&o.y).sub(&self.y.mul(&o.x))
    }

    pub fn norm2(&self) -> S {
        self.dot(self)
    }

    pub fn mid(&self, o: &Self) -> Self {
        self.add(o).scale(&S::from_ratio(1, 2))
    }

    /// Quarter turn counterclockwise.
    pub fn perp(&self) -> Self {
        Point::new(self.y.neg(), self.x.clone())
    }

    pub fn same(&self, o: &Self) -> bool {
        self.x.same(&o.x) && self.y.same(&o.y)
    }

    /// Lexicographic comparison.
    pub fn cmp_lex(&self, o: &Self) -> std::cmp::Ordering {
        self.x.cmp_s(&o.x).then_with(|| self.y.cmp_s(&o.y))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }

    pub fn key(&self) -> String {
        format!("({};{})", self.x.key(), self.y.key())
    }
}
