use std::cmp::Ordering;
use std::fmt;

use crate::error::Result;
use crate::exactnum::ExactScalar;

/// Number type the geometry, constructors and verifier are generic over.
///
/// Arithmetic goes through named methods so generic code never needs
/// operator bounds on references.
pub trait Scalar: Clone + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// True when every comparison is decided without tolerance.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn from_exact(x: &ExactScalar) -> Self;
    /// Lossy construction from a float. Exact scalars refuse.
    fn from_f64(x: f64) -> Option<Self>;

    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, o: &Self) -> Result<Self>;

    /// Sign relative to zero. Approximate scalars treat |x| <= eps as zero.
    fn signum(&self) -> Ordering;
    fn to_f64(&self) -> f64;

    /// cos and sin of `2*pi*num/den`, when representable.
    fn unit_vector(num: i64, den: i64) -> Option<(Self, Self)>;

    /// Canonical string used in signatures.
    fn key(&self) -> String;

    fn cmp_s(&self, o: &Self) -> Ordering {
        self.sub(o).signum()
    }
    fn same(&self, o: &Self) -> bool {
        self.cmp_s(o) == Ordering::Equal
    }
    fn is_zero(&self) -> bool {
        self.signum() == Ordering::Equal
    }
    fn is_pos(&self) -> bool {
        self.signum() == Ordering::Greater
    }
    fn is_neg(&self) -> bool {
        self.signum() == Ordering::Less
    }
    fn half(&self) -> Self {
        self.mul(&Self::from_ratio(1, 2))
    }
    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }
    fn min_s(&self, o: &Self) -> Self {
        if self.cmp_s(o) == Ordering::Greater {
            o.clone()
        } else {
            self.clone()
        }
    }
    fn max_s(&self, o: &Self) -> Self {
        if self.cmp_s(o) == Ordering::Less {
            o.clone()
        } else {
            self.clone()
        }
    }
}
