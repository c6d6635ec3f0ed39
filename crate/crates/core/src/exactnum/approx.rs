use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{ExactScalar, Scalar};

pub const DEFAULT_EPSILON: f64 = 1e-9;

static EPSILON_BITS: AtomicU64 = AtomicU64::new(0x3E11_2E0B_E826_D695); // 1e-9

/// Current comparison tolerance for [`ApproxScalar`].
pub fn epsilon() -> f64 {
    f64::from_bits(EPSILON_BITS.load(AtomicOrdering::Relaxed))
}

pub fn set_epsilon(eps: f64) {
    EPSILON_BITS.store(eps.to_bits(), AtomicOrdering::Relaxed);
}

/// Summary of tolerance decisions taken while a [`MarginScope`] was active.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Margins {
    /// Smallest magnitude among values judged nonzero.
    pub min_nonzero: f64,
    /// Largest magnitude among values judged zero.
    pub max_zero: f64,
    pub decisions: u64,
}

impl Default for Margins {
    fn default() -> Self {
        Margins { min_nonzero: f64::INFINITY, max_zero: 0.0, decisions: 0 }
    }
}

thread_local! {
    static MARGINS: RefCell<Option<Margins>> = const { RefCell::new(None) };
}

/// Records every approximate sign decision on this thread until finished.
pub struct MarginScope {
    prev: Option<Margins>,
}

impl MarginScope {
    pub fn start() -> Self {
        let prev = MARGINS.with(|m| m.borrow_mut().replace(Margins::default()));
        MarginScope { prev }
    }

    pub fn finish(self) -> Margins {
        let out = MARGINS.with(|m| m.borrow_mut().take()).unwrap_or_default();
        let prev = self.prev;
        MARGINS.with(|m| *m.borrow_mut() = prev);
        std::mem::forget(self);
        out
    }
}

impl Drop for MarginScope {
    fn drop(&mut self) {
        let prev = self.prev.take();
        MARGINS.with(|m| *m.borrow_mut() = prev);
    }
}

fn record(mag: f64, zero: bool) {
    MARGINS.with(|m| {
        if let Some(s) = m.borrow_mut().as_mut() {
            s.decisions += 1;
            if zero {
                s.max_zero = s.max_zero.max(mag);
            } else {
                s.min_nonzero = s.min_nonzero.min(mag);
            }
        }
    });
}

/// IEEE double with tolerance-based sign decisions.
#[derive(Clone, Copy, Default, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ApproxScalar(pub f64);

impl fmt::Display for ApproxScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for ApproxScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Scalar for ApproxScalar {
    const EXACT: bool = false;

    fn zero() -> Self {
        ApproxScalar(0.0)
    }
    fn one() -> Self {
        ApproxScalar(1.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        ApproxScalar(num as f64 / den as f64)
    }
    fn from_exact(x: &ExactScalar) -> Self {
        ApproxScalar(x.to_f64())
    }
    fn from_f64(x: f64) -> Option<Self> {
        Some(ApproxScalar(x))
    }
    fn add(&self, o: &Self) -> Self {
        ApproxScalar(self.0 + o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        ApproxScalar(self.0 - o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        ApproxScalar(self.0 * o.0)
    }
    fn neg(&self) -> Self {
        ApproxScalar(-self.0)
    }
    fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(ApproxScalar(self.0 / o.0))
        }
    }
    fn signum(&self) -> Ordering {
        let mag = self.0.abs();
        if mag <= epsilon() {
            record(mag, true);
            Ordering::Equal
        } else {
            record(mag, false);
            if self.0 > 0.0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
    }
    fn to_f64(&self) -> f64 {
        self.0
    }
    fn unit_vector(num: i64, den: i64) -> Option<(Self, Self)> {
        if den == 0 {
            return None;
        }
        if (24 * num) % den == 0 {
            let (c, s) = ExactScalar::unit_vector(num, den)?;
            return Some((ApproxScalar(c.to_f64()), ApproxScalar(s.to_f64())));
        }
        let t = std::f64::consts::TAU * num as f64 / den as f64;
        Some((ApproxScalar(t.cos()), ApproxScalar(t.sin())))
    }
    fn key(&self) -> String {
        // Rounded well above epsilon so tolerance-equal values share a key.
        let v = (self.0 * 1e6).round() / 1e6;
        let v = if v == 0.0 { 0.0 } else { v };
        format!("{v:.6}")
    }
}
