//! Exact arithmetic in Q(√2, √3), 15° angles, rigid motions, and the
//! tolerance-based fallback scalar.

mod angle;
mod approx;
mod exact;
mod rat;
mod motion;
mod scalar;

pub use angle::Angle15;
pub use approx::{epsilon, set_epsilon, ApproxScalar, MarginScope, Margins, DEFAULT_EPSILON};
pub use exact::ExactScalar;
pub use motion::RigidMotion;
pub use scalar::Scalar;
