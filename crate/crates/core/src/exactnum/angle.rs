use serde::{Deserialize, Serialize};

use crate::exactnum::ExactScalar;

/// A multiple of 15 degrees, stored as steps modulo 24.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Angle15(u8);

impl Angle15 {
    pub fn new(steps: i32) -> Self {
        Angle15(steps.rem_euclid(24) as u8)
    }

    pub fn steps(self) -> i32 {
        self.0 as i32
    }

    pub fn degrees(self) -> i32 {
        15 * self.steps()
    }

    pub fn add(self, o: Angle15) -> Angle15 {
        Angle15::new(self.steps() + o.steps())
    }

    pub fn neg(self) -> Angle15 {
        Angle15::new(-self.steps())
    }

    /// Exact cosine via the quarter-turn table for 0..=90 degrees.
    pub fn cos(self) -> ExactScalar {
        let s = self.steps();
        match s {
            0..=6 => quarter_cos(s),
            7..=12 => -quarter_cos(12 - s),
            13..=18 => -quarter_cos(s - 12),
            _ => quarter_cos(24 - s),
        }
    }

    pub fn sin(self) -> ExactScalar {
        Angle15::new(6 - self.steps()).cos()
    }
}

fn quarter_cos(s: i32) -> ExactScalar {
    let q = |a: i64, b: i64, c: i64, d: i64, den: i64| {
        ExactScalar::from_parts((a, den), (b, den), (c, den), (d, den))
    };
    match s {
        0 => ExactScalar::int(1),
        // (sqrt6 + sqrt2)/4
        1 => q(0, 1, 0, 1, 4),
        2 => q(0, 0, 1, 0, 2),
        3 => q(0, 1, 0, 0, 2),
        4 => ExactScalar::ratio(1, 2),
        // (sqrt6 - sqrt2)/4
        5 => q(0, -1, 0, 1, 4),
        _ => ExactScalar::int(0),
    }
}
