use serde::{Deserialize, Serialize};

use crate::exactnum::Scalar;
use crate::geom::{Point, Polygon};

/// Lattice families. Polyabolo cells are half unit squares with legs 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Omino,
    Iamond,
    Hex,
    Abolo,
}

/// A lattice cell `(x, y, t)`.
///
/// * omino: unit square `[x, x+1] x [y, y+1]`, `t = 0`.
/// * iamond: `t = 0` up triangle at `x*a + y*b`, `t = 1` down triangle,
///   with `a = (1, 0)` and `b = (1/2, sqrt3/2)`.
/// * hex: flat-topped unit hexagon at axial `(q, r) = (x, y)`, `t = 0`.
/// * abolo: half of unit square `(x, y)` with its right angle at corner
///   `t` (0 = SW, 1 = SE, 2 = NE, 3 = NW).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
    pub t: u8,
}

impl Cell {
    pub const fn new(x: i32, y: i32, t: u8) -> Self {
        Cell { x, y, t }
    }
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Omino, Family::Iamond, Family::Hex, Family::Abolo];

    pub fn name(self) -> &'static str {
        match self {
            Family::Omino => "omino",
            Family::Iamond => "iamond",
            Family::Hex => "hex",
            Family::Abolo => "abolo",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }

    /// Number of sides of a cell.
    pub fn sides(self) -> usize {
        match self {
            Family::Omino => 4,
            Family::Iamond | Family::Abolo => 3,
            Family::Hex => 6,
        }
    }

    /// Number of lattice rotations (90 or 60 degree steps).
    pub fn rotations(self) -> usize {
        match self {
            Family::Omino | Family::Abolo => 4,
            Family::Iamond | Family::Hex => 6,
        }
    }

    pub fn cell_types(self) -> u8 {
        match self {
            Family::Omino | Family::Hex => 1,
            Family::Iamond => 2,
            Family::Abolo => 4,
        }
    }

    /// Counterclockwise cell polygon at unit scale.
    pub fn polygon<S: Scalar>(self, c: Cell) -> Polygon<S> {
        let (x, y) = (c.x as i64, c.y as i64);
        match self {
            Family::Omino => Polygon(vec![
                Point::int(x, y),
                Point::int(x + 1, y),
                Point::int(x + 1, y + 1),
                Point::int(x, y + 1),
            ]),
            Family::Abolo => {
                let sq = [
                    Point::int(x, y),
                    Point::int(x + 1, y),
                    Point::int(x + 1, y + 1),
                    Point::int(x, y + 1),
                ];
                let t = c.t as usize;
                Polygon(vec![sq[t].clone(), sq[(t + 1) % 4].clone(), sq[(t + 3) % 4].clone()])
            }
            Family::Iamond => {
                let h = S::from_exact(&crate::exactnum::ExactScalar::sqrt3()).half();
                let pt = |u: i64, v: i64| {
                    // u*a + v*b
                    Point::new(
                        S::from_int(u).add(&S::from_ratio(v, 2)),
                        S::from_int(v).mul(&h),
                    )
                };
                if c.t == 0 {
                    Polygon(vec![pt(x, y), pt(x + 1, y), pt(x, y + 1)])
                } else {
                    Polygon(vec![pt(x + 1, y), pt(x + 1, y + 1), pt(x, y + 1)])
                }
            }
            Family::Hex => {
                let s3 = S::from_exact(&crate::exactnum::ExactScalar::sqrt3());
                let h = s3.half();
                let cx = S::from_ratio(3 * x, 2);
                let cy = S::from_int(y).add(&S::from_ratio(x, 2)).mul(&s3);
                let half = S::from_ratio(1, 2);
                let one = S::one();
                let offs = [
                    (one.clone(), S::zero()),
                    (half.clone(), h.clone()),
                    (half.neg(), h.clone()),
                    (one.neg(), S::zero()),
                    (half.neg(), h.neg()),
                    (half, h.neg()),
                ];
                Polygon(offs.iter().map(|(dx, dy)| Point::new(cx.add(dx), cy.add(dy))).collect())
            }
        }
    }

    /// Cells sharing a full edge with `c`.
    pub fn neighbors(self, c: Cell) -> Vec<Cell> {
        let (x, y) = (c.x, c.y);
        match self {
            Family::Omino => vec![
                Cell::new(x + 1, y, 0),
                Cell::new(x - 1, y, 0),
                Cell::new(x, y + 1, 0),
                Cell::new(x, y - 1, 0),
            ],
            Family::Iamond => {
                if c.t == 0 {
                    vec![Cell::new(x, y - 1, 1), Cell::new(x, y, 1), Cell::new(x - 1, y, 1)]
                } else {
                    vec![Cell::new(x, y, 0), Cell::new(x + 1, y, 0), Cell::new(x, y + 1, 0)]
                }
            }
            Family::Hex => vec![
                Cell::new(x + 1, y, 0),
                Cell::new(x - 1, y, 0),
                Cell::new(x, y + 1, 0),
                Cell::new(x, y - 1, 0),
                Cell::new(x + 1, y - 1, 0),
                Cell::new(x - 1, y + 1, 0),
            ],
            Family::Abolo => {
                let me: Polygon<crate::exactnum::ExactScalar> = self.polygon(c);
                let mut out = Vec::new();
                for dx in -1..=1 {
                    for dy in -1..=1 {
                        for t in 0..4u8 {
                            let o = Cell::new(x + dx, y + dy, t);
                            if o == c {
                                continue;
                            }
                            let p: Polygon<crate::exactnum::ExactScalar> = self.polygon(o);
                            let shares = me.edges().any(|(a, b)| {
                                p.edges().any(|(u, v)| u.same(b) && v.same(a))
                            });
                            if shares {
                                out.push(o);
                            }
                        }
                    }
                }
                out
            }
        }
    }

    /// True when two distinct cells have overlapping interiors.
    pub fn cells_conflict(self, a: Cell, b: Cell) -> bool {
        match self {
            Family::Abolo => a.x == b.x && a.y == b.y && a.t != b.t && (a.t + b.t) % 2 == 1,
            _ => a == b,
        }
    }

    /// Counterclockwise rotation of a cell by one lattice step about the origin.
    pub fn rotate(self, c: Cell) -> Cell {
        match self {
            Family::Omino => Cell::new(-c.y - 1, c.x, 0),
            Family::Abolo => Cell::new(-c.y - 1, c.x, (c.t + 1) % 4),
            Family::Hex => Cell::new(-c.y, c.x + c.y, 0),
            Family::Iamond => {
                // Centroid in thirds of lattice units, rotated by a -> b, b -> b - a.
                let off = if c.t == 0 { 1 } else { 2 };
                let (u, v) = (3 * c.x + off, 3 * c.y + off);
                let (u2, v2) = (-v, u + v);
                let t = u2.rem_euclid(3);
                let off2 = if t == 1 { 1 } else { 2 };
                Cell::new((u2 - off2).div_euclid(3), (v2 - off2).div_euclid(3), (off2 - 1) as u8)
            }
        }
    }

    /// Translates by whole lattice steps.
    pub fn shift(self, c: Cell, dx: i32, dy: i32) -> Cell {
        Cell::new(c.x + dx, c.y + dy, c.t)
    }
}
