//! Exhaustive search over hingings of unit squares: which polyominoes a
//! hinging of `n` squares can be rotated into, and the impossibility
//! certificate for pentominoes.

mod pentomino;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dissect::{Hinge, HingedDissection, Topology};
use crate::error::{Error, Result};
use crate::exactnum::{ExactScalar, RigidMotion, Scalar};
use crate::geom::{Point, Polygon, Region};
use crate::polyform::{enumerate_fixed, Cell, Family, Polyform};
use crate::verify::{verify_parts, VerificationReport};

pub use pentomino::{free_class, mirrored, pentomino, pentomino_name, PENTOMINO_NAMES};

/// Square corners, numbered counterclockwise from the lower left as the
/// vertices of the unit square polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Corner {
    SW,
    SE,
    NE,
    NW,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::SW, Corner::SE, Corner::NE, Corner::NW];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Lattice offset of the corner in an axis-aligned unit square.
    fn offset(k: usize) -> (i32, i32) {
        [(0, 0), (1, 0), (1, 1), (0, 1)][k % 4]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SquareHinge {
    pub i: usize,
    pub ci: Corner,
    pub j: usize,
    pub cj: Corner,
}

/// `n` unit squares joined by hinges at corners.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SquareHinging {
    pub n: usize,
    pub hinges: Vec<SquareHinge>,
}

impl SquareHinging {
    pub fn validate(&self) -> Result<()> {
        for h in &self.hinges {
            if h.i >= self.n || h.j >= self.n {
                return Err(Error::Invalid(format!("hinge names square beyond {}", self.n)));
            }
            if h.i == h.j {
                return Err(Error::Invalid(format!("hinge joins square {} to itself", h.i)));
            }
        }
        if !self.dissection::<ExactScalar>().is_connected() {
            return Err(Error::Invalid("hinge graph is disconnected".into()));
        }
        Ok(())
    }

    /// Squares at `(i, 0)` in local coordinates, i.e. laid out as the
    /// straight polyomino.
    pub fn dissection<S: Scalar>(&self) -> HingedDissection<S> {
        let pieces = (0..self.n).map(|i| Family::Omino.polygon(Cell::new(i as i32, 0, 0))).collect();
        let hinges = self.hinges.iter().map(|h| Hinge::new(h.i, h.ci.index(), h.j, h.cj.index())).collect();
        HingedDissection { pieces, hinges, topology: Topology::Graph }
    }

    /// Short label listing, per hinge, the squares and corners.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.hinges.iter().map(|h| format!("{}{:?}-{}{:?}", h.i, h.ci, h.j, h.cj)).collect();
        parts.join(" ")
    }
}

/// Hinges between consecutive squares of a row: for each adjacent pair a
/// nonempty subset of the two shared corners. `3^(n-1)` hingings, with the
/// first pair varying slowest.
pub fn enumerate_chain_hingings(n: usize) -> Vec<SquareHinging> {
    let pairs = n.saturating_sub(1);
    let total = 3usize.pow(pairs as u32);
    (0..total)
        .map(|code| {
            let mut hinges = Vec::new();
            for i in 0..pairs {
                let digit = code / 3usize.pow((pairs - 1 - i) as u32) % 3;
                let top = SquareHinge { i, ci: Corner::NE, j: i + 1, cj: Corner::NW };
                let bottom = SquareHinge { i, ci: Corner::SE, j: i + 1, cj: Corner::SW };
                match digit {
                    0 => hinges.push(top),
                    1 => hinges.push(bottom),
                    _ => hinges.extend([top, bottom]),
                }
            }
            SquareHinging { n, hinges }
        })
        .collect()
}

/// Placement of square `i` on a target cell with `rotation` quarter turns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SquarePlacement {
    pub cell: Cell,
    pub rotation: u8,
}

impl SquarePlacement {
    /// Lattice point of the square's local corner `c`.
    fn corner(&self, c: Corner) -> (i32, i32) {
        let (dx, dy) = Corner::offset(c.index() + self.rotation as usize);
        (self.cell.x + dx, self.cell.y + dy)
    }

    /// Motion taking square `i` from its local frame onto the cell.
    pub fn motion<S: Scalar>(&self, i: usize) -> RigidMotion<S> {
        let (c, s) = [(1, 0), (0, 1), (-1, 0), (0, -1)][self.rotation as usize % 4];
        let rot = RigidMotion::rotation(S::from_int(c), S::from_int(s));
        let (x, y) = self.corner(Corner::SW);
        let to = RigidMotion::translation(Point::int(x as i64, y as i64));
        let from = RigidMotion::translation(Point::int(-(i as i64), 0));
        to.compose(&rot).compose(&from)
    }
}

/// Outcome of the search for one target.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub target: Polyform,
    /// Placements of every square in the first configuration found that
    /// passes the full verifier.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<SquarePlacement>>,
    /// Search tree nodes visited.
    pub nodes: u64,
    /// Complete assignments rejected by the verifier.
    pub rejected: u64,
}

impl SearchOutcome {
    pub fn realizable(&self) -> bool {
        self.witness.is_some()
    }
}

/// Options for [`find_configuration`].
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchOptions {
    /// Square whose rotation is held at zero.
    pub fixed_orientation: Option<usize>,
}

struct Dfs<'a> {
    h: &'a SquareHinging,
    cells: &'a [Cell],
    order: Vec<usize>,
    /// For each square after the first in `order`, a hinge to an earlier one.
    link: Vec<Option<SquareHinge>>,
    opts: SearchOptions,
    used: Vec<bool>,
    place: Vec<Option<SquarePlacement>>,
    nodes: u64,
    rejected: u64,
    region: Region<ExactScalar>,
    dissection: HingedDissection<ExactScalar>,
}

impl Dfs<'_> {
    fn rotations(&self, sq: usize) -> std::ops::Range<u8> {
        if self.opts.fixed_orientation == Some(sq) {
            0..1
        } else {
            0..4
        }
    }

    fn hinges_hold(&self, sq: usize) -> bool {
        self.h.hinges.iter().all(|hg| {
            if hg.i != sq && hg.j != sq {
                return true;
            }
            match (self.place[hg.i], self.place[hg.j]) {
                (Some(a), Some(b)) => a.corner(hg.ci) == b.corner(hg.cj),
                _ => true,
            }
        })
    }

    fn try_place(&mut self, depth: usize, sq: usize, p: SquarePlacement) -> bool {
        let Some(ci) = self.cells.iter().position(|&c| c == p.cell) else {
            return false;
        };
        if self.used[ci] {
            return false;
        }
        self.used[ci] = true;
        self.place[sq] = Some(p);
        let found = self.hinges_hold(sq) && self.go(depth + 1);
        if !found {
            self.place[sq] = None;
            self.used[ci] = false;
        }
        found
    }

    fn go(&mut self, depth: usize) -> bool {
        self.nodes += 1;
        if depth == self.order.len() {
            return self.leaf();
        }
        let sq = self.order[depth];
        match self.link[depth] {
            None => {
                for ci in 0..self.cells.len() {
                    for r in self.rotations(sq) {
                        if self.try_place(depth, sq, SquarePlacement { cell: self.cells[ci], rotation: r }) {
                            return true;
                        }
                    }
                }
                false
            }
            Some(hg) => {
                // The hinge pins one corner of the new square to a known point.
                let (other, oc, mine) = if hg.i == sq { (hg.j, hg.cj, hg.ci) } else { (hg.i, hg.ci, hg.cj) };
                let (px, py) = self.place[other].expect("placed earlier").corner(oc);
                for r in self.rotations(sq) {
                    let (dx, dy) = Corner::offset(mine.index() + r as usize);
                    let p = SquarePlacement { cell: Cell::new(px - dx, py - dy, 0), rotation: r };
                    if self.try_place(depth, sq, p) {
                        return true;
                    }
                }
                false
            }
        }
    }

    fn motions(&self) -> Vec<RigidMotion<ExactScalar>> {
        self.place.iter().enumerate().map(|(i, p)| p.expect("complete").motion(i)).collect()
    }

    fn leaf(&mut self) -> bool {
        let ok = verify_parts(&self.dissection, &self.motions(), &self.region).passed();
        if !ok {
            self.rejected += 1;
        }
        ok
    }
}

/// Searches every assignment of squares to target cells and rotations that
/// keeps hinged corners together, returning the first one that passes the
/// full verifier.
pub fn find_configuration(h: &SquareHinging, target: &Polyform, opts: SearchOptions) -> Result<SearchOutcome> {
    h.validate()?;
    if target.family != Family::Omino || target.len() != h.n {
        return Err(Error::Invalid(format!("target must be a {}-omino", h.n)));
    }
    // Breadth-first order so every square after the first has a placed
    // neighbour.
    let mut order = vec![0usize];
    let mut link = vec![None];
    let mut seen = vec![false; h.n];
    seen[0] = true;
    let mut k = 0;
    while k < order.len() {
        let x = order[k];
        for hg in &h.hinges {
            for (a, b) in [(hg.i, hg.j), (hg.j, hg.i)] {
                if a == x && !seen[b] {
                    seen[b] = true;
                    order.push(b);
                    link.push(Some(*hg));
                }
            }
        }
        k += 1;
    }
    let mut dfs = Dfs {
        h,
        cells: &target.cells,
        order,
        link,
        opts,
        used: vec![false; h.n],
        place: vec![None; h.n],
        nodes: 0,
        rejected: 0,
        region: target.region(),
        dissection: h.dissection(),
    };
    let found = dfs.go(0);
    let witness = found.then(|| dfs.place.iter().map(|p| p.expect("complete")).collect());
    Ok(SearchOutcome { target: target.clone(), witness, nodes: dfs.nodes, rejected: dfs.rejected })
}

/// Verifier report for a witness configuration.
pub fn verify_witness(h: &SquareHinging, target: &Polyform, witness: &[SquarePlacement]) -> VerificationReport {
    let motions: Vec<RigidMotion<ExactScalar>> = witness.iter().enumerate().map(|(i, p)| p.motion(i)).collect();
    verify_parts(&h.dissection(), &motions, &target.region())
}

/// Search outcome for each target, in order.
pub fn search_targets(h: &SquareHinging, targets: &[Polyform], opts: SearchOptions) -> Result<Vec<SearchOutcome>> {
    targets.iter().map(|t| find_configuration(h, t, opts)).collect()
}

/// The targets `h` can be rotated into. Rotating a configuration rotates
/// its target, so each fixed form stands for its whole rotation class.
pub fn realizable_set(h: &SquareHinging, targets: &[Polyform]) -> Result<Vec<Polyform>> {
    Ok(search_targets(h, targets, SearchOptions::default())?
        .into_iter()
        .filter(|o| o.realizable())
        .map(|o| o.target)
        .collect())
}

/// Verdict on one hinging of five squares.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HingingVerdict {
    pub hinging: SquareHinging,
    /// Per pentomino name, the outcome for its representative and for its
    /// mirror image.
    pub outcomes: Vec<(String, SearchOutcome, SearchOutcome)>,
    /// Free pentominoes no chirality of which is realizable.
    pub unrealizable: Vec<String>,
}

impl HingingVerdict {
    /// Fails on at least one free pentomino.
    pub fn impossible(&self) -> bool {
        !self.unrealizable.is_empty()
    }

    pub fn witness(&self) -> Option<&str> {
        self.unrealizable.first().map(String::as_str)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LowerBoundCertificate {
    /// The scope of the search.
    pub restriction: String,
    pub verdicts: Vec<HingingVerdict>,
    /// Every hinging fails on some pentomino.
    pub impossible: bool,
    pub total_nodes: u64,
}

pub const CHAIN_RESTRICTION: &str = "hingings of five unit squares with hinges at square corners only; \
a hinging that folds into the I-pentomino is a chain of squares in row order with hinges at the shared \
corners of consecutive squares, which leaves 3^4 = 81 hingings; a free pentomino counts as realized when \
the hinging rotates into it or into its mirror image";

fn verdict(h: &SquareHinging) -> Result<HingingVerdict> {
    let opts = SearchOptions::default();
    let mut outcomes = Vec::new();
    let mut unrealizable = Vec::new();
    for name in PENTOMINO_NAMES {
        let rep = pentomino(name).expect("known name");
        let a = find_configuration(h, &rep, opts)?;
        let b = find_configuration(h, &mirrored(&rep), opts)?;
        if !a.realizable() && !b.realizable() {
            unrealizable.push(name.to_string());
        }
        outcomes.push((name.to_string(), a, b));
    }
    Ok(HingingVerdict { hinging: h.clone(), outcomes, unrealizable })
}

/// Searches all 81 chain hingings of five squares against the twelve free
/// pentominoes. Hingings are searched in parallel; the result is in
/// enumeration order.
pub fn check_pentomino_lower_bound() -> Result<LowerBoundCertificate> {
    let verdicts: Vec<HingingVerdict> =
        enumerate_chain_hingings(5).par_iter().map(verdict).collect::<Result<_>>()?;
    let impossible = verdicts.iter().all(HingingVerdict::impossible);
    let total_nodes =
        verdicts.iter().flat_map(|v| v.outcomes.iter()).map(|(_, a, b)| a.nodes + b.nodes).sum();
    Ok(LowerBoundCertificate { restriction: CHAIN_RESTRICTION.into(), verdicts, impossible, total_nodes })
}

/// Three squares in a row where the first two are hinged at both shared
/// corners, so they act as one domino piece, and the third hangs from the
/// top right corner of the domino: the two-piece tromino dissection.
pub fn tromino_hinging() -> SquareHinging {
    SquareHinging {
        n: 3,
        hinges: vec![
            SquareHinge { i: 0, ci: Corner::NE, j: 1, cj: Corner::NW },
            SquareHinge { i: 0, ci: Corner::SE, j: 1, cj: Corner::SW },
            SquareHinge { i: 1, ci: Corner::NE, j: 2, cj: Corner::NW },
        ],
    }
}

/// First chain hinging of four squares that folds into every fixed
/// tetromino. Turning a whole configuration so that square 2 (index 1) is
/// unrotated keeps it valid, so the figure can hold that square still.
pub fn tetromino_hinging() -> Option<SquareHinging> {
    let targets = enumerate_fixed(Family::Omino, 4);
    enumerate_chain_hingings(4)
        .into_iter()
        .find(|h| realizable_set(h, &targets).map(|r| r.len() == targets.len()).unwrap_or(false))
}

/// Placed square polygons of a witness, for rendering.
pub fn witness_polygons(witness: &[SquarePlacement]) -> Vec<Polygon<ExactScalar>> {
    witness.iter().map(|p| Family::Omino.polygon(p.cell)).collect()
}
