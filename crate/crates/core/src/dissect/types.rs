use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{RigidMotion, Scalar};
use crate::geom::{Point, Polygon};

/// One end of a hinge: a vertex of a piece in the piece's local frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HingeEnd {
    pub piece: usize,
    pub vertex: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hinge {
    pub a: HingeEnd,
    pub b: HingeEnd,
}

impl Hinge {
    pub fn new(pa: usize, va: usize, pb: usize, vb: usize) -> Self {
        Hinge { a: HingeEnd { piece: pa, vertex: va }, b: HingeEnd { piece: pb, vertex: vb } }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Topology {
    /// Hinge `i` joins piece `i` to piece `i + 1 mod n`.
    Cycle,
    /// Hinge `i` joins piece `i` to piece `i + 1`.
    Path,
    /// Any hinge graph that is a tree.
    Tree,
    /// Any connected hinge graph, possibly with parallel hinges.
    Graph,
}

/// Pieces in local coordinates joined by point hinges.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound(serialize = "S: Serialize", deserialize = "S: Deserialize<'de>"))]
pub struct HingedDissection<S> {
    pub pieces: Vec<Polygon<S>>,
    pub hinges: Vec<Hinge>,
    pub topology: Topology,
}

impl<S: Scalar> HingedDissection<S> {
    /// Chains the pieces with hinges from each piece's `out` vertex to the
    /// next piece's `inn` vertex.
    pub fn chain(pieces: Vec<(Polygon<S>, usize, usize)>, topology: Topology) -> Self {
        let n = pieces.len();
        let links = match topology {
            Topology::Cycle if n > 1 => n,
            _ => n.saturating_sub(1),
        };
        let hinges = (0..links)
            .map(|i| {
                let j = (i + 1) % n;
                Hinge::new(i, pieces[i].2, j, pieces[j].1)
            })
            .collect();
        HingedDissection { pieces: pieces.into_iter().map(|p| p.0).collect(), hinges, topology }
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn total_area(&self) -> S {
        self.pieces.iter().fold(S::zero(), |acc, p| acc.add(&p.area()))
    }

    pub fn anchor(&self, e: HingeEnd) -> &Point<S> {
        self.pieces[e.piece].vertex(e.vertex)
    }

    /// Anchor vertices `(in, out)` of piece `i` in a cycle or path, when
    /// present.
    pub fn anchors(&self, i: usize) -> (Option<usize>, Option<usize>) {
        let mut inn = None;
        let mut out = None;
        for h in &self.hinges {
            if h.a.piece == i && out.is_none() {
                out = Some(h.a.vertex);
            }
            if h.b.piece == i && inn.is_none() {
                inn = Some(h.b.vertex);
            }
        }
        (inn, out)
    }

    /// Structural checks: indices in range, positive area, and hinge graph
    /// matching the declared topology.
    pub fn validate(&self) -> Result<()> {
        let n = self.pieces.len();
        for (i, p) in self.pieces.iter().enumerate() {
            if p.len() < 3 || !p.area2().is_pos() {
                return Err(Error::Invalid(format!("piece {i} is not a counterclockwise polygon")));
            }
        }
        for h in &self.hinges {
            for e in [h.a, h.b] {
                if e.piece >= n || e.vertex >= self.pieces[e.piece].len() {
                    return Err(Error::Invalid(format!("hinge end {e:?} out of range")));
                }
            }
        }
        let expected = match self.topology {
            Topology::Cycle if n > 1 => n,
            Topology::Graph => self.hinges.len(),
            _ => n.saturating_sub(1),
        };
        if self.hinges.len() != expected {
            return Err(Error::Invalid(format!(
                "{:?} on {n} pieces needs {expected} hinges, found {}",
                self.topology,
                self.hinges.len()
            )));
        }
        match self.topology {
            Topology::Cycle | Topology::Path => {
                for (i, h) in self.hinges.iter().enumerate() {
                    if h.a.piece != i || h.b.piece != (i + 1) % n {
                        return Err(Error::Invalid(format!("hinge {i} does not join pieces {i} and {}", (i + 1) % n)));
                    }
                }
            }
            Topology::Tree | Topology::Graph => {
                if !self.is_connected() {
                    return Err(Error::Invalid("hinge graph is disconnected".into()));
                }
            }
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.pieces.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for h in &self.hinges {
                for (a, b) in [(h.a.piece, h.b.piece), (h.b.piece, h.a.piece)] {
                    if a == x && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Applies per-piece motions.
    pub fn placed(&self, motions: &[RigidMotion<S>]) -> Vec<Polygon<S>> {
        self.pieces.iter().zip(motions).map(|(p, m)| p.transformed(m)).collect()
    }
}
