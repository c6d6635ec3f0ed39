use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::geom::{Polygon, Region};
use crate::polyform::{Cell, Family};

/// A lattice polyform: a connected set of cells of one family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Polyform {
    pub family: Family,
    pub cells: Vec<Cell>,
}

impl Polyform {
    pub fn new(family: Family, mut cells: Vec<Cell>) -> Self {
        cells.sort();
        cells.dedup();
        Polyform { family, cells }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Translates so the minimum x and y are zero, then sorts the cells.
    pub fn normalized(&self) -> Polyform {
        let mx = self.cells.iter().map(|c| c.x).min().unwrap_or(0);
        let my = self.cells.iter().map(|c| c.y).min().unwrap_or(0);
        Polyform::new(
            self.family,
            self.cells.iter().map(|&c| self.family.shift(c, -mx, -my)).collect(),
        )
    }

    pub fn rotated(&self) -> Polyform {
        Polyform::new(self.family, self.cells.iter().map(|&c| self.family.rotate(c)).collect())
    }

    /// All distinct fixed forms obtained by lattice rotation.
    pub fn rotations(&self) -> Vec<Polyform> {
        let mut out: Vec<Polyform> = Vec::new();
        let mut f = self.normalized();
        for _ in 0..self.family.rotations() {
            if !out.contains(&f) {
                out.push(f.clone());
            }
            f = f.rotated().normalized();
        }
        out
    }

    /// Representative of the class modulo translation and rotation.
    pub fn canonical(&self) -> Polyform {
        self.rotations().into_iter().min().expect("at least one rotation")
    }

    pub fn cell_polygons<S: Scalar>(&self) -> Vec<Polygon<S>> {
        self.cells.iter().map(|&c| self.family.polygon(c)).collect()
    }

    /// Cell polygons scaled by `k` about the origin.
    pub fn scaled_polygons<S: Scalar>(&self, k: &S) -> Vec<Polygon<S>> {
        self.cell_polygons::<S>()
            .into_iter()
            .map(|p| Polygon(p.0.iter().map(|q| q.scale(k)).collect()))
            .collect()
    }

    pub fn region<S: Scalar>(&self) -> Region<S> {
        Region::from_cells(&self.cell_polygons::<S>())
    }

    /// Index pairs of edge-adjacent cells.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let idx: std::collections::BTreeMap<Cell, usize> =
            self.cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        self.cells
            .iter()
            .map(|&c| {
                let mut v: Vec<usize> = self
                    .family
                    .neighbors(c)
                    .into_iter()
                    .filter_map(|n| idx.get(&n).copied())
                    .collect();
                v.sort();
                v
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.cells.is_empty() {
            return false;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for &j in &adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Checks connectivity and that no two cells overlap.
    pub fn validate(&self) -> Result<()> {
        if self.cells.iter().any(|c| c.t >= self.family.cell_types()) {
            return Err(Error::Invalid("cell type out of range".into()));
        }
        for (i, &a) in self.cells.iter().enumerate() {
            for &b in &self.cells[i + 1..] {
                if self.family.cells_conflict(a, b) {
                    return Err(Error::Invalid(format!("cells {a:?} and {b:?} overlap")));
                }
            }
        }
        if !self.is_connected() {
            return Err(Error::Invalid("polyform is not connected".into()));
        }
        Ok(())
    }

    pub fn cell_set(&self) -> BTreeSet<Cell> {
        self.cells.iter().copied().collect()
    }
}
