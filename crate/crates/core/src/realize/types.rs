use serde::{Deserialize, Serialize};

use crate::dissect::HingedDissection;
use crate::exactnum::{RigidMotion, Scalar};
use crate::geom::{Polygon, Region};
use crate::polyform::{Polyform, RestrictedForm};

/// The shape a dissection is rotated into.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound(serialize = "S: Serialize", deserialize = "S: Deserialize<'de>"))]
pub struct Target<S> {
    pub label: String,
    /// Cell polygons in world coordinates.
    pub cells: Vec<Polygon<S>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polyform: Option<Polyform>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub restricted: Option<RestrictedForm<S>>,
}

impl<S: Scalar> Target<S> {
    pub fn from_polyform(f: &Polyform) -> Self {
        Self::scaled_polyform(f, &S::one())
    }

    /// Polyform whose cells are scaled by `k` about the origin.
    pub fn scaled_polyform(f: &Polyform, k: &S) -> Self {
        Target {
            label: format!("{}{:?}", f.family.name(), f.cells),
            cells: f.scaled_polygons(k),
            polyform: Some(f.clone()),
            restricted: None,
        }
    }

    pub fn from_restricted(f: &RestrictedForm<S>) -> Self {
        Target {
            label: format!("restricted[{}]", f.key()),
            cells: f.cell_polygons(),
            polyform: None,
            restricted: Some(f.clone()),
        }
    }

    pub fn from_polygon(label: &str, p: &Polygon<S>) -> Self {
        Target { label: label.into(), cells: vec![p.ccw()], polyform: None, restricted: None }
    }

    pub fn region(&self) -> Region<S> {
        Region::from_cells(&self.cells)
    }
}

/// One attach step of the construction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    pub cell: usize,
    pub parent: Option<usize>,
    /// Splice point, for display; none for base cells.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<(f64, f64)>,
    /// Host piece in construction order.
    pub host: Option<usize>,
    /// Index of the cell template placement that was used.
    pub placement: usize,
    pub case: String,
}

/// A dissection together with per-piece motions placing it on a target.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound(serialize = "S: Serialize", deserialize = "S: Deserialize<'de>"))]
pub struct Realization<S> {
    pub family: String,
    pub dissection: HingedDissection<S>,
    pub motions: Vec<RigidMotion<S>>,
    pub target: Target<S>,
    pub trace: Vec<TraceStep>,
}

impl<S: Scalar> Realization<S> {
    pub fn placed(&self) -> Vec<Polygon<S>> {
        self.dissection.placed(&self.motions)
    }
}
