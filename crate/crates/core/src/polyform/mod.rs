//! Lattice polyforms, enumeration, canonical forms, gluing sequences and
//! restricted forms of an arbitrary polygon.

mod cell;
mod enumerate;
mod form;
mod gluing;
mod restricted;

pub use cell::{Cell, Family};
pub use enumerate::{enumerate_fixed, enumerate_one_sided};
pub use form::Polyform;
pub use gluing::{gluing_sequence, GluingStep};
pub use restricted::{enumerate_restricted, Copy, RestrictedForm};
