//! Construction and verification of universal hinged dissections of
//! polyforms.

pub mod error;
pub mod exactnum;
pub mod geom;
pub mod polyform;
pub mod dissect;
pub mod realize;
pub mod verify;
pub mod search;
pub mod io;

pub use error::{Error, Result};
