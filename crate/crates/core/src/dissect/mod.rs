//! Hinged dissection types, the family constructors, structural transforms
//! and signatures.

mod chain;
mod constructors;
mod cuts;
mod extendible;
mod restricted;
pub mod family;
mod signature;
mod types;

pub use chain::{add_midpoint_hinges, add_midpoint_hinges_derived, chain_to_cycle, chain_to_cycle_derived, Derived};
pub use constructors::*;
pub use extendible::{concat_extendible, dudeney_chain, dudeney_extendible_chain, ExtendibleChain, Folding};
pub use restricted::{check_simple, cut_restricted, h_restricted, restricted_spec, triangulate};
pub use family::{FamilySpec, LibPiece, Placed, SplicePoints, Template};
pub use signature::{piece_token, signature, signatures_equal, Signature, Token};
pub use types::{Hinge, HingeEnd, HingedDissection, Topology};
