//! Points, polygons, regions and the exact predicates behind them.

mod point;
mod polygon;
pub mod predicates;
mod region;

pub use point::Point;
pub use polygon::{interiors_overlap, Location, Polygon};
pub use region::Region;
