//! JSON documents and SVG figures.

mod json;
mod svg;

pub use json::{read_document, read_header, write_document, Arithmetic, Header, SCHEMA};
pub use svg::{emit_svg, emit_svg_parts, RenderSpec, Style};
