//! Textual knot presentations: braid words, grid diagrams and planar
//! diagrams, plus the braid-closure to grid conversion.

mod braid;
mod convert;
mod grid;
mod lex;
mod pd;

pub use braid::{parse_braid, BraidWord};
pub use convert::{braid_to_grid, DEFAULT_MAX_GRID};
pub use grid::{parse_grid, GridDiagram, Marker, MAX_REPRESENTABLE_GRID};
pub use pd::{parse_pd, KnotDiagram, UNKNOT_LITERAL};
