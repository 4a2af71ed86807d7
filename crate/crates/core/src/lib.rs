//! Knot Floer homology (hat flavor) from grid diagrams, Kauffman states
//! from planar diagrams, and the genus-type invariants read off from them.

pub mod codec;
pub mod error;
pub mod floer;
pub mod invariants;
pub mod kauffman;
pub mod laurent;
pub mod perm;
pub mod pipeline;

pub use error::{Error, ErrorClass, Result};
pub use laurent::LaurentPoly;
