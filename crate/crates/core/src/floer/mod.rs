//! Grid chain complex, its homology over the two-element field, and the
//! reduction from tilde to hat ranks.

mod complex;
mod gradings;
mod homology;
mod ranks;

pub use complex::{build_tilde_complex, empty_rectangles, SparseBoundary, StratumComplex};
pub use gradings::{grid_gradings, GradingContext, GridGenerator};
pub use homology::homology_f2;
pub use ranks::{alexander_from_grid, hat_from_tilde, BigradedRanks};

use crate::codec::GridDiagram;
use crate::error::Result;

/// Hat ranks of a grid together with the tilde data they came from.
#[derive(Debug, Clone)]
pub struct GridHomology {
    pub grid_size: usize,
    pub generator_count: u64,
    pub arrow_count: u64,
    pub tilde: BigradedRanks,
    pub hat: BigradedRanks,
}

/// Full grid route: complex, homology, division by the extra factors.
pub fn grid_homology(g: &GridDiagram, max_grid: usize) -> Result<GridHomology> {
    let complex = build_tilde_complex(g, max_grid)?;
    let tilde = homology_f2(&complex)?;
    let hat = hat_from_tilde(&tilde, g.size())?;
    Ok(GridHomology {
        grid_size: g.size(),
        generator_count: complex.generator_count(),
        arrow_count: complex.arrow_count(),
        tilde,
        hat,
    })
}
