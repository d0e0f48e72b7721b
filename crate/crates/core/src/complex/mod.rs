//! The order complex: cells, the recursive differential, and the choice of
//! atom ordering.

mod cells;
mod chain;
mod optimize;
mod order;
mod resolution;

pub use cells::{enumerate_cells, Cell, CellSet};
pub use chain::Chain;
pub use optimize::{
    bounds_from_classes, lcm_classes, optimize_ordering, optimize_ordering_detailed, Condition,
    LcmClass, OptimizedOrdering, TwoCellBounds, two_cell_bounds,
};
pub use order::{chain_precedes, left_divides};
pub use resolution::Resolution;

use crate::error::Result;
use crate::ordering::AtomOrdering;
use crate::structure::GaussianStructure;

/// Cells and differentials up to some dimension, detached from the structure.
#[derive(Clone, Debug)]
pub struct CellComplex {
    pub ordering: AtomOrdering,
    pub cells: CellSet,
    /// `differentials[n][j]` is `∂_n` of the `j`-th `n`-cell; empty for `n = 0`.
    pub differentials: Vec<Vec<Chain>>,
}

impl CellComplex {
    pub fn max_dim(&self) -> usize {
        self.cells.max_dim()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.cells.counts()
    }
}

/// Enumerates cells and computes every differential up to `max_dim`.
pub fn build_complex(
    structure: &GaussianStructure,
    ordering: &AtomOrdering,
    max_dim: usize,
    memo: bool,
) -> Result<CellComplex> {
    let res = Resolution::new(structure, ordering.clone(), max_dim, memo)?;
    if memo {
        res.compute_all()?;
    }
    let mut differentials = vec![Vec::new()];
    for n in 1..=max_dim {
        let d = (0..res.cells().dim(n).len())
            .map(|i| res.boundary(n, i).map(|c| c.into_owned()))
            .collect::<Result<Vec<_>>>()?;
        differentials.push(d);
    }
    Ok(CellComplex {
        ordering: ordering.clone(),
        cells: res.into_cells(),
        differentials,
    })
}
