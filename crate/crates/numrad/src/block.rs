//! Block operator matrices: an n×n grid of conformant complex blocks.

use crate::error::{NumradError, Result};
use crate::matrix::ComplexMatrix;

/// An n×n grid of blocks where block `(i, j)` has shape
/// `block_dims[i] × block_dims[j]`. The partition is heterogeneous: row and
/// column dimensions may differ across indices as long as the grid is
/// conformant.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockMatrix {
    block_dims: Vec<usize>,
    blocks: Vec<ComplexMatrix>, // row-major n*n grid, zero blocks materialized
}

impl BlockMatrix {
    /// Builds a block matrix from a grid of optional blocks; `None` means a
    /// zero block of the declared shape.
    pub fn new(block_dims: Vec<usize>, grid: Vec<Vec<Option<ComplexMatrix>>>) -> Result<Self> {
        let n = block_dims.len();
        if n == 0 {
            return Err(NumradError::DimensionMismatch(
                "block partition must have at least one block".into(),
            ));
        }
        if let Some(d) = block_dims.iter().find(|&&d| d == 0) {
            return Err(NumradError::DimensionMismatch(format!(
                "block dimensions must be positive, got {d}"
            )));
        }
        if grid.len() != n {
            return Err(NumradError::DimensionMismatch(format!(
                "conformance failure: grid has {} block rows, partition declares {n}",
                grid.len()
            )));
        }
        let mut blocks = Vec::with_capacity(n * n);
        for (i, row) in grid.into_iter().enumerate() {
            if row.len() != n {
                return Err(NumradError::DimensionMismatch(format!(
                    "conformance failure: block row {i} has {} blocks, expected {n}",
                    row.len()
                )));
            }
            for (j, blk) in row.into_iter().enumerate() {
                let (r, c) = (block_dims[i], block_dims[j]);
                match blk {
                    Some(b) => {
                        if b.rows() != r || b.cols() != c {
                            return Err(NumradError::DimensionMismatch(format!(
                                "conformance failure: block ({i}, {j}) is {}x{}, partition requires {r}x{c}",
                                b.rows(),
                                b.cols()
                            )));
                        }
                        blocks.push(b);
                    }
                    None => blocks.push(ComplexMatrix::zeros(r, c)),
                }
            }
        }
        Ok(Self { block_dims, blocks })
    }

    /// Grid order n.
    pub fn order(&self) -> usize {
        self.block_dims.len()
    }

    pub fn block_dims(&self) -> &[usize] {
        &self.block_dims
    }

    /// Total dimension of the embedded matrix.
    pub fn total_dim(&self) -> usize {
        self.block_dims.iter().sum()
    }

    pub fn block(&self, i: usize, j: usize) -> &ComplexMatrix {
        &self.blocks[i * self.order() + j]
    }

    /// Assembles the full `total_dim × total_dim` matrix.
    pub fn embed(&self) -> ComplexMatrix {
        let n = self.order();
        let dim = self.total_dim();
        let offsets: Vec<usize> = self
            .block_dims
            .iter()
            .scan(0usize, |acc, &d| {
                let o = *acc;
                *acc += d;
                Some(o)
            })
            .collect();
        let mut out = ComplexMatrix::zeros(dim, dim);
        for i in 0..n {
            for j in 0..n {
                let b = self.block(i, j);
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        out.set(offsets[i] + r, offsets[j] + c, b.get(r, c));
                    }
                }
            }
        }
        out
    }

    /// Splits a square matrix back into a block grid with the given partition.
    pub fn extract(full: &ComplexMatrix, block_dims: Vec<usize>) -> Result<Self> {
        let dim: usize = block_dims.iter().sum();
        if full.rows() != dim || full.cols() != dim {
            return Err(NumradError::DimensionMismatch(format!(
                "partition sums to {dim}, matrix is {}x{}",
                full.rows(),
                full.cols()
            )));
        }
        let n = block_dims.len();
        let offsets: Vec<usize> = block_dims
            .iter()
            .scan(0usize, |acc, &d| {
                let o = *acc;
                *acc += d;
                Some(o)
            })
            .collect();
        let mut grid = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let mut b = ComplexMatrix::zeros(block_dims[i], block_dims[j]);
                for r in 0..block_dims[i] {
                    for c in 0..block_dims[j] {
                        b.set(r, c, full.get(offsets[i] + r, offsets[j] + c));
                    }
                }
                row.push(Some(b));
            }
            grid.push(row);
        }
        Self::new(block_dims, grid)
    }
}
