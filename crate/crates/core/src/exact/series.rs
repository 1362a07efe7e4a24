use alloc::vec::Vec;

use super::ring::Ring;

/// Truncated double expansion `1 + Σ_{i ≤ I, j ≤ J} c_ij u^{−j} x^{−i}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiSeries<R: Ring> {
    shape: R::Shape,
    /// `coeffs[i-1][j-1]` is the coefficient of `x^{−i} u^{−j}`.
    coeffs: Vec<Vec<R>>,
}

impl<R: Ring> BiSeries<R> {
    /// `coeffs[i-1][j-1]`; all rows must have the same length.
    pub fn new(shape: R::Shape, coeffs: Vec<Vec<R>>) -> Self {
        let j = coeffs.first().map_or(0, Vec::len);
        assert!(coeffs.iter().all(|r| r.len() == j), "ragged series");
        Self { shape, coeffs }
    }

    pub fn shape(&self) -> &R::Shape {
        &self.shape
    }

    /// `(I, J)`.
    pub fn orders(&self) -> (usize, usize) {
        (self.coeffs.len(), self.coeffs.first().map_or(0, Vec::len))
    }

    /// Coefficient of `x^{−i} u^{−j}`, `1 ≤ i ≤ I`, `1 ≤ j ≤ J`.
    pub fn coeff(&self, i: usize, j: usize) -> &R {
        &self.coeffs[i - 1][j - 1]
    }

    pub fn constant(&self) -> R {
        R::one_of(&self.shape)
    }

    /// `(i, j, c_ij)` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &R)> + '_ {
        self.coeffs.iter().enumerate().flat_map(|(i, row)| {
            row.iter().enumerate().map(move |(j, c)| (i + 1, j + 1, c))
        })
    }

    /// Keeps only `i ≤ max_i`, `j ≤ max_j`.
    pub fn truncate(&self, max_i: usize, max_j: usize) -> Self {
        Self {
            shape: self.shape.clone(),
            coeffs: self
                .coeffs
                .iter()
                .take(max_i)
                .map(|r| r.iter().take(max_j).cloned().collect())
                .collect(),
        }
    }
}
