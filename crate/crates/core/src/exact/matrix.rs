//! Sparse square matrices over a [`Ring`].
//!
//! A `Matrix<Rational>` is an operator on `V^{⊗n}`; a `Matrix<OperatorMatrix>`
//! is an `n × n` matrix whose entries are themselves operators, which is how
//! `Q(H_1, …, H_n)` is represented.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::ring::{Invertible, Rational, Ring};

#[derive(Clone, Debug)]
pub struct Matrix<R: Ring> {
    dim: usize,
    elem: R::Shape,
    rows: Vec<BTreeMap<usize, R>>,
}

/// An exact operator on `V^{⊗n}`.
pub type OperatorMatrix = Matrix<Rational>;

impl<R: Ring> PartialEq for Matrix<R> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.elem == other.elem && self.rows == other.rows
    }
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(dim: usize, elem: R::Shape) -> Self {
        Self {
            dim,
            elem,
            rows: vec![BTreeMap::new(); dim],
        }
    }

    pub fn identity(dim: usize, elem: R::Shape) -> Self {
        Self::scalar(dim, elem.clone(), R::one_of(&elem))
    }

    /// `c` on the diagonal.
    pub fn scalar(dim: usize, elem: R::Shape, c: R) -> Self {
        let mut m = Self::zeros(dim, elem);
        for i in 0..dim {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn diagonal(elem: R::Shape, diag: Vec<R>) -> Self {
        let mut m = Self::zeros(diag.len(), elem);
        for (i, d) in diag.into_iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// Builds from dense rows. Panics if the rows are not square.
    pub fn from_dense(elem: R::Shape, rows: Vec<Vec<R>>) -> Self {
        let dim = rows.len();
        let mut m = Self::zeros(dim, elem);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), dim, "row {i} has wrong length");
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Like [`Matrix::from_dense`] but rejects ragged or non-square input.
    pub fn try_from_dense(elem: R::Shape, rows: Vec<Vec<R>>) -> crate::Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(crate::Error::NotSquare {
                rows: dim,
                cols: bad.len(),
            });
        }
        Ok(Self::from_dense(elem, rows))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elem_shape(&self) -> &R::Shape {
        &self.elem
    }

    pub fn get(&self, r: usize, c: usize) -> R {
        self.rows[r]
            .get(&c)
            .cloned()
            .unwrap_or_else(|| R::zero_of(&self.elem))
    }

    pub fn get_ref(&self, r: usize, c: usize) -> Option<&R> {
        self.rows[r].get(&c)
    }

    /// Stores `v` at `(r, c)`; a zero value removes the entry.
    pub fn set(&mut self, r: usize, c: usize, v: R) {
        assert!(r < self.dim && c < self.dim, "index ({r},{c}) out of range");
        if v.is_zero_elem() {
            self.rows[r].remove(&c);
        } else {
            self.rows[r].insert(c, v);
        }
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &R) {
        if v.is_zero_elem() {
            return;
        }
        let slot = self.rows[r].entry(c).or_insert_with(|| R::zero_of(&self.elem));
        slot.add_in_place(v);
        if slot.is_zero_elem() {
            self.rows[r].remove(&c);
        }
    }

    pub fn row(&self, r: usize) -> &BTreeMap<usize, R> {
        &self.rows[r]
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(&c, v)| (r, c, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn map<S: Ring>(&self, elem: S::Shape, f: impl Fn(&R) -> S) -> Matrix<S> {
        let mut out = Matrix::zeros(self.dim, elem);
        for (r, c, v) in self.entries() {
            out.set(r, c, f(v));
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.dim, self.elem.clone());
        for (r, c, v) in self.entries() {
            out.set(c, r, v.clone());
        }
        out
    }

    pub fn trace(&self) -> R {
        let mut acc = R::zero_of(&self.elem);
        for i in 0..self.dim {
            if let Some(v) = self.rows[i].get(&i) {
                acc.add_in_place(v);
            }
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_at(r, c, v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(self.elem.clone(), Ring::negated)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(self.elem.clone(), |v| v.scaled(c))
    }

    /// Multiplies every entry on the left by `c`.
    pub fn scale_by_elem(&self, c: &R) -> Self {
        self.map(self.elem.clone(), |v| c.times(v))
    }

    /// Matrix product, entry products taken as `self_ik · other_kj`.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let mut out = Self::zeros(self.dim, self.elem.clone());
        for (r, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, R> = BTreeMap::new();
            for (&k, a) in row {
                for (&c, b) in &other.rows[k] {
                    let p = a.times(b);
                    match acc.get_mut(&c) {
                        Some(slot) => slot.add_in_place(&p),
                        None => {
                            acc.insert(c, p);
                        }
                    }
                }
            }
            acc.retain(|_, v| !v.is_zero_elem());
            out.rows[r] = acc;
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::identity(self.dim, self.elem.clone());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Principal submatrix on the given indices.
    pub fn submatrix(&self, indices: &[usize]) -> Self {
        let mut out = Self::zeros(indices.len(), self.elem.clone());
        for (i, &r) in indices.iter().enumerate() {
            for (j, &c) in indices.iter().enumerate() {
                if let Some(v) = self.rows[r].get(&c) {
                    out.set(i, j, v.clone());
                }
            }
        }
        out
    }

    /// Dense copy of the entries.
    pub fn to_dense(&self) -> Vec<Vec<R>> {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c)).collect())
            .collect()
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
    }
}

impl OperatorMatrix {
    /// `self · v` for a dense column vector.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .fold(Rational::from_integer(0.into()), |acc, (&c, a)| acc + a * &v[c])
            })
            .collect()
    }
}

impl Invertible for OperatorMatrix {
    fn inverse(&self) -> Option<Self> {
        let inv = super::linalg::inverse(&self.to_dense()).ok()?;
        Some(Matrix::from_dense((), inv))
    }
}

impl<R: Ring> Ring for Matrix<R> {
    type Shape = (usize, R::Shape);

    fn shape(&self) -> Self::Shape {
        (self.dim, self.elem.clone())
    }
    fn zero_of(shape: &Self::Shape) -> Self {
        Self::zeros(shape.0, shape.1.clone())
    }
    fn one_of(shape: &Self::Shape) -> Self {
        Self::identity(shape.0, shape.1.clone())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero_matrix()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
    fn add_in_place(&mut self, other: &Self) {
        self.check_compatible(other);
        for (r, c, v) in other.entries() {
            self.add_at(r, c, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::rat;

    fn m(rows: &[&[i64]]) -> OperatorMatrix {
        Matrix::from_dense((), rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect())
    }

    #[test]
    fn product_and_trace() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), m(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.trace(), rat(5));
        assert_eq!(a.sub(&a).nnz(), 0);
        assert_eq!(a.commutator(&Matrix::identity(2, ())).nnz(), 0);
        assert_eq!(a.transpose().get(0, 1), rat(3));
        assert_eq!(a.apply(&[rat(1), rat(1)]), [rat(3), rat(7)]);
    }

    #[test]
    fn matrices_of_operators() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let shape = a.shape();
        let big = Matrix::diagonal(shape, vec![a.clone(), OperatorMatrix::identity(2, ())]);
        let sq = big.mul(&big);
        assert_eq!(sq.get(0, 0), a.mul(&a));
        assert_eq!(sq.trace(), a.mul(&a).add(&Matrix::identity(2, ())));
        assert!(sq.get(0, 1).is_zero_matrix());
    }
}
