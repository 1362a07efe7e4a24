//! The `gl_N` action on `V^{⊗n}` for the vector representation `V = C^N`.
//!
//! Basis vectors `v_{i_1} ⊗ … ⊗ v_{i_n}` are numbered row-major with the first
//! factor most significant. Indices `i`, `j` and factor numbers `a` are
//! 1-based throughout the public API.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::exact::linalg::{self, Dense};
use crate::exact::matrix::{Matrix, OperatorMatrix};
use crate::exact::ring::Rational;
use crate::{Error, Result};

/// Multiplicities `λ_1, …, λ_N` of each basis letter.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<usize>);

impl Weight {
    pub fn components(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// `V^{⊗n}` for `gl_N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorPower {
    gl_n: usize,
    sites: usize,
}

impl TensorPower {
    pub fn new(gl_n: usize, sites: usize) -> Result<Self> {
        if gl_n == 0 || sites == 0 {
            return Err(Error::InvalidConfig(alloc::format!(
                "N and n must be positive (got N={gl_n}, n={sites})"
            )));
        }
        Ok(Self { gl_n, sites })
    }

    pub fn gl_n(&self) -> usize {
        self.gl_n
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    /// `N^n`.
    pub fn dim(&self) -> usize {
        self.gl_n.pow(self.sites as u32)
    }

    /// Row-major position of `v_{i_1} ⊗ … ⊗ v_{i_n}`.
    pub fn flat_index(&self, multi: &[usize]) -> Result<usize> {
        if multi.len() != self.sites {
            return Err(Error::DimensionMismatch(alloc::format!(
                "multi-index of length {} for n = {}",
                multi.len(),
                self.sites
            )));
        }
        let mut idx = 0;
        for &i in multi {
            if i == 0 || i > self.gl_n {
                return Err(Error::IndexOutOfRange {
                    what: "basis",
                    value: i,
                    max: self.gl_n,
                });
            }
            idx = idx * self.gl_n + (i - 1);
        }
        Ok(idx)
    }

    pub fn multi_index(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.sites];
        for slot in out.iter_mut().rev() {
            *slot = flat % self.gl_n + 1;
            flat /= self.gl_n;
        }
        out
    }

    fn check(&self, i: usize, j: usize, a: usize) -> Result<()> {
        for v in [i, j] {
            if v == 0 || v > self.gl_n {
                return Err(Error::IndexOutOfRange {
                    what: "gl_N",
                    value: v,
                    max: self.gl_n,
                });
            }
        }
        if a == 0 || a > self.sites {
            return Err(Error::IndexOutOfRange {
                what: "factor",
                value: a,
                max: self.sites,
            });
        }
        Ok(())
    }

    /// `e_ij^(a)`: sends `v_j` in factor `a` to `v_i`, kills other letters.
    pub fn generator(&self, i: usize, j: usize, a: usize) -> Result<OperatorMatrix> {
        self.check(i, j, a)?;
        let mut m = Matrix::zeros(self.dim(), ());
        for col in 0..self.dim() {
            let mut multi = self.multi_index(col);
            if multi[a - 1] == j {
                multi[a - 1] = i;
                let row = self.flat_index(&multi)?;
                m.set(row, col, Rational::one());
            }
        }
        Ok(m)
    }

    /// `Σ_a e_ij^(a)`, the action of `e_ij ∈ gl_N ⊂ gl_N[t]`.
    pub fn total(&self, i: usize, j: usize) -> Result<OperatorMatrix> {
        let mut acc = Matrix::zeros(self.dim(), ());
        for a in 1..=self.sites {
            acc = acc.add(&self.generator(i, j, a)?);
        }
        Ok(acc)
    }

    /// `[e_ij^(a), e_sk^(a)] − δ_js e_ik^(a) + δ_ik e_sj^(a)`; zero when the
    /// `gl_N` relations hold.
    pub fn commutator_defect(&self, (i, j): (usize, usize), (s, k): (usize, usize), a: usize) -> Result<OperatorMatrix> {
        let mut out = self.generator(i, j, a)?.commutator(&self.generator(s, k, a)?);
        if j == s {
            out = out.sub(&self.generator(i, k, a)?);
        }
        if i == k {
            out = out.add(&self.generator(s, j, a)?);
        }
        Ok(out)
    }

    pub fn weight_of(&self, flat: usize) -> Weight {
        let mut w = vec![0; self.gl_n];
        for i in self.multi_index(flat) {
            w[i - 1] += 1;
        }
        Weight(w)
    }

    /// Basis indices grouped by weight. Weights appear in decreasing
    /// lexicographic order, indices ascending inside each group.
    pub fn weight_subspaces(&self) -> Vec<(Weight, Vec<usize>)> {
        let mut groups: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for idx in 0..self.dim() {
            groups.entry(self.weight_of(idx)).or_default().push(idx);
        }
        groups.into_iter().rev().collect()
    }

    /// Basis of the joint kernel of the raising operators `Σ_a e_ij^(a)`,
    /// `i < j`, computed weight by weight. Returned in the weight order of
    /// [`TensorPower::weight_subspaces`].
    pub fn singular_basis(&self) -> Result<Vec<Vec<Rational>>> {
        Ok(self
            .singular_basis_by_weight()?
            .into_iter()
            .flat_map(|(_, vs)| vs)
            .collect())
    }

    pub fn singular_basis_by_weight(&self) -> Result<Vec<(Weight, Vec<Vec<Rational>>)>> {
        let mut raising = Vec::new();
        for i in 1..=self.gl_n {
            for j in i + 1..=self.gl_n {
                raising.push(self.total(i, j)?);
            }
        }
        let dim = self.dim();
        let mut out = Vec::new();
        for (w, idx) in self.weight_subspaces() {
            let vectors: Vec<Vec<Rational>> = if raising.is_empty() {
                idx.iter().map(|&c| unit(dim, c)).collect()
            } else {
                // rows: every raising operator, restricted to the columns of this weight
                let mut rows: Dense = Vec::new();
                for op in &raising {
                    for r in 0..dim {
                        let row: Vec<Rational> = idx.iter().map(|&c| op.get(r, c)).collect();
                        if row.iter().any(|v| !num_traits::Zero::is_zero(v)) {
                            rows.push(row);
                        }
                    }
                }
                let kernel = if rows.is_empty() {
                    (0..idx.len()).map(|c| unit(idx.len(), c)).collect()
                } else {
                    linalg::nullspace(&rows, idx.len())
                };
                kernel
                    .into_iter()
                    .map(|k| {
                        let mut v = vec![Rational::from_integer(0.into()); dim];
                        for (pos, &c) in idx.iter().enumerate() {
                            v[c] = k[pos].clone();
                        }
                        v
                    })
                    .collect()
            };
            if !vectors.is_empty() {
                out.push((w, vectors));
            }
        }
        Ok(out)
    }
}

fn unit(dim: usize, at: usize) -> Vec<Rational> {
    let mut v = vec![Rational::from_integer(0.into()); dim];
    v[at] = Rational::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::rat;

    #[test]
    fn flat_indices() {
        let t = TensorPower::new(2, 2).unwrap();
        assert_eq!(t.flat_index(&[1, 1]).unwrap(), 0);
        assert_eq!(t.flat_index(&[2, 1]).unwrap(), 2);
        let t3 = TensorPower::new(3, 3).unwrap();
        assert_eq!(t3.flat_index(&[2, 3, 1]).unwrap(), 15);
        assert_eq!(t3.multi_index(15), [2, 3, 1]);
        assert!(t3.flat_index(&[4, 1, 1]).is_err());
        assert!(t3.flat_index(&[0, 1, 1]).is_err());
    }

    #[test]
    fn e12_on_v() {
        let t = TensorPower::new(2, 1).unwrap();
        let e12 = t.generator(1, 2, 1).unwrap();
        assert_eq!(e12.nnz(), 1);
        assert_eq!(e12.get(0, 1), rat(1));
    }

    #[test]
    fn e12_on_second_factor() {
        let t = TensorPower::new(2, 2).unwrap();
        let e = t.generator(1, 2, 2).unwrap();
        let v12 = t.flat_index(&[1, 2]).unwrap();
        let v11 = t.flat_index(&[1, 1]).unwrap();
        let v22 = t.flat_index(&[2, 2]).unwrap();
        let v21 = t.flat_index(&[2, 1]).unwrap();
        assert_eq!(e.nnz(), 2);
        assert_eq!(e.get(v11, v12), rat(1));
        assert_eq!(e.get(v21, v22), rat(1));
    }

    #[test]
    fn generator_is_sparse_and_idempotent_on_diagonal() {
        let t = TensorPower::new(3, 3).unwrap();
        for (i, j, a) in [(1, 2, 1), (3, 1, 2), (2, 2, 3)] {
            assert_eq!(t.generator(i, j, a).unwrap().nnz(), 9);
        }
        let e = t.generator(2, 2, 3).unwrap();
        assert_eq!(e.mul(&e), e);
        assert!(t.generator(4, 1, 1).is_err());
        assert!(t.generator(1, 1, 4).is_err());
    }

    #[test]
    fn gl_relations() {
        let t = TensorPower::new(2, 1).unwrap();
        assert!(t.commutator_defect((1, 1), (1, 1), 1).unwrap().is_zero_matrix());
        let c = t.generator(1, 2, 1).unwrap().commutator(&t.generator(2, 1, 1).unwrap());
        assert_eq!(c, t.generator(1, 1, 1).unwrap().sub(&t.generator(2, 2, 1).unwrap()));
        let t = TensorPower::new(3, 2).unwrap();
        for i in 1..=3 {
            for j in 1..=3 {
                for s in 1..=3 {
                    for k in 1..=3 {
                        assert!(t.commutator_defect((i, j), (s, k), 2).unwrap().is_zero_matrix());
                    }
                }
            }
        }
    }

    #[test]
    fn weights() {
        let t = TensorPower::new(2, 2).unwrap();
        let ws = t.weight_subspaces();
        assert_eq!(
            ws,
            vec![
                (Weight(vec![2, 0]), vec![0]),
                (Weight(vec![1, 1]), vec![1, 2]),
                (Weight(vec![0, 2]), vec![3]),
            ]
        );
        let t = TensorPower::new(2, 3).unwrap();
        let w21 = t.weight_subspaces().into_iter().find(|(w, _)| w.0 == [2, 1]).unwrap();
        assert_eq!(w21.1.len(), 3);
        let t = TensorPower::new(3, 3).unwrap();
        let w111 = t.weight_subspaces().into_iter().find(|(w, _)| w.0 == [1, 1, 1]).unwrap();
        assert_eq!(w111.1.len(), 6);
        assert_eq!(t.weight_subspaces().iter().map(|(_, v)| v.len()).sum::<usize>(), 27);
    }

    #[test]
    fn singular_vectors_small() {
        let t = TensorPower::new(2, 1).unwrap();
        assert_eq!(t.singular_basis().unwrap(), vec![vec![rat(1), rat(0)]]);
        let t = TensorPower::new(2, 2).unwrap();
        let s = t.singular_basis().unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s[0], [rat(1), rat(0), rat(0), rat(0)]);
        // v1⊗v2 − v2⊗v1 up to scale
        assert_eq!(s[1][0], rat(0));
        assert_eq!(s[1][3], rat(0));
        assert_eq!(&s[1][1], &-s[1][2].clone());
    }
}
