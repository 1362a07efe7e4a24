//! Exact Gaussian elimination over the rationals on dense, possibly
//! rectangular, row-major arrays.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::matrix::OperatorMatrix;
use super::ring::Rational;
use crate::{Error, Result};

pub type Dense = Vec<Vec<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(a: &mut Dense) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut().skip(c) {
            *v *= &inv;
        }
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot).take(cols).skip(c) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(a: &Dense) -> usize {
    rref(&mut a.clone()).len()
}

/// Basis of `{v : a v = 0}`, one vector per free column, each with a 1 in its
/// free position.
pub fn nullspace(a: &Dense, cols: usize) -> Vec<Vec<Rational>> {
    let mut m = a.clone();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -m[row][f].clone();
            }
            v
        })
        .collect()
}

/// Solves `a x = rhs` for square nonsingular `a`.
pub fn solve(a: &Dense, rhs: &[Rational]) -> Result<Vec<Rational>> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: a.first().map_or(0, Vec::len),
        });
    }
    if rhs.len() != n {
        return Err(Error::DimensionMismatch(alloc::format!(
            "right-hand side has length {} for a {n}x{n} system",
            rhs.len()
        )));
    }
    let mut aug: Dense = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    let rank = pivots.iter().filter(|&&c| c < n).count();
    if rank < n {
        return Err(Error::SingularSystem { rank, dim: n });
    }
    Ok(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

pub fn inverse(a: &Dense) -> Result<Dense> {
    let n = a.len();
    let mut aug: Dense = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    let rank = pivots.iter().filter(|&&c| c < n).count();
    if rank < n {
        return Err(Error::SingularSystem { rank, dim: n });
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Determinant as the signed product of pivots of an LU factorization with
/// partial pivoting.
pub fn det_lu(a: &Dense) -> Rational {
    let n = a.len();
    let mut m = a.clone();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let (top, below) = m.split_at_mut(c + 1);
        let pivot = &top[c];
        for row in below {
            if !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, p) in row.iter_mut().zip(pivot).take(n).skip(c) {
                    *x -= &f * p;
                }
            }
        }
    }
    det
}

/// Columns of `basis` are taken as a basis of a subspace invariant under `op`;
/// returns the matrix of `op` in that basis.
pub fn restrict_to_subspace(op: &OperatorMatrix, basis: &[Vec<Rational>]) -> Result<Dense> {
    let k = basis.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    let dim = op.dim();
    // Pick k independent coordinate rows of the basis matrix to solve for coordinates.
    let mut bt: Dense = basis.to_vec();
    let pivot_rows = rref(&mut bt);
    if pivot_rows.len() < k {
        return Err(Error::SingularSystem {
            rank: pivot_rows.len(),
            dim: k,
        });
    }
    let square: Dense = pivot_rows
        .iter()
        .map(|&r| basis.iter().map(|b| b[r].clone()).collect())
        .collect();
    let inv = inverse(&square)?;
    let images: Vec<Vec<Rational>> = basis.iter().map(|b| op.apply(b)).collect();
    let mut out = vec![vec![Rational::zero(); k]; k];
    for (col, img) in images.iter().enumerate() {
        let picked: Vec<Rational> = pivot_rows.iter().map(|&r| img[r].clone()).collect();
        for row in 0..k {
            out[row][col] = inv[row]
                .iter()
                .zip(&picked)
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b);
        }
        // The coordinates must reproduce the whole image, not just the pivot rows.
        for i in 0..dim {
            let recon = (0..k).fold(Rational::zero(), |acc, m| acc + &out[m][col] * &basis[m][i]);
            if recon != img[i] {
                return Err(Error::NonInvariantSubspace);
            }
        }
    }
    Ok(out)
}

pub fn mat_mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    a[i].iter()
                        .zip(b)
                        .fold(Rational::zero(), |acc, (x, row)| acc + x * &row[j])
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::{rat, ratio};

    fn d(rows: &[&[i64]]) -> Dense {
        rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()
    }

    #[test]
    fn solve_diagonal_and_identity() {
        let x = solve(&d(&[&[2, 0], &[0, 4]]), &[rat(1), rat(1)]).unwrap();
        assert_eq!(x, [ratio(1, 2), ratio(1, 4)]);
        let b = [rat(3), rat(-7), ratio(2, 9)];
        assert_eq!(solve(&d(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), &b).unwrap(), b);
    }

    #[test]
    fn singular_reports_rank() {
        let err = solve(&d(&[&[1, 2], &[2, 4]]), &[rat(1), rat(1)]).unwrap_err();
        assert_eq!(err, Error::SingularSystem { rank: 1, dim: 2 });
        assert_eq!(err.to_string(), "singular system (rank 1 of 2)");
    }

    #[test]
    fn kernel_and_rank() {
        let a = d(&[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let ker = nullspace(&a, 3);
        assert_eq!(ker, vec![vec![rat(-1), rat(1), rat(0)]]);
    }

    #[test]
    fn lu_determinant() {
        assert_eq!(det_lu(&d(&[&[0, 1], &[1, 0]])), rat(-1));
        assert_eq!(det_lu(&d(&[&[2, 1, 3], &[4, 1, 7], &[1, 0, 0]])), rat(4));
        assert_eq!(det_lu(&d(&[&[1, 2], &[2, 4]])), rat(0));
    }

    use alloc::string::ToString;
}
