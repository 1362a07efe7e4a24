//! Coefficients `φ°_ij` of `det(1 − (u − Y)^{−1}(x − X)^{−1}) = 1 + Σ φ°_ij u^{−j} x^{−i}`.
//!
//! The cleared determinant `F(u, x) = det((u − Y)(x − X) − 1)` has degree at
//! most `n` in each variable, so it is recovered exactly from an
//! `(n+1) × (n+1)` grid. Dividing by `det(u − Y) det(x − X)` is then a product
//! of two power series in `u^{−1}` and `x^{−1}`.

use alloc::format;
use alloc::vec::Vec;

use super::{cleared_det, CMPair};
use crate::exact::det::char_poly;
use crate::exact::linalg::inverse;
use crate::exact::poly::Poly;
use crate::exact::ring::{rat, rpow, Rational, Ring};
use crate::exact::series::BiSeries;
use crate::{Error, Result};

/// Interpolation nodes `0, 1, …, n`.
fn nodes(n: usize) -> Vec<Rational> {
    (0..=n).map(|k| rat(k as i64)).collect()
}

/// Coefficients of the degree-`≤ n` polynomial through `(t_k, values_k)`,
/// given the inverse Vandermonde matrix of the nodes.
fn interpolate<R: Ring>(vinv: &[Vec<Rational>], values: &[R], shape: &R::Shape) -> Vec<R> {
    vinv.iter()
        .map(|row| {
            let mut acc = R::zero_of(shape);
            for (w, v) in row.iter().zip(values) {
                if !num_traits::Zero::is_zero(w) {
                    acc.add_in_place(&v.scaled(w));
                }
            }
            acc
        })
        .collect()
}

/// `d_m` with `1 / c(t) = t^{−n} Σ_m d_m t^{−m}` for monic `c` of degree `n`.
fn inverse_series<R: Ring>(c: &Poly<R>, count: usize) -> Vec<R> {
    let shape = c.shape().clone();
    let n = c.degree().unwrap_or(0);
    let mut d: Vec<R> = Vec::with_capacity(count);
    for m in 0..count {
        if m == 0 {
            d.push(R::one_of(&shape));
            continue;
        }
        let mut acc = R::zero_of(&shape);
        for k in 1..=m.min(n) {
            acc.add_in_place(&c.coeff(n - k).times(&d[m - k]));
        }
        d.push(acc.negated());
    }
    d
}

/// `(F_pq)` with `F(u, x) = Σ F_pq u^p x^q`, indexed `[p][q]`.
pub(super) fn cleared_det_coeffs<R: Ring>(pair: &CMPair<R>) -> Result<Vec<Vec<R>>> {
    let n = pair.dim();
    let shape = pair.elem_shape().clone();
    let t = nodes(n);
    let vandermonde: Vec<Vec<Rational>> =
        t.iter().map(|tk| (0..=n).map(|p| rpow(tk, p as u32)).collect()).collect();
    let vinv = inverse(&vandermonde)?;
    // by_x[l][p]: coefficient of u^p at x = t_l
    let by_x: Vec<Vec<R>> = t
        .iter()
        .map(|x| {
            let values: Vec<R> = t.iter().map(|u| cleared_det(pair, u, x)).collect();
            interpolate(&vinv, &values, &shape)
        })
        .collect();
    let coeffs: Vec<Vec<R>> = (0..=n)
        .map(|p| {
            let values: Vec<R> = by_x.iter().map(|row| row[p].clone()).collect();
            interpolate(&vinv, &values, &shape)
        })
        .collect();
    // One point off the grid guards the degree bound.
    let (u, x) = (rat(n as i64 + 1), rat(-1));
    let mut fitted = R::zero_of(&shape);
    for (p, row) in coeffs.iter().enumerate() {
        for (q, c) in row.iter().enumerate() {
            fitted.add_in_place(&c.scaled(&(rpow(&u, p as u32) * rpow(&x, q as u32))));
        }
    }
    if fitted != cleared_det(pair, &u, &x) {
        return Err(Error::Internal(format!(
            "cleared determinant exceeds degree {n} in u or x"
        )));
    }
    Ok(coeffs)
}

/// `φ°_ij` for `1 ≤ i ≤ max_i` (powers of `x^{−1}`), `1 ≤ j ≤ max_j` (powers
/// of `u^{−1}`). Entries of `X` and `Y` must pairwise commute.
pub fn phi0_expansion<R: Ring>(
    pair: &CMPair<R>,
    max_i: usize,
    max_j: usize,
) -> Result<BiSeries<R>> {
    let n = pair.dim();
    let shape = pair.elem_shape().clone();
    let f = cleared_det_coeffs(pair)?;
    let du = inverse_series(&char_poly(&pair.y), max_j + 1);
    let dx = inverse_series(&char_poly(&pair.x), max_i + 1);
    // g[j][q] = Σ_p F_pq du_{j+p−n}: the u^{−j} coefficient, still polynomial in x.
    let g: Vec<Vec<R>> = (0..=max_j)
        .map(|j| {
            (0..=n)
                .map(|q| {
                    let mut acc = R::zero_of(&shape);
                    for (p, row) in f.iter().enumerate() {
                        if let Some(a) = (j + p).checked_sub(n) {
                            if !row[q].is_zero_elem() {
                                acc.add_in_place(&row[q].times(&du[a]));
                            }
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let coeff = |i: usize, j: usize| {
        let mut acc = R::zero_of(&shape);
        for (q, gq) in g[j].iter().enumerate() {
            if let Some(b) = (i + q).checked_sub(n) {
                if !gq.is_zero_elem() {
                    acc.add_in_place(&gq.times(&dx[b]));
                }
            }
        }
        acc
    };
    if coeff(0, 0) != R::one_of(&shape) {
        return Err(Error::Internal("constant term of the expansion is not 1".into()));
    }
    for i in 1..=max_i {
        if !coeff(i, 0).is_zero_elem() {
            return Err(Error::Internal(format!("pure x^-{i} term in the expansion")));
        }
    }
    for j in 1..=max_j {
        if !coeff(0, j).is_zero_elem() {
            return Err(Error::Internal(format!("pure u^-{j} term in the expansion")));
        }
    }
    let coeffs = (1..=max_i)
        .map(|i| (1..=max_j).map(|j| coeff(i, j)).collect())
        .collect();
    Ok(BiSeries::new(shape, coeffs))
}
