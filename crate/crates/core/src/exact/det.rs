//! Division-free determinants over commutative coefficient rings.
//!
//! Entries only need to commute with each other, so these work for matrices of
//! mutually commuting operators as well as for rationals.

use alloc::vec;
use alloc::vec::Vec;

use super::matrix::Matrix;
use super::poly::Poly;
use super::ring::Ring;

/// Coefficients of `det(t·1 − m)` by Berkowitz's algorithm, lowest degree
/// first. The result is monic of degree `dim`.
///
/// Entries of `m` must pairwise commute.
pub fn char_poly<R: Ring>(m: &Matrix<R>) -> Poly<R> {
    let n = m.dim();
    let shape = m.elem_shape().clone();
    // Highest degree first while building.
    let mut coeffs: Vec<R> = vec![R::one_of(&shape)];
    for k in 0..n {
        // Toeplitz column [1, -a_kk, -R C, -R M C, ..., -R M^{k-1} C]
        let mut toeplitz = Vec::with_capacity(k + 2);
        toeplitz.push(R::one_of(&shape));
        toeplitz.push(m.get(k, k).negated());
        let mut v: Vec<R> = (0..k).map(|i| m.get(i, k)).collect();
        for _ in 0..k {
            let mut rc = R::zero_of(&shape);
            for (j, vj) in v.iter().enumerate() {
                if let Some(r) = m.get_ref(k, j) {
                    rc.add_in_place(&r.times(vj));
                }
            }
            toeplitz.push(rc.negated());
            v = (0..k)
                .map(|i| {
                    let mut acc = R::zero_of(&shape);
                    for (j, vj) in v.iter().enumerate() {
                        if let Some(a) = m.get_ref(i, j) {
                            acc.add_in_place(&a.times(vj));
                        }
                    }
                    acc
                })
                .collect();
        }
        let next: Vec<R> = (0..k + 2)
            .map(|i| {
                let mut acc = R::zero_of(&shape);
                for (j, c) in coeffs.iter().enumerate().take(i + 1) {
                    acc.add_in_place(&toeplitz[i - j].times(c));
                }
                acc
            })
            .collect();
        coeffs = next;
    }
    coeffs.reverse();
    Poly::with_shape(shape, coeffs)
}

/// Determinant by a division-free scheme: Leibniz expansion up to dimension 4,
/// Berkowitz above.
pub fn det<R: Ring>(m: &Matrix<R>) -> R {
    if m.dim() <= 4 {
        det_leibniz(m)
    } else {
        det_berkowitz(m)
    }
}

pub fn det_berkowitz<R: Ring>(m: &Matrix<R>) -> R {
    let c = char_poly(m).coeff(0);
    if m.dim() % 2 == 1 {
        c.negated()
    } else {
        c
    }
}

/// Sum over permutations. Exponential; meant for small dimensions and as an
/// independent check on [`det_berkowitz`].
pub fn det_leibniz<R: Ring>(m: &Matrix<R>) -> R {
    let shape = m.elem_shape().clone();
    let mut acc = R::zero_of(&shape);
    for (perm, odd) in permutations(m.dim()) {
        let mut term = R::one_of(&shape);
        let mut zero = false;
        for (row, &col) in perm.iter().enumerate() {
            match m.get_ref(row, col) {
                Some(v) => term = term.times(v),
                None => {
                    zero = true;
                    break;
                }
            }
        }
        if zero {
            continue;
        }
        if odd {
            acc = acc.minus(&term);
        } else {
            acc.add_in_place(&term);
        }
    }
    acc
}

/// All permutations of `0..n` paired with their parity (`true` = odd), in
/// lexicographic order.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, bool)>) {
        let n = used.len();
        if prefix.len() == n {
            let mut inversions = 0usize;
            for i in 0..n {
                for j in i + 1..n {
                    if prefix[i] > prefix[j] {
                        inversions += 1;
                    }
                }
            }
            out.push((prefix.clone(), inversions % 2 == 1));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}
