//! Wronskians of `f_a(x) = (x + μ_a) e^{z_a x}`, with the exponentials divided
//! out using `f_a^{(k)} = ((x + μ_a) z_a^k + k z_a^{k−1}) e^{z_a x}`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::inverse_gap_sum;
use crate::exact::det::det;
use crate::exact::matrix::Matrix;
use crate::exact::ring::{all_distinct, rat, rpow, Rational};
use crate::{Error, Result};

/// `Δ = ∏_{a<b} (z_b − z_a)`.
pub fn delta(z: &[Rational]) -> Rational {
    let mut acc = Rational::one();
    for a in 0..z.len() {
        for b in a + 1..z.len() {
            acc *= &z[b] - &z[a];
        }
    }
    acc
}

/// `S_{ab} = z_b^{a−1}`.
pub fn vandermonde(z: &[Rational]) -> Matrix<Rational> {
    let rows = (0..z.len())
        .map(|a| z.iter().map(|zb| rpow(zb, a as u32)).collect())
        .collect();
    Matrix::from_dense((), rows)
}

/// `h_a = −μ_a − Σ_{b≠a} 1/(z_a − z_b)`.
pub fn momenta_from_mu(z: &[Rational], mu: &[Rational]) -> Result<Vec<Rational>> {
    check(z, mu)?;
    Ok((0..z.len()).map(|a| -&mu[a] - inverse_gap_sum(z, a)).collect())
}

fn check(z: &[Rational], mu: &[Rational]) -> Result<()> {
    if z.len() != mu.len() {
        return Err(Error::DimensionMismatch(alloc::format!(
            "{} points z but {} parameters mu",
            z.len(),
            mu.len()
        )));
    }
    if !all_distinct(z) {
        return Err(Error::CoincidentPoints);
    }
    Ok(())
}

/// Row `k = 0..len` of derivatives of `f_a` at `x`, exponential removed.
fn derivative_row(za: &Rational, mua: &Rational, x: &Rational, len: usize) -> Vec<Rational> {
    (0..len)
        .map(|k| {
            let lower = if k == 0 {
                Rational::zero()
            } else {
                rat(k as i64) * rpow(za, k as u32 - 1)
            };
            (x + mua) * rpow(za, k as u32) + lower
        })
        .collect()
}

/// `W(u*, x*) = e^{−u x − Σ z_a x} Wr[f_1, …, f_n, e^{u x}]` at `x = x*`.
pub fn wronskian_bivariate(
    z: &[Rational],
    mu: &[Rational],
    u: &Rational,
    x: &Rational,
) -> Result<Rational> {
    check(z, mu)?;
    let len = z.len() + 1;
    let mut rows: Vec<Vec<Rational>> = z
        .iter()
        .zip(mu)
        .map(|(za, mua)| derivative_row(za, mua, x, len))
        .collect();
    rows.push((0..len).map(|k| rpow(u, k as u32)).collect());
    Ok(det(&Matrix::from_dense((), rows)))
}

/// `W_0(x*) = e^{−Σ z_a x} Wr[f_1, …, f_n]` at `x = x*`.
pub fn wronskian_zero(z: &[Rational], mu: &[Rational], x: &Rational) -> Result<Rational> {
    check(z, mu)?;
    let rows = z
        .iter()
        .zip(mu)
        .map(|(za, mua)| derivative_row(za, mua, x, z.len()))
        .collect();
    Ok(det(&Matrix::from_dense((), rows)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cm::build_qz;
    use crate::exact::linalg::det_lu;
    use crate::seed::SeededRationals;

    #[test]
    fn single_point_by_hand() {
        let (z, mu, u, x) = (rat(2), rat(3), rat(5), rat(-1));
        let w = wronskian_bivariate(core::slice::from_ref(&z), core::slice::from_ref(&mu), &u, &x).unwrap();
        assert_eq!(w, (&u - &z) * (&x + &mu) - rat(1));
        assert_eq!(momenta_from_mu(&[z], core::slice::from_ref(&mu)).unwrap(), [-mu]);
    }

    #[test]
    fn bivariate_matches_determinant() {
        let mut g = SeededRationals::new(21);
        for n in 1..=4 {
            for _ in 0..3 {
                let z = g.distinct(n);
                let mu = g.rationals(n);
                let (u, x) = (g.next_rational(), g.next_rational());
                let qz = build_qz(&z, momenta_from_mu(&z, &mu).unwrap()).unwrap();
                let w = wronskian_bivariate(&z, &mu, &u, &x).unwrap();
                assert_eq!(w, delta(&z) * qz.cleared_det(&u, &x));
                assert_eq!(wronskian_zero(&z, &mu, &x).unwrap(), delta(&z) * qz.phi(&x));
            }
        }
    }

    #[test]
    fn vandermonde_determinant() {
        let mut g = SeededRationals::new(4);
        let z = g.distinct(4);
        assert_eq!(det_lu(&vandermonde(&z).to_dense()), delta(&z));
        assert_eq!(delta(&[rat(0), rat(1), rat(3)]), rat(6));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            wronskian_zero(&[rat(1), rat(1)], &[rat(0), rat(0)], &rat(0)),
            Err(Error::CoincidentPoints)
        );
        assert!(wronskian_zero(&[rat(1)], &[], &rat(0)).is_err());
    }
}
