//! Entrywise polynomiality in `z` of `tr(word)(Q(H(z)), Z)`.
//!
//! The value is sampled on a tensor grid with `d + 1` nodes per variable, the
//! interpolating polynomial of degree `≤ d` in each `z_a` is fitted exactly, and
//! it must reproduce the value at seeded points off the grid. The node sets of
//! different variables are disjoint, so every grid point has distinct `z_a`.

use alloc::format;
use alloc::vec::Vec;

use super::report::{ConfigEcho, Tally, VerificationReport};
use super::format_list;
use crate::cm::{build_qz, Letter, TraceWord};
use crate::exact::linalg::inverse;
use crate::exact::matrix::{Matrix, OperatorMatrix};
use crate::exact::ring::{rat, rpow, Rational};
use crate::seed::SeededRationals;
use crate::{GaudinConfig, HamiltonianSet, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialitySetup {
    pub gl_n: usize,
    pub sites: usize,
    pub k: Vec<Rational>,
    pub word: TraceWord,
    /// Degree bound per variable `z_a`.
    pub degree: usize,
    pub holdout: usize,
    pub seed: u64,
}

impl PolynomialitySetup {
    /// Degree bound `(X-degree of the word) + 1` and three holdout points.
    pub fn new(gl_n: usize, sites: usize, k: Vec<Rational>, word: TraceWord, seed: u64) -> Self {
        let degree = word.degree(Letter::X) as usize + 1;
        Self {
            gl_n,
            sites,
            k,
            word,
            degree,
            holdout: 3,
            seed,
        }
    }

    fn value(&self, z: &[Rational]) -> Result<OperatorMatrix> {
        let cfg = GaudinConfig::new(self.gl_n, self.sites, self.k.clone(), z.to_vec())?;
        let set = HamiltonianSet::build(&cfg)?;
        Ok(self.word.evaluate(build_qz(z, set.h)?.pair()))
    }

    fn holdout_points(&self) -> Vec<Vec<Rational>> {
        let mut g = SeededRationals::new(self.seed);
        (0..self.holdout).map(|_| g.distinct(self.sites)).collect()
    }
}

/// Coefficients of `Σ c_m ∏ z_a^{m_a}`, multi-index `m` flattened with `m_1`
/// most significant.
struct Fit {
    m: usize,
    sites: usize,
    coeffs: Vec<OperatorMatrix>,
}

impl Fit {
    fn digits(&self, mut flat: usize) -> Vec<usize> {
        let mut d = alloc::vec![0; self.sites];
        for a in (0..self.sites).rev() {
            d[a] = flat % self.m;
            flat /= self.m;
        }
        d
    }

    fn eval(&self, z: &[Rational]) -> OperatorMatrix {
        let dim = self.coeffs[0].dim();
        let mut acc = Matrix::zeros(dim, ());
        for (flat, c) in self.coeffs.iter().enumerate() {
            if c.is_zero_matrix() {
                continue;
            }
            let mono = self
                .digits(flat)
                .iter()
                .zip(z)
                .fold(Rational::from_integer(1.into()), |p, (&e, za)| p * rpow(za, e as u32));
            acc = acc.add(&c.scale(&mono));
        }
        acc
    }
}

fn node(a: usize, k: usize, m: usize) -> Rational {
    rat((a * m + k) as i64)
}

fn fit(setup: &PolynomialitySetup, degree: usize) -> Result<Fit> {
    let (m, n) = (degree + 1, setup.sites);
    let total = m.pow(n as u32);
    let mut fit = Fit {
        m,
        sites: n,
        coeffs: Vec::with_capacity(total),
    };
    for flat in 0..total {
        let z: Vec<Rational> = fit.digits(flat).iter().enumerate().map(|(a, &k)| node(a, k, m)).collect();
        let v = setup.value(&z)?;
        fit.coeffs.push(v);
    }
    // Apply the inverse Vandermonde matrix along each axis in turn.
    for a in 0..n {
        let vand: Vec<Vec<Rational>> = (0..m)
            .map(|k| (0..m).map(|p| rpow(&node(a, k, m), p as u32)).collect())
            .collect();
        let vinv = inverse(&vand)?;
        let stride = m.pow((n - 1 - a) as u32);
        for base in 0..total {
            if (base / stride) % m != 0 {
                continue;
            }
            let fiber: Vec<OperatorMatrix> = (0..m).map(|k| fit.coeffs[base + k * stride].clone()).collect();
            for (p, row) in vinv.iter().enumerate() {
                let mut acc = Matrix::zeros(fiber[0].dim(), ());
                for (w, v) in row.iter().zip(&fiber) {
                    acc = acc.add(&v.scale(w));
                }
                fit.coeffs[base + p * stride] = acc;
            }
        }
    }
    Ok(fit)
}

/// Index and difference at the first holdout point the fit misses.
fn first_miss(setup: &PolynomialitySetup, fit: &Fit, points: &[Vec<Rational>]) -> Result<Option<usize>> {
    for (s, z) in points.iter().enumerate() {
        if fit.eval(z) != setup.value(z)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

pub fn verify_polynomiality(setup: &PolynomialitySetup) -> Result<VerificationReport> {
    let points = setup.holdout_points();
    let d = setup.degree;
    let f = fit(setup, d)?;
    let mut t = Tally::new();
    t.detail(format!(
        "degree bound {d} per variable: {} grid points, {} holdout points",
        f.coeffs.len(),
        points.len()
    ));
    for z in &points {
        t.matrix(|| format!("holdout point z = {}", format_list(z)), &f.eval(z), &setup.value(z)?);
    }
    if !t.passed() {
        let mut resolved = false;
        for extra in 1..=2 {
            if first_miss(setup, &fit(setup, d + extra)?, &points)?.is_none() {
                t.detail(format!(
                    "a fit of degree {} reproduces every holdout point: the bound {d} is too small",
                    d + extra
                ));
                resolved = true;
                break;
            }
        }
        if !resolved {
            t.detail(format!(
                "no fit up to degree {} reproduces the holdout points: not a polynomial of that degree",
                d + 2
            ));
        }
    }
    let echo = ConfigEcho {
        gl_n: Some(setup.gl_n),
        sites: Some(setup.sites),
        k: Some(setup.k.clone()),
        ..ConfigEcho::default()
    }
    .with_seed(setup.seed)
    .with("word", format!("{}", setup.word))
    .with("degree", format!("{d}"));
    Ok(t.finish("polynomiality", echo))
}
