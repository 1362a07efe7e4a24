//! Rational functions of one variable `u` with poles restricted to a fixed
//! finite set `{z_1, …, z_n}`, kept in partial-fraction normal form
//!
//! ```text
//! f(u) = Σ_m c_m u^m + Σ_{a,k} c_{a,k} (u − z_a)^{−k}
//! ```
//!
//! with coefficients in any [`Ring`]. Products keep the left/right order of
//! coefficients, so matrix-valued functions multiply correctly.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::matrix::OperatorMatrix;
use super::ring::{binomial, rat, rpow, Rational, Ring};
use crate::{Error, Result};

/// The pole locations shared by a family of rational functions.
#[derive(Clone)]
pub struct PoleSet(Arc<Vec<Rational>>);

impl PoleSet {
    pub fn new(z: Vec<Rational>) -> Self {
        Self(Arc::new(z))
    }

    pub fn points(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn same(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl PartialEq for PoleSet {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl fmt::Debug for PoleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter().map(|z| alloc::format!("{z}"))).finish()
    }
}

#[derive(Clone, Debug)]
pub struct RatFun<R: Ring = Rational> {
    poles: PoleSet,
    shape: R::Shape,
    poly: Vec<R>,
    terms: BTreeMap<(usize, u32), R>,
}

/// Matrix-valued rational function on `V^{⊗n}`.
pub type MatRatFun = RatFun<OperatorMatrix>;

impl<R: Ring> PartialEq for RatFun<R> {
    fn eq(&self, other: &Self) -> bool {
        self.poles == other.poles
            && self.shape == other.shape
            && self.poly == other.poly
            && self.terms == other.terms
    }
}

fn accumulate<K: Ord, R: Ring>(map: &mut BTreeMap<K, R>, key: K, v: R) {
    if v.is_zero_elem() {
        return;
    }
    match map.get_mut(&key) {
        Some(slot) => slot.add_in_place(&v),
        None => {
            map.insert(key, v);
        }
    }
}

/// Coefficients of `(u − z)^p` in powers of `u`.
fn shifted_power(z: &Rational, p: u32) -> Vec<Rational> {
    let mz = -z.clone();
    (0..=p)
        .map(|r| binomial(p as u64, r as u64) * rpow(&mz, p - r))
        .collect()
}

impl<R: Ring> RatFun<R> {
    pub fn zero(poles: PoleSet, shape: R::Shape) -> Self {
        Self {
            poles,
            shape,
            poly: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(poles: PoleSet, c: R) -> Self {
        Self::polynomial(poles, vec![c])
    }

    /// `Σ_m coeffs[m] u^m`.
    pub fn polynomial(poles: PoleSet, coeffs: Vec<R>) -> Self {
        let shape = coeffs
            .first()
            .map(Ring::shape)
            .expect("polynomial needs at least one coefficient to fix its shape");
        let mut f = Self::zero(poles, shape);
        f.poly = coeffs;
        f.normalize();
        f
    }

    /// `c · (u − z_a)^{−k}` with `a` a 0-based pole index and `k ≥ 1`.
    pub fn pole(poles: PoleSet, a: usize, k: u32, c: R) -> Self {
        assert!(a < poles.len(), "pole index {a} out of range");
        assert!(k >= 1, "pole order must be positive");
        let mut f = Self::zero(poles, c.shape());
        accumulate(&mut f.terms, (a, k), c);
        f
    }

    pub fn from_parts(
        poles: PoleSet,
        shape: R::Shape,
        poly: Vec<R>,
        terms: BTreeMap<(usize, u32), R>,
    ) -> Self {
        let mut f = Self {
            poles,
            shape,
            poly,
            terms,
        };
        f.normalize();
        f
    }

    fn normalize(&mut self) {
        while self.poly.last().is_some_and(Ring::is_zero_elem) {
            self.poly.pop();
        }
        self.terms.retain(|_, v| !v.is_zero_elem());
    }

    pub fn poles(&self) -> &PoleSet {
        &self.poles
    }

    pub fn shape(&self) -> &R::Shape {
        &self.shape
    }

    pub fn polynomial_part(&self) -> &[R] {
        &self.poly
    }

    /// Nonzero `(pole index, order) → coefficient` terms.
    pub fn pole_terms(&self) -> &BTreeMap<(usize, u32), R> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_empty() && self.terms.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `(u − z_a)^{−k}`.
    pub fn pole_coeff(&self, a: usize, k: u32) -> R {
        self.terms
            .get(&(a, k))
            .cloned()
            .unwrap_or_else(|| R::zero_of(&self.shape))
    }

    pub fn residue(&self, a: usize) -> R {
        self.pole_coeff(a, 1)
    }

    pub fn max_pole_order(&self) -> u32 {
        self.terms.keys().map(|&(_, k)| k).max().unwrap_or(0)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.poles == other.poles {
            Ok(())
        } else {
            Err(Error::IncompatiblePoleSets)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        if out.poly.len() < other.poly.len() {
            out.poly.resize(other.poly.len(), R::zero_of(&self.shape));
        }
        for (slot, c) in out.poly.iter_mut().zip(&other.poly) {
            slot.add_in_place(c);
        }
        for (k, v) in &other.terms {
            accumulate(&mut out.terms, *k, v.clone());
        }
        out.normalize();
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(Ring::negated)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map_coeffs(|v| v.scaled(c))
    }

    /// `c · f` (coefficientwise left multiplication).
    pub fn left_mul(&self, c: &R) -> Self {
        self.map_coeffs(|v| c.times(v))
    }

    /// `f · c`.
    pub fn right_mul(&self, c: &R) -> Self {
        self.map_coeffs(|v| v.times(c))
    }

    fn map_coeffs(&self, f: impl Fn(&R) -> R) -> Self {
        let mut out = Self {
            poles: self.poles.clone(),
            shape: self.shape.clone(),
            poly: self.poly.iter().map(&f).collect(),
            terms: self.terms.iter().map(|(k, v)| (*k, f(v))).collect(),
        };
        out.normalize();
        out
    }

    /// Changes the coefficient ring.
    pub fn map_ring<S: Ring>(&self, shape: S::Shape, f: impl Fn(&R) -> S) -> RatFun<S> {
        RatFun::from_parts(
            self.poles.clone(),
            shape,
            self.poly.iter().map(&f).collect(),
            self.terms.iter().map(|(k, v)| (*k, f(v))).collect(),
        )
    }

    /// Product `self · other`; coefficients multiply in that order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let z = self.poles.points();
        let mut poly: BTreeMap<usize, R> = BTreeMap::new();
        let mut terms: BTreeMap<(usize, u32), R> = BTreeMap::new();

        for (i, a) in self.poly.iter().enumerate() {
            for (j, b) in other.poly.iter().enumerate() {
                accumulate(&mut poly, i + j, a.times(b));
            }
        }

        // u^m · (u − z_a)^{−k} and (u − z_a)^{−k} · u^m give the same scalar
        // expansion; only the coefficient product order differs.
        let mut spread = |m: usize, a: usize, k: u32, prod: R| {
            let za = &z[a];
            for q in 0..=m as u32 {
                let c = binomial(m as u64, q as u64) * rpow(za, m as u32 - q);
                if c.is_zero() {
                    continue;
                }
                let p = prod.scaled(&c);
                if q < k {
                    accumulate(&mut terms, (a, k - q), p);
                } else {
                    for (r, s) in shifted_power(za, q - k).iter().enumerate() {
                        if !s.is_zero() {
                            accumulate(&mut poly, r, p.scaled(s));
                        }
                    }
                }
            }
        };
        for (m, a) in self.poly.iter().enumerate() {
            for (&(pa, k), b) in &other.terms {
                spread(m, pa, k, a.times(b));
            }
        }
        for (&(pa, k), a) in &self.terms {
            for (m, b) in other.poly.iter().enumerate() {
                spread(m, pa, k, a.times(b));
            }
        }

        for (&(a, k), x) in &self.terms {
            for (&(b, l), y) in &other.terms {
                let prod = x.times(y);
                if a == b {
                    accumulate(&mut terms, (a, k + l), prod);
                    continue;
                }
                for (pole, order, other_order, d) in
                    [(a, k, l, &z[a] - &z[b]), (b, l, k, &z[b] - &z[a])]
                {
                    let dinv = d.recip();
                    for i in 1..=order {
                        let sign = if (order - i) % 2 == 0 { rat(1) } else { rat(-1) };
                        let c = sign
                            * binomial((other_order + order - i - 1) as u64, (order - i) as u64)
                            * rpow(&dinv, other_order + order - i);
                        accumulate(&mut terms, (pole, i), prod.scaled(&c));
                    }
                }
            }
        }

        let deg = poly.keys().next_back().map_or(0, |&d| d + 1);
        let mut dense = vec![R::zero_of(&self.shape); deg];
        for (d, v) in poly {
            dense[d] = v;
        }
        Ok(Self::from_parts(self.poles.clone(), self.shape.clone(), dense, terms))
    }

    pub fn derivative(&self) -> Self {
        let poly = self
            .poly
            .iter()
            .enumerate()
            .skip(1)
            .map(|(m, c)| c.scaled(&rat(m as i64)))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(&(a, k), c)| ((a, k + 1), c.scaled(&rat(-(k as i64)))))
            .collect();
        Self::from_parts(self.poles.clone(), self.shape.clone(), poly, terms)
    }

    /// Value at a point outside the pole set.
    pub fn eval(&self, u: &Rational) -> Result<R> {
        let mut acc = R::zero_of(&self.shape);
        for c in self.poly.iter().rev() {
            acc = acc.scaled(u).plus(c);
        }
        for (&(a, k), c) in &self.terms {
            let d = u - &self.poles.points()[a];
            if d.is_zero() {
                return Err(Error::SpectralPoint);
            }
            acc.add_in_place(&c.scaled(&rpow(&d.recip(), k)));
        }
        Ok(acc)
    }

    /// Coefficient of `u^{−j}` in the expansion at `u = ∞`; for `j ≤ 0` this is
    /// the polynomial coefficient of `u^{|j|}`.
    ///
    /// Uses `(u − z)^{−k} = Σ_{j ≥ k} C(j−1, k−1) z^{j−k} u^{−j}`.
    pub fn coeff_at_infinity(&self, j: i64) -> R {
        if j <= 0 {
            return self
                .poly
                .get((-j) as usize)
                .cloned()
                .unwrap_or_else(|| R::zero_of(&self.shape));
        }
        let j = j as u32;
        let mut acc = R::zero_of(&self.shape);
        for (&(a, k), c) in &self.terms {
            if k <= j {
                let w = binomial((j - 1) as u64, (k - 1) as u64)
                    * rpow(&self.poles.points()[a], j - k);
                if !w.is_zero() {
                    acc.add_in_place(&c.scaled(&w));
                }
            }
        }
        acc
    }

    /// Multiplies by a scalar polynomial `p(u)` given by its coefficients.
    pub fn mul_scalar_poly(&self, p: &[Rational]) -> Result<Self> {
        let one = R::one_of(&self.shape);
        let lifted = RatFun::from_parts(
            self.poles.clone(),
            self.shape.clone(),
            p.iter().map(|c| one.scaled(c)).collect(),
            BTreeMap::new(),
        );
        lifted.mul(self)
    }
}

impl RatFun<Rational> {
    pub fn one(poles: PoleSet) -> Self {
        Self::constant(poles, Rational::one())
    }

    /// Lifts to matrix coefficients `f(u) · m`.
    pub fn times_matrix(&self, m: &OperatorMatrix) -> MatRatFun {
        self.map_ring((m.dim(), ()), |c| m.scale(c))
    }
}
