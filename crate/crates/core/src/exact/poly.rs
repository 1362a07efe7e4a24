//! Dense univariate polynomials over a [`Ring`].

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::{rat, Rational, Ring};

/// Coefficients indexed by degree. The zero polynomial has no coefficients and
/// the last stored coefficient is never zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<R: Ring = Rational> {
    shape: R::Shape,
    coeffs: Vec<R>,
}

impl Poly<Rational> {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Self::with_shape((), coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// `∏ (t − r)` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::constant(&(), Rational::one()), |acc, r| {
            acc.mul(&Self::new(vec![-r.clone(), Rational::one()]))
        })
    }

    /// Division with remainder over the rationals. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::new(Vec::new()), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor. Remainders are kept primitive, which
    /// holds back coefficient growth in the Euclidean sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let r = a.div_rem(&b).1.primitive();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Integer coefficients with content 1 and positive leading coefficient,
    /// equal to `self` up to a rational factor.
    pub fn primitive(&self) -> Self {
        let Some(lead) = self.leading() else {
            return self.clone();
        };
        let denom = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&denom / c.denom())).collect();
        let mut content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if lead.is_negative() {
            content = -content;
        }
        Self::new(ints.into_iter().map(|c| Rational::from_integer(c / &content)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// True when the polynomial has no repeated roots over an algebraic closure.
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }
}

impl<R: Ring> Poly<R> {
    pub fn with_shape(shape: R::Shape, coeffs: Vec<R>) -> Self {
        let mut p = Self { shape, coeffs };
        p.trim();
        p
    }

    pub fn constant(shape: &R::Shape, c: R) -> Self {
        Self::with_shape(shape.clone(), vec![c])
    }

    pub fn shape(&self) -> &R::Shape {
        &self.shape
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Ring::is_zero_elem) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `t^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| R::zero_of(&self.shape))
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::with_shape(self.shape.clone(), coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::with_shape(
            self.shape.clone(),
            self.coeffs.iter().map(Ring::negated).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product with coefficients multiplied as `self_i · other_j`.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::with_shape(self.shape.clone(), Vec::new());
        }
        let mut out = vec![R::zero_of(&self.shape); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_in_place(&a.times(b));
            }
        }
        Self::with_shape(self.shape.clone(), out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::with_shape(
            self.shape.clone(),
            self.coeffs.iter().map(|a| a.scaled(c)).collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a.scaled(&rat(k as i64)))
            .collect();
        Self::with_shape(self.shape.clone(), coeffs)
    }

    /// Horner evaluation at a scalar point.
    pub fn eval(&self, t: &Rational) -> R {
        let mut acc = R::zero_of(&self.shape);
        for c in self.coeffs.iter().rev() {
            acc = acc.scaled(t).plus(c);
        }
        acc
    }
}
