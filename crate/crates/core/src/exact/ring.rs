use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational. `num_rational` keeps it reduced with a
/// positive denominator.
pub type Rational = BigRational;

/// A ring with unit whose elements know their own "shape".
///
/// Matrices need a dimension to produce a zero, so constructors take the shape
/// of an existing element. Multiplication is not assumed commutative; callers
/// that need commutativity (determinants) state it as a contract.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    type Shape: Clone + PartialEq + fmt::Debug;

    fn shape(&self) -> Self::Shape;
    fn zero_of(shape: &Self::Shape) -> Self;
    fn one_of(shape: &Self::Shape) -> Self;
    fn is_zero_elem(&self) -> bool;

    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;

    fn add_in_place(&mut self, other: &Self) {
        *self = self.plus(other);
    }

    /// `c · 1`.
    fn from_scalar(shape: &Self::Shape, c: &Rational) -> Self {
        Self::one_of(shape).scaled(c)
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one_of(&self.shape());
        for _ in 0..exp {
            acc = acc.times(self);
        }
        acc
    }
}

/// Rings where some elements have two-sided inverses computable exactly.
pub trait Invertible: Ring {
    fn inverse(&self) -> Option<Self>;
}

impl Invertible for Rational {
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Ring for Rational {
    type Shape = ();

    fn shape(&self) {}
    fn zero_of(_: &()) -> Self {
        Zero::zero()
    }
    fn one_of(_: &()) -> Self {
        One::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }
    fn add_in_place(&mut self, other: &Self) {
        *self += other;
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

/// `base^exp` with `0^0 = 1`.
pub fn rpow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow::pow(base.clone(), exp as usize)
}

/// Elementary symmetric polynomials `e_0..e_k` of the given values.
pub fn elementary_symmetric(values: &[Rational]) -> Vec<Rational> {
    let mut e = alloc::vec![Rational::one()];
    for v in values {
        e.push(Rational::zero());
        for k in (1..e.len()).rev() {
            let t = &e[k - 1] * v;
            e[k] += t;
        }
    }
    e
}

/// Complete homogeneous symmetric polynomials `h_0..h_max` of the given values.
pub fn complete_homogeneous(values: &[Rational], max: usize) -> Vec<Rational> {
    let mut h = alloc::vec![Rational::zero(); max + 1];
    h[0] = Rational::one();
    for v in values {
        // multiply the series by 1/(1 - v t)
        for k in 1..=max {
            let t = &h[k - 1] * v;
            h[k] += t;
        }
    }
    h
}

pub fn all_distinct(values: &[Rational]) -> bool {
    values
        .iter()
        .enumerate()
        .all(|(i, a)| values[i + 1..].iter().all(|b| a != b))
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}
