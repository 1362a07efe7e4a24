//! Differential operators `Σ_k C_k(u) ∂_u^k` with rational-function
//! coefficients.

use alloc::vec;
use alloc::vec::Vec;

use crate::exact::ratfun::{PoleSet, RatFun};
use crate::exact::ring::{binomial, Ring};
use crate::Result;

#[derive(Clone, Debug, PartialEq)]
pub struct DiffOp<R: Ring> {
    poles: PoleSet,
    shape: R::Shape,
    /// `coeffs[k]` multiplies `∂^k`; the last one is nonzero.
    coeffs: Vec<RatFun<R>>,
}

impl<R: Ring> DiffOp<R> {
    pub fn zero(poles: PoleSet, shape: R::Shape) -> Self {
        Self {
            poles,
            shape,
            coeffs: Vec::new(),
        }
    }

    /// Multiplication by `f`.
    pub fn multiplication(f: RatFun<R>) -> Self {
        Self::from_coeffs(f.poles().clone(), f.shape().clone(), vec![f])
    }

    /// `∂_u`.
    pub fn derivation(poles: PoleSet, shape: R::Shape) -> Self {
        let one = RatFun::constant(poles.clone(), R::one_of(&shape));
        let zero = RatFun::zero(poles.clone(), shape.clone());
        Self::from_coeffs(poles, shape, vec![zero, one])
    }

    pub fn from_coeffs(poles: PoleSet, shape: R::Shape, coeffs: Vec<RatFun<R>>) -> Self {
        let mut d = Self {
            poles,
            shape,
            coeffs,
        };
        while d.coeffs.last().is_some_and(RatFun::is_zero) {
            d.coeffs.pop();
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest power of `∂` present; `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `∂^k`.
    pub fn coeff(&self, k: usize) -> RatFun<R> {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| RatFun::zero(self.poles.clone(), self.shape.clone()))
    }

    pub fn coeffs(&self) -> &[RatFun<R>] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| self.coeff(k).add(&other.coeff(k)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(self.poles.clone(), self.shape.clone(), coeffs))
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(
            self.poles.clone(),
            self.shape.clone(),
            self.coeffs.iter().map(RatFun::neg).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Composition `self ∘ other`, moving derivatives to the right with
    /// `∂^k ∘ f = Σ_r C(k, r) f^{(r)} ∂^{k−r}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.poles.clone(), self.shape.clone()));
        }
        let max_k = self.coeffs.len() - 1;
        // derivatives[m][r] = (B_m)^{(r)}
        let derivatives: Vec<Vec<RatFun<R>>> = other
            .coeffs
            .iter()
            .map(|b| {
                let mut ds = vec![b.clone()];
                for r in 1..=max_k {
                    let next = ds[r - 1].derivative();
                    ds.push(next);
                }
                ds
            })
            .collect();
        let mut out: Vec<RatFun<R>> =
            vec![RatFun::zero(self.poles.clone(), self.shape.clone()); max_k + other.coeffs.len()];
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (m, ds) in derivatives.iter().enumerate() {
                for (r, d) in ds.iter().enumerate().take(k + 1) {
                    if d.is_zero() {
                        continue;
                    }
                    let term = a.mul(d)?.scale(&binomial(k as u64, r as u64));
                    let slot = k - r + m;
                    out[slot] = out[slot].add(&term)?;
                }
            }
        }
        Ok(Self::from_coeffs(self.poles.clone(), self.shape.clone(), out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::{rat, Rational};

    fn poles() -> PoleSet {
        PoleSet::new(vec![rat(2)])
    }

    #[test]
    fn leibniz_over_simple_pole() {
        let p = poles();
        let d = DiffOp::<Rational>::derivation(p.clone(), ());
        let f = RatFun::pole(p.clone(), 0, 1, rat(1));
        let lhs = d.mul(&DiffOp::multiplication(f.clone())).unwrap();
        let rhs = DiffOp::from_coeffs(
            p.clone(),
            (),
            vec![RatFun::pole(p.clone(), 0, 2, rat(-1)), f],
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_of_shifted_derivation() {
        let p = poles();
        let c = rat(3);
        let d = DiffOp::<Rational>::derivation(p.clone(), ())
            .sub(&DiffOp::multiplication(RatFun::constant(p.clone(), c.clone())))
            .unwrap();
        let sq = d.mul(&d).unwrap();
        assert_eq!(sq.order(), Some(2));
        assert_eq!(sq.coeff(1), RatFun::constant(p.clone(), rat(-6)));
        assert_eq!(sq.coeff(0), RatFun::constant(p, rat(9)));
    }
}
