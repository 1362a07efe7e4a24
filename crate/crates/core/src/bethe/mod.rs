//! The Bethe algebra of `V(z_1) ⊗ … ⊗ V(z_n)` through the row determinant of
//! the universal differential operator.
//!
//! The operator
//!
//! ```text
//! D = rdet [ δ_ij (∂_u − K_i) − e_ji(u) ]_{i,j=1..N} = ∂^N + Σ_i B_i(u) ∂^{N−i}
//! ```
//!
//! is expanded exactly with matrix-valued rational coefficients, where
//! `e_ij(u) = Σ_a e_ij^(a) / (u − z_a)`. Generators `B_ij` and `Ψ_ij` are read
//! off the expansion at `u = ∞`.

pub mod diffop;

use alloc::format;
use alloc::vec::Vec;

pub use diffop::DiffOp;

use crate::exact::det::permutations;
use crate::exact::matrix::{Matrix, OperatorMatrix};
use crate::exact::poly::Poly;
use crate::exact::ratfun::{MatRatFun, PoleSet, RatFun};
use crate::exact::ring::{complete_homogeneous, Rational};
use crate::exact::series::BiSeries;
use crate::gaudin::GaudinConfig;
use crate::{Error, Result};

/// `e_ij(u) = Σ_a e_ij^(a) (u − z_a)^{−1}`, `i`, `j` 1-based.
pub fn current(i: usize, j: usize, cfg: &GaudinConfig) -> Result<MatRatFun> {
    current_with_poles(i, j, cfg, &PoleSet::new(cfg.z().to_vec()))
}

fn current_with_poles(i: usize, j: usize, cfg: &GaudinConfig, poles: &PoleSet) -> Result<MatRatFun> {
    let mut f = RatFun::zero(poles.clone(), (cfg.dim(), ()));
    for a in 1..=cfg.sites() {
        let e = cfg.rep().generator(i, j, a)?;
        f = f.add(&RatFun::pole(poles.clone(), a - 1, 1, e))?;
    }
    Ok(f)
}

/// The universal operator on `V^{⊗n}` with its coefficients `B_1..B_N`.
#[derive(Clone, Debug)]
pub struct BetheAlgebra {
    cfg: GaudinConfig,
    poles: PoleSet,
    operator: DiffOp<OperatorMatrix>,
}

impl BetheAlgebra {
    /// Expands the row determinant, multiplying each term's factors in row
    /// order `a_{1σ(1)} a_{2σ(2)} ⋯ a_{Nσ(N)}`.
    pub fn new(cfg: &GaudinConfig) -> Result<Self> {
        let poles = PoleSet::new(cfg.z().to_vec());
        let shape = (cfg.dim(), ());
        let n = cfg.gl_n();
        let d = DiffOp::derivation(poles.clone(), shape);
        let mut entries: Vec<Vec<DiffOp<OperatorMatrix>>> = Vec::with_capacity(n);
        for i in 1..=n {
            let mut row = Vec::with_capacity(n);
            for j in 1..=n {
                // (i, j) entry: δ_ij (∂ − K_i) − e_ji(u)
                let e = current_with_poles(j, i, cfg, &poles)?.neg();
                let mut entry = DiffOp::multiplication(e);
                if i == j {
                    let k = RatFun::constant(
                        poles.clone(),
                        Matrix::identity(cfg.dim(), ()).scale(&-cfg.k()[i - 1].clone()),
                    );
                    entry = entry.add(&d)?.add(&DiffOp::multiplication(k))?;
                }
                row.push(entry);
            }
            entries.push(row);
        }
        let mut operator = DiffOp::zero(poles.clone(), shape);
        for (perm, odd) in permutations(n) {
            let mut term = entries[0][perm[0]].clone();
            for (row, &col) in perm.iter().enumerate().skip(1) {
                term = term.mul(&entries[row][col])?;
            }
            operator = if odd {
                operator.sub(&term)?
            } else {
                operator.add(&term)?
            };
        }
        let alg = Self {
            cfg: cfg.clone(),
            poles,
            operator,
        };
        if alg.operator.order() != Some(n)
            || alg.operator.coeff(n) != RatFun::constant(alg.poles.clone(), Matrix::identity(cfg.dim(), ()))
        {
            return Err(Error::Internal("row determinant is not monic of order N".into()));
        }
        Ok(alg)
    }

    pub fn config(&self) -> &GaudinConfig {
        &self.cfg
    }

    pub fn poles(&self) -> &PoleSet {
        &self.poles
    }

    pub fn operator(&self) -> &DiffOp<OperatorMatrix> {
        &self.operator
    }

    /// `B_i(u)`, the coefficient of `∂^{N−i}`, for `0 ≤ i ≤ N` (`B_0 = 1`).
    pub fn b(&self, i: usize) -> MatRatFun {
        self.operator.coeff(self.cfg.gl_n() - i)
    }

    /// `B_ij`, the coefficient of `u^{−j}` in `B_i(u)`.
    pub fn b_coeff(&self, i: usize, j: usize) -> OperatorMatrix {
        self.b(i).coeff_at_infinity(j as i64)
    }

    /// `Ψ_l(u) = Σ_{i ≤ min(N, l)} B_i(u) h_{l−i}(K)`, the coefficient of
    /// `x^{−l}` in `(x^N + Σ B_i(u) x^{N−i}) ∏ (x − K_i)^{−1}`.
    pub fn psi(&self, l: usize) -> Result<MatRatFun> {
        let h = complete_homogeneous(self.cfg.k(), l);
        let mut acc = RatFun::zero(self.poles.clone(), (self.cfg.dim(), ()));
        for i in 0..=l.min(self.cfg.gl_n()) {
            acc = acc.add(&self.b(i).scale(&h[l - i]))?;
        }
        if l >= 1 && !acc.is_zero() && !acc.polynomial_part().is_empty() {
            return Err(Error::Internal(format!("Ψ_{l}(u) has a polynomial part")));
        }
        Ok(acc)
    }

    /// `Ψ_ij` for `1 ≤ i ≤ I`, `1 ≤ j ≤ J`.
    pub fn psi_series(&self, max_i: usize, max_j: usize) -> Result<BiSeries<OperatorMatrix>> {
        let rows = (1..=max_i)
            .map(|i| {
                let psi = self.psi(i)?;
                Ok((1..=max_j).map(|j| psi.coeff_at_infinity(j as i64)).collect())
            })
            .collect::<Result<Vec<Vec<_>>>>()?;
        Ok(BiSeries::new((self.cfg.dim(), ()), rows))
    }

    /// Coefficients of `x^{−1}, …, x^{−I}` in `Ψ†(x) = −Σ_i Ψ_{i1} x^{−i}`.
    pub fn psi_dagger(&self, max_i: usize) -> Result<Vec<OperatorMatrix>> {
        (1..=max_i)
            .map(|i| Ok(self.psi(i)?.coeff_at_infinity(1).neg()))
            .collect()
    }

    /// `P(u) · D = Σ_{i,a} A_ia u^a ∂^i` with `P(u) = ∏ (u − z_a)`.
    pub fn regularized(&self) -> Result<RegularizedOperator> {
        let p = Poly::from_roots(self.cfg.z());
        let n = self.cfg.gl_n();
        let sites = self.cfg.sites();
        let mut a = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let c = self.operator.coeff(i).mul_scalar_poly(p.coeffs())?;
            if !c.is_polynomial() {
                let (&(pole, order), _) = c.pole_terms().iter().next().unwrap();
                return Err(Error::RegularizationFailed(format!(
                    "coefficient of ∂^{i} keeps a pole of order {order} at z_{}",
                    pole + 1
                )));
            }
            if c.polynomial_part().len() > sites + 1 {
                return Err(Error::RegularizationFailed(format!(
                    "coefficient of ∂^{i} has degree {} > n",
                    c.polynomial_part().len() - 1
                )));
            }
            a.push((0..=sites).map(|d| c.coeff_at_infinity(-(d as i64))).collect());
        }
        Ok(RegularizedOperator { a })
    }

    /// Reassembles `B_i(u)` coefficients from `Ψ(u, x) ∏ (x − K_i)`: returns
    /// `Σ_r (−1)^r e_r(K) Ψ_{l−r, j}` for `l = 1..=max_l`, `j = 1..=max_j`
    /// (`Ψ_{0,j} = 0` for `j ≥ 1`). Equals `B_lj` for `l ≤ N` and zero beyond.
    pub fn b_from_psi(&self, max_l: usize, max_j: usize) -> Result<Vec<Vec<OperatorMatrix>>> {
        let e = crate::exact::ring::elementary_symmetric(self.cfg.k());
        let psi = self.psi_series(max_l, max_j)?;
        let zero = Matrix::zeros(self.cfg.dim(), ());
        Ok((1..=max_l)
            .map(|l| {
                (1..=max_j)
                    .map(|j| {
                        let mut acc = zero.clone();
                        for (r, er) in e.iter().enumerate().take(l) {
                            let mut c = er.clone();
                            if r % 2 == 1 {
                                c = -c;
                            }
                            acc = acc.add(&psi.coeff(l - r, j).scale(&c));
                        }
                        acc
                    })
                    .collect()
            })
            .collect())
    }
}

/// Coefficients `A_ia` of `P(u) D = Σ_{i=0}^N Σ_{a=0}^n A_ia u^a ∂^i`.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularizedOperator {
    /// `a[i][a]`.
    pub a: Vec<Vec<OperatorMatrix>>,
}

impl RegularizedOperator {
    pub fn coeff(&self, i: usize, a: usize) -> &OperatorMatrix {
        &self.a[i][a]
    }
}

pub fn universal_operator(cfg: &GaudinConfig) -> Result<BetheAlgebra> {
    BetheAlgebra::new(cfg)
}

pub fn psi_biseries(cfg: &GaudinConfig, max_i: usize, max_j: usize) -> Result<BiSeries<OperatorMatrix>> {
    BetheAlgebra::new(cfg)?.psi_series(max_i, max_j)
}

/// Default truncation `max(6, N + 2)`.
pub fn default_order(gl_n: usize) -> usize {
    6.max(gl_n + 2)
}

/// `B_{i0}` expected from `∏ (∂ − K_i)`: `(−1)^i e_i(K)`.
pub fn expected_constant_terms(k: &[Rational]) -> Vec<Rational> {
    crate::exact::ring::elementary_symmetric(k)
        .into_iter()
        .enumerate()
        .map(|(i, e)| if i % 2 == 1 { -e } else { e })
        .collect()
}
