//! Cross-checks between the row-determinant pipeline ([`crate::bethe`]) and
//! the determinant formulas in the Hamiltonians ([`crate::cm`]), plus the
//! identities each side satisfies on its own.
//!
//! Every comparison is exact. A report passes iff all of its residuals vanish.

mod polynomiality;
mod report;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bethe::{expected_constant_terms, BetheAlgebra};
use crate::cm::{self, build_qz, phi0_expansion, TraceWord};
use crate::exact::det::{char_poly, det};
use crate::exact::matrix::{Matrix, OperatorMatrix};
use crate::exact::poly::Poly;
use crate::exact::ratfun::RatFun;
use crate::exact::ring::{format_rational, rpow, Rational};
use crate::gaudin::{
    hamiltonian, joint_eigenspace_dims, simple_spectrum_certificate, unital_algebra_dimension,
    weighted_cartan, HamiltonianSet,
};
use crate::seed::SeededRationals;
use crate::tensor_rep::Weight;
use crate::{Error, GaudinConfig, Result};

pub use polynomiality::{verify_polynomiality, PolynomialitySetup};
pub use report::{ConfigEcho, Residual, VerificationReport};
use report::Tally;

/// Largest space on which brute-force joint eigenspaces are attempted.
pub const BRUTE_FORCE_DIM_LIMIT: usize = 16;

pub(crate) fn format_list(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

fn format_weight(w: &Weight) -> String {
    let parts: Vec<String> = w.components().iter().map(|c| format!("{c}")).collect();
    format!("({})", parts.join(","))
}

fn identity(cfg: &GaudinConfig) -> OperatorMatrix {
    Matrix::identity(cfg.dim(), ())
}

fn zero(cfg: &GaudinConfig) -> OperatorMatrix {
    Matrix::zeros(cfg.dim(), ())
}

/// `Ψ_ij` from the row determinant against `φ°_ij(Q(H), Z)` for
/// `1 ≤ i ≤ max_i`, `1 ≤ j ≤ max_j`.
///
/// Fails with [`Error::NotCommuting`] before any determinant is taken if the
/// Hamiltonians do not commute.
pub fn verify_main_theorem(cfg: &GaudinConfig, max_i: usize, max_j: usize) -> Result<VerificationReport> {
    let set = HamiltonianSet::build(cfg)?;
    let psi = BetheAlgebra::new(cfg)?.psi_series(max_i, max_j)?;
    let qz = build_qz(cfg.z(), set.h)?;
    let phi = phi0_expansion(qz.pair(), max_i, max_j)?;
    let mut t = Tally::new();
    t.condition(psi.constant() == phi.constant(), || "constant term".into());
    for ((i, j, lhs), (_, _, rhs)) in psi.iter().zip(phi.iter()) {
        t.matrix(|| format!("Psi_{{{i},{j}}} vs psi_{{{i},{j}}}(z, H)"), lhs, rhs);
    }
    t.detail(format!(
        "{} operator coefficients of size {} compared",
        max_i * max_j,
        cfg.dim()
    ));
    Ok(t.finish("main_theorem", ConfigEcho::of(cfg).with_orders(max_i, max_j)))
}

/// `[H_a, H_b] = 0` for all pairs and `Σ_a H_a = Σ_i K_i E_ii`.
pub fn verify_commutativity(cfg: &GaudinConfig) -> Result<VerificationReport> {
    let h = (1..=cfg.sites())
        .map(|a| hamiltonian(a, cfg))
        .collect::<Result<Vec<_>>>()?;
    let mut t = Tally::new();
    let z = zero(cfg);
    for a in 0..h.len() {
        for b in a + 1..h.len() {
            t.matrix(|| format!("[H_{}, H_{}]", a + 1, b + 1), &h[a].commutator(&h[b]), &z);
        }
    }
    let sum = h.iter().fold(zero(cfg), |acc, m| acc.add(m));
    t.matrix(|| "sum of H_a vs sum of K_i E_ii".into(), &sum, &weighted_cartan(cfg)?);
    for (a, ha) in h.iter().enumerate() {
        for i in 1..=cfg.gl_n() {
            let e = cfg.rep().total(i, i)?;
            t.matrix(|| format!("[H_{}, E_{i}{i}]", a + 1), &ha.commutator(&e), &z);
        }
    }
    Ok(t.finish("commutativity", ConfigEcho::of(cfg)))
}

/// `[Ψ_ij, Ψ_kl] = 0` and `[Ψ_ij, E_ss] = 0` for indices up to `max`.
pub fn verify_bethe_commutativity(cfg: &GaudinConfig, max: usize) -> Result<VerificationReport> {
    let psi = BetheAlgebra::new(cfg)?.psi_series(max, max)?;
    let coeffs: Vec<(usize, usize, &OperatorMatrix)> = psi.iter().collect();
    let z = zero(cfg);
    let mut t = Tally::new();
    for (p, &(i, j, a)) in coeffs.iter().enumerate() {
        for &(k, l, b) in &coeffs[p + 1..] {
            t.matrix(|| format!("[Psi_{{{i},{j}}}, Psi_{{{k},{l}}}]"), &a.commutator(b), &z);
        }
        for s in 1..=cfg.gl_n() {
            let e = cfg.rep().total(s, s)?;
            t.matrix(|| format!("[Psi_{{{i},{j}}}, E_{s}{s}]"), &a.commutator(&e), &z);
        }
    }
    if cfg.k_all_equal() {
        let basis = cfg.rep().singular_basis()?;
        for &(i, j, a) in &coeffs {
            let ok = crate::exact::linalg::restrict_to_subspace(a, &basis).is_ok();
            t.condition(ok, || format!("Psi_{{{i},{j}}} preserves singular vectors"));
        }
        t.detail(format!("singular subspace of dimension {} checked", basis.len()));
    }
    Ok(t.finish("bethe_commutativity", ConfigEcho::of(cfg).with_orders(max, max)))
}

/// `B_{i0} = (−1)^i e_i(K) · 1`, i.e. the constant part of `D` is `∏ (∂ − K_i)`.
pub fn verify_constant_terms(cfg: &GaudinConfig) -> Result<VerificationReport> {
    let b = BetheAlgebra::new(cfg)?;
    let expected = expected_constant_terms(cfg.k());
    let id = identity(cfg);
    let mut t = Tally::new();
    for (i, e) in expected.iter().enumerate().skip(1) {
        t.matrix(|| format!("B_{{{i},0}}"), &b.b_coeff(i, 0), &id.scale(e));
    }
    t.condition(b.operator().order() == Some(cfg.gl_n()), || "order of D".into());
    t.matrix(|| "leading coefficient of D".into(), &b.b_coeff(0, 0), &id);
    Ok(t.finish("constant_terms", ConfigEcho::of(cfg)))
}

/// `Σ_m x^{−m} Σ_i K_i^{m−1} E_ii`, the expansion of `Σ_{i,a} e_ii^(a)/(x − K_i)`,
/// for `m = 1..=max_i`.
fn eii_expansion(cfg: &GaudinConfig, max_i: usize) -> Result<Vec<OperatorMatrix>> {
    let totals = (1..=cfg.gl_n())
        .map(|i| cfg.rep().total(i, i))
        .collect::<Result<Vec<_>>>()?;
    Ok((1..=max_i)
        .map(|m| {
            totals
                .iter()
                .zip(cfg.k())
                .fold(zero(cfg), |acc, (e, k)| acc.add(&e.scale(&rpow(k, m as u32 - 1))))
        })
        .collect())
}

/// Closed forms of `Ψ_1(u)`, `Ψ_2(u)` and `Ψ†(x)` against the row determinant.
pub fn verify_lemma_psi12(cfg: &GaudinConfig, max_i: usize) -> Result<VerificationReport> {
    let b = BetheAlgebra::new(cfg)?;
    let set = HamiltonianSet::build(cfg)?;
    let poles = b.poles().clone();
    let id = identity(cfg);
    let mut psi1 = RatFun::zero(poles.clone(), (cfg.dim(), ()));
    let mut psi2 = psi1.clone();
    for a in 0..cfg.sites() {
        psi1 = psi1.add(&RatFun::pole(poles.clone(), a, 1, id.neg()))?;
        let c = set.h[a].neg().add(&id.scale(&cm::inverse_gap_sum(cfg.z(), a)));
        psi2 = psi2.add(&RatFun::pole(poles.clone(), a, 1, c))?;
    }
    let mut t = Tally::new();
    t.ratfun("Psi_1(u)", &b.psi(1)?, &psi1)?;
    t.ratfun("Psi_2(u)", &b.psi(2)?, &psi2)?;
    for (m, (lhs, rhs)) in b.psi_dagger(max_i)?.iter().zip(eii_expansion(cfg, max_i)?).enumerate() {
        t.matrix(|| format!("Psi-dagger: coefficient of x^-{}", m + 1), lhs, &rhs);
    }
    Ok(t.finish("lemma_psi12", ConfigEcho::of(cfg).with_orders(max_i, 2)))
}

/// `ψ†(x, z, H) = Σ_{i,a} e_ii^(a)/(x − K_i)` to order `x^{−max_i}`, with the
/// left side taken both as `Σ_m tr(Q(H)^{m−1}) x^{−m}` and as `−Σ_i φ°_{i1} x^{−i}`,
/// and compared with `Ψ†` from the row determinant.
pub fn verify_eii(cfg: &GaudinConfig, max_i: usize) -> Result<VerificationReport> {
    let set = HamiltonianSet::build(cfg)?;
    let qz = build_qz(cfg.z(), set.h)?;
    let expected = eii_expansion(cfg, max_i)?;
    let phi = phi0_expansion(qz.pair(), max_i, 1)?;
    let bethe = BetheAlgebra::new(cfg)?.psi_dagger(max_i)?;
    let mut t = Tally::new();
    for m in 1..=max_i {
        let word = TraceWord(alloc::vec![(cm::Letter::X, m as u32 - 1)]);
        let rhs = &expected[m - 1];
        t.matrix(|| format!("tr(Q^{}) vs x^-{m} coefficient", m - 1), &word.evaluate(qz.pair()), rhs);
        t.matrix(|| format!("-psi_{{{m},1}} vs x^-{m} coefficient"), &phi.coeff(m, 1).neg(), rhs);
        t.matrix(|| format!("Psi-dagger x^-{m} coefficient"), &bethe[m - 1], rhs);
    }
    Ok(t.finish("eii", ConfigEcho::of(cfg).with_orders(max_i, 1)))
}

/// `∏_i (x − K_i)^{λ_i}` for the weight `λ`.
fn weight_polynomial(k: &[Rational], w: &Weight) -> Poly {
    let roots: Vec<Rational> = k
        .iter()
        .zip(w.components())
        .flat_map(|(ki, &m)| core::iter::repeat_n(ki.clone(), m))
        .collect();
    Poly::from_roots(&roots)
}

/// `φ(x, z, H) = det(x − Q(H))` acts on each weight subspace `λ` as
/// `∏ (x − K_i)^{λ_i}`.
pub fn verify_phi_product(cfg: &GaudinConfig) -> Result<VerificationReport> {
    let set = HamiltonianSet::build(cfg)?;
    let qz = build_qz(cfg.z(), set.h)?;
    let phi = char_poly(qz.q());
    let n = cfg.sites();
    let mut t = Tally::new();
    t.condition(phi.degree() == Some(n), || "degree of phi".into());
    let blocks = cfg.rep().weight_subspaces();
    let mut row_weight = alloc::vec![0usize; cfg.dim()];
    for (b, (_, indices)) in blocks.iter().enumerate() {
        for &i in indices {
            row_weight[i] = b;
        }
    }
    let polys: Vec<Poly> = blocks.iter().map(|(w, _)| weight_polynomial(cfg.k(), w)).collect();
    for m in 0..=n {
        let expected = Matrix::diagonal((), (0..cfg.dim()).map(|r| polys[row_weight[r]].coeff(m)).collect());
        t.matrix(
            || {
                let diff = phi.coeff(m).sub(&expected);
                let r = diff.entries().next().map_or(0, |(r, _, _)| r);
                format!("coefficient of x^{m} on weight {}", format_weight(&blocks[row_weight[r]].0))
            },
            &phi.coeff(m),
            &expected,
        );
    }
    for (w, indices) in &blocks {
        t.detail(format!("weight {}: dimension {}", format_weight(w), indices.len()));
    }
    Ok(t.finish("phi_product", ConfigEcho::of(cfg)))
}

/// Which simple-spectrum statement applies to a configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumScope {
    /// Distinct `K`: the full space.
    Full,
    /// Equal `K`: the singular subspace.
    Singular,
}

impl SpectrumScope {
    pub fn for_config(cfg: &GaudinConfig) -> Option<Self> {
        if cfg.k_distinct() {
            Some(Self::Full)
        } else if cfg.k_all_equal() {
            Some(Self::Singular)
        } else {
            None
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Full => "full space",
            Self::Singular => "singular subspace",
        }
    }
}

fn brute_force_details(
    t: &mut Tally,
    ops: &[OperatorMatrix],
    subspace: Option<&[Vec<Rational>]>,
    dim: usize,
) -> Result<Option<bool>> {
    if dim > BRUTE_FORCE_DIM_LIMIT {
        t.detail(format!("brute force skipped: dimension {dim} > {BRUTE_FORCE_DIM_LIMIT}"));
        return Ok(None);
    }
    let alg = unital_algebra_dimension(ops, subspace)?;
    t.detail(format!("algebra generated by H_a and 1 has dimension {alg} on a space of dimension {dim}"));
    let dims = joint_eigenspace_dims(ops, subspace)?;
    match &dims {
        Some(d) => t.detail(format!("joint eigenspace dimensions {d:?}")),
        None => t.detail("joint eigenspaces not all rational"),
    }
    let degenerate = alg < dim || dims.as_ref().is_some_and(|d| d.iter().any(|&m| m > 1));
    Ok(Some(degenerate))
}

/// Searches a squarefree combination `Σ c_a H_a` on the space the corollaries
/// speak about: the full space for distinct `K`, the singular subspace for
/// equal `K`.
pub fn verify_simple_spectra(cfg: &GaudinConfig, seed: u64, budget: usize) -> Result<VerificationReport> {
    let scope = SpectrumScope::for_config(cfg).ok_or_else(|| {
        Error::InvalidConfig("simple spectrum needs K pairwise distinct or all equal".into())
    })?;
    let set = HamiltonianSet::build(cfg)?;
    let basis = match scope {
        SpectrumScope::Full => None,
        SpectrumScope::Singular => Some(cfg.rep().singular_basis()?),
    };
    let cert = simple_spectrum_certificate(&set.h, basis.as_deref(), seed, budget)?;
    let mut t = Tally::new();
    t.detail(format!("scope: {} of dimension {}", scope.name(), cert.dim));
    if cert.simple {
        t.detail(format!(
            "squarefree characteristic polynomial for c = {} after {} attempt(s)",
            format_list(&cert.witness),
            cert.attempts
        ));
    } else {
        t.detail(format!(
            "no squarefree combination in {} attempts; last gcd(p, p') has degree {}",
            cert.attempts, cert.gcd_degree
        ));
        brute_force_details(&mut t, &set.h, basis.as_deref(), cert.dim)?;
    }
    t.condition(cert.simple, || format!("squarefree witness on the {}", scope.name()));
    let echo = ConfigEcho::of(cfg).with_seed(seed).with("scope", scope.name()).with("budget", format!("{budget}"));
    Ok(t.finish("simple_spectra", echo))
}

/// Negative control: the joint spectrum on the full space is degenerate, both
/// by failure of the squarefree search and by brute-force eigenspaces.
pub fn verify_non_simple(cfg: &GaudinConfig, seed: u64, budget: usize) -> Result<VerificationReport> {
    let set = HamiltonianSet::build(cfg)?;
    let cert = simple_spectrum_certificate(&set.h, None, seed, budget)?;
    let mut t = Tally::new();
    t.detail(format!(
        "squarefree search: {} attempts, last gcd(p, p') of degree {}",
        cert.attempts, cert.gcd_degree
    ));
    t.condition(!cert.simple, || "squarefree search unexpectedly succeeded".into());
    let degenerate = brute_force_details(&mut t, &set.h, None, cert.dim)?;
    t.condition(degenerate == Some(true), || "brute force does not exhibit a degenerate joint eigenspace".into());
    let echo = ConfigEcho::of(cfg).with_seed(seed).with("budget", format!("{budget}"));
    Ok(t.finish("non_simple_control", echo))
}

/// `P(u) D = Σ A_ia u^a ∂^i` has polynomial coefficients, top row `P(u)·1`
/// and top column `∏ (∂ − K_i)·1`.
pub fn verify_regularized(cfg: &GaudinConfig) -> Result<VerificationReport> {
    let b = BetheAlgebra::new(cfg)?;
    let mut t = Tally::new();
    let reg = match b.regularized() {
        Ok(r) => r,
        Err(e @ Error::RegularizationFailed(_)) => {
            t.condition(false, || format!("{e}"));
            return Ok(t.finish("regularized_operator", ConfigEcho::of(cfg)));
        }
        Err(e) => return Err(e),
    };
    t.detail("all coefficients of P(u) D are polynomial of degree at most n");
    let (gl_n, n) = (cfg.gl_n(), cfg.sites());
    let id = identity(cfg);
    let p = Poly::from_roots(cfg.z());
    let r = Poly::from_roots(cfg.k());
    for a in 0..=n {
        t.matrix(|| format!("A_{{{gl_n},{a}}} vs u^{a} coefficient of P"), reg.coeff(gl_n, a), &id.scale(&p.coeff(a)));
    }
    for i in 0..=gl_n {
        t.matrix(|| format!("A_{{{i},{n}}} vs x^{i} coefficient of R"), reg.coeff(i, n), &id.scale(&r.coeff(i)));
    }
    Ok(t.finish("regularized_operator", ConfigEcho::of(cfg)))
}

/// `B_lj` reassembled from `Ψ(u, x) ∏ (x − K_i)`; vanishes for `l > N`.
pub fn verify_generator_change(cfg: &GaudinConfig, max_j: usize) -> Result<VerificationReport> {
    let b = BetheAlgebra::new(cfg)?;
    let max_l = cfg.gl_n() + 2;
    let rebuilt = b.b_from_psi(max_l, max_j)?;
    let z = zero(cfg);
    let mut t = Tally::new();
    for (l, row) in rebuilt.iter().enumerate() {
        let l = l + 1;
        for (j, m) in row.iter().enumerate() {
            let j = j + 1;
            let expected = if l <= cfg.gl_n() { b.b_coeff(l, j) } else { z.clone() };
            t.matrix(|| format!("B_{{{l},{j}}} from Psi"), m, &expected);
        }
    }
    Ok(t.finish("generator_change", ConfigEcho::of(cfg).with_orders(max_l, max_j)))
}

/// `W(u*, x*) = Δ det((u* − Z)(x* − Q) − 1)` and `W_0(x*) = Δ det(x* − Q)` on
/// seeded tuples, and `det S = Δ` for the Vandermonde `S`.
pub fn verify_wronskian(max_n: usize, tuples: usize, vandermonde_max_n: usize, seed: u64) -> Result<VerificationReport> {
    let mut g = SeededRationals::new(seed);
    let mut t = Tally::new();
    for n in 1..=max_n {
        for s in 0..tuples {
            let z = g.distinct(n);
            let mu = g.rationals(n);
            let (u, x) = (g.next_rational(), g.next_rational());
            let qz = build_qz(&z, cm::momenta_from_mu(&z, &mu)?)?;
            let delta = cm::delta(&z);
            let w = cm::wronskian_bivariate(&z, &mu, &u, &x)?;
            t.scalar(|| format!("W(u, x), n = {n}, tuple {s}"), &w, &(&delta * qz.cleared_det(&u, &x)));
            let w0 = cm::wronskian_zero(&z, &mu, &x)?;
            t.scalar(|| format!("W_0(x), n = {n}, tuple {s}"), &w0, &(&delta * qz.phi(&x)));
        }
    }
    for n in 1..=vandermonde_max_n {
        let z = g.distinct(n);
        t.scalar(|| format!("det S, n = {n}"), &det(&cm::vandermonde(&z)), &cm::delta(&z));
    }
    let echo = ConfigEcho::default()
        .with_seed(seed)
        .with("max_n", format!("{max_n}"))
        .with("tuples", format!("{tuples}"))
        .with("vandermonde_max_n", format!("{vandermonde_max_n}"));
    Ok(t.finish("wronskian", echo))
}

/// `rank([Q, Z] + 1) = 1` for seeded scalar `(z, h)`, sizes cycling `1..=max_n`.
pub fn verify_rank_one(instances: usize, max_n: usize, seed: u64) -> Result<VerificationReport> {
    let mut g = SeededRationals::new(seed);
    let mut t = Tally::new();
    for s in 0..instances {
        let n = s % max_n.max(1) + 1;
        let z = g.distinct(n);
        let h = g.rationals(n);
        let qz = build_qz(&z, h)?;
        let ok = cm::rank_one_check(qz.q(), qz.z_matrix())?;
        t.condition(ok, || format!("instance {s} (n = {n}): z = {}, h = {}", format_list(&z), format_list(qz.h())));
    }
    let echo = ConfigEcho::default()
        .with_seed(seed)
        .with("instances", format!("{instances}"))
        .with("max_n", format!("{max_n}"));
    Ok(t.finish("rank_one", echo))
}

/// The `N = n = 2` example: the displayed `H_a` and `Q`, `tr(X²)` and `det(x − Q)`
/// on `(Q(H), Z)`.
pub fn verify_example(cfg: &GaudinConfig) -> Result<VerificationReport> {
    if cfg.gl_n() != 2 || cfg.sites() != 2 {
        return Err(Error::InvalidConfig("the example needs N = n = 2".into()));
    }
    let rep = cfg.rep();
    let (k, z) = (cfg.k(), cfg.z());
    let e = |i, j, a| rep.generator(i, j, a);
    let mut omega = zero(cfg);
    for i in 1..=2 {
        for j in 1..=2 {
            omega = omega.add(&e(i, j, 1)?.mul(&e(j, i, 2)?));
        }
    }
    let gap = &z[0] - &z[1];
    let mut t = Tally::new();
    let set = HamiltonianSet::build(cfg)?;
    for a in 1..=2 {
        let sign = if a == 1 { gap.recip() } else { -gap.recip() };
        let expected = e(1, 1, a)?
            .scale(&k[0])
            .add(&e(2, 2, a)?.scale(&k[1]))
            .add(&omega.scale(&sign));
        t.matrix(|| format!("H_{a} displayed formula"), &set.h[a - 1], &expected);
    }
    let qz = build_qz(z, set.h.clone())?;
    let id = identity(cfg);
    t.matrix(|| "Q_12".into(), &qz.q().get(0, 1), &id.scale(&(&z[1] - &z[0]).recip()));
    t.matrix(|| "Q_21".into(), &qz.q().get(1, 0), &id.scale(&(&z[0] - &z[1]).recip()));
    let gap2 = (&gap * &gap).recip();
    let (h1, h2) = (&set.h[0], &set.h[1]);
    let tr = TraceWord::parse("X^2")?.evaluate(qz.pair());
    let expected = h1.mul(h1).add(&h2.mul(h2)).sub(&id.scale(&(&gap2 * Rational::from_integer(2.into()))));
    t.matrix(|| "tr(X^2) on (Q(H), Z)".into(), &tr, &expected);
    // det(x − Q) = x² − (H_1 + H_2) x + H_1 H_2 + (z_1 − z_2)^{−2}
    let phi = char_poly(qz.q());
    t.matrix(|| "det(x - Q): x^0".into(), &phi.coeff(0), &h1.mul(h2).add(&id.scale(&gap2)));
    t.matrix(|| "det(x - Q): x^1".into(), &phi.coeff(1), &h1.add(h2).neg());
    t.matrix(|| "det(x - Q): x^2".into(), &phi.coeff(2), &id);
    Ok(t.finish("example", ConfigEcho::of(cfg)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::{rat, ratio};
    use alloc::vec;

    fn cfg(gl_n: usize, n: usize, k: &[i64], z: &[i64]) -> GaudinConfig {
        GaudinConfig::new(gl_n, n, k.iter().map(|&v| rat(v)).collect(), z.iter().map(|&v| rat(v)).collect()).unwrap()
    }

    #[test]
    fn main_theorem_small() {
        let r = verify_main_theorem(&cfg(2, 2, &[0, 1], &[0, 1]), 6, 6).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.comparisons, 37);
        let r = verify_main_theorem(&cfg(1, 3, &[2], &[0, 1, 3]), 4, 4).unwrap();
        assert!(r.passed);
    }

    #[test]
    fn one_dimensional_hamiltonians() {
        // N = 1: H_a = K_1 + Σ_{b≠a} 1/(z_a − z_b)
        let c = cfg(1, 3, &[5], &[0, 2, 3]);
        let set = HamiltonianSet::build(&c).unwrap();
        for a in 0..3 {
            let expected = rat(5) + cm::inverse_gap_sum(c.z(), a);
            assert_eq!(set.h[a], Matrix::scalar(1, (), expected));
        }
    }

    #[test]
    fn side_identities() {
        let c = GaudinConfig::new(2, 2, vec![ratio(1, 2), rat(-3)], vec![rat(0), ratio(2, 3)]).unwrap();
        for r in [
            verify_commutativity(&c).unwrap(),
            verify_bethe_commutativity(&c, 3).unwrap(),
            verify_constant_terms(&c).unwrap(),
            verify_lemma_psi12(&c, 6).unwrap(),
            verify_eii(&c, 6).unwrap(),
            verify_phi_product(&c).unwrap(),
            verify_regularized(&c).unwrap(),
            verify_generator_change(&c, 4).unwrap(),
            verify_example(&c).unwrap(),
        ] {
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn single_site_eii_is_diagonal() {
        let c = cfg(2, 1, &[0, 1], &[4]);
        let r = verify_eii(&c, 5).unwrap();
        assert!(r.passed);
        assert_eq!(r.comparisons, 15);
    }

    #[test]
    fn spectra() {
        assert!(verify_simple_spectra(&cfg(2, 2, &[0, 1], &[0, 1]), 1, 8).unwrap().passed);
        let equal = cfg(2, 3, &[0, 0], &[0, 1, 2]);
        let r = verify_simple_spectra(&equal, 1, 8).unwrap();
        assert!(r.passed && r.config.extra[0].1 == "singular subspace");
        let full = verify_non_simple(&cfg(2, 2, &[0, 0], &[0, 1]), 1, 8).unwrap();
        assert!(full.passed, "{full:?}");
        assert!(!verify_non_simple(&cfg(2, 2, &[0, 1], &[0, 1]), 1, 8).unwrap().passed);
        assert!(verify_simple_spectra(&cfg(3, 2, &[0, 0, 1], &[0, 1]), 1, 8).is_err());
    }

    #[test]
    fn scalar_identities() {
        assert!(verify_wronskian(3, 2, 4, 5).unwrap().passed);
        let r = verify_rank_one(6, 3, 5).unwrap();
        assert!(r.passed);
        assert_eq!(r.comparisons, 6);
    }

    #[test]
    fn failures_carry_a_residual() {
        let mut t = Tally::new();
        let a = Matrix::scalar(2, (), rat(1));
        let b = Matrix::scalar(2, (), rat(3));
        t.matrix(|| "x".into(), &a, &a);
        t.matrix(|| "y".into(), &a, &b);
        let r = t.finish("demo", ConfigEcho::default());
        assert!(!r.passed);
        let res = r.first_residual.unwrap();
        assert_eq!((res.location.as_str(), res.entry, res.value), ("y", Some((0, 0)), Some(rat(-2))));
    }
}
