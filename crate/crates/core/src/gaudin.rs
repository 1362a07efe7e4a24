//! Classical Gaudin Hamiltonians on `V(z_1) ⊗ … ⊗ V(z_n)` and exact
//! certificates of simple joint spectrum.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::det::char_poly;
use crate::exact::linalg::{self, Dense};
use crate::exact::matrix::{Matrix, OperatorMatrix};
use crate::exact::poly::Poly;
use crate::exact::ring::{all_distinct, Rational};
use crate::seed::SeededRationals;
use crate::tensor_rep::TensorPower;
use crate::{Error, Result};

/// Default number of seeded combinations tried before giving up.
pub const DEFAULT_RETRY_BUDGET: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct GaudinConfig {
    rep: TensorPower,
    k: Vec<Rational>,
    z: Vec<Rational>,
}

impl GaudinConfig {
    /// `k` has one entry per `gl_N` index, `z` one distinct point per factor.
    pub fn new(gl_n: usize, sites: usize, k: Vec<Rational>, z: Vec<Rational>) -> Result<Self> {
        let rep = TensorPower::new(gl_n, sites)?;
        if k.len() != gl_n {
            return Err(Error::InvalidConfig(format!(
                "expected {gl_n} values of K, got {}",
                k.len()
            )));
        }
        if z.len() != sites {
            return Err(Error::InvalidConfig(format!(
                "expected {sites} values of z, got {}",
                z.len()
            )));
        }
        if !all_distinct(&z) {
            return Err(Error::CoincidentPoints);
        }
        Ok(Self { rep, k, z })
    }

    /// Seeded distinct `K` and `z` drawn from [`SeededRationals`].
    pub fn seeded(gl_n: usize, sites: usize, seed: u64) -> Result<Self> {
        let mut rng = SeededRationals::new(seed);
        let k = rng.distinct(gl_n);
        let z = rng.distinct(sites);
        Self::new(gl_n, sites, k, z)
    }

    pub fn rep(&self) -> &TensorPower {
        &self.rep
    }

    pub fn gl_n(&self) -> usize {
        self.rep.gl_n()
    }

    pub fn sites(&self) -> usize {
        self.rep.sites()
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn k(&self) -> &[Rational] {
        &self.k
    }

    pub fn z(&self) -> &[Rational] {
        &self.z
    }

    pub fn k_all_equal(&self) -> bool {
        self.k.windows(2).all(|w| w[0] == w[1])
    }

    pub fn k_distinct(&self) -> bool {
        all_distinct(&self.k)
    }
}

/// `H_a = Σ_i K_i e_ii^(a) + Σ_{b≠a} Σ_{i,j} e_ij^(a) e_ji^(b) / (z_a − z_b)`,
/// with `a` 1-based.
pub fn hamiltonian(a: usize, cfg: &GaudinConfig) -> Result<OperatorMatrix> {
    let rep = cfg.rep();
    if a == 0 || a > cfg.sites() {
        return Err(Error::IndexOutOfRange {
            what: "factor",
            value: a,
            max: cfg.sites(),
        });
    }
    let mut h = Matrix::zeros(cfg.dim(), ());
    for (i, k) in cfg.k().iter().enumerate() {
        h = h.add(&rep.generator(i + 1, i + 1, a)?.scale(k));
    }
    for b in 1..=cfg.sites() {
        if b == a {
            continue;
        }
        let w = (&cfg.z()[a - 1] - &cfg.z()[b - 1]).recip();
        let mut omega = Matrix::zeros(cfg.dim(), ());
        for i in 1..=cfg.gl_n() {
            for j in 1..=cfg.gl_n() {
                omega = omega.add(&rep.generator(i, j, a)?.mul(&rep.generator(j, i, b)?));
            }
        }
        h = h.add(&omega.scale(&w));
    }
    Ok(h)
}

/// The `n` Hamiltonians of one configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct HamiltonianSet {
    pub config: GaudinConfig,
    pub h: Vec<OperatorMatrix>,
}

impl HamiltonianSet {
    /// Builds every `H_a` and checks pairwise commutativity and
    /// `Σ_a H_a = Σ_i K_i Σ_a e_ii^(a)`.
    pub fn build(cfg: &GaudinConfig) -> Result<Self> {
        let h = (1..=cfg.sites())
            .map(|a| hamiltonian(a, cfg))
            .collect::<Result<Vec<_>>>()?;
        let set = Self {
            config: cfg.clone(),
            h,
        };
        if let Some((a, b)) = set.first_noncommuting_pair() {
            return Err(Error::NotCommuting(format!("[H_{a}, H_{b}] != 0")));
        }
        if set.sum() != weighted_cartan(cfg)? {
            return Err(Error::Internal("sum of Hamiltonians is not Σ K_i E_ii".into()));
        }
        Ok(set)
    }

    /// 1-based indices of the first pair with nonzero commutator.
    pub fn first_noncommuting_pair(&self) -> Option<(usize, usize)> {
        for a in 0..self.h.len() {
            for b in a + 1..self.h.len() {
                if !self.h[a].commutator(&self.h[b]).is_zero_matrix() {
                    return Some((a + 1, b + 1));
                }
            }
        }
        None
    }

    pub fn sum(&self) -> OperatorMatrix {
        self.h
            .iter()
            .fold(Matrix::zeros(self.config.dim(), ()), |acc, h| acc.add(h))
    }
}

pub fn hamiltonian_set(cfg: &GaudinConfig) -> Result<HamiltonianSet> {
    HamiltonianSet::build(cfg)
}

/// `Σ_i K_i E_ii` with `E_ii = Σ_a e_ii^(a)`.
pub fn weighted_cartan(cfg: &GaudinConfig) -> Result<OperatorMatrix> {
    let mut acc = Matrix::zeros(cfg.dim(), ());
    for (i, k) in cfg.k().iter().enumerate() {
        acc = acc.add(&cfg.rep().total(i + 1, i + 1)?.scale(k));
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumCertificate {
    pub simple: bool,
    /// Coefficients `c` of the last combination `Σ c_a H_a` tried.
    pub witness: Vec<Rational>,
    /// Degree of `gcd(p, p')` for the last characteristic polynomial.
    pub gcd_degree: usize,
    pub attempts: usize,
    /// Dimension of the space the operators were restricted to.
    pub dim: usize,
}

/// Looks for a combination `L = Σ c_a H_a` whose characteristic polynomial on
/// the subspace (columns of `subspace`, or the whole space) is squarefree.
/// Such an `L` has simple spectrum, hence so do the `H_a` jointly.
///
/// Failure is not a proof of degeneracy; see [`unital_algebra_dimension`].
pub fn simple_spectrum_certificate(
    ops: &[OperatorMatrix],
    subspace: Option<&[Vec<Rational>]>,
    seed: u64,
    budget: usize,
) -> Result<SpectrumCertificate> {
    let restricted = restrict_all(ops, subspace)?;
    let dim = restricted.first().map_or(0, Vec::len);
    let mut rng = SeededRationals::new(seed);
    let mut last = SpectrumCertificate {
        simple: dim <= 1,
        witness: Vec::new(),
        gcd_degree: 0,
        attempts: 0,
        dim,
    };
    if dim <= 1 {
        return Ok(last);
    }
    for attempt in 1..=budget {
        let c = rng.rationals(ops.len());
        let mut l: Dense = vec![vec![Rational::zero(); dim]; dim];
        for (m, ca) in restricted.iter().zip(&c) {
            for (r, row) in m.iter().enumerate() {
                for (col, v) in row.iter().enumerate() {
                    l[r][col] += ca * v;
                }
            }
        }
        let p = char_poly(&Matrix::from_dense((), l));
        let g = p.gcd(&p.derivative());
        let gdeg = g.degree().unwrap_or(0);
        last = SpectrumCertificate {
            simple: gdeg == 0,
            witness: c,
            gcd_degree: gdeg,
            attempts: attempt,
            dim,
        };
        if last.simple {
            break;
        }
    }
    Ok(last)
}

fn restrict_all(ops: &[OperatorMatrix], subspace: Option<&[Vec<Rational>]>) -> Result<Vec<Dense>> {
    ops.iter()
        .map(|op| match subspace {
            Some(basis) => linalg::restrict_to_subspace(op, basis),
            None => Ok(op.to_dense()),
        })
        .collect()
}

/// Dimension of the unital algebra generated by commuting operators on the
/// subspace. If it is smaller than the subspace dimension the joint spectrum
/// cannot be simple.
pub fn unital_algebra_dimension(
    ops: &[OperatorMatrix],
    subspace: Option<&[Vec<Rational>]>,
) -> Result<usize> {
    let restricted = restrict_all(ops, subspace)?;
    let dim = restricted.first().map_or_else(
        || subspace.map_or(0, |s| s.len()),
        Vec::len,
    );
    if dim == 0 {
        return Ok(0);
    }
    let flatten = |m: &Dense| -> Vec<Rational> { m.iter().flatten().cloned().collect() };
    let identity: Dense = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    let mut basis: Vec<Dense> = vec![identity];
    let mut rows: Dense = vec![flatten(&basis[0])];
    let mut frontier = 0;
    // Closure under multiplication by each generator.
    while frontier < basis.len() {
        let current = basis[frontier].clone();
        frontier += 1;
        for g in &restricted {
            let prod = linalg::mat_mul(g, &current);
            let mut trial = rows.clone();
            trial.push(flatten(&prod));
            if linalg::rank(&trial) > rows.len() {
                rows = trial;
                basis.push(prod);
            }
        }
    }
    Ok(basis.len())
}

/// Dimensions of the joint eigenspaces, found through rational eigenvalues.
/// `None` when some eigenvalue is irrational, the operators are not jointly
/// diagonalizable over the rationals, or the root search would be too large.
pub fn joint_eigenspace_dims(
    ops: &[OperatorMatrix],
    subspace: Option<&[Vec<Rational>]>,
) -> Result<Option<Vec<usize>>> {
    let restricted = restrict_all(ops, subspace)?;
    let dim = restricted.first().map_or(0, Vec::len);
    if dim == 0 {
        return Ok(Some(Vec::new()));
    }
    // Each space is represented by a basis (columns as vectors).
    let mut spaces: Vec<Vec<Vec<Rational>>> = vec![(0..dim)
        .map(|i| (0..dim).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()];
    for m in &restricted {
        let Some(roots) = rational_roots(&char_poly(&Matrix::from_dense((), m.clone()))) else {
            return Ok(None);
        };
        let mut next = Vec::new();
        for space in &spaces {
            for lambda in &roots {
                // vectors v = B c with (m − λ) B c = 0
                let shifted: Dense = (0..dim)
                    .map(|r| {
                        space
                            .iter()
                            .map(|b| {
                                let mut acc = -(lambda * &b[r]);
                                for (k, bk) in b.iter().enumerate() {
                                    acc += &m[r][k] * bk;
                                }
                                acc
                            })
                            .collect()
                    })
                    .collect();
                let kernel = linalg::nullspace(&shifted, space.len());
                if kernel.is_empty() {
                    continue;
                }
                next.push(
                    kernel
                        .iter()
                        .map(|c| {
                            (0..dim)
                                .map(|r| {
                                    space
                                        .iter()
                                        .zip(c)
                                        .fold(Rational::zero(), |acc, (b, ci)| acc + &b[r] * ci)
                                })
                                .collect()
                        })
                        .collect(),
                );
            }
        }
        spaces = next;
    }
    let dims: Vec<usize> = spaces.iter().map(Vec::len).collect();
    if dims.iter().sum::<usize>() != dim {
        return Ok(None);
    }
    Ok(Some(dims))
}

const ROOT_SEARCH_LIMIT: u64 = 1_000_000;

/// Distinct rational roots by the rational root theorem, or `None` if the
/// polynomial does not split over the rationals or its constant/leading
/// integers are too large to factor by trial division.
fn rational_roots(p: &Poly) -> Option<Vec<Rational>> {
    let degree = p.degree()?;
    let mut roots = Vec::new();
    let mut rest = p.clone();
    // strip zero roots
    while rest.coeff(0).is_zero() && rest.degree().unwrap_or(0) > 0 {
        if !roots.contains(&Rational::zero()) {
            roots.push(Rational::zero());
        }
        rest = Poly::new(rest.coeffs()[1..].to_vec());
    }
    let lcm = rest
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = rest
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let a0 = ints.first()?.abs();
    let an = ints.last()?.abs();
    let small = |v: &BigInt| v <= &BigInt::from(ROOT_SEARCH_LIMIT);
    if !small(&a0) || !small(&an) {
        return None;
    }
    let divisors = |v: u64| -> Vec<u64> { (1..=v).filter(|d| v.is_multiple_of(*d)).collect() };
    let a0 = u64::try_from(a0).ok()?;
    let an = u64::try_from(an).ok()?;
    let mut found = 0usize;
    for pn in divisors(a0) {
        for qd in divisors(an) {
            for sign in [1i64, -1] {
                let cand = Rational::new(BigInt::from(pn) * sign, BigInt::from(qd));
                if roots.contains(&cand) {
                    continue;
                }
                if rest.eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    // Count multiplicity to see whether p splits.
    for r in &roots {
        let lin = Poly::new(vec![-r.clone(), Rational::one()]);
        let mut q = p.clone();
        loop {
            let (quot, rem) = q.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            found += 1;
            q = quot;
        }
    }
    if found != degree {
        return None;
    }
    roots.sort();
    Some(roots)
}
