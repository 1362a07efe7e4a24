//! The Calogero-Moser side: the pair `(Q, Z)` attached to points `z` and
//! momenta `h`, Wilson's function `ψ` with its companions `φ` and `ψ†`, trace
//! words, and the rank-one condition.
//!
//! Matrices here are small (`n × n`) and their entries live in a commutative
//! ring: rationals, or the algebra generated by commuting Hamiltonians.

mod expansion;
mod wronskian;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::exact::det::{char_poly, det};
use crate::exact::linalg;
use crate::exact::matrix::Matrix;
use crate::exact::poly::Poly;
use crate::exact::ring::{all_distinct, Invertible, Rational, Ring};
use crate::{Error, Result};

pub use expansion::phi0_expansion;
pub use wronskian::{delta, momenta_from_mu, vandermonde, wronskian_bivariate, wronskian_zero};

/// A pair of square matrices `(X, Y)` of the same size.
#[derive(Clone, Debug, PartialEq)]
pub struct CMPair<R: Ring> {
    pub x: Matrix<R>,
    pub y: Matrix<R>,
}

impl<R: Ring> CMPair<R> {
    pub fn new(x: Matrix<R>, y: Matrix<R>) -> Result<Self> {
        if x.dim() != y.dim() || x.elem_shape() != y.elem_shape() {
            return Err(Error::DimensionMismatch(format!(
                "pair of sizes {} and {}",
                x.dim(),
                y.dim()
            )));
        }
        Ok(Self { x, y })
    }

    pub fn dim(&self) -> usize {
        self.x.dim()
    }

    pub fn elem_shape(&self) -> &R::Shape {
        self.x.elem_shape()
    }
}

/// `Z = diag(z)` and `Q` with `h` on the diagonal and `1/(z_b − z_a)` at `(a, b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct QZData<R: Ring> {
    z: Vec<Rational>,
    h: Vec<R>,
    pair: CMPair<R>,
}

pub fn build_qz<R: Ring>(z: &[Rational], h: Vec<R>) -> Result<QZData<R>> {
    if z.is_empty() {
        return Err(Error::InvalidConfig("at least one point z is required".into()));
    }
    if z.len() != h.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} points z but {} momenta h",
            z.len(),
            h.len()
        )));
    }
    if !all_distinct(z) {
        return Err(Error::CoincidentPoints);
    }
    let shape = h[0].shape();
    if h.iter().any(|v| v.shape() != shape) {
        return Err(Error::DimensionMismatch("momenta of different shapes".into()));
    }
    let n = z.len();
    let mut q = Matrix::zeros(n, shape.clone());
    for a in 0..n {
        for b in 0..n {
            if a == b {
                q.set(a, a, h[a].clone());
            } else {
                let c = (&z[b] - &z[a]).recip();
                q.set(a, b, R::from_scalar(&shape, &c));
            }
        }
    }
    let zm = Matrix::diagonal(shape.clone(), z.iter().map(|v| R::from_scalar(&shape, v)).collect());
    Ok(QZData {
        z: z.to_vec(),
        h,
        pair: CMPair { x: q, y: zm },
    })
}

impl<R: Ring> QZData<R> {
    pub fn z(&self) -> &[Rational] {
        &self.z
    }

    pub fn h(&self) -> &[R] {
        &self.h
    }

    pub fn q(&self) -> &Matrix<R> {
        &self.pair.x
    }

    pub fn z_matrix(&self) -> &Matrix<R> {
        &self.pair.y
    }

    /// `(X, Y) = (Q, Z)`.
    pub fn pair(&self) -> &CMPair<R> {
        &self.pair
    }

    pub fn dim(&self) -> usize {
        self.z.len()
    }

    fn shape(&self) -> R::Shape {
        self.pair.x.elem_shape().clone()
    }

    /// `P(u*) = ∏ (u* − z_a)`.
    pub fn p_at(&self, u: &Rational) -> Rational {
        self.z.iter().fold(Rational::one(), |acc, za| acc * (u - za))
    }

    /// `det((u* − Z)(x* − Q) − 1)`, a polynomial of degree `n` in each variable.
    pub fn cleared_det(&self, u: &Rational, x: &Rational) -> R {
        cleared_det(&self.pair, u, x)
    }

    /// `φ(x*) = det(x* − Q)`.
    pub fn phi(&self, x: &Rational) -> R {
        det(&shifted(&self.pair.x, x).neg())
    }

    /// `det(x − Q)` as a polynomial in `x`.
    pub fn phi_poly(&self) -> Poly<R> {
        char_poly(&self.pair.x)
    }
}

impl<R: Invertible> QZData<R> {
    /// `ψ(u*, x*) = det(1 − (u* − Z)^{−1}(x* − Q)^{−1})`, evaluated as
    /// `det((u*−Z)(x*−Q) − 1) / (P(u*) det(x*−Q))`.
    pub fn psi(&self, u: &Rational, x: &Rational) -> Result<R> {
        let p = self.p_at(u);
        if p.is_zero() {
            return Err(Error::SpectralPoint);
        }
        let inv = self.phi(x).inverse().ok_or(Error::SpectralPoint)?;
        Ok(self.cleared_det(u, x).times(&inv).scaled(&p.recip()))
    }

    /// `ψ†(x*) = tr((x* − Q)^{−1})`, as the trace of the adjugate over `φ`.
    pub fn psi_dagger(&self, x: &Rational) -> Result<R> {
        let inv = self.phi(x).inverse().ok_or(Error::SpectralPoint)?;
        let xq = shifted(&self.pair.x, x).neg();
        let n = self.dim();
        let mut adj_trace = R::zero_of(&self.shape());
        for skip in 0..n {
            let keep: Vec<usize> = (0..n).filter(|&i| i != skip).collect();
            adj_trace.add_in_place(&det(&xq.submatrix(&keep)));
        }
        Ok(adj_trace.times(&inv))
    }
}

/// `m − x·1`.
fn shifted<R: Ring>(m: &Matrix<R>, x: &Rational) -> Matrix<R> {
    let shape = m.elem_shape().clone();
    m.sub(&Matrix::scalar(m.dim(), shape.clone(), R::from_scalar(&shape, x)))
}

/// `det((u* − Y)(x* − X) − 1)`.
pub fn cleared_det<R: Ring>(pair: &CMPair<R>, u: &Rational, x: &Rational) -> R {
    let shape = pair.elem_shape().clone();
    let uy = shifted(&pair.y, u).neg();
    let xx = shifted(&pair.x, x).neg();
    let one = Matrix::identity(pair.dim(), shape);
    det(&uy.mul(&xx).sub(&one))
}

/// True iff `[X, Y] + 1` has rank exactly one.
pub fn rank_one_check(x: &Matrix<Rational>, y: &Matrix<Rational>) -> Result<bool> {
    let pair = CMPair::new(x.clone(), y.clone())?;
    let m = pair.x.commutator(&pair.y).add(&Matrix::identity(pair.dim(), ()));
    Ok(linalg::rank(&m.to_dense()) == 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    X,
    Y,
}

/// `X^{m1} Y^{m2} ···`, written as e.g. `X^2Y` or `XYX`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TraceWord(pub Vec<(Letter, u32)>);

impl TraceWord {
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::InvalidConfig(format!("invalid trace word {s:?}"));
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let letter = match chars[i] {
                'X' | 'x' => Letter::X,
                'Y' | 'y' => Letter::Y,
                _ => return Err(bad()),
            };
            i += 1;
            if chars.get(i) == Some(&'^') {
                i += 1;
            }
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let exp = if start == i {
                if chars.get(i - 1) == Some(&'^') {
                    return Err(bad());
                }
                1
            } else {
                chars[start..i].iter().collect::<String>().parse().map_err(|_| bad())?
            };
            out.push((letter, exp));
        }
        Ok(Self(out))
    }

    pub fn degree(&self, letter: Letter) -> u32 {
        self.0.iter().filter(|(l, _)| *l == letter).map(|(_, e)| e).sum()
    }

    /// `tr(X^{m1} Y^{m2} ···)`.
    pub fn evaluate<R: Ring>(&self, pair: &CMPair<R>) -> R {
        let shape = pair.elem_shape().clone();
        let mut acc = Matrix::identity(pair.dim(), shape);
        for (letter, exp) in &self.0 {
            let m = match letter {
                Letter::X => &pair.x,
                Letter::Y => &pair.y,
            };
            for _ in 0..*exp {
                acc = acc.mul(m);
            }
        }
        acc.trace()
    }
}

impl fmt::Display for TraceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (letter, exp) in &self.0 {
            let c = match letter {
                Letter::X => 'X',
                Letter::Y => 'Y',
            };
            match exp {
                1 => write!(f, "{c}")?,
                e => write!(f, "{c}^{e}")?,
            }
        }
        Ok(())
    }
}

/// `tr` of a word; see [`TraceWord::evaluate`].
pub fn trace_word<R: Ring>(word: &TraceWord, pair: &CMPair<R>) -> R {
    word.evaluate(pair)
}

/// `Σ_{b≠a} 1/(z_a − z_b)`.
pub fn inverse_gap_sum(z: &[Rational], a: usize) -> Rational {
    z.iter()
        .enumerate()
        .filter(|&(b, _)| b != a)
        .fold(Rational::zero(), |acc, (_, zb)| acc + (&z[a] - zb).recip())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::linalg::{det_lu, inverse};
    use crate::exact::matrix::OperatorMatrix;
    use crate::exact::ring::{rat, ratio};
    use crate::seed::SeededRationals;
    use alloc::vec;

    fn scalar_qz(seed: u64, n: usize) -> QZData<Rational> {
        let mut g = SeededRationals::new(seed);
        let z = g.distinct(n);
        let h = g.rationals(n);
        build_qz(&z, h).unwrap()
    }

    #[test]
    fn one_by_one() {
        let d = build_qz(&[rat(2)], vec![rat(5)]).unwrap();
        assert_eq!(d.q().get(0, 0), rat(5));
        assert_eq!(d.z_matrix().get(0, 0), rat(2));
        let (u, x) = (rat(3), rat(7));
        let expected = Rational::one() - ((&u - rat(2)) * (&x - rat(5))).recip();
        assert_eq!(d.psi(&u, &x).unwrap(), expected);
        assert_eq!(d.phi(&x), rat(2));
        assert_eq!(d.psi_dagger(&x).unwrap(), ratio(1, 2));
        assert_eq!(d.psi(&rat(2), &x), Err(Error::SpectralPoint));
        assert_eq!(d.psi_dagger(&rat(5)), Err(Error::SpectralPoint));
    }

    #[test]
    fn two_by_two_layout() {
        let z = [rat(0), ratio(1, 3)];
        let d = build_qz(&z, vec![rat(4), rat(-1)]).unwrap();
        assert_eq!(d.q().get(0, 1), rat(3));
        assert_eq!(d.q().get(1, 0), rat(-3));
        assert_eq!(d.q().get(1, 1), rat(-1));
        assert!(build_qz(&[rat(1), rat(1)], vec![rat(0), rat(0)]).is_err());
        assert!(build_qz(&[rat(1)], vec![rat(0), rat(0)]).is_err());
    }

    #[test]
    fn rank_one() {
        for seed in 0..5 {
            let d = scalar_qz(seed, 3);
            assert!(rank_one_check(d.q(), d.z_matrix()).unwrap());
        }
        let zero = Matrix::<Rational>::zeros(2, ());
        assert!(!rank_one_check(&zero, &zero).unwrap());
        let one = Matrix::<Rational>::zeros(1, ());
        assert!(rank_one_check(&one, &one).unwrap());
    }

    #[test]
    fn psi_matches_explicit_inverses() {
        let d = scalar_qz(11, 2);
        let mut g = SeededRationals::new(12);
        let mut checked = 0;
        while checked < 5 {
            let (u, x) = (g.avoiding(d.z()), g.next_rational());
            let Ok(psi) = d.psi(&u, &x) else { continue };
            let xq = shifted(d.q(), &x).neg().to_dense();
            let uz = shifted(d.z_matrix(), &u).neg().to_dense();
            let prod = linalg::mat_mul(&inverse(&uz).unwrap(), &inverse(&xq).unwrap());
            let m: Vec<Vec<Rational>> = (0..2)
                .map(|i| (0..2).map(|j| {
                    let id = if i == j { Rational::one() } else { Rational::zero() };
                    id - &prod[i][j]
                }).collect())
                .collect();
            assert_eq!(psi, det_lu(&m));
            checked += 1;
        }
    }

    #[test]
    fn psi_dagger_is_log_derivative() {
        let d = scalar_qz(3, 3);
        let phi = d.phi_poly();
        let dphi = phi.derivative();
        for x in [rat(100), ratio(-7, 3), ratio(1, 9)] {
            assert_eq!(phi.eval(&x), d.phi(&x));
            let expected = dphi.eval(&x) / phi.eval(&x);
            assert_eq!(d.psi_dagger(&x).unwrap(), expected);
        }
    }

    #[test]
    fn factorization_identity() {
        let d = scalar_qz(5, 3);
        let (u, x) = (ratio(7, 2), ratio(-5, 3));
        let lhs = d.psi(&u, &x).unwrap() * d.p_at(&u) * d.phi(&x);
        assert_eq!(lhs, d.cleared_det(&u, &x));
    }

    fn example_hamiltonians() -> (Vec<Rational>, Vec<OperatorMatrix>) {
        let cfg = crate::GaudinConfig::new(2, 2, vec![rat(0), rat(1)], vec![rat(0), ratio(1, 2)]).unwrap();
        let set = crate::HamiltonianSet::build(&cfg).unwrap();
        (cfg.z().to_vec(), set.h)
    }

    #[test]
    fn operator_valued_example() {
        let (z, h) = example_hamiltonians();
        let d = build_qz(&z, h.clone()).unwrap();
        let gap2 = (&z[0] - &z[1]).pow(2).recip();
        let x = rat(3);
        let id = OperatorMatrix::identity(4, ());
        let xs = id.scale(&x);
        let expected = xs.sub(&h[0]).mul(&xs.sub(&h[1])).add(&id.scale(&gap2));
        assert_eq!(d.phi(&x), expected);
        let tr = TraceWord::parse("X^2").unwrap().evaluate(d.pair());
        let expected = h[0].mul(&h[0]).add(&h[1].mul(&h[1])).sub(&id.scale(&(gap2 * rat(2))));
        assert_eq!(tr, expected);
    }

    #[test]
    fn trace_words() {
        let d = scalar_qz(8, 3);
        assert_eq!(TraceWord::default().evaluate(d.pair()), rat(3));
        let tr_z: Rational = d.z().iter().sum();
        assert_eq!(TraceWord::parse("Y").unwrap().evaluate(d.pair()), tr_z);
        let w = TraceWord::parse("X^2 Y X").unwrap();
        assert_eq!(w.0, vec![(Letter::X, 2), (Letter::Y, 1), (Letter::X, 1)]);
        assert_eq!(w.degree(Letter::X), 3);
        assert_eq!(alloc::string::ToString::to_string(&w), "X^2YX");
        assert_eq!(TraceWord::parse("X3").unwrap().0, vec![(Letter::X, 3)]);
        assert!(TraceWord::parse("XZ").is_err());
        assert!(TraceWord::parse("X^").is_err());
    }
}
