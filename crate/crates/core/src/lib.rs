//! Exact-arithmetic construction of the Gaudin model on a tensor power of the
//! vector representation of `gl_N`, its Bethe algebra, and the matching
//! Calogero-Moser determinant formulas.
//!
//! Everything here is pure computation over arbitrary-precision rationals and
//! builds with `alloc` only. The companion `bethe-lab` crate carries the CLI,
//! JSON formats and timing.
//!
//! Layering:
//!
//! * [`exact`]: rationals, polynomials, partial-fraction rational functions,
//!   sparse matrices over a commutative-coefficient ring, division-free
//!   determinants and exact linear algebra.
//! * [`tensor_rep`]: generators `e_ij^(a)` on `V^{⊗n}`, weights, singular vectors.
//! * [`gaudin`]: the classical Gaudin Hamiltonians and spectral certificates.
//! * [`bethe`]: differential operators with matrix rational coefficients, the
//!   row determinant, and the generators `B_ij`, `Ψ_ij`.
//! * [`cm`]: the pair `(Q, Z)`, Wilson's function and its expansion, Wronskians,
//!   trace words.
//! * [`verifier`]: cross-checks between the two pipelines.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bethe;
pub mod cm;
mod error;
pub mod exact;
pub mod gaudin;
pub mod seed;
pub mod tensor_rep;
pub mod verifier;

pub use error::{Error, Result};
pub use gaudin::{GaudinConfig, HamiltonianSet};
pub use exact::{
    matrix::{Matrix, OperatorMatrix},
    poly::Poly,
    ratfun::{MatRatFun, PoleSet, RatFun},
    ring::{parse_rational, Rational, Ring},
    series::BiSeries,
};

