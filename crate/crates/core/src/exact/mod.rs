//! Exact scalar, polynomial, rational-function and matrix arithmetic.

pub mod det;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod ratfun;
pub mod ring;
pub mod series;
