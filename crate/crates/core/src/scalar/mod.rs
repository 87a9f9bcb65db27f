//! Exact scalars: Laurent polynomials and rational functions in `q` over the
//! rationals, plus quantum integers.

mod expr;
mod laurent;
mod poly;
mod quantum;
mod ratfunc;

pub use expr::parse_coeff;
pub use laurent::LaurentPoly;
pub use quantum::{gauss_binomial, quantum_factorial, quantum_int};
pub use ratfunc::{ArithOp, RatFunc};

pub use num_rational::BigRational;

/// Shorthand for a rational constant `n / d`.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
