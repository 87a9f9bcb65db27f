use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{self, Dense};

/// A Laurent polynomial in `q` with rational coefficients.
///
/// Stored densely as `q^low * (c_0 + c_1 q + ...)` with `c_0 != 0` and no
/// trailing zeros; the zero polynomial has no coefficients and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Dense,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`
    pub fn monomial(c: BigRational, exp: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: exp, coeffs: vec![c] }
    }

    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(terms: I) -> Self {
        let terms: Vec<(i64, BigRational)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let Some(low) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![BigRational::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    pub(crate) fn from_dense(low: i64, mut coeffs: Dense) -> Self {
        poly::trim(&mut coeffs);
        match poly::valuation(&coeffs) {
            None => Self::zero(),
            Some(0) => Self { low, coeffs },
            Some(v) => Self { low: low + v as i64, coeffs: coeffs.split_off(v) },
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && poly::is_one(&self.coeffs)
    }

    /// True when the polynomial is `c * q^e` for a single term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent carrying a nonzero coefficient (`None` for zero).
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        let idx = exp - self.low;
        if idx < 0 {
            return BigRational::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms as `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.low + i as i64, c))
    }

    pub(crate) fn low(&self) -> i64 {
        self.low
    }

    /// The ordinary polynomial obtained by dividing out `q^low`; its constant
    /// term is nonzero unless the polynomial is zero.
    pub(crate) fn dense(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_dense(self.low, poly::scale(&self.coeffs, c))
    }

    pub fn shift(&self, by: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + by, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let body = poly::eval(&self.coeffs, x);
        body * pow_rational(x, self.low)
    }

    /// Substitutes `q -> q^-1`.
    pub fn bar(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c.clone())))
    }
}

pub(crate) fn pow_rational(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let a = pad(self, low);
        let b = pad(rhs, low);
        LaurentPoly::from_dense(low, poly::add(&a, &b))
    }
}

fn pad(p: &LaurentPoly, low: i64) -> Dense {
    let k = (p.low - low) as usize;
    let mut out = vec![BigRational::zero(); k];
    out.extend(p.coeffs.iter().cloned());
    out
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: poly::neg(&self.coeffs) }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly::from_dense(self.low + rhs.low, poly::mul(&self.coeffs, &rhs.coeffs))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }
}

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Formats terms in decreasing exponent order, e.g. `q - q^-1` or `1/2*q^2 + 3`.
/// The output is accepted by the coefficient parser.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let qpart = match e {
                0 => None,
                1 => Some("q".to_string()),
                _ => Some(format!("q^{e}")),
            };
            match qpart {
                None => write!(f, "{}", fmt_rational(&mag))?,
                Some(qp) if mag.is_one() => write!(f, "{qp}")?,
                Some(qp) => write!(f, "{}*{qp}", fmt_rational(&mag))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn no_stored_zeros_after_cancellation() {
        let a = LaurentPoly::from_terms([(1, r(1)), (-1, r(-1))]);
        let b = LaurentPoly::from_terms([(-1, r(1))]);
        let s = &a + &b;
        assert_eq!(s, LaurentPoly::q_pow(1));
        assert_eq!(s.terms().count(), 1);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn display_is_descending() {
        let a = LaurentPoly::from_terms([(1, r(1)), (-1, r(-1)), (0, BigRational::new(r(1).to_integer(), 2.into()))]);
        assert_eq!(a.to_string(), "q + 1/2 - q^-1");
        assert_eq!((-LaurentPoly::q_pow(2)).to_string(), "-q^2");
    }

    #[test]
    fn evaluate_handles_negative_powers() {
        let a = LaurentPoly::from_terms([(0, r(1)), (-2, r(1))]);
        assert_eq!(a.evaluate(&r(2)), BigRational::new(5.into(), 4.into()));
    }
}
