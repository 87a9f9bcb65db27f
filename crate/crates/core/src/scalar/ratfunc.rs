use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::{fmt_rational, LaurentPoly};
use super::poly::{self, Dense};
use crate::error::{Error, Result};

/// An element of `Q(q)` in canonical form.
///
/// The value is `num / den` where `num` is a Laurent polynomial and `den` an
/// ordinary polynomial with constant term 1 (so every power of `q` lives in the
/// numerator), and the two are coprime. `den == None` encodes the denominator
/// 1. Because the form is unique, equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatFunc {
    num: LaurentPoly,
    den: Option<Dense>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(e))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(LaurentPoly::from(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    /// `c * q^e` with an integer `c`.
    pub fn monomial(c: i64, e: i64) -> Self {
        Self::from_laurent(LaurentPoly::monomial(BigRational::from_integer(BigInt::from(c)), e))
    }

    pub fn from_laurent(num: LaurentPoly) -> Self {
        Self { num, den: None }
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn from_fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let shift = num.low() - den.low();
        Ok(Self::reduce(shift, num.dense().to_vec(), den.dense().to_vec()))
    }

    /// Canonicalises `q^shift * p / d` where `p(0) != 0` and `d(0) != 0`.
    fn reduce(shift: i64, mut p: Dense, mut d: Dense) -> Self {
        if p.is_empty() {
            return Self::zero();
        }
        if d.len() > 1 {
            let g = poly::gcd(&p, &d);
            if g.len() > 1 {
                p = poly::div_exact(&p, &g);
                d = poly::div_exact(&d, &g);
            }
        }
        let c = d[0].clone();
        if !c.is_one() {
            let inv = c.recip();
            p = poly::scale(&p, &inv);
            d = poly::scale(&d, &inv);
        }
        let num = LaurentPoly::from_dense(shift, p);
        let den = if poly::is_one(&d) { None } else { Some(d) };
        Self { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_none() && self.num.is_one()
    }

    /// True when the value lies in `Q[q, q^-1]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_none()
    }

    /// True for a nonzero value `c * q^e`, i.e. a unit of the Laurent ring.
    pub fn is_monomial(&self) -> bool {
        self.den.is_none() && self.num.is_monomial()
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    /// Denominator as a Laurent polynomial (constant term 1, no negative powers).
    pub fn denom(&self) -> LaurentPoly {
        match &self.den {
            None => LaurentPoly::one(),
            Some(d) => LaurentPoly::from_dense(0, d.clone()),
        }
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_none().then_some(&self.num)
    }

    /// The rational constant, if this value is one.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        (self.den.is_none() && self.num.is_monomial() && self.num.min_exp() == Some(0)).then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d: Dense = match &self.den {
            None => vec![BigRational::one()],
            Some(d) => d.clone(),
        };
        // num and den are already coprime, only the constant term needs fixing
        let p = self.num.dense();
        let c = p[0].recip();
        let new_den = poly::scale(p, &c);
        let new_num = poly::scale(&d, &c);
        let num = LaurentPoly::from_dense(-self.num.low(), new_num);
        let den = if poly::is_one(&new_den) { None } else { Some(new_den) };
        Ok(Self { num, den })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Exact field arithmetic with division by zero reported as an error.
    pub fn arith(a: &Self, b: &Self, op: ArithOp) -> Result<Self> {
        Ok(match op {
            ArithOp::Add => a + b,
            ArithOp::Sub => a - b,
            ArithOp::Mul => a * b,
            ArithOp::Div => a.checked_div(b)?,
        })
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Value at `q = q0`.
    pub fn evaluate_at(&self, q0: &BigRational) -> Result<BigRational> {
        if q0.is_zero() {
            return Err(Error::ZeroEvaluationPoint);
        }
        let den = match &self.den {
            None => BigRational::one(),
            Some(d) => poly::eval(d, q0),
        };
        if den.is_zero() {
            return Err(Error::Pole(fmt_rational(q0)));
        }
        Ok(self.num.evaluate(q0) / den)
    }

    /// Substitutes `q = q0` and returns the result as a constant.
    pub fn specialize(&self, q0: &BigRational) -> Result<Self> {
        Ok(Self::from_rational(self.evaluate_at(q0)?))
    }

    fn den_slice(&self) -> &[BigRational] {
        self.den.as_deref().unwrap_or(ONE_SLICE.as_slice())
    }
}

static ONE_SLICE: std::sync::LazyLock<Vec<BigRational>> = std::sync::LazyLock::new(|| vec![BigRational::one()]);

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        match (&self.den, &rhs.den) {
            (None, None) => RatFunc::from_laurent(&self.num + &rhs.num),
            (Some(a), Some(b)) if a == b => {
                let num = &self.num + &rhs.num;
                if num.is_zero() {
                    return RatFunc::zero();
                }
                RatFunc::reduce(num.low(), num.dense().to_vec(), a.clone())
            }
            _ => {
                let d1 = LaurentPoly::from_dense(0, self.den_slice().to_vec());
                let d2 = LaurentPoly::from_dense(0, rhs.den_slice().to_vec());
                let num = &(&self.num * &d2) + &(&rhs.num * &d1);
                if num.is_zero() {
                    return RatFunc::zero();
                }
                let den = poly::mul(self.den_slice(), rhs.den_slice());
                RatFunc::reduce(num.low(), num.dense().to_vec(), den)
            }
        }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_none() && rhs.den.is_none() {
            return RatFunc::from_laurent(&self.num * &rhs.num);
        }
        // cross-cancel before multiplying so the result stays reduced
        let (n1, d2) = cancel(self.num.dense(), rhs.den_slice());
        let (n2, d1) = cancel(rhs.num.dense(), self.den_slice());
        let num = poly::mul(&n1, &n2);
        let den = poly::mul(&d1, &d2);
        RatFunc::reduce(self.num.low() + rhs.num.low(), num, den)
    }
}

fn cancel(n: &[BigRational], d: &[BigRational]) -> (Dense, Dense) {
    if d.len() <= 1 {
        return (n.to_vec(), d.to_vec());
    }
    let g = poly::gcd(n, d);
    if g.len() <= 1 {
        return (n.to_vec(), d.to_vec());
    }
    (poly::div_exact(n, &g), poly::div_exact(d, &g))
}

/// Panics on division by zero; use [`RatFunc::checked_div`] to handle it.
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, rhs: &RatFunc) {
        *self = &*self * rhs;
    }
}

impl Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::zero(), |a, b| a + b)
    }
}

impl Product for RatFunc {
    fn product<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::one(), |a, b| a * b)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_laurent(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.den {
            None => write!(f, "{}", self.num),
            Some(_) => write!(f, "({})/({})", self.num, self.denom()),
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
