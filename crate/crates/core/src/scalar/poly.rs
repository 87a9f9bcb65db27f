//! Dense univariate polynomials over the rationals, used as the backing store
//! for Laurent polynomials and for the reduction of fractions.
//!
//! A polynomial is a `Vec<BigRational>` where index `i` holds the coefficient
//! of `q^i`. Trailing zeros are never stored, so the zero polynomial is the
//! empty vector.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type Dense = Vec<BigRational>;

pub(crate) fn trim(p: &mut Dense) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn is_one(p: &[BigRational]) -> bool {
    p.len() == 1 && p[0].is_one()
}

pub(crate) fn add(a: &[BigRational], b: &[BigRational]) -> Dense {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out: Dense = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    trim(&mut out);
    out
}

pub(crate) fn neg(a: &[BigRational]) -> Dense {
    a.iter().map(|c| -c).collect()
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len() == 1 && a[0].is_one() {
        return b.to_vec();
    }
    if b.len() == 1 && b[0].is_one() {
        return a.to_vec();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[BigRational], c: &BigRational) -> Dense {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Euclidean division `a = quot * b + rem`; `b` must be nonzero.
pub(crate) fn divrem(a: &[BigRational], b: &[BigRational]) -> (Dense, Dense) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem: Dense = a.to_vec();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = b.last().unwrap().recip();
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() * &lead_inv;
        for (i, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                rem[shift + i] -= &c * bc;
            }
        }
        quot[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Exact division, panicking in debug builds when `b` does not divide `a`.
pub(crate) fn div_exact(a: &[BigRational], b: &[BigRational]) -> Dense {
    let (q, r) = divrem(a, b);
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q
}

fn make_monic(p: &mut Dense) {
    if let Some(lead) = p.last().cloned() {
        if !lead.is_one() {
            let inv = lead.recip();
            for c in p.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: &[BigRational], b: &[BigRational]) -> Dense {
    let mut x: Dense = a.to_vec();
    let mut y: Dense = b.to_vec();
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![BigRational::one()];
        }
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
        make_monic(&mut y);
    }
    make_monic(&mut x);
    x
}

/// Index of the lowest nonzero coefficient.
pub(crate) fn valuation(p: &[BigRational]) -> Option<usize> {
    p.iter().position(|c| !c.is_zero())
}

pub(crate) fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}
