//! Quantum integers, factorials and Gaussian binomials in a base `nu`.

use super::RatFunc;

/// `(n)_nu = 1 + nu + ... + nu^(n-1)`, computed as an explicit sum so that
/// `nu = 1` gives `n`.
pub fn quantum_int(n: usize, base: &RatFunc) -> RatFunc {
    let mut acc = RatFunc::zero();
    let mut pow = RatFunc::one();
    for _ in 0..n {
        acc += &pow;
        pow = &pow * base;
    }
    acc
}

/// `(n)_nu! = (1)_nu (2)_nu ... (n)_nu`, with `(0)_nu! = 1`.
pub fn quantum_factorial(n: usize, base: &RatFunc) -> RatFunc {
    (1..=n).map(|k| quantum_int(k, base)).product()
}

/// `(m+n)_nu! / ((m)_nu! (n)_nu!)`.
pub fn gauss_binomial(m: usize, n: usize, base: &RatFunc) -> RatFunc {
    let top = quantum_factorial(m + n, base);
    let bottom = quantum_factorial(m, base) * quantum_factorial(n, base);
    top.checked_div(&bottom).expect("quantum factorials are nonzero in Q(q)")
}
