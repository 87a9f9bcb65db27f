//! Sparse operators on `V^{⊗k}`.
//!
//! A word `(i_1, …, i_k)` (0-based letters) is stored as the base-`N` integer
//! `i_1 N^{k-1} + … + i_k`, so numeric order is lexicographic word order.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::braiding::BraidedSpace;
use crate::error::{Error, Result};
use crate::linalg::{add_entry, SparseVec};
use crate::permutations::{all_perms, shuffles, Perm};
use crate::scalar::{quantum_factorial, RatFunc};

pub fn word_index(n: usize, word: &[usize]) -> usize {
    word.iter().fold(0, |acc, &x| acc * n + x)
}

pub fn word_of(n: usize, k: usize, mut idx: usize) -> Vec<usize> {
    let mut w = vec![0; k];
    for slot in w.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    w
}

/// Vector in `V^{⊗k}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorVector {
    pub dim: usize,
    pub degree: usize,
    pub terms: SparseVec<usize>,
}

impl TensorVector {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Self { dim, degree, terms: SparseVec::new() }
    }

    /// `v_{i_1} ⊗ … ⊗ v_{i_k}` (0-based letters).
    pub fn basis(dim: usize, word: &[usize]) -> Self {
        let mut terms = SparseVec::new();
        terms.insert(word_index(dim, word), RatFunc::one());
        Self { dim, degree: word.len(), terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, word: &[usize]) -> RatFunc {
        self.terms.get(&word_index(self.dim, word)).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        crate::linalg::axpy(&mut terms, &RatFunc::one(), &other.terms);
        Self { terms, ..*self }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self { terms: crate::linalg::scale_vec(&self.terms, c), ..*self }
    }

    pub fn tensor(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let shift = other.dim.pow(other.degree as u32);
        let mut terms = SparseVec::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                add_entry(&mut terms, a * shift + b, x * y);
            }
        }
        Self { dim: self.dim, degree: self.degree + other.degree, terms }
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (w, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let word: Vec<String> = word_of(self.dim, self.degree, *w).iter().map(|i| format!("v{}", i + 1)).collect();
            write!(f, "({c})*{}", word.join("⊗"))?;
        }
        Ok(())
    }
}

/// Linear operator on `V^{⊗k}`; column `s` holds the image of the word with index `s`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseOperator {
    dim: usize,
    degree: usize,
    cols: Vec<Vec<(usize, RatFunc)>>,
}

fn column_from(v: SparseVec<usize>) -> Vec<(usize, RatFunc)> {
    v.into_iter().collect()
}

impl SparseOperator {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Self { dim, degree, cols: vec![Vec::new(); dim.pow(degree as u32)] }
    }

    pub fn identity(dim: usize, degree: usize) -> Self {
        let size = dim.pow(degree as u32);
        Self { dim, degree, cols: (0..size).map(|s| vec![(s, RatFunc::one())]).collect() }
    }

    pub fn from_columns(dim: usize, degree: usize, cols: Vec<SparseVec<usize>>) -> Self {
        assert_eq!(cols.len(), dim.pow(degree as u32));
        Self { dim, degree, cols: cols.into_iter().map(column_from).collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn size(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, s: usize) -> &[(usize, RatFunc)] {
        &self.cols[s]
    }

    pub fn entry(&self, target: usize, source: usize) -> RatFunc {
        self.cols[source]
            .binary_search_by_key(&target, |(t, _)| *t)
            .map_or_else(|_| RatFunc::zero(), |p| self.cols[source][p].1.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim || self.degree != other.degree {
            return Err(Error::DegreeMismatch(format!(
                "operators of degree {} and {} (dims {} and {})",
                self.degree, other.degree, self.dim, other.dim
            )));
        }
        Ok(())
    }

    pub fn apply_index(&self, v: &SparseVec<usize>) -> SparseVec<usize> {
        let mut out = SparseVec::new();
        for (s, c) in v {
            for (t, a) in &self.cols[*s] {
                add_entry(&mut out, *t, c * a);
            }
        }
        out
    }

    pub fn apply(&self, v: &TensorVector) -> Result<TensorVector> {
        if v.degree != self.degree || v.dim != self.dim {
            return Err(Error::DegreeMismatch(format!("operator degree {}, vector degree {}", self.degree, v.degree)));
        }
        Ok(TensorVector { dim: self.dim, degree: self.degree, terms: self.apply_index(&v.terms) })
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let cols = other.cols.iter().map(|col| {
            let v: SparseVec<usize> = col.iter().cloned().collect();
            column_from(self.apply_index(&v))
        });
        Ok(Self { dim: self.dim, degree: self.degree, cols: cols.collect() })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let cols = self.cols.iter().zip(&other.cols).map(|(a, b)| {
            let mut v: SparseVec<usize> = a.iter().cloned().collect();
            for (t, c) in b {
                add_entry(&mut v, *t, c.clone());
            }
            column_from(v)
        });
        Ok(Self { dim: self.dim, degree: self.degree, cols: cols.collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-RatFunc::one()))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim, self.degree);
        }
        let cols = self.cols.iter().map(|col| col.iter().map(|(t, a)| (*t, a * c)).collect());
        Self { dim: self.dim, degree: self.degree, cols: cols.collect() }
    }

    /// `self ⊗ other` on `V^{⊗(k+l)}`.
    pub fn tensor(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let m = other.size();
        let mut cols = Vec::with_capacity(self.size() * m);
        for a in &self.cols {
            for b in &other.cols {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (ta, x) in a {
                    for (tb, y) in b {
                        col.push((ta * m + tb, x * y));
                    }
                }
                col.retain(|(_, c)| !c.is_zero());
                col.sort_by_key(|(t, _)| *t);
                cols.push(col);
            }
        }
        Self { dim: self.dim, degree: self.degree + other.degree, cols }
    }

    /// Entry-wise specialization of every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> Result<RatFunc>) -> Result<Self> {
        let cols = self
            .cols
            .iter()
            .map(|col| {
                let mut v = SparseVec::new();
                for (t, c) in col {
                    add_entry(&mut v, *t, f(c)?);
                }
                Ok(column_from(v))
            })
            .collect::<Result<_>>()?;
        Ok(Self { dim: self.dim, degree: self.degree, cols })
    }

    /// Rank of the operator as an `N^k × N^k` matrix.
    pub fn rank(&self) -> usize {
        let mut e = crate::linalg::Echelon::<usize>::new();
        for col in &self.cols {
            e.insert(col.iter().cloned().collect());
        }
        e.rank()
    }
}

/// `σ_i = I_{i-1} ⊗ σ ⊗ I_{k-i-1}` with `1 ≤ i ≤ k-1`.
pub fn sigma_i(space: &BraidedSpace, k: usize, i: usize) -> Result<SparseOperator> {
    if i == 0 || i >= k {
        return Err(Error::PositionOutOfRange { position: i, degree: k });
    }
    let n = space.dim();
    let size = n.pow(k as u32);
    let cols = (0..size)
        .map(|s| {
            let mut w = word_of(n, k, s);
            let (a, b) = (w[i - 1], w[i]);
            let mut col: Vec<(usize, RatFunc)> = space
                .column(a, b)
                .iter()
                .map(|(t, c)| {
                    w[i - 1] = t / n;
                    w[i] = t % n;
                    (word_index(n, &w), c.clone())
                })
                .collect();
            col.sort_by_key(|(t, _)| *t);
            col
        })
        .collect();
    Ok(SparseOperator { dim: n, degree: k, cols })
}

/// `σ_{i_1} ⋯ σ_{i_l}` for an arbitrary word of simple transpositions (1-based).
pub fn sigma_word(space: &BraidedSpace, k: usize, word: &[usize]) -> Result<SparseOperator> {
    let mut op = SparseOperator::identity(space.dim(), k);
    for &i in word.iter().rev() {
        op = sigma_i(space, k, i)?.compose(&op)?;
    }
    Ok(op)
}

/// `σ_w` along the reduced word of `w`, memoized per space.
pub fn sigma_w(space: &BraidedSpace, w: &Perm) -> Arc<SparseOperator> {
    let k = w.degree();
    let key = (k, w.one_line());
    if let Some(op) = space.cache.sigma_w.lock().unwrap().get(&key) {
        return op.clone();
    }
    let op = Arc::new(if w.is_identity() {
        SparseOperator::identity(space.dim(), k)
    } else {
        // peel the last letter and reuse the memoized prefix
        let word = w.reduced_word();
        let (&last, prefix) = word.split_last().unwrap();
        let head = sigma_w(space, &Perm::from_word(k, prefix));
        head.compose(&sigma_i(space, k, last).unwrap()).unwrap()
    });
    space.cache.sigma_w.lock().unwrap().entry(key).or_insert(op).clone()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// `(i_1)!⋯(i_k)!/(Σ i_j)!` in base `q^{-2}`.
pub fn shuffle_prefactor(space: &BraidedSpace, parts: &[usize]) -> RatFunc {
    let base = space.q().pow(-2).expect("nonzero q");
    let total: usize = parts.iter().sum();
    let num: RatFunc = parts.iter().map(|&p| quantum_factorial(p, &base)).product();
    &num / &quantum_factorial(total, &base)
}

/// `(-q)^{-l}`.
pub fn length_weight(space: &BraidedSpace, l: usize) -> RatFunc {
    (-space.q()).pow(-(l as i32)).expect("nonzero q")
}

/// The shuffle operator `⧢^±_{parts}`, prefactor included.
pub fn shuffle_op(space: &BraidedSpace, parts: &[usize], sign: Sign) -> SparseOperator {
    let k: usize = parts.iter().sum();
    let mut cols: Vec<SparseVec<usize>> = vec![SparseVec::new(); space.dim().pow(k as u32)];
    for w in shuffles(parts).iter() {
        let c = length_weight(space, w.length());
        let op = match sign {
            Sign::Plus => sigma_w(space, w),
            Sign::Minus => sigma_w(space, &w.inverse()),
        };
        for (s, col) in op.cols.iter().enumerate() {
            for (t, a) in col {
                add_entry(&mut cols[s], *t, &c * a);
            }
        }
    }
    SparseOperator::from_columns(space.dim(), k, cols).scale(&shuffle_prefactor(space, parts))
}

/// `A^{(k)}` via `A^{(k+1)} = ⧢^+_{k,1}(A^{(k)} ⊗ I)`, memoized per space.
pub fn antisymmetrizer(space: &BraidedSpace, k: usize) -> Arc<SparseOperator> {
    if let Some(op) = space.cache.antisym.lock().unwrap().get(&k) {
        return op.clone();
    }
    let op = Arc::new(if k <= 1 {
        SparseOperator::identity(space.dim(), k)
    } else {
        let prev = antisymmetrizer(space, k - 1);
        let id1 = SparseOperator::identity(space.dim(), 1);
        shuffle_op(space, &[k - 1, 1], Sign::Plus).compose(&prev.tensor(&id1)).unwrap()
    });
    space.cache.antisym.lock().unwrap().entry(k).or_insert(op).clone()
}

/// `A^{(k)}` as the full sum over `𝔖_k`.
pub fn antisymmetrizer_direct(space: &BraidedSpace, k: usize) -> SparseOperator {
    let mut cols: Vec<SparseVec<usize>> = vec![SparseVec::new(); space.dim().pow(k as u32)];
    for w in all_perms(k) {
        let c = length_weight(space, w.length());
        let op = sigma_w(space, &w);
        for (s, col) in op.cols.iter().enumerate() {
            for (t, a) in col {
                add_entry(&mut cols[s], *t, &c * a);
            }
        }
    }
    let base = space.q().pow(-2).expect("nonzero q");
    let f = quantum_factorial(k, &base).inv().expect("nonzero factorial");
    SparseOperator::from_columns(space.dim(), k, cols).scale(&f)
}

/// Sparse matrix view keyed by `(target, source)`, handy for tests and display.
pub fn entries(op: &SparseOperator) -> BTreeMap<(usize, usize), RatFunc> {
    op.cols.iter().enumerate().flat_map(|(s, col)| col.iter().map(move |(t, c)| ((*t, s), c.clone()))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::{jimbo_a, type_c_example};
    use crate::scalar::parse_coeff;

    fn rf(s: &str) -> RatFunc {
        parse_coeff(s).unwrap()
    }

    #[test]
    fn sigma_lift_examples() {
        let s = jimbo_a(2);
        let s1 = sigma_i(&s, 2, 1).unwrap();
        assert_eq!(s1.column(2), &[(1, RatFunc::one()), (2, rf("q - q^-1"))]);
        let s2 = sigma_i(&s, 3, 2).unwrap();
        let v = s2.apply(&TensorVector::basis(2, &[0, 1, 0])).unwrap();
        let want = TensorVector::basis(2, &[0, 0, 1]).add(&TensorVector::basis(2, &[0, 1, 0]).scale(&rf("q - q^-1")));
        assert_eq!(v, want);
        assert!(matches!(sigma_i(&s, 3, 3), Err(Error::PositionOutOfRange { .. })));
        assert!(matches!(sigma_i(&s, 3, 0), Err(Error::PositionOutOfRange { .. })));
    }

    #[test]
    fn hecke_square() {
        let s = jimbo_a(2);
        let s1 = sigma_i(&s, 2, 1).unwrap();
        let lhs = s1.compose(&s1).unwrap();
        let rhs = s1.scale(&rf("q - q^-1")).add(&SparseOperator::identity(2, 2)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn matsumoto_longest_s3() {
        let s = jimbo_a(2);
        assert_eq!(sigma_word(&s, 3, &[1, 2, 1]).unwrap(), sigma_word(&s, 3, &[2, 1, 2]).unwrap());
        let w0 = Perm::from_one_line(&[3, 2, 1]).unwrap();
        assert_eq!(*sigma_w(&s, &w0), sigma_word(&s, 3, &[1, 2, 1]).unwrap());
        assert_eq!(*sigma_w(&s, &Perm::identity(3)), SparseOperator::identity(2, 3));
    }

    #[test]
    fn shuffle_11() {
        let s = jimbo_a(2);
        let sh = shuffle_op(&s, &[1, 1], Sign::Plus);
        let s1 = sigma_i(&s, 2, 1).unwrap();
        let want =
            SparseOperator::identity(2, 2).sub(&s1.scale(&RatFunc::q_pow(-1))).unwrap().scale(&rf("1/(1 + q^-2)"));
        assert_eq!(sh, want);
        assert_eq!(shuffle_op(&s, &[3], Sign::Minus), SparseOperator::identity(2, 3));
    }

    #[test]
    fn antisymmetrizer_matches_direct_sum() {
        for space in [jimbo_a(2), jimbo_a(3), type_c_example()] {
            for k in 0..=3 {
                assert_eq!(*antisymmetrizer(&space, k), antisymmetrizer_direct(&space, k), "{} k={k}", space.name());
            }
        }
    }

    #[test]
    fn a2_examples() {
        let s = jimbo_a(2);
        let a = antisymmetrizer(&s, 2);
        assert!(a.apply(&TensorVector::basis(2, &[0, 0])).unwrap().is_zero());
        let x = a.apply(&TensorVector::basis(2, &[1, 0])).unwrap();
        let y = a.apply(&TensorVector::basis(2, &[0, 1])).unwrap();
        assert_eq!(x, y.scale(&-RatFunc::q_pow(-1)));
    }

    #[test]
    fn tensor_applies_legwise() {
        let s = jimbo_a(2);
        let a = sigma_i(&s, 2, 1).unwrap();
        let b = antisymmetrizer(&s, 2);
        let x = TensorVector::basis(2, &[1, 0]).add(&TensorVector::basis(2, &[1, 1]).scale(&RatFunc::q()));
        let y = TensorVector::basis(2, &[0, 1]);
        let lhs = a.tensor(&b).apply(&x.tensor(&y)).unwrap();
        let rhs = a.apply(&x).unwrap().tensor(&b.apply(&y).unwrap());
        assert_eq!(lhs, rhs);
        assert!(a.compose(&sigma_i(&s, 3, 1).unwrap()).is_err());
    }
}
