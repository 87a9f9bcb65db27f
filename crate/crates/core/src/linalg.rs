//! Exact linear algebra over `Q(q)`.
//!
//! [`Echelon`] is an incremental sparse row echelon form keyed by an ordered
//! column type. Each stored row has leading coefficient 1 at its largest key
//! (the pivot) and only smaller keys in its tail. Reducing a vector against it
//! eliminates pivot columns from the top down, so the remainder is the unique
//! representative supported on non-pivot columns: the canonical complement of
//! the row span. [`Matrix`] is a small dense matrix with Gauss-Jordan routines.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use crate::scalar::RatFunc;

pub type SparseVec<K> = BTreeMap<K, RatFunc>;

/// `v += c * w` on sparse vectors, dropping zeros.
pub fn axpy<K: Ord + Copy>(v: &mut SparseVec<K>, c: &RatFunc, w: &SparseVec<K>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in w {
        add_entry(v, *k, c * x);
    }
}

pub fn add_entry<K: Ord>(v: &mut SparseVec<K>, k: K, x: RatFunc) {
    if x.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match v.entry(k) {
        Entry::Vacant(e) => {
            e.insert(x);
        }
        Entry::Occupied(mut e) => {
            let s = e.get() + &x;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

pub fn scale_vec<K: Ord + Copy>(v: &SparseVec<K>, c: &RatFunc) -> SparseVec<K> {
    if c.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(k, x)| (*k, c * x)).collect()
}

/// Coefficients that form a vector space over `Q(q)`.
pub trait Module: Clone {
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// `self += c * x`
    fn add_scaled(&mut self, c: &RatFunc, x: &Self);
}

impl Module for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero()
    }

    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }

    fn add_scaled(&mut self, c: &RatFunc, x: &Self) {
        if !c.is_zero() && !x.is_zero() {
            *self += &(c * x);
        }
    }
}

#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Copy + Hash> {
    rows: HashMap<K, Vec<(K, RatFunc)>>,
}

impl<K: Ord + Copy + Hash> Default for Echelon<K> {
    fn default() -> Self {
        Self { rows: HashMap::new() }
    }
}

impl<K: Ord + Copy + Hash> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.rows.contains_key(k)
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Stored rows as `(pivot, tail)`; the pivot coefficient is 1.
    pub fn rows(&self) -> impl Iterator<Item = (&K, &[(K, RatFunc)])> {
        self.rows.iter().map(|(k, t)| (k, t.as_slice()))
    }

    /// Adds `v` to the span. Returns the pivot of the new row, or `None` when
    /// `v` was already in the span.
    pub fn insert(&mut self, mut v: SparseVec<K>) -> Option<K> {
        while let Some((lead, c)) = v.pop_last() {
            match self.rows.get(&lead) {
                Some(tail) => {
                    let neg = -&c;
                    for (k, a) in tail {
                        add_entry(&mut v, *k, &neg * a);
                    }
                }
                None => {
                    let inv = c.inv().expect("nonzero leading coefficient");
                    let tail: Vec<(K, RatFunc)> = v.iter().rev().map(|(k, a)| (*k, a * &inv)).collect();
                    self.rows.insert(lead, tail);
                    return Some(lead);
                }
            }
        }
        None
    }

    /// Canonical remainder of `v` modulo the row span.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        let mut out = SparseVec::new();
        while let Some((k, c)) = v.pop_last() {
            match self.rows.get(&k) {
                Some(tail) => {
                    let neg = -&c;
                    for (t, a) in tail {
                        add_entry(&mut v, *t, &neg * a);
                    }
                }
                None => {
                    out.insert(k, c);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Dense matrix over `Q(q)`, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RatFunc>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![RatFunc::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = RatFunc::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[RatFunc] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &RatFunc) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RatFunc::is_zero)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // prefer a unit of the Laurent ring as pivot to keep entries polynomial
            let cand = (r..m.rows)
                .filter(|&i| !m[(i, c)].is_zero())
                .min_by_key(|&i| (!m[(i, c)].is_monomial(), !m[(i, c)].is_laurent()));
            let Some(p) = cand else { continue };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().unwrap();
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        let d = &f * &m[(r, j)];
                        m[(i, j)] -= &d;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : M x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<RatFunc>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![RatFunc::zero(); self.cols];
                x[f] = RatFunc::one();
                for (row, &p) in pivots.iter().enumerate() {
                    x[p] = -&r[(row, f)];
                }
                x
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = RatFunc::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = RatFunc;
    fn index(&self, (i, j): (usize, usize)) -> &RatFunc {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RatFunc {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_coeff;

    fn rf(s: &str) -> RatFunc {
        parse_coeff(s).unwrap()
    }

    #[test]
    fn echelon_remainder_is_canonical() {
        let mut e = Echelon::<u32>::new();
        // rows: x2 - q x0, x1 + x0
        e.insert([(2, RatFunc::one()), (0, -RatFunc::q())].into_iter().collect());
        e.insert([(1, RatFunc::one()), (0, RatFunc::one())].into_iter().collect());
        assert_eq!(e.rank(), 2);
        // a vector already in the span is dependent
        assert!(e
            .insert([(2, RatFunc::from_int(2)), (1, RatFunc::one()), (0, rf("1 - 2*q"))].into_iter().collect())
            .is_none());
        let r = e.reduce([(2, RatFunc::one()), (1, RatFunc::one())].into_iter().collect());
        assert_eq!(r, [(0, rf("q - 1"))].into_iter().collect());
    }

    #[test]
    fn inverse_and_nullspace() {
        let m = Matrix::from_rows(vec![vec![RatFunc::q(), RatFunc::one()], vec![RatFunc::one(), RatFunc::q_pow(-1)]]);
        assert!(m.inverse().is_none());
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        let x = Matrix::from_rows(ns.to_vec());
        // M x^T = 0
        let xt = Matrix::from_rows(ns[0].iter().map(|c| vec![c.clone()]).collect());
        assert!(m.mul(&xt).is_zero());
        assert_eq!(x.cols(), 2);
        let a = Matrix::from_rows(vec![vec![RatFunc::q(), RatFunc::one()], vec![RatFunc::zero(), RatFunc::q()]]);
        let ai = a.inverse().unwrap();
        assert_eq!(a.mul(&ai), Matrix::identity(2));
    }
}
