//! The quantum exterior algebra `Λ = ⊕ Im A^{(k)}`: graded bases, wedge and
//! coproduct structure constants, rank detection.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::braiding::BraidedSpace;
use crate::error::{Error, Result};
use crate::linalg::{add_entry, Echelon, Matrix, Module, SparseVec};
use crate::permutations::chi;
use crate::scalar::RatFunc;
use crate::tensor_ops::{antisymmetrizer, shuffle_op, sigma_w, word_index, Sign, SparseOperator, TensorVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisFlavor {
    /// `A^{(k)}(v_{i_1} ⊗ … ⊗ v_{i_k})` for `i_1 < … < i_k`.
    Increasing,
    /// Images of the lexicographically first independent columns of `A^{(k)}`.
    Echelon,
    /// Any other family, e.g. obtained by [`ExteriorBasis::transformed`].
    Custom,
}

impl std::str::FromStr for BasisFlavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "increasing" => Ok(Self::Increasing),
            "echelon" => Ok(Self::Echelon),
            _ => Err(Error::Parse { line: 1, column: 1, message: format!("unknown basis flavor '{s}'") }),
        }
    }
}

/// A basis `ω_{k,1}, …, ω_{k,d}` of `Im A^{(k)}` with a coordinate map.
#[derive(Clone, Debug)]
pub struct ExteriorBasis {
    dim: usize,
    degree: usize,
    flavor: BasisFlavor,
    preimages: Vec<SparseVec<usize>>,
    reps: Vec<SparseVec<usize>>,
    pivots: Vec<usize>,
    // coordinate i is Σ_r pinv[i][r] y[pivots[r]]
    pinv: Matrix,
}

impl ExteriorBasis {
    fn from_preimages(
        space: &BraidedSpace,
        degree: usize,
        flavor: BasisFlavor,
        preimages: Vec<SparseVec<usize>>,
    ) -> Option<Self> {
        let a = antisymmetrizer(space, degree);
        let reps: Vec<SparseVec<usize>> = preimages.iter().map(|x| a.apply_index(x)).collect();
        Self::from_reps(space.dim(), degree, flavor, preimages, reps)
    }

    fn from_reps(
        dim: usize,
        degree: usize,
        flavor: BasisFlavor,
        preimages: Vec<SparseVec<usize>>,
        reps: Vec<SparseVec<usize>>,
    ) -> Option<Self> {
        let d = reps.len();
        // choose d coordinate words on which the representatives are independent
        let cols: Vec<usize> = {
            let mut all: Vec<usize> = reps.iter().flat_map(|r| r.keys().copied()).collect();
            all.sort_unstable();
            all.dedup();
            all
        };
        let m = Matrix::from_rows(
            reps.iter().map(|r| cols.iter().map(|c| r.get(c).cloned().unwrap_or_default()).collect()).collect(),
        );
        let (_, piv) = if d == 0 { (m.clone(), Vec::new()) } else { m.rref() };
        if piv.len() != d {
            return None;
        }
        let pivots: Vec<usize> = piv.iter().map(|&p| cols[p]).collect();
        let p = Matrix::from_rows(
            pivots.iter().map(|w| reps.iter().map(|r| r.get(w).cloned().unwrap_or_default()).collect()).collect(),
        );
        let pinv = if d == 0 { Matrix::zeros(0, 0) } else { p.inverse()? };
        Some(Self { dim, degree, flavor, preimages, reps, pivots, pinv })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn flavor(&self) -> BasisFlavor {
        self.flavor
    }

    pub fn representative(&self, i: usize) -> TensorVector {
        TensorVector { dim: self.dim, degree: self.degree, terms: self.reps[i].clone() }
    }

    pub fn representatives(&self) -> &[SparseVec<usize>] {
        &self.reps
    }

    /// Words on which the representatives are independent; coordinates only read these.
    pub fn pivot_words(&self) -> &[usize] {
        &self.pivots
    }

    /// Same degree and the same representatives.
    pub fn same_as(&self, other: &Self) -> bool {
        self.degree == other.degree && self.dim == other.dim && self.reps == other.reps
    }

    pub fn preimage(&self, i: usize) -> &SparseVec<usize> {
        &self.preimages[i]
    }

    /// Coordinates of `y ∈ Im A^{(k)}` read off the pivot words; no membership check.
    pub fn coordinates_of<M: Module>(&self, y: &BTreeMap<usize, M>, zero: &M) -> Vec<M> {
        let mut out = vec![zero.zero_like(); self.dim()];
        for (r, w) in self.pivots.iter().enumerate() {
            if let Some(x) = y.get(w) {
                for (i, slot) in out.iter_mut().enumerate() {
                    slot.add_scaled(&self.pinv[(i, r)], x);
                }
            }
        }
        out
    }

    /// Exact coordinates, failing when `y` is not in the span.
    pub fn coordinates(&self, y: &SparseVec<usize>) -> Result<Vec<RatFunc>> {
        let c = self.coordinates_of(y, &RatFunc::zero());
        if &self.combine(&c) != y {
            return Err(Error::BasisMismatch(format!(
                "vector is not in the degree-{} exterior component",
                self.degree
            )));
        }
        Ok(c)
    }

    /// `Σ c_i ω_i` in `V^{⊗k}`.
    pub fn combine(&self, c: &[RatFunc]) -> SparseVec<usize> {
        let mut out = SparseVec::new();
        for (ci, r) in c.iter().zip(&self.reps) {
            crate::linalg::axpy(&mut out, ci, r);
        }
        out
    }

    /// The basis `ω'_i = Σ_j t[i][j] ω_j` for an invertible `t`.
    pub fn transformed(&self, t: &Matrix) -> Result<Self> {
        let d = self.dim();
        if t.rows() != d || t.cols() != d {
            return Err(Error::DimensionMismatch(format!("expected a {d}x{d} change of basis")));
        }
        let mix = |vs: &[SparseVec<usize>]| -> Vec<SparseVec<usize>> {
            (0..d)
                .map(|i| {
                    let mut v = SparseVec::new();
                    for (j, x) in vs.iter().enumerate() {
                        crate::linalg::axpy(&mut v, &t[(i, j)], x);
                    }
                    v
                })
                .collect()
        };
        Self::from_reps(self.dim, self.degree, BasisFlavor::Custom, mix(&self.preimages), mix(&self.reps))
            .ok_or_else(|| Error::BasisMismatch("change of basis is singular".into()))
    }
}

/// Dense three-index array of scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    shape: [usize; 3],
    data: Vec<RatFunc>,
}

impl Tensor3 {
    pub fn zeros(shape: [usize; 3]) -> Self {
        Self { shape, data: vec![RatFunc::zero(); shape.iter().product()] }
    }

    pub fn shape(&self) -> [usize; 3] {
        self.shape
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &RatFunc {
        &self.data[(a * self.shape[1] + b) * self.shape[2] + c]
    }

    fn set(&mut self, a: usize, b: usize, c: usize, x: RatFunc) {
        let i = (a * self.shape[1] + b) * self.shape[2] + c;
        self.data[i] = x;
    }

    pub fn map(&self, f: impl Fn(&RatFunc) -> Result<RatFunc>) -> Result<Self> {
        Ok(Self { shape: self.shape, data: self.data.iter().map(f).collect::<Result<_>>()? })
    }
}

/// `ω_{m,i} ⧢ ω_{n,j} = Σ_k μ[i][j][k] ω_{m+n,k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeConstants {
    pub m: usize,
    pub n: usize,
    pub mu: Tensor3,
}

/// `Δ_{m,n}(ω_{m+n,k}) = Σ_{i,j} λ[k][i][j] ω_{m,i} ⊗ ω_{n,j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoproductConstants {
    pub m: usize,
    pub n: usize,
    pub lambda: Tensor3,
}

/// Bases and structure constants of `Λ_σ V`, memoized per degree.
pub struct ExteriorAlgebra {
    space: Arc<BraidedSpace>,
    flavor: BasisFlavor,
    bases: Mutex<HashMap<usize, Arc<ExteriorBasis>>>,
    wedge: Mutex<HashMap<(usize, usize), Arc<WedgeConstants>>>,
    coproduct: Mutex<HashMap<(usize, usize), Arc<CoproductConstants>>>,
}

impl ExteriorAlgebra {
    /// Prefers the increasing-word basis, falling back to echelon.
    pub fn new(space: Arc<BraidedSpace>) -> Self {
        Self::with_flavor(space, BasisFlavor::Increasing)
    }

    pub fn with_flavor(space: Arc<BraidedSpace>, flavor: BasisFlavor) -> Self {
        Self { space, flavor, bases: Mutex::default(), wedge: Mutex::default(), coproduct: Mutex::default() }
    }

    pub fn space(&self) -> &Arc<BraidedSpace> {
        &self.space
    }

    pub fn flavor(&self) -> BasisFlavor {
        self.flavor
    }

    pub fn basis(&self, k: usize) -> Arc<ExteriorBasis> {
        if let Some(b) = self.bases.lock().unwrap().get(&k) {
            return b.clone();
        }
        let b = Arc::new(compute_basis(&self.space, k, self.flavor));
        self.bases.lock().unwrap().entry(k).or_insert(b).clone()
    }

    /// Replaces the basis at degree `k`, dropping constants that depend on it.
    pub fn set_basis(&self, basis: ExteriorBasis) {
        let k = basis.degree;
        self.bases.lock().unwrap().insert(k, Arc::new(basis));
        self.wedge.lock().unwrap().retain(|(m, n), _| *m != k && *n != k && m + n != k);
        self.coproduct.lock().unwrap().retain(|(m, n), _| *m != k && *n != k && m + n != k);
    }

    pub fn dim(&self, k: usize) -> usize {
        self.basis(k).dim()
    }

    pub fn wedge_constants(&self, m: usize, n: usize) -> Arc<WedgeConstants> {
        if let Some(c) = self.wedge.lock().unwrap().get(&(m, n)) {
            return c.clone();
        }
        let c = Arc::new(self.compute_wedge(m, n));
        self.wedge.lock().unwrap().entry((m, n)).or_insert(c).clone()
    }

    fn compute_wedge(&self, m: usize, n: usize) -> WedgeConstants {
        let (bm, bn, bp) = (self.basis(m), self.basis(n), self.basis(m + n));
        let mut mu = Tensor3::zeros([bm.dim(), bn.dim(), bp.dim()]);
        if m == 0 || n == 0 {
            for i in 0..bm.dim() {
                for j in 0..bn.dim() {
                    let y = bm.representative(i).tensor(&bn.representative(j));
                    for (k, c) in bp.coordinates(&y.terms).expect("unit component").into_iter().enumerate() {
                        mu.set(i, j, k, c);
                    }
                }
            }
            return WedgeConstants { m, n, mu };
        }
        let sh = shuffle_op(&self.space, &[m, n], Sign::Plus);
        for i in 0..bm.dim() {
            for j in 0..bn.dim() {
                let x = bm.representative(i).tensor(&bn.representative(j));
                let y = sh.apply_index(&x.terms);
                let c = bp.coordinates(&y).expect("shuffle product of exterior elements is exterior");
                for (k, v) in c.into_iter().enumerate() {
                    mu.set(i, j, k, v);
                }
            }
        }
        WedgeConstants { m, n, mu }
    }

    /// `Δ_{m,n}(ω_{m+n,k})` as a vector in `V^{⊗m} ⊗ V^{⊗n}`.
    pub fn coproduct_vector(&self, m: usize, n: usize, k: usize) -> SparseVec<usize> {
        let bp = self.basis(m + n);
        if m == 0 || n == 0 {
            return bp.reps[k].clone();
        }
        let x = bp.preimage(k);
        let sh = shuffle_op(&self.space, &[m, n], Sign::Minus);
        let proj = antisymmetrizer(&self.space, m).tensor(&antisymmetrizer(&self.space, n));
        proj.apply_index(&sh.apply_index(x))
    }

    pub fn coproduct_constants(&self, m: usize, n: usize) -> Arc<CoproductConstants> {
        if let Some(c) = self.coproduct.lock().unwrap().get(&(m, n)) {
            return c.clone();
        }
        let c = Arc::new(self.compute_coproduct(m, n));
        self.coproduct.lock().unwrap().entry((m, n)).or_insert(c).clone()
    }

    fn compute_coproduct(&self, m: usize, n: usize) -> CoproductConstants {
        let (bm, bn, bp) = (self.basis(m), self.basis(n), self.basis(m + n));
        let mut lambda = Tensor3::zeros([bp.dim(), bm.dim(), bn.dim()]);
        let split = self.space.dim().pow(n as u32);
        for k in 0..bp.dim() {
            let y = self.coproduct_vector(m, n, k);
            let l = split_coordinates(&bm, &bn, split, &y).expect("coproduct lands in the exterior tensor square");
            for (i, row) in l.into_iter().enumerate() {
                for (j, v) in row.into_iter().enumerate() {
                    lambda.set(k, i, j, v);
                }
            }
        }
        CoproductConstants { m, n, lambda }
    }

    /// `d_1, …, d_{max}`, stopping after the first zero.
    pub fn dims(&self, max_degree: usize) -> Vec<usize> {
        let mut out = vec![1];
        for k in 1..=max_degree {
            let d = if out.last() == Some(&0) { 0 } else { antisymmetrizer(&self.space, k).rank() };
            out.push(d);
        }
        out
    }

    /// The rank `M`, provided `d_M = 1` and `d_k = 0` is observed for `M < k ≤ max_degree`.
    pub fn rank(&self, max_degree: usize) -> Option<usize> {
        rank_from_dims(&self.dims(max_degree))
    }
}

pub fn rank_from_dims(dims: &[usize]) -> Option<usize> {
    let top = dims.iter().rposition(|&d| d > 0)?;
    (top >= 1 && dims[top] == 1 && top + 1 < dims.len()).then_some(top)
}

/// Coordinates `c[i][j]` of `y = Σ c[i][j] a_i ⊗ b_j`, where `split = N^{deg b}`.
pub fn split_coordinates(
    a: &ExteriorBasis,
    b: &ExteriorBasis,
    split: usize,
    y: &SparseVec<usize>,
) -> Result<Vec<Vec<RatFunc>>> {
    // first leg: group by the second-leg word
    let mut by_right: BTreeMap<usize, SparseVec<usize>> = BTreeMap::new();
    for (w, c) in y {
        by_right.entry(w % split).or_default().insert(w / split, c.clone());
    }
    let mut partial: Vec<SparseVec<usize>> = vec![SparseVec::new(); a.dim()];
    for (r, col) in by_right {
        for (i, c) in a.coordinates(&col)?.into_iter().enumerate() {
            add_entry(&mut partial[i], r, c);
        }
    }
    let out: Vec<Vec<RatFunc>> = partial.iter().map(|v| b.coordinates(v)).collect::<Result<_>>()?;
    Ok(out)
}

fn increasing_words(n: usize, k: usize) -> Vec<Vec<usize>> {
    crate::permutations::combinations(&(0..n).collect::<Vec<_>>(), k)
}

fn compute_basis(space: &BraidedSpace, k: usize, flavor: BasisFlavor) -> ExteriorBasis {
    let n = space.dim();
    if flavor == BasisFlavor::Increasing {
        let pre: Vec<SparseVec<usize>> =
            increasing_words(n, k).iter().map(|w| [(word_index(n, w), RatFunc::one())].into_iter().collect()).collect();
        let a = antisymmetrizer(space, k);
        let nonzero: Vec<SparseVec<usize>> = pre.into_iter().filter(|x| !a.apply_index(x).is_empty()).collect();
        if nonzero.len() == a.rank() {
            if let Some(b) = ExteriorBasis::from_preimages(space, k, BasisFlavor::Increasing, nonzero) {
                return b;
            }
        }
    }
    echelon_basis(space, k)
}

fn echelon_basis(space: &BraidedSpace, k: usize) -> ExteriorBasis {
    let a = antisymmetrizer(space, k);
    let mut e = Echelon::<usize>::new();
    let mut pre = Vec::new();
    for s in 0..a.size() {
        let col: SparseVec<usize> = a.column(s).iter().cloned().collect();
        if !col.is_empty() && e.insert(col).is_some() {
            pre.push([(s, RatFunc::one())].into_iter().collect());
        }
    }
    ExteriorBasis::from_preimages(space, k, BasisFlavor::Echelon, pre).expect("echelon columns are independent")
}

/// `dim V^{⊗k} / Σ_i V^{⊗(i-1)} ⊗ K ⊗ V^{⊗(k-i-1)}` with `K = Ker(σ - q)`, for any braiding.
pub fn kernel_quotient_dim(space: &BraidedSpace, k: usize) -> usize {
    let n = space.dim();
    let total = n.pow(k as u32);
    if k < 2 {
        return total;
    }
    let kernel = hecke_kernel(space);
    let mut e = Echelon::<usize>::new();
    for pos in 0..k - 1 {
        let left = n.pow(pos as u32);
        let right = n.pow((k - pos - 2) as u32);
        for x in &kernel {
            for u in 0..left {
                for v in 0..right {
                    let y: SparseVec<usize> = x.iter().map(|(w, c)| ((u * n * n + w) * right + v, c.clone())).collect();
                    e.insert(y);
                }
            }
        }
    }
    total - e.rank()
}

/// The quadratic-quotient dimension, defined for Hecke braidings.
pub fn hecke_quotient_dims(space: &BraidedSpace, k: usize) -> Result<usize> {
    if !space.is_hecke() {
        return Err(Error::NotHecke);
    }
    Ok(kernel_quotient_dim(space, k))
}

/// A basis of `Ker(σ - q I)` as vectors in `V ⊗ V`.
pub fn hecke_kernel(space: &BraidedSpace) -> Vec<SparseVec<usize>> {
    let n2 = space.dim() * space.dim();
    let m = space.matrix().add(&Matrix::identity(n2).scale(&-space.q()));
    m.nullspace().into_iter().map(|v| v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()).collect()
}

/// `⧢ β_{m,n} (A^{(m)} ⊗ A^{(n)}) = ⧢ (A^{(n)} ⊗ A^{(m)}) β_{m,n}` as operators.
pub fn beta_commutativity_check(space: &BraidedSpace, m: usize, n: usize) -> bool {
    if m == 0 || n == 0 {
        return true;
    }
    let beta = sigma_w(space, &chi(m, n));
    let sh = shuffle_op(space, &[n, m], Sign::Plus);
    let am = antisymmetrizer(space, m);
    let an = antisymmetrizer(space, n);
    let lhs = sh.compose(&beta.compose(&am.tensor(&an)).unwrap()).unwrap();
    let rhs = sh.compose(&an.tensor(&am).compose(&beta).unwrap()).unwrap();
    lhs == rhs
}

/// `A^{(m+n)}` restricted to `x ⊗ y`, handy for products of arbitrary tensors.
pub fn wedge_vectors(space: &BraidedSpace, x: &TensorVector, y: &TensorVector) -> TensorVector {
    let t = x.tensor(y);
    if x.degree == 0 || y.degree == 0 {
        return t;
    }
    let sh: SparseOperator = shuffle_op(space, &[x.degree, y.degree], Sign::Plus);
    sh.apply(&t).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::{diagonal_cartan, jimbo_a, type_c_example, CartanData};
    use crate::scalar::parse_coeff;

    fn rf(s: &str) -> RatFunc {
        parse_coeff(s).unwrap()
    }

    fn ext(space: BraidedSpace) -> ExteriorAlgebra {
        ExteriorAlgebra::new(Arc::new(space))
    }

    #[test]
    fn dims_and_ranks() {
        let j3 = ext(jimbo_a(3));
        assert_eq!(j3.dims(4), vec![1, 3, 3, 1, 0]);
        assert_eq!(j3.rank(5), Some(3));
        assert_eq!(j3.basis(2).flavor(), BasisFlavor::Increasing);
        let c = ext(type_c_example());
        assert_eq!(c.dims(5), vec![1, 4, 6, 4, 1, 0]);
        assert_eq!(c.rank(6), Some(4));
        let a2 = ext(diagonal_cartan(&CartanData::named("A2").unwrap()).unwrap());
        let d = a2.dims(4);
        assert_eq!(d[3], 6);
        assert!(d[4] > 0);
        assert_eq!(a2.rank(4), None);
        assert_eq!(a2.basis(3).flavor(), BasisFlavor::Echelon);
    }

    #[test]
    fn degree_zero_is_scalars() {
        let j = ext(jimbo_a(2));
        let b = j.basis(0);
        assert_eq!(b.dim(), 1);
        let mu = j.wedge_constants(0, 1);
        for i in 0..2 {
            for k in 0..2 {
                assert_eq!(*mu.mu.get(0, i, k), if i == k { RatFunc::one() } else { RatFunc::zero() });
            }
        }
        let l = j.coproduct_constants(0, 2);
        assert_eq!(*l.lambda.get(0, 0, 0), RatFunc::one());
    }

    #[test]
    fn jimbo_wedge_and_coproduct() {
        let j = ext(jimbo_a(2));
        let mu = j.wedge_constants(1, 1);
        assert_eq!(*mu.mu.get(0, 1, 0), RatFunc::one());
        assert_eq!(*mu.mu.get(1, 0, 0), -RatFunc::q_pow(-1));
        assert!(mu.mu.get(0, 0, 0).is_zero());
        // Δ_{1,1}(v1∧v2) = (v1⊗v2 - q^-1 v2⊗v1)/(1 + q^-2)
        let l = j.coproduct_constants(1, 1);
        assert_eq!(*l.lambda.get(0, 0, 1), rf("1/(1 + q^-2)"));
        assert_eq!(*l.lambda.get(0, 1, 0), rf("-q^-1/(1 + q^-2)"));
    }

    #[test]
    fn type_c_wedge_relation() {
        let c = ext(type_c_example());
        let b2 = c.basis(2);
        assert_eq!(b2.flavor(), BasisFlavor::Increasing);
        // increasing pairs in lex order: 12 13 14 23 24 34
        let mu = c.wedge_constants(1, 1);
        assert_eq!(*mu.mu.get(3, 0, 2), rf("-q^2"));
        assert_eq!(*mu.mu.get(3, 0, 3), rf("q - q^3"));
        for k in [0, 1, 4, 5] {
            assert!(mu.mu.get(3, 0, k).is_zero());
        }
    }

    #[test]
    fn beta_commutativity() {
        assert!(beta_commutativity_check(&jimbo_a(2), 1, 1));
        assert!(beta_commutativity_check(&type_c_example(), 1, 2));
        assert!(beta_commutativity_check(&jimbo_a(2), 0, 2));
    }

    #[test]
    fn quotient_dims() {
        assert_eq!(hecke_quotient_dims(&jimbo_a(2), 2).unwrap(), 1);
        assert_eq!(hecke_quotient_dims(&jimbo_a(3), 3).unwrap(), 1);
        assert_eq!(hecke_kernel(&jimbo_a(2)).len(), 3);
        assert_eq!(kernel_quotient_dim(&type_c_example(), 2), 6);
        assert!(matches!(hecke_quotient_dims(&type_c_example(), 2), Err(Error::NotHecke)));
    }

    #[test]
    fn transformed_basis_coordinates() {
        let c = ext(type_c_example());
        let b = c.basis(2);
        let mut t = Matrix::identity(6);
        t[(0, 3)] = RatFunc::q();
        t[(5, 1)] = rf("1 - q^-2");
        let b2 = b.transformed(&t).unwrap();
        for i in 0..6 {
            let mut e = vec![RatFunc::zero(); 6];
            e[i] = RatFunc::one();
            assert_eq!(b2.coordinates(&b2.representatives()[i]).unwrap(), e);
        }
        let outside: SparseVec<usize> = [(0, RatFunc::one())].into_iter().collect();
        assert!(b.coordinates(&outside).is_err());
    }
}
