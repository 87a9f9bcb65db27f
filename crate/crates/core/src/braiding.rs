//! Braided vector spaces `(V, σ)`.
//!
//! Indices are 0-based in the API and 1-based in spec files and generator
//! names. `σ(v_i ⊗ v_j) = Σ σ_{ij}^{kl} v_k ⊗ v_l` is stored column-wise: the
//! column of the pair `(i, j)` (flat index `i·N + j`) lists `(k·N + l, σ_{ij}^{kl})`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{add_entry, Matrix, SparseVec};
use crate::scalar::{parse_coeff, RatFunc};
use crate::tensor_ops::SparseOperator;

/// Outcome of [`BraidedSpace::verify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub braid_ok: bool,
    pub invertible: bool,
    pub hecke: bool,
}

#[derive(Default)]
pub(crate) struct OperatorCache {
    pub(crate) sigma_w: Mutex<HashMap<(usize, Vec<usize>), Arc<SparseOperator>>>,
    pub(crate) antisym: Mutex<HashMap<usize, Arc<SparseOperator>>>,
}

pub struct BraidedSpace {
    name: String,
    dim: usize,
    q: RatFunc,
    sigma: Vec<Vec<(usize, RatFunc)>>,
    flags: Flags,
    inverse: OnceLock<Option<Matrix>>,
    pub(crate) cache: OperatorCache,
}

impl Clone for BraidedSpace {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            dim: self.dim,
            q: self.q.clone(),
            sigma: self.sigma.clone(),
            flags: self.flags,
            inverse: OnceLock::new(),
            cache: OperatorCache::default(),
        }
    }
}

impl PartialEq for BraidedSpace {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.q == other.q && self.sigma == other.sigma
    }
}

impl fmt::Debug for BraidedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BraidedSpace")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("flags", &self.flags)
            .finish()
    }
}

impl BraidedSpace {
    /// Builds a space from `(i, j, k, l, coeff)` entries (0-based), summing repeats,
    /// and runs [`verify`](Self::verify).
    pub fn from_entries(
        name: impl Into<String>,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, usize, RatFunc)>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch("dimension must be positive".into()));
        }
        let mut cols: Vec<SparseVec<usize>> = vec![SparseVec::new(); dim * dim];
        for (i, j, k, l, c) in entries {
            if [i, j, k, l].iter().any(|&x| x >= dim) {
                return Err(Error::DimensionMismatch(format!(
                    "index pair ({},{}) -> ({},{}) outside 1..{dim}",
                    i + 1,
                    j + 1,
                    k + 1,
                    l + 1
                )));
            }
            add_entry(&mut cols[i * dim + j], k * dim + l, c);
        }
        let sigma = cols.into_iter().map(|c| c.into_iter().collect()).collect();
        Ok(Self::assemble(name.into(), dim, RatFunc::q(), sigma))
    }

    fn assemble(name: String, dim: usize, q: RatFunc, sigma: Vec<Vec<(usize, RatFunc)>>) -> Self {
        let mut s = Self {
            name,
            dim,
            q,
            sigma,
            flags: Flags { braid_ok: false, invertible: false, hecke: false },
            inverse: OnceLock::new(),
            cache: OperatorCache::default(),
        };
        s.flags = s.verify();
        s
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The Hecke parameter. It is the symbol `q` unless the space was specialized.
    pub fn q(&self) -> &RatFunc {
        &self.q
    }

    pub fn flags(&self) -> Flags {
        self.flags
    }

    pub fn is_hecke(&self) -> bool {
        self.flags.hecke
    }

    /// `σ(v_i ⊗ v_j)` as `(k·N + l, coeff)` pairs.
    pub fn column(&self, i: usize, j: usize) -> &[(usize, RatFunc)] {
        &self.sigma[i * self.dim + j]
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize, l: usize) -> RatFunc {
        self.column(i, j).iter().find(|(t, _)| *t == k * self.dim + l).map_or_else(RatFunc::zero, |(_, c)| c.clone())
    }

    /// σ as an `N² × N²` matrix, rows indexed by targets.
    pub fn matrix(&self) -> Matrix {
        let n2 = self.dim * self.dim;
        let mut m = Matrix::zeros(n2, n2);
        for (s, col) in self.sigma.iter().enumerate() {
            for (t, c) in col {
                m[(*t, s)] = c.clone();
            }
        }
        m
    }

    /// σ⁻¹ as a matrix, computed on first use.
    pub fn inverse_matrix(&self) -> Option<&Matrix> {
        self.inverse.get_or_init(|| self.matrix().inverse()).as_ref()
    }

    /// Exact checks of the braid relation, invertibility and the Hecke relation.
    pub fn verify(&self) -> Flags {
        Flags { braid_ok: self.check_braid(), invertible: self.inverse_matrix().is_some(), hecke: self.check_hecke() }
    }

    fn apply2(&self, v: &SparseVec<usize>) -> SparseVec<usize> {
        let mut out = SparseVec::new();
        for (s, c) in v {
            for (t, a) in &self.sigma[*s] {
                add_entry(&mut out, *t, c * a);
            }
        }
        out
    }

    /// σ on slots `pos, pos+1` of a degree-3 word vector.
    fn apply3(&self, v: &SparseVec<usize>, pos: usize) -> SparseVec<usize> {
        let n = self.dim;
        let mut out = SparseVec::new();
        for (w, c) in v {
            let d = [w / (n * n), (w / n) % n, w % n];
            let s = d[pos] * n + d[pos + 1];
            for (t, a) in &self.sigma[s] {
                let mut e = d;
                e[pos] = t / n;
                e[pos + 1] = t % n;
                add_entry(&mut out, e[0] * n * n + e[1] * n + e[2], c * a);
            }
        }
        out
    }

    fn check_braid(&self) -> bool {
        let n = self.dim;
        (0..n * n * n).all(|w| {
            let e: SparseVec<usize> = [(w, RatFunc::one())].into_iter().collect();
            let lhs = self.apply3(&self.apply3(&self.apply3(&e, 0), 1), 0);
            let rhs = self.apply3(&self.apply3(&self.apply3(&e, 1), 0), 1);
            lhs == rhs
        })
    }

    fn check_hecke(&self) -> bool {
        let qq = &self.q - &self.q.inv().unwrap_or_else(|_| RatFunc::zero());
        if self.q.is_zero() {
            return false;
        }
        (0..self.dim * self.dim).all(|s| {
            let e: SparseVec<usize> = [(s, RatFunc::one())].into_iter().collect();
            let s1 = self.apply2(&e);
            let mut r = self.apply2(&s1);
            crate::linalg::axpy(&mut r, &-&qq, &s1);
            add_entry(&mut r, s, -RatFunc::one());
            r.is_empty()
        })
    }

    /// The same braiding with `q` replaced by the rational number `q0`.
    pub fn specialize(&self, q0: &BigRational) -> Result<Self> {
        let sigma = self
            .sigma
            .iter()
            .map(|col| -> Result<Vec<(usize, RatFunc)>> {
                let mut v = SparseVec::new();
                for (t, c) in col {
                    add_entry(&mut v, *t, c.specialize(q0)?);
                }
                Ok(v.into_iter().collect())
            })
            .collect::<Result<_>>()?;
        Ok(Self::assemble(format!("{}@q={}", self.name, q0), self.dim, self.q.specialize(q0)?, sigma))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// Jimbo's braiding of type `A_{N-1}`.
pub fn jimbo_a(n: usize) -> BraidedSpace {
    assert!(n >= 1, "dimension must be positive");
    let q = RatFunc::q();
    let qq = &q - &RatFunc::q_pow(-1);
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            match i.cmp(&j) {
                std::cmp::Ordering::Less => entries.push((i, j, j, i, RatFunc::one())),
                std::cmp::Ordering::Equal => entries.push((i, i, i, i, q.clone())),
                std::cmp::Ordering::Greater => {
                    entries.push((i, j, j, i, RatFunc::one()));
                    entries.push((i, j, i, j, qq.clone()));
                }
            }
        }
    }
    BraidedSpace::from_entries(format!("jimbo-a:{n}"), n, entries).expect("valid indices")
}

/// The four-dimensional braiding of type C.
pub fn type_c_example() -> BraidedSpace {
    let c = |s: &str| parse_coeff(s).expect("constant expression");
    let mut e = Vec::new();
    for i in 0..4 {
        e.push((i, i, i, i, RatFunc::q()));
    }
    for (i, j) in [(2, 1), (3, 1), (4, 2), (4, 3)] {
        e.push((i - 1, j - 1, j - 1, i - 1, RatFunc::one()));
    }
    for (i, j) in [(1, 2), (1, 3), (2, 4), (3, 4)] {
        e.push((i - 1, j - 1, j - 1, i - 1, RatFunc::one()));
        e.push((i - 1, j - 1, i - 1, j - 1, c("q - q^-1")));
    }
    let rules: [((usize, usize), &[((usize, usize), &str)]); 4] = [
        (
            (1, 4),
            &[((4, 1), "q^-1"), ((1, 4), "(1 + q^-4)*(q - q^-1)"), ((2, 3), "q^-2 - q^-4"), ((3, 2), "-(1 - q^-2)")],
        ),
        ((2, 3), &[((3, 2), "q^-1"), ((2, 3), "q - q^-3"), ((1, 4), "q^-2 - q^-4")]),
        ((3, 2), &[((2, 3), "q^-1"), ((1, 4), "-(1 - q^-2)")]),
        ((4, 1), &[((1, 4), "q^-1")]),
    ];
    for ((i, j), targets) in rules {
        for ((k, l), s) in targets {
            e.push((i - 1, j - 1, k - 1, l - 1, c(s)));
        }
    }
    BraidedSpace::from_entries("type-c", 4, e).expect("valid indices")
}

/// Symmetrizable generalized Cartan data `(a_{ij}, d_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanData {
    pub a: Vec<Vec<i64>>,
    pub d: Vec<i64>,
}

impl CartanData {
    pub fn new(a: Vec<Vec<i64>>, d: Vec<i64>) -> Result<Self> {
        let n = a.len();
        if n == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        if d.len() != n || a.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCartan(format!("expected a {n}x{n} matrix and {n} symmetrizers")));
        }
        if let Some(x) = d.iter().find(|&&x| x <= 0) {
            return Err(Error::InvalidCartan(format!("symmetrizer {x} is not positive")));
        }
        for i in 0..n {
            if a[i][i] != 2 {
                return Err(Error::InvalidCartan(format!("a_{{{0}{0}}} = {1}, expected 2", i + 1, a[i][i])));
            }
            for j in 0..n {
                if i != j && a[i][j] > 0 {
                    return Err(Error::InvalidCartan(format!("a_{{{}{}}} = {} is positive", i + 1, j + 1, a[i][j])));
                }
                if d[i] * a[i][j] != d[j] * a[j][i] {
                    return Err(Error::InvalidCartan(format!("d_i a_ij != d_j a_ji at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        Ok(Self { a, d })
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    /// Finite types `A<n>`, `B<n>`, `C<n>`.
    pub fn named(name: &str) -> Result<Self> {
        let bad = || Error::UnknownBraiding(format!("cartan:{name}"));
        let (kind, n) = name.split_at(1);
        let n: usize = n.parse().map_err(|_| bad())?;
        let min = if kind == "A" { 1 } else { 2 };
        if n < min {
            return Err(bad());
        }
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            if i + 1 < n {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        let mut d = vec![1i64; n];
        match kind {
            "A" => {}
            "B" => {
                a[n - 1][n - 2] = -2;
                d = vec![2; n];
                d[n - 1] = 1;
            }
            "C" => {
                a[n - 2][n - 1] = -2;
                d[n - 1] = 2;
            }
            _ => return Err(bad()),
        }
        Self::new(a, d)
    }

    /// Reads `{"a": [[..]], "d": [..]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: CartanData = serde_json::from_str(text).map_err(json_error)?;
        Self::new(raw.a, raw.d)
    }
}

/// `σ(v_i ⊗ v_j) = -q^{d_i a_ij + 1} v_j ⊗ v_i`.
pub fn diagonal_cartan(c: &CartanData) -> Result<BraidedSpace> {
    let c = CartanData::new(c.a.clone(), c.d.clone())?;
    let n = c.rank();
    let mut e = Vec::new();
    for i in 0..n {
        for j in 0..n {
            e.push((i, j, j, i, -RatFunc::q_pow(c.d[i] * c.a[i][j] + 1)));
        }
    }
    BraidedSpace::from_entries("cartan", n, e)
}

#[derive(Serialize, Deserialize)]
struct SpecFile {
    dimension: usize,
    entries: Vec<SpecEntry>,
}

#[derive(Serialize, Deserialize)]
struct SpecEntry {
    from: [usize; 2],
    to: [usize; 2],
    coeff: String,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { line: e.line(), column: e.column(), message: e.to_string() }
}

/// Line and column (1-based) of the `n`-th occurrence of `"coeff"` in `text`.
fn locate_coeff(text: &str, n: usize) -> (usize, usize) {
    let Some((off, _)) = text.match_indices("\"coeff\"").nth(n) else { return (0, 0) };
    let before = &text[..off];
    let line = before.matches('\n').count() + 1;
    let col = off - before.rfind('\n').map_or(0, |p| p + 1) + 1;
    (line, col)
}

/// Parses a braiding spec document.
pub fn load_spec(text: &str) -> Result<BraidedSpace> {
    let raw: SpecFile = serde_json::from_str(text).map_err(json_error)?;
    let n = raw.dimension;
    let mut entries = Vec::with_capacity(raw.entries.len());
    for (idx, e) in raw.entries.iter().enumerate() {
        let c = parse_coeff(&e.coeff).map_err(|err| {
            let (line, col) = locate_coeff(text, idx);
            match err {
                Error::Parse { column, message, .. } => Error::Parse {
                    line,
                    column: col,
                    message: format!("entry {}: coefficient {:?}, offset {column}: {message}", idx + 1, e.coeff),
                },
                other => other,
            }
        })?;
        let idx1 = [e.from[0], e.from[1], e.to[0], e.to[1]];
        if idx1.iter().any(|&x| x == 0 || x > n) {
            return Err(Error::DimensionMismatch(format!(
                "entry {}: indices {:?} -> {:?} outside 1..{n}",
                idx + 1,
                e.from,
                e.to
            )));
        }
        entries.push((e.from[0] - 1, e.from[1] - 1, e.to[0] - 1, e.to[1] - 1, c));
    }
    BraidedSpace::from_entries("spec", n, entries)
}

pub fn load_spec_file(path: &Path) -> Result<BraidedSpace> {
    let text = std::fs::read_to_string(path)?;
    Ok(load_spec(&text)?.with_name(path.display().to_string()))
}

/// Serializes a braiding as a spec document.
pub fn emit_spec(space: &BraidedSpace) -> String {
    let n = space.dim;
    let entries = space
        .sigma
        .iter()
        .enumerate()
        .flat_map(|(s, col)| {
            col.iter().map(move |(t, c)| SpecEntry {
                from: [s / n + 1, s % n + 1],
                to: [t / n + 1, t % n + 1],
                coeff: c.to_string(),
            })
        })
        .collect();
    serde_json::to_string_pretty(&SpecFile { dimension: n, entries }).expect("serializable")
}

/// Resolves `jimbo-a:N`, `type-c`, `cartan:<type or file>` or a spec-file path.
pub fn resolve(name: &str) -> Result<BraidedSpace> {
    if let Some(n) = name.strip_prefix("jimbo-a:") {
        let n: usize = n.parse().map_err(|_| Error::UnknownBraiding(name.into()))?;
        if n == 0 {
            return Err(Error::UnknownBraiding(name.into()));
        }
        return Ok(jimbo_a(n));
    }
    if name == "type-c" {
        return Ok(type_c_example());
    }
    if let Some(rest) = name.strip_prefix("cartan:") {
        let data = if Path::new(rest).is_file() {
            CartanData::from_json(&std::fs::read_to_string(rest)?)?
        } else {
            CartanData::named(rest)?
        };
        return Ok(diagonal_cartan(&data)?.with_name(name));
    }
    let p = Path::new(name);
    if p.is_file() {
        return load_spec_file(p);
    }
    Err(Error::UnknownBraiding(name.into()))
}

/// Names accepted by [`resolve`] without a file.
pub fn builtin_names() -> BTreeMap<&'static str, &'static str> {
    BTreeMap::from([
        ("jimbo-a:N", "Jimbo's braiding of type A_{N-1} on an N-dimensional space"),
        ("type-c", "four-dimensional braiding of type C"),
        ("cartan:A<n>|B<n>|C<n>|FILE", "diagonal braiding -q^{d_i a_ij + 1} flip from Cartan data"),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        parse_coeff(s).unwrap()
    }

    #[test]
    fn jimbo_entries() {
        let s = jimbo_a(2);
        assert_eq!(s.column(0, 1), &[(2, RatFunc::one())]);
        assert_eq!(s.coeff(1, 0, 0, 1), RatFunc::one());
        assert_eq!(s.coeff(1, 0, 1, 0), rf("q - q^-1"));
        let one = jimbo_a(1);
        assert_eq!(one.column(0, 0), &[(0, RatFunc::q())]);
    }

    #[test]
    fn builtins_verify() {
        let all = Flags { braid_ok: true, invertible: true, hecke: true };
        for n in 1..=4 {
            assert_eq!(jimbo_a(n).flags(), all, "jimbo_a({n})");
        }
        let c = type_c_example();
        assert_eq!(c.coeff(3, 0, 0, 3), RatFunc::q_pow(-1));
        assert_eq!(c.coeff(2, 1, 0, 3), rf("q^-2 - 1"));
        let f = c.flags();
        assert!(f.braid_ok && f.invertible);
    }

    // Krylov minimal polynomial of σ at a rational point, by dense elimination.
    fn minimal_poly_degree(m: &Matrix) -> usize {
        let n = m.rows();
        let mut powers: Vec<Vec<RatFunc>> = Vec::new();
        let mut p = Matrix::identity(n);
        loop {
            let flat: Vec<RatFunc> = (0..n).flat_map(|i| p.row(i).to_vec()).collect();
            powers.push(flat);
            if Matrix::from_rows(powers.clone()).rank() < powers.len() {
                return powers.len() - 1;
            }
            p = p.mul(m);
        }
    }

    #[test]
    fn hecke_flag_matches_minimal_polynomial() {
        let q0 = crate::scalar::rational(2, 1);
        let spaces = [
            jimbo_a(3),
            type_c_example(),
            diagonal_cartan(&CartanData::named("A2").unwrap()).unwrap(),
            diagonal_cartan(&CartanData::named("B2").unwrap()).unwrap(),
        ];
        for s in spaces {
            let m = s.specialize(&q0).unwrap().matrix();
            let deg = minimal_poly_degree(&m);
            // Hecke iff the minimal polynomial divides (x - q)(x + 1/q)
            let hecke_poly = {
                let qv = RatFunc::from_rational(q0.clone());
                let a = m.add(&Matrix::identity(m.rows()).scale(&-&qv));
                let b = m.add(&Matrix::identity(m.rows()).scale(&qv.inv().unwrap()));
                a.mul(&b).is_zero()
            };
            assert!(deg >= 1);
            assert_eq!(s.flags().hecke, hecke_poly && deg <= 2, "{}", s.name());
        }
    }

    #[test]
    fn type_c_third_eigenvalue() {
        // (σ - q)(σ + q^-1)(σ + q^-5) = 0 while the quadratic factor alone does not vanish
        let m = type_c_example().matrix();
        let id = Matrix::identity(16);
        let f = |c: RatFunc| m.add(&id.scale(&c));
        let quad = f(-RatFunc::q()).mul(&f(RatFunc::q_pow(-1)));
        assert!(!quad.is_zero());
        assert!(quad.mul(&f(RatFunc::q_pow(-5))).is_zero());
    }

    #[test]
    fn zero_map_is_singular_braid() {
        let z = BraidedSpace::from_entries("zero", 2, Vec::new()).unwrap();
        let f = z.flags();
        assert!(f.braid_ok && !f.invertible && !f.hecke);
    }

    #[test]
    fn cartan_validation_and_entries() {
        let a2 = CartanData::named("A2").unwrap();
        let s = diagonal_cartan(&a2).unwrap();
        assert_eq!(s.coeff(0, 0, 0, 0), -RatFunc::q_pow(3));
        assert_eq!(s.coeff(0, 1, 1, 0), -RatFunc::one());
        assert!(s.flags().braid_ok && s.flags().invertible && !s.flags().hecke);
        let b2 = CartanData::named("B2").unwrap();
        assert_eq!(b2.a, vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(b2.d, vec![2, 1]);
        assert!(CartanData::new(vec![vec![2, 1], vec![1, 2]], vec![1, 1]).is_err());
        assert!(CartanData::new(vec![vec![2, -1], vec![-2, 2]], vec![1, 1]).is_err());
        assert!(CartanData::new(vec![vec![1]], vec![1]).is_err());
    }

    #[test]
    fn spec_round_trip() {
        for s in [jimbo_a(1), jimbo_a(3), type_c_example(), diagonal_cartan(&CartanData::named("B2").unwrap()).unwrap()]
        {
            let back = load_spec(&emit_spec(&s)).unwrap();
            assert_eq!(back, s);
        }
    }

    #[test]
    fn spec_grammar_and_gaps() {
        let text = r#"{"dimension": 1, "entries": [{"from": [1,1], "to": [1,1], "coeff": "q^-1 + (1 - q^-2)"}]}"#;
        let s = load_spec(text).unwrap();
        assert_eq!(s.coeff(0, 0, 0, 0), rf("1 + q^-1 - q^-2"));
        let gap = r#"{"dimension": 2, "entries": [{"from": [1,1], "to": [1,1], "coeff": "q"}]}"#;
        assert!(!load_spec(gap).unwrap().flags().invertible);
        let summed = r#"{"dimension": 1, "entries": [
            {"from": [1,1], "to": [1,1], "coeff": "q"},
            {"from": [1,1], "to": [1,1], "coeff": "q"}]}"#;
        assert_eq!(load_spec(summed).unwrap().coeff(0, 0, 0, 0), rf("2*q"));
    }

    #[test]
    fn spec_errors() {
        assert!(matches!(load_spec("{\"dimension\": 2,"), Err(Error::Parse { .. })));
        let bad = "{\"dimension\": 1, \"entries\": [\n  {\"from\": [1,1], \"to\": [1,1], \"coeff\": \"q +\"}]}";
        match load_spec(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        let out = r#"{"dimension": 1, "entries": [{"from": [1,2], "to": [1,1], "coeff": "1"}]}"#;
        assert!(matches!(load_spec(out), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn specialized_jimbo_stays_hecke() {
        let s = jimbo_a(2).specialize(&crate::scalar::rational(3, 2)).unwrap();
        assert!(s.flags().hecke);
        assert_eq!(s.coeff(1, 0, 1, 0), RatFunc::from_rational(crate::scalar::rational(5, 6)));
    }
}
