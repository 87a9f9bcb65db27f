//! Graded algebras presented by homogeneous quadratic relations.
//!
//! Normal forms are computed degree by degree: the span of all `u·r·v` with
//! `r` a relation is kept as an [`Echelon`] keyed by the monomial index, with
//! the lexicographically largest word of each row as its pivot. The normal
//! form of an element is its remainder, supported on non-pivot monomials.
//!
//! An [`Algebra`] is a tensor product of presentations ("legs") whose
//! generators commute across legs. A single leg is the usual quotient; two
//! copies of the same presentation host coproducts.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use smallvec::SmallVec;

use crate::braiding::BraidedSpace;
use crate::error::{Error, Result};
use crate::linalg::{add_entry, Echelon, Module, SparseVec};
use crate::scalar::{BigRational, RatFunc};

/// A word in the generators (generator indices).
pub type Word = SmallVec<[u8; 8]>;

/// Homogeneous noncommutative polynomial.
pub type Poly = BTreeMap<Word, RatFunc>;

pub const DEFAULT_MONOMIAL_CEILING: u128 = 20_000;

#[derive(Clone, Debug)]
pub struct BialgebraData {
    /// `Δ(x_g) = Σ c x_a ⊗ x_b`
    pub coproduct: Vec<Vec<(RatFunc, u8, u8)>>,
    pub counit: Vec<RatFunc>,
}

pub struct Presentation {
    names: Vec<String>,
    relations: Vec<Poly>,
    commutative: bool,
    bialgebra: Option<BialgebraData>,
    degree_bound: usize,
    ceiling: u128,
    echelons: Mutex<HashMap<usize, Arc<OnceLock<Arc<Echelon<u64>>>>>>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("generators", &self.names)
            .field("relations", &self.relations.len())
            .field("commutative", &self.commutative)
            .finish()
    }
}

fn check_quadratic(relations: &[Poly]) {
    for r in relations {
        assert!(r.keys().all(|w| w.len() == 2), "relations must be homogeneous of degree 2");
    }
}

impl Presentation {
    pub fn new(names: Vec<String>, relations: Vec<Poly>) -> Self {
        assert!(names.len() <= u8::MAX as usize, "too many generators");
        check_quadratic(&relations);
        let relations = relations.into_iter().filter(|r| !r.is_empty()).collect();
        Self {
            names,
            relations,
            commutative: false,
            bialgebra: None,
            degree_bound: 8,
            ceiling: DEFAULT_MONOMIAL_CEILING,
            echelons: Mutex::default(),
        }
    }

    /// The ground field, no generators.
    pub fn ground() -> Self {
        Self::new(Vec::new(), Vec::new())
    }

    /// Free commutative algebra on `n` generators `x1 … xn`.
    pub fn commutative_poly(n: usize) -> Self {
        let names = (1..=n).map(|i| format!("x{i}")).collect();
        let mut rels = Vec::new();
        for i in 0..n as u8 {
            for j in i + 1..n as u8 {
                rels.push(binomial_relation(&[i, j], &[j, i]));
            }
        }
        let mut p = Self::new(names, rels);
        p.commutative = true;
        p
    }

    /// The FRT bialgebra of a braiding: generators `T^i_j` named `T{i}_{j}`
    /// and ordered column by column, with the RTT relations.
    pub fn frt(space: &BraidedSpace) -> Self {
        let n = space.dim();
        let g = |i: usize, j: usize| frt_index(n, i, j);
        // rev[(m, n)] lists ((k, l), σ_{kl}^{mn})
        let mut rev: HashMap<usize, Vec<(usize, &RatFunc)>> = HashMap::new();
        for k in 0..n {
            for l in 0..n {
                for (t, c) in space.column(k, l) {
                    rev.entry(*t).or_default().push((k * n + l, c));
                }
            }
        }
        let mut rels = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for m in 0..n {
                    for nn in 0..n {
                        let mut r = Poly::new();
                        for (t, c) in space.column(i, j) {
                            let (k, l) = (t / n, t % n);
                            add_entry(&mut r, Word::from_slice(&[g(m, k), g(nn, l)]), c.clone());
                        }
                        for (s, c) in rev.get(&(m * n + nn)).into_iter().flatten() {
                            let (k, l) = (s / n, s % n);
                            add_entry(&mut r, Word::from_slice(&[g(k, i), g(l, j)]), -*c);
                        }
                        rels.push(r);
                    }
                }
            }
        }
        let mut names = vec![String::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                names[g(i, j) as usize] = format!("T{}_{}", i + 1, j + 1);
            }
        }
        let mut coproduct = vec![Vec::new(); n * n];
        let mut counit = vec![RatFunc::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                coproduct[g(i, j) as usize] = (0..n).map(|k| (RatFunc::one(), g(i, k), g(k, j))).collect();
                if i == j {
                    counit[g(i, j) as usize] = RatFunc::one();
                }
            }
        }
        let mut p = Self::new(names, rels);
        p.bialgebra = Some(BialgebraData { coproduct, counit });
        p.degree_bound = 2 * n;
        p
    }

    /// `A ⊗ B` as one presentation: generators of `b` get a trailing `'` and
    /// commute with those of `a`.
    pub fn tensor_product(a: &Presentation, b: &Presentation) -> Self {
        let off = a.num_generators() as u8;
        let mut names = a.names.clone();
        names.extend(b.names.iter().map(|s| format!("{s}'")));
        let mut rels = a.relations.clone();
        for r in &b.relations {
            rels.push(r.iter().map(|(w, c)| (w.iter().map(|x| x + off).collect(), c.clone())).collect());
        }
        for x in 0..off {
            for y in 0..b.num_generators() as u8 {
                rels.push(binomial_relation(&[x, y + off], &[y + off, x]));
            }
        }
        let mut p = Self::new(names, rels);
        p.degree_bound = a.degree_bound + b.degree_bound;
        p.ceiling = a.ceiling.max(b.ceiling);
        p
    }

    pub fn with_degree_bound(mut self, bound: usize) -> Self {
        self.degree_bound = bound;
        self
    }

    pub fn with_ceiling(mut self, ceiling: u128) -> Self {
        self.ceiling = ceiling;
        self
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generator_index(&self, name: &str) -> Option<u8> {
        self.names.iter().position(|n| n == name).map(|p| p as u8)
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn bialgebra(&self) -> Option<&BialgebraData> {
        self.bialgebra.as_ref()
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn ceiling(&self) -> u128 {
        self.ceiling
    }

    fn key(&self, w: &[u8]) -> u64 {
        let g = self.num_generators() as u64;
        w.iter().fold(0u64, |acc, &x| acc * g + x as u64)
    }

    fn word(&self, key: u64, d: usize) -> Word {
        let g = self.num_generators() as u64;
        let mut w: Word = SmallVec::from_elem(0, d);
        let mut k = key;
        for slot in w.iter_mut().rev() {
            *slot = (k % g) as u8;
            k /= g;
        }
        w
    }

    fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.degree_bound {
            return Err(Error::DegreeBound { degree: d, bound: self.degree_bound });
        }
        let monomials = (self.num_generators() as u128).saturating_pow(d as u32);
        if d >= 2 && !self.relations.is_empty() && !self.commutative && monomials > self.ceiling {
            return Err(Error::ResourceCeiling { degree: d, monomials, ceiling: self.ceiling });
        }
        Ok(())
    }

    /// Echelonized span of the degree-`d` part of the ideal.
    pub fn echelon(&self, d: usize) -> Result<Arc<Echelon<u64>>> {
        self.check_degree(d)?;
        let cell = self.echelons.lock().unwrap().entry(d).or_default().clone();
        if let Some(e) = cell.get() {
            return Ok(e.clone());
        }
        let e = if d < 2 {
            Arc::new(Echelon::new())
        } else if d == 2 {
            let mut e = Echelon::new();
            for r in &self.relations {
                e.insert(r.iter().map(|(w, c)| (self.key(w), c.clone())).collect());
            }
            Arc::new(e)
        } else {
            let base = self.echelon(2)?;
            let g = self.num_generators() as u64;
            let mut e = Echelon::new();
            for a in 0..=d - 2 {
                let left = g.pow(a as u32);
                let right = g.pow((d - 2 - a) as u32);
                for (p, tail) in base.rows() {
                    for u in 0..left {
                        for v in 0..right {
                            let wrap = |k: u64| (u * g * g + k) * right + v;
                            let mut row: SparseVec<u64> = tail.iter().map(|(k, c)| (wrap(*k), c.clone())).collect();
                            row.insert(wrap(*p), RatFunc::one());
                            e.insert(row);
                        }
                    }
                }
            }
            Arc::new(e)
        };
        Ok(cell.get_or_init(|| e).clone())
    }

    /// `dim A_d`.
    pub fn graded_dim(&self, d: usize) -> Result<u128> {
        if self.commutative {
            // multisets of size d
            let n = self.num_generators() as u128;
            let mut c: u128 = 1;
            for i in 0..d as u128 {
                c = c * (n + i) / (i + 1);
            }
            return Ok(c);
        }
        let total = (self.num_generators() as u128).pow(d as u32);
        Ok(total - self.echelon(d)?.rank() as u128)
    }

    /// Normal form of a homogeneous or inhomogeneous polynomial.
    pub fn normal_form(&self, p: &Poly) -> Result<Poly> {
        let mut by_degree: BTreeMap<usize, Vec<(&Word, &RatFunc)>> = BTreeMap::new();
        for (w, c) in p {
            by_degree.entry(w.len()).or_default().push((w, c));
        }
        let mut out = Poly::new();
        for (d, terms) in by_degree {
            if self.commutative {
                self.check_degree(d)?;
                for (w, c) in terms {
                    let mut s = w.clone();
                    s.sort_unstable();
                    add_entry(&mut out, s, c.clone());
                }
                continue;
            }
            if d < 2 || self.relations.is_empty() {
                self.check_degree(d)?;
                for (w, c) in terms {
                    add_entry(&mut out, w.clone(), c.clone());
                }
                continue;
            }
            let e = self.echelon(d)?;
            let v: SparseVec<u64> = terms.iter().map(|(w, c)| (self.key(w), (*c).clone())).collect();
            for (k, c) in e.reduce(v) {
                out.insert(self.word(k, d), c);
            }
        }
        Ok(out)
    }
}

fn binomial_relation(a: &[u8], b: &[u8]) -> Poly {
    let mut r = Poly::new();
    add_entry(&mut r, Word::from_slice(a), RatFunc::one());
    add_entry(&mut r, Word::from_slice(b), -RatFunc::one());
    r
}

/// Generator index of `T^i_j` (0-based) in an FRT presentation on `n` dimensions.
pub fn frt_index(n: usize, i: usize, j: usize) -> u8 {
    (j * n + i) as u8
}

/// Basis monomial of an [`Algebra`]: one word per leg.
pub type Key = SmallVec<[Word; 2]>;

/// Unreduced linear combination of keys.
pub type RawElem = BTreeMap<Key, RatFunc>;

/// Leg-wise concatenation product of unreduced combinations.
pub fn concat(a: &RawElem, b: &RawElem) -> RawElem {
    let mut out = BTreeMap::new();
    for (u, x) in a {
        for (v, y) in b {
            let key: Key = u
                .iter()
                .zip(v)
                .map(|(p, r)| {
                    let mut w = p.clone();
                    w.extend_from_slice(r);
                    w
                })
                .collect();
            add_entry(&mut out, key, x * y);
        }
    }
    out
}

/// `acc += c * x` on unreduced combinations.
pub fn accumulate(acc: &mut RawElem, c: &RatFunc, x: &RawElem) {
    if c.is_zero() {
        return;
    }
    for (k, v) in x {
        add_entry(acc, k.clone(), c * v);
    }
}

/// Tensor product of presentations with commuting legs.
#[derive(Debug)]
pub struct Algebra {
    legs: Vec<Arc<Presentation>>,
}

impl Algebra {
    pub fn new(legs: Vec<Arc<Presentation>>) -> Arc<Self> {
        Arc::new(Self { legs })
    }

    pub fn single(p: Arc<Presentation>) -> Arc<Self> {
        Self::new(vec![p])
    }

    pub fn legs(&self) -> &[Arc<Presentation>] {
        &self.legs
    }

    /// `A ⊗ A` for coproduct targets.
    pub fn tensor_square(&self) -> Arc<Self> {
        let mut legs = self.legs.clone();
        legs.extend(self.legs.iter().cloned());
        Self::new(legs)
    }

    fn same(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b)
            || (a.legs.len() == b.legs.len() && a.legs.iter().zip(&b.legs).all(|(x, y)| Arc::ptr_eq(x, y)))
    }

    fn empty_key(&self) -> Key {
        self.legs.iter().map(|_| Word::new()).collect()
    }

    pub fn zero(self: &Arc<Self>) -> AlgElem {
        AlgElem { alg: self.clone(), terms: BTreeMap::new() }
    }

    pub fn scalar(self: &Arc<Self>, c: RatFunc) -> AlgElem {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(self.empty_key(), c);
        }
        AlgElem { alg: self.clone(), terms }
    }

    pub fn one(self: &Arc<Self>) -> AlgElem {
        self.scalar(RatFunc::one())
    }

    /// The generator `g` of leg `leg`.
    pub fn generator(self: &Arc<Self>, leg: usize, g: u8) -> AlgElem {
        assert!((g as usize) < self.legs[leg].num_generators(), "generator out of range");
        let mut key = self.empty_key();
        key[leg].push(g);
        AlgElem { alg: self.clone(), terms: BTreeMap::from([(key, RatFunc::one())]) }
    }

    pub fn generator_named(self: &Arc<Self>, leg: usize, name: &str) -> Option<AlgElem> {
        self.legs[leg].generator_index(name).map(|g| self.generator(leg, g))
    }

    /// Normal form of an arbitrary linear combination of keys.
    pub fn normalize(self: &Arc<Self>, terms: BTreeMap<Key, RatFunc>) -> Result<AlgElem> {
        let mut cur = terms;
        for (l, p) in self.legs.iter().enumerate() {
            // group by the other legs, reduce this leg
            let mut groups: BTreeMap<Key, Poly> = BTreeMap::new();
            for (mut k, c) in cur {
                let w = std::mem::take(&mut k[l]);
                add_entry(groups.entry(k).or_default(), w, c);
            }
            let mut next = BTreeMap::new();
            for (k, poly) in groups {
                for (w, c) in p.normal_form(&poly)? {
                    let mut key = k.clone();
                    key[l] = w;
                    add_entry(&mut next, key, c);
                }
            }
            cur = next;
        }
        Ok(AlgElem { alg: self.clone(), terms: cur })
    }

    /// `dim A_d` of a single-leg algebra.
    pub fn graded_dim(&self, d: usize) -> Result<u128> {
        match self.legs.as_slice() {
            [p] => p.graded_dim(d),
            _ => Err(Error::DimensionMismatch("graded dimension of a multi-leg algebra".into())),
        }
    }
}

/// Element of an [`Algebra`], always in normal form.
#[derive(Clone)]
pub struct AlgElem {
    alg: Arc<Algebra>,
    terms: BTreeMap<Key, RatFunc>,
}

/// Elements of `A ⊗ A` are elements of the two-leg algebra.
pub type TensorElem = AlgElem;

impl AlgElem {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn terms(&self) -> &BTreeMap<Key, RatFunc> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Self) {
        assert!(Algebra::same(&self.alg, &other.alg), "elements of different algebras");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            add_entry(&mut terms, k.clone(), c.clone());
        }
        Self { alg: self.alg.clone(), terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-RatFunc::one()))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return self.alg.zero();
        }
        Self { alg: self.alg.clone(), terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect() }
    }

    /// Concatenation product before reduction.
    pub fn mul_raw(&self, other: &Self) -> RawElem {
        self.check(other);
        concat(&self.terms, &other.terms)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.alg.normalize(self.mul_raw(other))
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.check(other);
        self.terms == other.terms
    }

    /// Highest total word length among the terms.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|k| k.iter().map(|w| w.len()).sum()).max().unwrap_or(0)
    }

    /// `ε` applied leg-wise.
    pub fn counit(&self) -> Result<RatFunc> {
        let data: Vec<&BialgebraData> =
            self.alg.legs.iter().map(|p| p.bialgebra().ok_or(Error::NoBialgebra)).collect::<Result<_>>()?;
        let mut acc = RatFunc::zero();
        for (k, c) in &self.terms {
            let mut v = c.clone();
            for (w, d) in k.iter().zip(&data) {
                for &g in w {
                    v *= &d.counit[g as usize];
                }
            }
            acc += &v;
        }
        Ok(acc)
    }

    /// `Δ` extended multiplicatively, landing in [`Algebra::tensor_square`].
    pub fn coproduct(&self) -> Result<TensorElem> {
        let data: Vec<&BialgebraData> =
            self.alg.legs.iter().map(|p| p.bialgebra().ok_or(Error::NoBialgebra)).collect::<Result<_>>()?;
        let legs = self.alg.legs.len();
        let target = self.alg.tensor_square();
        let mut out: BTreeMap<Key, RatFunc> = BTreeMap::new();
        for (k, c) in &self.terms {
            // expand leg by leg
            let mut partial: Vec<(Key, RatFunc)> = vec![(target.empty_key(), c.clone())];
            for (l, w) in k.iter().enumerate() {
                for &g in w {
                    let img = &data[l].coproduct[g as usize];
                    let mut next = Vec::with_capacity(partial.len() * img.len());
                    for (key, x) in &partial {
                        for (y, a, b) in img {
                            let mut nk = key.clone();
                            nk[l].push(*a);
                            nk[l + legs].push(*b);
                            next.push((nk, x * y));
                        }
                    }
                    partial = next;
                }
            }
            for (key, x) in partial {
                add_entry(&mut out, key, x);
            }
        }
        target.normalize(out)
    }

    /// `Σ c_k x_k ⊗ y_k` for single-leg factors in `A ⊗ A`.
    pub fn tensor(&self, other: &Self) -> Result<TensorElem> {
        let target = self.alg.tensor_square();
        if !Algebra::same(&self.alg, &other.alg) {
            return Err(Error::DimensionMismatch("tensor of elements of different algebras".into()));
        }
        let mut out = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let key: Key = a.iter().chain(b.iter()).cloned().collect();
                add_entry(&mut out, key, x * y);
            }
        }
        Ok(AlgElem { alg: target, terms: out })
    }

    /// Every coefficient evaluated at `q0`, renormalized in `target`.
    pub fn specialize_into(&self, q0: &BigRational, target: &Arc<Algebra>) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            add_entry(&mut terms, k.clone(), c.specialize(q0)?);
        }
        target.normalize(terms)
    }

    /// Re-keys an element into an algebra with the same generator sets.
    pub fn transport(&self, target: &Arc<Algebra>) -> Result<Self> {
        target.normalize(self.terms.clone())
    }

    /// The element `Σ c ·  (key)` viewed in `target` with the given leg map.
    pub fn embed_legs(&self, target: &Arc<Algebra>, leg_map: &[usize]) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let mut key = target.empty_key();
            for (l, w) in k.iter().enumerate() {
                key[leg_map[l]].extend_from_slice(w);
            }
            add_entry(&mut terms, key, c.clone());
        }
        target.normalize(terms)
    }
}

impl PartialEq for AlgElem {
    fn eq(&self, other: &Self) -> bool {
        Algebra::same(&self.alg, &other.alg) && self.terms == other.terms
    }
}

impl fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Module for AlgElem {
    fn zero_like(&self) -> Self {
        self.alg.zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_scaled(&mut self, c: &RatFunc, x: &Self) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &x.terms {
            add_entry(&mut self.terms, k.clone(), c * v);
        }
    }
}

fn needs_parens(s: &str) -> bool {
    s.trim_start_matches('-').contains([' ', '/'])
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (key, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = key
                .iter()
                .zip(&self.alg.legs)
                .map(|(w, p)| {
                    if w.is_empty() {
                        "1".to_string()
                    } else {
                        w.iter().map(|&g| p.names[g as usize].as_str()).collect::<Vec<_>>().join(".")
                    }
                })
                .collect();
            let is_unit = key.iter().all(|w| w.is_empty());
            let mono = mono.join(" ⊗ ");
            let (neg, mag) =
                if c.is_monomial() && c.to_string().starts_with('-') { (true, -c) } else { (false, c.clone()) };
            let cs = mag.to_string();
            let body = if is_unit && self.alg.legs.len() == 1 {
                if n > 0 && needs_parens(&cs) {
                    format!("({cs})")
                } else {
                    cs
                }
            } else if mag.is_one() {
                mono
            } else if needs_parens(&cs) {
                format!("({cs}) * {mono}")
            } else {
                format!("{cs} * {mono}")
            };
            match (n, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}
