use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use qwedge::algebra::{AlgElem, Algebra, Key, Presentation};
use qwedge::braiding::jimbo_a;
use qwedge::determinants::MatrixMap;
use qwedge::permutations::Perm;
use qwedge::scalar::{parse_coeff, rational, RatFunc};

fn frt2() -> &'static Arc<Algebra> {
    static A: OnceLock<Arc<Algebra>> = OnceLock::new();
    A.get_or_init(|| Algebra::single(Arc::new(Presentation::frt(&jimbo_a(2)))))
}

fn laurent() -> impl Strategy<Value = RatFunc> {
    prop::collection::vec((-3i64..=3, -2i64..=2), 0..4)
        .prop_map(|ts| ts.into_iter().map(|(c, e)| RatFunc::monomial(c, e)).sum())
}

/// Laurent polynomials, sometimes divided by a factor with no rational roots.
fn scalar() -> impl Strategy<Value = RatFunc> {
    (laurent(), 0usize..3).prop_map(|(x, d)| match d {
        0 => x,
        1 => &x / &parse_coeff("q^2 + 1").unwrap(),
        _ => &x / &parse_coeff("q^2 + q + 1").unwrap(),
    })
}

/// Random element of degree at most 2 in the FRT algebra of jimbo-a:2.
fn element() -> impl Strategy<Value = AlgElem> {
    prop::collection::vec((scalar(), prop::collection::vec(0u8..4, 0..=2)), 0..4).prop_map(|terms| {
        let alg = frt2();
        let mut raw: BTreeMap<Key, RatFunc> = BTreeMap::new();
        for (c, w) in terms {
            let key: Key = std::iter::once(w.into_iter().collect()).collect();
            let e = raw.entry(key).or_insert_with(RatFunc::zero);
            *e += &c;
        }
        alg.normalize(raw).unwrap()
    })
}

fn linear() -> impl Strategy<Value = AlgElem> {
    prop::collection::vec(scalar(), 4).prop_map(|cs| {
        let alg = frt2();
        cs.iter().enumerate().fold(alg.zero(), |acc, (g, c)| acc.add(&alg.generator(0, g as u8).scale(c)))
    })
}

fn matrix() -> impl Strategy<Value = MatrixMap> {
    prop::collection::vec(linear(), 4).prop_map(|es| {
        let entries = vec![vec![es[0].clone(), es[1].clone()], vec![es[2].clone(), es[3].clone()]];
        MatrixMap::new(Arc::new(jimbo_a(2)), frt2().clone(), entries).unwrap()
    })
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_one_line(&v).unwrap())
}

/// `(ε ⊗ id)` or `(id ⊗ ε)` applied to an element of the tensor square.
fn counit_leg(t: &AlgElem, keep: usize) -> AlgElem {
    let alg = frt2();
    let data = alg.legs()[0].bialgebra().unwrap();
    let mut raw: BTreeMap<Key, RatFunc> = BTreeMap::new();
    for (k, c) in t.terms() {
        let mut v = c.clone();
        for &g in &k[1 - keep] {
            v *= &data.counit[g as usize];
        }
        let key: Key = std::iter::once(k[keep].clone()).collect();
        let e = raw.entry(key).or_insert_with(RatFunc::zero);
        *e += &v;
    }
    alg.normalize(raw).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&(&a - &b) + &b) == a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in scalar(), b in scalar()) {
        for q0 in [rational(2, 1), rational(3, 2), rational(-1, 3)] {
            let (x, y) = (a.evaluate_at(&q0).unwrap(), b.evaluate_at(&q0).unwrap());
            prop_assert_eq!((&a * &b).evaluate_at(&q0).unwrap(), &x * &y);
            prop_assert_eq!((&a + &b).evaluate_at(&q0).unwrap(), &x + &y);
            prop_assert_eq!(a.specialize(&q0).unwrap().as_constant(), Some(x));
        }
    }

    #[test]
    fn display_parses_back(a in scalar()) {
        prop_assert_eq!(parse_coeff(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn permutation_lengths(w in perm(6), i in 1usize..6) {
        prop_assert!(w.compose(&w.inverse()).is_identity());
        prop_assert_eq!(w.length(), w.inverse().length());
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(Perm::from_word(6, &word), w.clone());
        let ws = w.compose(&Perm::simple(6, i));
        prop_assert_eq!(ws.length().abs_diff(w.length()), 1);
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(x in element(), y in element(), c in scalar()) {
        let alg = frt2();
        prop_assert_eq!(alg.normalize(x.terms().clone()).unwrap(), x.clone());
        let mut raw = x.terms().clone();
        for (k, v) in y.terms() {
            let e = raw.entry(k.clone()).or_insert_with(RatFunc::zero);
            *e += &(v * &c);
        }
        prop_assert_eq!(alg.normalize(raw).unwrap(), x.add(&y.scale(&c)));
    }

    #[test]
    fn unit_and_associativity(x in linear(), y in linear(), z in linear()) {
        let one = frt2().one();
        prop_assert_eq!(one.mul(&x).unwrap(), x.clone());
        prop_assert_eq!(x.mul(&one).unwrap(), x.clone());
        let left = x.mul(&y).unwrap().mul(&z).unwrap();
        let right = x.mul(&y.mul(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn coproduct_is_multiplicative(x in linear(), y in linear()) {
        let lhs = x.mul(&y).unwrap().coproduct().unwrap();
        let rhs = x.coproduct().unwrap().mul(&y.coproduct().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(x.mul(&y).unwrap().counit().unwrap(), &x.counit().unwrap() * &y.counit().unwrap());
    }

    #[test]
    fn counit_laws(x in element()) {
        let d = x.coproduct().unwrap();
        prop_assert_eq!(counit_leg(&d, 0), x.clone());
        prop_assert_eq!(counit_leg(&d, 1), x);
    }

    #[test]
    fn matrix_composition_is_associative(f in matrix(), g in matrix(), h in matrix()) {
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left.entries(), right.entries());
        let id = MatrixMap::identity(Arc::new(jimbo_a(2)), frt2().clone());
        let idf = id.compose(&f).unwrap();
        prop_assert_eq!(idf.entries(), f.entries());
    }
}
