use num_bigint::BigInt;
use proptest::prelude::*;
use sipverify::series::{
    div_poch, gaussian_coefficients, mul_poch, pochhammer, q_binomial, triple_product, Monomial, MultiCoeff,
    PochLength, PochSpec, QSeries, VarSet,
};

const N: i64 = 12;

fn vars() -> VarSet {
    VarSet::new(["x"]).unwrap()
}

fn xm(c: i64, q: i64, e: i32) -> Monomial {
    Monomial::new(c, q, vars().exps(&[("x", e)]).unwrap())
}

fn series_from(terms: &[(i64, i32, i64)], order: i64) -> QSeries {
    let v = vars();
    QSeries::from_coeffs(
        &v,
        order,
        terms.iter().map(|&(k, e, c)| (k, MultiCoeff::term(v.exps(&[("x", e)]).unwrap(), c))),
    )
}

fn arb_series() -> impl Strategy<Value = QSeries> {
    prop::collection::vec((0i64..=N, -2i32..=2, -4i64..=4), 0..10).prop_map(|t| series_from(&t, N))
}

/// `1 + q * (anything)`, which is invertible.
fn arb_unit_series() -> impl Strategy<Value = QSeries> {
    prop::collection::vec((1i64..=N, -2i32..=2, -4i64..=4), 0..8)
        .prop_map(|t| series_from(&t, N).add(&QSeries::one(&vars(), N)).unwrap())
}

fn same(a: &QSeries, b: &QSeries) -> bool {
    a.equal(b).unwrap().is_match()
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

proptest! {
    #[test]
    fn ring_laws(a in arb_series(), b in arb_series(), c in arb_series()) {
        prop_assert!(same(&a.add(&b).unwrap(), &b.add(&a).unwrap()));
        prop_assert!(same(&a.mul(&b).unwrap(), &b.mul(&a).unwrap()));
        prop_assert!(same(&a.mul(&b).unwrap().mul(&c).unwrap(), &a.mul(&b.mul(&c).unwrap()).unwrap()));
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert!(same(&lhs, &rhs));
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn inverse_is_two_sided(u in arb_unit_series()) {
        let inv = u.inverse().unwrap();
        prop_assert!(same(&u.mul(&inv).unwrap(), &QSeries::one(&vars(), N)));
        prop_assert!(same(&inv.inverse().unwrap(), &u));
    }

    #[test]
    fn poch_mul_div_roundtrip(s in arb_series(), c in prop::sample::select(vec![-1i64, 1]), a in 1i64..4, d in 1i64..4, len in 0u32..6) {
        for length in [PochLength::Finite(len), PochLength::Infinite] {
            let spec = PochSpec::new(xm(c, a, 1), Monomial::q_power(d), length);
            let back = div_poch(&mul_poch(&s, &spec).unwrap(), &spec).unwrap();
            prop_assert!(same(&back, &s));
        }
    }

    #[test]
    fn finite_poch_is_a_product(c in -2i64..=2, a in 0i64..3, d in 1i64..3, len in 0u32..6) {
        let spec = PochSpec::new(xm(c, a, 1), Monomial::q_power(d), PochLength::Finite(len));
        let mut expect = QSeries::one(&vars(), N);
        for i in 0..len as i64 {
            expect = expect.mul_poly(&[Monomial::one(), xm(-c, a + i * d, 1)]);
        }
        prop_assert!(same(&pochhammer(&spec, &vars(), N).unwrap(), &expect));
    }

    #[test]
    fn gaussian_symmetry_and_pascal(n in 0i64..14, m in 0i64..14) {
        let v = VarSet::empty();
        let q = Monomial::q_power(1);
        prop_assert_eq!(gaussian_coefficients(n, m), gaussian_coefficients(n, n - m));
        if m <= n {
            let total: BigInt = gaussian_coefficients(n, m).into_iter().sum();
            prop_assert_eq!(total, binomial(n as u64, m as u64));
        }
        if n >= 1 && m >= 1 {
            let rhs = q_binomial(&v, n - 1, m - 1, &q).add(&q_binomial(&v, n - 1, m, &q).shift_q(m)).unwrap();
            prop_assert_eq!(q_binomial(&v, n, m, &q), rhs);
        }
    }

    #[test]
    fn evaluation_at_one_is_multiplicative(a in arb_series(), b in arb_series()) {
        let at_one = |s: &QSeries| s.substitute("x", &Monomial::one()).unwrap().with_vars(&VarSet::empty()).unwrap();
        prop_assert!(same(&at_one(&a.mul(&b).unwrap()), &at_one(&a).mul(&at_one(&b)).unwrap()));
    }

    #[test]
    fn q_negation_is_an_involution(a in arb_series(), b in arb_series()) {
        let neg = |s: &QSeries| s.substitute_q(true, 1).unwrap();
        prop_assert!(same(&neg(&neg(&a)), &a));
        prop_assert!(same(&neg(&a.mul(&b).unwrap()), &neg(&a).mul(&neg(&b)).unwrap()));
    }

    #[test]
    fn truncation_commutes_with_arithmetic(a in arb_series(), b in arb_series(), k in 0i64..=N) {
        prop_assert_eq!(a.mul(&b).unwrap().truncate(k), a.truncate(k).mul(&b.truncate(k)).unwrap().truncate(k));
    }
}

#[test]
fn triple_product_holds_to_order_80() {
    let (lhs, rhs) = triple_product(80).unwrap();
    assert!(lhs.equal(&rhs).unwrap().is_match());
}

#[test]
fn euler_pentagonal() {
    let v = VarSet::empty();
    let p = pochhammer(&PochSpec::q(1, 1, 1, PochLength::Infinite), &v, 40).unwrap();
    let mut terms = Vec::new();
    for k in -6i64..=6 {
        let e = k * (3 * k - 1) / 2;
        if e <= 40 {
            terms.push(Monomial::new(if k % 2 == 0 { 1 } else { -1 }, e, Default::default()));
        }
    }
    assert!(p.equal(&QSeries::polynomial(&v, &terms)).unwrap().is_match());
}
