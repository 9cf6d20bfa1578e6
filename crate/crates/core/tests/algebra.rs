use num_rational::BigRational;
use polycount::qsym::Poly;
use polycount::zseries::{mobius, Series};
use polycount::{QPoly, ZSeries};
use proptest::prelude::*;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-6i64..7, 0..6).prop_map(|c| QPoly::from_ints(&c))
}

/// A series with constant term 1, as `log1` requires.
fn unit_series(trunc: usize) -> impl Strategy<Value = ZSeries> {
    prop::collection::vec(poly(), trunc).prop_map(move |mut c| {
        c.insert(0, QPoly::one());
        Series::from_coeffs(trunc, c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &QPoly::one(), a.clone());
    }

    #[test]
    fn eval_is_a_homomorphism(a in poly(), b in poly(), x in -5i64..6) {
        let x = rat(x);
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn subst_pow_is_multiplicative(a in poly(), b in poly(), k in 1usize..4, x in -3i64..4) {
        prop_assert_eq!((&a * &b).subst_pow(k), &a.subst_pow(k) * &b.subst_pow(k));
        let x = rat(x);
        prop_assert_eq!(a.subst_pow(k).eval(&x), a.eval(&num_traits::pow(x, k)));
    }

    #[test]
    fn degree_of_product(a in poly(), b in poly()) {
        let p = &a * &b;
        match (a.degree(), b.degree()) {
            (Some(da), Some(db)) => prop_assert_eq!(p.degree(), Some(da + db)),
            _ => prop_assert!(p.is_zero()),
        }
    }

    #[test]
    fn display_round_trips(a in poly()) {
        let back: QPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn log_turns_products_into_sums(f in unit_series(4), g in unit_series(4)) {
        let lhs = f.mul(&g).unwrap().log1().unwrap();
        let rhs = f.log1().unwrap().add(&g.log1().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn zpow_substitution_commutes_with_mul(f in unit_series(6), g in unit_series(6), k in 1usize..4) {
        let lhs = f.mul(&g).unwrap().subst_zpow(k);
        let rhs = f.subst_zpow(k).mul(&g.subst_zpow(k)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn log_of_geometric_series() {
    // log 1/(1-z) = sum z^n / n
    let s = Series::from_coeffs(6, vec![QPoly::one(); 7]);
    let l = s.log1().unwrap();
    for n in 1..=6 {
        assert_eq!(l.coeff(n), QPoly::constant(BigRational::new(1.into(), (n as i64).into())));
    }
    assert!(l.coeff(0).is_zero());
}

#[test]
fn mobius_sums_vanish() {
    for n in 2u64..200 {
        let s: i64 = (1..=n).filter(|d| n % d == 0).map(|d| i64::from(mobius(d))).sum();
        assert_eq!(s, 0, "n = {n}");
    }
    assert_eq!(mobius(1), 1);
}

#[test]
fn float_scalars_share_the_code_path() {
    let p = Poly::<f64>::from_ints(&[1, 0, 2]);
    assert_eq!(p.eval(&3.0), 19.0);
    assert_eq!(p.subst_pow(2).degree(), Some(4));
    let exact = QPoly::from_ints(&[1, 0, 2]);
    assert_eq!(exact.eval(&rat(3)), rat(19));
}
