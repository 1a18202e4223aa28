use exactpoly::{Monomial, PolyVectorField, Polynomial, Rational, Vars};
use num::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn poly(nvars: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
    let vars = if nvars == 3 { Vars::xyz() } else { Vars::planar() };
    prop::collection::vec((prop::collection::vec(0..=max_deg, nvars), rational()), 0..5).prop_map(move |ts| {
        Polynomial::from_terms(
            &vars,
            ts.into_iter().filter_map(|(e, c)| (e.iter().sum::<u32>() <= max_deg).then(|| (Monomial::new(&e), c))),
        )
    })
}

fn field3(max_deg: u32) -> impl Strategy<Value = PolyVectorField> {
    prop::collection::vec(poly(3, max_deg), 3).prop_map(|c| PolyVectorField::new(&Vars::xyz(), c).unwrap())
}

fn planar_field(max_deg: u32) -> impl Strategy<Value = PolyVectorField> {
    // x-component even in rho, rho-component odd in rho
    (poly(2, max_deg), poly(2, max_deg)).prop_map(|(a, b)| {
        let pl = Vars::planar();
        let keep = |p: &Polynomial, parity: u32| {
            Polynomial::from_terms(&pl, p.terms().filter(|(m, _)| m.exp(1) % 2 == parity).map(|(m, c)| (*m, c.clone())))
        };
        PolyVectorField::new(&pl, vec![keep(&a, 0), keep(&b, 1)]).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jacobi(u in field3(4), v in field3(4), w in field3(4)) {
        let a = u.lie_bracket(&v.lie_bracket(&w).unwrap()).unwrap();
        let b = v.lie_bracket(&w.lie_bracket(&u).unwrap()).unwrap();
        let c = w.lie_bracket(&u.lie_bracket(&v).unwrap()).unwrap();
        prop_assert!(a.add(&b).unwrap().add(&c).unwrap().is_zero());
    }

    #[test]
    fn antisymmetry(u in field3(4), v in field3(4)) {
        let a = u.lie_bracket(&v).unwrap();
        let b = v.lie_bracket(&u).unwrap();
        prop_assert!(a.add(&b).unwrap().is_zero());
    }

    #[test]
    fn bilinearity(u in field3(3), v in field3(3), w in field3(3), c in rational()) {
        let lhs = u.scale(&c).add(&v).unwrap().lie_bracket(&w).unwrap();
        let rhs = u.lie_bracket(&w).unwrap().scale(&c).add(&v.lie_bracket(&w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn leibniz(v in field3(3), g in poly(3, 3), h in poly(3, 3)) {
        let gh = g.mul(&h).unwrap();
        let lhs = v.apply_derivation(&gh).unwrap();
        let rhs = g.mul(&v.apply_derivation(&h).unwrap()).unwrap()
            .add(&h.mul(&v.apply_derivation(&g).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn truncate_idempotent(v in field3(5), d in 0u32..6) {
        let t = v.truncate(d);
        prop_assert_eq!(t.truncate(d), t.clone());
        prop_assert!(t.degree().is_none_or(|x| x <= d));
    }

    #[test]
    fn pushforward_is_lie_map(u in planar_field(4), v in planar_field(4)) {
        let lhs = u.lie_bracket(&v).unwrap().pushforward_bt().unwrap();
        let rhs = u.pushforward_bt().unwrap().lie_bracket(&v.pushforward_bt().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn linear_change_is_lie_map(u in field3(3), v in field3(3)) {
        let r = |xs: [i64; 3]| xs.iter().map(|&x| Rational::from_integer(x.into())).collect::<Vec<_>>();
        let t = exactpoly::Matrix::from_rows(vec![r([1, 1, 1]), r([-1, 0, -1]), r([1, 1, 0])]).unwrap();
        let lhs = u.lie_bracket(&v).unwrap().linear_change(&t).unwrap();
        let rhs = u.linear_change(&t).unwrap().lie_bracket(&v.linear_change(&t).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
