use exactpoly::Rational;
use liebasis::{decompose_cnf, realize_element, NFElement, Symbol};
use num::BigInt;
use proptest::prelude::*;

fn element() -> impl Strategy<Value = NFElement> {
    let syms = Symbol::all_up_to(4);
    prop::collection::vec((0..syms.len(), -9i64..=9, 1i64..=5), 0..8).prop_map(move |ts| {
        NFElement::from_terms(ts.into_iter().map(|(i, n, d)| (syms[i], Rational::new(BigInt::from(n), BigInt::from(d)))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decompose_inverts_realize(e in element()) {
        prop_assert_eq!(decompose_cnf(&realize_element(&e)).unwrap(), e);
    }

    #[test]
    fn realize_inverts_decompose(e in element()) {
        let v = realize_element(&e);
        prop_assert_eq!(realize_element(&decompose_cnf(&v).unwrap()), v);
    }

    #[test]
    fn render_parse_roundtrip(e in element()) {
        prop_assert_eq!(e.to_string().parse::<NFElement>().unwrap(), e);
    }

    #[test]
    fn bracket_antisymmetric(a in element(), b in element()) {
        let ab = liebasis::bracket(&a, &b);
        let ba = liebasis::bracket(&b, &a);
        prop_assert!(ab.add(&ba).is_zero());
    }
}
