use classicalnf::fixtures::{ks_k1, rossler};
use classicalnf::classical_normal_form;
use exactpoly::{int, q, Monomial, Polynomial, Rational, Vars};
use hypernf::*;
use liebasis::{NFElement, Symbol};

fn el(terms: &[(Symbol, Rational)]) -> NFElement {
    NFElement::from_terms(terms.iter().cloned())
}

fn planar(terms: &[([u32; 2], Rational)]) -> Polynomial {
    Polynomial::from_terms(&Vars::planar(), terms.iter().map(|(e, c)| (Monomial::new(e), c.clone())))
}

#[test]
fn second_level_examples() {
    let base = el(&[(Symbol::theta(0, 0), int(1)), (Symbol::f(-1, 0), int(1))]);
    let (out, log) = second_level(&base, Truncation::Degree(4)).unwrap();
    assert_eq!(out, base);
    assert!(log.is_empty());

    for extra in [Symbol::e(0, 1), Symbol::f(0, 1)] {
        let mut v = base.clone();
        v.add_term(extra, q(3, 2));
        let (out, log) = second_level(&v, Truncation::Grade(1)).unwrap();
        assert_eq!(out, base, "{extra}");
        assert_eq!(log.len(), 1);
    }
}

#[test]
fn second_level_needs_a0() {
    let v = el(&[(Symbol::theta(0, 0), int(1)), (Symbol::e(1, 1), int(1))]);
    assert!(matches!(second_level(&v, Truncation::Degree(3)), Err(HyperError::Precondition(_))));
}

#[test]
fn classify_examples() {
    let mk = |a: i64, b: i64| {
        el(&[(Symbol::f(-1, 0), int(1)), (Symbol::f(a, a), int(2)), (Symbol::e(b, b), int(-1))])
    };
    let t = classify(&mk(1, 2), 6).unwrap();
    assert_eq!((t.variant, t.r, t.s), (CaseVariant::CaseI, Some(1), Some(2)));
    let t = classify(&mk(2, 1), 6).unwrap();
    assert_eq!((t.variant, t.s), (CaseVariant::CaseII, Some(1)));
    let t = classify(&mk(1, 1).add(&mk(1, 1)), 6).unwrap();
    assert_eq!((t.variant, t.s), (CaseVariant::CaseIII, Some(1)));
    let t = classify(&el(&[(Symbol::f(-1, 0), int(1)), (Symbol::f(2, 2), int(1))]), 6).unwrap();
    assert_eq!(t.variant, CaseVariant::Degenerate);
    assert!(t.diagnostic.is_some());
}

#[test]
fn ks_second_level() {
    let p = simplest_normal_form(&ks_k1(), Style::I, Truncation::Degree(6)).unwrap();
    let expect = ks_k1()
        .filter(|s| s.is_diagonal() || *s == Symbol::f(-1, 0))
        .add(&el(&[(Symbol::theta(4, 4), int(1)), (Symbol::theta(5, 5), q(-10701, 56))]));
    assert_eq!(p.second_level, expect);
    assert!(p.phase);
}

#[test]
fn ks_simplest_style_i() {
    let p = simplest_normal_form(&ks_k1(), Style::I, Truncation::Degree(6)).unwrap();
    let tag = &p.infinite.tag;
    assert_eq!((tag.variant, tag.s), (CaseVariant::CaseIII, Some(1)));
    assert_eq!(tag.a_s.clone().unwrap() / tag.b_s.clone().unwrap(), int(2));
    let expect = el(&[
        (Symbol::theta(0, 0), int(1)),
        (Symbol::f(-1, 0), q(1, 2)),
        (Symbol::f(1, 1), q(-4, 3)),
        (Symbol::e(1, 1), q(-2, 3)),
        (Symbol::f(3, 3), q(187, 15)),
        (Symbol::theta(4, 4), int(1)),
        (Symbol::f(5, 5), q(317590969, 473850)),
    ]);
    assert_eq!(p.simplest, expect);
    // the published F[5,5] is 754127923063/747079200; Θ[4,4] is not removable here
    assert_ne!(p.simplest.coeff(&Symbol::f(5, 5)), q(754127923063, 747079200));

    let cyl = to_cylindrical(&p.simplest, false);
    assert_eq!(
        cyl.x_dot,
        planar(&[([0, 2], int(1)), ([2, 0], int(-2)), ([4, 0], q(187, 15)), ([6, 0], q(317590969, 473850))])
    );
    assert_eq!(cyl.rho_dot, planar(&[([1, 1], int(1)), ([3, 1], q(-374, 15)), ([5, 1], q(-317590969, 157950))]));
    assert_eq!(cyl.theta_dot, planar(&[([0, 0], int(1)), ([4, 0], int(1))]));
}

#[test]
fn ks_simplest_style_ii() {
    let p = simplest_normal_form(&ks_k1(), Style::II, Truncation::Degree(6)).unwrap();
    assert_eq!(p.simplest.coeff(&Symbol::f(5, 5)), int(0));
    assert_eq!(p.simplest.coeff(&Symbol::e(5, 5)), q(317590969, 218700));
    assert_eq!(p.simplest.coeff(&Symbol::e(3, 3)), int(0));
    assert_eq!(p.simplest.coeff(&Symbol::f(3, 3)), q(187, 15));
}

#[test]
fn rossler_simplest() {
    for (a, sign) in [(1, -1), (-1, 1)] {
        let f = rossler(&int(a)).unwrap();
        let (e1, _) = classical_normal_form(&f.system, 3).unwrap();
        let p = simplest_normal_form(&e1, Style::I, Truncation::Degree(3)).unwrap();
        assert_eq!(p.infinite.tag.variant, CaseVariant::CaseIII);
        let s = int(sign);
        let expect = el(&[
            (Symbol::theta(0, 0), int(1)),
            (Symbol::f(-1, 0), q(1, 4) * &s),
            (Symbol::f(1, 1), q(2, 3) * &s),
            (Symbol::e(1, 1), q(1, 3) * &s),
            (Symbol::theta(1, 1), int(-1)),
            (Symbol::f(2, 2), q(55, 32) * &s),
            (Symbol::e(2, 2), q(9, 32) * &s),
            (Symbol::theta(2, 2), q(-23, 24)),
        ]);
        assert_eq!(p.simplest, expect, "a = {a}");
    }
}

#[test]
fn cylindrical_examples() {
    let c = to_cylindrical(&el(&[(Symbol::f(-1, 0), int(1))]), true);
    assert_eq!(c.x_dot, planar(&[([0, 2], int(2))]));
    assert!(c.rho_dot.is_zero());
    assert_eq!(c.theta_dot, planar(&[([0, 0], int(1))]));

    let c = to_cylindrical(&el(&[(Symbol::e(1, 1), int(1))]), false);
    assert_eq!(c.x_dot, planar(&[([2, 0], int(1))]));
    assert_eq!(c.rho_dot, planar(&[([1, 1], q(1, 2))]));
    assert!(c.theta_dot.is_zero());
}

#[test]
fn infinite_level_rejects_theta00() {
    let v = el(&[(Symbol::theta(0, 0), int(1)), (Symbol::f(-1, 0), int(1)), (Symbol::f(1, 1), int(1)), (Symbol::e(1, 1), int(1))]);
    assert!(infinite_level(&v, Style::I, Truncation::Degree(3)).is_err());
    let off = el(&[(Symbol::f(-1, 0), int(1)), (Symbol::f(0, 1), int(1))]);
    assert!(matches!(infinite_level(&off, Style::I, Truncation::Degree(3)), Err(HyperError::Precondition(_))));
}

#[test]
fn case_ii_style_i_is_experimental() {
    let v = el(&[(Symbol::f(-1, 0), int(1)), (Symbol::e(1, 1), int(1)), (Symbol::f(2, 2), int(3))]);
    assert!(infinite_level(&v, Style::I, Truncation::Grade(4)).unwrap().experimental);
    assert!(!infinite_level(&v, Style::II, Truncation::Grade(4)).unwrap().experimental);
}
