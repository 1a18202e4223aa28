use classicalnf::fixtures::{ks_k1, ks_printed, ks_reconciled, rossler};
use classicalnf::*;
use exactpoly::{int, q, Monomial, PolyVectorField, Rational, Vars};
use liebasis::{decompose_cnf, NFElement, Symbol};
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn v0_plus(comp: usize, exps: &[u32], c: Rational) -> HopfZeroSystem {
    let f = rotation().add(&PolyVectorField::monomial(&Vars::xyz(), comp, exps, c)).unwrap();
    validate_linear(&f).unwrap()
}

fn random_cubic(rng: &mut ChaCha8Rng) -> CubicCoefficients {
    let mut c = CubicCoefficients::new();
    for row in Row::ALL {
        for i in 0..4u32 {
            for j in 0..4u32 {
                for k in 0..4u32 {
                    if (2..=3).contains(&(i + j + k)) && rng.random_bool(0.6) {
                        c.set(row, [i, j, k], q(rng.random_range(-5..6), rng.random_range(1..5))).unwrap();
                    }
                }
            }
        }
    }
    c.set(Row::C, [0, 2, 0], q(rng.random_range(1..4), 1)).unwrap();
    c
}

#[test]
fn nonresonant_quadratic_is_removed() {
    let sys = v0_plus(0, &[1, 1, 0], int(1));
    let (e, log) = classical_normal_form(&sys, 2).unwrap();
    assert_eq!(e, NFElement::term(Symbol::theta(0, 0), int(1)));
    assert_eq!(log.len(), 1);
}

#[test]
fn resonant_quadratic_is_kept() {
    let f = rotation()
        .add(&PolyVectorField::monomial(&Vars::xyz(), 0, &[0, 2, 0], int(1)))
        .unwrap()
        .add(&PolyVectorField::monomial(&Vars::xyz(), 0, &[0, 0, 2], int(1)))
        .unwrap();
    let (e, log) = classical_normal_form(&validate_linear(&f).unwrap(), 3).unwrap();
    assert!(log.is_empty());
    assert_eq!(e.coeff(&Symbol::f(-1, 0)), q(1, 2));
    let (e, _) = classical_normal_form(&v0_plus(0, &[2, 0, 0], int(3)), 3).unwrap();
    assert_eq!(e.coeff(&Symbol::f(1, 1)), int(1));
    assert_eq!(e.coeff(&Symbol::e(1, 1)), int(2));
}

#[test]
fn kernel_dimensions() {
    for (d, k) in [(2, 4), (3, 6), (4, 7)] {
        let l = ad_rotation_matrix(d);
        assert_eq!(l.nrows() - l.rank(), k, "degree {d}");
    }
}

#[test]
fn ks_reconciled_round_trips() {
    let f = ks_reconciled().unwrap();
    assert_ne!(f.system.field(), &liebasis::realize_element(&ks_k1()));
    let (e, _) = classical_normal_form(&f.system, 6).unwrap();
    assert_eq!(e, ks_k1());
}

#[test]
fn ks_printed_is_not_hopf_zero() {
    match validate_linear(&ks_printed()) {
        Err(ClassicalError::LinearPart { mismatches, .. }) => assert!(!mismatches.is_empty()),
        other => panic!("expected a linear-part error, got {other:?}"),
    }
}

#[test]
fn rossler_orientation_and_values() {
    let (e1, _) = classical_normal_form(&rossler(&int(1)).unwrap().system, 3).unwrap();
    let (em, _) = classical_normal_form(&rossler(&int(-1)).unwrap().system, 3).unwrap();
    assert_eq!(e1.coeff(&Symbol::f(-1, 0)), q(-1, 4));
    assert_eq!(em.coeff(&Symbol::f(-1, 0)), q(1, 4));
    // a -> -a with x -> -x flips every F and E term, Θ terms unchanged
    for s in e1.symbols() {
        let sign = if s.family() == liebasis::Family::Theta { int(1) } else { int(-1) };
        assert_eq!(em.coeff(s), sign * e1.coeff(s), "{s}");
    }
    // a¹₁ : b¹₁ is invariant under scalings of x and (y, z)
    assert_eq!(e1.coeff(&Symbol::f(1, 1)), q(-2, 3));
    assert_eq!(e1.coeff(&Symbol::e(1, 1)), q(-1, 3));
}

#[test]
fn rossler_rejects_irrational_frequency() {
    assert!(matches!(rossler(&q(1, 2)), Err(ClassicalError::Precondition(_))));
    assert!(matches!(rossler(&int(2)), Err(ClassicalError::Precondition(_))));
    assert!(rossler(&q(1, 5)).is_ok());
}

#[test]
fn log_replay_reproduces_normal_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let xyz = Vars::xyz();
    for _ in 0..6 {
        let mut f = rotation();
        for _ in 0..8 {
            let d = rng.random_range(2..=4u32);
            let ms = Monomial::all_of_degree(3, d);
            let m = &ms[rng.random_range(0..ms.len())];
            let e: Vec<u32> = (0..3).map(|i| m.exp(i)).collect();
            let t = PolyVectorField::monomial(&xyz, rng.random_range(0..3), &e, q(rng.random_range(-3..4), rng.random_range(1..3)));
            f = f.add(&t).unwrap();
        }
        let sys = validate_linear(&f).unwrap();
        let (nf, log) = classical_normal_form_field(&sys, 4).unwrap();
        assert_eq!(log.replay_field(sys.field(), 4).unwrap(), nf);
        assert!(decompose_cnf(&nf).is_ok());
    }
}

#[test]
fn deterministic() {
    let f = ks_reconciled().unwrap();
    let a = classical_normal_form_field(&f.system, 5).unwrap();
    let b = classical_normal_form_field(&f.system, 5).unwrap();
    assert_eq!(a, b);
}

#[test]
fn solver_leading_terms_in_raw_coefficients() {
    // with Θ[0,0] = z∂y - y∂z, F[-1,0] = 2(y²+z²)∂x and the (1,1) pair spanning x²∂x, x(y∂y+z∂z)
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let c = random_cubic(&mut rng);
        let (e, _) = classical_normal_form(&validate_linear(&c.to_field()).unwrap(), 3).unwrap();
        let s = c.get(Row::C, [0, 2, 0]) + c.get(Row::C, [2, 0, 0]);
        let div = c.get(Row::A, [1, 0, 1]) + c.get(Row::B, [0, 1, 1]);
        let x2 = c.get(Row::C, [0, 0, 2]);
        assert_eq!(e.coeff(&Symbol::f(-1, 0)), &s / int(4));
        assert_eq!(e.coeff(&Symbol::f(1, 1)), (&x2 - &div) / int(3));
        assert_eq!(e.coeff(&Symbol::e(1, 1)), (&x2 * int(2) + &div) / int(3));
    }
}

#[test]
fn closed_form_disagreement_is_pinned() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let c = random_cubic(&mut rng);
    let (e, _) = classical_normal_form(&validate_linear(&c.to_field()).unwrap(), 3).unwrap();
    let p = cubic_closed_form(&c).unwrap();
    assert_eq!(p.coeff(&Symbol::theta(0, 0)), int(1));
    assert_eq!(p.coeff(&Symbol::f(-1, 0)), e.coeff(&Symbol::f(-1, 0)) * int(2));
    assert_ne!(p, e);
}

#[test]
fn theta01_quadratic_ratio_matches_printed_reading() {
    // a110² and a020² enter Θ[0,1] in ratio 1 : 10 both in the solver and the printed form
    let probe = |row: Row, ijk: [u32; 3]| {
        let mut c = CubicCoefficients::new();
        c.set(Row::C, [0, 2, 0], int(2)).unwrap();
        c.set(row, ijk, int(1)).unwrap();
        let (e, _) = classical_normal_form(&validate_linear(&c.to_field()).unwrap(), 3).unwrap();
        (e.coeff(&Symbol::theta(0, 1)), cubic_closed_form(&c).unwrap().coeff(&Symbol::theta(0, 1)))
    };
    let (s1, p1) = probe(Row::A, [1, 1, 0]);
    let (s2, p2) = probe(Row::A, [0, 2, 0]);
    assert!(!s1.is_zero() && !p1.is_zero());
    assert_eq!(&s2 / &s1, q(10, 1));
    assert_eq!(&p2 / &p1, q(10, 1));
    assert_eq!(s1, q(-1, 24));
    assert_eq!(p1, q(-1, 48));
}

#[test]
fn snf_cubic_precondition() {
    let c = CubicCoefficients::new();
    let err = snf_cubic(&c).unwrap_err();
    assert!(err.to_string().contains("c_{0,2,0}+c_{2,0,0}≠0"));
}
