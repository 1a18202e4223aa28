use exactpoly::{int, q};
use hypernf::gamma::gamma_disagreements;
use hypernf::kernel::{case_i_candidates, f_r};
use hypernf::sequences::*;
use hypernf::*;
use liebasis::{bracket, NFElement, Symbol};
use num::Zero;

fn case_i() -> GammaCase {
    GammaCase::I { r: 1, a_r: int(3) }
}

fn case_ii() -> GammaCase {
    GammaCase::II { s: 1, b_s: int(2) }
}

fn case_iii() -> GammaCase {
    GammaCase::III { s: 1, a_s: int(2), b_s: int(1) }
}

#[test]
fn gamma_case_i_matches_printed() {
    for (r, a) in [(1, int(3)), (2, q(-1, 2)), (3, int(5))] {
        let c = GammaCase::I { r, a_r: a };
        assert!(gamma_disagreements(&c, 6).unwrap().is_empty(), "r = {r}");
    }
    let c = GammaCase::I { r: 1, a_r: int(7) };
    let g = gamma_op(Symbol::f(0, 1), &c).unwrap();
    assert_eq!(g, NFElement::from_terms([(Symbol::f(0, 1), int(-12)), (Symbol::f(2, 2), int(12 * 7))]));
}

#[test]
fn gamma_case_ii_printed_theta_row_is_off() {
    let bad = gamma_disagreements(&case_ii(), 5).unwrap();
    assert_eq!(bad.len(), 15);
    assert!(bad.iter().all(|s| s.family() == liebasis::Family::Theta));
    // the E row agrees, including the vanishing example
    assert!(gamma_op(Symbol::e(0, 1), &case_ii()).unwrap().is_zero());
    assert_eq!(gamma_printed(Symbol::e(0, 1), &case_ii()), gamma_op(Symbol::e(0, 1), &case_ii()).unwrap());
}

#[test]
fn gamma_case_iii_printed_disagrees() {
    let bad = gamma_disagreements(&case_iii(), 5).unwrap();
    assert_eq!(bad.len(), 45);
}

#[test]
fn kernel_certification() {
    let cases = [
        (case_i(), vec![(GeneratorKind::E0, false), (GeneratorKind::Fr, true)]),
        (case_ii(), vec![(GeneratorKind::FMinus1, false), (GeneratorKind::E0, true), (GeneratorKind::T0, true)]),
        (case_iii(), vec![(GeneratorKind::FMinus1, false), (GeneratorKind::E0, false), (GeneratorKind::T0, true)]),
    ];
    for (c, expect) in cases {
        for k in 1..=3 {
            let gens = kernel_generators(&c, k).unwrap();
            let got: Vec<_> = gens.iter().map(|g| (g.kind, certify(&c, &g.element, 10).unwrap().is_zero())).collect();
            assert_eq!(got, expect, "{c:?} k = {k}");
        }
    }
}

#[test]
fn kernel_rejects_bad_index() {
    assert!(kernel_generators(&case_i(), 0).is_err());
}

#[test]
fn f_r_commutes_with_lead() {
    let e = f_r(1, &int(3), 1).unwrap();
    assert_eq!(e, NFElement::from_terms([(Symbol::f(-1, 0), int(1)), (Symbol::f(1, 1), int(3))]));
    for j in 1..=4 {
        let x = f_r(2, &q(2, 3), j).unwrap();
        let lead = GammaCase::I { r: 2, a_r: q(2, 3) }.lead();
        assert!(bracket(&lead, &x).is_zero(), "j = {j}");
    }
}

#[test]
fn computed_kernel_has_a_case_i_e_generator() {
    // the printed 𝓔⁰_k fails, but Γ does have an E-led kernel element at each k
    let c = case_i();
    for kind in [GeneratorKind::FMinus1, GeneratorKind::E0, GeneratorKind::T0] {
        for k in 1..=3 {
            let ker = computed_kernel(&c, &case_i_candidates(1, k, kind)).unwrap();
            assert!(!ker.is_empty(), "{kind} k = {k}");
            for x in &ker {
                assert!(certify(&c, x, 12).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn transition_b_holds() {
    for s in 1..=3 {
        let c = GammaCase::II { s, b_s: q(-5, 3) };
        for n in 1..=5 {
            for m in 0..n {
                let t = transition_solutions(TransitionKind::Brak, m, n, &c).unwrap();
                assert!(t.residual(&c).is_zero(), "s={s} m={m} n={n}");
            }
        }
    }
}

#[test]
fn transition_f_holds_only_sometimes() {
    let c = case_i();
    let res = |m, n| transition_solutions(TransitionKind::Frak, m, n, &c).unwrap().residual(&c);
    assert!(res(0, 1).is_zero());
    assert!(res(1, 3).is_zero());
    assert_eq!(res(1, 2), NFElement::term(Symbol::f(3, 3), int(-1)));
}

#[test]
fn transition_e_and_a_leave_the_source() {
    let t = transition_solutions(TransitionKind::Erak, 1, 2, &case_i()).unwrap();
    assert_eq!(t.residual(&case_i()).coeff(&Symbol::e(1, 2)), int(-3));
    let t = transition_solutions(TransitionKind::Arak, 1, 2, &case_ii()).unwrap();
    assert_eq!(t.residual(&case_ii()).coeff(&Symbol::f(1, 2)), int(-1));
    let t = transition_solutions(TransitionKind::Arak, 0, 1, &case_ii()).unwrap();
    assert_eq!(t.residual(&case_ii()), NFElement::term(Symbol::e(2, 2), q(-21, 8)));
}

#[test]
fn transition_index_checks() {
    assert!(transition_solutions(TransitionKind::Frak, 2, 2, &case_i()).is_err());
    assert!(transition_solutions(TransitionKind::Frak, -1, 2, &case_i()).is_err());
    assert!(transition_solutions(TransitionKind::Arak, 0, 2, &case_i()).is_err());
}

#[test]
fn g_base_case() {
    let g = g_sequence(1, 4, 2, 5);
    assert!(g[0].is_zero());
    let t = transition_solutions(TransitionKind::Erak, 1, 4, &GammaCase::I { r: 2, a_r: int(1) }).unwrap();
    assert!(t.solution.coeff(&Symbol::f(2, 4)).is_zero());
}

#[test]
fn h_signs_hold() {
    for s in 1..=4 {
        for k in 1..=4 {
            assert!(h_sign_violations(&h_sequence(k, s, 20)).is_empty(), "s={s} k={k}");
        }
    }
}

#[test]
fn e_signs_fail_on_a_shifted_pattern() {
    for r in 1..=3 {
        let v = e_sign_violations(&e_sequence(1, r, 20));
        assert_eq!(v, vec![2, 5, 6, 9, 10, 13, 14, 17, 18], "r = {r}");
    }
}

#[test]
fn eta_leaves_the_interval() {
    for s in 1..=3 {
        assert_eq!(eta(0, 1, s), int(-s));
    }
    let outside = (1..=12).flat_map(|n| (0..n).map(move |m| (m, n))).filter(|&(m, n)| {
        let e = eta(m, n, 1);
        !(e > int(-1) && e < int(0))
    });
    assert!(outside.count() > 0);
}

#[test]
fn sequence_table_base_cases() {
    let t = SequenceTable::build(2, 1, 1, 0, 3, &int(2), &int(1), 6);
    assert!(t.e[0].is_zero() && t.h[0].is_zero() && t.g[0].is_zero());
    assert!(t.w_minus1[0].is_zero() && t.u_zero[0].is_zero());
    assert_eq!(t.eta[&(0, 1)], int(-1));
}

#[test]
fn pochhammer_empty_and_negative_step() {
    assert_eq!(pochhammer(&q(7, 2), 0, &int(3)), int(1));
    assert_eq!(pochhammer(&int(4), 3, &int(-2)), int(0));
    assert_eq!(pochhammer(&q(1, 2), 2, &int(1)), q(3, 4));
}
