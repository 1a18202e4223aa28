//! Exact property checks, grouped into suites.

use classicalnf::fixtures::{ks_k1, ks_reconciled, rossler};
use classicalnf::{classical_normal_form, cubic_closed_form, snf_cubic, validate_linear, CubicCoefficients, Row};
use exactpoly::{int, par, q, Monomial, Polynomial, Rational, Vars};
use hypernf::gamma::gamma_disagreements;
use hypernf::sequences::{e_sequence, e_sign_violations, eta, h_sequence, h_sign_violations};
use hypernf::{
    certify, infinite_level, kernel_generators, simplest_normal_form, to_cylindrical, transition_solutions,
    vanishing_violations, GammaCase, Style, Transition, TransitionKind, Truncation,
};
use liebasis::{bracket, first_integral, planar_reduce, realize, realize_element, triad, Family, NFElement, Symbol};
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Empty on success, otherwise the first counterexamples.
    pub detail: String,
}

impl Check {
    fn new(name: &str, bad: Vec<String>) -> Check {
        let detail = match bad.len() {
            0 => String::new(),
            n if n > 4 => format!("{}; ... ({n} in total)", bad[..4].join("; ")),
            _ => bad.join("; "),
        };
        Check { name: name.to_string(), passed: bad.is_empty(), detail }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{tag} {}", self.name)
        } else {
            write!(f, "{tag} {}: {}", self.name, self.detail)
        }
    }
}

fn el(terms: &[(Symbol, Rational)]) -> NFElement {
    NFElement::from_terms(terms.iter().cloned())
}

fn planar(terms: &[([u32; 2], Rational)]) -> Polynomial {
    Polynomial::from_terms(&Vars::planar(), terms.iter().map(|(e, c)| (Monomial::new(e), c.clone())))
}

fn rand_q(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let n = rng.random_range(-9..10);
        if n != 0 {
            return q(n, rng.random_range(1..6));
        }
    }
}

pub fn random_cubic(rng: &mut ChaCha8Rng) -> CubicCoefficients {
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
    if (c.get(Row::C, [0, 2, 0]) + c.get(Row::C, [2, 0, 0])).is_zero() {
        c.set(Row::C, [0, 2, 0], c.get(Row::C, [0, 2, 0]) + int(1)).unwrap();
    }
    c
}

/// `[M,N] = H`, `[H,M] = 2M`, `[H,N] = -N`.
pub fn triad_relations() -> Check {
    let (m, n, h) = (triad::m(), triad::n(), triad::h());
    let mut bad = Vec::new();
    let rel = [
        ("[M,N] = H", m.bracket(&n), h.clone()),
        ("[H,M] = 2M", h.bracket(&m), m.scale(&int(2))),
        ("[H,N] = -N", h.bracket(&n), n.scale(&int(-1))),
    ];
    for (name, lhs, rhs) in rel {
        match lhs {
            Ok(l) if l.equals(&rhs) => {}
            Ok(_) => bad.push(format!("{name} does not hold")),
            Err(e) => bad.push(format!("{name}: {e}")),
        }
    }
    Check::new("sl(2) triad relations", bad)
}

/// Closed-form brackets against coordinate brackets, all pairs with `k <= max_k`.
pub fn structure_oracle(max_k: i64) -> Check {
    let syms = Symbol::all_up_to(max_k);
    let pairs: Vec<(Symbol, Symbol)> = syms.iter().flat_map(|a| syms.iter().map(move |b| (*a, *b))).collect();
    let bad: Vec<String> = par::map(&pairs, |(a, b)| {
        let lhs = realize_element(&bracket(&NFElement::term(*a, int(1)), &NFElement::term(*b, int(1))));
        let rhs = realize(a).lie_bracket(&realize(b)).expect("same ring");
        (lhs != rhs).then(|| format!("[{a}, {b}]"))
    })
    .into_iter()
    .flatten()
    .collect();
    Check::new(&format!("structure constants vs coordinates ({} pairs, k <= {max_k})", pairs.len()), bad)
}

/// Degree-3 solver output against the closed-form cubic coefficients.
pub fn cubic_closed_form_oracle(count: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cs: Vec<CubicCoefficients> = (0..count).map(|_| random_cubic(&mut rng)).collect();
    let bad = par::map(&cs, |c| {
        let sys = validate_linear(&c.to_field()).expect("cubic systems have the rotation linear part");
        let (e, _) = classical_normal_form(&sys, 3).expect("degree 3 solve");
        let p = cubic_closed_form(c).expect("c020 + c200 != 0");
        let diff: Vec<String> = e
            .sub(&p)
            .iter()
            .map(|(s, d)| format!("{s}: solver {} vs closed form {}", e.coeff(s), &e.coeff(s) - d))
            .collect();
        (!diff.is_empty()).then(|| diff.join(", "))
    });
    let bad: Vec<String> = bad.into_iter().flatten().collect();
    Check::new(&format!("cubic closed form vs solver ({count} systems)"), bad)
}

fn diff_terms(got: &NFElement, want: &NFElement) -> Vec<String> {
    got.sub(want)
        .symbols()
        .map(|s| format!("{s}: got {} expected {}", got.coeff(s), want.coeff(s)))
        .collect()
}

/// Published infinite-level form of the Kuramoto-Sivashinsky example.
pub fn ks_published() -> NFElement {
    el(&[
        (Symbol::theta(0, 0), int(1)),
        (Symbol::f(-1, 0), q(1, 2)),
        (Symbol::f(1, 1), q(-4, 3)),
        (Symbol::e(1, 1), q(-2, 3)),
        (Symbol::f(3, 3), q(187, 15)),
        (Symbol::f(5, 5), q(754127923063, 747079200)),
    ])
}

pub fn ks_regression() -> Check {
    let mut bad = Vec::new();
    let f = ks_reconciled().expect("fixture");
    let (e1, _) = classical_normal_form(&f.system, 6).expect("first level");
    bad.extend(diff_terms(&e1, &ks_k1()).into_iter().map(|d| format!("K1 {d}")));
    let p = simplest_normal_form(&e1, Style::I, Truncation::Degree(6)).expect("pipeline");
    bad.extend(diff_terms(&p.simplest, &ks_published()).into_iter().map(|d| format!("Kinf {d}")));
    let cyl = to_cylindrical(&p.simplest, false);
    let x_dot = planar(&[
        ([0, 2], int(1)),
        ([2, 0], int(-2)),
        ([4, 0], q(187, 15)),
        ([6, 0], q(754127923063, 747079200)),
    ]);
    let rho_dot = planar(&[([1, 1], int(1)), ([3, 1], q(-374, 15)), ([5, 1], q(-2262383769189, 747079200))]);
    let theta_dot = planar(&[([0, 0], int(1))]);
    for (name, got, want) in [("x'", &cyl.x_dot, x_dot), ("rho'", &cyl.rho_dot, rho_dot), ("theta'", &cyl.theta_dot, theta_dot)] {
        if *got != want {
            bad.push(format!("{name} = {got}, expected {want}"));
        }
    }
    Check::new("Kuramoto-Sivashinsky regression", bad)
}

/// Published infinite-level forms of the Rössler example at `a = 1, -1`.
pub fn rossler_published(a: i64) -> NFElement {
    if a == 1 {
        el(&[
            (Symbol::theta(0, 0), int(1)),
            (Symbol::f(-1, 0), int(-1)),
            (Symbol::f(1, 1), int(-1)),
            (Symbol::f(2, 2), q(-3, 2)),
            (Symbol::e(2, 2), q(-7, 2)),
            (Symbol::theta(1, 1), int(1)),
        ])
    } else {
        el(&[
            (Symbol::theta(0, 0), int(1)),
            (Symbol::f(-1, 0), int(1)),
            (Symbol::f(1, 1), int(1)),
            (Symbol::f(2, 2), q(-63, 16)),
            (Symbol::e(2, 2), q(-17, 16)),
            (Symbol::theta(1, 1), int(-1)),
        ])
    }
}

pub fn rossler_regression() -> Check {
    let mut bad = Vec::new();
    for a in [1, -1] {
        let f = rossler(&int(a)).expect("a = ±1 has a rational frequency");
        let (e1, _) = classical_normal_form(&f.system, 3).expect("first level");
        match simplest_normal_form(&e1, Style::I, Truncation::Degree(3)) {
            Ok(p) => bad.extend(diff_terms(&p.simplest, &rossler_published(a)).into_iter().map(|d| format!("a={a} {d}"))),
            Err(e) => bad.push(format!("a={a}: {e}")),
        }
    }
    Check::new("Rössler regression", bad)
}

struct Fixture {
    name: &'static str,
    r: i64,
    s: i64,
    gap: Vec<i64>,
}

fn fixtures() -> Vec<Fixture> {
    let mut out = vec![
        Fixture { name: "iii s=1", r: 1, s: 1, gap: vec![] },
        Fixture { name: "iii s=2", r: 2, s: 2, gap: vec![] },
    ];
    for (name, r, s) in [("i r=1 s=2", 1, 2), ("i r=1 s=3", 1, 3), ("i r=2 s=3", 2, 3)] {
        out.push(Fixture { name, r, s, gap: (r + 1..=s).collect() });
    }
    out.push(Fixture { name: "ii s=1 r=2", r: 2, s: 1, gap: vec![] });
    out.push(Fixture { name: "ii s=1 r=3", r: 3, s: 1, gap: vec![] });
    out
}

fn second_level_fixture(rng: &mut ChaCha8Rng, fx: &Fixture, kmax: i64) -> NFElement {
    let mut v = NFElement::term(Symbol::f(-1, 0), rand_q(rng));
    for k in 1..=kmax {
        if k >= fx.r && !fx.gap.contains(&k) {
            v.add_term(Symbol::f(k, k), rand_q(rng));
        }
        if k >= fx.s {
            v.add_term(Symbol::e(k, k), rand_q(rng));
        }
        v.add_term(Symbol::theta(k, k), rand_q(rng));
    }
    v
}

/// Randomized second-level inputs per case fixture and style, checked against
/// the stated vanishing congruences up to grade `grade`.
pub fn vanishing_patterns(rounds: usize, grade: i64, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut jobs = Vec::new();
    for _ in 0..rounds {
        for fx in fixtures() {
            let v = second_level_fixture(&mut rng, &fx, grade);
            for st in [Style::I, Style::II] {
                jobs.push((fx.name, v.clone(), st));
            }
        }
    }
    let bad = par::map(&jobs, |(name, v, st)| match infinite_level(v, *st, Truncation::Grade(grade)) {
        Ok(inf) => {
            let viol = vanishing_violations(&inf.element, &inf.tag, *st, grade);
            (!viol.is_empty()).then(|| {
                let syms: Vec<String> = viol.iter().map(|x| format!("{} ({})", x.symbol, x.rule)).collect();
                format!("{name} style {st}: {}", syms.join(", "))
            })
        }
        Err(e) => Some(format!("{name} style {st}: {e}")),
    });
    let mut bad: Vec<String> = bad.into_iter().flatten().collect();
    bad.dedup();
    Check::new(&format!("vanishing patterns ({} runs, grade {grade})", jobs.len()), bad)
}

/// Cubic simplest normal form in closed form against the pipeline at degree 3.
pub fn cubic_snf_agreement(count: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cs: Vec<CubicCoefficients> = (0..count).map(|_| random_cubic(&mut rng)).collect();
    let bad = par::map(&cs, |c| {
        let closed = cubic_closed_form(c).expect("c020 + c200 != 0");
        let want = snf_cubic(c).expect("c020 + c200 != 0");
        match simplest_normal_form(&closed, Style::I, Truncation::Degree(3)) {
            Ok(p) => {
                let got = to_cylindrical(&p.simplest, false).truncate(3);
                (got != want).then(|| format!("pipeline {got} vs closed form {want}"))
            }
            Err(e) => Some(e.to_string()),
        }
    });
    let bad: Vec<String> = bad.into_iter().flatten().collect();
    Check::new(&format!("cubic simplest normal form vs pipeline ({count} systems)"), bad)
}

/// Divergence of every realization with `k <= max_k`, and `v(f) = 0` for
/// random F⊕Θ elements.
pub fn conservative_properties(max_k: i64, samples: usize, seed: u64) -> Check {
    let mut bad = Vec::new();
    for s in Symbol::all_up_to(max_k) {
        let div = realize(&s).divergence();
        match (s.family(), div.is_zero()) {
            (Family::E, true) => bad.push(format!("{s} is divergence free")),
            (Family::F | Family::Theta, false) => bad.push(format!("div {s} = {div}")),
            _ => {}
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<Symbol> = Symbol::all_up_to(4)
        .into_iter()
        .filter(|s| s.family() != Family::E && *s != Symbol::f(-1, 0))
        .collect();
    for i in 0..samples {
        let mut e = NFElement::term(Symbol::f(-1, 0), rand_q(&mut rng));
        for s in &pool {
            if rng.random_bool(0.5) {
                e.add_term(*s, rand_q(&mut rng));
            }
        }
        match first_integral(&e).and_then(|f| Ok(realize_element(&e).apply_derivation(&f)?)) {
            Ok(d) if d.is_zero() => {}
            Ok(d) => bad.push(format!("sample {i}: v(f) = {d}")),
            Err(err) => bad.push(format!("sample {i}: {err}")),
        }
    }
    Check::new(&format!("divergence and first integrals (k <= {max_k}, {samples} samples)"), bad)
}

/// Sign patterns of `e_m`, `h_m` for `m <= len` and `-1 < η^m_n < 0` for `n <= max_n`.
pub fn sequence_properties(len: usize, max_n: i64) -> Check {
    let mut bad = Vec::new();
    for r in 1..=3 {
        for k in 1..=3 {
            let v = e_sign_violations(&e_sequence(k, r, len));
            if !v.is_empty() {
                bad.push(format!("e_m (r={r}, k={k}) wrong sign at m = {v:?}"));
            }
        }
    }
    for s in 1..=3 {
        for k in 1..=3 {
            let v = h_sign_violations(&h_sequence(k, s, len));
            if !v.is_empty() {
                bad.push(format!("h_m (s={s}, k={k}) wrong sign at m = {v:?}"));
            }
        }
    }
    for s in 1..=3 {
        let out: Vec<String> = (1..=max_n)
            .flat_map(|n| (0..n).map(move |m| (m, n)))
            .filter_map(|(m, n)| {
                let e = eta(m, n, s);
                (!(e > int(-1) && e < int(0))).then(|| format!("η^{m}_{n} = {e}"))
            })
            .collect();
        if !out.is_empty() {
            bad.push(format!("s={s}: {} of η outside (-1, 0), first {}", out.len(), out[0]));
        }
    }
    Check::new(&format!("sequence signs (m <= {len}) and η range (n <= {max_n})"), bad)
}

/// Planar reduction pushed to Bogdanov-Takens coordinates commutes with brackets.
pub fn bt_functoriality(max_k: i64) -> Check {
    let syms: Vec<Symbol> = Symbol::all_up_to(max_k).into_iter().filter(|s| s.family() != Family::Theta).collect();
    let pairs: Vec<(Symbol, Symbol)> = syms.iter().flat_map(|a| syms.iter().map(move |b| (*a, *b))).collect();
    let push = |e: &NFElement| planar_reduce(e).expect("Θ-free").pushforward_bt().expect("planar");
    let bad: Vec<String> = par::map(&pairs, |(a, b)| {
        let (ea, eb) = (NFElement::term(*a, int(1)), NFElement::term(*b, int(1)));
        let lhs = push(&bracket(&ea, &eb));
        let rhs = push(&ea).lie_bracket(&push(&eb)).expect("same ring");
        (lhs != rhs).then(|| format!("[{a}, {b}]"))
    })
    .into_iter()
    .flatten()
    .collect();
    Check::new(&format!("Bogdanov-Takens pushforward is a Lie map ({} pairs, k <= {max_k})", pairs.len()), bad)
}

pub fn kernel_certification() -> Check {
    let cases = [
        GammaCase::I { r: 1, a_r: int(3) },
        GammaCase::II { s: 1, b_s: int(2) },
        GammaCase::III { s: 1, a_s: int(2), b_s: int(1) },
    ];
    let mut bad = Vec::new();
    for c in &cases {
        for k in 1..=3 {
            for g in kernel_generators(c, k).expect("k >= 1") {
                let res = certify(c, &g.element, 10).expect("permissible");
                if !res.is_zero() {
                    bad.push(format!("{c:?} {} k={k}: Γ = {res}", g.kind));
                }
            }
        }
    }
    Check::new("kernel generators annihilated by Γ", bad)
}

pub fn gamma_formulas() -> Check {
    let cases = [
        GammaCase::I { r: 1, a_r: int(3) },
        GammaCase::II { s: 1, b_s: int(2) },
        GammaCase::III { s: 1, a_s: int(2), b_s: int(1) },
    ];
    let mut bad = Vec::new();
    for c in &cases {
        let d = gamma_disagreements(c, 5).expect("permissible");
        if !d.is_empty() {
            bad.push(format!("{c:?}: {} symbols differ, first {}", d.len(), d[0]));
        }
    }
    Check::new("Γ closed forms vs extended brackets", bad)
}

pub fn transition_identities() -> Check {
    let ci = GammaCase::I { r: 1, a_r: int(3) };
    let cii = GammaCase::II { s: 1, b_s: int(2) };
    let mut bad = Vec::new();
    for (kind, c) in [(TransitionKind::Frak, &ci), (TransitionKind::Erak, &ci), (TransitionKind::Arak, &cii), (TransitionKind::Brak, &cii)] {
        for n in 1..=4 {
            for m in 0..n {
                let t: Transition = transition_solutions(kind, m, n, c).expect("0 <= m < n");
                let res = t.residual(c);
                if !res.is_zero() {
                    bad.push(format!("{kind}^{m}_{n}: residual {res}"));
                }
            }
        }
    }
    Check::new("transition identities", bad)
}

pub const SUITES: [&str; 4] = ["structure", "integrals", "cases", "examples"];

pub fn suite(name: &str) -> Option<Vec<Check>> {
    Some(match name {
        "structure" => vec![triad_relations(), structure_oracle(6), bt_functoriality(5)],
        "integrals" => vec![conservative_properties(8, 20, 17)],
        "cases" => vec![
            vanishing_patterns(2, 8, 1),
            kernel_certification(),
            gamma_formulas(),
            transition_identities(),
            sequence_properties(20, 12),
        ],
        "examples" => vec![
            ks_regression(),
            rossler_regression(),
            cubic_closed_form_oracle(50, 3),
            cubic_snf_agreement(20, 9),
        ],
        "all" => SUITES.iter().flat_map(|s| suite(s).unwrap_or_default()).collect(),
        _ => return None,
    })
}
