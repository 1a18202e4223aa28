//! Transition solutions `𝔉, 𝔈` (case i) and `𝔄, 𝔅` (case ii).

use crate::gamma::GammaCase;
use crate::sequences::{eta, g_sequence, pochhammer};
use crate::HyperError;
use exactpoly::Rational;
use liebasis::{bracket, Family, NFElement, Symbol};
use num::{BigInt, One};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransitionKind {
    /// `𝔉^m_n`, removes `F[m,n]` against `𝔽_r`
    Frak,
    /// `𝔈^m_n`, removes `E[m,n]` against `𝔽_r`
    Erak,
    /// `𝔄^m_n`, removes `F[m,n]` against `𝔼_s`
    Arak,
    /// `𝔅^m_n`, removes `E[m,n]` against `𝔼_s`
    Brak,
}

impl fmt::Display for TransitionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TransitionKind::Frak => "𝔉",
            TransitionKind::Erak => "𝔈",
            TransitionKind::Arak => "𝔄",
            TransitionKind::Brak => "𝔅",
        })
    }
}

fn z(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn pow(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num::pow::pow(x.clone(), e as usize)
    } else {
        num::pow::pow(x.recip(), (-e) as usize)
    }
}

fn poch(a: i64, k: i64, b: i64) -> Rational {
    pochhammer(&z(a), k, &z(b))
}

fn put(out: &mut NFElement, f: Family, l: i64, k: i64, c: Rational) {
    if let Ok(s) = Symbol::new(f, l, k) {
        out.add_term(s, c);
    }
}

/// A transition solution together with the single-term right-hand side it is
/// claimed to produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    pub kind: TransitionKind,
    pub m: i64,
    pub n: i64,
    pub solution: NFElement,
    pub claimed: NFElement,
}

impl Transition {
    /// The term being removed, `F[m,n]` or `E[m,n]`.
    pub fn source(&self) -> NFElement {
        let f = match self.kind {
            TransitionKind::Frak | TransitionKind::Arak => Family::F,
            TransitionKind::Erak | TransitionKind::Brak => Family::E,
        };
        let mut out = NFElement::zero();
        put(&mut out, f, self.m, self.n, Rational::one());
        out
    }

    /// `source + [solution, lead] - claimed`; zero when the identity holds.
    pub fn residual(&self, case: &GammaCase) -> NFElement {
        self.source().add(&bracket(&self.solution, &case.lead())).sub(&self.claimed)
    }
}

/// Builds the transition solution of `kind` for `0 <= m < n`. `𝔉`/`𝔈` need
/// case-i leading values, `𝔄`/`𝔅` case-ii ones.
pub fn transition_solutions(kind: TransitionKind, m: i64, n: i64, case: &GammaCase) -> Result<Transition, HyperError> {
    if !(0 <= m && m < n) {
        return Err(HyperError::Input(format!("transition indices need 0 <= m < n, got m={m}, n={n}")));
    }
    let mut sol = NFElement::zero();
    let mut claimed = NFElement::zero();
    let d = n - m;
    match (kind, case) {
        (TransitionKind::Frak, GammaCase::I { r, a_r }) => {
            let r = *r;
            for l in 0..d {
                let c = pow(a_r, l) * poch((m - n) * (r + 1) + m + 2, l - 1, 2 * (r + 1))
                    / (pow(&z(2), l + 1) * z(m + 2) * poch(m + r + 3, l, r + 1));
                put(&mut sol, Family::F, m + l * r + l + 1, n + l, c);
            }
            let top = r * n - r * m + n;
            let c = pow(a_r, d) * z(r * d + n - 2 * r) * poch((m - n) * (r + 1) + m + 2, d - 1, 2 * (r + 1))
                / (pow(&z(2), d) * z(m + 2) * poch(m + r + 3, d - 1, r + 1));
            put(&mut claimed, Family::F, top, top, c);
        }
        (TransitionKind::Erak, GammaCase::I { r, a_r }) => {
            let r = *r;
            let g = g_sequence(m, n, r, d as usize);
            let base = (n - m - 1) * (r + 1) - m - 1;
            for l in 1..d {
                put(&mut sol, Family::F, m + l * r + l + 1, n + l, &g[l as usize] * pow(a_r, l));
            }
            for l in 0..d {
                let c = z(n + 2) * poch(base, l, -2 * (r + 1)) * pow(a_r, l)
                    / (pow(&z(2), l) * z(n + 2 + l * r) * poch(m + r + 2, l, r + 1));
                put(&mut sol, Family::E, m + l * r + l + 1, n + l, c);
            }
            let top = r * n - r * m + n;
            let ce = pow(a_r, d - 1) * z(n + 2) * poch(base, d - 1, -2 * (r + 1))
                / (pow(&z(2), d - 1) * z(n + 2 + r * (d - 1)) * poch(m + r + 2, d - 1, r + 1));
            put(&mut claimed, Family::E, top, top, ce);
            put(&mut claimed, Family::F, top, top, pow(a_r, d - 1) * &g[(d - 1) as usize]);
        }
        (TransitionKind::Arak, GammaCase::II { s, b_s }) => {
            let s = *s;
            let nb = -b_s.clone();
            for l in 1..d {
                let num = z(s + 2)
                    * poch(n, l - 1, s)
                    * (z(n + l * s + 2) * poch(m + 2, l, s + 1) - z(n + 2) * poch(m + s + 2, l, s + 1));
                let den = pow(&nb, -l) * pow(&z(2), l + 1) * z(n + l * s + 2) * poch((m + s + 2) * (m + 2), l, s + 1);
                put(&mut sol, Family::E, m + l * s + l + 1, n + l * s, num / den);
            }
            for l in 0..d {
                let c = pow(&nb, l) * z(n + 2) * poch(n, l + 1, s)
                    / (pow(&z(2), l + 1) * z(n + l * s + 2) * poch(m + 2, l + 1, s + 1));
                put(&mut sol, Family::F, m + l * s + l + 1, n + l * s, c);
            }
            let top = s * n - s * m + n;
            let ce = z(s + 2) * poch(n, d - 1, s) * eta(m, n, s) / (pow(&nb, m - n) * pow(&z(2), d));
            let cf = pow(&nb, d) * poch(n, d, s) * z(n + 2) / (pow(&z(2), d) * poch(m + 2, d + 1, s + 1));
            put(&mut claimed, Family::E, top, top, ce);
            put(&mut claimed, Family::F, top, top, cf);
        }
        (TransitionKind::Brak, GammaCase::II { s, b_s }) => {
            let s = *s;
            for l in 0..d {
                let c = pow(b_s, l) * poch(s - n, l, -s) / (pow(&z(2), l + 1) * z(m + 1) * poch(m + s + 2, l, s + 1));
                put(&mut sol, Family::E, m + l * s + l + 1, n + l * s, c);
            }
            let top = s * n - s * m + n;
            let c = pow(b_s, d) * poch(s - n, d, -s) / (pow(&z(2), d) * z(m + 1) * poch(m + s + 2, d - 1, s + 1));
            put(&mut claimed, Family::E, top, top, c);
        }
        (k, c) => {
            return Err(HyperError::Input(format!("transition {k} is not defined for {c:?}")));
        }
    }
    Ok(Transition { kind, m, n, solution: sol, claimed })
}
