use crate::case::{CaseTag, CaseVariant};
use crate::HyperError;
use exactpoly::Rational;
use liebasis::{bracket, extended_bracket, ExtendedSymbol, Family, NFElement, Symbol};
use num::{BigInt, One};

/// Leading part that defines a Γ operator; `F[-1,0]` always has coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaCase {
    /// `F[-1,0] + a_r F[r,r]`
    I { r: i64, a_r: Rational },
    /// `F[-1,0] + b_s E[s,s]`
    II { s: i64, b_s: Rational },
    /// `F[-1,0] + a_s F[s,s] + b_s E[s,s]`
    III { s: i64, a_s: Rational, b_s: Rational },
}

impl GammaCase {
    /// Leading values taken from a tag normalized to `a0 = 1`.
    pub fn from_tag(tag: &CaseTag) -> Result<GammaCase, HyperError> {
        let scale = |x: &Option<Rational>| x.as_ref().map(|v| v / &tag.a0);
        let missing = || HyperError::Precondition(format!("no Γ operator for {tag}"));
        match tag.variant {
            CaseVariant::CaseI => Ok(GammaCase::I { r: tag.r.ok_or_else(missing)?, a_r: scale(&tag.a_r).ok_or_else(missing)? }),
            CaseVariant::CaseII => Ok(GammaCase::II { s: tag.s.ok_or_else(missing)?, b_s: scale(&tag.b_s).ok_or_else(missing)? }),
            CaseVariant::CaseIII => Ok(GammaCase::III {
                s: tag.s.ok_or_else(missing)?,
                a_s: scale(&tag.a_s).ok_or_else(missing)?,
                b_s: scale(&tag.b_s).ok_or_else(missing)?,
            }),
            CaseVariant::Degenerate => Err(missing()),
        }
    }

    pub fn lead(&self) -> NFElement {
        let mut out = NFElement::term(Symbol::f(-1, 0), Rational::one());
        match self {
            GammaCase::I { r, a_r } => out.add_term(Symbol::f(*r, *r), a_r.clone()),
            GammaCase::II { s, b_s } => out.add_term(Symbol::e(*s, *s), b_s.clone()),
            GammaCase::III { s, a_s, b_s } => {
                out.add_term(Symbol::f(*s, *s), a_s.clone());
                out.add_term(Symbol::e(*s, *s), b_s.clone());
            }
        }
        out
    }

    /// The shift index (`r` or `s`).
    pub fn index(&self) -> i64 {
        match self {
            GammaCase::I { r, .. } => *r,
            GammaCase::II { s, .. } | GammaCase::III { s, .. } => *s,
        }
    }
}

/// `Γ(x) = [F[1,0], [lead, x]]`.
pub fn gamma(case: &GammaCase, x: &NFElement) -> Result<NFElement, HyperError> {
    Ok(extended_bracket(ExtendedSymbol::F10, &bracket(&case.lead(), x))?)
}

pub fn gamma_op(sym: Symbol, case: &GammaCase) -> Result<NFElement, HyperError> {
    Symbol::new(sym.family(), sym.l(), sym.k()).map_err(|e| HyperError::Input(e.to_string()))?;
    gamma(case, &NFElement::term(sym, Rational::one()))
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn z(n: i64) -> Rational {
    r(n, 1)
}

/// Γ of a single symbol from the closed forms in the case proofs.
pub fn gamma_printed(sym: Symbol, case: &GammaCase) -> NFElement {
    let (l, k) = (sym.l(), sym.k());
    let mut out = NFElement::zero();
    let mut put = |f: Family, l: i64, k: i64, c: Rational| {
        if let Ok(s) = Symbol::new(f, l, k) {
            out.add_term(s, c);
        }
    };
    use Family::{Theta, E, F};
    match (case, sym.family()) {
        (GammaCase::I { r: rr, a_r }, F) => {
            let rr = *rr;
            put(F, l, k, z(-4 * (l + 1) * (k - l + 2)));
            put(F, rr + l + 1, rr + k, a_r * z(2 * (k - l + 1) * (rr - l + (k - l) * (rr + 1))));
        }
        (GammaCase::I { r: rr, a_r }, E) => {
            let rr = *rr;
            put(E, l, k, z(-4 * l * (k - l + 1)));
            put(E, rr + l + 1, rr + k, a_r * r(2 * (k + 2) * (k - l) * ((k - l) * (rr + 1) - l), rr + k + 2));
            put(F, rr + l + 1, rr + k, a_r * r(2 * rr * (rr + 2) * (k - l + 1), rr + k + 2));
        }
        (GammaCase::I { r: rr, a_r }, Theta) => {
            let rr = *rr;
            put(Theta, l, k, z(4 * l * (l - k - 1)));
            put(Theta, rr + l + 1, rr + k, a_r * z(2 * (l - k) * (l * (rr + 2) - k * (rr + 1))));
        }
        (GammaCase::II { s, b_s }, F) => {
            let s = *s;
            put(F, l, k, z(-4 * (k - l + 2) * (l + 1)));
            put(F, s + l + 1, k + s, -(b_s * r(2 * k * (k + 2) * (k - l + 1), k + s + 2)));
            put(E, s + l + 1, k + s, b_s * r(2 * s * (k - l) * (s + 2) * (k - l + 1), k + s + 2));
        }
        (GammaCase::II { s, b_s }, E) => {
            let s = *s;
            put(E, l, k, z(-4 * l * (k - l + 1)));
            put(E, s + l + 1, k + s, -(b_s * z(2 * (k - s) * (k - l))));
        }
        (GammaCase::II { s, b_s }, Theta) => {
            let s = *s;
            put(Theta, l, k, z(-4 * l * (k - l + 1)));
            put(Theta, s + l + 1, k + s, b_s * z(k * (k + s)));
        }
        (GammaCase::III { s, a_s, b_s }, F) => {
            let s = *s;
            put(F, l, k, z(-2 * (k - l + 2) * (l + 1)));
            put(E, l + s + 1, k + s, b_s * r(2 * s * (s + 2) * (k - l) * (k - l + 1), k + s + 2));
            put(
                F,
                l + s + 1,
                k + s,
                a_s * z(2 * (k - l + 1) * ((k - l) * (s + 1) + s - l)) - b_s * r(2 * k * (k + 2) * (k - l + 1), k + s + 2),
            );
        }
        (GammaCase::III { s, a_s, b_s }, E) => {
            let s = *s;
            put(E, l, k, z(-2 * l * (k - l + 1)));
            put(F, l + s + 1, k + s, a_s * r(4 * s * (s + 2) * (k - l + 1), k + s + 2));
            let inner = a_s * r((k + 2) * (l - (k - l) * (s + 1)), k + s + 2) - b_s * z(k - s);
            put(E, l + s + 1, k + s, inner * z(-2 * (k - l)));
        }
        (GammaCase::III { s, a_s, b_s }, Theta) => {
            let s = *s;
            put(Theta, l, k, z(-2 * l * (k - l + 1)));
            put(Theta, l + s + 1, k + s, b_s * z(k * (k + s)) - a_s * z(2 * (k - l) * (l - (k - l) * (s + 1))));
        }
    }
    out
}

/// Symbols with `k <= max_k` on which the computed and printed Γ differ.
pub fn gamma_disagreements(case: &GammaCase, max_k: i64) -> Result<Vec<Symbol>, HyperError> {
    let mut bad = Vec::new();
    for s in Symbol::all_up_to(max_k) {
        if s.l() < s.k() && gamma_op(s, case)? != gamma_printed(s, case) {
            bad.push(s);
        }
    }
    Ok(bad)
}
