use crate::HyperError;
use exactpoly::Rational;
use liebasis::{Family, GradingScheme, NFElement, Symbol};
use num::Zero;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseVariant {
    /// `r < s`
    CaseI,
    /// `s < r`
    CaseII,
    /// `r = s`
    CaseIII,
    /// no `a_k` or no `b_k` up to the truncation
    Degenerate,
}

impl fmt::Display for CaseVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseVariant::CaseI => "i",
            CaseVariant::CaseII => "ii",
            CaseVariant::CaseIII => "iii",
            CaseVariant::Degenerate => "degenerate",
        })
    }
}

/// Case of a second-level normal form with its indices and leading values.
///
/// `r`, `s`, `p` are the smallest `k >= 1` with `a_k`, `b_k`, `c_k` nonzero
/// (coefficients of `F[k,k]`, `E[k,k]`, `Θ[k,k]`). `r2`, `s2` are the next
/// nonzero indices after `r` and `s`; `p1` the first nonzero `c_j` with `j >= p`.
/// The case-i pipeline refreshes `r2`, `p1` from the `(r+1)`-th level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseTag {
    pub variant: CaseVariant,
    pub r: Option<i64>,
    pub s: Option<i64>,
    pub p: Option<i64>,
    pub r2: Option<i64>,
    pub s2: Option<i64>,
    pub p1: Option<i64>,
    pub a0: Rational,
    pub a_r: Option<Rational>,
    pub b_s: Option<Rational>,
    /// `a_s` in case iii.
    pub a_s: Option<Rational>,
    pub diagnostic: Option<String>,
}

fn first(e: &NFElement, f: fn(i64, i64) -> Symbol, from: i64, n: i64) -> Option<i64> {
    (from..=n).find(|&k| !e.coeff(&f(k, k)).is_zero())
}

/// Second-level shape: only `F[-1,0]` and diagonal symbols (Θ[0,0] allowed).
pub fn check_second_level_shape(e: &NFElement) -> Result<(), HyperError> {
    if let Some(s) = e.symbols().find(|s| !s.is_diagonal()) {
        return Err(HyperError::Precondition(format!(
            "element is not in second-level shape: off-diagonal term {s}"
        )));
    }
    Ok(())
}

/// Classifies a second-level normal form using indices `k <= n`.
pub fn classify(e: &NFElement, n: i64) -> Result<CaseTag, HyperError> {
    check_second_level_shape(e)?;
    let r = first(e, Symbol::f, 1, n);
    let s = first(e, Symbol::e, 1, n);
    let p = first(e, Symbol::theta, 1, n);
    let r2 = r.and_then(|r| first(e, Symbol::f, r + 1, n));
    let s2 = s.and_then(|s| first(e, Symbol::e, s + 1, n));
    let p1 = p;
    let variant = match (r, s) {
        (Some(r), Some(s)) if r < s => CaseVariant::CaseI,
        (Some(r), Some(s)) if s < r => CaseVariant::CaseII,
        (Some(_), Some(_)) => CaseVariant::CaseIII,
        _ => CaseVariant::Degenerate,
    };
    let diagnostic = (variant == CaseVariant::Degenerate).then(|| {
        let missing = match (r, s) {
            (None, None) => "all a_k and all b_k vanish",
            (None, _) => "all a_k vanish",
            _ => "all b_k vanish",
        };
        format!("{missing} up to k = {n}; the case analysis assumes some a_l ≠ 0 and some b_k ≠ 0")
    });
    let coef = |f: fn(i64, i64) -> Symbol, k: Option<i64>| k.map(|k| e.coeff(&f(k, k)));
    Ok(CaseTag {
        variant,
        r,
        s,
        p,
        r2,
        s2,
        p1,
        a0: e.coeff(&Symbol::f(-1, 0)),
        a_r: coef(Symbol::f, r),
        b_s: coef(Symbol::e, s),
        a_s: if variant == CaseVariant::CaseIII { coef(Symbol::f, s) } else { None },
        diagnostic,
    })
}

impl CaseTag {
    /// Grading used by the infinite-level sweep (before any case-i update).
    pub fn grading(&self) -> Option<GradingScheme> {
        match self.variant {
            CaseVariant::CaseI => Some(GradingScheme::CaseI { r: self.r? }),
            CaseVariant::CaseII => Some(GradingScheme::CaseII { s: self.s? }),
            CaseVariant::CaseIII => Some(GradingScheme::CaseIII { s: self.s? }),
            CaseVariant::Degenerate => None,
        }
    }

    /// Leading part: `F[-1,0] + a_r F[r,r]`, `F[-1,0] + b_s E[s,s]` or
    /// `F[-1,0] + a_s F[s,s] + b_s E[s,s]`, with `a0` in front of `F[-1,0]`.
    pub fn lead(&self) -> Option<NFElement> {
        let mut out = NFElement::term(Symbol::f(-1, 0), self.a0.clone());
        match self.variant {
            CaseVariant::CaseI => out.add_term(Symbol::f(self.r?, self.r?), self.a_r.clone()?),
            CaseVariant::CaseII => out.add_term(Symbol::e(self.s?, self.s?), self.b_s.clone()?),
            CaseVariant::CaseIII => {
                let s = self.s?;
                out.add_term(Symbol::f(s, s), self.a_s.clone()?);
                out.add_term(Symbol::e(s, s), self.b_s.clone()?);
            }
            CaseVariant::Degenerate => return None,
        }
        Some(out)
    }

    /// Index of the leading grade (`r` in case i, `s` otherwise).
    pub fn base_index(&self) -> Option<i64> {
        match self.variant {
            CaseVariant::CaseI => self.r,
            CaseVariant::CaseII | CaseVariant::CaseIII => self.s,
            CaseVariant::Degenerate => None,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = |x: Option<i64>| x.map_or("-".to_string(), |v| v.to_string());
        write!(
            f,
            "case {} (r={}, s={}, p={}, r2={}, s2={}, p1={})",
            self.variant,
            o(self.r),
            o(self.s),
            o(self.p),
            o(self.r2),
            o(self.s2),
            o(self.p1)
        )
    }
}

/// Diagonal coefficient maps `k -> a_k`, `k -> b_k`, `k -> c_k` for `k >= 1`.
pub fn diagonal_coefficients(e: &NFElement) -> [std::collections::BTreeMap<i64, Rational>; 3] {
    let mut out: [std::collections::BTreeMap<i64, Rational>; 3] = Default::default();
    for (s, c) in e.iter() {
        if s.l() == s.k() && s.k() >= 1 && !c.is_zero() {
            let i = match s.family() {
                Family::F => 0,
                Family::E => 1,
                Family::Theta => 2,
            };
            out[i].insert(s.k(), c.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactpoly::int;

    fn el(terms: &[(Symbol, i64)]) -> NFElement {
        NFElement::from_terms(terms.iter().map(|(s, c)| (*s, int(*c))))
    }

    #[test]
    fn variants() {
        let lead = (Symbol::f(-1, 0), 1);
        let t = classify(&el(&[lead, (Symbol::f(1, 1), 2), (Symbol::e(2, 2), 3)]), 4).unwrap();
        assert_eq!((t.variant, t.r, t.s), (CaseVariant::CaseI, Some(1), Some(2)));
        let t = classify(&el(&[lead, (Symbol::f(2, 2), 2), (Symbol::e(1, 1), 3)]), 4).unwrap();
        assert_eq!((t.variant, t.s), (CaseVariant::CaseII, Some(1)));
        let t = classify(&el(&[lead, (Symbol::f(1, 1), 2), (Symbol::e(1, 1), 3), (Symbol::f(3, 3), 1)]), 4).unwrap();
        assert_eq!((t.variant, t.s, t.r2), (CaseVariant::CaseIII, Some(1), Some(3)));
        let t = classify(&el(&[lead, (Symbol::f(1, 1), 2)]), 4).unwrap();
        assert_eq!(t.variant, CaseVariant::Degenerate);
        assert!(t.diagnostic.unwrap().contains("b_k"));
        assert!(classify(&el(&[lead, (Symbol::f(0, 1), 1)]), 4).is_err());
    }
}
