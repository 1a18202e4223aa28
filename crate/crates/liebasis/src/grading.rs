use crate::{BasisError, Family, Symbol};
use std::fmt;

/// Grading functions on the basis. Each is additive under the bracket.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GradingScheme {
    /// `δ = k` on every family.
    SecondLevel,
    /// `r(k-l)+k` on F and E; Θ is shifted by `r+1`.
    CaseI { r: i64 },
    /// As `CaseI`, with the Θ shift replaced by `r2-p1-1`.
    CaseIUpdated { r: i64, r2: i64, p1: i64 },
    /// `s(k-l)+k` on F and E; Θ is shifted by `s+1`.
    CaseII { s: i64 },
    /// `s(k-l)+k` on F and E; `s(k-l+1)+k+1` on Θ.
    CaseIII { s: i64 },
}

impl GradingScheme {
    pub fn validate(&self) -> Result<(), BasisError> {
        let bad = |m: String| Err(BasisError::InvalidScheme(m));
        match *self {
            GradingScheme::SecondLevel => Ok(()),
            GradingScheme::CaseI { r } if r < 1 => bad(format!("r = {r} must be at least 1")),
            GradingScheme::CaseIUpdated { r, r2, p1 } => {
                if r < 1 {
                    bad(format!("r = {r} must be at least 1"))
                } else if r2 <= r {
                    bad(format!("r2 = {r2} must exceed r = {r}"))
                } else if p1 < 1 {
                    bad(format!("p1 = {p1} must be at least 1"))
                } else {
                    Ok(())
                }
            }
            GradingScheme::CaseII { s } | GradingScheme::CaseIII { s } if s < 1 => {
                bad(format!("s = {s} must be at least 1"))
            }
            _ => Ok(()),
        }
    }

    /// Grade of `sym`. The scheme is assumed valid; see [`checked_grade`](Self::checked_grade).
    pub fn grade(&self, sym: &Symbol) -> i64 {
        let (l, k) = (sym.l(), sym.k());
        let theta = sym.family() == Family::Theta;
        match *self {
            GradingScheme::SecondLevel => k,
            GradingScheme::CaseI { r } => r * (k - l) + k + if theta { r + 1 } else { 0 },
            GradingScheme::CaseIUpdated { r, r2, p1 } => {
                r * (k - l) + k + if theta { r2 - p1 - 1 } else { 0 }
            }
            GradingScheme::CaseII { s } => s * (k - l) + k + if theta { s + 1 } else { 0 },
            GradingScheme::CaseIII { s } => {
                if theta {
                    s * (k - l + 1) + k + 1
                } else {
                    s * (k - l) + k
                }
            }
        }
    }

    pub fn checked_grade(&self, sym: &Symbol) -> Result<i64, BasisError> {
        self.validate()?;
        Ok(self.grade(sym))
    }
}

impl fmt::Display for GradingScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradingScheme::SecondLevel => write!(f, "second-level"),
            GradingScheme::CaseI { r } => write!(f, "case-i(r={r})"),
            GradingScheme::CaseIUpdated { r, r2, p1 } => write!(f, "case-i-updated(r={r}, r2={r2}, p1={p1})"),
            GradingScheme::CaseII { s } => write!(f, "case-ii(s={s})"),
            GradingScheme::CaseIII { s } => write!(f, "case-iii(s={s})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_grades() {
        for k in 0..5 {
            assert_eq!(GradingScheme::SecondLevel.grade(&Symbol::f(k, k)), k);
        }
        let g = GradingScheme::CaseI { r: 2 };
        assert_eq!(g.grade(&Symbol::f(1, 3)), 2 * 2 + 3);
        let u = GradingScheme::CaseIUpdated { r: 1, r2: 3, p1: 1 };
        assert_eq!(u.grade(&Symbol::theta(2, 2)), 2 + 3 - 1 - 1);
        assert!(GradingScheme::CaseIUpdated { r: 2, r2: 2, p1: 1 }.checked_grade(&Symbol::f(0, 0)).is_err());
        assert!(GradingScheme::CaseII { s: 0 }.validate().is_err());
    }
}
