//! Which diagonal coefficients the infinite level is supposed to eliminate,
//! per case and style, and a check of a computed form against them.

use crate::case::{diagonal_coefficients, CaseTag, CaseVariant};
use crate::Style;
use liebasis::{Family, NFElement, Symbol};
use std::fmt;

/// `family[k] = 0` for `k > above` with `k ≡ residue (mod modulus)`, or at the
/// single index `at` when set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroRule {
    pub family: Family,
    pub modulus: i64,
    pub residue: i64,
    pub above: i64,
    pub at: Option<i64>,
}

impl ZeroRule {
    fn modular(family: Family, modulus: i64, residue: i64, above: i64) -> ZeroRule {
        ZeroRule { family, modulus, residue: residue.rem_euclid(modulus), above, at: None }
    }

    fn single(family: Family, k: i64) -> ZeroRule {
        ZeroRule { family, modulus: 1, residue: 0, above: k - 1, at: Some(k) }
    }

    pub fn applies(&self, k: i64) -> bool {
        match self.at {
            Some(j) => k == j,
            None => k > self.above && k.rem_euclid(self.modulus) == self.residue,
        }
    }
}

impl fmt::Display for ZeroRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.family {
            Family::F => 'a',
            Family::E => 'b',
            Family::Theta => 'c',
        };
        match self.at {
            Some(j) => write!(f, "{c}_{j} = 0"),
            None => write!(f, "{c}_k = 0 for k > {}, k ≡ {} mod {}", self.above, self.residue, self.modulus),
        }
    }
}

/// The vanishing pattern claimed for a tagged form in `style`. Case ii in
/// style I uses the weaker pattern stated for the lemma; a degenerate tag has
/// no rules.
pub fn asserted_zeros(tag: &CaseTag, style: Style) -> Vec<ZeroRule> {
    use Family::{Theta, E, F};
    let (r, s) = (tag.r.unwrap_or(0), tag.s.unwrap_or(0));
    match tag.variant {
        CaseVariant::CaseIII => {
            let m = s + 1;
            let fam = if style == Style::I { E } else { F };
            vec![
                ZeroRule::modular(fam, m, m - 1, s),
                ZeroRule::modular(fam, m, 2 * s, s),
                ZeroRule::modular(Theta, m, m - 1, 0),
            ]
        }
        CaseVariant::CaseI => {
            let mm = 2 * (r + 1);
            let mut out = match style {
                Style::I => vec![
                    ZeroRule::modular(F, mm, r - 1, r),
                    ZeroRule::modular(F, mm, r, r),
                    ZeroRule::modular(E, mm, mm - 1, s),
                    ZeroRule::modular(E, mm, r + s, s),
                    ZeroRule::modular(Theta, mm, mm - 1, 0),
                ],
                Style::II => vec![
                    ZeroRule::modular(F, mm, r - 1, r),
                    ZeroRule::modular(F, mm, r, r),
                    ZeroRule::modular(F, mm, r + s, r),
                    ZeroRule::modular(E, mm, mm - 1, s),
                    ZeroRule::modular(Theta, mm, mm - 1, 0),
                ],
            };
            if let (Some(r2), Some(p1)) = (tag.r2, tag.p1) {
                if s >= r2 {
                    out.push(ZeroRule::modular(Theta, mm, r + p1, 0));
                }
            }
            out
        }
        CaseVariant::CaseII => {
            let m = s + 1;
            let mut out = match style {
                Style::II => vec![
                    ZeroRule::modular(F, m, 2 * s, r),
                    ZeroRule::modular(E, m, s, s),
                    ZeroRule::modular(Theta, m, s, 0),
                ],
                Style::I => vec![
                    ZeroRule::modular(E, m, 2 * s, s),
                    ZeroRule::modular(E, m, s, s),
                    ZeroRule::modular(Theta, m, s, 0),
                ],
            };
            if let Some(s2) = tag.s2 {
                let k = s * s + s2.min(r) + s;
                out.push(ZeroRule::single(if s2 < r { E } else { F }, k));
            } else {
                out.push(ZeroRule::single(F, s * s + r + s));
            }
            out
        }
        CaseVariant::Degenerate => Vec::new(),
    }
}

/// A nonzero coefficient that some rule says should be gone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub symbol: Symbol,
    pub rule: ZeroRule,
}

/// Diagonal terms of `e` with `1 <= k <= max_k` that break a rule.
pub fn vanishing_violations(e: &NFElement, tag: &CaseTag, style: Style, max_k: i64) -> Vec<Violation> {
    let rules = asserted_zeros(tag, style);
    let [a, b, c] = diagonal_coefficients(e);
    let mut out = Vec::new();
    for (fam, map) in [(Family::F, &a), (Family::E, &b), (Family::Theta, &c)] {
        for &k in map.keys().filter(|&&k| 1 <= k && k <= max_k) {
            if let Some(rule) = rules.iter().find(|z| z.family == fam && z.applies(k)) {
                let symbol = Symbol::new(fam, k, k).expect("diagonal symbols are permissible");
                out.push(Violation { symbol, rule: rule.clone() });
            }
        }
    }
    out
}
