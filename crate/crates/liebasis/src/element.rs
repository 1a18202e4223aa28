use crate::{BasisError, Family, Symbol};
use exactpoly::{parse_rational, Rational};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Sparse rational combination of basis symbols; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NFElement {
    terms: BTreeMap<Symbol, Rational>,
}

impl NFElement {
    pub fn zero() -> NFElement {
        NFElement::default()
    }

    pub fn term(sym: Symbol, c: Rational) -> NFElement {
        let mut e = NFElement::zero();
        e.add_term(sym, c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Symbol, Rational)>>(terms: I) -> NFElement {
        let mut e = NFElement::zero();
        for (s, c) in terms {
            e.add_term(s, c);
        }
        e
    }

    pub fn add_term(&mut self, sym: Symbol, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(sym).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&sym);
        }
    }

    pub fn set(&mut self, sym: Symbol, c: Rational) {
        if c.is_zero() {
            self.terms.remove(&sym);
        } else {
            self.terms.insert(sym, c);
        }
    }

    pub fn coeff(&self, sym: &Symbol) -> Rational {
        self.terms.get(sym).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Symbol, &Rational)> {
        self.terms.iter()
    }

    pub fn symbols(&self) -> impl Iterator<Item = &Symbol> {
        self.terms.keys()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &NFElement) -> NFElement {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(*s, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NFElement) -> NFElement {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(*s, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> NFElement {
        if c.is_zero() {
            return NFElement::zero();
        }
        NFElement {
            terms: self.terms.iter().map(|(s, v)| (*s, v * c)).collect(),
        }
    }

    /// Keeps the terms whose symbol satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&Symbol) -> bool) -> NFElement {
        NFElement {
            terms: self
                .terms
                .iter()
                .filter(|(s, _)| keep(s))
                .map(|(s, c)| (*s, c.clone()))
                .collect(),
        }
    }

    /// Drops terms whose realization has degree above `d`.
    pub fn truncate_degree(&self, d: i64) -> NFElement {
        self.filter(|s| s.degree() <= d)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().map(Symbol::degree).max()
    }
}

impl fmt::Display for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(s, c)| format!("{c} * {s}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

fn parse_symbol(s: &str) -> Result<Symbol, BasisError> {
    let bad = || BasisError::Parse(format!("bad symbol {s:?}"));
    let (head, rest) = s.split_once('[').ok_or_else(bad)?;
    let family = match head.trim() {
        "F" => Family::F,
        "E" => Family::E,
        "Θ" | "T" | "Theta" => Family::Theta,
        _ => return Err(bad()),
    };
    let inner = rest.strip_suffix(']').ok_or_else(bad)?;
    let (l, k) = inner.split_once(',').ok_or_else(bad)?;
    let l: i64 = l.trim().parse().map_err(|_| bad())?;
    let k: i64 = k.trim().parse().map_err(|_| bad())?;
    Symbol::new(family, l, k)
}

/// Parses the rendering produced by `Display`, e.g. `1/2 * F[-1,0] + -4/3 * F[1,1]`.
/// A bare symbol stands for coefficient one.
impl FromStr for NFElement {
    type Err = BasisError;

    fn from_str(s: &str) -> Result<NFElement, BasisError> {
        let s = s.trim();
        if s == "0" {
            return Ok(NFElement::zero());
        }
        let mut out = NFElement::zero();
        for part in s.split(" + ") {
            let part = part.trim();
            let (c, sym) = match part.split_once('*') {
                Some((c, sym)) => (
                    parse_rational(c.trim()).map_err(|e| BasisError::Parse(e.to_string()))?,
                    sym,
                ),
                None => match part.strip_prefix('-') {
                    Some(sym) => (-Rational::one(), sym),
                    None => (Rational::one(), part),
                },
            };
            out.add_term(parse_symbol(sym.trim())?, c);
        }
        Ok(out)
    }
}
