//! The JSON input document. Rationals are strings (`"p"` or `"p/q"`).

use crate::CliError;
use exactpoly::{parse_rational, Monomial, PolyVectorField, Polynomial, Rational, Vars};
use liebasis::{Family, NFElement, Symbol};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// One term `coefficient * x^i y^j z^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term(pub String, pub [u32; 3]);

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    /// Exactly three names; the keys of `equations`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub variables: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub equations: BTreeMap<String, Vec<Term>>,
    /// A basis element such as `{"Θ[0,0]": "1", "F[-1,0]": "1/2"}`, used in
    /// place of `equations`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub style: Option<String>,
}

pub fn parse_coeff(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Malformed(e.to_string()))
}

/// `F[l,k]`, `E[l,k]`, `Θ[l,k]` (also `T[l,k]`).
pub fn parse_symbol(s: &str) -> Result<Symbol, CliError> {
    let bad = || CliError::Malformed(format!("cannot parse basis symbol {s:?}"));
    let t = s.trim();
    let open = t.find('[').ok_or_else(bad)?;
    let family = match &t[..open] {
        "F" => Family::F,
        "E" => Family::E,
        "Θ" | "T" | "Theta" => Family::Theta,
        _ => return Err(bad()),
    };
    let inner = t[open + 1..].strip_suffix(']').ok_or_else(bad)?;
    let (l, k) = inner.split_once(',').ok_or_else(bad)?;
    let l: i64 = l.trim().parse().map_err(|_| bad())?;
    let k: i64 = k.trim().parse().map_err(|_| bad())?;
    Symbol::new(family, l, k).map_err(|e| CliError::Malformed(e.to_string()))
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<InputDocument, CliError> {
        let doc: InputDocument = serde_json::from_str(text).map_err(|e| CliError::Malformed(e.to_string()))?;
        doc.check()?;
        Ok(doc)
    }

    fn check(&self) -> Result<(), CliError> {
        match (&self.element, self.equations.is_empty()) {
            (Some(_), false) => return Err(CliError::Malformed("give either equations or element, not both".into())),
            (None, true) => return Err(CliError::Malformed("no equations and no element".into())),
            (Some(e), true) => {
                for (s, c) in e {
                    parse_symbol(s)?;
                    parse_coeff(c)?;
                }
                return Ok(());
            }
            (None, false) => {}
        }
        if self.variables.len() != 3 {
            return Err(CliError::Malformed(format!("expected 3 variables, got {}", self.variables.len())));
        }
        let mut seen = self.variables.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != 3 {
            return Err(CliError::Malformed("variable names must be distinct".into()));
        }
        for k in self.equations.keys() {
            if !self.variables.contains(k) {
                return Err(CliError::Malformed(format!("equation for undeclared variable {k:?}")));
            }
        }
        for terms in self.equations.values() {
            for Term(c, _) in terms {
                parse_coeff(c)?;
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Result<Option<PolyVectorField>, CliError> {
        if self.equations.is_empty() {
            return Ok(None);
        }
        let vars = Vars::new(&self.variables);
        let mut comps = Vec::new();
        for name in &self.variables {
            let mut p = Polynomial::zero(&vars);
            for Term(c, e) in self.equations.get(name).map(Vec::as_slice).unwrap_or(&[]) {
                p.add_term(Monomial::new(e), parse_coeff(c)?);
            }
            comps.push(p);
        }
        PolyVectorField::new(&vars, comps).map(Some).map_err(|e| CliError::Malformed(e.to_string()))
    }

    pub fn basis_element(&self) -> Result<Option<NFElement>, CliError> {
        let Some(map) = &self.element else { return Ok(None) };
        let mut e = NFElement::zero();
        for (s, c) in map {
            e.add_term(parse_symbol(s)?, parse_coeff(c)?);
        }
        Ok(Some(e))
    }

    /// The document describing `v` term by term.
    pub fn from_field(label: &str, v: &PolyVectorField, degree: Option<u32>) -> InputDocument {
        let variables: Vec<String> = v.vars().names().to_vec();
        let mut equations = BTreeMap::new();
        for (name, comp) in variables.iter().zip(v.comps()) {
            let terms = comp
                .terms()
                .map(|(m, c)| Term(c.to_string(), [m.exp(0), m.exp(1), m.exp(2)]))
                .collect();
            equations.insert(name.clone(), terms);
        }
        InputDocument {
            label: Some(label.to_string()),
            variables,
            equations,
            element: None,
            degree,
            style: None,
        }
    }
}
