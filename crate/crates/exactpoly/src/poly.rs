use crate::{Monomial, PolyError, Rational};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Ordered tuple of variable names shared by every polynomial in a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Vars {
        assert!(
            (1..=3).contains(&names.len()),
            "between one and three variables are supported"
        );
        Vars(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    /// `(x, y, z)` with `x` the zero-eigenvalue direction.
    pub fn xyz() -> Vars {
        Vars::new(&["x", "y", "z"])
    }

    /// Cylindrical reduction coordinates `(x, rho)`.
    pub fn planar() -> Vars {
        Vars::new(&["x", "rho"])
    }

    /// Bogdanov-Takens plane `(xbar, ybar)`.
    pub fn bt() -> Vars {
        Vars::new(&["xbar", "ybar"])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub(crate) fn same(&self, other: &Vars) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }

    pub(crate) fn check(&self, other: &Vars) -> Result<(), PolyError> {
        if self.same(other) {
            Ok(())
        } else {
            Err(PolyError::VarMismatch {
                left: self.0.join(","),
                right: other.0.join(","),
            })
        }
    }
}

impl fmt::Display for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.join(", "))
    }
}

/// Sparse polynomial with exact rational coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &Vars) -> Polynomial {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Vars, c: Rational) -> Polynomial {
        Polynomial::monomial(vars, &[], c)
    }

    pub fn var(vars: &Vars, i: usize) -> Polynomial {
        assert!(i < vars.len());
        let mut e = [0u32; 3];
        e[i] = 1;
        Polynomial::monomial(vars, &e[..vars.len()], Rational::one())
    }

    pub fn monomial(vars: &Vars, exps: &[u32], c: Rational) -> Polynomial {
        assert!(exps.len() <= vars.len(), "exponent tuple longer than variable tuple");
        let mut p = Polynomial::zero(vars);
        p.add_term(Monomial::new(exps), c);
        p
    }

    pub fn from_terms<I>(vars: &Vars, terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.vars.check(&other.vars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.vars.check(&other.vars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.vars.check(&other.vars)?;
        let mut out = Polynomial::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Polynomial::constant(&self.vars, Rational::one());
        for _ in 0..n {
            out = out.mul(self).expect("same ring");
        }
        out
    }

    pub fn derivative(&self, i: usize) -> Polynomial {
        assert!(i < self.vars.len());
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            if let Some((e, lowered)) = m.diff(i) {
                out.add_term(lowered, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Drops every term of total degree above `d`.
    pub fn truncate(&self, d: u32) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn homogeneous(&self, d: u32) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Substitutes `subs[i]` for variable `i`; all substitutions share one target ring.
    pub fn compose(&self, subs: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if subs.len() != self.vars.len() {
            return Err(PolyError::Arity {
                expected: self.vars.len(),
                got: subs.len(),
            });
        }
        let target = subs[0].vars.clone();
        for s in subs {
            target.check(&s.vars)?;
        }
        let mut powers: Vec<Vec<Polynomial>> = subs
            .iter()
            .map(|s| vec![Polynomial::constant(&target, Rational::one()), s.clone()])
            .collect();
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&target, c.clone());
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exp(i) as usize;
                while pw.len() <= e {
                    let next = pw.last().unwrap().mul(&subs[i])?;
                    pw.push(next);
                }
                if e > 0 {
                    term = term.mul(&pw[e])?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Coefficients of the degree-`d` part, listed in [`Monomial::all_of_degree`] order.
    pub fn coefficient_vector(&self, d: u32) -> Vec<Rational> {
        Monomial::all_of_degree(self.vars.len(), d)
            .iter()
            .map(|m| self.coeff(m))
            .collect()
    }
}

fn fmt_coeff_monomial(
    f: &mut fmt::Formatter<'_>,
    vars: &Vars,
    m: &Monomial,
    c: &Rational,
    first: bool,
) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {} ", if neg { "-" } else { "+" })?;
    }
    let mut factors = Vec::new();
    for (i, name) in vars.names().iter().enumerate() {
        match m.exp(i) {
            0 => {}
            1 => factors.push(name.clone()),
            e => factors.push(format!("{name}^{e}")),
        }
    }
    if factors.is_empty() {
        return write!(f, "{abs}");
    }
    if !abs.is_one() {
        write!(f, "{abs}*")?;
    }
    write!(f, "{}", factors.join("*"))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            fmt_coeff_monomial(f, &self.vars, m, c, i == 0)?;
        }
        Ok(())
    }
}

macro_rules! panicking_op {
    ($tr:ident, $method:ident, $inner:ident) => {
        /// Panics when the variable tuples differ; use the named method for a `Result`.
        impl std::ops::$tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                Polynomial::$inner(self, rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

panicking_op!(Add, add, add);
panicking_op!(Sub, sub, sub);
panicking_op!(Mul, mul, mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}
