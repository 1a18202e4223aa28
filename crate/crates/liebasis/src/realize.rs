use crate::{BasisError, Family, NFElement, Symbol};
use exactpoly::{Monomial, PolyVectorField, Polynomial, Rational, Vars};
use num::{BigInt, One, Zero};
use std::collections::BTreeMap;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `x^a (y²+z²)^j` over `(x, y, z)`.
pub(crate) fn x_rho2(vars: &Vars, a: u32, j: u32) -> Polynomial {
    let g = Polynomial::from_terms(
        vars,
        [
            (Monomial::new(&[0, 2, 0]), Rational::one()),
            (Monomial::new(&[0, 0, 2]), Rational::one()),
        ],
    );
    Polynomial::monomial(vars, &[a], Rational::one())
        .mul(&g.pow(j))
        .expect("same ring")
}

/// Coordinate form of a basis symbol over `(x, y, z)`.
pub fn realize(sym: &Symbol) -> PolyVectorField {
    let v = Vars::xyz();
    let (l, k) = (sym.l(), sym.k());
    let j = (k - l) as u32;
    let x = Polynomial::var(&v, 0);
    let y = Polynomial::var(&v, 1);
    let z = Polynomial::var(&v, 2);
    let comps = match sym.family() {
        Family::F if l == -1 => vec![
            x_rho2(&v, 0, j).scale(&r(k + 2, 1)),
            Polynomial::zero(&v),
            Polynomial::zero(&v),
        ],
        Family::F => {
            let p = x_rho2(&v, l as u32, j);
            let side = r(-(l + 1), 2);
            vec![
                (&p * &x).scale(&r(k - l + 1, 1)),
                (&p * &y).scale(&side),
                (&p * &z).scale(&side),
            ]
        }
        Family::E => {
            let p = x_rho2(&v, l as u32, j);
            let half = r(1, 2);
            vec![&p * &x, (&p * &y).scale(&half), (&p * &z).scale(&half)]
        }
        Family::Theta => {
            let p = x_rho2(&v, l as u32, j);
            vec![Polynomial::zero(&v), &p * &z, -&(&p * &y)]
        }
    };
    PolyVectorField::new(&v, comps).expect("three components over (x, y, z)")
}

pub fn realize_element(e: &NFElement) -> PolyVectorField {
    let mut out = PolyVectorField::zero(&Vars::xyz());
    for (s, c) in e.iter() {
        out = out.add(&realize(s).scale(c)).expect("same ring");
    }
    out
}

/// Inverse of [`realize_element`] on fields of classical-normal-form shape.
///
/// The `x`-component must be a polynomial in `x` and `y²+z²`; the `y` and `z`
/// components must be `B y + C z` and `B z - C y` with `B`, `C` polynomials
/// in `x` and `y²+z²`. Anything else is reported with the first offending term.
pub fn decompose_cnf(v: &PolyVectorField) -> Result<NFElement, BasisError> {
    if v.vars() != &Vars::xyz() {
        return Err(BasisError::Precondition(format!(
            "expected a field over (x, y, z), got {}",
            v.vars()
        )));
    }
    // blocks keyed by (power of x, power of y²+z²)
    let mut a: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
    let mut b: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
    let mut c: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
    for (m, coef) in v.comp(0).terms() {
        if m.exp(2) == 0 && m.exp(1) % 2 == 0 {
            a.insert((m.exp(0), m.exp(1) / 2), coef.clone());
        }
    }
    for (m, coef) in v.comp(1).terms() {
        match (m.exp(1) % 2, m.exp(2)) {
            (1, 0) => {
                b.insert((m.exp(0), m.exp(1) / 2), coef.clone());
            }
            (0, 1) => {
                c.insert((m.exp(0), m.exp(1) / 2), coef.clone());
            }
            _ => {}
        }
    }

    let mut out = NFElement::zero();
    let keys: std::collections::BTreeSet<(i64, i64)> = a
        .keys()
        .map(|&(p, j)| (p as i64 - 1, j as i64))
        .chain(b.keys().map(|&(l, j)| (l as i64, j as i64)))
        .collect();
    for (l, j) in keys {
        let k = l + j;
        let av = if l + 1 >= 0 {
            a.get(&((l + 1) as u32, j as u32)).cloned().unwrap_or_else(Rational::zero)
        } else {
            Rational::zero()
        };
        if l == -1 {
            if j == 0 {
                return Err(BasisError::Shape {
                    component: "x".into(),
                    term: format!("{av} (constant term)"),
                });
            }
            out.add_term(Symbol::new(Family::F, -1, k)?, av / r(k + 2, 1));
            continue;
        }
        let bv = b.get(&(l as u32, j as u32)).cloned().unwrap_or_else(Rational::zero);
        // A = (j+1) f + e and B = -(l+1)/2 f + e/2, determinant (k+2)/2
        let f = (&av - &bv * r(2, 1)) / r(k + 2, 1);
        let e = &bv * r(2, 1) + &f * r(l + 1, 1);
        out.add_term(Symbol::new(Family::F, l, k)?, f);
        out.add_term(Symbol::new(Family::E, l, k)?, e);
    }
    for (&(l, j), coef) in &c {
        out.add_term(Symbol::new(Family::Theta, l as i64, (l + j) as i64)?, coef.clone());
    }

    let residual = v.sub(&realize_element(&out))?;
    for (i, name) in ["x", "y", "z"].iter().enumerate() {
        if let Some((m, coef)) = residual.comp(i).terms().next() {
            let term = Polynomial::monomial(&Vars::xyz(), m.exps(), coef.clone());
            return Err(BasisError::Shape {
                component: (*name).into(),
                term: term.to_string(),
            });
        }
    }
    Ok(out)
}
