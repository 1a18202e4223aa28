//! The sl(2) triad `{M, N, H}` and the ad-orbits that define the basis.
//!
//! `M` has the denominator `y²+z²`, so fields here are stored as a polynomial
//! numerator over a power of `g = y²+z²`. Equality is tested by cross
//! multiplication; no division is ever performed.

use crate::realize::x_rho2;
use crate::{BasisError, Family, Symbol};
use exactpoly::{PolyError, PolyVectorField, Polynomial, Rational, Vars};
use num::{BigInt, One};

/// The field `num / (y²+z²)^den`.
#[derive(Clone, Debug)]
pub struct QuotientField {
    pub num: PolyVectorField,
    pub den: u32,
}

fn g() -> Polynomial {
    x_rho2(&Vars::xyz(), 0, 1)
}

impl QuotientField {
    pub fn polynomial(v: PolyVectorField) -> QuotientField {
        QuotientField { num: v, den: 0 }
    }

    pub fn scale(&self, c: &Rational) -> QuotientField {
        QuotientField {
            num: self.num.scale(c),
            den: self.den,
        }
    }

    /// `[A/g^a, B/g^b] = (g(A(B_i) - B(A_i)) - b B_i A(g) + a A_i B(g)) / g^(a+b+1)`.
    pub fn bracket(&self, other: &QuotientField) -> Result<QuotientField, PolyError> {
        let (a, b) = (self.den, other.den);
        let gg = g();
        let ag = self.num.apply_derivation(&gg)?;
        let bg = other.num.apply_derivation(&gg)?;
        let core = self.num.lie_bracket(&other.num)?;
        let v = Vars::xyz();
        let comps = (0..3)
            .map(|i| {
                let mut c = gg.mul(core.comp(i))?;
                c = c.sub(&other.num.comp(i).mul(&ag)?.scale(&Rational::from_integer(b.into())))?;
                c = c.add(&self.num.comp(i).mul(&bg)?.scale(&Rational::from_integer(a.into())))?;
                Ok(c)
            })
            .collect::<Result<Vec<_>, PolyError>>()?;
        Ok(QuotientField {
            num: PolyVectorField::new(&v, comps)?,
            den: a + b + 1,
        })
    }

    /// Exact equality of the represented rational fields.
    pub fn equals(&self, other: &QuotientField) -> bool {
        let gg = g();
        let lhs = self.num.comps().iter().map(|c| c * &gg.pow(other.den));
        let rhs = other.num.comps().iter().map(|c| c * &gg.pow(self.den));
        lhs.zip(rhs).all(|(a, b)| a == b)
    }

    pub fn equals_field(&self, v: &PolyVectorField) -> bool {
        self.equals(&QuotientField::polynomial(v.clone()))
    }
}

fn field(comps: [Polynomial; 3]) -> PolyVectorField {
    PolyVectorField::new(&Vars::xyz(), comps.to_vec()).expect("three components")
}

/// `M = -(xy ∂y + xz ∂z)/(y²+z²)`.
pub fn m() -> QuotientField {
    let v = Vars::xyz();
    QuotientField {
        num: field([
            Polynomial::zero(&v),
            Polynomial::monomial(&v, &[1, 1, 0], -Rational::one()),
            Polynomial::monomial(&v, &[1, 0, 1], -Rational::one()),
        ]),
        den: 1,
    }
}

/// `N = (y²+z²) ∂x`.
pub fn n() -> QuotientField {
    let v = Vars::xyz();
    QuotientField::polynomial(field([g(), Polynomial::zero(&v), Polynomial::zero(&v)]))
}

/// `H = 2x ∂x - y ∂y - z ∂z`.
pub fn h() -> QuotientField {
    let v = Vars::xyz();
    QuotientField::polynomial(field([
        Polynomial::monomial(&v, &[1, 0, 0], Rational::from_integer(2.into())),
        Polynomial::monomial(&v, &[0, 1, 0], -Rational::one()),
        Polynomial::monomial(&v, &[0, 0, 1], -Rational::one()),
    ]))
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// A basis symbol computed from its defining ad_M-orbit rather than the closed form.
pub fn orbit_realization(sym: &Symbol) -> Result<QuotientField, BasisError> {
    let v = Vars::xyz();
    let (l, k) = (sym.l(), sym.k());
    let gk = x_rho2(&v, 0, k as u32);
    let (seed, steps, coef) = match sym.family() {
        Family::F => {
            let seed = crate::realize(&Symbol::f(-1, 0));
            let sign = if (l + 1) % 2 == 0 { 1 } else { -1 };
            let c = Rational::new(
                factorial(k - l + 1) * sign,
                factorial(k + 2) * BigInt::from(2).pow((l + 1) as u32),
            );
            (seed, l + 1, c)
        }
        fam => {
            let seed = crate::realize(&Symbol::new(fam, 0, 0)?);
            let sign = if l % 2 == 0 { 1 } else { -1 };
            let c = Rational::new(factorial(k - l) * sign, factorial(k) * BigInt::from(2).pow(l as u32));
            (seed, l, c)
        }
    };
    let comps = seed
        .comps()
        .iter()
        .map(|p| p.mul(&gk))
        .collect::<Result<Vec<_>, _>>()?;
    let mut cur = QuotientField::polynomial(PolyVectorField::new(&v, comps)?);
    let mm = m();
    for _ in 0..steps {
        cur = mm.bracket(&cur)?;
    }
    Ok(cur.scale(&coef))
}
