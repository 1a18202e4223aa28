//! Closed-form cubic coefficients and the cubic simplest normal form.
//!
//! Coefficients are indexed as in the `(z, y, x)` presentation
//! `ż = -y + Σ a_ijk z^i y^j x^k`, `ẏ = z + Σ b_ijk ...`, `ẋ = Σ c_ijk ...`.

use crate::{ClassicalError, HopfZeroSystem};
use exactpoly::{Monomial, PolyVectorField, Polynomial, Rational, Vars};
use liebasis::{CylindricalSystem, NFElement, Symbol};
use num::{BigInt, One, Zero};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Row {
    /// `ż`
    A,
    /// `ẏ`
    B,
    /// `ẋ`
    C,
}

impl Row {
    pub const ALL: [Row; 3] = [Row::A, Row::B, Row::C];

    /// Component index over `(x, y, z)`.
    fn comp(self) -> usize {
        match self {
            Row::A => 2,
            Row::B => 1,
            Row::C => 0,
        }
    }
}

/// Quadratic and cubic coefficients of a Hopf-zero system.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CubicCoefficients {
    coeffs: BTreeMap<(Row, [u32; 3]), Rational>,
}

impl CubicCoefficients {
    pub fn new() -> CubicCoefficients {
        CubicCoefficients::default()
    }

    /// Sets the coefficient of `z^i y^j x^k` in the given row; `2 <= i+j+k <= 3`.
    pub fn set(&mut self, row: Row, ijk: [u32; 3], c: Rational) -> Result<(), ClassicalError> {
        let d: u32 = ijk.iter().sum();
        if !(2..=3).contains(&d) {
            return Err(ClassicalError::Precondition(format!(
                "cubic coefficient index {ijk:?} has degree {d}, expected 2 or 3"
            )));
        }
        if c.is_zero() {
            self.coeffs.remove(&(row, ijk));
        } else {
            self.coeffs.insert((row, ijk), c);
        }
        Ok(())
    }

    pub fn get(&self, row: Row, ijk: [u32; 3]) -> Rational {
        self.coeffs.get(&(row, ijk)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Row, [u32; 3]), &Rational)> {
        self.coeffs.iter()
    }

    /// Degree 2 and 3 coefficients of a validated system.
    pub fn from_system(sys: &HopfZeroSystem) -> CubicCoefficients {
        let mut out = CubicCoefficients::new();
        for row in Row::ALL {
            for (m, c) in sys.field().comp(row.comp()).terms() {
                if (2..=3).contains(&m.degree()) {
                    let ijk = [m.exp(2), m.exp(1), m.exp(0)];
                    out.coeffs.insert((row, ijk), c.clone());
                }
            }
        }
        out
    }

    /// The cubic system over `(x, y, z)`, linear part included.
    pub fn to_field(&self) -> PolyVectorField {
        let xyz = Vars::xyz();
        let mut comps = crate::rotation().comps().to_vec();
        for ((row, ijk), c) in &self.coeffs {
            comps[row.comp()].add_term(Monomial::new(&[ijk[2], ijk[1], ijk[0]]), c.clone());
        }
        PolyVectorField::new(&xyz, comps).expect("three components")
    }

    fn s(&self) -> Rational {
        self.get(Row::C, [0, 2, 0]) + self.get(Row::C, [2, 0, 0])
    }

    fn require_leading(&self) -> Result<Rational, ClassicalError> {
        let s = self.s();
        if s.is_zero() {
            return Err(ClassicalError::Precondition(
                "c_{0,2,0}+c_{2,0,0}≠0 is required (the F[-1,0] coefficient vanishes)".into(),
            ));
        }
        Ok(s)
    }
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Sum of `weight * product of coefficients` terms.
type Product<'a> = &'a [(Row, [u32; 3])];

fn poly(c: &CubicCoefficients, terms: &[(Rational, Product)]) -> Rational {
    terms.iter().fold(Rational::zero(), |acc, (w, factors)| {
        let p = factors.iter().fold(Rational::one(), |p, &(row, ijk)| p * c.get(row, ijk));
        acc + w * p
    })
}

use Row::{A, B, C};

/// The eleven cubic-truncated first-level coefficients from the printed closed forms.
pub fn cubic_closed_form(c: &CubicCoefficients) -> Result<NFElement, ClassicalError> {
    c.require_leading()?;
    let a_m10 = c.s() * r(1, 2);
    let a11 = poly(c, &[(r(1, 1), &[(A, [1, 0, 1])]), (r(1, 1), &[(B, [0, 1, 1])]), (r(-2, 1), &[(C, [0, 0, 2])])]) * r(1, 6);
    let a22 = poly(
        c,
        &[
            (r(1, 1), &[(A, [1, 0, 2])]),
            (r(1, 1), &[(B, [0, 1, 2])]),
            (r(-2, 1), &[(C, [0, 0, 3])]),
            (r(-4, 1), &[(A, [0, 0, 2]), (C, [0, 1, 1])]),
            (r(4, 1), &[(B, [0, 0, 2]), (C, [1, 0, 1])]),
            (r(1, 1), &[(A, [0, 0, 2]), (A, [1, 1, 0])]),
            (r(2, 1), &[(A, [0, 0, 2]), (B, [0, 2, 0])]),
            (r(-2, 1), &[(A, [2, 0, 0]), (B, [0, 0, 2])]),
            (r(-1, 1), &[(B, [0, 0, 2]), (B, [1, 1, 0])]),
        ],
    ) * r(1, 8);
    let a01 = poly(
        c,
        &[
            (r(2, 1), &[(A, [0, 2, 0])]),
            (r(6, 1), &[(A, [3, 0, 0])]),
            (r(1, 1), &[(B, [0, 2, 0])]),
            (r(2, 1), &[(B, [2, 1, 0])]),
            (r(-8, 1), &[(C, [0, 2, 1])]),
            (r(-4, 1), &[(C, [1, 0, 2])]),
            (r(-5, 1), &[(A, [0, 1, 1]), (C, [0, 2, 0])]),
            (r(5, 1), &[(A, [0, 1, 1]), (C, [2, 0, 0])]),
            (r(-5, 1), &[(A, [1, 0, 1]), (C, [1, 1, 0])]),
            (r(2, 1), &[(A, [1, 1, 0]), (A, [2, 0, 0])]),
            (r(-4, 1), &[(A, [2, 0, 0]), (B, [2, 0, 0])]),
            (r(5, 1), &[(B, [0, 1, 1]), (C, [1, 1, 0])]),
            (r(-4, 1), &[(B, [0, 2, 0]), (B, [2, 0, 0])]),
            (r(-9, 1), &[(B, [1, 0, 1]), (C, [0, 2, 0])]),
            (r(5, 1), &[(B, [1, 0, 1]), (C, [2, 0, 0])]),
            (r(-2, 1), &[(B, [1, 1, 0]), (B, [2, 0, 0])]),
            (r(-8, 1), &[(A, [0, 2, 0]), (C, [0, 1, 1])]),
            (r(-8, 1), &[(A, [2, 0, 0]), (C, [0, 1, 1])]),
            (r(8, 1), &[(B, [0, 2, 0]), (C, [1, 0, 1])]),
            (r(8, 1), &[(B, [2, 0, 0]), (C, [1, 0, 1])]),
        ],
    ) * r(1, 48);
    let b11 = poly(c, &[(r(1, 1), &[(C, [0, 0, 2])]), (r(1, 1), &[(A, [1, 0, 1])]), (r(1, 1), &[(B, [0, 1, 1])])]) * r(1, 3);
    let b22 = poly(
        c,
        &[
            (r(5, 1), &[(A, [1, 0, 2])]),
            (r(5, 1), &[(B, [0, 1, 2])]),
            (r(-2, 1), &[(C, [0, 0, 3])]),
            (r(-12, 1), &[(A, [0, 0, 2]), (C, [0, 1, 1])]),
            (r(12, 1), &[(B, [0, 0, 2]), (C, [1, 0, 1])]),
            (r(5, 1), &[(A, [0, 0, 2]), (A, [1, 1, 0])]),
            (r(10, 1), &[(A, [0, 0, 2]), (B, [0, 2, 0])]),
            (r(-10, 1), &[(A, [2, 0, 0]), (B, [0, 0, 2])]),
            (r(-5, 1), &[(B, [0, 0, 2]), (B, [1, 1, 0])]),
        ],
    ) * r(1, 8);
    let b01 = poly(
        c,
        &[
            (r(10, 1), &[(A, [0, 2, 0])]),
            (r(30, 1), &[(A, [3, 0, 0])]),
            (r(10, 1), &[(B, [0, 2, 0])]),
            (r(10, 1), &[(B, [2, 1, 0])]),
            (r(-3, 1), &[(C, [0, 2, 1])]),
            (r(-8, 1), &[(C, [1, 0, 2])]),
            (r(-13, 1), &[(A, [0, 1, 1]), (C, [0, 2, 0])]),
            (r(13, 1), &[(A, [0, 1, 1]), (C, [2, 0, 0])]),
            (r(-13, 1), &[(A, [1, 0, 1]), (C, [1, 1, 0])]),
            (r(10, 1), &[(A, [1, 1, 0]), (A, [2, 0, 0])]),
            (r(-20, 1), &[(A, [2, 0, 0]), (B, [2, 0, 0])]),
            (r(13, 1), &[(B, [0, 1, 1]), (C, [1, 1, 0])]),
            (r(-20, 1), &[(B, [0, 2, 0]), (B, [2, 0, 0])]),
            (r(-21, 1), &[(B, [1, 0, 1]), (C, [0, 2, 0])]),
            (r(13, 1), &[(B, [1, 0, 1]), (C, [2, 0, 0])]),
            (r(-10, 1), &[(B, [1, 1, 0]), (B, [2, 0, 0])]),
            (r(-16, 1), &[(A, [0, 2, 0]), (C, [0, 1, 1])]),
            (r(-16, 1), &[(A, [2, 0, 0]), (C, [0, 1, 1])]),
            (r(16, 1), &[(B, [0, 2, 0]), (C, [1, 0, 1])]),
            (r(16, 1), &[(B, [2, 0, 0]), (C, [1, 0, 1])]),
        ],
    ) * r(1, 48);
    let c11 = poly(c, &[(r(1, 1), &[(B, [1, 0, 1])]), (r(-1, 1), &[(A, [0, 1, 1])])]) * r(1, 4);
    // the printed "½4" in front of a_110² and b_110² is read as 1/24
    let c01 = poly(
        c,
        &[
            (r(3, 8), &[(B, [3, 0, 0])]),
            (r(-3, 8), &[(A, [0, 3, 0])]),
            (r(-1, 8), &[(A, [2, 1, 0])]),
            (r(-1, 16), &[(A, [0, 1, 1]), (C, [1, 1, 0])]),
            (r(5, 24), &[(A, [1, 1, 0]), (B, [0, 2, 0])]),
            (r(-5, 12), &[(A, [0, 2, 0]), (A, [2, 0, 0])]),
            (r(1, 24), &[(A, [0, 2, 0]), (B, [1, 1, 0])]),
            (r(-1, 16), &[(A, [1, 0, 1]), (C, [0, 2, 0])]),
            (r(-1, 16), &[(A, [1, 0, 1]), (C, [2, 0, 0])]),
            (r(-1, 24), &[(A, [1, 1, 0]), (A, [1, 1, 0])]),
            (r(-5, 12), &[(A, [0, 2, 0]), (A, [0, 2, 0])]),
            (r(1, 24), &[(A, [1, 1, 0]), (B, [2, 0, 0])]),
            (r(-1, 6), &[(A, [2, 0, 0]), (A, [2, 0, 0])]),
            (r(5, 24), &[(A, [2, 0, 0]), (B, [1, 1, 0])]),
            (r(-1, 16), &[(B, [0, 1, 1]), (C, [0, 2, 0])]),
            (r(1, 16), &[(B, [0, 1, 1]), (C, [2, 0, 0])]),
            (r(-1, 6), &[(B, [0, 2, 0]), (B, [0, 2, 0])]),
            (r(-5, 12), &[(B, [0, 2, 0]), (B, [2, 0, 0])]),
            (r(-1, 16), &[(B, [1, 0, 1]), (C, [1, 1, 0])]),
            (r(-1, 24), &[(B, [1, 1, 0]), (B, [1, 1, 0])]),
            (r(-5, 12), &[(B, [2, 0, 0]), (B, [2, 0, 0])]),
        ],
    ) * r(1, 2);
    let c22 = poly(
        c,
        &[
            (r(-2, 1), &[(A, [0, 1, 2])]),
            (r(-2, 1), &[(B, [1, 0, 2])]),
            (r(-4, 1), &[(A, [0, 0, 2]), (A, [0, 2, 0])]),
            (r(2, 1), &[(A, [0, 0, 2]), (B, [1, 1, 0])]),
            (r(-4, 1), &[(A, [0, 0, 2]), (C, [1, 0, 1])]),
            (r(-1, 1), &[(A, [0, 1, 1]), (A, [0, 1, 1])]),
            (r(-1, 1), &[(A, [0, 1, 1]), (B, [1, 0, 1])]),
            (r(-1, 2), &[(A, [1, 0, 1]), (A, [1, 0, 1])]),
            (r(1, 1), &[(A, [1, 0, 1]), (B, [0, 1, 1])]),
            (r(2, 1), &[(A, [1, 1, 0]), (B, [0, 0, 2])]),
            (r(-4, 1), &[(B, [0, 0, 2]), (B, [2, 0, 0])]),
            (r(-4, 1), &[(B, [0, 0, 2]), (C, [0, 1, 1])]),
            (r(-1, 2), &[(B, [0, 1, 1]), (B, [0, 1, 1])]),
        ],
    ) * r(1, 8);
    Ok(NFElement::from_terms([
        (Symbol::theta(0, 0), Rational::one()),
        (Symbol::f(-1, 0), a_m10),
        (Symbol::f(0, 1), a01),
        (Symbol::e(0, 1), b01),
        (Symbol::f(1, 1), a11),
        (Symbol::e(1, 1), b11),
        (Symbol::f(2, 2), a22),
        (Symbol::e(2, 2), b22),
        (Symbol::theta(1, 1), c11),
        (Symbol::theta(0, 1), c01),
        (Symbol::theta(2, 2), c22),
    ]))
}

/// The defining numbers `a0, a1, b1, c1, a2, b2` of the cubic simplest normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicSnfNumbers {
    pub a0: Rational,
    pub a1: Rational,
    pub b1: Rational,
    pub c1: Rational,
    pub a2: Rational,
    pub b2: Rational,
}

pub fn cubic_snf_numbers(c: &CubicCoefficients) -> Result<CubicSnfNumbers, ClassicalError> {
    let s = c.require_leading()?;
    let cnf = cubic_closed_form(c)?;
    let g = |sym: Symbol| cnf.coeff(&sym);
    let a0 = &s * r(1, 2);
    let a1 = &s * (c.get(A, [1, 0, 1]) + c.get(B, [0, 1, 1]) - c.get(C, [0, 0, 2]) * r(2, 1)) * r(1, 6);
    let b1 = &s * (c.get(C, [0, 0, 2]) + c.get(A, [1, 0, 1]) + c.get(B, [0, 1, 1])) * r(4, 3);
    let c1 = &s * (c.get(B, [1, 0, 1]) - c.get(A, [0, 1, 1])) * r(1, 4);
    let am = g(Symbol::f(-1, 0));
    let cross = g(Symbol::f(0, 1)) * g(Symbol::e(1, 1)) * r(3, 1) - g(Symbol::e(0, 1)) * g(Symbol::f(1, 1)) * r(6, 1);
    let a2 = &am * (g(Symbol::f(2, 2)) * r(8, 1) - &cross) * r(1, 4);
    let b2 = &am * (g(Symbol::e(2, 2)) * r(8, 1) + &cross) * r(1, 4);
    Ok(CubicSnfNumbers { a0, a1, b1, c1, a2, b2 })
}

/// Cubic simplest normal form in `(x, rho, theta)`:
/// `ẋ = 2a0 ρ² + (a1+b1) x² + (a2+b2) x³`,
/// `ρ̇ = ½(b1-a1) xρ + ½(b1-3a1) x²ρ`, `θ̇ = 1 + c1 x`.
pub fn snf_cubic(c: &CubicCoefficients) -> Result<CylindricalSystem, ClassicalError> {
    let n = cubic_snf_numbers(c)?;
    let pl = Vars::planar();
    let mono = |e: [u32; 2], v: Rational| Polynomial::monomial(&pl, &e, v);
    let x_dot = Polynomial::from_terms(
        &pl,
        [
            (Monomial::new(&[0, 2]), &n.a0 * r(2, 1)),
            (Monomial::new(&[2, 0]), &n.a1 + &n.b1),
            (Monomial::new(&[3, 0]), &n.a2 + &n.b2),
        ],
    );
    let rho_dot = mono([1, 1], (&n.b1 - &n.a1) * r(1, 2))
        .add(&mono([2, 1], (&n.b1 - &n.a1 * r(3, 1)) * r(1, 2)))
        .expect("same ring");
    let theta_dot = Polynomial::from_terms(&pl, [(Monomial::ONE, Rational::one()), (Monomial::new(&[1, 0]), n.c1)]);
    Ok(CylindricalSystem { x_dot, rho_dot, theta_dot })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactpoly::int;

    fn only_c020(v: i64) -> CubicCoefficients {
        let mut c = CubicCoefficients::new();
        c.set(C, [0, 2, 0], int(v)).unwrap();
        c
    }

    #[test]
    fn leading_coefficient_only() {
        let e = cubic_closed_form(&only_c020(2)).unwrap();
        assert_eq!(e, NFElement::from_terms([(Symbol::theta(0, 0), int(1)), (Symbol::f(-1, 0), int(1))]));
        let s = snf_cubic(&only_c020(2)).unwrap();
        assert_eq!(s.x_dot, Polynomial::monomial(&Vars::planar(), &[0, 2], int(2)));
        assert!(s.rho_dot.is_zero());
        assert_eq!(s.theta_dot, Polynomial::constant(&Vars::planar(), int(1)));
    }

    #[test]
    fn printed_quadratic_mix() {
        let mut c = only_c020(2);
        c.set(A, [1, 0, 1], int(6)).unwrap();
        let e = cubic_closed_form(&c).unwrap();
        assert_eq!(e.coeff(&Symbol::f(1, 1)), int(1));
        assert_eq!(e.coeff(&Symbol::e(1, 1)), int(2));
        // the defining numbers carry the factor c020 + c200 = 2
        let n = cubic_snf_numbers(&c).unwrap();
        assert_eq!((n.a1.clone(), n.b1.clone()), (int(2), int(16)));
        let s = snf_cubic(&c).unwrap();
        assert_eq!(s.x_dot.coeff(&Monomial::new(&[2, 0])), int(18));
        assert_eq!(s.rho_dot.coeff(&Monomial::new(&[1, 1])), int(7));
    }

    #[test]
    fn precondition() {
        let err = cubic_closed_form(&CubicCoefficients::new()).unwrap_err();
        assert!(err.to_string().contains("c_{0,2,0}+c_{2,0,0}≠0"));
        assert!(snf_cubic(&CubicCoefficients::new()).is_err());
        assert!(CubicCoefficients::new().set(A, [1, 0, 0], int(1)).is_err());
    }
}
