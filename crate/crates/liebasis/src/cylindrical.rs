use crate::{Family, NFElement};
use exactpoly::{Monomial, Polynomial, Rational, Vars};
use num::{BigInt, One};
use std::fmt;

/// A normal form written in `(x, rho, theta)`.
///
/// `x_dot` and `rho_dot` live over `(x, rho)`; `theta_dot` only involves `x`
/// and `rho²`. The angle is measured so that `Θ[0,0]` contributes `+1` to
/// `theta_dot`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CylindricalSystem {
    pub x_dot: Polynomial,
    pub rho_dot: Polynomial,
    pub theta_dot: Polynomial,
}

impl CylindricalSystem {
    pub fn zero() -> CylindricalSystem {
        let v = Vars::planar();
        CylindricalSystem {
            x_dot: Polynomial::zero(&v),
            rho_dot: Polynomial::zero(&v),
            theta_dot: Polynomial::zero(&v),
        }
    }

    /// Polynomial-level cylindrical form of `e`. With `phase` set, a unit
    /// rotation is added to `theta_dot` (reinstating a removed `Θ[0,0]`).
    pub fn from_element(e: &NFElement, phase: bool) -> CylindricalSystem {
        let mut out = CylindricalSystem::zero();
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        for (s, c) in e.iter() {
            let (l, k) = (s.l(), s.k());
            let rho = 2 * (k - l) as u32;
            match s.family() {
                Family::F => {
                    let cx = Rational::from_integer(BigInt::from(k - l + 1));
                    out.x_dot.add_term(Monomial::new(&[(l + 1) as u32, rho]), c * cx);
                    if l >= 0 {
                        let cr = Rational::new(BigInt::from(-(l + 1)), BigInt::from(2));
                        out.rho_dot.add_term(Monomial::new(&[l as u32, rho + 1]), c * cr);
                    }
                }
                Family::E => {
                    out.x_dot.add_term(Monomial::new(&[(l + 1) as u32, rho]), c.clone());
                    out.rho_dot.add_term(Monomial::new(&[l as u32, rho + 1]), c * &half);
                }
                Family::Theta => {
                    out.theta_dot.add_term(Monomial::new(&[l as u32, rho]), c.clone());
                }
            }
        }
        if phase {
            out.theta_dot.add_term(Monomial::ONE, Rational::one());
        }
        out
    }

    /// Drops every term of polynomial degree above `d` in `(x, rho)`; the
    /// angular part is cut at degree `d - 1` so the three rows stay aligned
    /// with a degree-`d` field.
    pub fn truncate(&self, d: u32) -> CylindricalSystem {
        CylindricalSystem {
            x_dot: self.x_dot.truncate(d),
            rho_dot: self.rho_dot.truncate(d),
            theta_dot: self.theta_dot.truncate(d.saturating_sub(1)),
        }
    }
}

impl fmt::Display for CylindricalSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x' = {}; rho' = {}; theta' = {}", self.x_dot, self.rho_dot, self.theta_dot)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Symbol;
    use exactpoly::{int, q};

    #[test]
    fn small_cases() {
        let e = NFElement::from_terms([(Symbol::theta(0, 0), int(1)), (Symbol::f(-1, 0), int(1))]);
        let c = CylindricalSystem::from_element(&e, false);
        assert_eq!(c.x_dot.coeff(&Monomial::new(&[0, 2])), int(2));
        assert!(c.rho_dot.is_zero());
        assert_eq!(c.theta_dot.coeff(&Monomial::ONE), int(1));

        let c = CylindricalSystem::from_element(&NFElement::term(Symbol::e(1, 1), int(1)), false);
        assert_eq!(c.x_dot.coeff(&Monomial::new(&[2, 0])), int(1));
        assert_eq!(c.rho_dot.coeff(&Monomial::new(&[1, 1])), q(1, 2));
        assert!(c.theta_dot.is_zero());
    }
}
