use crate::realize::x_rho2;
use crate::{BasisError, Family, NFElement, Symbol};
use exactpoly::{PolyVectorField, Polynomial, Rational, Vars};
use num::{BigInt, Zero};
use std::collections::BTreeMap;
use std::fmt;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Restriction of `e` to one family.
pub fn project(e: &NFElement, family: Family) -> NFElement {
    e.filter(|s| s.family() == family)
}

/// Generator of the first integrals of `Θ[0,0] + a F[-1,0] + Σ F-terms + Σ Θ-terms`:
/// `f = a (y²+z²)² + Σ a^l_k x^{l+1} (y²+z²)^{k-l+1}`.
pub fn first_integral(e: &NFElement) -> Result<Polynomial, BasisError> {
    if !project(e, Family::E).is_zero() {
        return Err(BasisError::Precondition("first integral requires an element without E-terms".into()));
    }
    if e.coeff(&Symbol::f(-1, 0)).is_zero() {
        return Err(BasisError::Precondition("first integral requires a nonzero F[-1,0] coefficient".into()));
    }
    let v = Vars::xyz();
    let mut f = Polynomial::zero(&v);
    for (s, c) in project(e, Family::F).iter() {
        let term = x_rho2(&v, (s.l() + 1) as u32, (s.k() - s.l() + 1) as u32).scale(c);
        f = f.add(&term)?;
    }
    Ok(f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BTFamily {
    A,
    B,
}

/// Label of a Bogdanov-Takens basis field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BTSymbol {
    pub family: BTFamily,
    pub upper: i64,
    pub lower: i64,
}

impl fmt::Display for BTSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            BTFamily::A => "A",
            BTFamily::B => "B",
        };
        write!(f, "{fam}^{}_{}", self.upper, self.lower)
    }
}

fn require_theta_free(e: &NFElement, what: &str) -> Result<(), BasisError> {
    if project(e, Family::Theta).is_zero() {
        Ok(())
    } else {
        Err(BasisError::Precondition(format!("{what} requires an element without Θ-terms")))
    }
}

/// Relabeling `F[l,k] -> (k+2) A^{k-l}_k`, `E[l,k] -> B^{k-l}_k`.
pub fn bt_map(e: &NFElement) -> Result<BTreeMap<BTSymbol, Rational>, BasisError> {
    require_theta_free(e, "the Bogdanov-Takens map")?;
    let mut out = BTreeMap::new();
    for (s, c) in e.iter() {
        let (family, scale) = match s.family() {
            Family::F => (BTFamily::A, r(s.k() + 2, 1)),
            _ => (BTFamily::B, r(1, 1)),
        };
        let key = BTSymbol {
            family,
            upper: s.k() - s.l(),
            lower: s.k(),
        };
        let v = out.entry(key).or_insert_with(Rational::zero);
        *v += c * scale;
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// `(x, rho)` components of the realization of a Θ-free element.
pub fn planar_reduce(e: &NFElement) -> Result<PolyVectorField, BasisError> {
    require_theta_free(e, "planar reduction")?;
    let v = Vars::planar();
    let mut xc = Polynomial::zero(&v);
    let mut rc = Polynomial::zero(&v);
    for (s, c) in e.iter() {
        let (l, k) = (s.l(), s.k());
        let rho = 2 * (k - l) as u32;
        let xpow = (l + 1) as u32;
        let (cx, cr) = match s.family() {
            Family::F => (r(k - l + 1, 1), r(-(l + 1), 2)),
            _ => (r(1, 1), r(1, 2)),
        };
        xc.add_term(exactpoly::Monomial::new(&[xpow, rho]), c * cx);
        if l >= 0 {
            rc.add_term(exactpoly::Monomial::new(&[l as u32, rho + 1]), c * cr);
        }
    }
    Ok(PolyVectorField::new(&v, vec![xc, rc])?)
}
