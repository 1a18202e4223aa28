use crate::HyperError;
use exactpoly::Rational;
use liebasis::{NFElement, Symbol};
use num::{One, Zero};

/// Drops the central `Θ[0,0]` term; its coefficient must be exactly 1.
pub fn remove_phase(e: &NFElement) -> Result<(NFElement, bool), HyperError> {
    let t = Symbol::theta(0, 0);
    let c = e.coeff(&t);
    if !c.is_one() {
        return Err(HyperError::Input(format!(
            "coefficient of Θ[0,0] must be 1 (rotation frequency normalized), got {c}"
        )));
    }
    Ok((e.filter(|s| *s != t), true))
}

pub fn reinstate_phase(e: &NFElement, flag: bool) -> NFElement {
    let mut out = e.clone();
    if flag {
        out.add_term(Symbol::theta(0, 0), Rational::one());
    }
    out
}

/// Multiplies every coefficient by `target / a0` where `a0` is the `F[-1,0]`
/// coefficient. Returns the scaled element and the factor.
pub fn rescale_time(e: &NFElement, target: &Rational) -> Result<(NFElement, Rational), HyperError> {
    let a0 = e.coeff(&Symbol::f(-1, 0));
    if a0.is_zero() {
        return Err(HyperError::Input("coefficient of F[-1,0] is zero; time cannot be rescaled".into()));
    }
    if target.is_zero() {
        return Err(HyperError::Input("rescale target must be nonzero".into()));
    }
    let factor = target / a0;
    Ok((e.scale(&factor), factor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactpoly::{int, q};

    #[test]
    fn phase_round_trip() {
        let e = NFElement::from_terms([(Symbol::theta(0, 0), int(1)), (Symbol::f(-1, 0), int(1))]);
        let (p, flag) = remove_phase(&e).unwrap();
        assert_eq!(p, NFElement::term(Symbol::f(-1, 0), int(1)));
        assert_eq!(reinstate_phase(&p, flag), e);
        assert!(remove_phase(&p).is_err());
    }

    #[test]
    fn rescale() {
        let e = NFElement::from_terms([(Symbol::f(-1, 0), q(1, 2)), (Symbol::e(1, 1), int(3))]);
        let (d, f) = rescale_time(&e, &int(1)).unwrap();
        assert_eq!(f, int(2));
        assert_eq!(d.coeff(&Symbol::e(1, 1)), int(6));
        assert_eq!(rescale_time(&e, &q(1, 2)).unwrap().0, e);
        let m = NFElement::from_terms([(Symbol::f(-1, 0), int(-1)), (Symbol::f(1, 1), int(2))]);
        assert_eq!(rescale_time(&m, &int(1)).unwrap().0, m.scale(&int(-1)));
        assert!(rescale_time(&e, &int(0)).is_err());
    }
}
