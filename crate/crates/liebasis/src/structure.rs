use crate::symbol::permissible;
use crate::{BasisError, Family, NFElement, Symbol};
use exactpoly::{par, Rational};
use num::{BigInt, Zero};

fn r(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

type Raw = (Family, i64, i64);

/// Structure constants on raw index triples; the left operand may be an extended symbol.
fn raw_bracket(a: Raw, b: Raw) -> Vec<(Raw, Rational)> {
    use Family::*;
    let ((fa, l, k), (fb, m, n)) = (a, b);
    let (lm, kn) = (l + m, k + n);
    let mut out = match (fa, fb) {
        (F, F) => vec![((F, lm, kn), r((m + 1) * (k + 2) - (l + 1) * (n + 2), 1))],
        (F, E) => vec![
            ((E, lm, kn), r((n + 2) * (m * (k + 2) - n * (l + 1)), k + n + 2)),
            ((F, lm, kn), r(-k * (k + 2), k + n + 2)),
        ],
        (F, Theta) => vec![((Theta, lm, kn), r(m * (k + 2) - n * (l + 1), 1))],
        (E, E) => vec![((E, lm, kn), r(n - k, 1))],
        (E, Theta) => vec![((Theta, lm, kn), r(n, 1))],
        (Theta, Theta) => vec![],
        _ => raw_bracket(b, a)
            .into_iter()
            .map(|(s, c)| (s, -c))
            .collect(),
    };
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// `[s1, s2]` expanded in the basis.
pub fn structure_constants(s1: &Symbol, s2: &Symbol) -> Vec<(Symbol, Rational)> {
    raw_bracket((s1.family(), s1.l(), s1.k()), (s2.family(), s2.l(), s2.k()))
        .into_iter()
        .map(|((f, l, k), c)| {
            let s = Symbol::new(f, l, k).expect("bracket of permissible symbols is permissible");
            (s, c)
        })
        .collect()
}

/// Bilinear extension of the structure constants.
pub fn bracket(e1: &NFElement, e2: &NFElement) -> NFElement {
    let left: Vec<(Symbol, Rational)> = e1.iter().map(|(s, c)| (*s, c.clone())).collect();
    let parts = if left.len() * e2.len() > 64 {
        par::map(&left, |(s1, c1)| bracket_one(s1, c1, e2))
    } else {
        left.iter().map(|(s1, c1)| bracket_one(s1, c1, e2)).collect()
    };
    let mut out = NFElement::zero();
    for p in parts {
        for (s, c) in p {
            out.add_term(s, c);
        }
    }
    out
}

fn bracket_one(s1: &Symbol, c1: &Rational, e2: &NFElement) -> Vec<(Symbol, Rational)> {
    let mut out = Vec::new();
    for (s2, c2) in e2.iter() {
        let cc = c1 * c2;
        for (s, c) in structure_constants(s1, s2) {
            out.push((s, c * &cc));
        }
    }
    out
}

/// Symbols outside the basis that may appear as left operands of [`extended_bracket`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtendedSymbol {
    /// `F[1,0]`.
    F10,
}

impl ExtendedSymbol {
    fn raw(self) -> Raw {
        match self {
            ExtendedSymbol::F10 => (Family::F, 1, 0),
        }
    }
}

/// `[special, e]` by the same structure constants with `l = k + 1` on the left.
///
/// Products landing on `F[n+1,n]` (from `F[n,n]`) leave the basis; the orbit
/// terminates there and they are dropped. Any other out-of-basis product is
/// reported as an internal error.
pub fn extended_bracket(special: ExtendedSymbol, e: &NFElement) -> Result<NFElement, BasisError> {
    let mut out = NFElement::zero();
    for (s, c) in e.iter() {
        for ((f, l, k), v) in raw_bracket(special.raw(), (s.family(), s.l(), s.k())) {
            if permissible(f, l, k) {
                out.add_term(Symbol::new(f, l, k)?, v * c);
            } else if !(f == Family::F && l == k + 1) {
                return Err(BasisError::Internal(format!(
                    "[F[1,0], {s}] produced non-permissible {}[{l},{k}]",
                    f.label()
                )));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactpoly::{int, q};

    #[test]
    fn documented_brackets() {
        let b = bracket(&NFElement::term(Symbol::f(0, 1), int(1)), &NFElement::term(Symbol::f(1, 2), int(1)));
        assert_eq!(b, NFElement::term(Symbol::f(1, 3), int(2)));
        let t = bracket(&NFElement::term(Symbol::theta(1, 2), int(1)), &NFElement::term(Symbol::theta(0, 3), int(1)));
        assert!(t.is_zero());
        let et = bracket(&NFElement::term(Symbol::e(1, 1), int(1)), &NFElement::term(Symbol::theta(1, 1), int(1)));
        assert_eq!(et, NFElement::term(Symbol::theta(2, 2), int(1)));
    }

    #[test]
    fn extended_examples() {
        let x = extended_bracket(ExtendedSymbol::F10, &NFElement::term(Symbol::f(-1, 0), int(1))).unwrap();
        assert_eq!(x, NFElement::term(Symbol::f(0, 0), int(-4)));
        let y = extended_bracket(ExtendedSymbol::F10, &NFElement::term(Symbol::theta(0, 0), int(1))).unwrap();
        assert!(y.is_zero());
        assert!(extended_bracket(ExtendedSymbol::F10, &NFElement::zero()).unwrap().is_zero());
        // F[2,1] terminates the orbit
        let z = extended_bracket(ExtendedSymbol::F10, &NFElement::term(Symbol::f(1, 1), q(1, 3))).unwrap();
        assert!(z.is_zero());
    }
}
