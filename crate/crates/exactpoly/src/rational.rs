use crate::PolyError;
use num::{BigInt, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num::BigRational;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"`, `"p/q"` or `"-p/q"`. Decimal and float notation is rejected.
pub fn parse_rational(s: &str) -> Result<Rational, PolyError> {
    let bad = || PolyError::ParseRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let ok = |p: &str| {
        let digits = p.strip_prefix(['-', '+']).unwrap_or(p);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !ok(num) || !ok(den) || den.starts_with(['-', '+']) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-6/4").unwrap(), q(-3, 2));
        assert_eq!(parse_rational(" 754127923063/747079200 ").unwrap().to_string(), "754127923063/747079200");
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1e3").is_err());
    }

    #[test]
    fn lowest_terms() {
        let r = q(10, -4);
        assert_eq!(r.numer(), &BigInt::from(-5));
        assert_eq!(r.denom(), &BigInt::from(2));
    }
}
