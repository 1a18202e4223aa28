//! Built-in example systems with their linear transforms.

use crate::log::{exp_ad_field, Generator, StepKind, TransformationLog};
use crate::system::rational_sqrt;
use crate::{rotation, validate_linear, ClassicalError, HopfZeroSystem};
use exactpoly::{q, Matrix, Monomial, PolyVectorField, Polynomial, Rational, Vars};
use liebasis::{realize_element, NFElement, Symbol};
use num::{One, Signed};

/// A raw system together with the changes that bring it to Hopf-zero shape.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub label: String,
    pub raw: PolyVectorField,
    /// `old = T new`.
    pub transform: Matrix,
    /// Factor applied to the field after the linear change.
    pub time_scale: Rational,
    pub log: TransformationLog,
    pub system: HopfZeroSystem,
}

fn var(v: &Vars, i: usize) -> Polynomial {
    Polynomial::var(v, i)
}

/// `ẋ = -y - z, ẏ = x + a y, ż = x - a z + x z`, the Hopf-zero member of the
/// Rössler family (`b = 1`, `c = a`).
pub fn rossler_raw(a: &Rational) -> PolyVectorField {
    let v = Vars::xyz();
    let (x, y, z) = (var(&v, 0), var(&v, 1), var(&v, 2));
    let xd = -&(&y + &z);
    let yd = &x + &y.scale(a);
    let zd = &(&x - &z.scale(a)) + &(&x * &z);
    PolyVectorField::new(&v, vec![xd, yd, zd]).expect("three components")
}

fn column_vec(m: &Matrix, v: &[Rational]) -> Vec<Rational> {
    m.mul_vec(v)
}

/// The Rössler system at `a`, moved to Hopf-zero shape.
///
/// Requires `0 < a² < 2` with `sqrt(2 - a²)` rational (for instance `a = ±1`,
/// `a = ±1/5`). The center direction is oriented so that the `F[-1,0]`
/// coefficient has the sign of `-a`.
pub fn rossler(a: &Rational) -> Result<Fixture, ClassicalError> {
    let a2 = a * a;
    if !a2.is_positive() || a2 >= q(2, 1) {
        return Err(ClassicalError::Precondition(format!(
            "the Rössler family is Hopf-zero only for 0 < a² < 2, got a = {a}"
        )));
    }
    let w2 = q(2, 1) - &a2;
    let w = rational_sqrt(&w2).ok_or_else(|| {
        ClassicalError::Precondition(format!(
            "rotation frequency sqrt(2 - a²) = sqrt({w2}) is irrational; exact normalization needs it rational"
        ))
    })?;
    let raw = rossler_raw(a);
    let j = raw.linear_part();
    let t0 = j
        .nullspace()
        .into_iter()
        .next()
        .ok_or_else(|| ClassicalError::Internal("Rössler Jacobian is invertible".into()))?;
    let mut shifted = j.mul(&j)?;
    for i in 0..3 {
        let d = shifted.get(i, i) + &w2;
        shifted.set(i, i, d);
    }
    let t1 = shifted
        .nullspace()
        .into_iter()
        .next()
        .ok_or_else(|| ClassicalError::Internal("no rotation plane found".into()))?;
    let t2: Vec<Rational> = column_vec(&j, &t1).into_iter().map(|c| -c / &w).collect();

    let build = |t0: &[Rational]| -> Result<(Matrix, PolyVectorField), ClassicalError> {
        let t = Matrix::from_columns(3, &[t0.to_vec(), t1.clone(), t2.clone()]);
        let v = raw.linear_change(&t)?.scale(&w.recip());
        Ok((t, v))
    };
    let (mut t, mut v) = build(&t0)?;
    let lead = v.comp(0).coeff(&Monomial::new(&[0, 2, 0])) + v.comp(0).coeff(&Monomial::new(&[0, 0, 2]));
    if lead.is_positive() == a.is_positive() {
        let flipped: Vec<Rational> = t0.iter().map(|c| -c).collect();
        (t, v) = build(&flipped)?;
    }
    let system = validate_linear(&v)?;
    let mut log = TransformationLog::new();
    log.push(1, StepKind::Linear, Generator::Matrix(t.clone()));
    log.push(0, StepKind::TimeRescale, Generator::Scalar(w.recip()));
    Ok(Fixture {
        label: format!("rossler(a={a})"),
        raw,
        transform: t,
        time_scale: w.recip(),
        log,
        system,
    })
}

/// The degree-6 first-level normal form printed for the traveling-wave
/// Kuramoto-Sivashinsky system.
pub fn ks_k1() -> NFElement {
    NFElement::from_terms([
        (Symbol::theta(0, 0), Rational::one()),
        (Symbol::f(-1, 0), q(1, 2)),
        (Symbol::f(1, 1), q(-4, 3)),
        (Symbol::e(1, 1), q(-2, 3)),
        (Symbol::f(3, 3), q(187, 15)),
        (Symbol::e(3, 3), q(329, 270)),
        (Symbol::f(5, 5), q(422669021, 1360800)),
        (Symbol::e(5, 5), q(2040088789, 2721600)),
        (Symbol::theta(1, 3), q(-10701, 112)),
        (Symbol::theta(2, 3), q(1, 2)),
    ])
}

/// `ẋ = y, ẏ = x, ż = -2x² - y`, the KS traveling-wave ODE as printed
/// (at `μ = 0`). Its linear part is not Hopf-zero.
pub fn ks_printed() -> PolyVectorField {
    let v = Vars::xyz();
    let (x, y) = (var(&v, 0), var(&v, 1));
    let zd = &(&x * &x).scale(&q(-2, 1)) - &y;
    PolyVectorField::new(&v, vec![y.clone(), x, zd]).expect("three components")
}

/// A Hopf-zero system whose first-level normal form is exactly [`ks_k1`]:
/// `exp(ad_Y)` applied to the realization of `K¹`, with
/// `Y = [v0, x y ∂x + z² ∂y]` in the image of `ad_{v0}`.
pub fn ks_reconciled() -> Result<Fixture, ClassicalError> {
    let v = Vars::xyz();
    let w = PolyVectorField::monomial(&v, 0, &[1, 1, 0], Rational::one())
        .add(&PolyVectorField::monomial(&v, 1, &[0, 0, 2], Rational::one()))?;
    let y = rotation().lie_bracket(&w)?;
    let field = exp_ad_field(&y, &realize_element(&ks_k1()), 6)?;
    let system = validate_linear(&field)?;
    let mut log = TransformationLog::new();
    log.push(2, StepKind::NearIdentity, Generator::Field(y));
    Ok(Fixture {
        label: "kuramoto-sivashinsky (reconciled)".into(),
        raw: field,
        transform: Matrix::identity(3),
        time_scale: Rational::one(),
        log,
        system,
    })
}
