use crate::error::EntryMismatch;
use crate::ClassicalError;
use exactpoly::{Matrix, Monomial, PolyVectorField, Polynomial, Rational, Vars};
use num::{One, Signed, Zero};

/// A field whose linear part is exactly `x' = 0, y' = z, z' = -y`.
///
/// The field is stored over `(x, y, z)` with `x` the zero-eigenvalue
/// direction. Inputs named with any permutation of `x, y, z` are reordered;
/// other names are read positionally as `(x, y, z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfZeroSystem {
    field: PolyVectorField,
    source: Vars,
}

impl HopfZeroSystem {
    pub fn field(&self) -> &PolyVectorField {
        &self.field
    }

    /// Variable names of the field as it was given.
    pub fn source_vars(&self) -> &Vars {
        &self.source
    }
}

/// `z ∂y - y ∂z`, the realization of `Θ[0,0]`.
pub fn rotation() -> PolyVectorField {
    liebasis::realize(&liebasis::Symbol::theta(0, 0))
}

fn expected_linear() -> Matrix {
    let mut m = Matrix::zeros(3, 3);
    m.set(1, 2, Rational::one());
    m.set(2, 1, -Rational::one());
    m
}

fn permutation(vars: &Vars) -> [usize; 3] {
    let mut p = [0, 1, 2];
    let names = vars.names();
    let mut seen = [false; 3];
    for (j, n) in names.iter().enumerate() {
        match ["x", "y", "z"].iter().position(|t| t == n) {
            Some(i) if !seen[i] => {
                seen[i] = true;
                p[j] = i;
            }
            _ => return [0, 1, 2],
        }
    }
    p
}

/// Rewrites `v` over `(x, y, z)`, sending source variable `j` to `p[j]`.
fn reorder(v: &PolyVectorField, p: [usize; 3]) -> Result<PolyVectorField, ClassicalError> {
    let xyz = Vars::xyz();
    let mut comps = vec![Polynomial::zero(&xyz); 3];
    for (j, comp) in v.comps().iter().enumerate() {
        let mut out = Polynomial::zero(&xyz);
        for (m, c) in comp.terms() {
            let mut e = [0u32; 3];
            for (src, &dst) in p.iter().enumerate() {
                e[dst] = m.exp(src);
            }
            out.add_term(Monomial::new(&e), c.clone());
        }
        comps[p[j]] = out;
    }
    Ok(PolyVectorField::new(&xyz, comps)?)
}

fn exact_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer().sqrt(), q.denom().sqrt());
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Exact square root of a rational, if it is a square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    exact_sqrt(q)
}

fn frequency_hint(m: &Matrix) -> Option<String> {
    // characteristic polynomial λ³ - tr λ² + c2 λ - det
    let tr = (0..3).map(|i| m.get(i, i).clone()).fold(Rational::zero(), |a, b| a + b);
    let minor = |a: usize, b: usize| m.get(a, a) * m.get(b, b) - m.get(a, b) * m.get(b, a);
    let c2 = minor(0, 1) + minor(0, 2) + minor(1, 2);
    let det = m.get(0, 0) * minor(1, 2) - m.get(0, 1) * (m.get(1, 0) * m.get(2, 2) - m.get(1, 2) * m.get(2, 0))
        + m.get(0, 2) * (m.get(1, 0) * m.get(2, 1) - m.get(1, 1) * m.get(2, 0));
    if !tr.is_zero() || !det.is_zero() || !c2.is_positive() {
        return None;
    }
    Some(match exact_sqrt(&c2) {
        Some(w) if w.is_one() => "eigenvalues are 0, ±i; bring the rotation block to y' = z, z' = -y by a linear change".to_string(),
        Some(w) => format!(
            "eigenvalues are 0, ±{w}i; rescale time by {} (and bring the rotation block to y' = z, z' = -y)",
            w.recip()
        ),
        None => format!("eigenvalues are 0, ±i·sqrt({c2}); the frequency is irrational, rescale time by hand before exact normalization"),
    })
}

/// Accepts `v` iff its degree-1 part is exactly `x' = 0, y' = z, z' = -y` and
/// it has no constant term.
pub fn validate_linear(v: &PolyVectorField) -> Result<HopfZeroSystem, ClassicalError> {
    if v.dim() != 3 {
        return Err(ClassicalError::Precondition(format!(
            "a Hopf-zero system has 3 variables, got {}",
            v.dim()
        )));
    }
    let field = reorder(v, permutation(v.vars()))?;
    let names = ["x", "y", "z"];
    for (i, comp) in field.comps().iter().enumerate() {
        let c = comp.coeff(&Monomial::ONE);
        if !c.is_zero() {
            return Err(ClassicalError::Precondition(format!(
                "the origin is not an equilibrium: d{}/dt has constant term {c}",
                names[i]
            )));
        }
    }
    let got = field.linear_part();
    let want = expected_linear();
    let mut mismatches = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if got.get(i, j) != want.get(i, j) {
                mismatches.push(EntryMismatch {
                    row: names[i].into(),
                    col: names[j].into(),
                    expected: want.get(i, j).clone(),
                    got: got.get(i, j).clone(),
                });
            }
        }
    }
    if !mismatches.is_empty() {
        return Err(ClassicalError::LinearPart {
            mismatches,
            hint: frequency_hint(&got),
        });
    }
    Ok(HopfZeroSystem {
        field,
        source: v.vars().clone(),
    })
}
