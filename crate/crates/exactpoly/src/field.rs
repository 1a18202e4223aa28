use crate::{Matrix, Monomial, PolyError, Polynomial, Rational, Vars};
use num::{One, Zero};
use std::fmt;

/// Polynomial vector field `f_1 ∂_1 + ... + f_n ∂_n`, one component per variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVectorField {
    vars: Vars,
    comps: Vec<Polynomial>,
}

impl PolyVectorField {
    pub fn new(vars: &Vars, comps: Vec<Polynomial>) -> Result<PolyVectorField, PolyError> {
        if comps.len() != vars.len() {
            return Err(PolyError::Arity {
                expected: vars.len(),
                got: comps.len(),
            });
        }
        for c in &comps {
            vars.check(c.vars())?;
        }
        Ok(PolyVectorField {
            vars: vars.clone(),
            comps,
        })
    }

    pub fn zero(vars: &Vars) -> PolyVectorField {
        PolyVectorField {
            vars: vars.clone(),
            comps: (0..vars.len()).map(|_| Polynomial::zero(vars)).collect(),
        }
    }

    /// The field `c * m ∂_i`.
    pub fn monomial(vars: &Vars, i: usize, exps: &[u32], c: Rational) -> PolyVectorField {
        let mut v = PolyVectorField::zero(vars);
        v.comps[i] = Polynomial::monomial(vars, exps, c);
        v
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn comps(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn comp(&self, i: usize) -> &Polynomial {
        &self.comps[i]
    }

    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.comps.iter().filter_map(Polynomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.comps.iter().filter_map(Polynomial::min_degree).min()
    }

    pub fn add(&self, other: &PolyVectorField) -> Result<PolyVectorField, PolyError> {
        self.vars.check(&other.vars)?;
        Ok(PolyVectorField {
            vars: self.vars.clone(),
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.add(b))
                .collect::<Result<_, _>>()?,
        })
    }

    pub fn sub(&self, other: &PolyVectorField) -> Result<PolyVectorField, PolyError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> PolyVectorField {
        PolyVectorField {
            vars: self.vars.clone(),
            comps: self.comps.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Derivation action `v(g) = Σ f_i ∂g/∂x_i`.
    pub fn apply_derivation(&self, g: &Polynomial) -> Result<Polynomial, PolyError> {
        self.vars.check(g.vars())?;
        let mut out = Polynomial::zero(&self.vars);
        for (i, f) in self.comps.iter().enumerate() {
            let d = g.derivative(i);
            if !d.is_zero() && !f.is_zero() {
                out = out.add(&f.mul(&d)?)?;
            }
        }
        Ok(out)
    }

    /// `[v, w]` with components `v(w_i) - w(v_i)`.
    pub fn lie_bracket(&self, w: &PolyVectorField) -> Result<PolyVectorField, PolyError> {
        self.vars.check(&w.vars)?;
        let comps = (0..self.dim())
            .map(|i| {
                self.apply_derivation(&w.comps[i])?
                    .sub(&w.apply_derivation(&self.comps[i])?)
            })
            .collect::<Result<_, _>>()?;
        Ok(PolyVectorField {
            vars: self.vars.clone(),
            comps,
        })
    }

    pub fn divergence(&self) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (i, f) in self.comps.iter().enumerate() {
            out = out.add(&f.derivative(i)).expect("same ring");
        }
        out
    }

    pub fn truncate(&self, d: u32) -> PolyVectorField {
        PolyVectorField {
            vars: self.vars.clone(),
            comps: self.comps.iter().map(|p| p.truncate(d)).collect(),
        }
    }

    pub fn homogeneous(&self, d: u32) -> PolyVectorField {
        PolyVectorField {
            vars: self.vars.clone(),
            comps: self.comps.iter().map(|p| p.homogeneous(d)).collect(),
        }
    }

    /// Jacobian at the origin: entry `(i, j)` is the coefficient of `x_j` in `f_i`.
    pub fn linear_part(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, f) in self.comps.iter().enumerate() {
            for j in 0..n {
                let mut e = [0u32; 3];
                e[j] = 1;
                m.set(i, j, f.coeff(&Monomial::new(&e[..n])));
            }
        }
        m
    }

    /// Conjugates by the linear change `old = T new`, giving `T⁻¹ v(T new)`.
    pub fn linear_change(&self, t: &Matrix) -> Result<PolyVectorField, PolyError> {
        let n = self.dim();
        if t.nrows() != n || t.ncols() != n {
            return Err(PolyError::Shape {
                rows: t.nrows(),
                cols: t.ncols(),
                expected: format!("{n}x{n}"),
            });
        }
        let tinv = t.inverse()?;
        let subs: Vec<Polynomial> = (0..n)
            .map(|i| {
                Polynomial::from_terms(
                    &self.vars,
                    (0..n).map(|j| {
                        let mut e = [0u32; 3];
                        e[j] = 1;
                        (Monomial::new(&e[..n]), t.get(i, j).clone())
                    }),
                )
            })
            .collect();
        let composed: Vec<Polynomial> = self
            .comps
            .iter()
            .map(|f| f.compose(&subs))
            .collect::<Result<_, _>>()?;
        let comps = (0..n)
            .map(|i| {
                let mut acc = Polynomial::zero(&self.vars);
                for (j, c) in composed.iter().enumerate() {
                    let s = tinv.get(i, j);
                    if !s.is_zero() {
                        acc = acc.add(&c.scale(s))?;
                    }
                }
                Ok(acc)
            })
            .collect::<Result<_, PolyError>>()?;
        Ok(PolyVectorField {
            vars: self.vars.clone(),
            comps,
        })
    }

    /// Image of a planar `(x, rho)` field under `xbar = rho², ybar = x`.
    pub fn pushforward_bt(&self) -> Result<PolyVectorField, PolyError> {
        if self.dim() != 2 {
            return Err(PolyError::Arity {
                expected: 2,
                got: self.dim(),
            });
        }
        let target = Vars::bt();
        let even = |p: &Polynomial, shift: u32, what: &str| -> Result<Polynomial, PolyError> {
            let mut out = Polynomial::zero(&target);
            for (m, c) in p.terms() {
                let rho = m.exp(1) + shift;
                if rho % 2 == 1 {
                    return Err(PolyError::Precondition(format!(
                        "{what} has odd power of rho after the chain rule: term x^{}*rho^{}",
                        m.exp(0),
                        m.exp(1)
                    )));
                }
                out.add_term(Monomial::new(&[rho / 2, m.exp(0)]), c.clone());
            }
            Ok(out)
        };
        // d(rho²)/dt = 2 rho rho'
        let xbar = even(&self.comps[1], 1, "rho-component")?.scale(&Rational::from_integer(2.into()));
        let ybar = even(&self.comps[0], 0, "x-component")?;
        PolyVectorField::new(&target, vec![xbar, ybar])
    }

    /// Coefficients of the degree-`d` part: component-major, monomials in ascending order.
    pub fn coefficient_vector(&self, d: u32) -> Vec<Rational> {
        self.comps
            .iter()
            .flat_map(|p| p.coefficient_vector(d))
            .collect()
    }

    /// Inverse of [`coefficient_vector`](Self::coefficient_vector).
    pub fn from_coefficient_vector(vars: &Vars, d: u32, v: &[Rational]) -> PolyVectorField {
        let monos = Monomial::all_of_degree(vars.len(), d);
        assert_eq!(v.len(), monos.len() * vars.len());
        let comps = v
            .chunks(monos.len())
            .map(|chunk| Polynomial::from_terms(vars, monos.iter().copied().zip(chunk.iter().cloned())))
            .collect();
        PolyVectorField {
            vars: vars.clone(),
            comps,
        }
    }
}

impl fmt::Display for PolyVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .vars
            .names()
            .iter()
            .zip(&self.comps)
            .map(|(n, p)| format!("{n}' = {p}"))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}
