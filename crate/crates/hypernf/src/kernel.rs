//! Generators of `ker Γ` from the case proofs, with certification.

use crate::gamma::{gamma, GammaCase};
use crate::sequences::{e_sequence, h_sequence, pochhammer, u_w_minus1, u_w_zero};
use crate::HyperError;
use exactpoly::{Matrix, Rational};
use liebasis::{Family, NFElement, Symbol};
use num::{BigInt, One, Zero};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// `𝓕⁻¹_k`
    FMinus1,
    /// `𝓔⁰_k`
    E0,
    /// `𝓣⁰_k`
    T0,
    /// `𝓕ᵣᵏ` (case i only)
    Fr,
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorKind::FMinus1 => "F^-1",
            GeneratorKind::E0 => "E^0",
            GeneratorKind::T0 => "T^0",
            GeneratorKind::Fr => "F_r",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelGenerator {
    pub kind: GeneratorKind,
    pub k: i64,
    pub element: NFElement,
}

fn z(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn pow(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num::pow::pow(x.clone(), e as usize)
    } else {
        num::pow::pow(x.recip(), (-e) as usize)
    }
}

fn fact(m: i64) -> Rational {
    (1..=m).fold(Rational::one(), |a, i| a * z(i))
}

fn binom(n: i64, m: i64) -> Rational {
    fact(n) / (fact(m) * fact(n - m))
}

fn poch(a: i64, k: i64, b: i64) -> Rational {
    pochhammer(&z(a), k, &z(b))
}

/// Adds `c·f[l,k]`; terms outside the permissible range end the orbit and are dropped.
fn put(out: &mut NFElement, f: Family, l: i64, k: i64, c: Rational) {
    if let Ok(s) = Symbol::new(f, l, k) {
        out.add_term(s, c);
    }
}

/// `𝓕ᵣʲ = Σ_{m=0}^{j} a_r^m C(j,m) F[m(r+1)-1, 2(j-1)+mr]`, `j >= 1`.
pub fn f_r(r: i64, a_r: &Rational, j: i64) -> Result<NFElement, HyperError> {
    if j < 1 {
        return Err(HyperError::Input(format!("F_r^j needs j >= 1, got {j}")));
    }
    let mut out = NFElement::zero();
    for m in 0..=j {
        put(&mut out, Family::F, m * (r + 1) - 1, 2 * (j - 1) + m * r, pow(a_r, m) * binom(j, m));
    }
    Ok(out)
}

/// The printed closed-form generators of `ker Γ` for index `k >= 1`.
///
/// Case i has `𝓔⁰_k` and `𝓕ᵣᵏ`; its `𝓕⁻¹_k` and `𝓣⁰_k` are not given in
/// closed form, use [`computed_kernel`] for those.
pub fn kernel_generators(case: &GammaCase, k: i64) -> Result<Vec<KernelGenerator>, HyperError> {
    if k < 1 {
        return Err(HyperError::Input(format!("kernel generator index must be at least 1, got {k}")));
    }
    let gen = |kind, element| KernelGenerator { kind, k, element };
    let mut out = Vec::new();
    match case {
        GammaCase::I { r, a_r } => {
            let r = *r;
            let e = e_sequence(k, r, k as usize);
            let mut x = NFElement::zero();
            for m in 0..=k {
                let c = pow(a_r, m) * z(k + 2) * poch(k, m, -2) / (fact(m) * pow(&z(2), m) * z(m * r + 2 + k));
                put(&mut x, Family::E, m * (r + 1), m * r + k, c);
                put(&mut x, Family::F, m * (r + 1), m * r + k, -(pow(a_r, m) * &e[m as usize]));
            }
            out.push(gen(GeneratorKind::E0, x));
            out.push(gen(GeneratorKind::Fr, f_r(r, a_r, k)?));
        }
        GammaCase::II { s, b_s } => {
            let s = *s;
            let h = h_sequence(k, s, (k + 1) as usize);
            let nb = -b_s.clone();
            let mut f = NFElement::zero();
            for m in 1..=k + 1 {
                let c = pow(&nb, m) * z(k + s + 2) * poch(k, m, s)
                    / (z(k) * pow(&z(2 * s + 2), m - 1) * fact(m) * z(m * s + k + 2));
                put(&mut f, Family::F, m * (s + 1) - 1, m * s + k, c);
                put(&mut f, Family::E, m * (s + 1) - 1, m * s + k, -(pow(b_s, m) * &h[m as usize]));
            }
            out.push(gen(GeneratorKind::FMinus1, f));
            let mut e = NFElement::zero();
            let mut t = NFElement::zero();
            for m in 0..=k {
                let d = pow(&z(2 * s + 2), m) * fact(m);
                put(&mut e, Family::E, m * (s + 1), m * s + k, pow(&nb, m) * poch(k - s, m, s) / &d);
                put(&mut t, Family::Theta, m * (s + 1), k + m * s, pow(&nb, m) * poch(k, m, s) / &d);
            }
            out.push(gen(GeneratorKind::E0, e));
            out.push(gen(GeneratorKind::T0, t));
        }
        GammaCase::III { s, a_s, b_s } => {
            let s = *s;
            let (u1, w1) = u_w_minus1(k, s, a_s, b_s, (k + 1) as usize);
            let mut f = NFElement::zero();
            for m in 1..=k + 1 {
                let bm = pow(b_s, m);
                put(&mut f, Family::F, m * (s + 1) - 1, m * s + k, &u1[m as usize] * &bm);
                put(&mut f, Family::E, m * (s + 1) - 1, m * s + k, &w1[m as usize] * &bm);
            }
            out.push(gen(GeneratorKind::FMinus1, f));
            let (u0, w0) = u_w_zero(k, s, a_s, b_s, k as usize);
            let mut e = NFElement::zero();
            for m in 0..=k {
                let bm = pow(b_s, m);
                put(&mut e, Family::F, m * (s + 1), m * s + k, &u0[m as usize] * &bm);
                put(&mut e, Family::E, m * (s + 1), m * s + k, &w0[m as usize] * &bm);
            }
            out.push(gen(GeneratorKind::E0, e));
            let base = z(k) * (a_s * z(s) + a_s - b_s);
            let step = -(a_s * z(2 * (s + 1)) + b_s * z(s));
            let mut t = NFElement::zero();
            for m in 0..=k {
                let c = pow(b_s, m) * pochhammer(&base, m, &step) / (fact(m) * pow(&z(2 * (s + 1)), m - 1));
                put(&mut t, Family::Theta, m * (s + 1), m * s + k, c);
            }
            out.push(gen(GeneratorKind::T0, t));
        }
    }
    Ok(out)
}

/// `Γ(x)` cut at degree `max_degree`; zero means `x` is certified up to there.
pub fn certify(case: &GammaCase, x: &NFElement, max_degree: i64) -> Result<NFElement, HyperError> {
    Ok(gamma(case, x)?.truncate_degree(max_degree))
}

/// Basis of `ker Γ` restricted to the span of `candidates`, by exact nullspace.
pub fn computed_kernel(case: &GammaCase, candidates: &[Symbol]) -> Result<Vec<NFElement>, HyperError> {
    let images = candidates
        .iter()
        .map(|s| gamma(case, &NFElement::term(*s, Rational::one())))
        .collect::<Result<Vec<_>, _>>()?;
    let mut keys: Vec<Symbol> = images.iter().flat_map(|im| im.symbols().copied().collect::<Vec<_>>()).collect();
    keys.sort();
    keys.dedup();
    if keys.is_empty() {
        return Ok(candidates.iter().map(|s| NFElement::term(*s, Rational::one())).collect());
    }
    let rows = keys.iter().map(|t| images.iter().map(|im| im.coeff(t)).collect()).collect();
    let m = Matrix::from_rows(rows).map_err(|e| HyperError::Internal(e.to_string()))?;
    Ok(m
        .nullspace()
        .into_iter()
        .map(|v| NFElement::from_terms(candidates.iter().copied().zip(v).filter(|(_, c)| !c.is_zero())))
        .collect())
}

/// Candidate symbols on the chain of a case-i generator of index `k`.
pub fn case_i_candidates(r: i64, k: i64, kind: GeneratorKind) -> Vec<Symbol> {
    let mut out = Vec::new();
    for m in 0..=k + 1 {
        match kind {
            GeneratorKind::FMinus1 => {
                for f in [Family::F, Family::E] {
                    if let Ok(s) = Symbol::new(f, m * (r + 1) - 1, m * r + k) {
                        out.push(s);
                    }
                }
            }
            GeneratorKind::E0 => {
                for f in [Family::F, Family::E] {
                    if let Ok(s) = Symbol::new(f, m * (r + 1), m * r + k) {
                        out.push(s);
                    }
                }
            }
            GeneratorKind::T0 => {
                if let Ok(s) = Symbol::new(Family::Theta, m * (r + 1), m * r + k) {
                    out.push(s);
                }
            }
            _ => {}
        }
    }
    out
}
