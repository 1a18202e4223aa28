use crate::case::{check_second_level_shape, classify, diagonal_coefficients, CaseTag, CaseVariant};
use crate::sequences::{u_w_minus1, u_w_zero};
use crate::sweep::{sweep, GradeStep, SweepSpec, Truncation};
use crate::{remove_phase, reinstate_phase, rescale_time, HyperError, Style};
use classicalnf::{Generator, StepKind, TransformationLog};
use exactpoly::Rational;
use liebasis::{CylindricalSystem, GradingScheme, NFElement, Symbol};
use num::{One, Zero};

fn lead_coefficient(e: &NFElement) -> Result<Rational, HyperError> {
    let a0 = e.coeff(&Symbol::f(-1, 0));
    if a0.is_zero() {
        return Err(HyperError::Precondition(
            "the F[-1,0] coefficient is zero; this degenerate family is outside the scope of the method".into(),
        ));
    }
    Ok(a0)
}

/// Second-level normal form: every off-diagonal term other than `F[-1,0]`
/// is removed, grade by grade in `k`.
pub fn second_level(e: &NFElement, trunc: Truncation) -> Result<(NFElement, TransformationLog), HyperError> {
    lead_coefficient(e)?;
    let t00 = Symbol::theta(0, 0);
    let phase = e.coeff(&t00);
    let v = e.filter(|s| *s != t00);
    let spec = SweepSpec {
        grading: GradingScheme::SecondLevel,
        base: 0,
        trunc,
        style: Style::I,
        single_grade: true,
        pivot_errors: false,
    };
    let out = sweep(&v, spec)?;
    let mut el = out.element;
    if !phase.is_zero() {
        el.add_term(t00, phase);
    }
    Ok((el, out.log))
}

/// A value from the case proofs that must be nonzero for an elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub name: String,
    pub value: Rational,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        !self.value.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct InfiniteLevel {
    pub element: NFElement,
    pub log: TransformationLog,
    pub tag: CaseTag,
    pub grading: GradingScheme,
    pub steps: Vec<GradeStep>,
    pub certificates: Vec<Certificate>,
    /// Style I in case ii is beyond what the case theorem covers.
    pub experimental: bool,
}

/// Nonzero-ness of `u⁻¹_{k+2}, w⁻¹_{k+2}, u⁰_{l+1}, w⁰_{l+1}` in the ranges a
/// case-iii truncation at degree `n` needs.
pub fn case_iii_certificates(tag: &CaseTag, n: i64) -> Vec<Certificate> {
    let (Some(s), Some(a), Some(b)) = (tag.s, tag.a_s.as_ref(), tag.b_s.as_ref()) else {
        return vec![];
    };
    let mut out = Vec::new();
    for k in 0..=((n - 3).max(-1) / (s + 1)) {
        if n < 3 {
            break;
        }
        let (u, w) = u_w_minus1(k, s, a, b, (k + 3) as usize);
        out.push(Certificate { name: format!("u^-1_{} (k={k})", k + 2), value: u[(k + 2) as usize].clone() });
        out.push(Certificate { name: format!("w^-1_{} (k={k})", k + 2), value: w[(k + 2) as usize].clone() });
    }
    for l in 0..(n / (s + 1)) {
        let (u, w) = u_w_zero(l, s, a, b, (l + 2) as usize);
        out.push(Certificate { name: format!("u^0_{} (k={l})", l + 1), value: u[(l + 1) as usize].clone() });
        out.push(Certificate { name: format!("w^0_{} (k={l})", l + 1), value: w[(l + 1) as usize].clone() });
    }
    out
}

/// Simplest normal form of a second-level element with `Θ[0,0]` removed.
///
/// Time is rescaled so that the `F[-1,0]` coefficient is 1 during the sweep
/// and scaled back afterwards; both steps are logged.
pub fn infinite_level(e2: &NFElement, style: Style, trunc: Truncation) -> Result<InfiniteLevel, HyperError> {
    check_second_level_shape(e2)?;
    if !e2.coeff(&Symbol::theta(0, 0)).is_zero() {
        return Err(HyperError::Precondition("remove Θ[0,0] before the infinite-level sweep".into()));
    }
    let a0 = lead_coefficient(e2)?;
    let mut log = TransformationLog::new();
    let (v, factor) = rescale_time(e2, &Rational::one())?;
    if !factor.is_one() {
        log.push(0, StepKind::TimeRescale, Generator::Scalar(factor.clone()));
    }
    let mut tag = classify(&v, trunc.max_k())?;
    let Some(mut grading) = tag.grading() else {
        return Err(HyperError::Precondition(
            tag.diagnostic.clone().unwrap_or_else(|| "degenerate second-level form".into()),
        ));
    };
    let base = tag.base_index().expect("non-degenerate");
    let run = |g: GradingScheme| {
        sweep(
            &v,
            SweepSpec { grading: g, base, trunc, style, single_grade: false, pivot_errors: true },
        )
    };
    let mut out = run(grading)?;
    if tag.variant == CaseVariant::CaseI {
        // r2 and p1 are read off the (r+1)-th level; the Θ grading changes once s >= r2
        let [a, _, c] = diagonal_coefficients(&out.element);
        let r = tag.r.expect("case i has r");
        tag.r2 = a.keys().copied().find(|&k| k > r);
        tag.p1 = tag.p.and_then(|p| c.keys().copied().find(|&k| k >= p));
        if let (Some(r2), Some(p1), Some(s)) = (tag.r2, tag.p1, tag.s) {
            if s >= r2 {
                grading = GradingScheme::CaseIUpdated { r, r2, p1 };
                out = run(grading)?;
            }
        }
    }
    log.extend(out.log);
    let mut element = out.element;
    if !factor.is_one() {
        let back = factor.recip();
        element = element.scale(&back);
        log.push(0, StepKind::TimeRescale, Generator::Scalar(back));
    }
    // report leading values at the caller's time scale
    tag.a0 = a0;
    let rescale = |x: &mut Option<Rational>| {
        if let Some(v) = x.as_mut() {
            *v = &*v / &factor;
        }
    };
    rescale(&mut tag.a_r);
    rescale(&mut tag.b_s);
    rescale(&mut tag.a_s);
    let certificates = match (tag.variant, trunc) {
        (CaseVariant::CaseIII, Truncation::Degree(n)) => case_iii_certificates(&tag, n),
        (CaseVariant::CaseIII, Truncation::Grade(n)) => case_iii_certificates(&tag, n),
        _ => vec![],
    };
    Ok(InfiniteLevel {
        element,
        log,
        experimental: tag.variant == CaseVariant::CaseII && style == Style::I,
        tag,
        grading,
        steps: out.steps,
        certificates,
    })
}

/// All stages from a first-level normal form to the simplest normal form.
#[derive(Clone, Debug)]
pub struct Pipeline {
    pub first_level: NFElement,
    pub second_level: NFElement,
    /// Simplest normal form, `Θ[0,0]` reinstated.
    pub simplest: NFElement,
    pub infinite: InfiniteLevel,
    /// Every step from `first_level` to `simplest`, in order.
    pub log: TransformationLog,
    pub phase: bool,
}

pub fn simplest_normal_form(e1: &NFElement, style: Style, trunc: Truncation) -> Result<Pipeline, HyperError> {
    let (v, phase) = remove_phase(e1)?;
    let mut log = TransformationLog::new();
    log.push(0, StepKind::PhaseShift, Generator::Scalar(-Rational::one()));
    let (e2, l2) = second_level(&v, trunc)?;
    log.extend(l2);
    let inf = infinite_level(&e2, style, trunc)?;
    log.extend(inf.log.clone());
    log.push(0, StepKind::PhaseShift, Generator::Scalar(Rational::one()));
    Ok(Pipeline {
        first_level: e1.clone(),
        second_level: reinstate_phase(&e2, phase),
        simplest: reinstate_phase(&inf.element, phase),
        infinite: inf,
        log,
        phase,
    })
}

/// Cylindrical form `(x, ρ, θ)`; `phase` adds the unit rotation to `θ'`.
pub fn to_cylindrical(e: &NFElement, phase: bool) -> CylindricalSystem {
    CylindricalSystem::from_element(e, phase)
}
