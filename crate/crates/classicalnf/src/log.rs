use crate::ClassicalError;
use exactpoly::{Matrix, PolyError, PolyVectorField, Rational};
use liebasis::{bracket, realize_element, NFElement, Symbol};
use num::{BigInt, Zero};
use std::fmt;

/// `exp(ad_y) v = v + [y,v] + [y,[y,v]]/2 + ...`, cut at polynomial degree `n`.
///
/// `y` must have no part of degree below 2, otherwise the series does not
/// terminate under truncation.
pub fn exp_ad_field(y: &PolyVectorField, v: &PolyVectorField, n: u32) -> Result<PolyVectorField, PolyError> {
    if y.is_zero() {
        return Ok(v.truncate(n));
    }
    if y.min_degree().unwrap_or(0) < 2 {
        return Err(PolyError::Precondition(
            "near-identity generator must start at degree 2".into(),
        ));
    }
    let mut out = v.truncate(n);
    let mut term = out.clone();
    let mut j = 1i64;
    loop {
        term = y.lie_bracket(&term)?.truncate(n);
        if term.is_zero() {
            break;
        }
        term = term.scale(&Rational::new(BigInt::from(1), BigInt::from(j)));
        out = out.add(&term)?;
        j += 1;
    }
    Ok(out)
}

/// Element version of [`exp_ad_field`], cut at realization degree `n`.
pub fn exp_ad_element(y: &NFElement, v: &NFElement, n: i64) -> Result<NFElement, ClassicalError> {
    if y.symbols().any(|s| s.degree() < 2) {
        return Err(ClassicalError::Precondition(
            "near-identity generator must avoid the linear symbols".into(),
        ));
    }
    let mut out = v.truncate_degree(n);
    let mut term = out.clone();
    let mut j = 1i64;
    while !y.is_zero() {
        term = bracket(y, &term).truncate_degree(n);
        if term.is_zero() {
            break;
        }
        term = term.scale(&Rational::new(BigInt::from(1), BigInt::from(j)));
        out = out.add(&term);
        j += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    Field(PolyVectorField),
    Element(NFElement),
    Scalar(Rational),
    Matrix(Matrix),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// `v <- exp(ad_Y) v`.
    NearIdentity,
    /// `v <- c v`.
    TimeRescale,
    /// `v <- v + c Θ[0,0]`.
    PhaseShift,
    /// `v <- T⁻¹ v(T ·)`.
    Linear,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepKind::NearIdentity => "near-identity",
            StepKind::TimeRescale => "time-rescale",
            StepKind::PhaseShift => "phase-shift",
            StepKind::Linear => "linear",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogEntry {
    pub grade: i64,
    pub kind: StepKind,
    pub generator: Generator,
}

/// Ordered record of every change of variables and time applied to a system.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TransformationLog {
    entries: Vec<LogEntry>,
}

fn mismatch(kind: StepKind) -> ClassicalError {
    ClassicalError::Precondition(format!("log entry of kind {kind} has an incompatible generator"))
}

impl TransformationLog {
    pub fn new() -> TransformationLog {
        TransformationLog::default()
    }

    pub fn push(&mut self, grade: i64, kind: StepKind, generator: Generator) {
        self.entries.push(LogEntry { grade, kind, generator });
    }

    pub fn extend(&mut self, other: TransformationLog) {
        self.entries.extend(other.entries);
    }

    pub fn entries(&self) -> &[LogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Applies every entry, in order, to a coordinate field; cut at degree `n`.
    pub fn replay_field(&self, v: &PolyVectorField, n: u32) -> Result<PolyVectorField, ClassicalError> {
        let mut v = v.truncate(n);
        for e in &self.entries {
            v = match (e.kind, &e.generator) {
                (StepKind::NearIdentity, Generator::Field(y)) => exp_ad_field(y, &v, n)?,
                (StepKind::NearIdentity, Generator::Element(y)) => exp_ad_field(&realize_element(y), &v, n)?,
                (StepKind::TimeRescale, Generator::Scalar(c)) => v.scale(c),
                (StepKind::PhaseShift, Generator::Scalar(c)) => v.add(&crate::rotation().scale(c))?.truncate(n),
                (StepKind::Linear, Generator::Matrix(t)) => v.linear_change(t)?.truncate(n),
                (k, _) => return Err(mismatch(k)),
            };
        }
        Ok(v)
    }

    /// Applies every entry to an element; coordinate-only entries are refused.
    pub fn replay_element(&self, v: &NFElement, n: i64) -> Result<NFElement, ClassicalError> {
        let mut v = v.truncate_degree(n);
        for e in &self.entries {
            v = match (e.kind, &e.generator) {
                (StepKind::NearIdentity, Generator::Element(y)) => exp_ad_element(y, &v, n)?,
                (StepKind::TimeRescale, Generator::Scalar(c)) => v.scale(c),
                (StepKind::PhaseShift, Generator::Scalar(c)) => {
                    let mut w = v.clone();
                    if !c.is_zero() {
                        w.add_term(Symbol::theta(0, 0), c.clone());
                    }
                    w
                }
                (StepKind::NearIdentity, Generator::Field(_)) | (StepKind::Linear, _) => {
                    return Err(ClassicalError::Precondition(
                        "coordinate-level log entries cannot be replayed on a basis element".into(),
                    ))
                }
                (k, _) => return Err(mismatch(k)),
            };
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactpoly::{int, Vars};

    #[test]
    fn exp_of_commuting_generator_is_identity() {
        let e = NFElement::term(Symbol::theta(1, 1), int(3));
        let v = NFElement::term(Symbol::theta(0, 0), int(1));
        assert_eq!(exp_ad_element(&e, &v, 5).unwrap(), v);
    }

    #[test]
    fn linear_generators_are_refused() {
        let y = PolyVectorField::monomial(&Vars::xyz(), 0, &[1, 0, 0], int(1));
        assert!(exp_ad_field(&y, &y, 3).is_err());
        let e = NFElement::term(Symbol::e(0, 0), int(1));
        assert!(exp_ad_element(&e, &e, 3).is_err());
    }
}
