//! Grade-by-grade elimination over the graded pieces of the basis.

use crate::{HyperError, Style};
use classicalnf::{Generator, StepKind, TransformationLog};
use exactpoly::{par, Matrix, Rational};
use liebasis::{bracket, GradingScheme, NFElement, Symbol};
use num::{One, Zero};
use std::fmt;

/// Where series and elements are cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Truncation {
    /// Keep symbols whose realization has polynomial degree `<= n`.
    Degree(i64),
    /// Keep symbols of grade `<= n` under the grading in use.
    Grade(i64),
}

impl Truncation {
    pub fn keeps(&self, g: &GradingScheme, s: &Symbol) -> bool {
        match *self {
            Truncation::Degree(n) => s.degree() <= n,
            Truncation::Grade(n) => g.grade(s) <= n,
        }
    }

    /// Largest `k` of a diagonal symbol that can survive.
    pub fn max_k(&self) -> i64 {
        match *self {
            Truncation::Degree(n) => n - 1,
            Truncation::Grade(n) => n,
        }
    }

    pub fn symbols(&self, g: &GradingScheme) -> Vec<Symbol> {
        let pool = match *self {
            Truncation::Degree(n) => Symbol::all_of_degree_at_most(n),
            // every grading here has grade >= k
            Truncation::Grade(n) => Symbol::all_up_to(n.max(0)),
        };
        pool.into_iter().filter(|s| self.keeps(g, s)).collect()
    }

    pub fn cut(&self, g: &GradingScheme, e: &NFElement) -> NFElement {
        e.filter(|s| self.keeps(g, s))
    }
}

impl fmt::Display for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Truncation::Degree(n) => write!(f, "degree <= {n}"),
            Truncation::Grade(n) => write!(f, "grade <= {n}"),
        }
    }
}

/// `exp(ad_y) v` keeping only the symbols accepted by `keep`.
pub fn exp_ad(y: &NFElement, v: &NFElement, keep: impl Fn(&Symbol) -> bool) -> NFElement {
    let mut out = v.filter(&keep);
    let mut term = out.clone();
    let mut j = 1i64;
    while !y.is_zero() {
        term = bracket(y, &term).filter(&keep);
        if term.is_zero() {
            break;
        }
        term = term.scale(&Rational::new(1.into(), j.into()));
        out = out.add(&term);
        j += 1;
    }
    out
}

/// What happened at one grade.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradeStep {
    pub grade: i64,
    /// Pivot symbols, i.e. the terms that can be removed at this grade.
    pub removable: Vec<Symbol>,
    /// Nonzero terms left at this grade.
    pub survivors: Vec<Symbol>,
}

#[derive(Clone, Debug)]
pub struct SweepResult {
    pub element: NFElement,
    pub log: TransformationLog,
    pub steps: Vec<GradeStep>,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct SweepSpec {
    pub grading: GradingScheme,
    pub base: i64,
    pub trunc: Truncation,
    pub style: Style,
    /// Only generators of grade exactly `n` at step `n` (the second level).
    pub single_grade: bool,
    /// Whether an off-diagonal survivor is a pivot failure (true) or an internal error.
    pub pivot_errors: bool,
}

type Row = Vec<Rational>;

fn axpy(a: &mut [Rational], f: &Rational, b: &[Rational]) {
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x -= f * y;
        }
    }
}

/// Reduced echelon form with pivot = first nonzero entry, carrying the
/// combination vector along.
fn echelon(vecs: Vec<(Row, Row)>) -> Vec<(usize, Row, Row)> {
    let mut ech: Vec<(usize, Row, Row)> = Vec::new();
    for (mut vec, mut kv) in vecs {
        for (pv, pvec, pkv) in &ech {
            if !vec[*pv].is_zero() {
                let f = vec[*pv].clone();
                axpy(&mut vec, &f, pvec);
                axpy(&mut kv, &f, pkv);
            }
        }
        let Some(p) = vec.iter().position(|x| !x.is_zero()) else { continue };
        let inv = vec[p].recip();
        vec.iter_mut().for_each(|x| *x *= &inv);
        kv.iter_mut().for_each(|x| *x *= &inv);
        for (_, pvec, pkv) in ech.iter_mut() {
            if !pvec[p].is_zero() {
                let g = pvec[p].clone();
                axpy(pvec, &g, &vec);
                axpy(pkv, &g, &kv);
            }
        }
        ech.push((p, vec, kv));
    }
    ech.sort_by_key(|e| e.0);
    ech
}

pub(crate) fn sweep(v: &NFElement, spec: SweepSpec) -> Result<SweepResult, HyperError> {
    let g = spec.grading;
    g.validate()?;
    let keep = |s: &Symbol| spec.trunc.keeps(&g, s);
    let syms = spec.trunc.symbols(&g);
    let Some(top) = syms.iter().map(|s| g.grade(s)).max() else {
        return Ok(SweepResult { element: v.clone(), log: TransformationLog::new(), steps: vec![] });
    };
    let mut v = v.filter(keep);
    let gens: Vec<Symbol> = syms.iter().copied().filter(|s| g.grade(s) >= 1 && !s.is_linear()).collect();
    let mut log = TransformationLog::new();
    let mut steps = Vec::new();
    for n in 1..=(top - spec.base) {
        let tg = spec.base + n;
        let gn: Vec<Symbol> = gens
            .iter()
            .copied()
            .filter(|s| if spec.single_grade { g.grade(s) == n } else { g.grade(s) <= n })
            .collect();
        let mut target: Vec<Symbol> = syms.iter().copied().filter(|s| g.grade(s) == tg).collect();
        spec.style.sort(&mut target);
        if gn.is_empty() || target.is_empty() {
            continue;
        }
        let cur_v = v.clone();
        let imgs: Vec<NFElement> = par::map(&gn, |s| bracket(&NFElement::term(*s, Rational::one()), &cur_v).filter(keep));

        // combinations of generators whose images vanish strictly between base and tg
        let mut lower: Vec<Symbol> = imgs
            .iter()
            .flat_map(|im| im.symbols().copied().collect::<Vec<_>>())
            .filter(|t| {
                let gt = g.grade(t);
                spec.base < gt && gt < tg
            })
            .collect();
        lower.sort();
        lower.dedup();
        let kernel: Vec<Row> = if lower.is_empty() {
            (0..gn.len())
                .map(|j| (0..gn.len()).map(|i| if i == j { Rational::one() } else { Rational::zero() }).collect())
                .collect()
        } else {
            let rows: Vec<Row> = lower.iter().map(|t| imgs.iter().map(|im| im.coeff(t)).collect()).collect();
            Matrix::from_rows(rows).map_err(|e| HyperError::Internal(e.to_string()))?.nullspace()
        };
        let vecs: Vec<(Row, Row)> = par::map(&kernel, |kv| {
            let vec = target
                .iter()
                .map(|t| {
                    kv.iter().zip(&imgs).fold(Rational::zero(), |acc, (c, im)| {
                        if c.is_zero() {
                            acc
                        } else {
                            acc + c * im.coeff(t)
                        }
                    })
                })
                .collect();
            (vec, kv.clone())
        });
        let ech = echelon(vecs);

        let mut cur: Row = target.iter().map(|t| v.coeff(t)).collect();
        let mut ycoef: Row = vec![Rational::zero(); gn.len()];
        for (pv, pvec, pkv) in &ech {
            let c = cur[*pv].clone();
            if !c.is_zero() {
                axpy(&mut cur, &c, pvec);
                axpy(&mut ycoef, &c, pkv);
            }
        }
        let y = NFElement::from_terms(gn.iter().copied().zip(ycoef).filter(|(_, c)| !c.is_zero()));
        if !y.is_zero() {
            v = exp_ad(&y, &v, keep);
            log.push(tg, StepKind::NearIdentity, Generator::Element(y));
        }
        let got: Row = target.iter().map(|t| v.coeff(t)).collect();
        if got != cur {
            return Err(HyperError::Internal(format!("grade {tg}: elimination did not reach its target")));
        }
        let survivors: Vec<Symbol> = target.iter().zip(&cur).filter(|(_, c)| !c.is_zero()).map(|(t, _)| *t).collect();
        if let Some(bad) = survivors.iter().find(|t| !t.is_diagonal()) {
            let detail = format!("off-diagonal term {bad} cannot be removed; the pivot it needs vanishes");
            return Err(if spec.pivot_errors {
                HyperError::NonAlgebraic { grade: tg, detail }
            } else {
                HyperError::Internal(format!("grade {tg}: {detail}"))
            });
        }
        steps.push(GradeStep {
            grade: tg,
            removable: ech.iter().map(|(p, _, _)| target[*p]).collect(),
            survivors,
        });
    }
    Ok(SweepResult { element: v, log, steps })
}
