use crate::input::InputDocument;
use classicalnf::{Generator, TransformationLog};
use exactpoly::Matrix;
use hypernf::{CaseTag, Certificate, Pipeline, Style};
use liebasis::{CylindricalSystem, NFElement};
use serde::Serialize;

/// An element as `[symbol, coefficient]` pairs in basis order.
pub fn element_terms(e: &NFElement) -> Vec<(String, String)> {
    e.iter().map(|(s, c)| (s.to_string(), c.to_string())).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub variant: String,
    pub r: Option<i64>,
    pub s: Option<i64>,
    pub p: Option<i64>,
    pub r2: Option<i64>,
    pub s2: Option<i64>,
    pub p1: Option<i64>,
    pub a0: String,
    pub a_r: Option<String>,
    pub b_s: Option<String>,
    pub a_s: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl From<&CaseTag> for CaseReport {
    fn from(t: &CaseTag) -> Self {
        let s = |x: &Option<exactpoly::Rational>| x.as_ref().map(|v| v.to_string());
        let ratio = match (&t.a_s, &t.b_s) {
            (Some(a), Some(b)) => Some((a / b).to_string()),
            _ => None,
        };
        CaseReport {
            variant: t.variant.to_string(),
            r: t.r,
            s: t.s,
            p: t.p,
            r2: t.r2,
            s2: t.s2,
            p1: t.p1,
            a0: t.a0.to_string(),
            a_r: s(&t.a_r),
            b_s: s(&t.b_s),
            a_s: s(&t.a_s),
            ratio,
            diagnostic: t.diagnostic.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CylindricalReport {
    pub x_dot: String,
    pub rho_dot: String,
    pub theta_dot: String,
}

impl From<&CylindricalSystem> for CylindricalReport {
    fn from(c: &CylindricalSystem) -> Self {
        CylindricalReport { x_dot: c.x_dot.to_string(), rho_dot: c.rho_dot.to_string(), theta_dot: c.theta_dot.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogLine {
    pub stage: String,
    pub grade: i64,
    pub kind: String,
    pub generator: String,
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m.get(i, j).to_string()).collect()).collect()
}

pub fn log_lines(stage: &str, log: &TransformationLog) -> Vec<LogLine> {
    log.entries()
        .iter()
        .map(|e| LogLine {
            stage: stage.to_string(),
            grade: e.grade,
            kind: e.kind.to_string(),
            generator: match &e.generator {
                Generator::Field(v) => v.to_string(),
                Generator::Element(y) => y.to_string(),
                Generator::Scalar(c) => c.to_string(),
                Generator::Matrix(m) => format!("{:?}", matrix_rows(m)),
            },
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub name: String,
    pub value: String,
    pub holds: bool,
}

impl From<&Certificate> for CertificateReport {
    fn from(c: &Certificate) -> Self {
        CertificateReport { name: c.name.clone(), value: c.value.to_string(), holds: c.holds() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    pub input: InputDocument,
    pub degree: u32,
    /// `old = T new`; absent when the input was already in Hopf-zero shape.
    pub linear_transform: Option<Vec<Vec<String>>>,
    pub time_scale: String,
    pub first_level: Vec<(String, String)>,
    pub second_level: Vec<(String, String)>,
    pub case: CaseReport,
    pub style: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notices: Vec<String>,
    pub experimental: bool,
    pub simplest: Vec<(String, String)>,
    pub cylindrical: CylindricalReport,
    pub log: Vec<LogLine>,
    pub certificates: Vec<CertificateReport>,
}

impl PipelineReport {
    #[allow(clippy::too_many_arguments)]
    pub fn build(
        input: InputDocument,
        degree: u32,
        transform: Option<&Matrix>,
        time_scale: &exactpoly::Rational,
        first_log: &TransformationLog,
        p: &Pipeline,
        style: Style,
        notices: Vec<String>,
    ) -> PipelineReport {
        let mut log = log_lines("first-level", first_log);
        log.extend(log_lines("hypernormal", &p.log));
        PipelineReport {
            input,
            degree,
            linear_transform: transform.map(matrix_rows),
            time_scale: time_scale.to_string(),
            first_level: element_terms(&p.first_level),
            second_level: element_terms(&p.second_level),
            case: (&p.infinite.tag).into(),
            style: style.to_string(),
            notices,
            experimental: p.infinite.experimental,
            simplest: element_terms(&p.simplest),
            cylindrical: (&hypernf::to_cylindrical(&p.simplest, false)).into(),
            log,
            certificates: p.infinite.certificates.iter().map(Into::into).collect(),
        }
    }

    /// Human-readable summary of the element stages.
    pub fn basis_text(&self) -> String {
        let join = |t: &[(String, String)]| {
            if t.is_empty() {
                "0".to_string()
            } else {
                t.iter().map(|(s, c)| format!("{c}*{s}")).collect::<Vec<_>>().join(" + ")
            }
        };
        let mut out = String::new();
        if let Some(l) = &self.input.label {
            out.push_str(&format!("system: {l}\n"));
        }
        out.push_str(&format!("degree: {}\n", self.degree));
        out.push_str(&format!("first level: {}\n", join(&self.first_level)));
        out.push_str(&format!("second level: {}\n", join(&self.second_level)));
        let c = &self.case;
        out.push_str(&format!(
            "case: {} (r={}, s={}, p={})\n",
            c.variant,
            opt(c.r),
            opt(c.s),
            opt(c.p)
        ));
        out.push_str(&format!("style: {}{}\n", self.style, if self.experimental { " (experimental)" } else { "" }));
        for n in &self.notices {
            out.push_str(&format!("notice: {n}\n"));
        }
        out.push_str(&format!("simplest: {}\n", join(&self.simplest)));
        out
    }

    pub fn cylindrical_text(&self) -> String {
        let c = &self.cylindrical;
        format!("x' = {}\nrho' = {}\ntheta' = {}\n", c.x_dot, c.rho_dot, c.theta_dot)
    }
}

pub fn opt(x: Option<i64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_else(|| "-".into())
}
