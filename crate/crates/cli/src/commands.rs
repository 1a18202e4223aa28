use crate::checks::{suite, SUITES};
use crate::input::{parse_coeff, InputDocument};
use crate::report::{element_terms, opt, CaseReport, PipelineReport};
use crate::CliError;
use classicalnf::fixtures::{ks_reconciled, rossler, Fixture};
use classicalnf::{classical_normal_form, validate_linear, HopfZeroSystem, TransformationLog};
use exactpoly::{Matrix, Rational};
use hypernf::{classify, remove_phase, second_level, simplest_normal_form, CaseVariant, Pipeline, Style, Truncation};
use liebasis::{bt_map, planar_reduce, Family, NFElement};
use num::One;
use serde::Serialize;
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Basis,
    Cylindrical,
    Json,
}

impl FromStr for OutputFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "basis" => Ok(OutputFormat::Basis),
            "cylindrical" => Ok(OutputFormat::Cylindrical),
            "json" => Ok(OutputFormat::Json),
            _ => Err(CliError::Malformed(format!("unknown output format {s:?}; use basis, cylindrical or json"))),
        }
    }
}

/// Flags shared by every command.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub input: Option<PathBuf>,
    pub example: Option<String>,
    pub a: Option<String>,
    pub degree: Option<u32>,
    pub style: Option<String>,
    pub output: OutputFormat,
    pub suite: Option<String>,
}

/// Text to print and the exit code to return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { text, code: 0 }
    }
}

enum Content {
    System(HopfZeroSystem),
    Element(NFElement),
}

struct Source {
    doc: InputDocument,
    content: Content,
    transform: Option<Matrix>,
    time_scale: Rational,
    log: TransformationLog,
    default_degree: u32,
}

fn from_fixture(f: Fixture, degree: u32) -> Source {
    Source {
        doc: InputDocument::from_field(&f.label, f.system.field(), Some(degree)),
        content: Content::System(f.system),
        transform: Some(f.transform),
        time_scale: f.time_scale,
        log: f.log,
        default_degree: degree,
    }
}

fn example_source(name: &str, a: Option<&str>) -> Result<Source, CliError> {
    match name {
        "ks" => Ok(from_fixture(ks_reconciled()?, 6)),
        "rossler" => {
            let a = parse_coeff(a.unwrap_or("1"))?;
            Ok(from_fixture(rossler(&a)?, 3))
        }
        _ => Err(CliError::Malformed(format!("unknown example {name:?}; use rossler or ks"))),
    }
}

fn load(opts: &Options) -> Result<Source, CliError> {
    match (&opts.input, &opts.example) {
        (Some(_), Some(_)) => Err(CliError::Malformed("give --input or --example, not both".into())),
        (None, None) => Err(CliError::Malformed("no system given; use --input PATH or --example NAME".into())),
        (None, Some(name)) => example_source(name, opts.a.as_deref()),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Malformed(format!("cannot read {}: {e}", path.display())))?;
            let doc = InputDocument::parse(&text)?;
            let content = match (doc.field()?, doc.basis_element()?) {
                (Some(v), _) => Content::System(validate_linear(&v)?),
                (None, Some(e)) => Content::Element(e),
                (None, None) => unreachable!("checked by InputDocument::parse"),
            };
            Ok(Source {
                default_degree: doc.degree.unwrap_or(3),
                doc,
                content,
                transform: None,
                time_scale: Rational::one(),
                log: TransformationLog::new(),
            })
        }
    }
}

fn degree(opts: &Options, src: &Source) -> Result<u32, CliError> {
    let n = opts.degree.unwrap_or(src.default_degree);
    if n < 2 {
        return Err(CliError::Precondition(format!("truncation degree must be at least 2, got {n}")));
    }
    Ok(n)
}

fn style_flag(opts: &Options, src: &Source) -> Result<Option<Style>, CliError> {
    opts.style
        .as_deref()
        .or(src.doc.style.as_deref())
        .map(|s| Style::from_str(s).map_err(|_| CliError::Malformed(format!("unknown style {s:?}; use I or II"))))
        .transpose()
}

fn first_level(src: &Source, n: u32) -> Result<(NFElement, TransformationLog), CliError> {
    let mut log = src.log.clone();
    let e = match &src.content {
        Content::System(sys) => {
            let (e, l) = classical_normal_form(sys, n)?;
            log.extend(l);
            e
        }
        Content::Element(e) => e.truncate_degree(n as i64),
    };
    Ok((e, log))
}

fn run_pipeline(opts: &Options, src: &Source) -> Result<(PipelineReport, Pipeline), CliError> {
    let n = degree(opts, src)?;
    let (e1, log1) = first_level(src, n)?;
    let trunc = Truncation::Degree(n as i64);
    let chosen = style_flag(opts, src)?;
    let mut style = chosen.unwrap_or_default();
    let mut p = simplest_normal_form(&e1, style, trunc)?;
    let mut notices = Vec::new();
    if chosen.is_none() && p.infinite.tag.variant == CaseVariant::CaseII {
        style = Style::II;
        p = simplest_normal_form(&e1, style, trunc)?;
        notices.push("case ii: style II used by default; pass --style I to override".into());
    }
    let report = PipelineReport::build(src.doc.clone(), n, src.transform.as_ref(), &src.time_scale, &log1, &p, style, notices);
    Ok((report, p))
}

fn json<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("report types serialize");
    s.push('\n');
    s
}

pub fn normalize(opts: &Options) -> Result<Outcome, CliError> {
    let src = load(opts)?;
    let (report, _) = run_pipeline(opts, &src)?;
    Ok(Outcome::ok(match opts.output {
        OutputFormat::Basis => report.basis_text(),
        OutputFormat::Cylindrical => report.cylindrical_text(),
        OutputFormat::Json => json(&report),
    }))
}

pub fn classify_cmd(opts: &Options) -> Result<Outcome, CliError> {
    let src = load(opts)?;
    let n = degree(opts, &src)?;
    let (e1, _) = first_level(&src, n)?;
    let trunc = Truncation::Degree(n as i64);
    let (v, _) = remove_phase(&e1)?;
    let (e2, _) = second_level(&v, trunc)?;
    let tag = classify(&e2, trunc.max_k())?;
    let report = CaseReport::from(&tag);
    Ok(Outcome::ok(match opts.output {
        OutputFormat::Json => json(&report),
        _ => {
            let mut s = format!("case {} (r={}, s={}, p={})\n", tag.variant, opt(tag.r), opt(tag.s), opt(tag.p));
            if let Some(r) = &report.ratio {
                s.push_str(&format!("a_s/b_s = {r}\n"));
            }
            if let Some(d) = &tag.diagnostic {
                s.push_str(&format!("note: {d}\n"));
            }
            s
        }
    }))
}

pub fn verify(opts: &Options) -> Result<Outcome, CliError> {
    let name = opts.suite.as_deref().unwrap_or("all");
    let checks = suite(name).ok_or_else(|| {
        CliError::Malformed(format!("unknown suite {name:?}; use one of {}, all", SUITES.join(", ")))
    })?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    let text = match opts.output {
        OutputFormat::Json => json(&checks),
        _ => {
            let mut s: String = checks.iter().map(|c| format!("{c}\n")).collect();
            s.push_str(&format!("{} passed, {failed} failed\n", checks.len() - failed));
            s
        }
    };
    Ok(Outcome { text, code: if failed == 0 { 0 } else { 3 } })
}

#[derive(Serialize)]
struct BtReport {
    element: Vec<(String, String)>,
    planar: String,
    pushforward: String,
    labels: Vec<(String, String)>,
}

pub fn bt_reduce(opts: &Options) -> Result<Outcome, CliError> {
    let src = load(opts)?;
    let e = match &src.content {
        Content::Element(e) => e.clone(),
        Content::System(_) => run_pipeline(opts, &src)?.1.simplest,
    };
    let e = e.filter(|s| s.family() != Family::Theta);
    if e.is_zero() {
        return Err(CliError::Precondition("the element has no F or E part to reduce".into()));
    }
    let planar = planar_reduce(&e)?;
    let push = planar.pushforward_bt().map_err(|e| CliError::Failure(e.to_string()))?;
    let labels = bt_map(&e)?;
    let report = BtReport {
        element: element_terms(&e),
        planar: planar.to_string(),
        pushforward: push.to_string(),
        labels: labels.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
    };
    Ok(Outcome::ok(match opts.output {
        OutputFormat::Json => json(&report),
        _ => {
            let labels: Vec<String> = report.labels.iter().map(|(k, v)| format!("{v}*{k}")).collect();
            format!("planar (x, rho): {}\nBogdanov-Takens (xb, yb): {}\nlabels: {}\n", report.planar, report.pushforward, labels.join(" + "))
        }
    }))
}

/// Prints the built-in example as an input document, ready for `--input`.
pub fn example(opts: &Options) -> Result<Outcome, CliError> {
    let name = opts.example.as_deref().ok_or_else(|| CliError::Malformed("example needs --example rossler|ks".into()))?;
    let src = example_source(name, opts.a.as_deref())?;
    let mut doc = src.doc;
    if let Some(n) = opts.degree {
        doc.degree = Some(n);
    }
    Ok(Outcome::ok(match opts.output {
        OutputFormat::Basis | OutputFormat::Json => json(&doc),
        OutputFormat::Cylindrical => {
            return Err(CliError::Malformed("example prints an input document; use --output json".into()))
        }
    }))
}

