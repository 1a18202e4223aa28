use crate::HyperError;
use liebasis::{Family, Symbol};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Priority rule for eliminations. Earlier symbols are removed first.
///
/// Off-diagonal symbols always come before diagonal ones. Among the rest,
/// style I takes E before F, style II takes F before E, and Θ comes last;
/// inside a family lower `k` (then lower `l`) comes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Style {
    #[default]
    I,
    II,
}

impl Style {
    fn rank(self, f: Family) -> u8 {
        match (self, f) {
            (Style::I, Family::E) | (Style::II, Family::F) => 0,
            (Style::I, Family::F) | (Style::II, Family::E) => 1,
            (_, Family::Theta) => 2,
        }
    }

    pub fn key(self, s: &Symbol) -> (u8, u8, i64, i64) {
        (u8::from(s.is_diagonal()), self.rank(s.family()), s.k(), s.l())
    }

    pub fn cmp(self, a: &Symbol, b: &Symbol) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    pub fn sort(self, syms: &mut [Symbol]) {
        syms.sort_by_key(|s| self.key(s));
    }
}

impl fmt::Display for Style {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Style::I => "I",
            Style::II => "II",
        })
    }
}

impl FromStr for Style {
    type Err = HyperError;
    fn from_str(s: &str) -> Result<Style, HyperError> {
        match s.trim() {
            "I" | "i" | "1" => Ok(Style::I),
            "II" | "ii" | "2" => Ok(Style::II),
            other => Err(HyperError::Input(format!("unknown style {other:?}, expected I or II"))),
        }
    }
}
