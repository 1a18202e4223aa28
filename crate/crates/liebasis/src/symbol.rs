use crate::BasisError;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    F,
    E,
    Theta,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::F, Family::E, Family::Theta];

    pub fn label(self) -> &'static str {
        match self {
            Family::F => "F",
            Family::E => "E",
            Family::Theta => "Θ",
        }
    }

    /// Smallest permissible `l`.
    pub fn min_l(self) -> i64 {
        match self {
            Family::F => -1,
            _ => 0,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A permissible basis symbol. Ordered by `k`, then family, then `l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Symbol {
    family: Family,
    l: i64,
    k: i64,
}

pub(crate) fn permissible(family: Family, l: i64, k: i64) -> bool {
    k >= 0 && l >= family.min_l() && l <= k
}

impl Symbol {
    pub fn new(family: Family, l: i64, k: i64) -> Result<Symbol, BasisError> {
        if permissible(family, l, k) {
            Ok(Symbol { family, l, k })
        } else {
            Err(BasisError::NotPermissible {
                family: family.label().into(),
                l,
                k,
            })
        }
    }

    /// `F[l,k]`; panics when not permissible.
    pub fn f(l: i64, k: i64) -> Symbol {
        Symbol::new(Family::F, l, k).unwrap_or_else(|e| panic!("{e}"))
    }

    /// `E[l,k]`; panics when not permissible.
    pub fn e(l: i64, k: i64) -> Symbol {
        Symbol::new(Family::E, l, k).unwrap_or_else(|e| panic!("{e}"))
    }

    /// `Θ[l,k]`; panics when not permissible.
    pub fn theta(l: i64, k: i64) -> Symbol {
        Symbol::new(Family::Theta, l, k).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// Polynomial degree of the realization.
    pub fn degree(&self) -> i64 {
        2 * self.k - self.l + 1
    }

    /// `l == k`, or the leading `F[-1,0]`.
    pub fn is_diagonal(&self) -> bool {
        self.l == self.k || (self.family == Family::F && self.l == -1 && self.k == 0)
    }

    /// `F[0,0]`, `E[0,0]` and `Θ[0,0]`.
    pub fn is_linear(&self) -> bool {
        self.l == 0 && self.k == 0
    }

    /// All permissible symbols with `k <= max_k`, in symbol order.
    pub fn all_up_to(max_k: i64) -> Vec<Symbol> {
        let mut out = Vec::new();
        for k in 0..=max_k {
            for family in Family::ALL {
                for l in family.min_l()..=k {
                    out.push(Symbol { family, l, k });
                }
            }
        }
        out
    }

    /// All permissible symbols whose realization has degree `<= max_degree`.
    pub fn all_of_degree_at_most(max_degree: i64) -> Vec<Symbol> {
        Symbol::all_up_to(max_degree)
            .into_iter()
            .filter(|s| s.degree() <= max_degree)
            .collect()
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.k, self.family, self.l).cmp(&(other.k, other.family, other.l))
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.family, self.l, self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permissible_ranges() {
        assert!(Symbol::new(Family::F, -1, 0).is_ok());
        assert!(Symbol::new(Family::E, -1, 0).is_err());
        assert!(Symbol::new(Family::Theta, 0, 0).is_ok());
        assert!(Symbol::new(Family::F, 2, 1).is_err());
        assert!(Symbol::new(Family::E, 0, -1).is_err());
    }

    #[test]
    fn degrees() {
        assert_eq!(Symbol::f(-1, 0).degree(), 2);
        assert_eq!(Symbol::theta(0, 0).degree(), 1);
        assert_eq!(Symbol::e(1, 1).degree(), 2);
        assert_eq!(Symbol::f(0, 1).degree(), 3);
    }

    #[test]
    fn counts() {
        // F has k+2 members per k, E and Θ have k+1
        assert_eq!(Symbol::all_up_to(6).len(), 35 + 28 + 28);
    }
}
