use std::cmp::Ordering;

/// Exponent vector over at most three variables; unused slots stay zero.
///
/// Ordered by total degree, then lexicographically on the exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u32; 3],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; 3] };

    pub fn new(exps: &[u32]) -> Monomial {
        assert!(exps.len() <= 3, "at most three variables are supported");
        let mut e = [0; 3];
        e[..exps.len()].copy_from_slice(exps);
        Monomial { exps: e }
    }

    pub fn exps(&self) -> &[u32; 3] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: [
                self.exps[0] + other.exps[0],
                self.exps[1] + other.exps[1],
                self.exps[2] + other.exps[2],
            ],
        }
    }

    /// Every monomial of total degree `d` in `nvars` variables, ascending.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        match nvars {
            1 => out.push(Monomial::new(&[d])),
            2 => {
                for i in 0..=d {
                    out.push(Monomial::new(&[i, d - i]));
                }
            }
            3 => {
                for i in 0..=d {
                    for j in 0..=d - i {
                        out.push(Monomial::new(&[i, j, d - i - j]));
                    }
                }
            }
            _ => panic!("unsupported arity {nvars}"),
        }
        out.sort();
        out
    }

    /// `∂/∂x_i`: returns the multiplier and the lowered monomial, or `None` if it vanishes.
    pub fn diff(&self, i: usize) -> Option<(u32, Monomial)> {
        let e = self.exps[i];
        if e == 0 {
            return None;
        }
        let mut m = *self;
        m.exps[i] -= 1;
        Some((e, m))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
