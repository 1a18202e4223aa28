//! Dense exact linear algebra over the rationals.
//!
//! Pivoting is deterministic: the pivot of a column is the first row at or
//! below the current position with a nonzero entry.

use crate::{par, PolyError, Rational};
use num::{One, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: Vec<Vec<Rational>>,
    ncols: usize,
}

/// Rows below this count are eliminated on the calling thread.
const PAR_ROWS: usize = 48;

impl Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Matrix {
        Matrix {
            rows: vec![vec![Rational::zero(); ncols]; nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Matrix, PolyError> {
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(PolyError::Shape {
                rows: rows.len(),
                cols: bad.len(),
                expected: format!("{ncols} columns in every row"),
            });
        }
        Ok(Matrix { rows, ncols })
    }

    /// Builds a matrix whose columns are the given vectors (all of length `nrows`).
    pub fn from_columns(nrows: usize, cols: &[Vec<Rational>]) -> Matrix {
        let mut m = Matrix::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), nrows, "column {j} has the wrong length");
            for (i, v) in c.iter().enumerate() {
                m.rows[i][j] = v.clone();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.rows[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.rows[i]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.ncols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r.iter().enumerate() {
                t.rows[j][i] = v.clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, PolyError> {
        if self.ncols != other.nrows() {
            return Err(PolyError::Shape {
                rows: other.nrows(),
                cols: other.ncols,
                expected: format!("{} rows", self.ncols),
            });
        }
        let rows = par::map(&self.rows, |r| {
            (0..other.ncols)
                .map(|j| {
                    let mut acc = Rational::zero();
                    for (k, a) in r.iter().enumerate() {
                        if !a.is_zero() && !other.rows[k][j].is_zero() {
                            acc += a * &other.rows[k][j];
                        }
                    }
                    acc
                })
                .collect()
        });
        Ok(Matrix {
            rows,
            ncols: other.ncols,
        })
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ncols);
        self.rows
            .iter()
            .map(|r| {
                let mut acc = Rational::zero();
                for (a, b) in r.iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].recip();
            for v in rows[r].iter_mut().skip(c) {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
            let pivot_row = rows[r].clone();
            let eliminate = |row: &mut Vec<Rational>| {
                if row[c].is_zero() {
                    return;
                }
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !pv.is_zero() {
                        *v -= &f * pv;
                    }
                }
            };
            let (above, rest) = rows.split_at_mut(r);
            let below = &mut rest[1..];
            if above.len() + below.len() >= PAR_ROWS {
                par::for_each_mut(above, eliminate);
                par::for_each_mut(below, eliminate);
            } else {
                above.iter_mut().for_each(eliminate);
                below.iter_mut().for_each(eliminate);
            }
            pivots.push(c);
            r += 1;
        }
        (
            Matrix {
                rows,
                ncols: self.ncols,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space; one vector per free column, free entry 1.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (red, pivots) = self.rref();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&j| !is_pivot[j])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.ncols];
                v[free] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -red.rows[i][free].clone();
                }
                v
            })
            .collect()
    }

    /// Some solution of `A x = b` with free variables set to zero, or `None` if inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.nrows());
        let aug = Matrix {
            rows: self
                .rows
                .iter()
                .zip(b)
                .map(|(r, bi)| {
                    let mut r = r.clone();
                    r.push(bi.clone());
                    r
                })
                .collect(),
            ncols: self.ncols + 1,
        };
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.ncols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.ncols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red.rows[i][self.ncols].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Matrix, PolyError> {
        let n = self.nrows();
        if n != self.ncols {
            return Err(PolyError::Shape {
                rows: n,
                cols: self.ncols,
                expected: "a square matrix".into(),
            });
        }
        let aug = Matrix {
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let mut r = r.clone();
                    r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                    r
                })
                .collect(),
            ncols: 2 * n,
        };
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(PolyError::Singular);
        }
        Ok(Matrix {
            rows: red.rows.into_iter().map(|r| r[n..].to_vec()).collect(),
            ncols: n,
        })
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
