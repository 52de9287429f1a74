use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::Rational;
use crate::{Error, Result};

/// Dense row-major matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::LengthMismatch {
                what: "matrix row",
                expected: ncols,
                actual: bad.len(),
            });
        }
        Self::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Builds an `rows x cols` matrix from `f(i, j)` with zero-based indices.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Rational,
    ) -> Result<Self> {
        let entries = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Self::new(rows, cols, entries)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// The matrix with row `row` and column `col` removed (zero-based).
    /// Returns `None` when that would leave an empty matrix.
    pub fn minor(&self, row: usize, col: usize) -> Option<Self> {
        if self.rows < 2 || self.cols < 2 {
            return None;
        }
        let entries = (0..self.rows)
            .filter(|&i| i != row)
            .flat_map(|i| {
                (0..self.cols)
                    .filter(move |&j| j != col)
                    .map(move |j| self.get(i, j).clone())
            })
            .collect();
        Some(ExactMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        })
    }

    fn ensure_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Each row is first scaled by the lcm of its denominators, so the
    /// elimination itself runs over the integers, every intermediate being
    /// a minor of the scaled matrix.
    pub fn det(&self) -> Result<Rational> {
        self.ensure_square()?;
        let n = self.rows;
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let row = self.row(i);
                let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                scale *= &lcm;
                row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
            })
            .collect();

        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != k {
                m.swap(p, k);
                negate = !negate;
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let v = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let det = if negate { -prev } else { prev };
        Ok(Rational::new(det, scale))
    }

    /// Determinant by Laplace expansion along the first row. Exponential;
    /// intended as an independent check for small sizes.
    pub fn det_cofactor(&self) -> Result<Rational> {
        self.ensure_square()?;
        Ok(cofactor(self))
    }
}

fn cofactor(m: &ExactMatrix) -> Rational {
    if m.rows == 1 {
        return m.entries[0].clone();
    }
    let mut total = Rational::zero();
    for j in 0..m.cols {
        let a = m.get(0, j);
        if a.is_zero() {
            continue;
        }
        let minor = m.minor(0, j).expect("size >= 2");
        let term = a * cofactor(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn two_by_two() {
        let a = m(&[&[2, 3], &[5, 6]]);
        assert_eq!(a.det().unwrap(), int(-3));
        assert_eq!(a.det_cofactor().unwrap(), int(-3));
    }

    #[test]
    fn identity_has_unit_det() {
        for n in 1..=6 {
            assert_eq!(ExactMatrix::identity(n).unwrap().det().unwrap(), int(1));
        }
    }

    #[test]
    fn repeated_row_vanishes() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]]);
        assert_eq!(a.det().unwrap(), int(0));
    }

    #[test]
    fn needs_pivot_swap() {
        let a = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.det().unwrap(), int(-1));
        let b = m(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]]);
        assert_eq!(b.det().unwrap(), int(-6));
    }

    #[test]
    fn rational_entries() {
        let a =
            ExactMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(1, 5)]])
                .unwrap();
        // 1/10 - 1/12 = 1/60
        assert_eq!(a.det().unwrap(), rat(1, 60));
    }

    #[test]
    fn rejects_bad_shapes() {
        let a = ExactMatrix::new(2, 3, vec![int(0); 6]).unwrap();
        assert_eq!(a.det(), Err(Error::NotSquare { rows: 2, cols: 3 }));
        assert!(matches!(
            ExactMatrix::new(2, 2, vec![int(0); 3]),
            Err(Error::ShapeMismatch { .. })
        ));
        assert_eq!(ExactMatrix::new(0, 0, vec![]), Err(Error::EmptyMatrix));
    }
}
