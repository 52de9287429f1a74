//! The degree matrix `A_{s,a}` and its submatrices `A^[kappa]`.
//!
//! `A_{s,a}` is `(ell+1) x (ell+1)`. Row `i` (1-based, `i <= ell`) holds
//! `((i-1)(ell+1) + j)^(ell-1)` for `j = 1..=ell+1`, i.e. consecutive
//! integers raised to `ell-1`; the last row holds `(j-1)^s a_{j-1}`.
//! Its determinant collapses to `sigma_ell * sum_j (-1)^j C(ell,j) j^s a_j`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinat::{binomial, factorial};
use crate::exactnum::{pow, ExactMatrix, Rational};
use crate::{Error, Result};

/// Parameters of one `A_{s,a}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMatrixSpec {
    ell: usize,
    s: usize,
    a: Vec<Rational>,
}

impl DegreeMatrixSpec {
    pub fn new(ell: usize, s: usize, a: Vec<Rational>) -> Result<Self> {
        ensure_ell(ell)?;
        ensure_len(ell, &a)?;
        Ok(DegreeMatrixSpec { ell, s, a })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn a(&self) -> &[Rational] {
        &self.a
    }
}

fn ensure_ell(ell: usize) -> Result<()> {
    if ell == 0 {
        return Err(Error::OutOfRange {
            name: "ell",
            value: 0,
            range: "[1, inf)".into(),
        });
    }
    Ok(())
}

fn ensure_len(ell: usize, a: &[Rational]) -> Result<()> {
    if a.len() != ell + 1 {
        return Err(Error::LengthMismatch {
            what: "value vector",
            expected: ell + 1,
            actual: a.len(),
        });
    }
    Ok(())
}

fn ensure_kappa(ell: usize, kappa: usize) -> Result<()> {
    if kappa == 0 || kappa > ell + 1 {
        return Err(Error::OutOfRange {
            name: "kappa",
            value: kappa as i64,
            range: format!("[1, {}]", ell + 1),
        });
    }
    Ok(())
}

/// Power-block entry for 1-based row `i` and column position `r`.
fn power_entry(ell: usize, i: usize, r: usize) -> Rational {
    let base = (i - 1) * (ell + 1) + r;
    pow(&Rational::from_integer(BigInt::from(base)), ell - 1)
}

/// `j^s`, with `0^0 = 1`.
fn int_pow(j: usize, s: usize) -> Rational {
    pow(&Rational::from_integer(BigInt::from(j)), s)
}

pub fn build_a(spec: &DegreeMatrixSpec) -> ExactMatrix {
    let ell = spec.ell;
    let n = ell + 1;
    ExactMatrix::from_fn(n, n, |i, j| {
        if i < ell {
            power_entry(ell, i + 1, j + 1)
        } else {
            int_pow(j, spec.s) * &spec.a[j]
        }
    })
    .expect("ell >= 1")
}

/// `A^[kappa]`: `A_{s,a}` without its last row and its `kappa`-th column.
pub fn build_a_sub(ell: usize, kappa: usize) -> Result<ExactMatrix> {
    ensure_ell(ell)?;
    ensure_kappa(ell, kappa)?;
    ExactMatrix::from_fn(ell, ell, |i, j| {
        let col = j + 1;
        let r = if col < kappa { col } else { col + 1 };
        power_entry(ell, i + 1, r)
    })
}

/// `sigma_ell = (-1)^(ell(ell+1)/2) (ell+1)^(ell(ell-1)/2)
///  prod_{j<ell} C(ell-1, j) prod_{j=1}^{ell-1} (j!)^2`.
pub fn sigma_ell(ell: usize) -> Result<BigInt> {
    ensure_ell(ell)?;
    let l = ell as u64;
    let mut acc = num_traits::pow(BigInt::from(l + 1), ell * (ell - 1) / 2);
    for j in 0..l {
        acc *= binomial(l - 1, j as i64);
    }
    for j in 1..l {
        let f = factorial(j);
        acc *= &f * &f;
    }
    if (ell * (ell + 1) / 2) % 2 == 1 {
        acc = -acc;
    }
    Ok(acc)
}

/// `(-1)^ell sigma_ell C(ell, kappa-1)`.
pub fn det_a_sub_closed_form(ell: usize, kappa: usize) -> Result<BigInt> {
    ensure_kappa(ell, kappa)?;
    let value = sigma_ell(ell)? * binomial(ell as u64, kappa as i64 - 1);
    Ok(if ell % 2 == 1 { -value } else { value })
}

/// `sum_{j=0}^{ell} (-1)^j C(ell, j) j^s a_j`, with `0^0 = 1`.
pub fn alternating_weighted_sum(ell: usize, s: usize, a: &[Rational]) -> Result<Rational> {
    ensure_len(ell, a)?;
    let mut total = Rational::zero();
    for (j, aj) in a.iter().enumerate() {
        if aj.is_zero() {
            continue;
        }
        let term = Rational::from_integer(binomial(ell as u64, j as i64)) * int_pow(j, s) * aj;
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// `det A_{s,a} = sigma_ell * sum_j (-1)^j C(ell,j) j^s a_j`.
pub fn det_a_closed_form(spec: &DegreeMatrixSpec) -> Rational {
    let sigma = sigma_ell(spec.ell).expect("validated ell");
    let sum = alternating_weighted_sum(spec.ell, spec.s, &spec.a).expect("validated length");
    Rational::from_integer(sigma) * sum
}

/// `det A_{s,a}` by expansion along the last row, each minor `A^[j]`
/// evaluated by fraction-free elimination:
/// `sum_{j=1}^{ell+1} (-1)^(ell+1+j) A_{ell+1,j} det A^[j]`.
pub fn det_a_last_row_expansion(spec: &DegreeMatrixSpec) -> Result<Rational> {
    let ell = spec.ell;
    let mut total = Rational::zero();
    for col in 1..=ell + 1 {
        let entry = int_pow(col - 1, spec.s) * &spec.a[col - 1];
        if entry.is_zero() {
            continue;
        }
        let minor = build_a_sub(ell, col)?.det()?;
        let term = entry * minor;
        if (ell + 1 + col).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Direct determinant of `A_{s,a}`.
pub fn det_a_direct(spec: &DegreeMatrixSpec) -> Rational {
    build_a(spec).det().expect("square")
}

pub(crate) fn is_zero_vector(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn spec(ell: usize, s: usize, a: &[i64]) -> DegreeMatrixSpec {
        DegreeMatrixSpec::new(ell, s, ints(a)).unwrap()
    }

    #[test]
    fn build_a_examples() {
        let a = build_a(&spec(2, 0, &[1, 1, 1]));
        assert_eq!(a.entries(), ints(&[1, 2, 3, 4, 5, 6, 1, 1, 1]).as_slice());

        let b = build_a(&spec(1, 0, &[7, -2]));
        assert_eq!(b.entries(), ints(&[1, 1, 7, -2]).as_slice());

        let c = build_a(&spec(2, 1, &[1, 1, 1]));
        assert_eq!(c.row(2), ints(&[0, 1, 2]).as_slice());
    }

    #[test]
    fn build_a_sub_examples() {
        assert_eq!(
            build_a_sub(2, 1).unwrap().entries(),
            ints(&[2, 3, 5, 6]).as_slice()
        );
        assert_eq!(
            build_a_sub(2, 2).unwrap().entries(),
            ints(&[1, 3, 4, 6]).as_slice()
        );
        assert_eq!(build_a_sub(1, 1).unwrap().entries(), ints(&[1]).as_slice());
        assert!(build_a_sub(2, 0).is_err());
        assert!(build_a_sub(2, 4).is_err());
    }

    #[test]
    fn sub_matches_minor_of_full_matrix() {
        let full = build_a(&spec(3, 2, &[1, 2, 3, 4]));
        for kappa in 1..=4 {
            assert_eq!(
                full.minor(3, kappa - 1).unwrap(),
                build_a_sub(3, kappa).unwrap()
            );
        }
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma_ell(1).unwrap(), BigInt::from(-1));
        assert_eq!(sigma_ell(2).unwrap(), BigInt::from(-3));
        assert_eq!(sigma_ell(3).unwrap(), BigInt::from(512));
        assert!(sigma_ell(0).is_err());
    }

    #[test]
    fn sub_closed_form_examples() {
        assert_eq!(det_a_sub_closed_form(2, 1).unwrap(), BigInt::from(-3));
        assert_eq!(det_a_sub_closed_form(2, 2).unwrap(), BigInt::from(-6));
        assert_eq!(det_a_sub_closed_form(1, 1).unwrap(), BigInt::from(1));
        assert!(det_a_sub_closed_form(2, 5).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(det_a_closed_form(&spec(2, 0, &[1, 1, 1])), int(0));
        assert_eq!(det_a_closed_form(&spec(2, 2, &[1, 1, 1])), int(-6));
        assert_eq!(det_a_closed_form(&spec(2, 0, &[0, 1, 4])), int(-6));
        assert_eq!(det_a_direct(&spec(2, 2, &[1, 1, 1])), int(-6));
    }

    #[test]
    fn weighted_sum_examples() {
        assert_eq!(
            alternating_weighted_sum(3, 0, &ints(&[0, 1, 2, 3])).unwrap(),
            int(0)
        );
        assert_eq!(
            alternating_weighted_sum(3, 2, &ints(&[0, 1, 2, 3])).unwrap(),
            int(-6)
        );
        assert_eq!(
            alternating_weighted_sum(2, 0, &ints(&[1, 0, 0])).unwrap(),
            int(1)
        );
        assert!(alternating_weighted_sum(2, 0, &ints(&[1, 0])).is_err());
    }

    #[test]
    fn spec_validation() {
        assert!(DegreeMatrixSpec::new(0, 0, ints(&[1])).is_err());
        assert!(DegreeMatrixSpec::new(2, 0, ints(&[1, 2])).is_err());
        // s above ell is legal
        let big_s = spec(2, 5, &[1, 2, 3]);
        assert_eq!(det_a_closed_form(&big_s), det_a_direct(&big_s));
    }
}
