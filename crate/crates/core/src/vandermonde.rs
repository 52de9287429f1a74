//! Generalized Vandermonde determinants, Schur quotients and the
//! affine-power matrix `B_ij = (alpha_i + r_j beta_i)^(ell-1)`.
//!
//! `det B` has two expansions over index sequences `mu` in `[0, ell-1]`:
//! one through `rho_i = beta_i / alpha_i` and one through `1 / rho_i` with
//! the complementary exponents. Both are evaluated here term by term so
//! they can be compared with the fraction-free determinant.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::combinat::{binomial, enumerate_index_seqs, IndexSeq};
use crate::exactnum::{pow, ExactMatrix, Rational};
use crate::{Error, Result};

/// Data defining a `k x k` matrix `B`: `k = alpha.len() = beta.len() = r.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineData {
    ell: usize,
    alpha: Vec<Rational>,
    beta: Vec<Rational>,
    r: Vec<Rational>,
}

impl AffineData {
    pub fn new(
        ell: usize,
        alpha: Vec<Rational>,
        beta: Vec<Rational>,
        r: Vec<Rational>,
    ) -> Result<Self> {
        if ell == 0 {
            return Err(Error::OutOfRange {
                name: "ell",
                value: 0,
                range: "[1, inf)".into(),
            });
        }
        let k = alpha.len();
        if k == 0 {
            return Err(Error::OutOfRange {
                name: "k",
                value: 0,
                range: "[1, inf)".into(),
            });
        }
        for (what, len) in [("beta", beta.len()), ("r", r.len())] {
            if len != k {
                return Err(Error::LengthMismatch {
                    what,
                    expected: k,
                    actual: len,
                });
            }
        }
        ensure_distinct("r", &r)?;
        Ok(AffineData {
            ell,
            alpha,
            beta,
            r,
        })
    }

    pub fn k(&self) -> usize {
        self.alpha.len()
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.alpha
    }

    pub fn beta(&self) -> &[Rational] {
        &self.beta
    }

    pub fn r(&self) -> &[Rational] {
        &self.r
    }

    /// `beta_i / alpha_i`, or `None` when `alpha_i = 0`.
    pub fn rho(&self, i: usize) -> Option<Rational> {
        if self.alpha[i].is_zero() {
            None
        } else {
            Some(&self.beta[i] / &self.alpha[i])
        }
    }
}

fn ensure_distinct(what: &'static str, values: &[Rational]) -> Result<()> {
    for i in 0..values.len() {
        for j in (i + 1)..values.len() {
            if values[i] == values[j] {
                return Err(Error::Repeated { what, i, j });
            }
        }
    }
    Ok(())
}

pub fn build_b(data: &AffineData) -> ExactMatrix {
    let k = data.k();
    ExactMatrix::from_fn(k, k, |i, j| {
        pow(&(&data.alpha[i] + &data.r[j] * &data.beta[i]), data.ell - 1)
    })
    .expect("k >= 1")
}

/// `det(nu_i^(mu_j))`.
pub fn gen_vandermonde_det(nu: &[Rational], mu: &IndexSeq) -> Result<Rational> {
    if nu.len() != mu.len() {
        return Err(Error::LengthMismatch {
            what: "nu",
            expected: mu.len(),
            actual: nu.len(),
        });
    }
    let k = nu.len();
    ExactMatrix::from_fn(k, k, |i, j| pow(&nu[i], mu.entries()[j]))?.det()
}

/// `prod_{i<j} (nu_j - nu_i)`.
pub fn vandermonde_product(nu: &[Rational]) -> Rational {
    let mut acc = Rational::one();
    for j in 0..nu.len() {
        for i in 0..j {
            acc *= &nu[j] - &nu[i];
        }
    }
    acc
}

/// Schur polynomial `V_{k,mu}(nu) / V_k(nu)` at pairwise distinct `nu`.
pub fn schur_eval(nu: &[Rational], mu: &IndexSeq) -> Result<Rational> {
    ensure_distinct("nu", nu)?;
    let numerator = gen_vandermonde_det(nu, mu)?;
    let plain = IndexSeq::initial(mu.ell().max(nu.len()), nu.len())?;
    let denominator = gen_vandermonde_det(nu, &plain)?;
    Ok(numerator / denominator)
}

fn binomial_weight(ell: usize, mu: &IndexSeq) -> Rational {
    let w = mu.entries().iter().fold(BigInt::one(), |acc, &m| {
        acc * binomial(ell as u64 - 1, m as i64)
    });
    Rational::from_integer(w)
}

fn ensure_k_le_ell(data: &AffineData) -> Result<()> {
    if data.k() > data.ell() {
        return Err(Error::OutOfRange {
            name: "k",
            value: data.k() as i64,
            range: format!("[1, {}]", data.ell()),
        });
    }
    Ok(())
}

fn nonzero_all(what: &'static str, values: &[Rational]) -> Result<()> {
    match values.iter().position(Zero::is_zero) {
        Some(index) => Err(Error::ZeroEntry { what, index }),
        None => Ok(()),
    }
}

/// `prod alpha_i^(ell-1) * sum_mu prod C(ell-1, mu_j) V_{k,mu}(r) V_{k,mu}(rho)`.
/// Requires `k <= ell` and every `alpha_i != 0`.
pub fn det_b_expansion(data: &AffineData) -> Result<Rational> {
    ensure_k_le_ell(data)?;
    nonzero_all("alpha", &data.alpha)?;
    let ell = data.ell();
    let rho: Vec<Rational> = (0..data.k())
        .map(|i| data.rho(i).expect("alpha != 0"))
        .collect();
    let prefactor = data
        .alpha
        .iter()
        .fold(Rational::one(), |acc, a| acc * pow(a, ell - 1));
    let seqs = enumerate_index_seqs(ell, data.k())?;
    let sum = seqs
        .par_iter()
        .map(|mu| {
            Ok(binomial_weight(ell, mu)
                * gen_vandermonde_det(&data.r, mu)?
                * gen_vandermonde_det(&rho, mu)?)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(Rational::zero(), |acc, x| acc + x);
    Ok(prefactor * sum)
}

/// `(-1)^(k(k-1)/2) prod beta_i^(ell-1) * sum_mu prod C(ell-1, mu_j)
/// V_{k,mu}(r) V_{k,mu^c}(1/rho)`. Requires `k <= ell` and nonzero
/// `alpha_i`, `beta_i`.
pub fn det_b_expansion_complement(data: &AffineData) -> Result<Rational> {
    ensure_k_le_ell(data)?;
    nonzero_all("alpha", &data.alpha)?;
    nonzero_all("beta", &data.beta)?;
    let ell = data.ell();
    let k = data.k();
    let inv_rho: Vec<Rational> = (0..k).map(|i| &data.alpha[i] / &data.beta[i]).collect();
    let prefactor = data
        .beta
        .iter()
        .fold(Rational::one(), |acc, b| acc * pow(b, ell - 1));
    let seqs = enumerate_index_seqs(ell, k)?;
    let sum = seqs
        .par_iter()
        .map(|mu| {
            Ok(binomial_weight(ell, mu)
                * gen_vandermonde_det(&data.r, mu)?
                * gen_vandermonde_det(&inv_rho, &mu.complement())?)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(Rational::zero(), |acc, x| acc + x);
    let signed = if (k * (k - 1) / 2) % 2 == 1 {
        -prefactor
    } else {
        prefactor
    };
    Ok(signed * sum)
}

/// For `k > ell`: whether `det B` vanishes (it always should).
pub fn det_b_zero_check(data: &AffineData) -> Result<bool> {
    if data.k() <= data.ell() {
        return Err(Error::OutOfRange {
            name: "k",
            value: data.k() as i64,
            range: format!("[{}, inf)", data.ell() + 1),
        });
    }
    Ok(build_b(data).det()?.is_zero())
}

/// Checks the regularity hypotheses: `alpha_i / beta_i > 0`,
/// `alpha_i beta_j - beta_i alpha_j != 0` for `i != j`, and positive `r`
/// (injectivity is part of [`AffineData`]). Reports the first failure.
pub fn check_regularity_hypotheses(data: &AffineData) -> Result<()> {
    for i in 0..data.k() {
        let (a, b) = (&data.alpha[i], &data.beta[i]);
        if a.is_zero() || b.is_zero() || a.is_positive() != b.is_positive() {
            return Err(Error::Hypothesis(format!(
                "alpha_{i}/beta_{i} must be a positive rational (alpha = {a}, beta = {b})",
                i = i + 1
            )));
        }
    }
    for i in 0..data.k() {
        for j in (i + 1)..data.k() {
            let cross = &data.alpha[i] * &data.beta[j] - &data.beta[i] * &data.alpha[j];
            if cross.is_zero() {
                return Err(Error::Hypothesis(format!(
                    "alpha_i beta_j - beta_i alpha_j must be nonzero (i = {}, j = {})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    if let Some(i) = data.r.iter().position(|x| !x.is_positive()) {
        return Err(Error::Hypothesis(format!(
            "r must be positive (r_{} = {})",
            i + 1,
            data.r[i]
        )));
    }
    Ok(())
}

/// `det B != 0`, for data satisfying the regularity hypotheses.
pub fn regularity_check(data: &AffineData) -> Result<bool> {
    check_regularity_hypotheses(data)?;
    Ok(!build_b(data).det()?.is_zero())
}
