//! Interpolation on equidistant nodes `x_i = xi + i h`, `i = 0..=ell`.
//!
//! In the local variable `t` (with `x = xi + t h`) the Lagrange basis is
//! built from the nodal polynomial `K(t) = t (t-1) ... (t-ell)`, and the
//! quotients `K(t) / (t-j)` expand through the tau symbols. That yields
//! closed forms for every coefficient of the interpolant and for every
//! derivative at the left node, all driven by the weighted sums
//! `sum_j (-1)^j C(ell,j) j^k a_j` that also govern `det A_{s,a}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{binomial, factorial, tau, tau_row, TauKey};
use crate::degreematrix::{
    alternating_weighted_sum, det_a_closed_form, det_a_direct, is_zero_vector, DegreeMatrixSpec,
};
use crate::exactnum::{int, pow, Degree, Poly, Rational};
use crate::{Error, Result};

/// One interpolation instance on the grid `xi, xi + h, ..., xi + ell h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquidistantProblem {
    ell: usize,
    xi: Rational,
    h: Rational,
    a: Vec<Rational>,
}

impl EquidistantProblem {
    pub fn new(ell: usize, xi: Rational, h: Rational, a: Vec<Rational>) -> Result<Self> {
        ensure_ell(ell)?;
        if h.is_zero() {
            return Err(Error::ZeroStep);
        }
        if a.len() != ell + 1 {
            return Err(Error::LengthMismatch {
                what: "value vector",
                expected: ell + 1,
                actual: a.len(),
            });
        }
        Ok(EquidistantProblem { ell, xi, h, a })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn xi(&self) -> &Rational {
        &self.xi
    }

    pub fn h(&self) -> &Rational {
        &self.h
    }

    pub fn values(&self) -> &[Rational] {
        &self.a
    }

    pub fn nodes(&self) -> Vec<Rational> {
        (0..=self.ell)
            .map(|i| &self.xi + int(i as i64) * &self.h)
            .collect()
    }

    /// Same values on a different grid.
    pub fn with_grid(&self, xi: Rational, h: Rational) -> Result<Self> {
        Self::new(self.ell, xi, h, self.a.clone())
    }
}

/// Interpolation instance on arbitrary pairwise distinct nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralProblem {
    nodes: Vec<Rational>,
    a: Vec<Rational>,
}

impl GeneralProblem {
    pub fn new(nodes: Vec<Rational>, a: Vec<Rational>) -> Result<Self> {
        if nodes.len() < 2 {
            return Err(Error::OutOfRange {
                name: "node count",
                value: nodes.len() as i64,
                range: "[2, inf)".into(),
            });
        }
        if a.len() != nodes.len() {
            return Err(Error::LengthMismatch {
                what: "value vector",
                expected: nodes.len(),
                actual: a.len(),
            });
        }
        ensure_distinct_nodes(&nodes)?;
        Ok(GeneralProblem { nodes, a })
    }

    pub fn ell(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn nodes(&self) -> &[Rational] {
        &self.nodes
    }

    pub fn values(&self) -> &[Rational] {
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

fn ensure_j(ell: usize, j: usize) -> Result<()> {
    if j > ell {
        return Err(Error::OutOfRange {
            name: "j",
            value: j as i64,
            range: format!("[0, {ell}]"),
        });
    }
    Ok(())
}

fn ensure_distinct_nodes(nodes: &[Rational]) -> Result<()> {
    for i in 0..nodes.len() {
        for j in (i + 1)..nodes.len() {
            if nodes[i] == nodes[j] {
                return Err(Error::Repeated {
                    what: "nodes",
                    i,
                    j,
                });
            }
        }
    }
    Ok(())
}

fn from_int(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

fn signed(value: Rational, negative: bool) -> Rational {
    if negative {
        -value
    } else {
        value
    }
}

/// `K(t) = prod_{i=0}^{ell} (t - i)`.
pub fn poly_k(ell: usize) -> Result<Poly> {
    ensure_ell(ell)?;
    Ok((0..=ell).fold(Poly::constant(Rational::one()), |acc, i| {
        &acc * &Poly::linear_factor(&int(i as i64))
    }))
}

/// `sum_{m=0}^{ell} (-1)^m tau(ell, m, j) t^(ell-m)`, which equals `K(t) / (t - j)`.
pub fn k_quotient_via_tau(ell: usize, j: usize) -> Result<Poly> {
    ensure_ell(ell)?;
    ensure_j(ell, j)?;
    let mut coeffs = vec![Rational::zero(); ell + 1];
    for m in 0..=ell {
        let t = from_int(tau(&TauKey::new(ell, m, j)?));
        coeffs[ell - m] = signed(t, m % 2 == 1);
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// `L_j(xi + t h)`, the Lagrange basis in the local variable:
/// `(-1)^(ell-j) / ell! * C(ell, j) * K(t) / (t - j)`.
pub fn lagrange_basis_hat(ell: usize, j: usize) -> Result<Poly> {
    ensure_j(ell, j)?;
    let quotient = poly_k(ell)?.divide_linear(&int(j as i64))?;
    let c = Rational::new(binomial(ell as u64, j as i64), factorial(ell as u64));
    Ok(quotient.scale(&signed(c, (ell - j) % 2 == 1)))
}

/// Lagrange interpolation through `(nodes[i], values[i])`.
pub fn lagrange_interpolate(nodes: &[Rational], values: &[Rational]) -> Result<Poly> {
    if nodes.len() != values.len() {
        return Err(Error::LengthMismatch {
            what: "value vector",
            expected: nodes.len(),
            actual: values.len(),
        });
    }
    ensure_distinct_nodes(nodes)?;
    let mut total = Poly::zero();
    for (j, (xj, aj)) in nodes.iter().zip(values).enumerate() {
        if aj.is_zero() {
            continue;
        }
        let mut basis = Poly::constant(Rational::one());
        let mut denom = Rational::one();
        for (i, xi) in nodes.iter().enumerate() {
            if i != j {
                basis = &basis * &Poly::linear_factor(xi);
                denom *= xj - xi;
            }
        }
        total = &total + &basis.scale(&(aj / denom));
    }
    Ok(total)
}

/// The interpolant `q(x)` in the global variable.
pub fn interpolate_direct(p: &EquidistantProblem) -> Poly {
    lagrange_interpolate(&p.nodes(), &p.a).expect("equidistant nodes are distinct")
}

/// The interpolant in the local variable, `q(xi + t h)`, from the explicit
/// coefficient formula
/// `(-1)^ell / ell! * sum_m sum_{k<=m} (-1)^(k+m) tau(ell, m-k, 0) S_k t^(ell-m)`
/// with `S_k = sum_j (-1)^j C(ell,j) j^k a_j`.
pub fn interpolate_eq14(p: &EquidistantProblem) -> Poly {
    let ell = p.ell;
    let row = tau_row(ell).expect("validated ell");
    let sums: Vec<Rational> = (0..=ell)
        .map(|k| alternating_weighted_sum(ell, k, &p.a).expect("validated length"))
        .collect();
    let mut coeffs = vec![Rational::zero(); ell + 1];
    for m in 0..=ell {
        let mut c = Rational::zero();
        for k in 0..=m {
            let term = from_int(row[m - k].clone()) * &sums[k];
            c += signed(term, (k + m) % 2 == 1);
        }
        coeffs[ell - m] = c;
    }
    let prefactor = signed(
        Rational::new(BigInt::one(), factorial(ell as u64)),
        ell % 2 == 1,
    );
    Poly::from_coeffs(coeffs).scale(&prefactor)
}

/// `sigma(ell, s, k) = (-1)^(ell-s+k) (ell-s)! / ell! * tau(ell, s-k, 0)`.
pub fn sigma_lsk(ell: usize, s: usize, k: usize) -> Result<Rational> {
    ensure_ell(ell)?;
    if s > ell {
        return Err(Error::OutOfRange {
            name: "s",
            value: s as i64,
            range: format!("[0, {ell}]"),
        });
    }
    if k > s {
        return Err(Error::OutOfRange {
            name: "k",
            value: k as i64,
            range: format!("[0, {s}]"),
        });
    }
    let t = tau(&TauKey::new(ell, s - k, 0)?);
    let value = Rational::new(factorial((ell - s) as u64) * t, factorial(ell as u64));
    Ok(signed(value, (ell - s + k) % 2 == 1))
}

/// `q^(ell-s)(xi) = h^(s-ell) sum_{k=0}^{s} sigma(ell,s,k) S_k`.
pub fn derivative_at_left_node(p: &EquidistantProblem, s: usize) -> Result<Rational> {
    let ell = p.ell;
    let mut total = Rational::zero();
    for k in 0..=s.min(ell) {
        total += sigma_lsk(ell, s, k)? * alternating_weighted_sum(ell, k, &p.a)?;
    }
    let h_inv = Rational::one() / &p.h;
    Ok(total * pow(&h_inv, ell - s))
}

/// How `det A_{s,a}` is evaluated during degree detection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DetMode {
    /// `sigma_ell` times the weighted sum.
    #[default]
    ClosedForm,
    /// Build the matrix and run fraction-free elimination.
    Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeDetection {
    pub degree: Degree,
    /// Smallest `m` with `det A_{m,a} != 0`; `None` for the zero vector.
    pub witness: Option<usize>,
    /// `det A_{0,a}, ..., det A_{m,a}` (all `ell + 1` zeros for the zero vector).
    pub determinants: Vec<Rational>,
}

/// Degree of the interpolant read off the determinants `det A_{s,a}`,
/// `s = 0, 1, ...`: it is `ell - m` for the first `m` with a nonzero
/// determinant. Never looks at `xi` or `h`.
pub fn detect_degree(p: &EquidistantProblem, mode: DetMode) -> DegreeDetection {
    let ell = p.ell;
    if is_zero_vector(&p.a) {
        return DegreeDetection {
            degree: Degree::NegInfinity,
            witness: None,
            determinants: vec![Rational::zero(); ell + 1],
        };
    }
    let mut determinants = Vec::with_capacity(ell + 1);
    for s in 0..=ell {
        let spec = DegreeMatrixSpec::new(ell, s, p.a.clone()).expect("validated problem");
        let det = match mode {
            DetMode::ClosedForm => det_a_closed_form(&spec),
            DetMode::Matrix => det_a_direct(&spec),
        };
        let nonzero = !det.is_zero();
        determinants.push(det);
        if nonzero {
            return DegreeDetection {
                degree: Degree::Finite(ell - s),
                witness: Some(s),
                determinants,
            };
        }
    }
    // (j^s)_{s,j} is an invertible Vandermonde matrix, so a nonzero value
    // vector always has some s <= ell with a nonzero weighted sum.
    unreachable!("nonzero value vector with all determinants vanishing")
}

pub fn detect_degree_via_determinants(p: &EquidistantProblem) -> Degree {
    detect_degree(p, DetMode::ClosedForm).degree
}

/// Elementary symmetric sums `e_0..=e_n` of rational values.
pub fn elementary_symmetric_rational(values: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); values.len() + 1];
    e[0] = Rational::one();
    for (n, v) in values.iter().enumerate() {
        for m in (1..=n + 1).rev() {
            let prev = &e[m - 1] * v;
            e[m] += prev;
        }
    }
    e
}

/// Arbitrary-node analogue of the coefficient formula, evaluated verbatim:
///
/// `sum_m sum_{k<=m} (-1)^(k+m) tau(ell, m-k, 0) (sum_j lambda_j x_j^k a_j) x^(ell-m)`
///
/// with `lambda_j^-1 = prod_{i != j} (x_i - x_j)` and `tau(ell, m, 0)` the
/// `m`-th elementary symmetric sum of `x_1, ..., x_ell` (node `x_0` left
/// out, mirroring how the equidistant symbols range over `1..=ell`).
/// The result is not corrected in any way; see [`compare_general_expansion`].
pub fn general_expansion(p: &GeneralProblem) -> Poly {
    let ell = p.ell();
    let x = &p.nodes;
    let taus = elementary_symmetric_rational(&x[1..]);
    let lambda: Vec<Rational> = (0..=ell)
        .map(|j| {
            let prod = (0..=ell)
                .filter(|&i| i != j)
                .fold(Rational::one(), |acc, i| acc * (&x[i] - &x[j]));
            Rational::one() / prod
        })
        .collect();
    let sums: Vec<Rational> = (0..=ell)
        .map(|k| {
            (0..=ell)
                .map(|j| &lambda[j] * pow(&x[j], k) * &p.a[j])
                .fold(Rational::zero(), |acc, v| acc + v)
        })
        .collect();
    let mut coeffs = vec![Rational::zero(); ell + 1];
    for m in 0..=ell {
        let mut c = Rational::zero();
        for k in 0..=m {
            c += signed(&taus[m - k] * &sums[k], (k + m) % 2 == 1);
        }
        coeffs[ell - m] = c;
    }
    Poly::from_coeffs(coeffs)
}

/// Relation between the arbitrary-node expansion and the Lagrange oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RemarkOutcome {
    Match,
    /// `expansion = ratio * oracle` with `ratio != 1`.
    ScalarMultiple {
        ratio: Rational,
    },
    /// Not proportional; `difference = expansion - oracle`.
    Mismatch {
        difference: Poly,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemarkComparison {
    pub expansion: Poly,
    pub oracle: Poly,
    pub outcome: RemarkOutcome,
}

pub fn compare_general_expansion(p: &GeneralProblem) -> RemarkComparison {
    let expansion = general_expansion(p);
    let oracle = lagrange_interpolate(&p.nodes, &p.a).expect("validated problem");
    let outcome = classify(&expansion, &oracle);
    RemarkComparison {
        expansion,
        oracle,
        outcome,
    }
}

fn classify(expansion: &Poly, oracle: &Poly) -> RemarkOutcome {
    if expansion == oracle {
        return RemarkOutcome::Match;
    }
    if !oracle.is_zero() && expansion.degree() == oracle.degree() {
        let lead = |q: &Poly| q.coeffs().last().cloned().expect("nonzero");
        let ratio = lead(expansion) / lead(oracle);
        if &oracle.scale(&ratio) == expansion {
            return RemarkOutcome::ScalarMultiple { ratio };
        }
    }
    RemarkOutcome::Mismatch {
        difference: expansion - oracle,
    }
}
