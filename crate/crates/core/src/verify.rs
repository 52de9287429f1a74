//! Seeded verification sweeps. Each suite pits a closed form against an
//! independent evaluation and collects per-case results into a
//! [`VerifyReport`].
//!
//! Randomness: a ChaCha8 stream seeded with `seed_from_u64(seed)` and
//! switched to stream number [`Suite::stream_id`], so every suite draws the
//! same values whether it runs alone or as part of `all`. Each draw takes
//! one `u64` and reduces it modulo the range width. Random rationals have
//! numerators in `[-9, 9]` and denominators in `[1, 4]`.
//!
//! Cases are generated sequentially and evaluated in parallel; results are
//! collected in case order, so reports do not depend on scheduling.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::Zero;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::combinat::{tau, tau_via_recurrence, TauKey};
use crate::degreematrix::{
    build_a_sub, det_a_closed_form, det_a_direct, det_a_sub_closed_form, DegreeMatrixSpec,
};
use crate::exactnum::{format_rational, int, rat, Degree, Poly, Rational};
use crate::interp::{
    compare_general_expansion, derivative_at_left_node, detect_degree, interpolate_direct,
    interpolate_eq14, k_quotient_via_tau, poly_k, DetMode, EquidistantProblem, GeneralProblem,
    RemarkOutcome,
};
use crate::vandermonde::{
    build_b, det_b_expansion, det_b_expansion_complement, regularity_check, AffineData,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Prop2,
    Prop3,
    Prop6,
    Eq5,
    Eq5c,
    Eq10,
    Eq14,
    Theorem1,
    Theorem4,
    Remark5,
    All,
}

impl Suite {
    /// Individual suites in the order `all` runs them.
    pub const INDIVIDUAL: [Suite; 10] = [
        Suite::Prop2,
        Suite::Prop3,
        Suite::Prop6,
        Suite::Eq5,
        Suite::Eq5c,
        Suite::Eq10,
        Suite::Eq14,
        Suite::Theorem1,
        Suite::Theorem4,
        Suite::Remark5,
    ];

    pub const NAMES: [&'static str; 11] = [
        "prop2", "prop3", "prop6", "eq5", "eq5c", "eq10", "eq14", "theorem1", "theorem4",
        "remark5", "all",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop2 => "prop2",
            Suite::Prop3 => "prop3",
            Suite::Prop6 => "prop6",
            Suite::Eq5 => "eq5",
            Suite::Eq5c => "eq5c",
            Suite::Eq10 => "eq10",
            Suite::Eq14 => "eq14",
            Suite::Theorem1 => "theorem1",
            Suite::Theorem4 => "theorem4",
            Suite::Remark5 => "remark5",
            Suite::All => "all",
        }
    }

    pub fn stream_id(self) -> u64 {
        Suite::INDIVIDUAL
            .iter()
            .position(|&s| s == self)
            .map_or(0, |i| i as u64 + 1)
    }

    pub fn default_max_ell(self) -> usize {
        match self {
            Suite::Prop3 => 7,
            Suite::Prop6 => 8,
            Suite::Eq5 | Suite::Eq5c | Suite::Theorem4 => 5,
            Suite::Remark5 => 4,
            Suite::Prop2 | Suite::Eq10 | Suite::Eq14 | Suite::Theorem1 | Suite::All => 6,
        }
    }

    pub fn default_trials(self) -> usize {
        match self {
            Suite::Prop3 | Suite::Prop6 => 1,
            Suite::Prop2 | Suite::Eq14 => 100,
            Suite::Eq5 | Suite::Eq5c | Suite::Eq10 => 50,
            Suite::Theorem1 => 25,
            Suite::Theorem4 => 200,
            Suite::Remark5 => 10,
            Suite::All => 1,
        }
    }

    pub fn is_informational(self) -> bool {
        self == Suite::Remark5
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown suite '{}'; available: {}",
            self.0,
            Suite::NAMES.join(", ")
        )
    }
}

impl std::error::Error for UnknownSuite {}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::INDIVIDUAL
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|suite| suite.name() == s)
            .copied()
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

/// Seeded generator for test data.
pub struct CaseRng(ChaCha8Rng);

impl CaseRng {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        CaseRng(rng)
    }

    pub fn for_suite(seed: u64, suite: Suite) -> Self {
        Self::new(seed, suite.stream_id())
    }

    /// Uniform integer in `[lo, hi]`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        let width = (hi - lo + 1) as u64;
        lo + (self.0.next_u64() % width) as i64
    }

    pub fn rational(&mut self) -> Rational {
        let num = self.int_in(-9, 9);
        let den = self.int_in(1, 4);
        rat(num, den)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let x = self.rational();
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn positive_rational(&mut self) -> Rational {
        let num = self.int_in(1, 9);
        let den = self.int_in(1, 4);
        rat(num, den)
    }

    /// `n` pairwise distinct values drawn with `draw`.
    pub fn distinct(
        &mut self,
        n: usize,
        mut draw: impl FnMut(&mut Self) -> Rational,
    ) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        while out.len() < n {
            let x = draw(self);
            if !out.contains(&x) {
                out.push(x);
            }
        }
        out
    }

    pub fn vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.rational()).collect()
    }

    /// Random polynomial of exactly the given degree.
    pub fn poly_of_degree(&mut self, degree: Degree) -> Poly {
        match degree {
            Degree::NegInfinity => Poly::zero(),
            Degree::Finite(d) => {
                let mut coeffs = self.vector(d);
                coeffs.push(self.nonzero_rational());
                Poly::from_coeffs(coeffs)
            }
        }
    }

    /// Value vector for the converse sweep: half the time small integers
    /// in `{-1, 0, 1}`, which hit low degrees often.
    pub fn value_vector(&mut self, n: usize) -> Vec<Rational> {
        if self.int_in(0, 1) == 0 {
            (0..n).map(|_| int(self.int_in(-1, 1))).collect()
        } else {
            self.vector(n)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

/// Informational record for suites that report rather than judge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Observation {
    pub inputs: String,
    pub outcome: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub suite: String,
    pub informational: bool,
    pub cases_run: usize,
    pub cases_passed: usize,
    pub failures: Vec<Failure>,
    pub observations: Vec<Observation>,
    pub elapsed_ms: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_ell: usize,
    pub trials: usize,
    pub seed: u64,
}

impl SuiteConfig {
    pub fn defaults(suite: Suite, seed: u64) -> Self {
        SuiteConfig {
            max_ell: suite.default_max_ell(),
            trials: suite.default_trials(),
            seed,
        }
    }
}

/// Runs a suite (or every suite for [`Suite::All`]). Missing parameters
/// fall back to each suite's defaults.
pub fn run(
    suite: Suite,
    max_ell: Option<usize>,
    trials: Option<usize>,
    seed: u64,
) -> Vec<VerifyReport> {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::INDIVIDUAL.to_vec(),
        s => vec![s],
    };
    suites
        .into_iter()
        .map(|s| {
            let config = SuiteConfig {
                max_ell: max_ell.unwrap_or(s.default_max_ell()),
                trials: trials.unwrap_or(s.default_trials()),
                seed,
            };
            run_one(s, &config)
        })
        .collect()
}

pub fn run_one(suite: Suite, config: &SuiteConfig) -> VerifyReport {
    let start = Instant::now();
    let mut rng = CaseRng::for_suite(config.seed, suite);
    let (results, observations) = match suite {
        Suite::Prop2 => (prop2(config, &mut rng), Vec::new()),
        Suite::Prop3 => (prop3(config), Vec::new()),
        Suite::Prop6 => (prop6(config), Vec::new()),
        Suite::Eq5 => (eq5(config, &mut rng), Vec::new()),
        Suite::Eq5c => (eq5c(config, &mut rng), Vec::new()),
        Suite::Eq10 => (eq10(config, &mut rng), Vec::new()),
        Suite::Eq14 => (eq14(config, &mut rng), Vec::new()),
        Suite::Theorem1 => (theorem1(config, &mut rng), Vec::new()),
        Suite::Theorem4 => (theorem4(config, &mut rng), Vec::new()),
        Suite::Remark5 => remark5(config, &mut rng),
        Suite::All => unreachable!("expanded by run"),
    };
    let cases_run = results.len();
    let failures: Vec<Failure> = results.into_iter().filter_map(Result::err).collect();
    VerifyReport {
        suite: suite.name().to_string(),
        informational: suite.is_informational(),
        cases_run,
        cases_passed: cases_run - failures.len(),
        failures,
        observations,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

type CaseResult = Result<(), Failure>;

fn check<T: PartialEq + fmt::Display>(
    inputs: impl FnOnce() -> String,
    expected: &T,
    actual: &T,
) -> CaseResult {
    if expected == actual {
        Ok(())
    } else {
        Err(Failure {
            inputs: inputs(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        })
    }
}

fn fail(inputs: String, expected: impl Into<String>, actual: impl Into<String>) -> CaseResult {
    Err(Failure {
        inputs,
        expected: expected.into(),
        actual: actual.into(),
    })
}

fn fmt_vec(xs: &[Rational]) -> String {
    let parts: Vec<String> = xs.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

fn fmt_problem(p: &EquidistantProblem) -> String {
    format!(
        "ell={} xi={} h={} a={}",
        p.ell(),
        p.xi(),
        p.h(),
        fmt_vec(p.values())
    )
}

fn fmt_affine(d: &AffineData) -> String {
    format!(
        "k={} ell={} alpha={} beta={} r={}",
        d.k(),
        d.ell(),
        fmt_vec(d.alpha()),
        fmt_vec(d.beta()),
        fmt_vec(d.r())
    )
}

fn prop3(config: &SuiteConfig) -> Vec<CaseResult> {
    let cases: Vec<(usize, usize)> = (1..=config.max_ell)
        .flat_map(|ell| (1..=ell + 1).map(move |kappa| (ell, kappa)))
        .collect();
    cases
        .par_iter()
        .map(|&(ell, kappa)| {
            let direct = build_a_sub(ell, kappa).and_then(|m| m.det());
            let closed = det_a_sub_closed_form(ell, kappa).map(Rational::from_integer);
            match (closed, direct) {
                (Ok(c), Ok(d)) => check(|| format!("ell={ell} kappa={kappa}"), &c, &d),
                (c, d) => fail(
                    format!("ell={ell} kappa={kappa}"),
                    format!("{c:?}"),
                    format!("{d:?}"),
                ),
            }
        })
        .collect()
}

fn prop2(config: &SuiteConfig, rng: &mut CaseRng) -> Vec<CaseResult> {
    let mut cases = Vec::new();
    for ell in 1..=config.max_ell {
        for s in 0..=ell {
            for _ in 0..config.trials {
                let a = rng.vector(ell + 1);
                cases.push(DegreeMatrixSpec::new(ell, s, a).expect("valid spec"));
            }
        }
    }
    cases
        .par_iter()
        .map(|spec| {
            check(
                || format!("ell={} s={} a={}", spec.ell(), spec.s(), fmt_vec(spec.a())),
                &det_a_closed_form(spec),
                &det_a_direct(spec),
            )
        })
        .collect()
}

fn prop6(config: &SuiteConfig) -> Vec<CaseResult> {
    let mut results = Vec::new();
    for ell in 1..=config.max_ell {
        let k = poly_k(ell).expect("ell >= 1");
        for j in 0..=ell {
            let q = k_quotient_via_tau(ell, j).expect("j in range");
            let back = &q * &Poly::linear_factor(&int(j as i64));
            results.push(check(|| format!("quotient ell={ell} j={j}"), &k, &back));
        }
        for j in 0..=ell {
            let top = if j == 0 { ell } else { ell - 1 };
            for m in 0..=top {
                let key = TauKey::new(ell, m, j).expect("valid key");
                let inputs = || format!("recurrence ell={ell} m={m} j={j}");
                results.push(match tau_via_recurrence(&key) {
                    Ok(v) => check(inputs, &tau(&key), &v),
                    Err(e) => fail(inputs(), tau(&key).to_string(), e.to_string()),
                });
            }
        }
    }
    results
}

fn random_affine(
    rng: &mut CaseRng,
    k: usize,
    ell: usize,
    mut alpha: impl FnMut(&mut CaseRng) -> Rational,
    mut beta: impl FnMut(&mut CaseRng) -> Rational,
) -> AffineData {
    let a = (0..k).map(|_| alpha(rng)).collect();
    let b = (0..k).map(|_| beta(rng)).collect();
    let r = rng.distinct(k, CaseRng::rational);
    AffineData::new(ell, a, b, r).expect("distinct r")
}

/// `(k, ell)` pairs with `k > ell`, `ell <= max_ell`, `k <= max(6, max_ell + 1)`.
fn singular_shapes(max_ell: usize) -> Vec<(usize, usize)> {
    let k_max = 6.max(max_ell + 1);
    (1..=max_ell)
        .flat_map(|ell| ((ell + 1)..=k_max).map(move |k| (k, ell)))
        .collect()
}

fn eq5(config: &SuiteConfig, rng: &mut CaseRng) -> Vec<CaseResult> {
    let mut regular = Vec::new();
    for ell in 1..=config.max_ell {
        for k in 1..=ell {
            for _ in 0..config.trials {
                regular.push(random_affine(
                    rng,
                    k,
                    ell,
                    CaseRng::nonzero_rational,
                    CaseRng::rational,
                ));
            }
        }
    }
    let mut singular = Vec::new();
    for (k, ell) in singular_shapes(config.max_ell) {
        for _ in 0..config.trials {
            singular.push(random_affine(
                rng,
                k,
                ell,
                CaseRng::rational,
                CaseRng::rational,
            ));
        }
    }
    let mut results: Vec<CaseResult> = regular
        .par_iter()
        .map(|d| {
            let direct = build_b(d).det().expect("square");
            match det_b_expansion(d) {
                Ok(e) => check(|| fmt_affine(d), &direct, &e),
                Err(e) => fail(fmt_affine(d), direct.to_string(), e.to_string()),
            }
        })
        .collect();
    results.extend(
        singular
            .par_iter()
            .map(|d| {
                let direct = build_b(d).det().expect("square");
                check(
                    || format!("singular {}", fmt_affine(d)),
                    &Rational::zero(),
                    &direct,
                )
            })
            .collect::<Vec<_>>(),
    );
    results
}

fn eq5c(config: &SuiteConfig, rng: &mut CaseRng) -> Vec<CaseResult> {
    let mut cases = Vec::new();
    for ell in 1..=config.max_ell {
        for k in 1..=ell {
            for _ in 0..config.trials {
                cases.push(random_affine(
                    rng,
                    k,
                    ell,
                    CaseRng::nonzero_rational,
                    CaseRng::nonzero_rational,
                ));
            }
        }
    }
    cases
        .par_iter()
        .map(|d| {
            let direct = build_b(d).det().expect("square");
            let (five, five_c) = match (det_b_expansion(d), det_b_expansion_complement(d)) {
                (Ok(a), Ok(b)) => (a, b),
                (a, b) => return fail(fmt_affine(d), direct.to_string(), format!("{a:?} / {b:?}")),
            };
            check(|| fmt_affine(d), &direct, &five_c)?;
            check(
                || format!("vs rho expansion {}", fmt_affine(d)),
                &five,
                &five_c,
            )
        })
        .collect()
}

fn random_problem(rng: &mut CaseRng, ell: usize, a: Vec<Rational>) -> EquidistantProblem {
    let xi = rng.rational();
    let h = rng.nonzero_rational();
    EquidistantProblem::new(ell, xi, h, a).expect("valid problem")
}

fn eq10(config: &SuiteConfig, rng: &mut CaseRng) -> Vec<CaseResult> {
    let mut cases = Vec::new();
    for ell in 1..=config.max_ell {
        for _ in 0..config.trials {
            let a = rng.vector(ell + 1);
            cases.push(random_problem(rng, ell, a));
        }
    }
    cases
        .par_iter()
        .flat_map_iter(|p| {
            let q = interpolate_direct(p);
            (0..=p.ell()).map(move |s| {
                let oracle = q.derivative(p.ell() - s).eval(p.xi());
                let inputs = || format!("{} s={s}", fmt_problem(p));
                match derivative_at_left_node(p, s) {
                    Ok(v) => check(inputs, &oracle, &v),
                    Err(e) => fail(inputs(), oracle.to_string(), e.to_string()),
                }
            })
        })
        .collect()
}

fn eq14(config: &SuiteConfig, rng: &mut CaseRng) -> Vec<CaseResult> {
    let mut cases = Vec::new();
    for ell in 1..=config.max_ell {
        for _ in 0..config.trials {
            let a = rng.vector(ell + 1);
            cases.push(random_problem(rng, ell, a));
        }
    }
    cases
        .par_iter()
        .map(|p| {
            let shifted = interpolate_direct(p)
                .shift_scale(p.xi(), p.h())
                .expect("h != 0");
            check(|| fmt_problem(p), &shifted, &interpolate_eq14(p))
        })
        .collect()
}

/// Forward direction: `trials` sampled polynomials per target degree.
/// Converse direction: `20 * trials` random value vectors per `ell`.
fn theorem1(config: &SuiteConfig, rng: &mut CaseRng) -> Vec<CaseResult> {
    let mut forward = Vec::new();
    for ell in 1..=config.max_ell {
        let degrees = std::iter::once(Degree::NegInfinity).chain((0..=ell).map(Degree::Finite));
        for d in degrees {
            for _ in 0..config.trials {
                let poly = rng.poly_of_degree(d);
                let xi = rng.rational();
                let h = rng.nonzero_rational();
                let a = (0..=ell)
                    .map(|i| poly.eval(&(&xi + int(i as i64) * &h)))
                    .collect();
                let p = EquidistantProblem::new(ell, xi, h, a).expect("valid problem");
                forward.push((d, poly, p));
            }
        }
    }
    let mut converse = Vec::new();
    for ell in 1..=config.max_ell {
        for _ in 0..config.trials * 20 {
            let a = rng.value_vector(ell + 1);
            converse.push(random_problem(rng, ell, a));
        }
    }
    let mut results: Vec<CaseResult> = forward
        .par_iter()
        .map(|(d, poly, p)| {
            let closed = detect_degree(p, DetMode::ClosedForm);
            let matrix = detect_degree(p, DetMode::Matrix);
            let inputs = || format!("sampled {} from {}", fmt_problem(p), poly);
            check(inputs, d, &closed.degree)?;
            check(inputs, d, &matrix.degree)
        })
        .collect();
    results.extend(
        converse
            .par_iter()
            .map(|p| {
                let expected = interpolate_direct(p).degree();
                let detected = detect_degree(p, DetMode::ClosedForm).degree;
                check(
                    || format!("converse {}", fmt_problem(p)),
                    &expected,
                    &detected,
                )
            })
            .collect::<Vec<_>>(),
    );
    results
}

fn admissible_for_regularity(rng: &mut CaseRng, k: usize, ell: usize) -> AffineData {
    loop {
        let alpha: Vec<Rational> = (0..k).map(|_| rng.positive_rational()).collect();
        let beta: Vec<Rational> = (0..k).map(|_| rng.positive_rational()).collect();
        let r = rng.distinct(k, CaseRng::positive_rational);
        let ratios: Vec<Rational> = alpha.iter().zip(&beta).map(|(a, b)| a / b).collect();
        let distinct = (0..k).all(|i| ((i + 1)..k).all(|j| ratios[i] != ratios[j]));
        if distinct {
            return AffineData::new(ell, alpha, beta, r).expect("distinct r");
        }
    }
}

fn theorem4(config: &SuiteConfig, rng: &mut CaseRng) -> Vec<CaseResult> {
    let mut cases = Vec::new();
    for ell in 1..=config.max_ell {
        for k in 1..=config.max_ell {
            for _ in 0..config.trials {
                cases.push(admissible_for_regularity(rng, k, ell));
            }
        }
    }
    cases
        .par_iter()
        .map(|d| {
            let expected = d.k() <= d.ell();
            match regularity_check(d) {
                Ok(regular) => check(|| fmt_affine(d), &expected, &regular),
                Err(e) => fail(fmt_affine(d), expected.to_string(), e.to_string()),
            }
        })
        .collect()
}

fn describe_outcome(outcome: &RemarkOutcome) -> (String, String) {
    match outcome {
        RemarkOutcome::Match => ("match".into(), String::new()),
        RemarkOutcome::ScalarMultiple { ratio } => {
            ("scalar-multiple".into(), format!("ratio={ratio}"))
        }
        RemarkOutcome::Mismatch { difference } => (
            "mismatch".into(),
            format!("difference={}", difference.coeff_list()),
        ),
    }
}

/// Informational: compares the arbitrary-node expansion with Lagrange
/// interpolation and records the outcome of every case. On the nodes
/// `0, 1, ..., ell` the oracle is also checked against the equidistant
/// coefficient formula; only that check can fail.
fn remark5(config: &SuiteConfig, rng: &mut CaseRng) -> (Vec<CaseResult>, Vec<Observation>) {
    let mut cases = Vec::new();
    for ell in 1..=config.max_ell {
        let nodes: Vec<Rational> = (0..=ell).map(|i| int(i as i64)).collect();
        let a = rng.vector(ell + 1);
        cases.push((
            "integer-nodes",
            GeneralProblem::new(nodes, a).expect("distinct"),
        ));
        for _ in 0..config.trials {
            let mut nodes = rng.distinct(ell + 1, CaseRng::rational);
            if rng.int_in(0, 1) == 0 {
                nodes[0] = Rational::zero();
                if nodes[1..].iter().any(Zero::is_zero) {
                    continue;
                }
            }
            let a = rng.vector(ell + 1);
            cases.push((
                "random-nodes",
                GeneralProblem::new(nodes, a).expect("distinct"),
            ));
        }
    }
    let evaluated: Vec<(CaseResult, Observation)> = cases
        .par_iter()
        .map(|(kind, p)| {
            let cmp = compare_general_expansion(p);
            let inputs = format!(
                "{kind} ell={} nodes={} a={}",
                p.ell(),
                fmt_vec(p.nodes()),
                fmt_vec(p.values())
            );
            let result = if *kind == "integer-nodes" {
                let eq = EquidistantProblem::new(p.ell(), int(0), int(1), p.values().to_vec())
                    .expect("valid problem");
                check(|| inputs.clone(), &cmp.oracle, &interpolate_eq14(&eq))
            } else {
                Ok(())
            };
            let (outcome, mut detail) = describe_outcome(&cmp.outcome);
            if !detail.is_empty() {
                detail.push(' ');
            }
            detail.push_str(&format!("x0_is_zero={}", p.nodes()[0].is_zero()));
            (
                result,
                Observation {
                    inputs,
                    outcome,
                    detail,
                },
            )
        })
        .collect();
    evaluated.into_iter().unzip()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        let err = "prop9".parse::<Suite>().unwrap_err();
        assert!(err.to_string().contains("theorem1"));
    }

    #[test]
    fn rng_is_reproducible() {
        let mut a = CaseRng::new(42, 3);
        let mut b = CaseRng::new(42, 3);
        let xs: Vec<Rational> = (0..20).map(|_| a.rational()).collect();
        let ys: Vec<Rational> = (0..20).map(|_| b.rational()).collect();
        assert_eq!(xs, ys);
        for x in xs {
            assert!(x.numer().abs() <= 9.into());
            assert!(x.denom() <= &4.into());
        }
    }

    #[test]
    fn prop3_case_count() {
        let r = run(Suite::Prop3, Some(6), None, 0);
        assert_eq!(r[0].cases_run, 27);
        assert!(r[0].passed());
    }

    #[test]
    fn small_sweeps_pass() {
        for suite in Suite::INDIVIDUAL {
            for report in run(suite, Some(3), Some(3), 7) {
                assert!(report.passed(), "{}: {:?}", report.suite, report.failures);
                assert_eq!(
                    report.cases_passed + report.failures.len(),
                    report.cases_run
                );
            }
        }
    }

    #[test]
    fn remark5_records_every_case() {
        let r = &run(Suite::Remark5, Some(3), Some(4), 1)[0];
        assert!(r.informational);
        assert_eq!(r.observations.len(), r.cases_run);
        assert!(r.observations.iter().any(|o| o.outcome != "match"));
    }
}
