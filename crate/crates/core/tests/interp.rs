mod common;

use common::{all_distinct, nonzero_rational, rational_vec, small_rational};
use degdet_core::combinat::{factorial, tau, TauKey};
use degdet_core::degreematrix::alternating_weighted_sum;
use degdet_core::exactnum::{int, pow};
use degdet_core::interp::{
    compare_general_expansion, derivative_at_left_node, detect_degree,
    elementary_symmetric_rational, interpolate_direct, interpolate_eq14, k_quotient_via_tau,
    lagrange_basis_hat, lagrange_interpolate, poly_k, DetMode, EquidistantProblem, GeneralProblem,
    RemarkOutcome,
};
use degdet_core::{Degree, Poly, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn problem(max_ell: usize) -> impl Strategy<Value = EquidistantProblem> {
    (1..=max_ell)
        .prop_flat_map(|ell| {
            (
                Just(ell),
                small_rational(),
                nonzero_rational(),
                rational_vec(ell + 1),
            )
        })
        .prop_map(|(ell, xi, h, a)| EquidistantProblem::new(ell, xi, h, a).unwrap())
}

/// A polynomial of exact degree `d` (or zero), sampled on a grid.
fn sampled(max_ell: usize) -> impl Strategy<Value = (Degree, EquidistantProblem)> {
    (1..=max_ell)
        .prop_flat_map(|ell| (Just(ell), -1i64..=ell as i64))
        .prop_flat_map(|(ell, d)| {
            let len = (d + 1).max(0) as usize;
            (
                Just(ell),
                Just(d),
                rational_vec(len),
                nonzero_rational(),
                small_rational(),
                nonzero_rational(),
            )
        })
        .prop_map(|(ell, d, mut coeffs, lead, xi, h)| {
            let degree = if d < 0 {
                Degree::NegInfinity
            } else {
                coeffs[d as usize] = lead;
                Degree::Finite(d as usize)
            };
            let poly = Poly::from_coeffs(coeffs);
            let a = (0..=ell)
                .map(|i| poly.eval(&(&xi + int(i as i64) * &h)))
                .collect();
            (degree, EquidistantProblem::new(ell, xi, h, a).unwrap())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn interpolant_hits_every_node(p in problem(8)) {
        let q = interpolate_direct(&p);
        for (x, a) in p.nodes().iter().zip(p.values()) {
            prop_assert_eq!(&q.eval(x), a);
        }
        prop_assert!(q.degree() <= Degree::Finite(p.ell()));
    }

    #[test]
    fn coefficient_formula_matches_shifted_interpolant(p in problem(6)) {
        let shifted = interpolate_direct(&p).shift_scale(p.xi(), p.h()).unwrap();
        prop_assert_eq!(interpolate_eq14(&p), shifted);
    }

    #[test]
    fn derivative_formula_matches_symbolic(p in problem(6)) {
        let q = interpolate_direct(&p);
        for s in 0..=p.ell() {
            let oracle = q.derivative(p.ell() - s).eval(p.xi());
            prop_assert_eq!(derivative_at_left_node(&p, s).unwrap(), oracle, "s={}", s);
        }
    }

    #[test]
    fn detector_recovers_sampled_degree((degree, p) in sampled(6)) {
        prop_assert_eq!(detect_degree(&p, DetMode::ClosedForm).degree, degree);
        prop_assert_eq!(detect_degree(&p, DetMode::Matrix).degree, degree);
    }

    #[test]
    fn detector_matches_interpolant_degree(p in problem(6)) {
        let closed = detect_degree(&p, DetMode::ClosedForm);
        prop_assert_eq!(closed.degree, interpolate_direct(&p).degree());
        prop_assert_eq!(closed, detect_degree(&p, DetMode::Matrix));
    }

    #[test]
    fn detection_ignores_grid(p in problem(6), xi in small_rational(), h in nonzero_rational()) {
        let moved = p.with_grid(xi, h).unwrap();
        prop_assert_eq!(detect_degree(&p, DetMode::ClosedForm), detect_degree(&moved, DetMode::ClosedForm));
    }
}

#[test]
fn nodal_quotients_multiply_back() {
    for ell in 1..=8 {
        let k = poly_k(ell).unwrap();
        for j in 0..=ell {
            let q = k_quotient_via_tau(ell, j).unwrap();
            assert_eq!(
                &q * &Poly::linear_factor(&int(j as i64)),
                k,
                "ell={ell} j={j}"
            );
            assert_eq!(q, k.divide_linear(&int(j as i64)).unwrap());
        }
    }
}

#[test]
fn lagrange_basis_is_kronecker() {
    for ell in 1..=6 {
        for j in 0..=ell {
            let l = lagrange_basis_hat(ell, j).unwrap();
            assert_eq!(l.degree(), Degree::Finite(ell));
            for i in 0..=ell {
                let expected = if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                assert_eq!(l.eval(&int(i as i64)), expected, "ell={ell} j={j} i={i}");
            }
        }
    }
}

#[test]
fn worked_low_order_expansions() {
    // (-1)^(ell-s) ell!/(ell-s)! * qhat^(ell-s)(0) for s = 0, 1, 2, written
    // out term by term.
    let values = [
        int(3),
        Rational::new((-7).into(), 2.into()),
        int(0),
        int(5),
        int(-1),
        Rational::new(4.into(), 3.into()),
    ];
    for ell in 1..=5usize {
        let p = EquidistantProblem::new(
            ell,
            Rational::new(1.into(), 3.into()),
            int(-2),
            values[..=ell].to_vec(),
        )
        .unwrap();
        let sum = |k: usize| alternating_weighted_sum(ell, k, p.values()).unwrap();
        let t = |m: usize| Rational::from_integer(tau(&TauKey::new(ell, m, 0).unwrap()));
        let worked = [
            Some(t(0) * sum(0)),
            (ell >= 1).then(|| t(1) * sum(0) - t(0) * sum(1)),
            (ell >= 2).then(|| t(2) * sum(0) - t(1) * sum(1) + t(0) * sum(2)),
        ];
        for (s, expected) in worked.into_iter().enumerate() {
            let Some(expected) = expected else { continue };
            let n = ell - s;
            let scale = Rational::new(factorial(ell as u64), factorial(n as u64))
                * if n % 2 == 0 { int(1) } else { int(-1) };
            let hat_derivative = derivative_at_left_node(&p, s).unwrap() * pow(p.h(), n);
            assert_eq!(scale * hat_derivative, expected, "ell={ell} s={s}");
        }
    }
}

#[test]
fn zero_and_constant_vectors() {
    for ell in 1..=5 {
        let zero = EquidistantProblem::new(ell, int(2), int(3), vec![int(0); ell + 1]).unwrap();
        let d = detect_degree(&zero, DetMode::ClosedForm);
        assert_eq!(d.degree, Degree::NegInfinity);
        assert!(d.determinants.iter().all(Zero::is_zero));
        assert_eq!(interpolate_eq14(&zero), Poly::zero());

        let c = EquidistantProblem::new(ell, int(2), int(3), vec![int(-4); ell + 1]).unwrap();
        let d = detect_degree(&c, DetMode::Matrix);
        assert_eq!(d.degree, Degree::Finite(0));
        assert_eq!(d.witness, Some(ell));
        assert_eq!(d.determinants.len(), ell + 1);
    }
}

/// The arbitrary-node formula with an explicit `(-1)^ell` and the symmetric
/// sums taken over all nodes `x_0..x_ell`, written independently of the
/// library's version.
fn corrected_general(nodes: &[Rational], a: &[Rational]) -> Poly {
    let ell = nodes.len() - 1;
    let e = elementary_symmetric_rational(nodes);
    let mut coeffs = vec![Rational::zero(); ell + 1];
    for m in 0..=ell {
        for k in 0..=m {
            let inner: Rational = (0..=ell)
                .map(|j| {
                    let prod = (0..=ell)
                        .filter(|&i| i != j)
                        .fold(Rational::one(), |acc, i| acc * (&nodes[i] - &nodes[j]));
                    pow(&nodes[j], k) * &a[j] / prod
                })
                .fold(Rational::zero(), |acc, x| acc + x);
            let term = &e[m - k] * inner;
            if (k + m + ell).is_multiple_of(2) {
                coeffs[ell - m] += term;
            } else {
                coeffs[ell - m] -= term;
            }
        }
    }
    Poly::from_coeffs(coeffs)
}

fn general(max_ell: usize) -> impl Strategy<Value = GeneralProblem> {
    (1..=max_ell)
        .prop_flat_map(|ell| {
            (
                rational_vec(ell + 1).prop_filter("distinct nodes", |v| all_distinct(v)),
                rational_vec(ell + 1),
            )
        })
        .prop_map(|(nodes, a)| GeneralProblem::new(nodes, a).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn corrected_general_formula_is_lagrange(p in general(4)) {
        prop_assert_eq!(
            corrected_general(p.nodes(), p.values()),
            lagrange_interpolate(p.nodes(), p.values()).unwrap()
        );
    }

    #[test]
    fn verbatim_general_formula_with_origin_node(p in general(4)) {
        // With x_0 = 0 leaving x_0 out of the symmetric sums changes nothing,
        // and only the missing (-1)^ell remains.
        let mut nodes = p.nodes().to_vec();
        nodes[0] = Rational::zero();
        prop_assume!(all_distinct(&nodes));
        let q = GeneralProblem::new(nodes, p.values().to_vec()).unwrap();
        let cmp = compare_general_expansion(&q);
        let sign = if q.ell().is_multiple_of(2) { int(1) } else { int(-1) };
        prop_assert_eq!(&cmp.expansion, &cmp.oracle.scale(&sign));
        if cmp.oracle.is_zero() || q.ell().is_multiple_of(2) {
            prop_assert_eq!(cmp.outcome, RemarkOutcome::Match);
        } else {
            prop_assert_eq!(cmp.outcome, RemarkOutcome::ScalarMultiple { ratio: int(-1) });
        }
    }
}

#[test]
fn verbatim_general_formula_off_origin_is_reported() {
    let p = GeneralProblem::new(vec![int(1), int(2)], vec![int(0), int(1)]).unwrap();
    let cmp = compare_general_expansion(&p);
    assert_eq!(cmp.oracle, Poly::from_coeffs(vec![int(-1), int(1)]));
    assert!(
        matches!(cmp.outcome, RemarkOutcome::Mismatch { .. }),
        "{:?}",
        cmp.outcome
    );
}

#[test]
fn general_on_integer_nodes_relates_to_equidistant() {
    for ell in 1..=4usize {
        let nodes: Vec<Rational> = (0..=ell).map(|i| int(i as i64)).collect();
        let a: Vec<Rational> = (0..=ell).map(|i| int((i * i) as i64 - 3)).collect();
        let p = GeneralProblem::new(nodes, a.clone()).unwrap();
        let eq = EquidistantProblem::new(ell, int(0), int(1), a).unwrap();
        let cmp = compare_general_expansion(&p);
        assert_eq!(cmp.oracle, interpolate_eq14(&eq));
        let sign = if ell % 2 == 0 { int(1) } else { int(-1) };
        assert_eq!(cmp.expansion, interpolate_eq14(&eq).scale(&sign));
    }
}
