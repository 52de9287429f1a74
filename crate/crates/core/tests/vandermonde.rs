mod common;

use common::{all_distinct, ints, nonzero_rational, rational_vec};
use degdet_core::combinat::{enumerate_index_seqs, IndexSeq};
use degdet_core::degreematrix::det_a_sub_closed_form;
use degdet_core::exactnum::int;
use degdet_core::vandermonde::{
    build_b, det_b_expansion, det_b_expansion_complement, det_b_zero_check, gen_vandermonde_det,
    schur_eval, vandermonde_product, AffineData,
};
use degdet_core::Rational;
use itertools::Itertools;
use proptest::prelude::*;

fn affine(max_ell: usize, nonzero_beta: bool) -> impl Strategy<Value = AffineData> {
    (1..=max_ell)
        .prop_flat_map(|ell| (Just(ell), 1..=ell))
        .prop_flat_map(move |(ell, k)| {
            let beta = if nonzero_beta {
                prop::collection::vec(nonzero_rational(), k).boxed()
            } else {
                rational_vec(k).boxed()
            };
            (
                Just(ell),
                prop::collection::vec(nonzero_rational(), k),
                beta,
                rational_vec(k).prop_filter("injective r", |r| all_distinct(r)),
            )
        })
        .prop_map(|(ell, a, b, r)| AffineData::new(ell, a, b, r).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rho_expansion_matches_determinant(d in affine(5, false)) {
        prop_assert_eq!(det_b_expansion(&d).unwrap(), build_b(&d).det().unwrap());
    }

    #[test]
    fn complement_expansion_matches_determinant(d in affine(5, true)) {
        let direct = build_b(&d).det().unwrap();
        prop_assert_eq!(det_b_expansion_complement(&d).unwrap(), direct.clone());
        prop_assert_eq!(det_b_expansion(&d).unwrap(), direct);
    }

    #[test]
    fn schur_times_vandermonde(nu in rational_vec(4).prop_filter("distinct", |v| all_distinct(v)), pick in 0usize..35) {
        let seqs = enumerate_index_seqs(7, 4).unwrap();
        let mu = &seqs[pick % seqs.len()];
        let s = schur_eval(&nu, mu).unwrap();
        prop_assert_eq!(s * vandermonde_product(&nu), gen_vandermonde_det(&nu, mu).unwrap());
    }

    #[test]
    fn plain_vandermonde_is_product(nu in (1usize..=5).prop_flat_map(rational_vec)) {
        let mu = IndexSeq::initial(nu.len(), nu.len()).unwrap();
        prop_assert_eq!(gen_vandermonde_det(&nu, &mu).unwrap(), vandermonde_product(&nu));
    }

    #[test]
    fn singular_beyond_ell(ell in 1usize..=5, extra in 1usize..=3, seed in rational_vec(18)) {
        let k = (ell + extra).min(6);
        prop_assume!(k > ell);
        let r: Vec<Rational> = (0..k).map(|j| int(j as i64 + 1) + &seed[j] / int(100)).collect();
        prop_assume!(all_distinct(&r));
        let d = AffineData::new(ell, seed[6..6 + k].to_vec(), seed[12..12 + k].to_vec(), r).unwrap();
        prop_assert!(det_b_zero_check(&d).unwrap());
    }
}

#[test]
fn schur_is_symmetric_under_all_permutations() {
    let nu = [int(2), int(-1), Rational::new(3.into(), 2.into()), int(5)];
    for k in 1..=4 {
        let base = &nu[..k];
        for mu in enumerate_index_seqs(5, k).unwrap() {
            let expected = schur_eval(base, &mu).unwrap();
            for perm in base.iter().cloned().permutations(k) {
                assert_eq!(schur_eval(&perm, &mu).unwrap(), expected);
            }
        }
    }
}

#[test]
fn full_size_expansion_reduces_to_single_term() {
    // k = ell with the degree-matrix data (alpha_1 = 0 shifted away by using
    // alpha_i = i (ell + 1)): only mu = (0..ell-1) survives in the complement
    // expansion, and the value equals the plain determinant.
    for ell in 1..=5usize {
        let alpha: Vec<Rational> = (1..=ell).map(|i| int((i * (ell + 1)) as i64)).collect();
        let beta = vec![int(1); ell];
        let r: Vec<Rational> = (1..=ell).map(|j| int(j as i64)).collect();
        let d = AffineData::new(ell, alpha, beta, r).unwrap();
        let direct = build_b(&d).det().unwrap();
        assert_eq!(det_b_expansion_complement(&d).unwrap(), direct);
        assert_eq!(enumerate_index_seqs(ell, ell).unwrap().len(), 1);
    }
}

#[test]
fn degree_submatrix_shape_matches_closed_form() {
    // A^[kappa] is B with alpha_i = (i-1)(ell+1), beta_i = 1 and r skipping kappa.
    for ell in 1..=5usize {
        for kappa in 1..=ell + 1 {
            let alpha: Vec<Rational> = (0..ell).map(|i| int((i * (ell + 1)) as i64)).collect();
            let r: Vec<Rational> = (1..=ell)
                .map(|j| int(if j < kappa { j } else { j + 1 } as i64))
                .collect();
            let d = AffineData::new(ell, alpha, vec![int(1); ell], r).unwrap();
            assert_eq!(
                build_b(&d).det().unwrap(),
                Rational::from_integer(det_a_sub_closed_form(ell, kappa).unwrap())
            );
        }
    }
}

#[test]
fn spec_instance_two_by_two() {
    let d = AffineData::new(2, ints(&[1, 1]), ints(&[1, 2]), ints(&[0, 1])).unwrap();
    assert_eq!(det_b_expansion(&d).unwrap(), int(1));
    assert_eq!(det_b_expansion_complement(&d).unwrap(), int(1));
}
