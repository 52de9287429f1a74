#![allow(dead_code)]

use degdet_core::exactnum::{int, rat};
use degdet_core::{ExactMatrix, Rational};
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |x| x != &int(0))
}

pub fn rational_vec(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_rational(), len)
}

pub fn square_matrix(max: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max).prop_flat_map(|n| {
        rational_vec(n * n).prop_map(move |entries| ExactMatrix::new(n, n, entries).unwrap())
    })
}

pub fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

pub fn all_distinct(xs: &[Rational]) -> bool {
    (0..xs.len()).all(|i| ((i + 1)..xs.len()).all(|j| xs[i] != xs[j]))
}

/// `n`-th forward difference of `a` at index 0.
pub fn forward_difference(a: &[Rational], n: usize) -> Rational {
    let mut row = a.to_vec();
    for _ in 0..n {
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    row[0].clone()
}
