//! Binomials, factorials, the excluded elementary symmetric sums
//! `tau(ell, m, j)` over `{1, ..., ell} \ {j}`, and strictly increasing
//! index sequences.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Above this `ell` the tau symbols are computed from the coefficients of
/// `prod (1 + i x)` instead of by subset enumeration.
pub const DIRECT_TAU_LIMIT: usize = 12;

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Validated index triple for `tau(ell, m, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TauKey {
    ell: usize,
    m: usize,
    j: usize,
}

impl TauKey {
    /// Accepts `ell >= 1`, `0 <= m <= ell` and `0 <= j <= ell`.
    pub fn new(ell: usize, m: usize, j: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::OutOfRange {
                name: "ell",
                value: 0,
                range: "[1, inf)".into(),
            });
        }
        if m > ell {
            return Err(Error::OutOfRange {
                name: "m",
                value: m as i64,
                range: format!("[0, {ell}]"),
            });
        }
        if j > ell {
            return Err(Error::OutOfRange {
                name: "j",
                value: j as i64,
                range: format!("[0, {ell}]"),
            });
        }
        Ok(TauKey { ell, m, j })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn j(&self) -> usize {
        self.j
    }
}

/// Sum of `i_1 * ... * i_m` over subsets `{i_1 < ... < i_m}` of
/// `{1, ..., ell}` avoiding `j` (`j = 0` excludes nothing).
pub fn tau(key: &TauKey) -> BigInt {
    if key.m == 0 {
        return BigInt::one();
    }
    if key.ell <= DIRECT_TAU_LIMIT {
        tau_by_subsets(key)
    } else {
        let values: Vec<BigInt> = (1..=key.ell)
            .filter(|&i| i != key.j)
            .map(BigInt::from)
            .collect();
        let e = elementary_symmetric(&values);
        e.get(key.m).cloned().unwrap_or_else(BigInt::zero)
    }
}

/// Direct subset enumeration, the defining sum.
pub fn tau_by_subsets(key: &TauKey) -> BigInt {
    (1..=key.ell)
        .filter(|&i| i != key.j)
        .combinations(key.m)
        .map(|subset| subset.into_iter().fold(BigInt::one(), |acc, i| acc * i))
        .sum()
}

/// All elementary symmetric sums `e_0, ..., e_n` of `values`, read off the
/// coefficients of `prod (1 + v x)`.
pub fn elementary_symmetric(values: &[BigInt]) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); values.len() + 1];
    e[0] = BigInt::one();
    for (n, v) in values.iter().enumerate() {
        for m in (1..=n + 1).rev() {
            let prev = &e[m - 1] * v;
            e[m] += prev;
        }
    }
    e
}

type TauRowCache = RwLock<HashMap<usize, Arc<[BigInt]>>>;

fn tau_row_cache() -> &'static TauRowCache {
    static CACHE: OnceLock<TauRowCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `[tau(ell, 0, 0), ..., tau(ell, ell, 0)]`, memoized per `ell`.
pub fn tau_row(ell: usize) -> Result<Arc<[BigInt]>> {
    if let Some(row) = tau_row_cache().read().expect("tau cache").get(&ell) {
        return Ok(Arc::clone(row));
    }
    let row: Arc<[BigInt]> = (0..=ell)
        .map(|m| TauKey::new(ell, m, 0).map(|k| tau(&k)))
        .collect::<Result<Vec<_>>>()?
        .into();
    tau_row_cache()
        .write()
        .expect("tau cache")
        .insert(ell, Arc::clone(&row));
    Ok(row)
}

/// `sum_{k=0}^{m} (-1)^k tau(ell, m-k, 0) j^k`, valid for `j > 0, m != ell`.
/// For `j = 0` this is `tau(ell, m, 0)` itself.
pub fn tau_via_recurrence(key: &TauKey) -> Result<BigInt> {
    if key.j == 0 {
        return Ok(tau(key));
    }
    if key.m == key.ell {
        return Err(Error::OutOfRange {
            name: "m",
            value: key.m as i64,
            range: format!("[0, {}] when j > 0", key.ell - 1),
        });
    }
    let row = tau_row(key.ell)?;
    let j = BigInt::from(key.j);
    let mut power = BigInt::one();
    let mut total = BigInt::zero();
    for k in 0..=key.m {
        let term = &row[key.m - k] * &power;
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        power *= &j;
    }
    Ok(total)
}

/// Strictly increasing sequence of exponents in `[0, ell - 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSeq {
    ell: usize,
    entries: Vec<usize>,
}

impl IndexSeq {
    pub fn new(ell: usize, entries: Vec<usize>) -> Result<Self> {
        let increasing = entries.windows(2).all(|w| w[0] < w[1]);
        let in_range = entries.last().is_some_and(|&last| last < ell);
        if !increasing || !in_range || entries.len() > ell {
            return Err(Error::BadIndexSeq(entries));
        }
        Ok(IndexSeq { ell, entries })
    }

    /// `(0, 1, ..., k-1)` inside `[0, ell-1]`.
    pub fn initial(ell: usize, k: usize) -> Result<Self> {
        Self::new(ell, (0..k).collect())
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(ell-1-mu_k, ..., ell-1-mu_1)`.
    pub fn complement(&self) -> IndexSeq {
        IndexSeq {
            ell: self.ell,
            entries: self
                .entries
                .iter()
                .rev()
                .map(|&mu| self.ell - 1 - mu)
                .collect(),
        }
    }
}

/// Every strictly increasing length-`k` sequence in `[0, ell-1]`, in
/// lexicographic order.
pub fn enumerate_index_seqs(ell: usize, k: usize) -> Result<Vec<IndexSeq>> {
    if k == 0 || k > ell {
        return Err(Error::OutOfRange {
            name: "k",
            value: k as i64,
            range: format!("[1, {ell}]"),
        });
    }
    Ok((0..ell)
        .combinations(k)
        .map(|entries| IndexSeq { ell, entries })
        .collect())
}
