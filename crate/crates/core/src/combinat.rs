//! Integer sequences and special polynomials: binomials, factorials,
//! Bernoulli numbers and polynomials, Stirling numbers of both kinds, and
//! rising/falling factorials.
//!
//! Bernoulli numbers and Stirling tables are memoized in process-wide caches.
//! Lookups share a read lock; growth takes the write lock and only ever
//! appends, so a caller sees the same values it would get from an eager table.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// `C(n, k)`, zero when `k` is outside `0..=n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Bernoulli numbers `B_n = B_n(0)` under the generating function
/// `z e^{tz} / (e^z - 1)`, so `B_1 = -1/2`.
pub struct BernoulliCache {
    values: RwLock<Vec<Rational>>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache {
            values: RwLock::new(vec![Rational::one()]),
        }
    }

    pub fn get(&self, n: usize) -> Rational {
        if let Some(v) = self.values.read().unwrap().get(n) {
            return v.clone();
        }
        let mut values = self.values.write().unwrap();
        while values.len() <= n {
            let m = values.len();
            // Σ_{k=0}^{m} C(m+1, k) B_k = 0, solved for B_m.
            let partial: Rational = values
                .iter()
                .enumerate()
                .map(|(k, b)| b * Rational::from(binomial(m as u64 + 1, k as i64)))
                .sum();
            let b = -partial / Rational::from(m + 1);
            values.push(b);
        }
        values[n].clone()
    }
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

static BERNOULLI: LazyLock<BernoulliCache> = LazyLock::new(BernoulliCache::new);

pub fn bernoulli_number(n: usize) -> Rational {
    BERNOULLI.get(n)
}

/// `B_n(z) = Σ_{k=0}^{n} C(n,k) B_k z^{n-k}`.
pub fn bernoulli_poly(n: usize, z: &Rational) -> Rational {
    // Horner over descending powers of z.
    (0..=n).fold(Rational::zero(), |acc, k| {
        acc * z + bernoulli_number(k) * Rational::from(binomial(n as u64, k as i64))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StirlingKind {
    /// Signed numbers of the first kind: coefficients of the falling factorial.
    FirstSigned,
    /// Numbers of the second kind: set partitions into k blocks.
    Second,
}

/// Triangular table of Stirling numbers, grown row by row from the
/// recurrence for its kind.
pub struct StirlingTable {
    kind: StirlingKind,
    rows: RwLock<Vec<Vec<BigInt>>>,
}

impl StirlingTable {
    pub fn new(kind: StirlingKind) -> Self {
        StirlingTable {
            kind,
            rows: RwLock::new(vec![vec![BigInt::one()]]),
        }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn get(&self, n: usize, k: i64) -> BigInt {
        if k < 0 || k as usize > n {
            return BigInt::zero();
        }
        let k = k as usize;
        if let Some(row) = self.rows.read().unwrap().get(n) {
            return row[k].clone();
        }
        let mut rows = self.rows.write().unwrap();
        while rows.len() <= n {
            let prev = rows.last().unwrap();
            let m = prev.len() - 1;
            let at = |j: usize| prev.get(j).cloned().unwrap_or_default();
            let next: Vec<BigInt> = (0..=m + 1)
                .map(|j| {
                    let left = if j == 0 { BigInt::zero() } else { at(j - 1) };
                    match self.kind {
                        // s(m+1, j) = s(m, j-1) - m s(m, j)
                        StirlingKind::FirstSigned => left - at(j) * m,
                        // S(m+1, j) = j S(m, j) + S(m, j-1)
                        StirlingKind::Second => at(j) * j + left,
                    }
                })
                .collect();
            rows.push(next);
        }
        rows[n][k].clone()
    }
}

static STIRLING1: LazyLock<StirlingTable> =
    LazyLock::new(|| StirlingTable::new(StirlingKind::FirstSigned));
static STIRLING2: LazyLock<StirlingTable> =
    LazyLock::new(|| StirlingTable::new(StirlingKind::Second));

/// Signed Stirling number of the first kind `s(n, k)`.
pub fn stirling1(n: usize, k: i64) -> BigInt {
    STIRLING1.get(n, k)
}

/// Stirling number of the second kind `S(n, k)`.
pub fn stirling2(n: usize, k: i64) -> BigInt {
    STIRLING2.get(n, k)
}

/// `<z>_n = z (z-1) ... (z-n+1)`, with `<z>_0 = 1`.
pub fn falling_factorial(z: &Rational, n: usize) -> Rational {
    (0..n).map(|k| z - Rational::from(k)).product()
}

/// `(z)_n = z (z+1) ... (z+n-1)`, with `(z)_0 = 1`.
pub fn rising_factorial(z: &Rational, n: usize) -> Rational {
    (0..n).map(|k| z + Rational::from(k)).product()
}
