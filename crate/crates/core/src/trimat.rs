//! Packed lower-triangular matrices over the rationals.
//!
//! Entries above the diagonal are not stored, so every matrix of this type is
//! lower triangular by construction. Two independent inverses are provided:
//! [`LowerTriMatrix::invert_series`] sums the finite alternating series in
//! powers of `D⁻¹L` after splitting off the diagonal, and
//! [`LowerTriMatrix::invert_substitution`] solves `M X = I` by forward
//! substitution.

use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

fn packed_len(dim: usize) -> usize {
    dim * (dim + 1) / 2
}

fn offset(i: usize) -> usize {
    i * (i + 1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerTriMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl LowerTriMatrix {
    /// `entries` is row-major packed: row `i` contributes columns `0..=i`.
    pub fn new(dim: usize, entries: Vec<Rational>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != packed_len(dim) {
            return Err(Error::DimMismatch {
                left: entries.len(),
                right: packed_len(dim),
            });
        }
        Ok(LowerTriMatrix { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(packed_len(dim));
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != i + 1 {
                return Err(Error::RaggedRow {
                    row: i,
                    expected: i + 1,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(LowerTriMatrix { dim, entries })
    }

    /// Fills entry `(i, j)` for `j <= i` from `f`.
    ///
    /// # Panics
    /// If `dim` is zero.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(dim > 0, "matrix dimension must be at least 1");
        let mut entries = Vec::with_capacity(packed_len(dim));
        for i in 0..dim {
            for j in 0..=i {
                entries.push(f(i, j));
            }
        }
        LowerTriMatrix { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| Rational::zero())
    }

    pub fn from_diagonal(diag: &[Rational]) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        Ok(Self::from_fn(diag.len(), |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                Rational::zero()
            }
        }))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry `(i, j)`, zero above the diagonal.
    ///
    /// # Panics
    /// If `i` or `j` is out of range.
    pub fn get(&self, i: usize, j: usize) -> Rational {
        assert!(i < self.dim && j < self.dim, "index ({i}, {j}) out of range");
        if j > i {
            Rational::zero()
        } else {
            self.entries[offset(i) + j].clone()
        }
    }

    /// Stored part of row `i`: columns `0..=i`.
    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[offset(i)..offset(i + 1)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        (0..self.dim).map(move |i| self.row(i))
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.dim).map(|i| self.row(i)[i].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn is_strictly_lower(&self) -> bool {
        self.diagonal().iter().all(Rational::is_zero)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self::from_fn(self.dim, |i, j| {
            let a = self.row(i);
            (j..=i)
                .filter(|&k| !a[k].is_zero())
                .map(|k| &a[k] * &other.row(k)[j])
                .sum()
        }))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(LowerTriMatrix {
            dim: self.dim,
            entries,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(LowerTriMatrix {
            dim: self.dim,
            entries,
        })
    }

    pub fn neg(&self) -> Self {
        LowerTriMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..k {
            acc = acc.mul(self).expect("same dimension");
        }
        acc
    }

    /// Multiplies column `j` by `scale[j]`, i.e. right-multiplies by a diagonal.
    fn scale_columns(&self, scale: &[Rational]) -> Self {
        Self::from_fn(self.dim, |i, j| &self.row(i)[j] * &scale[j])
    }

    /// Multiplies row `i` by `scale[i]`, i.e. left-multiplies by a diagonal.
    fn scale_rows(&self, scale: &[Rational]) -> Self {
        Self::from_fn(self.dim, |i, j| &self.row(i)[j] * &scale[i])
    }

    fn first_zero_diagonal(&self) -> Option<usize> {
        (0..self.dim).find(|&i| self.row(i)[i].is_zero())
    }

    pub fn split_diag_strict(&self) -> DiagPlusStrictSplit {
        let strict = Self::from_fn(self.dim, |i, j| {
            if i == j {
                Rational::zero()
            } else {
                self.row(i)[j].clone()
            }
        });
        DiagPlusStrictSplit {
            diag: self.diagonal(),
            strict,
        }
    }

    /// Inverse as `[I + Σ_{k=1}^{n-1} (-1)^k (D⁻¹L)^k] D⁻¹`.
    ///
    /// `D⁻¹L` is strictly lower triangular, so its `n`-th power vanishes and
    /// the series is finite.
    pub fn invert_series(&self) -> Result<Self> {
        if let Some(i) = self.first_zero_diagonal() {
            return Err(Error::SingularDiagonal(i));
        }
        let split = self.split_diag_strict();
        let d_inv: Vec<Rational> = split
            .diag
            .iter()
            .map(|d| d.recip().expect("checked nonzero"))
            .collect();
        let step = split.strict.scale_rows(&d_inv);

        let mut sum = Self::identity(self.dim);
        let mut power = Self::identity(self.dim);
        for k in 1..self.dim {
            power = power.mul(&step)?;
            sum = if k % 2 == 1 {
                sum.sub(&power)?
            } else {
                sum.add(&power)?
            };
        }
        Ok(sum.scale_columns(&d_inv))
    }

    /// Inverse by forward substitution, one column of the identity at a time.
    pub fn invert_substitution(&self) -> Result<Self> {
        if let Some(i) = self.first_zero_diagonal() {
            return Err(Error::SingularDiagonal(i));
        }
        let n = self.dim;
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(n);
        for c in 0..n {
            // x[i - c] holds row i of column c.
            let mut x: Vec<Rational> = Vec::with_capacity(n - c);
            for i in c..n {
                let row = self.row(i);
                let rhs = if i == c { Rational::one() } else { Rational::zero() };
                let acc: Rational = (c..i).map(|k| &row[k] * &x[k - c]).sum();
                x.push((rhs - acc) / &row[i]);
            }
            cols.push(x);
        }
        Ok(Self::from_fn(n, |i, j| cols[j][i - j].clone()))
    }

    /// Full square CSV, explicit `0` above the diagonal.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.dim {
            let line: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(out, "{}", line.join(",")).unwrap();
        }
        out
    }

    /// Parses the square CSV form. Nonzero entries above the diagonal are an
    /// error since they cannot be represented.
    pub fn from_csv(text: &str) -> Result<Self> {
        let grid: Vec<Vec<Rational>> = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split(',').map(str::parse).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        let n = grid.len();
        let mut rows = Vec::with_capacity(n);
        for (i, mut line) in grid.into_iter().enumerate() {
            if line.len() != n {
                return Err(Error::RaggedRow {
                    row: i,
                    expected: n,
                    found: line.len(),
                });
            }
            if line[i + 1..].iter().any(|x| !x.is_zero()) {
                return Err(Error::ParseRational(format!(
                    "nonzero entry above the diagonal in row {i}"
                )));
            }
            line.truncate(i + 1);
            rows.push(line);
        }
        Self::from_rows(rows)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    dim: usize,
    rows: Vec<Vec<Rational>>,
}

impl Serialize for LowerTriMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            dim: self.dim,
            rows: self.rows().map(<[Rational]>::to_vec).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LowerTriMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(deserializer)?;
        if raw.dim != raw.rows.len() {
            return Err(serde::de::Error::custom(format!(
                "dim {} does not match {} rows",
                raw.dim,
                raw.rows.len()
            )));
        }
        LowerTriMatrix::from_rows(raw.rows).map_err(serde::de::Error::custom)
    }
}

/// A lower-triangular matrix written as `D + L`, diagonal plus strictly lower.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagPlusStrictSplit {
    pub diag: Vec<Rational>,
    pub strict: LowerTriMatrix,
}

impl DiagPlusStrictSplit {
    pub fn recombine(&self) -> LowerTriMatrix {
        LowerTriMatrix::from_fn(self.strict.dim(), |i, j| {
            if i == j {
                self.diag[i].clone()
            } else {
                self.strict.row(i)[j].clone()
            }
        })
    }
}
