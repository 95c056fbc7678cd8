use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, Truncation};

/// Square matrix with [`LaurentPoly`] entries, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zero(dim: usize) -> Self {
        PolyMatrix { dim, entries: vec![LaurentPoly::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        PolyMatrix::from_fn(dim, |i, j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { dim, entries }
    }

    /// Builds a matrix from rows; every row must have `rows.len()` entries.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(dim, row.len()));
            }
            entries.extend(row);
        }
        Ok(PolyMatrix { dim, entries })
    }

    /// Parses each entry with [`LaurentPoly`]'s text syntax.
    pub fn parse_rows(rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::from_rows(rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &LaurentPoly> {
        self.entries.iter()
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> PolyMatrix {
        PolyMatrix { dim: self.dim, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map(&self, f: impl Fn(&LaurentPoly) -> Result<LaurentPoly>) -> Result<PolyMatrix> {
        Ok(PolyMatrix { dim: self.dim, entries: self.entries.iter().map(f).collect::<Result<_>>()? })
    }

    fn check_dim(&self, other: &PolyMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.check_dim(other)?;
        Ok(PolyMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.check_dim(other)?;
        Ok(PolyMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    /// Multiplies every entry by the polynomial `c`.
    pub fn scale(&self, c: &LaurentPoly) -> PolyMatrix {
        self.map(|e| e * c)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.mul_truncated(other, &Truncation::NONE)
    }

    pub fn mul_truncated(&self, other: &PolyMatrix, trunc: &Truncation) -> Result<PolyMatrix> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut out = PolyMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    a.mul_acc_truncated(b, trunc, &mut out.entries[i * n + j]);
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for i in 0..self.dim {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// `tr(self · other)` without forming the product.
    pub fn trace_of_product(&self, other: &PolyMatrix, trunc: &Truncation) -> Result<LaurentPoly> {
        self.check_dim(other)?;
        let mut acc = LaurentPoly::zero();
        for i in 0..self.dim {
            for k in 0..self.dim {
                self.get(i, k).mul_acc_truncated(other.get(k, i), trunc, &mut acc);
            }
        }
        Ok(acc)
    }

    pub fn pow_truncated(&self, e: u64, trunc: &Truncation) -> PolyMatrix {
        let mut acc = PolyMatrix::identity(self.dim);
        if e == 0 {
            return acc;
        }
        let bits = 64 - e.leading_zeros();
        acc = self.truncate(trunc);
        for b in (0..bits - 1).rev() {
            acc = acc.mul_truncated(&acc, trunc).expect("square");
            if (e >> b) & 1 == 1 {
                acc = acc.mul_truncated(self, trunc).expect("square");
            }
        }
        acc
    }

    pub fn pow(&self, e: u64) -> PolyMatrix {
        self.pow_truncated(e, &Truncation::NONE)
    }

    pub fn truncate(&self, trunc: &Truncation) -> PolyMatrix {
        self.map(|e| e.truncate(trunc))
    }

    /// Simultaneous row/column permutation: entry `(i, j)` of the result is
    /// entry `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> PolyMatrix {
        PolyMatrix::from_fn(self.dim, |i, j| self.get(perm[i], perm[j]).clone())
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `tr(m^e)` by square-and-multiply; the final product only forms its trace.
pub fn mat_pow_trace(m: &PolyMatrix, e: u64) -> LaurentPoly {
    mat_pow_trace_truncated(m, e, &Truncation::NONE)
}

/// [`mat_pow_trace`] with every intermediate product truncated.
///
/// Only sound when the discarded terms can never feed the coefficients the
/// caller reads back, e.g. `z`-degrees above the final cap.
pub fn mat_pow_trace_truncated(m: &PolyMatrix, e: u64, trunc: &Truncation) -> LaurentPoly {
    match e {
        0 => LaurentPoly::from_int(m.dim() as i64),
        1 => m.trace().truncate(trunc),
        _ => {
            let half = m.pow_truncated(e / 2, trunc);
            let rest = if e % 2 == 1 { half.mul_truncated(m, trunc).expect("square") } else { half.clone() };
            half.trace_of_product(&rest, trunc).expect("square")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> PolyMatrix {
        PolyMatrix::parse_rows(&[&["y", "z + 1"], &["t", "-y^-1"]]).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let m = sample();
        let i = PolyMatrix::identity(2);
        assert_eq!(i.mul(&m).unwrap(), m);
        assert_eq!(m.mul(&i).unwrap(), m);
    }

    #[test]
    fn dimension_mismatch() {
        assert_eq!(sample().mul(&PolyMatrix::identity(3)), Err(Error::DimensionMismatch(2, 3)));
        assert!(PolyMatrix::parse_rows(&[&["1", "2"], &["3"]]).is_err());
    }

    #[test]
    fn power_trace_matches_repeated_product() {
        let m = sample();
        let mut p = PolyMatrix::identity(2);
        for e in 0..7u64 {
            assert_eq!(mat_pow_trace(&m, e), p.trace(), "e = {e}");
            assert_eq!(m.pow(e), p);
            p = p.mul(&m).unwrap();
        }
    }

    #[test]
    fn trace_of_zeroth_power_is_dim() {
        assert_eq!(mat_pow_trace(&PolyMatrix::zero(5), 0), LaurentPoly::from_int(5));
    }

    #[test]
    fn permutation_preserves_trace_of_powers() {
        let m = PolyMatrix::parse_rows(&[&["y", "z", "0"], &["1", "0", "t"], &["y^-1", "2", "z"]]).unwrap();
        let pm = m.permuted(&[2, 0, 1]);
        assert_eq!(mat_pow_trace(&m, 5), mat_pow_trace(&pm, 5));
        assert_eq!(pm.get(0, 0), m.get(2, 2));
        assert_eq!(pm.get(0, 1), m.get(2, 0));
    }
}
