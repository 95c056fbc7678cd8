//! Dense bivariate power series in `(p, t)` truncated at fixed orders.

use num_traits::{One, Zero};

use super::{ExactRat, LaurentPoly, Monomial};
use crate::error::{Error, Result};

/// `Σ c[i][j]·p^i·t^j` for `0 ≤ i ≤ order_p`, `0 ≤ j ≤ order_t`.
///
/// Arithmetic is carried out modulo `p^(order_p+1)` and `t^(order_t+1)`.
/// Binary operations require both operands to have the same orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    order_p: usize,
    order_t: usize,
    coeffs: Vec<ExactRat>,
}

impl BiSeries {
    pub fn zero(order_p: usize, order_t: usize) -> Self {
        BiSeries { order_p, order_t, coeffs: vec![ExactRat::zero(); (order_p + 1) * (order_t + 1)] }
    }

    pub fn constant(order_p: usize, order_t: usize, c: ExactRat) -> Self {
        let mut s = BiSeries::zero(order_p, order_t);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order_p: usize, order_t: usize) -> Self {
        BiSeries::constant(order_p, order_t, ExactRat::one())
    }

    /// Builds a series from `(i, j, c)` triples; terms beyond the orders are
    /// dropped and repeated indices accumulate.
    pub fn from_terms<I>(order_p: usize, order_t: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, ExactRat)>,
    {
        let mut s = BiSeries::zero(order_p, order_t);
        for (i, j, c) in terms {
            if i <= order_p && j <= order_t {
                let idx = s.index(i, j);
                s.coeffs[idx] += c;
            }
        }
        s
    }

    /// Same as [`from_terms`](Self::from_terms) with integer coefficients.
    pub fn from_int_terms(order_p: usize, order_t: usize, terms: &[(usize, usize, i64)]) -> Self {
        BiSeries::from_terms(
            order_p,
            order_t,
            terms.iter().map(|&(i, j, c)| (i, j, ExactRat::from_integer(c.into()))),
        )
    }

    /// Univariate series in `p` (with `order_t = 0`) from ascending coefficients.
    pub fn univariate(order: usize, coeffs: &[ExactRat]) -> Self {
        BiSeries::from_terms(order, 0, coeffs.iter().cloned().enumerate().map(|(i, c)| (i, 0, c)))
    }

    pub fn order_p(&self) -> usize {
        self.order_p
    }

    pub fn order_t(&self) -> usize {
        self.order_t
    }

    #[inline]
    fn index(&self, i: usize, j: usize) -> usize {
        i * (self.order_t + 1) + j
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactRat {
        &self.coeffs[self.index(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, c: ExactRat) {
        let idx = self.index(i, j);
        self.coeffs[idx] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The coefficient of `p^i` as a polynomial in `t`.
    pub fn coeff_p(&self, i: usize) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for j in 0..=self.order_t {
            out.add_term(Monomial::new(0, 0, j as u32), self.get(i, j).clone());
        }
        out
    }

    /// Re-truncates (or zero-extends) to new orders.
    pub fn with_orders(&self, order_p: usize, order_t: usize) -> BiSeries {
        let mut out = BiSeries::zero(order_p, order_t);
        for i in 0..=order_p.min(self.order_p) {
            for j in 0..=order_t.min(self.order_t) {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        out
    }

    fn check_orders(&self, other: &BiSeries) -> Result<()> {
        if self.order_p != other.order_p || self.order_t != other.order_t {
            return Err(Error::OrderMismatch(self.order_p, self.order_t, other.order_p, other.order_t));
        }
        Ok(())
    }

    pub fn add(&self, other: &BiSeries) -> Result<BiSeries> {
        self.check_orders(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(BiSeries { coeffs, ..*self })
    }

    pub fn sub(&self, other: &BiSeries) -> Result<BiSeries> {
        self.check_orders(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(BiSeries { coeffs, ..*self })
    }

    pub fn neg(&self) -> BiSeries {
        BiSeries { coeffs: self.coeffs.iter().map(|c| -c).collect(), ..*self }
    }

    pub fn scale(&self, c: &ExactRat) -> BiSeries {
        BiSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect(), ..*self }
    }

    pub fn mul(&self, other: &BiSeries) -> Result<BiSeries> {
        self.check_orders(other)?;
        let mut out = BiSeries::zero(self.order_p, self.order_t);
        for i1 in 0..=self.order_p {
            for j1 in 0..=self.order_t {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=self.order_p - i1 {
                    for j2 in 0..=self.order_t - j1 {
                        let b = other.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        let idx = out.index(i1 + i2, j1 + j2);
                        out.coeffs[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u32) -> BiSeries {
        let mut acc = BiSeries::one(self.order_p, self.order_t);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same orders");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same orders");
            }
        }
        acc
    }

    /// Total-degree bound past which every coefficient is truncated away.
    fn full_precision(&self) -> usize {
        self.order_p + self.order_t + 1
    }

    /// Multiplicative inverse by Newton iteration `u ← u·(2 − s·u)`.
    ///
    /// Each step doubles the total degree up to which `u` is exact.
    pub fn inv(&self) -> Result<BiSeries> {
        let c0 = self.get(0, 0);
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let two = BiSeries::constant(self.order_p, self.order_t, ExactRat::from_integer(2.into()));
        let mut u = BiSeries::constant(self.order_p, self.order_t, c0.recip());
        let mut precision = 1;
        while precision < self.full_precision() {
            let su = self.mul(&u)?;
            u = u.mul(&two.sub(&su)?)?;
            precision *= 2;
        }
        Ok(u)
    }

    /// Square root with constant term 1 by Newton iteration `r ← (r + s/r)/2`.
    pub fn sqrt(&self) -> Result<BiSeries> {
        if !self.get(0, 0).is_one() {
            return Err(Error::SqrtConstantTerm);
        }
        let half = ExactRat::new(1.into(), 2.into());
        let mut r = BiSeries::one(self.order_p, self.order_t);
        let mut precision = 1;
        while precision < self.full_precision() {
            let q = self.mul(&r.inv()?)?;
            r = r.add(&q)?.scale(&half);
            precision *= 2;
        }
        Ok(r)
    }
}

/// Free-function form of [`BiSeries::inv`].
pub fn series_inv(s: &BiSeries) -> Result<BiSeries> {
    s.inv()
}

/// Free-function form of [`BiSeries::sqrt`].
pub fn series_sqrt(s: &BiSeries) -> Result<BiSeries> {
    s.sqrt()
}
