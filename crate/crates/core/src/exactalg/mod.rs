//! Exact arithmetic: big integers and rationals, sparse Laurent polynomials,
//! truncated bivariate power series, and the Laplace functional `t^k ↦ k!`.

mod poly;
mod series;

pub use poly::{LaurentPoly, Monomial, Truncation};
pub use series::{series_inv, series_sqrt, BiSeries};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type ExactInt = BigInt;
pub type ExactRat = BigRational;

pub fn rat(n: i64) -> ExactRat {
    ExactRat::from_integer(n.into())
}

pub fn factorial(n: u64) -> ExactInt {
    (1..=n).fold(ExactInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Exact quotient `num / den`; errors if `den` does not divide `num`.
pub fn exact_div(num: &ExactInt, den: &ExactInt) -> Result<ExactInt> {
    if den.is_zero() {
        return Err(Error::Domain("division by zero".into()));
    }
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::NonIntegral(format!("{num}/{den}")));
    }
    Ok(q)
}

/// Converts an exact rational known to be integral.
pub fn to_integer(r: &ExactRat) -> Result<ExactInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NonIntegral(r.to_string()))
    }
}

/// Free-function form of [`LaurentPoly::laplace_at_one`].
pub fn laplace_at_one(f: &LaurentPoly) -> Result<ExactRat> {
    f.laplace_at_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(5, 2), 10.into());
        assert_eq!(binomial(2, 3), 0.into());
        assert_eq!(binomial(0, 0), 1.into());
        assert_eq!(factorial(0), 1.into());
        assert_eq!(factorial(10), 3628800.into());
    }

    #[test]
    fn exact_division() {
        assert_eq!(exact_div(&12.into(), &4.into()).unwrap(), 3.into());
        assert!(matches!(exact_div(&13.into(), &4.into()), Err(Error::NonIntegral(_))));
        assert!(exact_div(&1.into(), &0.into()).is_err());
        assert!(to_integer(&ExactRat::new(3.into(), 2.into())).is_err());
    }
}
