//! The classical case `k = 2`: alternating seatings with no adjacent spouses.
//!
//! Independent routes to the ménage numbers `M_n`:
//! [`touchard`], [`menage_inclusion_exclusion`], [`menage_eigen_recurrence`],
//! the coefficients of the exponential generating function
//! ([`menage_egf_coeffs`]) and the transfer-matrix count
//! [`crate::transfer::seatings_via_transfer`] with `k = 2`.
//!
//! The generating function is also expressible as an integral against
//! `e^{-t}` and through the exponential integral `Ei`; those forms are formally
//! equal to the series used here and are not evaluated numerically.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{
    binomial, exact_div, factorial, rat, to_integer, BiSeries, ExactInt, ExactRat, LaurentPoly,
};
use crate::transfer::{mat_pow_trace, PolyMatrix};

/// Node labels of [`classical_matrix`], in row order.
pub const CLASSICAL_ORDER: [&str; 4] = ["fm", "mf", "mf*", "fm*"];

/// The 4×4 weighted adjacency matrix of the classical de Bruijn graph with
/// rows ordered as [`CLASSICAL_ORDER`].
pub fn classical_matrix() -> PolyMatrix {
    PolyMatrix::parse_rows(&[
        &["0", "y^-1", "y^-1*z", "0"],
        &["y", "0", "0", "y*z"],
        &["y", "0", "0", "0"],
        &["0", "y^-1", "0", "0"],
    ])
    .expect("well-formed literal")
}

/// Constant matrices with `U + V·z = A²` for the classical matrix `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MenageUVPair {
    pub u: PolyMatrix,
    pub v: PolyMatrix,
}

impl MenageUVPair {
    pub fn new(u: PolyMatrix, v: PolyMatrix) -> Result<Self> {
        let a = classical_matrix();
        let a2 = a.mul(&a)?;
        let rebuilt = u.add(&v.scale(&LaurentPoly::z()))?;
        if rebuilt != a2 {
            return Err(Error::Domain("U + V·z differs from A²".into()));
        }
        Ok(MenageUVPair { u, v })
    }

    pub fn classical() -> Self {
        let u = PolyMatrix::parse_rows(&[
            &["1", "0", "0", "0"],
            &["0", "1", "0", "0"],
            &["0", "1", "0", "0"],
            &["1", "0", "0", "0"],
        ])
        .expect("well-formed literal");
        let v = PolyMatrix::parse_rows(&[
            &["1", "0", "0", "1"],
            &["0", "1", "1", "0"],
            &["0", "0", "1", "0"],
            &["0", "0", "0", "1"],
        ])
        .expect("well-formed literal");
        MenageUVPair::new(u, v).expect("A² splits as U + V·z")
    }
}

fn conventional(n: usize) -> Option<ExactInt> {
    match n {
        0 => Some(ExactInt::one()),
        1 => Some(ExactInt::zero()),
        _ => None,
    }
}

/// `2n/(2n−j)·binom(2n−j, j)`: ways to pick `j` disjoint adjacent seat pairs
/// on a cycle of `2n` seats.
fn cyclic_pair_choices(n: usize, j: usize) -> ExactInt {
    let (n2, j) = (2 * n as u64, j as u64);
    exact_div(&(binomial(n2 - j, j) * n2), &ExactInt::from(n2 - j)).expect("integral")
}

/// `M_n = 2·n!·Σ_k (−1)^k·2n/(2n−k)·binom(2n−k, k)·(n−k)!`.
pub fn touchard(n: usize) -> ExactInt {
    if let Some(v) = conventional(n) {
        return v;
    }
    let mut sum = ExactInt::zero();
    for k in 0..=n {
        let term = cyclic_pair_choices(n, k) * factorial((n - k) as u64);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum * factorial(n as u64) * 2
}

/// `W_{n,j}`: alternating seatings of `n` couples in which `j` designated
/// couples sit together. Needs `n ≥ 2`: with two seats the couple is
/// adjacent on both sides and the pair count below overcounts.
pub fn w_alternating(n: usize, j: usize) -> Result<ExactInt> {
    if n < 2 || j > n {
        return Err(Error::Domain(format!("need 0 <= j <= n, n >= 2; got n = {n}, j = {j}")));
    }
    let rest = factorial((n - j) as u64);
    Ok(cyclic_pair_choices(n, j) * 2 * factorial(j as u64) * &rest * &rest)
}

/// `M_n = Σ_j (−1)^j·binom(n, j)·W_{n,j}`.
pub fn menage_inclusion_exclusion(n: usize) -> ExactInt {
    if let Some(v) = conventional(n) {
        return v;
    }
    let mut sum = ExactInt::zero();
    for j in 0..=n {
        let term = binomial(n as u64, j as u64) * w_alternating(n, j).expect("in range");
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// `λ₊ⁿ + λ₋ⁿ` for the roots of `λ² − (t−2)λ + 1`, as a polynomial in `t`.
pub fn eigen_power_sum(n: usize) -> LaurentPoly {
    let t_minus_2 = &LaurentPoly::t() - &LaurentPoly::from_int(2);
    let mut prev = LaurentPoly::from_int(2);
    let mut cur = t_minus_2.clone();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&t_minus_2 * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `M_n = 2·n!·L[λ₊ⁿ + λ₋ⁿ]` with `L` the Laplace functional `t^k ↦ k!`.
pub fn menage_eigen_recurrence(n: usize) -> ExactInt {
    if let Some(v) = conventional(n) {
        return v;
    }
    let l = eigen_power_sum(n).laplace_at_one().expect("polynomial in t");
    to_integer(&l).expect("integral") * factorial(n as u64) * 2
}

fn check_constant(m: &PolyMatrix) -> Result<()> {
    if m.entries().any(|e| e.as_constant().is_none()) {
        return Err(Error::Domain("matrix entries must be constants".into()));
    }
    Ok(())
}

/// Checks `Σ_j (−1)^j (n−j)! [z^j] tr((U+V·z)ⁿ) = L[tr((U·t−V)ⁿ)]` for
/// constant matrices `U`, `V`.
pub fn laplace_identity_check(u: &PolyMatrix, v: &PolyMatrix, n: usize) -> Result<bool> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch(u.dim(), v.dim()));
    }
    check_constant(u)?;
    check_constant(v)?;

    let in_z = u.add(&v.scale(&LaurentPoly::z()))?;
    let tr_z = mat_pow_trace(&in_z, n as u64);
    let mut lhs = ExactRat::zero();
    for j in 0..=n {
        let c = tr_z.coeff(0, j as u32).as_constant().expect("constant in t");
        let term = c * ExactRat::from_integer(factorial((n - j) as u64));
        if j % 2 == 0 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }

    let in_t = u.scale(&LaurentPoly::t()).sub(v)?;
    let rhs = mat_pow_trace(&in_t, n as u64).laplace_at_one()?;
    Ok(lhs == rhs)
}

/// First `N+1` coefficients of `Σ M_n xⁿ/n!`, expanded from
/// `−1 + 2x + 2·(1−x)/(1+x)·Σ_k k!·x^k/(1+x)^{2k}`.
pub fn menage_egf_coeffs(order: usize) -> Vec<ExactRat> {
    let series =
        |terms: &[(usize, i64)]| BiSeries::from_terms(order, 0, terms.iter().map(|&(i, c)| (i, 0, rat(c))));
    let one_plus_x = series(&[(0, 1), (1, 1)]);
    let one_plus_x_sq = one_plus_x.mul(&one_plus_x).expect("same orders");

    let mut sum = BiSeries::zero(order, 0);
    let mut denom = BiSeries::one(order, 0); // (1+x)^{2k}
    for k in 0..=order {
        let num = BiSeries::from_terms(order, 0, [(k, 0, ExactRat::from_integer(factorial(k as u64)))]);
        let term = num.mul(&denom.inv().expect("unit constant term")).expect("same orders");
        sum = sum.add(&term).expect("same orders");
        denom = denom.mul(&one_plus_x_sq).expect("same orders");
    }

    let ratio =
        series(&[(0, 1), (1, -1)]).mul(&one_plus_x.inv().expect("unit constant term")).expect("same orders");
    let egf = series(&[(0, -1), (1, 2)])
        .add(&ratio.mul(&sum).expect("same orders").scale(&rat(2)))
        .expect("same orders");
    (0..=order).map(|i| egf.get(i, 0).clone()).collect()
}

/// `2·2n/(2n−j)·binom(2n−j, j)`, the closed form of `[y^0 z^j] tr(A^{2n})`.
pub fn catalan_pattern_closed_form(n: usize, j: usize) -> Result<ExactInt> {
    if n < 2 || j > n {
        return Err(Error::Domain(format!("need n >= 2 and j <= n; got n = {n}, j = {j}")));
    }
    Ok(cyclic_pair_choices(n, j) * 2)
}
