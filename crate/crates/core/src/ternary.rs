//! The ternary case `k = 3`: no three consecutive people of the same gender.
//!
//! Three independent routes to `T_n`:
//!
//! 1. closed walks in the six-node de Bruijn graph
//!    ([`crate::transfer::seatings_via_transfer`] with `k = 3`);
//! 2. the Laplace functional applied to `[yⁿ] tr(B₂ⁿ)` ([`ternary_via_b2`]),
//!    where `B₂ = U·t − V` comes from splitting `(yB)² = U + V·z`;
//! 3. the diagonal `[xⁿyⁿ]` of the rational generating function of
//!    `tr(B₂ⁿ)`, reduced to a univariate coefficient `[pⁿ]` of an algebraic
//!    series in `p` ([`ternary_via_diagonal`]).
//!
//! The generating function `Σ T_n xⁿ/n!` contains an integral of an algebraic
//! function that has no known closed form; it is exposed here only through
//! the values `T_n/n!` and through its rational part
//! ([`ternary_egf_rational_term`]).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{factorial, rat, to_integer, BiSeries, ExactInt, ExactRat, LaurentPoly, Truncation};
use crate::transfer::{build_graph, mat_pow_trace_truncated, PolyMatrix};

/// Node labels of [`ternary_matrix`] and [`TernaryB2::literal`], in row order.
pub const TERNARY_ORDER: [&str; 6] = ["fm*", "mf", "ff", "mm", "fm", "mf*"];

/// The 6×6 weighted adjacency matrix `B` of the ternary de Bruijn graph,
/// rows ordered as [`TERNARY_ORDER`].
pub fn ternary_matrix() -> PolyMatrix {
    PolyMatrix::parse_rows(&[
        &["0", "y^-1", "0", "y", "0", "0"],
        &["y*z", "0", "y^-1", "0", "y", "0"],
        &["y*z", "0", "0", "0", "y", "0"],
        &["0", "y^-1", "0", "0", "0", "y^-1*z"],
        &["0", "y^-1", "0", "y", "0", "y^-1*z"],
        &["0", "0", "y^-1", "0", "y", "0"],
    ])
    .expect("well-formed literal")
}

/// Permutation taking the canonical node order of `build_graph(3)` to
/// [`TERNARY_ORDER`].
pub fn ternary_permutation() -> Vec<usize> {
    let g = build_graph(3).expect("k = 3 is valid");
    TERNARY_ORDER.iter().map(|l| g.node_index(l).expect("node present")).collect()
}

/// Splits `(yB)² = U + V·z` and returns `U·t − V` with `y²` renamed `y`.
pub fn b2_from_adjacency(b: &PolyMatrix) -> Result<PolyMatrix> {
    let yb = b.scale(&LaurentPoly::y());
    let sq = yb.mul(&yb)?;
    if sq.entries().any(|e| e.degree_z().unwrap_or(0) > 1) {
        return Err(Error::Domain("(yB)² has z-degree above 1".into()));
    }
    let halve = |e: i32| (e >= 0 && e % 2 == 0).then_some(e / 2);
    sq.try_map(|e| {
        let u = e.z_slice(0);
        let v = e.z_slice(1);
        (&(&u * &LaurentPoly::t()) - &v).map_y_exponents(halve)
    })
}

/// The `6×6` matrix `B₂` with entries polynomial in `y` and `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryB2 {
    pub matrix: PolyMatrix,
}

impl TernaryB2 {
    /// The transcribed matrix, rows ordered as [`TERNARY_ORDER`].
    pub fn literal() -> PolyMatrix {
        PolyMatrix::parse_rows(&[
            &["-y", "y*t", "t", "0", "y*t", "-y"],
            &["-y", "y*t - y", "0", "y^2*t - y^2", "y*t", "-y"],
            &["0", "y*t - y", "0", "y^2*t - y^2", "0", "-y"],
            &["-y", "0", "t - 1", "0", "y*t - y", "0"],
            &["-y", "y*t", "t - 1", "0", "y*t - y", "-y"],
            &["-y", "y*t", "0", "y^2*t", "y*t", "-y"],
        ])
        .expect("well-formed literal")
    }

    /// `B₂` re-derived from the de Bruijn graph for `k = 3`, permuted into
    /// [`TERNARY_ORDER`].
    pub fn derived() -> PolyMatrix {
        let g = build_graph(3).expect("k = 3 is valid");
        let b = g.adjacency().permuted(&ternary_permutation());
        b2_from_adjacency(&b).expect("(yB)² is linear in z")
    }

    /// The transcribed matrix, after checking it against the derived one.
    pub fn new() -> Self {
        let matrix = TernaryB2::literal();
        assert_eq!(matrix, TernaryB2::derived(), "B₂ transcription disagrees with the graph");
        TernaryB2 { matrix }
    }
}

impl Default for TernaryB2 {
    fn default() -> Self {
        TernaryB2::new()
    }
}

fn conventional(n: usize) -> Option<ExactInt> {
    match n {
        0 => Some(ExactInt::one()),
        1 => Some(ExactInt::zero()),
        _ => None,
    }
}

/// `[yⁿ] tr(B₂ⁿ)` as a polynomial in `t`.
pub fn b2_trace_coefficient(n: usize) -> LaurentPoly {
    let b2 = TernaryB2::new();
    let trunc = Truncation { y_min: Some(0), y_max: Some(n as i32), z_max: None, t_max: Some(n as u32) };
    mat_pow_trace_truncated(&b2.matrix, n as u64, &trunc).coeff(n as i32, 0)
}

/// `T_n = n!·L[[yⁿ] tr(B₂ⁿ)]`.
pub fn ternary_via_b2(n: usize) -> Result<ExactInt> {
    if let Some(v) = conventional(n) {
        return Ok(v);
    }
    let l = b2_trace_coefficient(n).laplace_at_one()?;
    Ok(to_integer(&l)? * factorial(n as u64))
}

/// The polynomials `a, b, c, d` in `(p, t)` of the rational generating
/// function `Σ tr(B₂ⁿ)xⁿ = (a + b·(x+xy²)) / (c + d·(x+xy²))` with `p = xy`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ABCDPolys {
    pub a: BiSeries,
    pub b: BiSeries,
    pub c: BiSeries,
    pub d: BiSeries,
}

// Orders large enough to hold every term of a, b, c, d exactly.
const ABCD_ORDER_P: usize = 6;
const ABCD_ORDER_T: usize = 4;

impl ABCDPolys {
    pub fn new() -> Self {
        let (op, ot) = (ABCD_ORDER_P, ABCD_ORDER_T);
        #[rustfmt::skip]
        let a = BiSeries::from_int_terms(op, ot, &[
            (5, 3, -2), (4, 4, 2), (5, 2, 4), (4, 3, -8), (5, 1, -2), (4, 2, 12),
            (4, 1, -8), (3, 1, 6), (2, 2, -4), (2, 0, 16), (1, 1, -10), (1, 0, 20), (0, 0, 6),
        ]);
        #[rustfmt::skip]
        let c = BiSeries::from_int_terms(op, ot, &[
            (6, 2, 1), (5, 3, -2), (4, 4, 1), (5, 2, 4), (4, 3, -4), (5, 1, -2), (4, 2, 6),
            (4, 1, -4), (3, 1, 2), (2, 2, -1), (2, 0, 4), (1, 1, -2), (1, 0, 4), (0, 0, 1),
        ]);
        let f = |terms: &[(usize, usize, i64)]| BiSeries::from_int_terms(op, ot, terms);
        let mul = |x: &BiSeries, y: &BiSeries| x.mul(y).expect("same orders");
        let neg_p2t = f(&[(2, 1, -1)]);
        let two_p_t = f(&[(0, 0, 2), (1, 0, 1), (0, 1, -1)]);
        let lin = f(&[(1, 0, 1), (0, 1, -3), (0, 0, 6)]);
        // b = −p²t(2+p−t)(p−3t+6), d = −p²t(2+p−t)²
        let b = mul(&mul(&neg_p2t, &two_p_t), &lin);
        let d = mul(&mul(&neg_p2t, &two_p_t), &two_p_t);
        ABCDPolys { a, b, c, d }
    }

    pub fn with_orders(&self, order_p: usize, order_t: usize) -> ABCDPolys {
        ABCDPolys {
            a: self.a.with_orders(order_p, order_t),
            b: self.b.with_orders(order_p, order_t),
            c: self.c.with_orders(order_p, order_t),
            d: self.d.with_orders(order_p, order_t),
        }
    }

    /// Univariate coefficient lists in `p` after fixing `t`.
    pub fn at_t(&self, t: &ExactRat) -> [Vec<ExactRat>; 4] {
        let eval = |s: &BiSeries| {
            (0..=s.order_p())
                .map(|i| {
                    let mut acc = ExactRat::zero();
                    let mut pow = ExactRat::one();
                    for j in 0..=s.order_t() {
                        acc += s.get(i, j) * &pow;
                        pow *= t;
                    }
                    acc
                })
                .collect()
        };
        [eval(&self.a), eval(&self.b), eval(&self.c), eval(&self.d)]
    }
}

impl Default for ABCDPolys {
    fn default() -> Self {
        ABCDPolys::new()
    }
}

/// The series `(a − g·c)/√(c² − 4p²d²) + g` with `g = b/d` cancelled to
/// `(p − 3t + 6)/(2 + p − t)`, truncated at the given orders.
pub fn diagonal_expansion(order_p: usize, order_t: usize) -> Result<BiSeries> {
    let abcd = ABCDPolys::new().with_orders(order_p, order_t);
    let f = |terms: &[(usize, usize, i64)]| BiSeries::from_int_terms(order_p, order_t, terms);
    let g = f(&[(1, 0, 1), (0, 1, -3), (0, 0, 6)]).mul(&f(&[(0, 0, 2), (1, 0, 1), (0, 1, -1)]).inv()?)?;
    let pd = f(&[(1, 0, 1)]).mul(&abcd.d)?;
    let radicand = abcd.c.mul(&abcd.c)?.sub(&pd.mul(&pd)?.scale(&rat(4)))?;
    let numer = abcd.a.sub(&g.mul(&abcd.c)?)?;
    numer.mul(&radicand.sqrt()?.inv()?)?.add(&g)
}

/// `[pⁿ]` of [`diagonal_expansion`]: a polynomial in `t` equal to
/// `[yⁿ] tr(B₂ⁿ)`.
pub fn diagonal_coefficient(n: usize) -> Result<LaurentPoly> {
    let coeff = diagonal_expansion(n, n)?.coeff_p(n);
    if let Some((_, c)) = coeff.terms().find(|(_, c)| !c.is_integer()) {
        return Err(Error::NonIntegral(format!("diagonal coefficient {c} at n = {n}")));
    }
    Ok(coeff)
}

/// `T_n = n!·L[[pⁿ] (…)]`.
pub fn ternary_via_diagonal(n: usize) -> Result<ExactInt> {
    if let Some(v) = conventional(n) {
        return Ok(v);
    }
    let l = diagonal_coefficient(n)?.laplace_at_one()?;
    Ok(to_integer(&l)? * factorial(n as u64))
}

/// `[xⁿyⁿ] (a(xy) + b(xy)·(x+xy²)) / (c(xy) + d(xy)·(x+xy²))` for univariate
/// polynomials given by ascending coefficients, via
/// `[pⁿ] ((a·d − b·c)/(d·√(c² − 4p²d²)) + b/d)`.
///
/// `d = p^v·d₀` with `d₀(0) ≠ 0`; the powers `p^{-v}, …, p^{-1}` must cancel
/// between the two summands.
pub fn diagonal_extraction(
    a: &[ExactRat],
    b: &[ExactRat],
    c: &[ExactRat],
    d: &[ExactRat],
    n: usize,
) -> Result<ExactRat> {
    if c.first().is_none_or(|c0| !c0.is_one()) {
        return Err(Error::Domain("c must have constant term 1".into()));
    }
    let v = d
        .iter()
        .position(|x| !x.is_zero())
        .ok_or_else(|| Error::NonCancelling("d is identically zero".into()))?;
    let order = n + v;
    let s = |xs: &[ExactRat]| BiSeries::univariate(order, xs);
    let (sa, sb, sc, sd) = (s(a), s(b), s(c), s(d));
    let d0 = s(&d[v..]);
    let pd = s(&[ExactRat::zero(), ExactRat::one()]).mul(&sd)?;
    let radicand = sc.mul(&sc)?.sub(&pd.mul(&pd)?.scale(&rat(4)))?;
    let cross = sa.mul(&sd)?.sub(&sb.mul(&sc)?)?;
    let h = d0.inv()?.mul(&cross.mul(&radicand.sqrt()?.inv()?)?.add(&sb)?)?;
    if let Some(i) = (0..v).find(|&i| !h.get(i, 0).is_zero()) {
        return Err(Error::NonCancelling(format!("p^{} survives division by d", i as i64 - v as i64)));
    }
    Ok(h.get(order, 0).clone())
}

/// Laplace weights `Σ_{k ≤ t_order} k!·[xⁱtᵏ] g(x, t)` for
/// `g = (x − 3t + 6)/(x − t + 2)`, by direct expansion in `(x, t)`.
pub fn egf_rational_term_by_expansion(order_x: usize, t_order: usize) -> Result<Vec<ExactRat>> {
    let f = |terms: &[(usize, usize, i64)]| BiSeries::from_int_terms(order_x, t_order, terms);
    let g = f(&[(1, 0, 1), (0, 1, -3), (0, 0, 6)]).mul(&f(&[(1, 0, 1), (0, 1, -1), (0, 0, 2)]).inv()?)?;
    Ok((0..=order_x).map(|i| g.coeff_p(i).laplace_at_one().expect("t only")).collect())
}

/// The same weights from `3 − (2x/(2+x))·Σ_{k ≤ t_order} k!/(2+x)^k`.
pub fn egf_rational_term_by_closed_series(order_x: usize, t_order: usize) -> Result<Vec<ExactRat>> {
    let f =
        |terms: &[(usize, i64)]| BiSeries::from_terms(order_x, 0, terms.iter().map(|&(i, c)| (i, 0, rat(c))));
    let inv_2x = f(&[(0, 2), (1, 1)]).inv()?;
    let mut sum = BiSeries::zero(order_x, 0);
    let mut pow = BiSeries::one(order_x, 0);
    for k in 0..=t_order {
        sum = sum.add(&pow.scale(&ExactRat::from_integer(factorial(k as u64))))?;
        pow = pow.mul(&inv_2x)?;
    }
    let series = f(&[(0, 3)]).sub(&f(&[(1, 2)]).mul(&inv_2x)?.mul(&sum)?)?;
    Ok((0..=order_x).map(|i| series.get(i, 0).clone()).collect())
}

/// First `order_x + 1` coefficients in `x` of the Laplace-transformed
/// rational term `b/d`, truncated at `t^t_order`; both expansions must agree.
pub fn ternary_egf_rational_term(order_x: usize, t_order: usize) -> Result<Vec<ExactRat>> {
    let direct = egf_rational_term_by_expansion(order_x, t_order)?;
    let closed = egf_rational_term_by_closed_series(order_x, t_order)?;
    if direct != closed {
        return Err(Error::Domain("rational-term expansions disagree".into()));
    }
    Ok(direct)
}

/// `T_n/n!` for `n = 0..=order`, from the transfer-matrix count.
pub fn ternary_egf_coeffs(order: usize) -> Result<Vec<ExactRat>> {
    (0..=order)
        .map(|n| {
            let t = crate::transfer::seatings_via_transfer(3, n)?;
            Ok(ExactRat::new(t, factorial(n as u64)))
        })
        .collect()
}
