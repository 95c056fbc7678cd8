//! Sparse polynomials in `y` (signed exponents), `z` and `t` over exact rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ExactInt, ExactRat};
use crate::error::{Error, Result};

/// Exponent triple `y^y · z^z · t^t`.
///
/// The derived ordering is lexicographic on `(y, z, t)`, which is also the
/// order terms are rendered in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub y: i32,
    pub z: u32,
    pub t: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { y: 0, z: 0, t: 0 };

    pub fn new(y: i32, z: u32, t: u32) -> Self {
        Monomial { y, z, t }
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial { y: self.y + other.y, z: self.z + other.z, t: self.t + other.t }
    }
}

/// Bounds applied to the exponents of a product; terms outside are dropped.
///
/// Used to keep matrix powers small when only a window of coefficients can
/// ever contribute to the quantity being extracted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Truncation {
    pub y_min: Option<i32>,
    pub y_max: Option<i32>,
    pub z_max: Option<u32>,
    pub t_max: Option<u32>,
}

impl Truncation {
    pub const NONE: Truncation = Truncation { y_min: None, y_max: None, z_max: None, t_max: None };

    #[inline]
    pub fn admits(&self, m: Monomial) -> bool {
        self.y_min.is_none_or(|lo| m.y >= lo)
            && self.y_max.is_none_or(|hi| m.y <= hi)
            && self.z_max.is_none_or(|hi| m.z <= hi)
            && self.t_max.is_none_or(|hi| m.t <= hi)
    }
}

/// A finite sum of rational multiples of monomials in `y^{±1}`, `z`, `t`.
///
/// Canonical: zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, ExactRat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(ExactRat::one())
    }

    pub fn constant(c: ExactRat) -> Self {
        LaurentPoly::term(c, Monomial::ONE)
    }

    pub fn from_int(c: i64) -> Self {
        LaurentPoly::constant(ExactRat::from_integer(c.into()))
    }

    pub fn term(c: ExactRat, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// The monomial `y^y z^z t^t` with coefficient one.
    pub fn monomial(y: i32, z: u32, t: u32) -> Self {
        LaurentPoly::term(ExactRat::one(), Monomial::new(y, z, t))
    }

    pub fn y() -> Self {
        LaurentPoly::monomial(1, 0, 0)
    }

    pub fn y_inv() -> Self {
        LaurentPoly::monomial(-1, 0, 0)
    }

    pub fn z() -> Self {
        LaurentPoly::monomial(0, 1, 0)
    }

    pub fn t() -> Self {
        LaurentPoly::monomial(0, 0, 1)
    }

    /// Builds `Σ c·t^k` from integer coefficients listed by ascending power.
    pub fn from_t_coeffs<I: IntoIterator<Item = ExactRat>>(coeffs: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            p.add_term(Monomial::new(0, 0, k as u32), c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactRat)> {
        self.terms.iter()
    }

    /// Coefficient of the exact monomial `m` (zero if absent).
    pub fn get(&self, m: Monomial) -> ExactRat {
        self.terms.get(&m).cloned().unwrap_or_else(ExactRat::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: ExactRat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &ExactRat) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    /// Product with every term outside `trunc` discarded.
    pub fn mul_truncated(&self, other: &LaurentPoly, trunc: &Truncation) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        self.mul_acc_truncated(other, trunc, &mut out);
        out
    }

    /// `acc += self · other`, truncated.
    pub fn mul_acc_truncated(&self, other: &LaurentPoly, trunc: &Truncation, acc: &mut LaurentPoly) {
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.times(*mb);
                if trunc.admits(m) {
                    acc.add_term(m, ca * cb);
                }
            }
        }
    }

    pub fn truncate(&self, trunc: &Truncation) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| trunc.admits(**m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// The coefficient of `y^e_y z^e_z`, as a polynomial in `t`.
    pub fn coeff(&self, e_y: i32, e_z: u32) -> LaurentPoly {
        let lo = Monomial::new(e_y, e_z, 0);
        let hi = Monomial::new(e_y, e_z, u32::MAX);
        LaurentPoly {
            terms: self.terms.range(lo..=hi).map(|(m, c)| (Monomial::new(0, 0, m.t), c.clone())).collect(),
        }
    }

    /// All terms of `z`-degree `j`, with `z` removed.
    pub fn z_slice(&self, j: u32) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.z == j)
                .map(|(m, c)| (Monomial::new(m.y, 0, m.t), c.clone()))
                .collect(),
        }
    }

    pub fn depends_on_y(&self) -> bool {
        self.terms.keys().any(|m| m.y != 0)
    }

    pub fn depends_on_z(&self) -> bool {
        self.terms.keys().any(|m| m.z != 0)
    }

    pub fn depends_on_t(&self) -> bool {
        self.terms.keys().any(|m| m.t != 0)
    }

    pub fn degree_t(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.t).max()
    }

    pub fn degree_z(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.z).max()
    }

    /// Maps every `y` exponent through `f`; fails where `f` returns `None`.
    pub fn map_y_exponents(&self, f: impl Fn(i32) -> Option<i32>) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let y = f(m.y).ok_or_else(|| Error::Domain(format!("y exponent {} not mappable", m.y)))?;
            out.add_term(Monomial::new(y, m.z, m.t), c.clone());
        }
        Ok(out)
    }

    /// Returns the constant coefficient if the polynomial has no indeterminates.
    pub fn as_constant(&self) -> Option<ExactRat> {
        match self.terms.len() {
            0 => Some(ExactRat::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// If the polynomial is a constant integer, returns it.
    pub fn as_integer(&self) -> Option<ExactInt> {
        self.as_constant().filter(|c| c.is_integer()).map(|c| c.to_integer())
    }

    /// `Σ_k k!·[t^k] f`: the Laplace functional `∫₀^∞ f(t)·e^{-t} dt` on
    /// polynomials in `t`.
    pub fn laplace_at_one(&self) -> Result<ExactRat> {
        if self.depends_on_y() || self.depends_on_z() {
            return Err(Error::Domain("laplace_at_one expects a polynomial in t only".into()));
        }
        let mut sum = ExactRat::zero();
        let mut fact = BigInt::one();
        let mut k = 0u32;
        for (m, c) in &self.terms {
            while k < m.t {
                k += 1;
                fact *= k;
            }
            sum += c * ExactRat::from_integer(fact.clone());
        }
        Ok(sum)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_truncated(rhs, &Truncation::NONE)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

fn write_factor(f: &mut fmt::Formatter<'_>, var: &str, e: i64, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        f.write_str("*")?;
    }
    *first = false;
    if e == 1 {
        f.write_str(var)
    } else {
        write!(f, "{var}^{e}")
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in `(y, z, t)` order, e.g. `-2*y^-1*z + 3*t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mut first = true;
            if *m == Monomial::ONE || !mag.is_one() {
                write!(f, "{mag}")?;
                first = false;
            }
            write_factor(f, "y", m.y as i64, &mut first)?;
            write_factor(f, "z", m.z as i64, &mut first)?;
            write_factor(f, "t", m.t as i64, &mut first)?;
        }
        Ok(())
    }
}

fn parse_term(src: &str) -> Result<(Monomial, ExactRat)> {
    let bad = || Error::Parse(format!("malformed term `{src}`"));
    let mut m = Monomial::ONE;
    let mut coeff = ExactRat::one();
    let mut saw_coeff = false;
    for factor in src.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(bad());
        }
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (b, Some(e.parse::<i64>().map_err(|_| bad())?)),
            None => (factor, None),
        };
        match base {
            "y" => m.y += i32::try_from(exp.unwrap_or(1)).map_err(|_| bad())?,
            "z" | "t" => {
                let e = u32::try_from(exp.unwrap_or(1)).map_err(|_| bad())?;
                if base == "z" {
                    m.z += e
                } else {
                    m.t += e
                }
            }
            _ => {
                if saw_coeff || exp.is_some() {
                    return Err(bad());
                }
                saw_coeff = true;
                coeff = base.parse::<ExactRat>().map_err(|_| bad())?;
            }
        }
    }
    Ok((m, coeff))
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the rendering produced by `Display`; also accepts unsorted input
    /// and repeated monomials.
    fn from_str(s: &str) -> Result<Self> {
        let mut rest = s.trim();
        if rest.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r;
        }
        let mut out = LaurentPoly::zero();
        loop {
            let bytes = rest.as_bytes();
            let split =
                (1..bytes.len()).find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^');
            let chunk = &rest[..split.unwrap_or(bytes.len())];
            let (m, c) = parse_term(chunk.trim())?;
            out.add_term(m, if negative { -c } else { c });
            match split {
                Some(i) => {
                    negative = bytes[i] == b'-';
                    rest = &rest[i + 1..];
                }
                None => break,
            }
        }
        Ok(out)
    }
}
