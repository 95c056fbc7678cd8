use std::fmt;

use clap::ValueEnum;
use menage_core::exactalg::{exact_div, factorial};
use menage_core::ExactInt;

use crate::Failure;

/// Published sequences this tool can emit, plus raw counts for any `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SequenceId {
    #[value(name = "A059375")]
    A059375,
    #[value(name = "A000179")]
    A000179,
    #[value(name = "A094047")]
    A094047,
    #[value(name = "A258338")]
    A258338,
    #[value(name = "A114939")]
    A114939,
}

impl SequenceId {
    pub fn name(self) -> &'static str {
        match self {
            SequenceId::A059375 => "A059375",
            SequenceId::A000179 => "A000179",
            SequenceId::A094047 => "A094047",
            SequenceId::A258338 => "A258338",
            SequenceId::A114939 => "A114939",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    None,
    /// `n! · 2`
    TwiceFactorial,
    /// `2n`
    TwiceN,
    /// `4n`
    FourN,
}

impl Normalization {
    fn divisor(self, n: usize) -> Option<ExactInt> {
        match self {
            Normalization::None => None,
            Normalization::TwiceFactorial => Some(factorial(n as u64) * 2u32),
            Normalization::TwiceN => Some(ExactInt::from(2 * n)),
            Normalization::FourN => Some(ExactInt::from(4 * n)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SequenceSpec {
    pub id: Option<SequenceId>,
    pub k: usize,
    pub normalization: Normalization,
}

impl SequenceSpec {
    pub fn published(id: SequenceId) -> Self {
        let (k, normalization) = match id {
            SequenceId::A059375 => (2, Normalization::None),
            SequenceId::A000179 => (2, Normalization::TwiceFactorial),
            SequenceId::A094047 => (2, Normalization::TwiceN),
            SequenceId::A258338 => (3, Normalization::None),
            SequenceId::A114939 => (3, Normalization::FourN),
        };
        SequenceSpec { id: Some(id), k, normalization }
    }

    pub fn raw(k: usize) -> Self {
        SequenceSpec { id: None, k, normalization: Normalization::None }
    }

    /// Smallest `n` with a meaningful normalized value. Dividing by `2n` or
    /// `4n` is undefined at `n = 0`, and `M_0/(2·0!) = 1/2` is not an
    /// integer.
    pub fn min_n(&self) -> usize {
        match self.normalization {
            Normalization::None => 0,
            _ => 1,
        }
    }

    /// Divides a raw seating count; refuses inexact division.
    pub fn normalize(&self, n: usize, raw: &ExactInt) -> Result<ExactInt, Failure> {
        match self.normalization.divisor(n) {
            None => Ok(raw.clone()),
            Some(d) => exact_div(raw, &d)
                .map_err(|_| Failure::Compute(format!("{self}: term {n} = {raw} is not divisible by {d}"))),
        }
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.id {
            Some(id) => f.write_str(id.name()),
            None => write!(f, "raw-k{}", self.k),
        }
    }
}
