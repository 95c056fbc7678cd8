use std::fmt;

use clap::ValueEnum;
use menage_core::{menage, oracle, ternary, transfer, ExactInt};
use serde::{Deserialize, Serialize};

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Touchard,
    InclusionExclusion,
    Transfer,
    Eigen,
    B2,
    Diagonal,
    Bruteforce,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Touchard => "touchard",
            Method::InclusionExclusion => "inclusion-exclusion",
            Method::Transfer => "transfer",
            Method::Eigen => "eigen",
            Method::B2 => "b2",
            Method::Diagonal => "diagonal",
            Method::Bruteforce => "bruteforce",
        }
    }

    /// Rejects methods that do not apply to run bound `k` or to terms up to
    /// `n_to`.
    pub fn check(self, k: usize, n_to: usize) -> Result<(), Failure> {
        let ok_k = match self {
            Method::Touchard | Method::InclusionExclusion | Method::Eigen => k == 2,
            Method::B2 | Method::Diagonal => k == 3,
            Method::Transfer | Method::Bruteforce => k >= 2,
        };
        if !ok_k {
            return Err(Failure::Usage(format!("method {self} does not apply to k = {k}")));
        }
        if self == Method::Bruteforce && n_to > oracle::BRUTE_FORCE_MAX_N {
            return Err(Failure::Usage(format!(
                "bruteforce handles n <= {}, asked for {n_to}",
                oracle::BRUTE_FORCE_MAX_N
            )));
        }
        Ok(())
    }

    /// Raw seating count for `n` couples with no `k` same-gender run.
    pub fn seatings(self, k: usize, n: usize) -> Result<ExactInt, Failure> {
        let engine = |e: menage_core::Error| Failure::Compute(format!("{self} at k = {k}, n = {n}: {e}"));
        match self {
            Method::Touchard => Ok(menage::touchard(n)),
            Method::InclusionExclusion => Ok(menage::menage_inclusion_exclusion(n)),
            Method::Eigen => Ok(menage::menage_eigen_recurrence(n)),
            Method::Transfer => transfer::seatings_via_transfer(k, n).map_err(engine),
            Method::B2 => ternary::ternary_via_b2(n).map_err(engine),
            Method::Diagonal => ternary::ternary_via_diagonal(n).map_err(engine),
            Method::Bruteforce if n == 0 => Ok(ExactInt::from(1)),
            Method::Bruteforce => oracle::brute_force(k, n).map_err(engine),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
