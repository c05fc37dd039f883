//! Root-of-unity specializations of the Jones representation, the
//! infinite-order certificate for `(H_1H_2)^6 H_3 (H_1H_2)^6 H_3^{-1}`, the
//! reduced Burau representation and ping-pong witnesses for free subgroups.

pub mod burau;
pub mod certificate;
pub mod eigen;
pub mod pingpong;
pub mod specialization;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::jones::JonesError;

pub use burau::{b3_bridge, burau, burau_quadratic_residual, BridgeCheck};
pub use certificate::{infinite_order_certificate, sweep, Certificate, SweepRow, Verdict};
pub use pingpong::{free_subgroup_witness, witness_at, PingPong, Witness};
pub use specialization::{specialize, DressingFormula, ParameterChoice, Residuals, Specialization};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuotientError {
    #[error("m = {m} is {parity}, which does not fit the {scheme} scheme")]
    SchemeMismatch { m: u64, parity: &'static str, scheme: Scheme },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no per-generator scalar makes J'(H_i)^{m} = Id and the sphere relations hold together (g = {g}, {scheme} scheme)")]
    NoConsistentDressing { g: usize, m: u64, scheme: Scheme },
    #[error("m = {m} is excluded for the {scheme} scheme (excluded: {})", list(excluded))]
    ExcludedPower { m: u64, scheme: Scheme, excluded: Vec<u64> },
    #[error("eigenvalue iteration did not converge")]
    EigenNoConvergence,
    #[error("evaluation at q = 0")]
    EvalAtZero,
    #[error(transparent)]
    Jones(#[from] JonesError),
}

fn list(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
}

/// Which root-of-unity family the parameter comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    Even,
    Odd,
}

impl Scheme {
    pub fn of(m: u64) -> Self {
        if m.is_multiple_of(2) {
            Scheme::Even
        } else {
            Scheme::Odd
        }
    }

    /// Powers for which the free-subgroup argument does not apply.
    pub fn excluded_powers(self) -> &'static [u64] {
        match self {
            Scheme::Even => &[2, 4, 6, 10],
            Scheme::Odd => &[1, 3, 5],
        }
    }

    pub(crate) fn check(self, m: u64) -> Result<(), QuotientError> {
        if m == 0 {
            return Err(QuotientError::InvalidParameter("m must be positive".into()));
        }
        if Scheme::of(m) != self {
            let parity = if m.is_multiple_of(2) { "even" } else { "odd" };
            return Err(QuotientError::SchemeMismatch { m, parity, scheme: self });
        }
        Ok(())
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Even => "even",
            Scheme::Odd => "odd",
        })
    }
}

impl FromStr for Scheme {
    type Err = QuotientError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "even" => Ok(Scheme::Even),
            "odd" => Ok(Scheme::Odd),
            _ => Err(QuotientError::InvalidParameter(format!("unknown scheme {s:?}"))),
        }
    }
}

/// Complex numbers serialize as `{"re": .., "im": ..}`.
pub(crate) fn serialize_complex<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct C {
        re: f64,
        im: f64,
    }
    C { re: z.re, im: z.im }.serialize(s)
}

/// Moduli are reported with seven decimals.
pub fn format_modulus(x: f64) -> String {
    format!("{x:.7}")
}
