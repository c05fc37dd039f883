//! Exact arithmetic in `Z[q^{±1}]` and `Z[t^{±1}]` (with `q = t^d`).
//!
//! Polynomials are untagged ring elements; the variable they live in is
//! carried by the owning container through [`Variable`]. Fractional powers of
//! `q` never appear: anything that needs `q^{a/d}` is moved into the `t` ring
//! with [`embed_q_in_t`] first.

mod matrix;
mod poly;

pub use matrix::LaurentMatrix;
pub use poly::LaurentPoly;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type ComplexValue = num_complex::Complex64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LaurentError {
    #[error("cannot evaluate a Laurent polynomial with negative exponents at 0")]
    EvalAtZero,
}

/// Which indeterminate a polynomial or matrix is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "var", rename_all = "lowercase")]
pub enum Variable {
    /// The Hecke parameter `q`.
    Q,
    /// A root `t` with `t^d = q`.
    T { d: u32 },
}

impl Variable {
    pub fn name(&self) -> &'static str {
        match self {
            Variable::Q => "q",
            Variable::T { .. } => "t",
        }
    }
}

/// Rewrites a polynomial in `q` as one in `t` with `q = t^d`.
pub fn embed_q_in_t(p: &LaurentPoly, d: u32) -> LaurentPoly {
    assert!(d >= 1, "d must be positive");
    p.substitute_power(i64::from(d))
}
