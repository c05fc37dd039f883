//! Specializations `J'` of the Jones representation at roots of unity.
//!
//! `J'(H_i) = c * pi(sigma_i)` evaluated at a complex `q`, with the scalar
//! `c` chosen so that `J'(H_i)^m = Id` and the sphere relations hold.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::{serialize_complex, QuotientError, Scheme};
use crate::jones::{chain, JonesRep};
use crate::numeric::CMatrix;

/// Tolerance for every residual of a specialization.
pub const RESIDUAL_TOLERANCE: f64 = 1e-9;

/// How the parameter `q` is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParameterChoice {
    /// Even: `q = exp(i pi/3)` when `6 | m`, otherwise `k = round(m/6)`.
    /// Odd: `k = round(m/4)`.
    Default,
    /// Even: `q = exp(4 pi i k/m)`. Odd: `q^2 = exp(i pi a/m)` with `a = 3k`
    /// for odd `k` and `a = 3k - 1` for even `k`.
    K(u64),
    /// An explicit value of `q`.
    Q(Complex64),
}

/// Which scalar was used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DressingFormula {
    /// The scheme's own formula on the given branch `t_j = t_0 exp(2 pi i j/d)`.
    Literal { branch: usize },
    /// `zeta * t_0^{2r-d}` with `zeta = exp(2 pi i j/(2(n-1)))`.
    Forced { zeta: usize },
}

/// Frobenius residuals of a family of complex generator images.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Residuals {
    /// `max_i |J'(H_i)^m - Id|`.
    pub power: f64,
    pub braid: f64,
    pub commute: f64,
    pub full_twist: f64,
    pub chain: f64,
}

impl Residuals {
    pub fn max(&self) -> f64 {
        [self.power, self.braid, self.commute, self.full_twist, self.chain].into_iter().fold(0.0, f64::max)
    }

    pub fn sphere_max(&self) -> f64 {
        [self.braid, self.commute, self.full_twist, self.chain].into_iter().fold(0.0, f64::max)
    }

    pub fn within(&self, tol: f64) -> bool {
        self.max() < tol
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Specialization {
    pub g: usize,
    pub m: u64,
    pub scheme: Scheme,
    pub k: Option<u64>,
    #[serde(serialize_with = "serialize_complex")]
    pub q: Complex64,
    #[serde(serialize_with = "serialize_complex")]
    pub t_value: Complex64,
    #[serde(serialize_with = "serialize_complex")]
    pub scalar: Complex64,
    pub formula: DressingFormula,
    /// `m <= 3`, where the infinite-index argument does not apply.
    pub finite_index_regime: bool,
    pub residuals: Residuals,
    #[serde(skip)]
    pub matrices: Vec<CMatrix>,
}

/// `q` and the `k` it came from.
pub fn parameter(scheme: Scheme, m: u64, choice: ParameterChoice) -> Result<(Complex64, Option<u64>), QuotientError> {
    scheme.check(m)?;
    let mf = m as f64;
    let k = match choice {
        ParameterChoice::Q(q) => {
            if q.norm() == 0.0 || !q.is_finite() {
                return Err(QuotientError::InvalidParameter(format!("q = {q} is not a unit")));
            }
            return Ok((q, None));
        }
        ParameterChoice::K(0) => return Err(QuotientError::InvalidParameter("k must be positive".into())),
        ParameterChoice::K(k) => k,
        ParameterChoice::Default => match scheme {
            Scheme::Even if m.is_multiple_of(6) => return Ok((Complex64::from_polar(1.0, PI / 3.0), None)),
            Scheme::Even => ((mf / 6.0).round() as u64).max(1),
            Scheme::Odd => ((mf / 4.0).round() as u64).max(1),
        },
    };
    let q = match scheme {
        Scheme::Even => Complex64::from_polar(1.0, 4.0 * PI * k as f64 / mf),
        Scheme::Odd => Complex64::from_polar(1.0, PI * odd_exponent(k) as f64 / (2.0 * mf)),
    };
    Ok((q, Some(k)))
}

/// `a` with `q^2 = exp(i pi a/m)` in the odd scheme.
pub fn odd_exponent(k: u64) -> u64 {
    if k % 2 == 1 {
        3 * k
    } else {
        3 * k - 1
    }
}

/// Principal `d`-th root.
pub fn principal_root(q: Complex64, d: usize) -> Complex64 {
    Complex64::from_polar(q.norm().powf(1.0 / d as f64), q.arg() / d as f64)
}

/// `c * pi(sigma_i)` evaluated at `q`.
pub fn dress(rep: &JonesRep, q: Complex64, c: Complex64) -> Result<Vec<CMatrix>, QuotientError> {
    rep.unrescaled
        .iter()
        .map(|m| m.eval(q).map(|x| x.scale(c)).map_err(|_| QuotientError::EvalAtZero))
        .collect()
}

fn max_distance<'a>(pairs: impl Iterator<Item = (CMatrix, CMatrix)> + 'a) -> f64 {
    pairs.map(|(a, b)| a.distance(&b)).fold(0.0, f64::max)
}

/// Residuals of the power relation and the four sphere relations.
pub fn residuals(mats: &[CMatrix], m: u64) -> Residuals {
    let dim = mats[0].rows();
    let id = CMatrix::identity(dim);
    let k = mats.len();
    let power = mats.iter().map(|x| x.pow(m).distance(&id)).fold(0.0, f64::max);
    let braid = max_distance((0..k.saturating_sub(1)).map(|i| {
        let (a, b) = (&mats[i], &mats[i + 1]);
        (&(a * b) * a, &(b * a) * b)
    }));
    let commute = max_distance((0..k).flat_map(|i| (i + 2..k).map(move |j| (i, j))).map(|(i, j)| {
        let (a, b) = (&mats[i], &mats[j]);
        (a * b, b * a)
    }));
    let product = mats.iter().fold(id.clone(), |acc, x| &acc * x);
    let full_twist = product.pow(k as u64 + 1).distance(&id);
    let chained = mats.iter().chain(mats.iter().rev()).fold(id.clone(), |acc, x| &acc * x);
    Residuals { power, braid, commute, full_twist, chain: chained.distance(&id) }
}

/// Candidate scalars in the order they are tried.
fn candidates(rep: &JonesRep, scheme: Scheme, m: u64, q: Complex64) -> Vec<(DressingFormula, Complex64, Complex64)> {
    let (d, r, n) = (rep.d as i64, rep.r as i64, rep.n as i64);
    let t0 = principal_root(q, rep.d);
    let mut out = Vec::new();
    for j in 0..rep.d {
        let t = t0 * Complex64::from_polar(1.0, 2.0 * PI * j as f64 / d as f64);
        let c = match scheme {
            Scheme::Even => t.powi(((d - 2 * r) * (m as i64 - 1)) as i32),
            Scheme::Odd => Complex64::from_polar(1.0, -PI * r as f64 / d as f64) * t.powi((2 * r - d) as i32),
        };
        out.push((DressingFormula::Literal { branch: j }, t, c));
    }
    let order = 2 * (n - 1);
    for j in 0..order {
        let zeta = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / order as f64);
        out.push((DressingFormula::Forced { zeta: j as usize }, t0, zeta * t0.powi((2 * r - d) as i32)));
    }
    out
}

/// The specialization of `rep` at the chosen parameter. The scheme's
/// literal scalar is tried on every branch of `t`; if none works, the
/// scalars allowed by the chain relation are tried.
pub fn specialize(rep: &JonesRep, m: u64, scheme: Scheme, choice: ParameterChoice) -> Result<Specialization, QuotientError> {
    let (q, k) = parameter(scheme, m, choice)?;
    let pi = dress(rep, q, Complex64::new(1.0, 0.0))?;
    for (formula, t_value, c) in candidates(rep, scheme, m, q) {
        let matrices: Vec<CMatrix> = pi.iter().map(|x| x.scale(c)).collect();
        let res = residuals(&matrices, m);
        if res.within(RESIDUAL_TOLERANCE) {
            return Ok(Specialization {
                g: rep.g,
                m,
                scheme,
                k,
                q,
                t_value,
                scalar: c,
                formula,
                finite_index_regime: m <= 3,
                residuals: res,
                matrices,
            });
        }
    }
    Err(QuotientError::NoConsistentDressing { g: rep.g, m, scheme })
}

/// `pi(chain)` at `q`, a scalar multiple of the identity.
pub fn chain_scalar(rep: &JonesRep, q: Complex64) -> Result<Complex64, QuotientError> {
    let c = chain(&rep.unrescaled);
    let m = c.eval(q).map_err(|_| QuotientError::EvalAtZero)?;
    Ok(m[(0, 0)])
}
