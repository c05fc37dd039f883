//! The infinite-order certificate for
//! `A = (H_1H_2)^6 H_3 (H_1H_2)^6 H_3^{-1}`.
//!
//! `A` is built exactly over `Z[q^{±1}]` from the unrescaled generators (the
//! scalar dressing contributes a unit factor `c^24` and does not change
//! moduli). Its leading `5 x 5` block `C'` is invariant, so the dominant
//! eigenvalue modulus of `C'` at the specialized `q` certifies that no
//! power of `A` is the identity.

use std::ops::RangeInclusive;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use super::eigen::{certified_radius_lower_bound, eigenvalues, inclusion_radii, max_residual, polynomial_roots, spectral_radius};
use super::specialization::{parameter, specialize, DressingFormula, ParameterChoice};
use super::{format_modulus, serialize_complex, QuotientError, Scheme};
use crate::jones::JonesRep;
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::numeric::CMatrix;

pub const ELEMENT: &str = "(H1H2)^6 H3 (H1H2)^6 H3^-1";

/// Size of the invariant leading block.
pub const BLOCK: usize = 5;

/// A modulus above `1 + MODULUS_MARGIN` counts as growth.
pub const MODULUS_MARGIN: f64 = 1e-6;

/// `|det(C' - lambda I)| < RESIDUAL_FACTOR * |C'|_F^5` accepts an eigenvalue.
pub const RESIDUAL_FACTOR: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    InfiniteOrder,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub element: String,
    pub g: usize,
    pub m: u64,
    pub scheme: Scheme,
    pub k: Option<u64>,
    #[serde(serialize_with = "serialize_complex")]
    pub q: Complex64,
    pub formula: Option<DressingFormula>,
    /// Dominant eigenvalue modulus of `C'` (approximate).
    pub modulus: Option<f64>,
    /// `modulus` with seven decimals.
    pub modulus_display: Option<String>,
    /// Radius that some eigenvalue provably exceeds (inclusion discs).
    pub modulus_lower_bound: Option<f64>,
    /// Eigenvalue moduli of `C'`, descending (approximate).
    pub eigenvalue_moduli: Vec<f64>,
    pub verdict: Verdict,
    pub reason: Option<String>,
}

/// `A` over `Z[q^{±1}]` and the characteristic polynomial of its leading
/// block, reusable across parameter values.
#[derive(Debug, Clone)]
pub struct CertificateData {
    pub g: usize,
    pub element: LaurentMatrix,
    pub block: LaurentMatrix,
    pub charpoly: Vec<LaurentPoly>,
}

impl CertificateData {
    pub fn new(rep: &JonesRep) -> Self {
        let pi = &rep.unrescaled;
        let d = rep.d;
        // pi(sigma)^{-1} = pi(sigma) - (q - q^{-1}) Id by the quadratic relation.
        let h3_inv = &pi[2] - &LaurentMatrix::scalar(d, LaurentPoly::var() - LaurentPoly::monomial(-1, 1));
        let p = (&pi[0] * &pi[1]).pow(6);
        let element = &(&(&p * &pi[2]) * &p) * &h3_inv;
        let block = element.block(0, BLOCK, 0, BLOCK);
        let charpoly = block.charpoly();
        Self { g: rep.g, element, block, charpoly }
    }

    /// Characteristic polynomial coefficients at `q` with a bound on the
    /// rounding error of each.
    fn coefficients_at(&self, q: Complex64) -> Result<(Vec<Complex64>, Vec<f64>), QuotientError> {
        let mut values = Vec::with_capacity(self.charpoly.len());
        let mut errors = Vec::with_capacity(self.charpoly.len());
        let r = q.norm();
        for c in &self.charpoly {
            values.push(c.eval(q).map_err(|_| QuotientError::EvalAtZero)?);
            let size: f64 = c
                .terms()
                .iter()
                .map(|(e, a)| a.to_f64().unwrap_or(f64::INFINITY).abs() * r.powi(*e as i32))
                .sum();
            errors.push(8.0 * (c.terms().len() as f64 + 2.0) * f64::EPSILON * size);
        }
        Ok((values, errors))
    }

    /// Eigenvalues of `C'` at `q`, each accepted by its determinant
    /// residual.
    pub fn eigenvalues_at(&self, q: Complex64) -> Result<Vec<Complex64>, QuotientError> {
        let (coeffs, _) = self.coefficients_at(q)?;
        let ev = polynomial_roots(&coeffs)?;
        let c = self.block.eval(q).map_err(|_| QuotientError::EvalAtZero)?;
        let bound = RESIDUAL_FACTOR * c.frobenius_norm().powi(BLOCK as i32);
        if max_residual(&c, &ev) < bound {
            Ok(ev)
        } else {
            Err(QuotientError::EigenNoConvergence)
        }
    }

    /// Dominant eigenvalue modulus of `C'` at `q`.
    pub fn modulus_at(&self, q: Complex64) -> Result<f64, QuotientError> {
        Ok(spectral_radius(&self.eigenvalues_at(q)?))
    }

    /// A lower bound on the spectral radius of `C'` at `q` from inclusion
    /// discs around the computed eigenvalues.
    pub fn modulus_lower_bound_at(&self, q: Complex64) -> Result<f64, QuotientError> {
        let (coeffs, errors) = self.coefficients_at(q)?;
        let ev = self.eigenvalues_at(q)?;
        Ok(certified_radius_lower_bound(&ev, &inclusion_radii(&coeffs, &errors, &ev)))
    }
}

/// `A` built numerically from complex generator images.
pub fn complex_element(mats: &[CMatrix]) -> CMatrix {
    let h3_inv = mats[2].inverse().expect("generator images are invertible");
    let p = (&mats[0] * &mats[1]).pow(6);
    &(&(&p * &mats[2]) * &p) * &h3_inv
}

/// Dominant modulus of the leading block of a complex `A`.
pub fn complex_block_modulus(a: &CMatrix) -> Result<f64, QuotientError> {
    Ok(spectral_radius(&eigenvalues(&a.block(0, BLOCK, 0, BLOCK))?))
}

/// Certificate for `A` under the specialization at `(m, scheme, choice)`.
/// Any failure along the way yields an inconclusive verdict.
pub fn certify(
    data: &CertificateData,
    rep: &JonesRep,
    m: u64,
    scheme: Scheme,
    choice: ParameterChoice,
) -> Result<Certificate, QuotientError> {
    let (q, k) = parameter(scheme, m, choice)?;
    let mut reasons = Vec::new();
    let formula = match specialize(rep, m, scheme, choice) {
        Ok(s) => Some(s.formula),
        Err(e) => {
            reasons.push(e.to_string());
            None
        }
    };
    let eigen = data.eigenvalues_at(q);
    let mut moduli: Vec<f64> = match &eigen {
        Ok(ev) => ev.iter().map(|z| z.norm()).collect(),
        Err(e) => {
            reasons.push(e.to_string());
            Vec::new()
        }
    };
    moduli.sort_by(|a, b| b.total_cmp(a));
    let modulus = moduli.first().copied();
    let lower = if eigen.is_ok() { data.modulus_lower_bound_at(q).ok() } else { None };
    match (modulus, lower) {
        (Some(x), _) if x <= 1.0 + MODULUS_MARGIN => {
            reasons.push(format!("dominant modulus {} does not exceed 1", format_modulus(x)))
        }
        (Some(_), Some(l)) if l <= 1.0 + MODULUS_MARGIN => reasons.push(format!(
            "eigenvalues cluster near the unit circle; certified spectral radius bound {l:.3e} does not exceed 1"
        )),
        _ => {}
    }
    if m <= 3 {
        reasons.push(format!("m = {m} lies in the finite-index regime"));
    }
    let verdict = if reasons.is_empty() { Verdict::InfiniteOrder } else { Verdict::Inconclusive };
    Ok(Certificate {
        element: ELEMENT.to_string(),
        g: rep.g,
        m,
        scheme,
        k,
        q,
        formula,
        modulus,
        modulus_display: modulus.map(format_modulus),
        modulus_lower_bound: lower,
        eigenvalue_moduli: moduli,
        verdict,
        reason: (!reasons.is_empty()).then(|| reasons.join("; ")),
    })
}

pub fn infinite_order_certificate(
    rep: &JonesRep,
    m: u64,
    scheme: Scheme,
    choice: ParameterChoice,
) -> Result<Certificate, QuotientError> {
    certify(&CertificateData::new(rep), rep, m, scheme, choice)
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub m: u64,
    pub k: Option<u64>,
    /// Description of the parameter, e.g. `q^2=exp(5pi i/7)`.
    pub parameter: String,
    pub modulus: Option<String>,
    pub verdict: Verdict,
}

/// Certificates for every `m` of the scheme's parity in `powers`.
pub fn sweep(rep: &JonesRep, scheme: Scheme, powers: RangeInclusive<u64>) -> Result<Vec<(SweepRow, Certificate)>, QuotientError> {
    let data = CertificateData::new(rep);
    let ms: Vec<u64> = powers.filter(|&m| m > 0 && Scheme::of(m) == scheme).collect();
    ms.par_iter()
        .map(|&m| {
            let cert = certify(&data, rep, m, scheme, ParameterChoice::Default)?;
            let parameter = describe_parameter(scheme, m, cert.k);
            let row = SweepRow { m, k: cert.k, parameter, modulus: cert.modulus_display.clone(), verdict: cert.verdict };
            Ok((row, cert))
        })
        .collect()
}

/// Human-readable form of the default parameter.
pub fn describe_parameter(scheme: Scheme, m: u64, k: Option<u64>) -> String {
    match (scheme, k) {
        (Scheme::Even, None) => "q=exp(pi i/3)".to_string(),
        (Scheme::Even, Some(k)) => format!("q=exp(4pi i*{k}/{m})"),
        (Scheme::Odd, Some(k)) => format!("q^2=exp({}pi i/{m})", super::specialization::odd_exponent(k)),
        (Scheme::Odd, None) => "explicit".to_string(),
    }
}
