//! Roots of complex polynomials by simultaneous (Aberth–Ehrlich) iteration,
//! and eigenvalues of small matrices through their characteristic
//! polynomial.

use num_complex::Complex64;

use super::QuotientError;
use crate::laurent::LaurentMatrix;
use crate::numeric::CMatrix;

const MAX_ITERATIONS: usize = 2000;

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    // value and derivative; coefficients lowest degree first
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// `sum |a_i| |z|^i`, the scale for the backward-error stopping test.
fn magnitude(coeffs: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
}

/// All roots of `sum_i coeffs[i] z^i` (lowest degree first, nonzero
/// leading coefficient). A root is accepted once its backward error falls
/// below a small multiple of machine precision.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>, QuotientError> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.norm() == 0.0) {
        coeffs.pop();
    }
    let deg = coeffs.len() - 1;
    if deg == 0 {
        return Ok(Vec::new());
    }
    let lead = coeffs[deg];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    // Cauchy bound for the initial circle.
    let bound = 1.0 + monic[..deg].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let radius = bound.clamp(1e-3, 1e6) / 2.0;
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / deg as f64 + 0.4))
        .collect();
    let mut done = vec![false; deg];
    let tol = 64.0 * f64::EPSILON;
    for _ in 0..MAX_ITERATIONS {
        for i in 0..deg {
            if done[i] {
                continue;
            }
            let (p, dp) = horner(&monic, z[i]);
            if p.norm() <= tol * magnitude(&monic, z[i]) {
                done[i] = true;
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..deg).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
            } else {
                z[i] += Complex64::new(1e-8, 1e-8);
            }
        }
        if done.iter().all(|&d| d) {
            return Ok(z);
        }
    }
    Err(QuotientError::EigenNoConvergence)
}

/// Eigenvalues of the exact matrix `m` at `x = z`: Berkowitz characteristic
/// polynomial over the Laurent ring, evaluated, then rooted.
pub fn eigenvalues_at(m: &LaurentMatrix, z: Complex64) -> Result<Vec<Complex64>, QuotientError> {
    let coeffs = m
        .charpoly()
        .iter()
        .map(|c| c.eval(z))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| QuotientError::EvalAtZero)?;
    polynomial_roots(&coeffs)
}

/// Inclusion radii for computed roots of `sum coeffs[i] z^i`. Every disc
/// `D(z_i, r_i)` is a Weierstrass inclusion disc: a connected component of
/// `k` discs contains exactly `k` roots of every polynomial whose
/// coefficients differ from `coeffs` by at most `coeff_error[i]`.
pub fn inclusion_radii(coeffs: &[Complex64], coeff_error: &[f64], roots: &[Complex64]) -> Vec<f64> {
    let n = roots.len();
    let lead = coeffs[n].norm() - coeff_error[n];
    roots
        .iter()
        .enumerate()
        .map(|(i, &z)| {
            let (p, _) = horner(coeffs, z);
            let r = z.norm();
            let perturbation = coeff_error.iter().rev().fold(0.0, |acc, e| acc * r + e);
            let bound = p.norm() + 64.0 * f64::EPSILON * magnitude(coeffs, z) + perturbation;
            let spread: f64 = (0..n).filter(|&j| j != i).map(|j| (z - roots[j]).norm()).product();
            if lead <= 0.0 || spread == 0.0 {
                f64::INFINITY
            } else {
                n as f64 * bound / (lead * spread)
            }
        })
        .collect()
}

/// A lower bound for the largest root modulus: some component of the
/// inclusion discs lies outside the returned radius.
pub fn certified_radius_lower_bound(roots: &[Complex64], radii: &[f64]) -> f64 {
    let n = roots.len();
    let mut component: Vec<usize> = (0..n).collect();
    fn find(c: &mut [usize], i: usize) -> usize {
        if c[i] != i {
            let root = find(c, c[i]);
            c[i] = root;
        }
        c[i]
    }
    for i in 0..n {
        for j in i + 1..n {
            if (roots[i] - roots[j]).norm() <= radii[i] + radii[j] {
                let (a, b) = (find(&mut component, i), find(&mut component, j));
                component[a] = b;
            }
        }
    }
    let mut inner = vec![f64::INFINITY; n];
    for i in 0..n {
        let c = find(&mut component, i);
        inner[c] = inner[c].min(roots[i].norm() - radii[i]);
    }
    (0..n).filter(|&i| find(&mut component, i) == i).map(|i| inner[i]).fold(f64::NEG_INFINITY, f64::max)
}

/// Characteristic polynomial `det(x I - M)` of a complex matrix, lowest
/// degree first (Faddeev–LeVerrier).
pub fn complex_charpoly(m: &CMatrix) -> Vec<Complex64> {
    let n = m.rows();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    let mut mk = CMatrix::zeros(n, n);
    for k in 1..=n {
        let mut prev = mk.clone();
        for i in 0..n {
            prev[(i, i)] += coeffs[n + 1 - k];
        }
        mk = m * &prev;
        coeffs[n - k] = -mk.trace() / k as f64;
    }
    coeffs
}

/// Eigenvalues of a complex matrix through its characteristic polynomial.
pub fn eigenvalues(m: &CMatrix) -> Result<Vec<Complex64>, QuotientError> {
    polynomial_roots(&complex_charpoly(m))
}

/// Largest eigenvalue modulus.
pub fn spectral_radius(eigenvalues: &[Complex64]) -> f64 {
    eigenvalues.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `max |det(M - lambda I)|` over the given eigenvalues.
pub fn max_residual(m: &CMatrix, eigenvalues: &[Complex64]) -> f64 {
    let n = m.rows();
    eigenvalues
        .iter()
        .map(|&l| (m - &CMatrix::identity(n).scale(l)).det().norm())
        .fold(0.0, f64::max)
}

/// Eigenvalues of a complex `2 x 2` matrix.
pub fn eigenvalues_2x2(m: &CMatrix) -> [Complex64; 2] {
    let tr = m.trace();
    let det = m.det();
    let disc = (tr * tr - det * 4.0).sqrt();
    [(tr + disc) / 2.0, (tr - disc) / 2.0]
}
