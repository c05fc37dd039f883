//! Free-subgroup witnesses in the image of `J'(H_1^2)`, `J'(H_2^2)`.
//!
//! Restricted to `H_1, H_2` the Jones representation contains the
//! two-dimensional representation of shape `[2,1]`, so the search runs on
//! the projective line: find two loxodromic words `U`, `V` with four
//! distinct fixed points and a power `N` such that discs around the fixed
//! points satisfy the ping-pong conditions for `U^N` and `V^N`. Freeness is
//! only reported when such discs are found and checked.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::specialization::{specialize, ParameterChoice};
use super::{serialize_complex, QuotientError, Scheme};
use crate::jones::JonesRep;
use crate::kl::KlTable;
use crate::numeric::CMatrix;
use crate::quotient::burau::b3_bridge;

/// Longest word tried when looking for loxodromic elements.
pub const MAX_WORD_LENGTH: usize = 6;
/// Largest power `N` tried for a pair of words.
pub const MAX_POWER: u32 = 40;
/// `|lambda| > 1 + LOXODROMIC_MARGIN` for the larger eigenvalue.
pub const LOXODROMIC_MARGIN: f64 = 1e-3;
/// Relative slack required in every disc containment.
pub const CONTAINMENT_MARGIN: f64 = 1e-6;

const LETTERS: [char; 4] = ['a', 'A', 'b', 'B'];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Disc {
    #[serde(serialize_with = "serialize_complex")]
    pub center: Complex64,
    pub radius: f64,
}

impl Disc {
    fn contains_point(&self, z: Complex64) -> bool {
        (z - self.center).norm() < self.radius
    }

    fn contains_disc(&self, other: &Disc) -> bool {
        (other.center - self.center).norm() + other.radius < self.radius * (1.0 - CONTAINMENT_MARGIN)
    }

    fn boundary_point(&self, k: usize) -> Complex64 {
        self.center + Complex64::from_polar(self.radius, 2.0 * PI * k as f64 / 3.0 + 0.1)
    }
}

/// A checked ping-pong configuration: `U^N` maps the outside of
/// `repelling[0]` into `attracting[0]`, `U^{-N}` maps the outside of
/// `attracting[0]` into `repelling[0]`, and likewise for `V` with index 1.
/// All four discs are pairwise disjoint.
#[derive(Debug, Clone, Serialize)]
pub struct PingPong {
    /// Words in `a = J'(H_1^2)`, `b = J'(H_2^2)`; capitals are inverses.
    pub words: [String; 2],
    pub power: u32,
    pub attracting: [Disc; 2],
    pub repelling: [Disc; 2],
    /// Translation `z0` when the chart `z -> 1/(z - z0)` was used.
    pub chart_shift: Option<[f64; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessVerdict {
    FreeSubgroup,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub m: Option<u64>,
    pub scheme: Option<Scheme>,
    #[serde(serialize_with = "serialize_complex")]
    pub q: Complex64,
    #[serde(serialize_with = "serialize_complex")]
    pub scalar: Complex64,
    /// `|[J'(H_1^2), J'(H_2^2)] - Id|` on the two-dimensional piece.
    pub commutator_distance: f64,
    /// `max_i |J'(H_i)^m - Id|` on the two-dimensional piece.
    pub power_residual: Option<f64>,
    /// Largest residual of the full specialization, when one exists.
    pub specialization_residual: Option<f64>,
    pub pingpong: Option<PingPong>,
    pub verdict: WitnessVerdict,
    pub reason: Option<String>,
}

/// `q` for the free-subgroup argument: even `m` takes `q^{2/d} = exp(2 pi i/m)`,
/// odd `m` takes `-q^2 = exp(2 pi i/m)`.
pub fn witness_parameter(scheme: Scheme, m: u64, d: usize) -> Complex64 {
    let mf = m as f64;
    match scheme {
        Scheme::Even => Complex64::from_polar(1.0, PI * d as f64 / mf),
        Scheme::Odd => Complex64::from_polar(1.0, PI * (mf + 2.0) / (2.0 * mf)),
    }
}

/// The two-dimensional `[2,1]` images of `H_1`, `H_2` at `q`, times `c`.
pub fn two_dimensional_images(q: Complex64, c: Complex64) -> Result<[CMatrix; 2], QuotientError> {
    let cells = b3_bridge(&KlTable::new()).cell_matrices;
    let ev = |i: usize| cells[i].eval(q).map(|m| m.scale(c)).map_err(|_| QuotientError::EvalAtZero);
    Ok([ev(0)?, ev(1)?])
}

fn commutator(x: &CMatrix, y: &CMatrix) -> Option<CMatrix> {
    Some(&(&(x * y) * &x.inverse()?) * &y.inverse()?)
}

/// Witness search for `J'(H_1^2)`, `J'(H_2^2)` at a given `q` and scalar.
pub fn witness_at(q: Complex64, c: Complex64) -> Result<Witness, QuotientError> {
    let [h1, h2] = two_dimensional_images(q, c)?;
    let (x, y) = (&h1 * &h1, &h2 * &h2);
    let commutator_distance = commutator(&x, &y).map_or(f64::INFINITY, |k| k.distance(&CMatrix::identity(2)));
    let pingpong = search(&x, &y);
    let verdict = if pingpong.is_some() { WitnessVerdict::FreeSubgroup } else { WitnessVerdict::Inconclusive };
    let reason = pingpong
        .is_none()
        .then(|| format!("no ping-pong configuration among words of length <= {MAX_WORD_LENGTH} and powers <= {MAX_POWER}"));
    Ok(Witness {
        m: None,
        scheme: None,
        q,
        scalar: c,
        commutator_distance,
        power_residual: None,
        specialization_residual: None,
        pingpong,
        verdict,
        reason,
    })
}

/// Witness at the root-of-unity specialization for `m`. Excluded powers are
/// rejected.
pub fn free_subgroup_witness(rep: &JonesRep, m: u64, scheme: Scheme) -> Result<Witness, QuotientError> {
    scheme.check(m)?;
    let excluded = scheme.excluded_powers();
    if excluded.contains(&m) {
        return Err(QuotientError::ExcludedPower { m, scheme, excluded: excluded.to_vec() });
    }
    let q = witness_parameter(scheme, m, rep.d);
    let spec = specialize(rep, m, scheme, ParameterChoice::Q(q));
    let c = spec.as_ref().map_or(Complex64::new(1.0, 0.0), |s| s.scalar);
    let mut w = witness_at(q, c)?;
    w.m = Some(m);
    w.scheme = Some(scheme);
    match spec {
        Ok(s) => {
            let [h1, h2] = two_dimensional_images(q, c)?;
            let id = CMatrix::identity(2);
            w.power_residual = Some(h1.pow(m).distance(&id).max(h2.pow(m).distance(&id)));
            w.specialization_residual = Some(s.residuals.max());
        }
        Err(e) => {
            w.verdict = WitnessVerdict::Inconclusive;
            let prefix = w.reason.take().map_or(String::new(), |r| format!("{r}; "));
            w.reason = Some(format!("{prefix}{e}"));
        }
    }
    Ok(w)
}

fn unit_determinant(m: &CMatrix) -> CMatrix {
    m.scale(m.det().sqrt().inv())
}

/// Reduced words up to `MAX_WORD_LENGTH` in length-then-lexicographic order.
fn words() -> Vec<Vec<usize>> {
    let inverse = |l: usize| l ^ 1;
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..MAX_WORD_LENGTH {
        let mut next = Vec::new();
        for w in &layer {
            for l in 0..4 {
                if w.last().is_some_and(|&p| p == inverse(l)) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

struct Loxodromic {
    word: String,
    matrix: CMatrix,
    /// Homogeneous attracting and repelling fixed points.
    attracting: [Complex64; 2],
    repelling: [Complex64; 2],
}

/// Eigenvector of a `2 x 2` matrix for `lambda`, as a homogeneous point.
fn eigenvector(m: &CMatrix, lambda: Complex64) -> [Complex64; 2] {
    let (a, b, c, d) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
    let v1 = [b, lambda - a];
    let v2 = [lambda - d, c];
    let n1 = v1[0].norm() + v1[1].norm();
    let n2 = v2[0].norm() + v2[1].norm();
    if n1 >= n2 {
        v1
    } else {
        v2
    }
}

fn loxodromic(word: String, m: CMatrix) -> Option<Loxodromic> {
    let tr = m.trace();
    let disc = (tr * tr - 4.0).sqrt();
    let (l1, l2) = ((tr + disc) / 2.0, (tr - disc) / 2.0);
    let (big, small) = if l1.norm() >= l2.norm() { (l1, l2) } else { (l2, l1) };
    if big.norm() <= 1.0 + LOXODROMIC_MARGIN {
        return None;
    }
    let attracting = eigenvector(&m, big);
    let repelling = eigenvector(&m, small);
    Some(Loxodromic { word, matrix: m, attracting, repelling })
}

fn mobius(m: &CMatrix, z: Complex64) -> Option<Complex64> {
    let den = m[(1, 0)] * z + m[(1, 1)];
    (den.norm() > 0.0).then(|| (m[(0, 0)] * z + m[(0, 1)]) / den)
}

fn circle_through(a: Complex64, b: Complex64, c: Complex64) -> Option<Disc> {
    let (bx, by) = ((b - a).re, (b - a).im);
    let (cx, cy) = ((c - a).re, (c - a).im);
    let d = 2.0 * (bx * cy - by * cx);
    if d.abs() < 1e-300 {
        return None;
    }
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let u = Complex64::new((cy * b2 - by * c2) / d, (bx * c2 - cx * b2) / d);
    Some(Disc { center: a + u, radius: u.norm() })
}

/// `g` maps the outside of `from` into `into`: the pole of `g` lies in
/// `from` and the image of its boundary circle bounds a disc inside `into`.
fn maps_outside_into(g: &CMatrix, from: &Disc, into: &Disc) -> bool {
    let c = g[(1, 0)];
    if c.norm() == 0.0 {
        return false;
    }
    let pole = -g[(1, 1)] / c;
    if !from.contains_point(pole) {
        return false;
    }
    let pts: Option<Vec<Complex64>> = (0..3).map(|k| mobius(g, from.boundary_point(k))).collect();
    match pts.and_then(|p| circle_through(p[0], p[1], p[2])) {
        Some(image) => image.radius.is_finite() && into.contains_disc(&image),
        None => false,
    }
}

fn chart(z0: Complex64) -> (CMatrix, CMatrix) {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let phi = CMatrix::from_rows(&[vec![zero, one], vec![one, -z0]]);
    let inv = CMatrix::from_rows(&[vec![z0, one], vec![one, zero]]);
    (phi, inv)
}

fn affine(v: [Complex64; 2]) -> Option<Complex64> {
    (v[1].norm() > 1e-12 * v[0].norm()).then(|| v[0] / v[1])
}

fn try_pair(u: &Loxodromic, v: &Loxodromic) -> Option<PingPong> {
    let homogeneous = [u.attracting, u.repelling, v.attracting, v.repelling];
    let shifts = [None, Some(Complex64::new(0.37, 0.61)), Some(Complex64::new(-1.3, 0.2)), Some(Complex64::new(0.1, -2.4))];
    for shift in shifts {
        let (phi, inv) = match shift {
            Some(z0) => chart(z0),
            None => (CMatrix::identity(2), CMatrix::identity(2)),
        };
        let pts: Option<Vec<Complex64>> = homogeneous.iter().map(|h| affine(phi.mul_vec(h).try_into().ok()?)).collect();
        let Some(pts) = pts else { continue };
        if pts.iter().any(|z| z.norm() > 1e3) {
            continue;
        }
        let delta = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .map(|(i, j)| (pts[i] - pts[j]).norm())
            .fold(f64::INFINITY, f64::min);
        if delta < 1e-6 {
            return None;
        }
        let gu = &(&phi * &u.matrix) * &inv;
        let gv = &(&phi * &v.matrix) * &inv;
        for divisor in [3.0, 4.0, 8.0] {
            let rho = delta / divisor;
            let disc = |z: Complex64| Disc { center: z, radius: rho };
            let (au, ru, av, rv) = (disc(pts[0]), disc(pts[1]), disc(pts[2]), disc(pts[3]));
            for n in 1..=MAX_POWER {
                let un = unit_determinant(&gu.pow(n as u64));
                let vn = unit_determinant(&gv.pow(n as u64));
                let (Some(un_inv), Some(vn_inv)) = (un.inverse(), vn.inverse()) else { break };
                if maps_outside_into(&un, &ru, &au)
                    && maps_outside_into(&un_inv, &au, &ru)
                    && maps_outside_into(&vn, &rv, &av)
                    && maps_outside_into(&vn_inv, &av, &rv)
                {
                    return Some(PingPong {
                        words: [u.word.clone(), v.word.clone()],
                        power: n,
                        attracting: [au, av],
                        repelling: [ru, rv],
                        chart_shift: shift.map(|z| [z.re, z.im]),
                    });
                }
            }
        }
        return None;
    }
    None
}

/// Ping-pong search in the group generated by `x`, `y`.
pub fn search(x: &CMatrix, y: &CMatrix) -> Option<PingPong> {
    let x = unit_determinant(x);
    let y = unit_determinant(y);
    let gens = [x.clone(), x.inverse()?, y.clone(), y.inverse()?];
    let lox: Vec<Loxodromic> = words()
        .into_iter()
        .filter_map(|w| {
            let m = w.iter().fold(CMatrix::identity(2), |acc, &l| &acc * &gens[l]);
            loxodromic(w.iter().map(|&l| LETTERS[l]).collect(), m)
        })
        .take(64)
        .collect();
    for (i, u) in lox.iter().enumerate() {
        for v in &lox[i + 1..] {
            if let Some(p) = try_pair(u, v) {
                return Some(p);
            }
        }
    }
    None
}
