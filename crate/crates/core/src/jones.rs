//! The Jones representation of the mapping class group of the sphere with
//! `2g + 2` marked points, built from the cell of `s_1 s_3 ... s_{2g+1}`.
//!
//! The unrescaled braid representation `pi` lives over `Z[q^{±1}]`. The
//! rescaled matrices `J(H_i) = q^{(2r-d)/d} pi(sigma_i)` live over
//! `Z[t^{±1}]` with `q = t^d`, so the prefactor is the monomial `t^{2r-d}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::coxeter::{all_permutations, Permutation, Word};
use crate::kl::KlTable;
use crate::laurent::{embed_q_in_t, LaurentMatrix, LaurentPoly, Variable};
use crate::tableaux::{canonical_key, cell_of, q_symbol, Cell, YoungDiagram};
use crate::wgraph::{build_wgraph, RelationCheck, RelationReport, WGraph};

/// Largest genus handled; the KL computations in `S_{2g+2}` dominate.
pub const MAX_GENUS: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JonesError {
    #[error("genus {0} is outside the supported range 2..={MAX_GENUS}")]
    GenusOutOfRange(usize),
    #[error(
        "shape {0} is not rectangular: restricted to B_{{n-1}} the representation splits into \
         pieces with different ratios (d_i - 2r_i)/d_i, so no common rescaling kills the chain relation"
    )]
    NonRectangular(YoungDiagram),
    #[error("no permutation of S_{n} has Q-symbol of shape {shape}")]
    NoCellOfShape { shape: YoungDiagram, n: usize },
    #[error("(q - f)^2 is not divisible by (q + q^-1) * (q - f): the input is not a generator image")]
    NotIdempotent,
    #[error("trace of the idempotent is not an integer constant")]
    NonIntegralRank,
    #[error("the full twist does not act by a scalar")]
    NonScalarCentralElement,
    #[error("the central scalar {found} differs from the expected {expected}")]
    WrongCentralScalar { found: String, expected: String },
    #[error("(d - 2r) n (n - 1) = {0} is not divisible by d")]
    FractionalExponent(i64),
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `d = C(2g+2, g+1)/(g+2)` and `r = C(2g, g)/(g+1)`.
pub fn dimension_and_rank(g: usize) -> (usize, usize) {
    let g = g as u64;
    let d = binomial(2 * g + 2, g + 1) / (g + 2);
    let r = binomial(2 * g, g) / (g + 1);
    (d as usize, r as usize)
}

/// `(2g+1)(2g+2) r / d` when it is an integer.
pub fn parity_identity(g: usize) -> Option<usize> {
    let (d, r) = dimension_and_rank(g);
    let num = (2 * g + 1) * (2 * g + 2) * r;
    num.is_multiple_of(d).then_some(num / d)
}

fn word(n: usize, letters: &[usize]) -> Permutation {
    Word(letters.to_vec()).evaluate(n).expect("letters in range")
}

/// The five words spanning the cell of `s_1 s_3 s_5` in `S_6`, in basis order.
pub const BASE_WORDS: [&[usize]; 5] = [&[1, 3, 5], &[1, 4, 3, 5], &[2, 1, 3, 5], &[2, 1, 4, 3, 5], &[3, 2, 1, 4, 3, 5]];

/// The cell of `s_1 s_3 ... s_{2g+1}` with the five elements
/// `u_i s_7 s_9 ... s_{2g+1}` first (in the genus-2 order) and the remaining
/// members by length, then canonical reduced word.
pub fn jones_cell(g: usize) -> Cell {
    let n = 2 * g + 2;
    let tail: Vec<usize> = (7..=2 * g + 1).step_by(2).collect();
    let generator: Vec<usize> = (0..=g).map(|k| 2 * k + 1).collect();
    let mut cell = cell_of(&word(n, &generator));
    let front: Vec<Permutation> =
        BASE_WORDS.iter().map(|u| word(n, &[u.to_vec(), tail.clone()].concat())).collect();
    cell.reorder_front(&front);
    cell
}

/// `e = (q - f) / (q + q^{-1})`, kept as numerator and denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Idempotent {
    pub numerator: LaurentMatrix,
    pub denominator: LaurentPoly,
}

fn q_plus_q_inv() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 1), (-1, 1)])
}

/// Builds `e` from a generator image `f` and checks `e^2 = e` exactly, i.e.
/// `N^2 = (q + q^{-1}) N` for `N = q - f`.
pub fn idempotent(f: &LaurentMatrix) -> Result<Idempotent, JonesError> {
    let d = f.rows();
    let numerator = &LaurentMatrix::scalar(d, LaurentPoly::var()) - f;
    let denominator = q_plus_q_inv();
    let sq = &numerator * &numerator;
    match sq.div_exact(&denominator) {
        Some(x) if x == numerator => Ok(Idempotent { numerator, denominator }),
        _ => Err(JonesError::NotIdempotent),
    }
}

impl Idempotent {
    /// `tr(e)`, which equals the rank of an idempotent.
    pub fn rank(&self) -> Result<usize, JonesError> {
        let tr = self.numerator.trace().div_exact(&self.denominator).ok_or(JonesError::NonIntegralRank)?;
        if tr.is_zero() {
            return Ok(0);
        }
        match tr.as_monomial() {
            Some((0, c)) if !c.is_negative() => c.to_usize().ok_or(JonesError::NonIntegralRank),
            _ => Err(JonesError::NonIntegralRank),
        }
    }

    /// Rank of `e` at the integer point `q = at`, by exact Gaussian
    /// elimination over the rationals.
    pub fn rank_at(&self, at: i64) -> usize {
        exact_rank_at(&self.numerator, at)
    }
}

fn eval_rational(p: &LaurentPoly, at: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for (e, c) in p.terms() {
        let pw = if *e >= 0 { at.pow(*e as i32) } else { at.recip().pow((-*e) as i32) };
        acc += pw * BigRational::from_integer(c.clone());
    }
    acc
}

/// Rank over `Q` of `m` evaluated at `x = at`.
pub fn exact_rank_at(m: &LaurentMatrix, at: i64) -> usize {
    let x = BigRational::from_integer(BigInt::from(at));
    let mut a: Vec<Vec<BigRational>> = m.row_vecs().iter().map(|r| r.iter().map(|p| eval_rational(p, &x)).collect()).collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let f = &a[r][c] / &pivot;
                for k in c..cols {
                    let v = &a[rank][k] * &f;
                    a[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `det pi(sigma_i) = (-1)^r q^{d - 2r}`.
pub fn determinant_check(f: &LaurentMatrix, r: usize) -> bool {
    let d = f.rows() as i64;
    let sign = if r.is_multiple_of(2) { 1 } else { -1 };
    f.det() == LaurentPoly::monomial(d - 2 * r as i64, sign)
}

/// Product `M_1 M_2 ... M_k`.
fn product(ms: &[&LaurentMatrix], dim: usize) -> LaurentMatrix {
    ms.iter().fold(LaurentMatrix::identity(dim), |acc, m| &acc * *m)
}

/// `(M_1 ... M_{n-1})^n`.
pub fn full_twist(mats: &[LaurentMatrix]) -> LaurentMatrix {
    let dim = mats[0].rows();
    let refs: Vec<&LaurentMatrix> = mats.iter().collect();
    product(&refs, dim).pow(mats.len() as u32 + 1)
}

/// `M_1 M_2 ... M_{n-1}^2 ... M_2 M_1`.
pub fn chain(mats: &[LaurentMatrix]) -> LaurentMatrix {
    let dim = mats[0].rows();
    let mut refs: Vec<&LaurentMatrix> = mats.iter().collect();
    refs.extend(mats.iter().rev());
    product(&refs, dim)
}

/// The image of the full twist under the unrescaled representation, checked
/// to be `q^{n(n-1)(d-2r)/d} Id`. Returns the scalar (in `q`).
pub fn central_element_check(unrescaled: &[LaurentMatrix], r: usize) -> Result<LaurentPoly, JonesError> {
    let n = unrescaled.len() as i64 + 1;
    let d = unrescaled[0].rows() as i64;
    let scalar = full_twist(unrescaled).as_scalar().ok_or(JonesError::NonScalarCentralElement)?;
    let num = n * (n - 1) * (d - 2 * r as i64);
    if num % d != 0 {
        return Err(JonesError::FractionalExponent(num));
    }
    let expected = LaurentPoly::monomial(num / d, 1);
    if scalar != expected {
        return Err(JonesError::WrongCentralScalar {
            found: scalar.to_string(),
            expected: expected.to_string(),
        });
    }
    Ok(scalar)
}

fn identity_check(name: &str, m: &LaurentMatrix, var: &str) -> RelationCheck {
    let scalar = m.as_scalar();
    let passed = scalar.as_ref().is_some_and(LaurentPoly::is_one);
    let note = match &scalar {
        Some(s) if !passed => Some(format!("acts as the scalar {}", s.display_in(var))),
        None => Some("not a scalar matrix".to_string()),
        _ => None,
    };
    RelationCheck { relation: name.to_string(), passed, scalar: if passed { None } else { scalar }, note }
}

/// Exact check of the sphere relations: braid, far commutation, full twist
/// `(H_1 ... H_{n-1})^n = 1` and chain `H_1 ... H_{n-1}^2 ... H_1 = 1`.
pub fn verify_sphere_relations(mats: &[LaurentMatrix], var: Variable) -> RelationReport {
    let mut report = RelationReport::default();
    let k = mats.len();
    for i in 0..k.saturating_sub(1) {
        let (a, b) = (&mats[i], &mats[i + 1]);
        report.push(format!("braid({},{})", i + 1, i + 2), &(a * b) * a == &(b * a) * b);
    }
    for i in 0..k {
        for j in i + 2..k {
            let (a, b) = (&mats[i], &mats[j]);
            report.push(format!("commute({},{})", i + 1, j + 1), a * b == b * a);
        }
    }
    report.push_check(identity_check("full_twist", &full_twist(mats), var.name()));
    report.push_check(identity_check("chain", &chain(mats), var.name()));
    report
}

/// Unrescaled cell representation data for one shape.
#[derive(Debug, Clone)]
pub struct CellRep {
    pub cell: Cell,
    pub graph: WGraph,
    /// `pi(sigma_i)` over `Z[q^{±1}]`, `i = 1..n-1`.
    pub matrices: Vec<LaurentMatrix>,
    pub d: usize,
    pub r: usize,
}

impl CellRep {
    pub fn from_cell(cell: Cell, table: &KlTable) -> Result<Self, JonesError> {
        let graph = build_wgraph(&cell, table);
        let matrices = graph.generator_matrices();
        let d = cell.len();
        let r = idempotent(&matrices[0])?.rank()?;
        Ok(Self { cell, graph, matrices, d, r })
    }

    /// `t^{2r-d} pi(sigma_i)` in `Z[t^{±1}]`, `q = t^d`, with no shape check.
    pub fn rescaled(&self) -> Vec<LaurentMatrix> {
        let e = 2 * self.r as i64 - self.d as i64;
        self.matrices.iter().map(|m| m.map(|p| embed_q_in_t(p, self.d as u32)).shift(e)).collect()
    }
}

/// Some cell of `S_n` whose Q-symbol has the given shape, in canonical order.
pub fn cell_of_shape(shape: &YoungDiagram) -> Result<Cell, JonesError> {
    let n = shape.size();
    let w = all_permutations(n)
        .into_iter()
        .filter(|w| &q_symbol(w).shape() == shape)
        .min_by_key(canonical_key)
        .ok_or_else(|| JonesError::NoCellOfShape { shape: shape.clone(), n })?;
    Ok(cell_of(&w))
}

/// The Jones representation for genus `g`.
#[derive(Debug, Clone, Serialize)]
pub struct JonesRep {
    pub g: usize,
    pub n: usize,
    pub d: usize,
    pub r: usize,
    pub shape: YoungDiagram,
    pub basis: Vec<Permutation>,
    pub variable: Variable,
    /// `pi(sigma_i)` over `Z[q^{±1}]`.
    #[serde(skip)]
    pub unrescaled: Vec<LaurentMatrix>,
    /// `J(H_i) = t^{2r-d} pi(sigma_i)` over `Z[t^{±1}]`.
    pub matrices: Vec<LaurentMatrix>,
}

impl JonesRep {
    /// Exponent of the prefactor `t^{2r-d}`.
    pub fn prefactor_exponent(&self) -> i64 {
        2 * self.r as i64 - self.d as i64
    }

    pub fn verify(&self) -> RelationReport {
        verify_sphere_relations(&self.matrices, self.variable)
    }
}

/// The rescaled representation of a rectangular shape; other shapes are
/// rejected.
pub fn jones_rep_for_shape(shape: &YoungDiagram, table: &KlTable) -> Result<CellRep, JonesError> {
    if !shape.is_rectangular() {
        return Err(JonesError::NonRectangular(shape.clone()));
    }
    CellRep::from_cell(cell_of_shape(shape)?, table)
}

pub fn jones_rep(g: usize, table: &KlTable) -> Result<JonesRep, JonesError> {
    if !(2..=MAX_GENUS).contains(&g) {
        return Err(JonesError::GenusOutOfRange(g));
    }
    let cell = jones_cell(g);
    let shape = cell.shape.clone();
    let rep = CellRep::from_cell(cell, table)?;
    debug_assert_eq!((rep.d, rep.r), dimension_and_rank(g));
    Ok(JonesRep {
        g,
        n: 2 * g + 2,
        d: rep.d,
        r: rep.r,
        shape,
        basis: rep.cell.members.clone(),
        variable: Variable::T { d: rep.d as u32 },
        matrices: rep.rescaled(),
        unrescaled: rep.matrices,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockStatus {
    Match,
    Mismatch,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockCheck {
    pub generator: usize,
    pub status: BlockStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub g: usize,
    pub checks: Vec<BlockCheck>,
}

impl BlockReport {
    pub fn all_match(&self) -> bool {
        self.checks.iter().all(|c| c.status != BlockStatus::Mismatch)
    }
}

/// For `i = 1..5`, the top-left `5 x 5` block of `pi_{g}(sigma_i)` equals the
/// genus-2 matrix and the block below it vanishes.
pub fn block_embedding_check(g: usize, table: &KlTable) -> Result<BlockReport, JonesError> {
    let big = jones_rep(g, table)?;
    let small = jones_rep(2, table)?;
    let d = big.d;
    let checks = (1..big.n)
        .map(|i| {
            let status = if i > 5 {
                BlockStatus::NotApplicable
            } else {
                let m = &big.unrescaled[i - 1];
                let ok = m.block(0, 5, 0, 5) == small.unrescaled[i - 1] && m.block(5, d, 0, 5).is_zero();
                if ok {
                    BlockStatus::Match
                } else {
                    BlockStatus::Mismatch
                }
            };
            BlockCheck { generator: i, status }
        })
        .collect();
    Ok(BlockReport { g, checks })
}

/// The rescaled quadratic relation
/// `(M - t^{2r-d} t^d)(M + t^{2r-d} t^{-d}) = 0` for each generator image.
pub fn rescaled_quadratic_holds(rep: &JonesRep) -> bool {
    let e = rep.prefactor_exponent();
    let d = rep.d as i64;
    rep.matrices.iter().all(|m| {
        let a = m - &LaurentMatrix::scalar(rep.d, LaurentPoly::monomial(e + d, 1));
        let b = m + &LaurentMatrix::scalar(rep.d, LaurentPoly::monomial(e - d, 1));
        (&a * &b).is_zero()
    })
}

/// `tr J(H_i) = t^{2r-d} ((d - r) t^d - r t^{-d})`, i.e. eigenvalue
/// multiplicities `(d - r, r)`.
pub fn eigenvalue_multiplicities_hold(rep: &JonesRep) -> bool {
    let e = rep.prefactor_exponent();
    let (d, r) = (rep.d as i64, rep.r as i64);
    let want = LaurentPoly::from_terms([(e + d, d - r), (e - d, -r)]);
    rep.matrices.iter().all(|m| m.trace() == want)
}
