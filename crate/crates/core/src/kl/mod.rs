//! Kazhdan–Lusztig polynomials of `S_n` and the edge weights `mu(y, w)`.
//!
//! Polynomials are stored in the classical variable (the one that appears as
//! `q^2` inside the C-basis expansion of the Hecke algebra in [`hecke`]).

pub mod hecke;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::coxeter::Permutation;
use crate::laurent::LaurentPoly;

pub use hecke::{c_basis, c_basis_by_products, CBasisElement, HeckeAlgebra, HeckeElement};

/// `P_{y,w}` together with the pair it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KlPoly {
    pub y: Permutation,
    pub w: Permutation,
    pub poly: LaurentPoly,
}

/// All `P_{x,w}` for fixed `w`, keyed by `x <= w`.
type Column = HashMap<Permutation, LaurentPoly>;

/// Memoised KL polynomials. Columns `x -> P_{x,w}` are computed on demand
/// and shared; concurrent callers may race to fill the same column, which
/// is harmless since the result is deterministic.
#[derive(Default)]
pub struct KlTable {
    columns: RwLock<HashMap<Permutation, Arc<Column>>>,
}

impl KlTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoised columns.
    pub fn cached_columns(&self) -> usize {
        self.columns.read().expect("memo lock").len()
    }

    /// The column `x -> P_{x,w}` over the lower interval `[e, w]`.
    pub fn column(&self, w: &Permutation) -> Arc<Column> {
        if let Some(c) = self.columns.read().expect("memo lock").get(w) {
            return Arc::clone(c);
        }
        let col = Arc::new(self.compute_column(w));
        self.columns
            .write()
            .expect("memo lock")
            .entry(w.clone())
            .or_insert(col)
            .clone()
    }

    /// Classical recursion. With `s` the smallest left descent of `w` and
    /// `v = s w`, and `c = 1` if `s x < x` else `0`:
    ///
    /// `P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v}
    ///            - sum_{z < v, sz < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}`.
    fn compute_column(&self, w: &Permutation) -> Column {
        let Some(&s) = w.left_descents().first() else {
            return HashMap::from([(w.clone(), LaurentPoly::one())]);
        };
        let v = w.left_mul_simple(s);
        let col_v = self.column(&v);
        let lw = w.length() as i64;
        let lv = lw - 1;

        let mut corrections: Vec<(i64, BigInt, Arc<Column>)> = Vec::new();
        let mut zs: Vec<(&Permutation, &LaurentPoly)> = col_v.iter().collect();
        zs.sort_by(|a, b| a.0.cmp(b.0));
        for (z, pz) in zs {
            if z == &v || !z.has_left_descent(s) {
                continue;
            }
            let lz = z.length() as i64;
            if (lv - lz) % 2 == 0 {
                continue;
            }
            let m = pz.coeff((lv - lz - 1) / 2);
            if !m.is_zero() {
                corrections.push(((lw - lz) / 2, m, self.column(z)));
            }
        }

        // [e, w] = [e, v] ∪ s[e, v] by the lifting property.
        let mut interval: Vec<Permutation> = col_v.keys().cloned().collect();
        interval.extend(col_v.keys().map(|x| x.left_mul_simple(s)));
        interval.sort();
        interval.dedup();

        let zero = LaurentPoly::zero();
        let mut col = HashMap::with_capacity(interval.len());
        for x in interval {
            let sx = x.left_mul_simple(s);
            let c = i64::from(x.has_left_descent(s));
            let mut p = col_v.get(&sx).unwrap_or(&zero).shift(1 - c);
            p += &col_v.get(&x).unwrap_or(&zero).shift(c);
            for (e, m, col_z) in &corrections {
                if let Some(pxz) = col_z.get(&x) {
                    p -= &pxz.shift(*e).scale(m);
                }
            }
            debug_assert!(!p.is_zero(), "P_{{x,w}} vanishes inside the interval");
            col.insert(x, p);
        }
        col
    }

    /// `P_{y,w}`; zero unless `y <= w`.
    pub fn p(&self, y: &Permutation, w: &Permutation) -> LaurentPoly {
        if y.n() != w.n() {
            return LaurentPoly::zero();
        }
        self.column(w).get(y).cloned().unwrap_or_default()
    }

    pub fn kl_polynomial(&self, y: &Permutation, w: &Permutation) -> KlPoly {
        KlPoly { y: y.clone(), w: w.clone(), poly: self.p(y, w) }
    }

    /// `mu(y, w)`: the coefficient of `q^{(l(w)-l(y)-1)/2}` in `P_{y,w}` when
    /// `y < w` with odd length difference, and `0` otherwise.
    pub fn mu(&self, y: &Permutation, w: &Permutation) -> BigInt {
        if y == w || y.n() != w.n() {
            return BigInt::zero();
        }
        let (ly, lw) = (y.length() as i64, w.length() as i64);
        if ly >= lw || (lw - ly) % 2 == 0 {
            return BigInt::zero();
        }
        match self.column(w).get(y) {
            Some(p) => p.coeff((lw - ly - 1) / 2),
            None => BigInt::zero(),
        }
    }

    /// `y ≺ w`, i.e. `mu(y, w) != 0`.
    pub fn precedes(&self, y: &Permutation, w: &Permutation) -> bool {
        !self.mu(y, w).is_zero()
    }

    /// The lower Bruhat interval `[e, w]`, sorted.
    pub fn lower_interval(&self, w: &Permutation) -> Vec<Permutation> {
        let mut v: Vec<Permutation> = self.column(w).keys().cloned().collect();
        v.sort();
        v
    }
}

/// `P_{y,w}` with a throwaway memo table.
pub fn kl_polynomial(y: &Permutation, w: &Permutation) -> KlPoly {
    KlTable::new().kl_polynomial(y, w)
}

/// `mu(y, w)` with a throwaway memo table.
pub fn mu(y: &Permutation, w: &Permutation) -> BigInt {
    KlTable::new().mu(y, w)
}

/// Checks the structural properties of a KL polynomial: `P_{w,w} = 1`,
/// nonnegative coefficients, constant term 1 and the degree bound
/// `deg P_{y,w} <= (l(w)-l(y)-1)/2` for `y < w`.
pub fn satisfies_kl_bounds(y: &Permutation, w: &Permutation, p: &LaurentPoly) -> bool {
    if y == w {
        return p.is_one();
    }
    if p.is_zero() {
        return true;
    }
    let diff = w.length() as i64 - y.length() as i64;
    let min_ok = p.min_exp() == Some(0) && p.coeff(0) == BigInt::from(1);
    let deg_ok = p.max_exp().is_some_and(|d| 2 * d < diff);
    let pos_ok = p.terms().iter().all(|(_, c)| c.is_positive());
    min_ok && deg_ok && pos_ok
}

/// CSV rows `y,w,P` (reduced words in `s`-notation) for the given pairs.
pub fn dump_csv(table: &KlTable, pairs: &[(Permutation, Permutation)]) -> String {
    let mut out = String::from("y,w,P\n");
    for (y, w) in pairs {
        out.push_str(&format!(
            "{},{},{}\n",
            y.reduced_word().to_s_notation(),
            w.reduced_word().to_s_notation(),
            table.p(y, w)
        ));
    }
    out
}
