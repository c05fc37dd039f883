//! The Hecke algebra `H(q, n)` in its standard basis `T_w`, with
//! `T_s^2 = 1 + (q - q^{-1}) T_s`, and the C-basis
//! `C_w = sum_{y <= w} (-q)^{l(w)-l(y)} bar(P_{y,w}(q^2)) T_y`.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use serde::Serialize;

use super::KlTable;
use crate::coxeter::{all_permutations, Permutation};
use crate::laurent::LaurentPoly;

/// `q - q^{-1}`.
fn q_minus_q_inv() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 1), (-1, -1)])
}

/// `(-q)^k`.
fn neg_q_pow(k: i64) -> LaurentPoly {
    LaurentPoly::monomial(k, if k % 2 == 0 { 1 } else { -1 })
}

/// A finite sum `sum_w a_w T_w` with `a_w` in `Z[q^{±1}]`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    /// The basis element `T_w`.
    pub fn t(w: &Permutation) -> Self {
        let mut e = Self::zero(w.n());
        e.terms.insert(w.clone(), LaurentPoly::one());
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Permutation, a: &LaurentPoly) {
        if a.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_default();
        *entry += a;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (w, a) in &other.terms {
            out.add_term(w.clone(), a);
        }
        out
    }

    pub fn sub(&self, other: &HeckeElement) -> HeckeElement {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> HeckeElement {
        let mut out = Self::zero(self.n);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), &(a * c));
        }
        out
    }

    /// `T_{s_i} * self`.
    pub fn left_mul_generator(&self, i: usize) -> HeckeElement {
        let mut out = Self::zero(self.n);
        let d = q_minus_q_inv();
        for (w, a) in &self.terms {
            let sw = w.left_mul_simple(i);
            if w.has_left_descent(i) {
                out.add_term(w.clone(), &(a * &d));
            }
            out.add_term(sw, a);
        }
        out
    }

    /// `T_{s_i}^{-1} * self`, using `T_s^{-1} = T_s - (q - q^{-1})`.
    pub fn left_mul_generator_inverse(&self, i: usize) -> HeckeElement {
        self.left_mul_generator(i).sub(&self.scale(&q_minus_q_inv()))
    }

    pub fn mul(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = Self::zero(self.n);
        for (x, a) in &self.terms {
            let mut prod = other.scale(a);
            for &i in x.reduced_word().letters().iter().rev() {
                prod = prod.left_mul_generator(i);
            }
            out = out.add(&prod);
        }
        out
    }
}

impl std::fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, a)| format!("({a}) T[{}]", w.reduced_word().to_s_notation()))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Structure constants for the bar involution on `H(q, n)`, memoised per
/// basis element.
pub struct HeckeAlgebra {
    n: usize,
    bar_t: RwLock<HashMap<Permutation, HeckeElement>>,
}

impl HeckeAlgebra {
    pub fn new(n: usize) -> Self {
        Self { n, bar_t: RwLock::new(HashMap::new()) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `bar(T_w) = T_{w^{-1}}^{-1}`, built as `T_s^{-1} bar(T_{sw})` for a
    /// left descent `s`.
    pub fn bar_of_basis(&self, w: &Permutation) -> HeckeElement {
        if let Some(e) = self.bar_t.read().expect("bar cache").get(w) {
            return e.clone();
        }
        let e = match w.left_descents().first() {
            None => HeckeElement::t(w),
            Some(&s) => self.bar_of_basis(&w.left_mul_simple(s)).left_mul_generator_inverse(s),
        };
        self.bar_t.write().expect("bar cache").insert(w.clone(), e.clone());
        e
    }

    /// The ring involution with `bar(q) = q^{-1}` and `bar(T_w) = T_{w^{-1}}^{-1}`.
    pub fn bar(&self, h: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero(h.n);
        for (w, a) in &h.terms {
            out = out.add(&self.bar_of_basis(w).scale(&a.bar()));
        }
        out
    }
}

/// `C_w` expanded in the `T` basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CBasisElement {
    pub w: Permutation,
    pub expansion: HeckeElement,
}

impl CBasisElement {
    /// Reads `P_{y,w}` back off the coefficient of `T_y`.
    pub fn p_polynomial(&self, y: &Permutation) -> Option<LaurentPoly> {
        let diff = self.w.length() as i64 - y.length() as i64;
        p_from_c_coefficient(&self.expansion.coeff(y), diff)
    }
}

/// Inverts `a = (-q)^diff * bar(P(q^2))`; `None` if `a` is not of that form.
pub fn p_from_c_coefficient(a: &LaurentPoly, diff: i64) -> Option<LaurentPoly> {
    let unsigned = a.shift(-diff);
    let unsigned = if diff % 2 == 0 { unsigned } else { -unsigned };
    unsigned.bar().extract_power(2)
}

/// `C_w` from the KL polynomials in `table`.
pub fn c_basis(table: &KlTable, w: &Permutation) -> CBasisElement {
    let lw = w.length() as i64;
    let mut expansion = HeckeElement::zero(w.n());
    for y in table.lower_interval(w) {
        let p = table.p(&y, w);
        let a = &neg_q_pow(lw - y.length() as i64) * &p.substitute_power(2).bar();
        expansion.add_term(y, &a);
    }
    CBasisElement { w: w.clone(), expansion }
}

/// Independent construction of every `C_w` in `S_n` by induction on length:
/// `C_w = C_s C_v - sum_{z ≺ v, sz < z} mu(z, v) C_z` where `w = s v > v`,
/// with `mu` read from the already-built `C_v`.
pub fn c_basis_by_products(n: usize) -> HashMap<Permutation, CBasisElement> {
    let mut all = all_permutations(n);
    all.sort_by_key(|w| (w.length(), w.clone()));
    let mut out: HashMap<Permutation, CBasisElement> = HashMap::new();
    for w in all {
        let expansion = match w.left_descents().first() {
            None => HeckeElement::t(&w),
            Some(&s) => {
                let v = w.left_mul_simple(s);
                let cv = &out[&v];
                let lv = v.length() as i64;
                // C_s C_v = (T_s - q) C_v
                let mut acc = cv
                    .expansion
                    .left_mul_generator(s)
                    .sub(&cv.expansion.scale(&LaurentPoly::var()));
                for (z, _) in cv.expansion.terms() {
                    let lz = z.length() as i64;
                    if z == &v || !z.has_left_descent(s) || (lv - lz) % 2 == 0 {
                        continue;
                    }
                    let p = cv.p_polynomial(z).expect("C_v has the KL shape");
                    let m = p.coeff((lv - lz - 1) / 2);
                    if m != 0.into() {
                        let cz = &out[z].expansion;
                        acc = acc.sub(&cz.scale(&LaurentPoly::monomial(0, m)));
                    }
                }
                acc
            }
        };
        out.insert(w.clone(), CBasisElement { w, expansion });
    }
    out
}
