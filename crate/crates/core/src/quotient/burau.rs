//! The reduced Burau representation `beta_t` of `B_n` and its relation to
//! the two-dimensional Hecke representation of `B_3`.

use serde::Serialize;

use crate::coxeter::Permutation;
use crate::kl::KlTable;
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::tableaux::cell_of;
use crate::wgraph::build_wgraph;

/// `beta_t(sigma_i)`, `i = 1..n-1`, as `(n-1) x (n-1)` matrices over
/// `Z[t^{±1}]`:
///
/// - `sigma_1 = [[-t, 1], [0, 1]] ⊕ I_{n-3}`
/// - `sigma_i = I_{i-2} ⊕ [[1, 0, 0], [t, -t, 1], [0, 0, 1]] ⊕ I_{n-i-2}`
/// - `sigma_{n-1} = I_{n-3} ⊕ [[1, 0], [t, -t]]`
pub fn burau(n: usize) -> Vec<LaurentMatrix> {
    assert!(n >= 3, "reduced Burau needs n >= 3");
    let t = LaurentPoly::var;
    let dim = n - 1;
    (1..n)
        .map(|i| {
            let mut m = LaurentMatrix::identity(dim);
            if i == 1 {
                m.set(0, 0, -t());
                m.set(0, 1, LaurentPoly::one());
            } else if i == n - 1 {
                m.set(dim - 1, dim - 2, t());
                m.set(dim - 1, dim - 1, -t());
            } else {
                let r = i - 1;
                m.set(r, r - 1, t());
                m.set(r, r, -t());
                m.set(r, r + 1, LaurentPoly::one());
            }
            m
        })
        .collect()
}

/// `(-beta)^2 - (t-1)(-beta) - t`, which vanishes exactly.
pub fn burau_quadratic_residual(b: &LaurentMatrix) -> LaurentMatrix {
    let minus = b.scale(&LaurentPoly::constant(-1));
    let t = LaurentPoly::var();
    let lhs = &minus * &minus;
    let linear = minus.scale(&(&t - &LaurentPoly::one()));
    &(&lhs - &linear) - &LaurentMatrix::scalar(b.rows(), t)
}

/// `-q^{-1} beta_{q^2}(sigma_i)` for `B_3`, in the Hecke variable `q`.
pub fn hecke_normalized_burau_b3() -> Vec<LaurentMatrix> {
    let s = LaurentPoly::monomial(-1, -1);
    burau(3).iter().map(|b| b.substitute_power(2).scale(&s)).collect()
}

/// The intertwiner `P = [[-q, q^2 + 1], [-q^3 - q, q^2]]` with
/// `P W_i = B_i P`, where `W_i` are the cell matrices of `S_3` and
/// `B_i = -q^{-1} beta_{q^2}(sigma_i)`.
#[derive(Debug, Clone, Serialize)]
pub struct BridgeCheck {
    pub change_of_basis: LaurentMatrix,
    pub determinant: LaurentPoly,
    pub cell_matrices: Vec<LaurentMatrix>,
    pub burau_matrices: Vec<LaurentMatrix>,
    pub holds: bool,
}

pub fn b3_change_of_basis() -> LaurentMatrix {
    let p = |terms: &[(i64, i64)]| LaurentPoly::from_terms(terms.iter().copied());
    LaurentMatrix::from_rows(vec![
        vec![p(&[(1, -1)]), p(&[(2, 1), (0, 1)])],
        vec![p(&[(3, -1), (1, -1)]), p(&[(2, 1)])],
    ])
}

pub fn b3_bridge(table: &KlTable) -> BridgeCheck {
    let s1: Permutation = "2 1 3".parse().expect("valid permutation");
    let graph = build_wgraph(&cell_of(&s1), table);
    let cell_matrices = graph.generator_matrices();
    let burau_matrices = hecke_normalized_burau_b3();
    let p = b3_change_of_basis();
    let holds = cell_matrices.iter().zip(&burau_matrices).all(|(w, b)| &p * w == b * &p);
    BridgeCheck { determinant: p.det(), change_of_basis: p, cell_matrices, burau_matrices, holds }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(rows: &[&[(i64, i64)]]) -> Vec<LaurentPoly> {
        rows.iter().map(|t| LaurentPoly::from_terms(t.iter().copied())).collect()
    }

    #[test]
    fn n4_sigma1_display() {
        let b = burau(4);
        let want = LaurentMatrix::from_rows(vec![
            parse(&[&[(1, -1)], &[(0, 1)], &[]]),
            parse(&[&[], &[(0, 1)], &[]]),
            parse(&[&[], &[], &[(0, 1)]]),
        ]);
        assert_eq!(b[0], want);
        let mid = LaurentMatrix::from_rows(vec![
            parse(&[&[(0, 1)], &[], &[]]),
            parse(&[&[(1, 1)], &[(1, -1)], &[(0, 1)]]),
            parse(&[&[], &[], &[(0, 1)]]),
        ]);
        assert_eq!(b[1], mid);
        let last = LaurentMatrix::from_rows(vec![
            parse(&[&[(0, 1)], &[], &[]]),
            parse(&[&[], &[(0, 1)], &[]]),
            parse(&[&[], &[(1, 1)], &[(1, -1)]]),
        ]);
        assert_eq!(b[2], last);
    }

    #[test]
    fn quadratic_identity_and_braid_relations() {
        for n in 3..=7 {
            let b = burau(n);
            for x in &b {
                assert!(burau_quadratic_residual(x).is_zero());
            }
            for i in 0..n - 2 {
                assert_eq!(&(&b[i] * &b[i + 1]) * &b[i], &(&b[i + 1] * &b[i]) * &b[i + 1]);
            }
            for i in 0..n - 1 {
                for j in i + 2..n - 1 {
                    assert_eq!(&b[i] * &b[j], &b[j] * &b[i]);
                }
            }
        }
    }

    #[test]
    fn b3_hecke_quadratic() {
        let q = LaurentPoly::var();
        let c = &q - &LaurentPoly::monomial(-1, 1);
        for x in hecke_normalized_burau_b3() {
            let lhs = &x * &x;
            let rhs = &LaurentMatrix::identity(2) + &x.scale(&c);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn b3_bridge_holds() {
        let check = b3_bridge(&KlTable::new());
        assert!(check.holds);
        // q (q^4 + q^2 + 1), nonzero at generic q
        assert_eq!(check.determinant, LaurentPoly::from_terms([(5, 1), (3, 1), (1, 1)]));
    }
}
