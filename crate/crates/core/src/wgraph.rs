//! W-graphs of cells and the matrices of the Hecke action on them.
//!
//! Vectors are columns and generators act on the left: column `j` of the
//! matrix of `tau_{s_i}` is the image of the `j`-th vertex.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::coxeter::Permutation;
use crate::kl::KlTable;
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::tableaux::Cell;

/// A square matrix over `Z[q^{±1}]` representing a Hecke algebra element.
pub type HeckeMatrix = LaurentMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WGraph {
    n: usize,
    vertices: Vec<Permutation>,
    descents: Vec<Vec<usize>>,
    /// `(y, w) -> mu(y, w)` on vertex indices, nonzero entries only.
    edges: BTreeMap<(usize, usize), BigInt>,
}

impl WGraph {
    /// Assembles a graph from raw data without checking it.
    pub fn from_parts(
        n: usize,
        vertices: Vec<Permutation>,
        descents: Vec<Vec<usize>>,
        edges: BTreeMap<(usize, usize), BigInt>,
    ) -> Self {
        assert_eq!(vertices.len(), descents.len());
        Self { n, vertices, descents, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    pub fn descents(&self, v: usize) -> &[usize] {
        &self.descents[v]
    }

    pub fn edges(&self) -> &BTreeMap<(usize, usize), BigInt> {
        &self.edges
    }

    pub fn mu(&self, y: usize, w: usize) -> BigInt {
        self.edges.get(&(y, w)).cloned().unwrap_or_default()
    }

    pub fn index_of(&self, w: &Permutation) -> Option<usize> {
        self.vertices.iter().position(|x| x == w)
    }

    /// Matrix of `tau_{s_i}`:
    /// `tau w = -q^{-1} w` if `s_i` is in `I_w`, and otherwise
    /// `q w + s_i w + sum_{y ≺ w, s_i in I_y} mu(y, w) y`, where the
    /// `s_i w` term is dropped when `s_i w` leaves the cell.
    pub fn generator_matrix(&self, i: usize) -> HeckeMatrix {
        assert!(i >= 1 && i < self.n, "generator index {i} out of range for n = {}", self.n);
        let d = self.len();
        let mut m = LaurentMatrix::zeros(d, d);
        for (j, w) in self.vertices.iter().enumerate() {
            if self.descents[j].contains(&i) {
                m.set(j, j, LaurentPoly::monomial(-1, -1));
                continue;
            }
            m.set(j, j, LaurentPoly::var());
            if let Some(k) = self.index_of(&w.left_mul_simple(i)) {
                *m.entry_mut(k, j) += &LaurentPoly::one();
            }
            for ((y, w2), mu) in &self.edges {
                if *w2 == j && self.descents[*y].contains(&i) {
                    *m.entry_mut(*y, j) += &LaurentPoly::monomial(0, mu.clone());
                }
            }
        }
        m
    }

    /// Matrices of `tau_{s_1}, ..., tau_{s_{n-1}}`.
    pub fn generator_matrices(&self) -> Vec<HeckeMatrix> {
        (1..self.n).map(|i| self.generator_matrix(i)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Vertex {
            index: usize,
            word: String,
            one_line: String,
            descents: Vec<usize>,
        }
        #[derive(Serialize)]
        struct Edge {
            from: usize,
            to: usize,
            mu: String,
        }
        let vertices: Vec<Vertex> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(index, w)| Vertex {
                index,
                word: w.reduced_word().to_s_notation(),
                one_line: w.to_string(),
                descents: self.descents[index].clone(),
            })
            .collect();
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|((y, w), m)| Edge { from: *y, to: *w, mu: m.to_string() })
            .collect();
        serde_json::json!({ "n": self.n, "vertices": vertices, "edges": edges })
    }
}

/// The W-graph of a cell: vertices in the cell's order, `I_x` the left
/// descent sets, and `mu(y, w)` for every ordered pair of members.
pub fn build_wgraph(cell: &Cell, table: &KlTable) -> WGraph {
    let vertices = cell.members.clone();
    let descents = vertices.iter().map(Permutation::left_descents).collect();
    let mut edges = BTreeMap::new();
    for (j, w) in vertices.iter().enumerate() {
        for (k, y) in vertices.iter().enumerate() {
            if y.length() >= w.length() {
                continue;
            }
            let m = table.mu(y, w);
            if !m.is_zero() {
                edges.insert((k, j), m);
            }
        }
    }
    WGraph { n: cell.n(), vertices, descents, edges }
}

/// Outcome of one exact relation check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub passed: bool,
    /// The scalar `c` when a product that should be the identity is `c * Id`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalar: Option<LaurentPoly>,
    /// Human-readable remark (rendered scalar, "not applicable", ...).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn push(&mut self, relation: impl Into<String>, passed: bool) {
        self.checks.push(RelationCheck { relation: relation.into(), passed, scalar: None, note: None });
    }

    pub fn push_check(&mut self, check: RelationCheck) {
        self.checks.push(check);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&RelationCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn get(&self, relation: &str) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| c.relation == relation)
    }
}

/// Braid relations, far commutation and the quadratic relation
/// `(M + q^{-1})(M - q) = 0` for `matrices[i-1] = tau_{s_i}`, exactly.
pub fn verify_hecke_relations(matrices: &[HeckeMatrix]) -> RelationReport {
    let mut report = RelationReport::default();
    let k = matrices.len();
    for (idx, m) in matrices.iter().enumerate() {
        let i = idx + 1;
        let d = m.rows();
        let a = m + &LaurentMatrix::scalar(d, LaurentPoly::monomial(-1, 1));
        let b = m - &LaurentMatrix::scalar(d, LaurentPoly::var());
        report.push(format!("quadratic({i})"), (&a * &b).is_zero());
    }
    for i in 0..k {
        if i + 1 < k {
            let (a, b) = (&matrices[i], &matrices[i + 1]);
            let ok = &(a * b) * a == &(b * a) * b;
            report.push(format!("braid({},{})", i + 1, i + 2), ok);
        }
        for j in i + 2..k {
            let (a, b) = (&matrices[i], &matrices[j]);
            report.push(format!("commute({},{})", i + 1, j + 1), a * b == b * a);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{all_permutations, Word};
    use crate::tableaux::{cell_of, q_symbol, StandardTableau, YoungDiagram};
    use std::collections::HashMap;

    fn from_word(n: usize, letters: &[usize]) -> Permutation {
        Word(letters.to_vec()).evaluate(n).unwrap()
    }

    fn q() -> LaurentPoly {
        LaurentPoly::var()
    }

    fn qi() -> LaurentPoly {
        LaurentPoly::monomial(-1, 1)
    }

    fn c(k: i64) -> LaurentPoly {
        LaurentPoly::constant(k)
    }

    fn s3_graph() -> WGraph {
        build_wgraph(&cell_of(&from_word(3, &[1])), &KlTable::new())
    }

    /// Evaluation at q = 1 with integer arithmetic.
    fn at_one(m: &LaurentMatrix) -> LaurentMatrix {
        m.map(|p| {
            let s: BigInt = p.terms().iter().map(|(_, c)| c.clone()).sum();
            LaurentPoly::monomial(0, s)
        })
    }

    #[test]
    fn s3_example() {
        let g = s3_graph();
        assert_eq!(g.vertices(), &[from_word(3, &[1]), from_word(3, &[2, 1])]);
        assert_eq!(g.descents(0), &[1]);
        assert_eq!(g.descents(1), &[2]);
        assert_eq!(g.mu(0, 1), BigInt::from(1));
        assert_eq!(g.mu(1, 0), BigInt::from(0));
        let m1 = LaurentMatrix::from_rows(vec![vec![-qi(), c(1)], vec![c(0), q()]]);
        let m2 = LaurentMatrix::from_rows(vec![vec![q(), c(0)], vec![c(1), -qi()]]);
        assert_eq!(g.generator_matrix(1), m1);
        assert_eq!(g.generator_matrix(2), m2);
        assert!(verify_hecke_relations(&[m1, m2]).all_passed());
    }

    #[test]
    fn identity_cell() {
        let g = build_wgraph(&cell_of(&Permutation::identity(4)), &KlTable::new());
        assert_eq!(g.len(), 1);
        assert!(g.edges().is_empty());
        for i in 1..4 {
            assert_eq!(g.generator_matrix(i), LaurentMatrix::scalar(1, q()));
        }
    }

    #[test]
    fn s1s3s5_cell_graph() {
        let table = KlTable::new();
        let g = build_wgraph(&cell_of(&from_word(6, &[1, 3, 5])), &table);
        assert_eq!(g.len(), 5);
        assert!(g.edges().values().all(|m| *m == BigInt::from(1)));
        for &(y, w) in g.edges().keys() {
            assert!(table.precedes(&g.vertices()[y], &g.vertices()[w]));
        }
        assert!(verify_hecke_relations(&g.generator_matrices()).all_passed());
    }

    #[test]
    fn every_cell_up_to_s6_satisfies_relations() {
        let table = KlTable::new();
        for n in 2..=6 {
            let mut seen: HashMap<StandardTableau, ()> = HashMap::new();
            for w in all_permutations(n) {
                if seen.insert(q_symbol(&w), ()).is_some() {
                    continue;
                }
                let g = build_wgraph(&cell_of(&w), &table);
                let mats = g.generator_matrices();
                let report = verify_hecke_relations(&mats);
                assert!(report.all_passed(), "cell of {w}: {:?}", report.failures());
                for m in &mats {
                    let m1 = at_one(m);
                    assert_eq!(&m1 * &m1, LaurentMatrix::identity(g.len()));
                }
            }
        }
    }

    #[test]
    fn cell_sizes_match_dimensions() {
        for n in 1..=5 {
            let mut per_shape: HashMap<YoungDiagram, Vec<usize>> = HashMap::new();
            let mut seen = std::collections::HashSet::new();
            for w in all_permutations(n) {
                if !seen.insert(q_symbol(&w)) {
                    continue;
                }
                let cell = cell_of(&w);
                per_shape.entry(cell.shape.clone()).or_default().push(cell.len());
            }
            for (shape, sizes) in per_shape {
                let d = shape.dimension() as usize;
                assert_eq!(sizes.len(), d, "{shape}");
                assert!(sizes.iter().all(|&s| s == d));
            }
        }
    }

    #[test]
    fn broken_braid_is_reported() {
        let g = s3_graph();
        let mut m1 = g.generator_matrix(1);
        let m2 = g.generator_matrix(2);
        // swap the off-diagonal entries
        let a = m1.get(0, 1).clone();
        m1.set(0, 1, m1.get(1, 0).clone());
        m1.set(1, 0, a);
        let report = verify_hecke_relations(&[m1, m2]);
        assert!(!report.all_passed());
        assert!(report.failures().iter().any(|c| c.relation == "braid(1,2)"));
    }

    #[test]
    fn json_export() {
        let v = s3_graph().to_json();
        assert_eq!(v["vertices"][1]["word"], "s2s1");
        assert_eq!(v["vertices"][0]["descents"], serde_json::json!([1]));
        assert_eq!(v["edges"], serde_json::json!([{ "from": 0, "to": 1, "mu": "1" }]));
    }
}
