//! Young diagrams, standard tableaux, Robinson–Schensted insertion and
//! cells of `S_n` as dual Knuth classes.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::coxeter::{Permutation, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("rows {0:?} are not a partition (positive, weakly decreasing)")]
    NotAPartition(Vec<usize>),
    #[error("filling {0:?} is not a standard tableau")]
    NotStandard(Vec<Vec<usize>>),
    #[error("cannot parse diagram {0:?}")]
    Parse(String),
}

/// A partition `mu_1 >= mu_2 >= ... >= mu_k > 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self, TableauError> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::NotAPartition(rows));
        }
        Ok(Self { rows })
    }

    /// The `rows x cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::default();
        }
        Self { rows: vec![cols; rows] }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_rectangular(&self) -> bool {
        self.rows.windows(2).all(|w| w[0] == w[1])
    }

    /// Length of column `c` (0-based).
    pub fn column_len(&self, c: usize) -> usize {
        self.rows.iter().take_while(|&&r| r > c).count()
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.rows.first().copied().unwrap_or(0);
        Self { rows: (0..cols).map(|c| self.column_len(c)).collect() }
    }

    /// Hook length of the box in row `r`, column `c` (0-based).
    pub fn hook(&self, r: usize, c: usize) -> usize {
        (self.rows[r] - c - 1) + (self.column_len(c) - r - 1) + 1
    }

    /// Number of standard tableaux, `n! / prod hook(x)`.
    pub fn dimension(&self) -> u64 {
        let n = self.size() as u128;
        let num: u128 = (1..=n).product();
        let hooks: u128 = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .map(|(r, c)| self.hook(r, c) as u128)
            .product();
        u64::try_from(num / hooks).expect("dimension fits in u64")
    }

    /// Rows from which the last box can be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&r| r + 1 == self.rows.len() || self.rows[r] > self.rows[r + 1])
            .collect()
    }

    /// All diagrams obtained by deleting one removable box (the branching
    /// rule), top row first.
    pub fn restriction_shapes(&self) -> Vec<YoungDiagram> {
        self.removable_rows()
            .into_iter()
            .map(|r| {
                let mut rows = self.rows.clone();
                rows[r] -= 1;
                if rows[r] == 0 {
                    rows.pop();
                }
                Self { rows }
            })
            .collect()
    }

    /// Every standard tableau of this shape, by placing `n` in a removable
    /// corner recursively.
    pub fn standard_tableaux(&self) -> Vec<StandardTableau> {
        let n = self.size();
        if n == 0 {
            return vec![StandardTableau { rows: Vec::new() }];
        }
        let mut out = Vec::new();
        for r in self.removable_rows() {
            let mut smaller = self.rows.clone();
            smaller[r] -= 1;
            if smaller[r] == 0 {
                smaller.pop();
            }
            for t in (Self { rows: smaller }).standard_tableaux() {
                let mut rows = t.rows;
                if r == rows.len() {
                    rows.push(Vec::new());
                }
                rows[r].push(n);
                out.push(StandardTableau { rows });
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for YoungDiagram {
    type Err = TableauError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let rows = inner
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<usize>().map_err(|_| TableauError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(rows)
    }
}

impl Serialize for YoungDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A filling of a Young diagram by `1..n`, strictly increasing along rows
/// and down columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        let bad = || TableauError::NotStandard(rows.clone());
        YoungDiagram::new(lens).map_err(|_| bad())?;
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &v in row {
                if v == 0 || v > n || seen[v] {
                    return Err(bad());
                }
                seen[v] = true;
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(bad());
            }
        }
        for pair in rows.windows(2) {
            if pair[1].iter().zip(&pair[0]).any(|(below, above)| below <= above) {
                return Err(bad());
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram { rows: self.rows.iter().map(Vec::len).collect() }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row insertion of `x` (Schensted bumping).
    fn insert(&mut self, mut x: usize) {
        for row in self.rows.iter_mut() {
            let pos = row.partition_point(|&v| v < x);
            if pos == row.len() {
                row.push(x);
                return;
            }
            std::mem::swap(&mut row[pos], &mut x);
        }
        self.rows.push(vec![x]);
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// P-symbol: row-insert `w(1), ..., w(n)`.
pub fn p_symbol(w: &Permutation) -> StandardTableau {
    let mut t = StandardTableau { rows: Vec::new() };
    for v in w.images() {
        t.insert(v);
    }
    t
}

/// Q-symbol, `Q(w) = P(w^{-1})`.
pub fn q_symbol(w: &Permutation) -> StandardTableau {
    p_symbol(&w.inverse())
}

/// The Robinson–Schensted pair `(P(w), Q(w))`.
pub fn rs_correspondence(w: &Permutation) -> (StandardTableau, StandardTableau) {
    (p_symbol(w), q_symbol(w))
}

/// Permutations one dual Knuth move away: swap the values `i` and `i+1`
/// when `i-1` or `i+2` sits between them positionally.
pub fn dual_knuth_neighbors(w: &Permutation) -> Vec<Permutation> {
    let n = w.n();
    let mut pos = vec![0usize; n + 2];
    for (p, v) in w.images().into_iter().enumerate() {
        pos[v] = p;
    }
    let between = |v: usize, a: usize, b: usize| {
        let (lo, hi) = if pos[a] < pos[b] { (pos[a], pos[b]) } else { (pos[b], pos[a]) };
        v >= 1 && v <= n && pos[v] > lo && pos[v] < hi
    };
    let mut out = BTreeSet::new();
    for i in 1..n {
        if (i >= 2 && between(i - 1, i, i + 1)) || between(i + 2, i, i + 1) {
            out.insert(w.left_mul_simple(i));
        }
    }
    out.into_iter().collect()
}

/// A cell of `S_n`: a class of permutations with a common Q-symbol.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub representative: Permutation,
    /// Ordered by length, then lexicographically by canonical reduced word.
    pub members: Vec<Permutation>,
    pub shape: YoungDiagram,
}

impl Cell {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn n(&self) -> usize {
        self.representative.n()
    }

    pub fn index_of(&self, w: &Permutation) -> Option<usize> {
        self.members.iter().position(|x| x == w)
    }

    pub fn words(&self) -> Vec<Word> {
        self.members.iter().map(Permutation::reduced_word).collect()
    }

    /// Moves the listed members to the front in the given order, keeping the
    /// relative order of the rest.
    pub fn reorder_front(&mut self, front: &[Permutation]) {
        let rest: Vec<Permutation> =
            self.members.iter().filter(|x| !front.contains(x)).cloned().collect();
        let mut members: Vec<Permutation> = front.to_vec();
        members.extend(rest);
        assert_eq!(members.len(), self.members.len(), "front elements must be members");
        self.members = members;
    }
}

/// Sort key: length, then canonical reduced word.
pub fn canonical_key(w: &Permutation) -> (usize, Vec<usize>) {
    (w.length(), w.reduced_word().0)
}

/// The cell of `w`: breadth-first closure under dual Knuth moves.
pub fn cell_of(w: &Permutation) -> Cell {
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(x) = queue.pop_front() {
        for y in dual_knuth_neighbors(&x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut members: Vec<(usize, Vec<usize>, Permutation)> = seen
        .into_iter()
        .map(|x| {
            let (l, word) = canonical_key(&x);
            (l, word, x)
        })
        .collect();
    members.sort();
    Cell {
        representative: w.clone(),
        members: members.into_iter().map(|(_, _, x)| x).collect(),
        shape: q_symbol(w).shape(),
    }
}
