//! The symmetric group `S_n` as a Coxeter system with simple reflections
//! `s_i = (i, i+1)`.
//!
//! Permutations are stored in one-line notation `w_1 w_2 ... w_n` and compose
//! as functions: `(a * b)(i) = a(b(i))`. Left multiplication by `s_i` swaps
//! the *values* `i` and `i+1`; right multiplication swaps *positions*.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("{0:?} is not a permutation of 1..n")]
    NotAPermutation(Vec<usize>),
    #[error("permutations of different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("generator s_{i} does not exist in S_{n}")]
    GeneratorOutOfRange { i: usize, n: usize },
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// An element of `S_n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, CoxeterError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] || n > u8::MAX as usize {
                return Err(CoxeterError::NotAPermutation(images));
            }
            seen[v] = true;
        }
        Ok(Self { images: images.into_iter().map(|v| v as u8).collect() })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n as u8).collect() }
    }

    /// The simple transposition `s_i`, `1 <= i < n`.
    pub fn simple(n: usize, i: usize) -> Result<Self, CoxeterError> {
        if i == 0 || i >= n {
            return Err(CoxeterError::GeneratorOutOfRange { i, n });
        }
        let mut w = Self::identity(n);
        w.images.swap(i - 1, i);
        Ok(w)
    }

    /// The longest element `n n-1 ... 1`.
    pub fn longest(n: usize) -> Self {
        Self { images: (1..=n as u8).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Composition `self ∘ other`.
    pub fn multiply(&self, other: &Permutation) -> Result<Permutation, CoxeterError> {
        if self.n() != other.n() {
            return Err(CoxeterError::SizeMismatch(self.n(), other.n()));
        }
        Ok(Self { images: other.images.iter().map(|&j| self.images[j as usize - 1]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Self { images: inv }
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .sum()
    }

    /// Position (1-based) of the value `v`.
    fn position(&self, v: usize) -> usize {
        self.images.iter().position(|&x| x as usize == v).expect("value in range") + 1
    }

    /// `s_i w < w`, i.e. `i + 1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.n() && self.position(i + 1) < self.position(i)
    }

    /// `w s_i < w`, i.e. `w(i) > w(i + 1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.n() && self.images[i - 1] > self.images[i]
    }

    /// The left descent set `{ i : s_i w < w }`, ascending.
    pub fn left_descents(&self) -> Vec<usize> {
        let mut pos = vec![0usize; self.n() + 1];
        for (p, &v) in self.images.iter().enumerate() {
            pos[v as usize] = p;
        }
        (1..self.n()).filter(|&i| pos[i + 1] < pos[i]).collect()
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// `s_i * self` (swap the values `i` and `i+1`).
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        assert!(i >= 1 && i < self.n(), "generator s_{i} out of range for S_{}", self.n());
        let (a, b) = (i as u8, i as u8 + 1);
        Self {
            images: self
                .images
                .iter()
                .map(|&v| if v == a { b } else if v == b { a } else { v })
                .collect(),
        }
    }

    /// `self * s_i` (swap the positions `i` and `i+1`).
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        assert!(i >= 1 && i < self.n(), "generator s_{i} out of range for S_{}", self.n());
        let mut w = self.clone();
        w.images.swap(i - 1, i);
        w
    }

    /// Canonical reduced word: repeatedly strip the smallest left descent.
    pub fn reduced_word(&self) -> Word {
        let mut w = self.clone();
        let mut letters = Vec::with_capacity(self.length());
        while let Some(&i) = w.left_descents().first() {
            letters.push(i);
            w = w.left_mul_simple(i);
        }
        Word(letters)
    }

    /// Elements covered by `self` in Bruhat order: `self * (a b)` for
    /// position pairs `a < b` with `w(a) > w(b)` and no intermediate value
    /// between them.
    pub fn lower_covers(&self) -> Vec<Permutation> {
        let w = &self.images;
        let n = w.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if w[a] > w[b] && !(a + 1..b).any(|c| w[c] < w[a] && w[c] > w[b]) {
                    let mut z = self.clone();
                    z.images.swap(a, b);
                    out.push(z);
                }
            }
        }
        out
    }

    /// Parses `"2 3 1"`, `"2,3,1"`, or the compact `"231"` (for `n <= 9`).
    pub fn parse_one_line(s: &str) -> Result<Self, CoxeterError> {
        let s = s.trim();
        let parts: Vec<&str> = s.split(|c: char| c.is_whitespace() || c == ',').filter(|p| !p.is_empty()).collect();
        let images: Vec<usize> = if parts.len() == 1 && parts[0].len() > 1 {
            parts[0]
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| CoxeterError::Parse(s.to_string()))?
        } else {
            parts
                .iter()
                .map(|p| p.parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| CoxeterError::Parse(s.to_string()))?
        };
        Self::new(images)
    }
}

/// Bruhat order `y <= w`, by the tableau criterion: for every prefix length
/// `k`, the sorted first `k` values of `y` are dominated entrywise by those of
/// `w`.
pub fn bruhat_leq(y: &Permutation, w: &Permutation) -> bool {
    if y.n() != w.n() {
        return false;
    }
    if y.length() > w.length() {
        return false;
    }
    let n = y.n();
    let mut ys: Vec<u8> = Vec::with_capacity(n);
    let mut ws: Vec<u8> = Vec::with_capacity(n);
    for k in 0..n {
        insert_sorted(&mut ys, y.images[k]);
        insert_sorted(&mut ws, w.images[k]);
        if ys.iter().zip(&ws).any(|(a, b)| a > b) {
            return false;
        }
    }
    true
}

fn insert_sorted(v: &mut Vec<u8>, x: u8) {
    let pos = v.partition_point(|&e| e < x);
    v.insert(pos, x);
}

impl Mul<&Permutation> for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.multiply(rhs).expect("permutation sizes must agree")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(u8::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = CoxeterError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_one_line(s)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A word in the simple reflections; letter `i` stands for `s_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The product `s_{i_1} s_{i_2} ... s_{i_p}` in `S_n`.
    pub fn evaluate(&self, n: usize) -> Result<Permutation, CoxeterError> {
        let mut w = Permutation::identity(n);
        for &i in &self.0 {
            if i == 0 || i >= n {
                return Err(CoxeterError::GeneratorOutOfRange { i, n });
            }
            w = w.right_mul_simple(i);
        }
        Ok(w)
    }

    pub fn is_reduced(&self, n: usize) -> Result<bool, CoxeterError> {
        Ok(self.evaluate(n)?.length() == self.len())
    }

    /// Compact `s1s3s5` rendering.
    pub fn to_s_notation(&self) -> String {
        if self.0.is_empty() {
            return "e".to_string();
        }
        self.0.iter().map(|i| format!("s{i}")).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.to_s_notation())
    }
}

impl FromStr for Word {
    type Err = CoxeterError;
    /// Accepts `"1,3,5"`, `"s1s3s5"`, `"s1 s3 s5"` and `"e"` / `""` for the
    /// empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() || t == "e" {
            return Ok(Word(Vec::new()));
        }
        let bad = || CoxeterError::Parse(s.to_string());
        let letters: Vec<usize> = if t.contains('s') {
            t.split('s')
                .map(|p| p.trim().trim_matches(|c| c == ',' || c == '*'))
                .filter(|p| !p.is_empty())
                .map(|p| p.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            t.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|p| !p.is_empty())
                .map(|p| p.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        };
        if letters.contains(&0) {
            return Err(bad());
        }
        Ok(Word(letters))
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// All permutations of `S_n` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation { images: cur.iter().map(|&v| v as u8).collect() });
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashSet, VecDeque};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn s(n: usize, i: usize) -> Permutation {
        Permutation::simple(n, i).unwrap()
    }

    /// Every reduced word of `w`, by branching over left descents.
    fn all_reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
        if w.is_identity() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in w.left_descents() {
            for mut rest in all_reduced_words(&w.left_mul_simple(i)) {
                rest.insert(0, i);
                out.push(rest);
            }
        }
        out
    }

    fn is_subword(small: &[usize], big: &[usize]) -> bool {
        let mut it = big.iter();
        small.iter().all(|x| it.any(|y| y == x))
    }

    /// Subword property: y <= w iff some reduced word of y is a subword of a
    /// fixed reduced word of w.
    fn bruhat_by_subwords(y: &Permutation, w: &Permutation) -> bool {
        let ww = w.reduced_word();
        all_reduced_words(y).iter().any(|yw| is_subword(yw, ww.letters()))
    }

    fn inversions_brute(w: &Permutation) -> usize {
        let v = w.images();
        let mut c = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Minimal word length by breadth-first search on the Cayley graph.
    fn bfs_lengths(n: usize) -> std::collections::HashMap<Permutation, usize> {
        let mut dist = std::collections::HashMap::new();
        let mut queue = VecDeque::new();
        dist.insert(Permutation::identity(n), 0);
        queue.push_back(Permutation::identity(n));
        while let Some(w) = queue.pop_front() {
            let d = dist[&w];
            for i in 1..n {
                let x = w.right_mul_simple(i);
                if !dist.contains_key(&x) {
                    dist.insert(x.clone(), d + 1);
                    queue.push_back(x);
                }
            }
        }
        dist
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(p("2 1 3").multiply(&p("1 3 2")).unwrap(), p("2 3 1"));
        let w = p("3 1 4 2");
        assert_eq!(Permutation::identity(4).multiply(&w).unwrap(), w);
        assert!(s(3, 1).multiply(&s(3, 1)).unwrap().is_identity());
        assert_eq!(p("2 1").multiply(&p("1 2 3")), Err(CoxeterError::SizeMismatch(2, 3)));
    }

    #[test]
    fn length_examples() {
        assert_eq!(Permutation::identity(5).length(), 0);
        assert_eq!(p("2 3 1").length(), 2);
        assert_eq!(p("2 3 1"), &s(3, 1) * &s(3, 2));
        for n in 1..=8 {
            let w0 = Permutation::longest(n);
            assert_eq!(w0.length(), inversions_brute(&w0));
            assert_eq!(w0.length(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn left_descent_examples() {
        assert_eq!(s(3, 1).left_descents(), vec![1]);
        assert_eq!((&s(3, 2) * &s(3, 1)).left_descents(), vec![2]);
        assert!(Permutation::identity(4).left_descents().is_empty());
    }

    #[test]
    fn bruhat_examples() {
        let w = p("3 1 4 2");
        assert!(bruhat_leq(&Permutation::identity(4), &w));
        assert!(bruhat_leq(&w, &w));
        assert!(!bruhat_leq(&s(3, 1), &s(3, 2)));
    }

    #[test]
    fn reduced_word_examples() {
        assert!(Permutation::identity(4).reduced_word().is_empty());
        assert_eq!(p("2 3 1").reduced_word(), Word(vec![1, 2]));
        let w = Word(vec![1, 3, 5]).evaluate(6).unwrap();
        let rw = w.reduced_word();
        assert_eq!(rw.len(), 3);
        let mut letters = rw.0.clone();
        letters.sort();
        assert_eq!(letters, vec![1, 3, 5]);
    }

    #[test]
    fn length_is_minimal_word_length() {
        for n in 1..=5 {
            let lengths = bfs_lengths(n);
            for w in all_permutations(n) {
                assert_eq!(w.length(), lengths[&w], "{w}");
                assert_eq!(w.length(), inversions_brute(&w));
            }
        }
    }

    #[test]
    fn simple_reflection_changes_length_by_one() {
        for n in 2..=6 {
            for w in all_permutations(n) {
                for i in 1..n {
                    let l = w.left_mul_simple(i).length();
                    assert!(l + 1 == w.length() || l == w.length() + 1);
                    assert_eq!(w.has_left_descent(i), l < w.length());
                    assert_eq!(w.has_right_descent(i), w.right_mul_simple(i).length() < w.length());
                }
            }
        }
    }

    #[test]
    fn reduced_word_round_trip() {
        for n in 1..=6 {
            for w in all_permutations(n) {
                let rw = w.reduced_word();
                assert_eq!(rw.evaluate(n).unwrap(), w);
                assert!(rw.is_reduced(n).unwrap());
            }
        }
    }

    #[test]
    fn exchange_property() {
        for n in 1..=5 {
            for w in all_permutations(n) {
                let words = all_reduced_words(&w);
                let firsts: HashSet<usize> = words.iter().filter_map(|x| x.first().copied()).collect();
                let desc: HashSet<usize> = w.left_descents().into_iter().collect();
                assert_eq!(firsts, desc, "{w}");
            }
        }
    }

    #[test]
    fn bruhat_matches_subword_criterion() {
        for n in 1..=5 {
            let all = all_permutations(n);
            for y in &all {
                for w in &all {
                    assert_eq!(bruhat_leq(y, w), bruhat_by_subwords(y, w), "{y} <= {w}");
                }
            }
        }
    }

    #[test]
    fn bruhat_is_partial_order_refining_length() {
        let all = all_permutations(4);
        for a in &all {
            for b in &all {
                if bruhat_leq(a, b) && bruhat_leq(b, a) {
                    assert_eq!(a, b);
                }
                if bruhat_leq(a, b) && a != b {
                    assert!(a.length() < b.length());
                }
                for c in &all {
                    if bruhat_leq(a, b) && bruhat_leq(b, c) {
                        assert!(bruhat_leq(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn lower_covers_are_bruhat_covers() {
        for n in 1..=5 {
            let all = all_permutations(n);
            for w in &all {
                let covers: HashSet<Permutation> = w.lower_covers().into_iter().collect();
                let brute: HashSet<Permutation> = all
                    .iter()
                    .filter(|z| z.length() + 1 == w.length() && bruhat_leq(z, w))
                    .cloned()
                    .collect();
                assert_eq!(covers, brute, "{w}");
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("231"), p("2 3 1"));
        assert_eq!(p("2,3,1").to_string(), "2 3 1");
        assert!("2 2 1".parse::<Permutation>().is_err());
        let w: Word = "s1s3s5".parse().unwrap();
        assert_eq!(w, Word(vec![1, 3, 5]));
        assert_eq!(w.to_string(), "1,3,5");
        assert_eq!("1,3,5".parse::<Word>().unwrap(), w);
        assert_eq!("e".parse::<Word>().unwrap(), Word::default());
        assert!(Word(vec![6]).evaluate(6).is_err());
        assert_eq!(all_permutations(5).len(), 120);
    }

    #[test]
    fn supports_s10() {
        let w0 = Permutation::longest(10);
        assert_eq!(w0.length(), 45);
        assert_eq!(w0.reduced_word().evaluate(10).unwrap(), w0);
    }
}
