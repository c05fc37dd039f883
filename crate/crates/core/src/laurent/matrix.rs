use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{LaurentError, LaurentPoly};
use crate::numeric::CMatrix;

/// Dense matrix over `Z[x, x^-1]`, row-major.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, LaurentPoly::one())
    }

    pub fn scalar(n: usize, s: LaurentPoly) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, s.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: LaurentPoly) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut LaurentPoly {
        &mut self.data[r * self.cols + c]
    }

    pub fn row_vecs(&self) -> Vec<Vec<LaurentPoly>> {
        self.data.chunks(self.cols.max(1)).map(<[_]>::to_vec).take(self.rows).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(LaurentPoly::is_zero)
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, s: &LaurentPoly) -> Self {
        self.map(|p| p * s)
    }

    /// Multiplication by the monomial `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        self.map(|p| p.shift(k))
    }

    pub fn substitute_power(&self, k: i64) -> Self {
        self.map(|p| p.substitute_power(k))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Sub-block `[r0, r1) x [c0, c1)`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let mut b = Self::zeros(r1 - r0, c1 - c0);
        for r in r0..r1 {
            for c in c0..c1 {
                b.set(r - r0, c - c0, self.get(r, c).clone());
            }
        }
        b
    }

    pub fn trace(&self) -> LaurentPoly {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// `Some(s)` when the matrix equals `s * I`.
    pub fn as_scalar(&self) -> Option<LaurentPoly> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let s = self.get(0, 0).clone();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let want_diag = r == c;
                let v = self.get(r, c);
                if (want_diag && *v != s) || (!want_diag && !v.is_zero()) {
                    return None;
                }
            }
        }
        Some(s)
    }

    pub fn pow(&self, mut n: u32) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact entrywise division.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<Self> {
        let data = self.data.iter().map(|p| p.div_exact(d)).collect::<Option<Vec<_>>>()?;
        Some(Self { rows: self.rows, cols: self.cols, data })
    }

    /// Determinant by fraction-free (Bareiss) elimination; every division is
    /// exact in `Z[x, x^-1]`.
    pub fn det(&self) -> LaurentPoly {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut a = self.row_vecs();
        let mut sign = 1i64;
        let mut prev = LaurentPoly::one();
        for k in 0..n.saturating_sub(1) {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return LaurentPoly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
                a[i][k] = LaurentPoly::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Characteristic polynomial coefficients of `det(x I - M)` by the
    /// division-free Berkowitz algorithm, lowest degree first. The result has
    /// `n + 1` entries and leading coefficient 1.
    pub fn charpoly(&self) -> Vec<LaurentPoly> {
        assert!(self.is_square());
        let n = self.rows;
        // Berkowitz: c holds det(xI - A_r) coefficients, highest degree first,
        // for the leading principal r x r submatrix A_r.
        let mut c: Vec<LaurentPoly> = vec![LaurentPoly::one()];
        for r in 0..n {
            // A_{r+1} = [[A_r, col], [row, a]] with a = M[r][r].
            let a = self.get(r, r).clone();
            // Toeplitz column: [1, -a, -row*col, -row*A*col, ...]
            let mut t = Vec::with_capacity(r + 2);
            t.push(LaurentPoly::one());
            t.push(-&a);
            let mut v: Vec<LaurentPoly> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for _ in 0..r {
                let dot: LaurentPoly = (0..r).map(|j| self.get(r, j) * &v[j]).sum();
                t.push(-dot);
                v = (0..r)
                    .map(|i| (0..r).map(|j| self.get(i, j) * &v[j]).sum())
                    .collect();
            }
            let mut next = vec![LaurentPoly::zero(); r + 2];
            for (i, ni) in next.iter_mut().enumerate() {
                let mut acc = LaurentPoly::zero();
                for (j, cj) in c.iter().enumerate() {
                    if i >= j && i - j < t.len() {
                        acc += &(&t[i - j] * cj);
                    }
                }
                *ni = acc;
            }
            c = next;
        }
        c.reverse();
        c
    }

    pub fn eval(&self, z: Complex64) -> Result<CMatrix, LaurentError> {
        let data = self.data.iter().map(|p| p.eval(z)).collect::<Result<Vec<_>, _>>()?;
        Ok(CMatrix::from_vec(self.rows, self.cols, data))
    }

    /// Entries as small integers when every entry is an integer constant.
    pub fn constant_entries(&self) -> Option<Vec<BigInt>> {
        self.data
            .iter()
            .map(|p| {
                if p.is_zero() {
                    Some(BigInt::from(0))
                } else {
                    p.as_monomial().filter(|(e, _)| *e == 0).map(|(_, c)| c.clone())
                }
            })
            .collect()
    }

    pub fn display_in(&self, var: &str) -> String {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).display_in(var)).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        cells
            .iter()
            .map(|row| {
                let parts: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
                format!("[ {} ]", parts.join("  "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Debug for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LaurentMatrix {}x{}", self.rows, self.cols)?;
        f.write_str(&self.display_in("q"))
    }
}

fn mul_impl(a: &LaurentMatrix, b: &LaurentMatrix) -> LaurentMatrix {
    assert_eq!(a.cols, b.rows, "dimension mismatch in matrix product");
    let mut out = LaurentMatrix::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.get(i, k);
            if aik.is_zero() {
                continue;
            }
            for j in 0..b.cols {
                let bkj = b.get(k, j);
                if bkj.is_zero() {
                    continue;
                }
                *out.entry_mut(i, j) += &(aik * bkj);
            }
        }
    }
    out
}

fn zip_impl(a: &LaurentMatrix, b: &LaurentMatrix, neg: bool) -> LaurentMatrix {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols), "dimension mismatch");
    let data = a
        .data
        .iter()
        .zip(&b.data)
        .map(|(x, y)| if neg { x - y } else { x + y })
        .collect();
    LaurentMatrix { rows: a.rows, cols: a.cols, data }
}

impl Mul<&LaurentMatrix> for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn mul(self, rhs: &LaurentMatrix) -> LaurentMatrix {
        mul_impl(self, rhs)
    }
}

impl Mul<LaurentMatrix> for LaurentMatrix {
    type Output = LaurentMatrix;
    fn mul(self, rhs: LaurentMatrix) -> LaurentMatrix {
        mul_impl(&self, &rhs)
    }
}

impl Add<&LaurentMatrix> for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn add(self, rhs: &LaurentMatrix) -> LaurentMatrix {
        zip_impl(self, rhs, false)
    }
}

impl Sub<&LaurentMatrix> for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn sub(self, rhs: &LaurentMatrix) -> LaurentMatrix {
        zip_impl(self, rhs, true)
    }
}
