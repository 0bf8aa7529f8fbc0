//! Dense matrices over `Int` and `Rat`.
//!
//! Sizes in this crate are tiny (n ≤ ~25), so all algorithms favour
//! exactness and clarity over asymptotics: Bareiss for determinants,
//! plain Gauss-Jordan over rationals for inverses.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Signed, Zero};

use super::{Int, Rat};

#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    nrows: usize,
    ncols: usize,
    data: Vec<Int>,
}

impl IntMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { nrows, ncols, data: vec![Int::zero(); nrows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self { nrows, ncols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| Int::from(v)).collect()).collect())
    }

    pub fn from_fn(nrows: usize, ncols: usize, mut f: impl FnMut(usize, usize) -> Int) -> Self {
        let mut m = Self::zeros(nrows, ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Int]> {
        (0..self.nrows).map(|i| self.row(i))
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.nrows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ncols, self.nrows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch in mul");
        Self::from_fn(self.nrows, other.ncols, |i, j| {
            (0..self.ncols).map(|k| &self[(i, k)] * &other[(k, j)]).sum()
        })
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(v.len(), self.nrows);
        (0..self.ncols)
            .map(|j| (0..self.nrows).map(|i| &v[i] * &self[(i, j)]).sum())
            .collect()
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(v.len(), self.ncols);
        (0..self.nrows)
            .map(|i| (0..self.ncols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    /// `vᵀ · self · w` for column vectors `v`, `w`.
    pub fn bilinear(&self, v: &[Int], w: &[Int]) -> Int {
        self.mul_vec(w).iter().zip(v).map(|(a, b)| a * b).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.nrows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.nrows, self.ncols, |i, j| -self[(i, j)].clone())
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> Int {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.nrows;
        if n == 0 {
            return Int::one();
        }
        let mut m = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = num / &prev;
                }
                m[(i, k)] = Int::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }

    pub fn rank(&self) -> usize {
        self.to_rat().rank()
    }

    pub fn to_rat(&self) -> RatMat {
        RatMat::from_fn(self.nrows, self.ncols, |i, j| Rat::from_integer(self[(i, j)].clone()))
    }

    /// Inverse of a unimodular matrix; `None` if `det ≠ ±1`.
    pub fn inverse_unimodular(&self) -> Option<IntMat> {
        if !self.is_square() || !self.det().abs().is_one() {
            return None;
        }
        let inv = self.to_rat().inverse().expect("unimodular matrix is invertible");
        Some(IntMat::from_fn(self.nrows, self.nrows, |i, j| {
            let e = &inv[(i, j)];
            debug_assert!(e.is_integer());
            e.to_integer()
        }))
    }

    /// Basis of the integer kernel `{x : Ax = 0}`, returned as matrix columns.
    ///
    /// The basis spans the saturated kernel lattice (quotient torsion-free).
    pub fn kernel_basis(&self) -> IntMat {
        let snf = super::smith_normal_form(self);
        let r = snf.rank();
        let n = self.ncols;
        IntMat::from_fn(n, n - r, |i, j| snf.q[(i, r + j)].clone())
    }

    /// One integer solution of `Ax = b`, if any.
    pub fn solve(&self, b: &[Int]) -> Option<Vec<Int>> {
        assert_eq!(b.len(), self.nrows);
        let snf = super::smith_normal_form(self);
        let pb = snf.p.mul_vec(b);
        let mut y = vec![Int::zero(); self.ncols];
        for (i, pbi) in pb.iter().enumerate() {
            let d = snf.diag_entry(i);
            if d.is_zero() {
                if !pbi.is_zero() {
                    return None;
                }
            } else {
                let (q, r) = num_integer::Integer::div_rem(pbi, &d);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            }
        }
        Some(snf.q.mul_vec(&y))
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.ncols {
            let (a_, b_) = (a * self.ncols + j, b * self.ncols + j);
            self.data.swap(a_, b_);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.nrows {
            let (a_, b_) = (i * self.ncols + a, i * self.ncols + b);
            self.data.swap(a_, b_);
        }
    }

    /// row_i ← row_i + t · row_k
    pub(crate) fn add_row_multiple(&mut self, i: usize, k: usize, t: &Int) {
        for j in 0..self.ncols {
            let v = &self[(k, j)] * t;
            self[(i, j)] += v;
        }
    }

    /// col_j ← col_j + t · col_k
    pub(crate) fn add_col_multiple(&mut self, j: usize, k: usize, t: &Int) {
        for i in 0..self.nrows {
            let v = &self[(i, k)] * t;
            self[(i, j)] += v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.ncols {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }

    pub(crate) fn negate_col(&mut self, j: usize) {
        for i in 0..self.nrows {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMat {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.ncols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.ncols + j]
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.nrows, self.ncols)?;
        for i in 0..self.nrows {
            write!(f, " ")?;
            for j in 0..self.ncols {
                write!(f, " {}", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct RatMat {
    nrows: usize,
    ncols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { nrows, ncols, data: vec![Rat::zero(); nrows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_fn(nrows: usize, ncols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Self::zeros(nrows, ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows);
        Self::from_fn(self.nrows, other.ncols, |i, j| {
            (0..self.ncols).map(|k| &self[(i, k)] * &other[(k, j)]).sum()
        })
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ncols);
        (0..self.nrows)
            .map(|i| (0..self.ncols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn vec_mul(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.nrows);
        (0..self.ncols)
            .map(|j| (0..self.nrows).map(|i| &v[i] * &self[(i, j)]).sum())
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.ncols {
            let Some(p) = (row..m.nrows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows_(row, p);
            for i in row + 1..m.nrows {
                if m[(i, col)].is_zero() {
                    continue;
                }
                let f = &m[(i, col)] / &m[(row, col)];
                for j in col..m.ncols {
                    let v = &m[(row, j)] * &f;
                    m[(i, j)] -= v;
                }
            }
            rank += 1;
            row += 1;
            if row == m.nrows {
                break;
            }
        }
        rank
    }

    /// Gauss-Jordan inverse; `None` if singular.
    pub fn inverse(&self) -> Option<RatMat> {
        assert!(self.nrows == self.ncols, "inverse of non-square matrix");
        let n = self.nrows;
        let mut m = self.clone();
        let mut inv = RatMat::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&i| !m[(i, col)].is_zero())?;
            m.swap_rows_(col, p);
            inv.swap_rows_(col, p);
            let piv = m[(col, col)].clone();
            for j in 0..n {
                m[(col, j)] /= &piv;
                inv[(col, j)] /= &piv;
            }
            for i in 0..n {
                if i == col || m[(i, col)].is_zero() {
                    continue;
                }
                let f = m[(i, col)].clone();
                for j in 0..n {
                    let (a, b) = (&m[(col, j)] * &f, &inv[(col, j)] * &f);
                    m[(i, j)] -= a;
                    inv[(i, j)] -= b;
                }
            }
        }
        Some(inv)
    }

    fn swap_rows_(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.ncols {
            let (a_, b_) = (a * self.ncols + j, b * self.ncols + j);
            self.data.swap(a_, b_);
        }
    }
}

impl Index<(usize, usize)> for RatMat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.ncols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.ncols + j]
    }
}

impl fmt::Debug for RatMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMat {}x{} [", self.nrows, self.ncols)?;
        for i in 0..self.nrows {
            write!(f, " ")?;
            for j in 0..self.ncols {
                write!(f, " {}", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn det_small() {
        let m = IntMat::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det(), int(-2));
        let m = IntMat::from_i64(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]);
        assert_eq!(m.det(), int(30));
        let m = IntMat::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.det(), int(-1));
        let m = IntMat::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.det(), int(0));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = IntMat::from_i64(&[&[1, 1, 1], &[1, 3, 4], &[1, 2, 3]]).to_rat();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMat::identity(3));
    }

    #[test]
    fn kernel_and_solve() {
        // kernel of (1 2 3) is rank 2 and orthogonal to the row
        let a = IntMat::from_i64(&[&[1, 2, 3]]);
        let k = a.kernel_basis();
        assert_eq!(k.ncols(), 2);
        for j in 0..2 {
            let col = k.col(j);
            let dot: Int = col.iter().zip(a.row(0)).map(|(x, y)| x * y).sum();
            assert!(dot.is_zero());
        }
        let x = a.solve(&[int(5)]).unwrap();
        let dot: Int = x.iter().zip(a.row(0)).map(|(x, y)| x * y).sum();
        assert_eq!(dot, int(5));

        // 2x + 4y = 3 has no integer solution
        let a = IntMat::from_i64(&[&[2, 4]]);
        assert!(a.solve(&[int(3)]).is_none());
    }

    #[test]
    fn unimodular_inverse() {
        let t = IntMat::from_i64(&[&[1, 1, 1], &[1, 3, 4], &[1, 2, 3]]);
        let ti = t.inverse_unimodular().unwrap();
        assert_eq!(t.mul(&ti), IntMat::identity(3));
        let not_uni = IntMat::from_i64(&[&[2, 0], &[0, 1]]);
        assert!(not_uni.inverse_unimodular().is_none());
    }
}
