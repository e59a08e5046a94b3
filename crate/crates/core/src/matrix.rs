//! Dense matrices over an exact field and Gauss-Jordan elimination.
//!
//! A linear map `V -> W` is stored as a `dim W x dim V` matrix acting on
//! column vectors; vectors are plain `Vec<F>` slices of coordinates.

use std::fmt;

use crate::scalar::Field;
use crate::subspace::Subspace;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref<F> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F> Rref<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { F::one() } else { F::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Row-major data; panics if `data.len() != rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    /// Builds a matrix from its columns; `rows` fixes the shape when
    /// `columns` is empty.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Self {
        for c in columns {
            assert_eq!(c.len(), rows, "column has wrong length");
        }
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[F]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(
            v.len(),
            self.cols,
            "vector length does not match matrix columns"
        );
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    acc.add_mul_assign(a, b);
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    out.data[i * other.cols + j].add_mul_assign(a, b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(
            self.shape(),
            other.shape(),
            "matrix difference shape mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn scale(&self, c: &F) -> Self {
        let data = self.data.iter().map(|a| a.clone() * c.clone()).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Block diagonal `diag(self, other)`.
    pub fn block_diag(&self, other: &Self) -> Self {
        Self::from_fn(
            self.rows + other.rows,
            self.cols + other.cols,
            |i, j| match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => other.get(i - self.rows, j - self.cols).clone(),
                _ => F::zero(),
            },
        )
    }

    /// Sub-matrix of the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    /// Reduced row echelon form. Pivots are chosen as the first nonzero entry
    /// (in row order) of each column, scanning columns left to right.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inverse().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            let pivot_row: Vec<F> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = -m.get(i, c).clone();
                for j in c..m.cols {
                    if pivot_row[j].is_zero() {
                        continue;
                    }
                    let idx = i * m.cols + j;
                    m.data[idx].add_mul_assign(&factor, &pivot_row[j]);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// `{ v : self * v = 0 }`.
    pub fn nullspace(&self) -> Subspace<F> {
        let Rref { matrix, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis: Vec<Vec<F>> = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix.get(row, f).clone();
                }
                v
            })
            .collect();
        Subspace::span(self.cols, basis)
    }

    /// Span of the columns (the image of the map).
    pub fn column_space(&self) -> Subspace<F> {
        Subspace::span(self.rows, self.columns())
    }

    pub fn row_space(&self) -> Subspace<F> {
        Subspace::span(self.cols, self.row_vectors().map(<[F]>::to_vec).collect())
    }

    /// Some solution of `self * x = b`, or `None` if the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows, "right-hand side has wrong length");
        let aug = self.hstack(&Matrix::from_columns(self.rows, &[b.to_vec()]));
        let Rref { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = matrix.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Two-sided inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let Rref { matrix, pivots } = self.hstack(&Self::identity(n)).rref();
        if !(0..n).all(|i| pivots.get(i) == Some(&i)) {
            return None;
        }
        let all: Vec<usize> = (0..n).collect();
        let right: Vec<usize> = (n..2 * n).collect();
        Some(matrix.select(&all, &right))
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

pub fn add_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() + y.clone())
        .collect()
}

pub fn sub_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() - y.clone())
        .collect()
}

pub fn scale_vec<F: Field>(c: &F, a: &[F]) -> Vec<F> {
    a.iter().map(|x| c.clone() * x.clone()).collect()
}

pub fn neg_vec<F: Field>(a: &[F]) -> Vec<F> {
    a.iter().map(|x| -x.clone()).collect()
}

pub fn is_zero_vec<F: Field>(a: &[F]) -> bool {
    a.iter().all(Field::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational, F2};

    type Q = Rational;

    fn q(rows: Vec<Vec<i64>>) -> Matrix<Q> {
        let cols = rows.first().map_or(0, Vec::len);
        Matrix::from_rows(
            cols,
            rows.into_iter()
                .map(|r| r.into_iter().map(int).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_of_identity_is_identity() {
        let r = Matrix::<Q>::identity(3).rref();
        assert_eq!(r.matrix, Matrix::identity(3));
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank(), 3);
    }

    #[test]
    fn rref_of_zero() {
        let r = Matrix::<Q>::zeros(2, 4).rref();
        assert!(r.matrix.is_zero());
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_of_dependent_rows() {
        let r = q(vec![vec![1, 2], vec![2, 4]]).rref();
        assert_eq!(r.matrix, q(vec![vec![1, 2], vec![0, 0]]));
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(Matrix::<Q>::identity(3).nullspace().dim(), 0);
        assert_eq!(Matrix::<Q>::zeros(2, 3).nullspace().dim(), 3);
        let ns = q(vec![vec![1, 2]]).nullspace();
        assert_eq!(ns.dim(), 1);
        assert_eq!(ns.basis().row(0), &[Q::one(), Rational::new(-1, 2)]);
    }

    #[test]
    fn degenerate_shapes_follow_dimension_formulas() {
        let empty_rows = Matrix::<Q>::zeros(0, 3);
        assert_eq!(empty_rows.rank(), 0);
        assert_eq!(empty_rows.nullspace().dim(), 3);
        let empty_cols = Matrix::<Q>::zeros(3, 0);
        assert_eq!(empty_cols.rank(), 0);
        assert_eq!(empty_cols.nullspace().dim(), 0);
        assert_eq!(empty_cols.column_space().dim(), 0);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = q(vec![vec![1, 1], vec![0, 1], vec![1, 2]]);
        let x = a.solve(&[int(3), int(1), int(4)]).unwrap();
        assert_eq!(a.apply(&x), vec![int(3), int(1), int(4)]);
        assert!(a.solve(&[int(3), int(1), int(5)]).is_none());
    }

    #[test]
    fn inverse_of_invertible_and_singular() {
        let a = q(vec![vec![2, 1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(q(vec![vec![1, 2], vec![2, 4]]).inverse().is_none());
        assert_eq!(
            Matrix::<Q>::zeros(0, 0).inverse(),
            Some(Matrix::zeros(0, 0))
        );
    }

    #[test]
    fn mod_two_elimination() {
        let a = Matrix::<F2>::from_rows(
            2,
            vec![vec![F2::new(1), F2::new(1)], vec![F2::new(1), F2::new(1)]],
        );
        assert_eq!(a.rank(), 1);
        assert_eq!(a.nullspace().basis().row(0), &[F2::new(1), F2::new(1)]);
    }
}
