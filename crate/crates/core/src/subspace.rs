//! Subspaces of `F^n` in canonical form.
//!
//! A [`Subspace`] keeps its basis in reduced row echelon form, so equal
//! subspaces have identical bases and `==` decides equality. The coordinates
//! of a member vector are simply its entries at the pivot columns.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient: usize, vectors: Vec<Vec<F>>) -> Self {
        Self::from_rows(Matrix::from_rows(ambient, vectors))
    }

    /// Row space of `m`.
    pub fn from_rows(m: Matrix<F>) -> Self {
        let ambient = m.cols();
        let r = m.rref();
        let rank = r.rank();
        let basis = r.matrix.select(
            &(0..rank).collect::<Vec<_>>(),
            &(0..ambient).collect::<Vec<_>>(),
        );
        Subspace {
            ambient,
            basis,
            pivots: r.pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Basis vectors as the rows of a matrix, in RREF.
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vectors().map(<[F]>::to_vec).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Indices that are not pivots: a canonical complement is spanned by
    /// these coordinate vectors.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// Inclusion map `F^dim -> F^ambient` (basis vectors as columns).
    pub fn inclusion(&self) -> Matrix<F> {
        self.basis.transpose()
    }

    /// `v` minus its component along the basis; zero exactly when `v` is a
    /// member. The result vanishes at every pivot column.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.ambient, "vector has wrong length");
        let mut w = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let c = -w[p].clone();
            for (j, b) in self.basis.row(row).iter().enumerate() {
                if !b.is_zero() {
                    w[j].add_mul_assign(&c, b);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(Field::is_zero)
    }

    /// Coordinates with respect to the canonical basis, if `v` is a member.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let coords: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let rebuilt = self.combine(&coords);
        if rebuilt.as_slice() == v {
            Some(coords)
        } else {
            None
        }
    }

    /// `sum_i coeffs[i] * basis_i`.
    pub fn combine(&self, coeffs: &[F]) -> Vec<F> {
        assert_eq!(
            coeffs.len(),
            self.dim(),
            "coefficient count does not match dimension"
        );
        let mut v = vec![F::zero(); self.ambient];
        for (row, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(row).iter().enumerate() {
                v[j].add_mul_assign(c, b);
            }
        }
        v
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of F^{} and F^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.basis.row_vectors().all(|v| other.contains(v)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::from_rows(self.basis.vstack(&other.basis)))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        // Solve x A = y B: kernel of [A^T | -B^T], then map x through A.
        let a = self.inclusion();
        let b = other.inclusion();
        let kernel = a.hstack(&b.neg()).nullspace();
        let k = self.dim();
        let vectors = kernel
            .basis_vectors()
            .into_iter()
            .map(|sol| a.apply(&sol[..k]))
            .collect();
        Ok(Self::span(self.ambient, vectors))
    }

    /// Representatives of a basis of `within / self`, completing the basis of
    /// `self` to one of `within`. They are chosen greedily among the canonical
    /// basis vectors of `within`, in order.
    pub fn quotient_basis(&self, within: &Self) -> Result<Vec<Vec<F>>> {
        if !self.is_subspace_of(within)? {
            return Err(Error::NotContained);
        }
        let mut acc = self.clone();
        let mut reps = Vec::new();
        for v in within.basis.row_vectors() {
            if !acc.contains(v) {
                reps.push(v.to_vec());
                acc = Self::from_rows(
                    acc.basis
                        .vstack(&Matrix::from_rows(self.ambient, vec![v.to_vec()])),
                );
            }
        }
        Ok(reps)
    }

    /// Image under a linear map with `map.cols() == ambient_dim()`.
    pub fn image(&self, map: &Matrix<F>) -> Self {
        assert_eq!(
            map.cols(),
            self.ambient,
            "map domain does not match ambient dimension"
        );
        Self::span(
            map.rows(),
            self.basis.row_vectors().map(|v| map.apply(v)).collect(),
        )
    }
}
