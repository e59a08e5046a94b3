use crate::matrix::Matrix;
use crate::scalar::Field;

/// A bilinear map `F^a x F^b -> F^c` stored densely: `f(e_i, e_j) =
/// sum_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bilinear<F> {
    left: usize,
    right: usize,
    out: usize,
    data: Vec<F>,
}

impl<F: Field> Bilinear<F> {
    pub fn zeros(left: usize, right: usize, out: usize) -> Self {
        Bilinear {
            left,
            right,
            out,
            data: vec![F::zero(); left * right * out],
        }
    }

    /// Builds the tensor from its values on basis pairs.
    pub fn from_fn(
        left: usize,
        right: usize,
        out: usize,
        mut f: impl FnMut(usize, usize) -> Vec<F>,
    ) -> Self {
        let mut data = Vec::with_capacity(left * right * out);
        for i in 0..left {
            for j in 0..right {
                let v = f(i, j);
                assert_eq!(v.len(), out, "tensor value has wrong length");
                data.extend(v);
            }
        }
        Bilinear {
            left,
            right,
            out,
            data,
        }
    }

    pub fn left_dim(&self) -> usize {
        self.left
    }

    pub fn right_dim(&self) -> usize {
        self.right
    }

    pub fn out_dim(&self) -> usize {
        self.out
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.left, self.right, self.out)
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    /// `f(e_i, e_j)`.
    pub fn basis(&self, i: usize, j: usize) -> &[F] {
        let start = (i * self.right + j) * self.out;
        &self.data[start..start + self.out]
    }

    pub fn set(&mut self, i: usize, j: usize, value: &[F]) {
        assert_eq!(value.len(), self.out);
        let start = (i * self.right + j) * self.out;
        self.data[start..start + self.out].clone_from_slice(value);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn apply(&self, x: &[F], y: &[F]) -> Vec<F> {
        assert_eq!(x.len(), self.left, "left argument has wrong length");
        assert_eq!(y.len(), self.right, "right argument has wrong length");
        let mut acc = vec![F::zero(); self.out];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coef = xi.clone() * yj.clone();
                for (k, c) in self.basis(i, j).iter().enumerate() {
                    acc[k].add_mul_assign(&coef, c);
                }
            }
        }
        acc
    }

    /// `f(x, e_j)` for a basis vector on the right.
    pub fn apply_left_vec(&self, x: &[F], j: usize) -> Vec<F> {
        let mut acc = vec![F::zero(); self.out];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (k, c) in self.basis(i, j).iter().enumerate() {
                acc[k].add_mul_assign(xi, c);
            }
        }
        acc
    }

    /// `f(e_i, y)` for a basis vector on the left.
    pub fn apply_right_vec(&self, i: usize, y: &[F]) -> Vec<F> {
        let mut acc = vec![F::zero(); self.out];
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for (k, c) in self.basis(i, j).iter().enumerate() {
                acc[k].add_mul_assign(yj, c);
            }
        }
        acc
    }

    /// Matrix of `y -> f(x, y)`.
    pub fn left_operator(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.right).map(|j| self.apply_left_vec(x, j)).collect();
        Matrix::from_columns(self.out, &cols)
    }

    /// Matrix of `x -> f(x, y)`.
    pub fn right_operator(&self, y: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.left).map(|i| self.apply_right_vec(i, y)).collect();
        Matrix::from_columns(self.out, &cols)
    }

    /// `(x, y) -> f(y, x)`.
    pub fn swapped(&self) -> Self {
        Self::from_fn(self.right, self.left, self.out, |i, j| {
            self.basis(j, i).to_vec()
        })
    }

    /// Changes coordinates: `g(u, v) = post(f(l u, r v))` where `l`, `r`
    /// map the new argument spaces into the old ones.
    pub fn pull_back(
        &self,
        l: &Matrix<F>,
        r: &Matrix<F>,
        mut post: impl FnMut(Vec<F>) -> Vec<F>,
        out: usize,
    ) -> Self {
        assert_eq!(l.rows(), self.left);
        assert_eq!(r.rows(), self.right);
        let lcols = l.columns();
        let rcols = r.columns();
        Self::from_fn(l.cols(), r.cols(), out, |i, j| {
            post(self.apply(&lcols[i], &rcols[j]))
        })
    }
}
