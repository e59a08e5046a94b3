//! Leibniz algebras given by structure constants.
//!
//! The bracket is stored as a dense tensor `c[i][j][k]` with
//! `[e_i, e_j] = sum_k c[i][j][k] e_k`. Algebras are right Leibniz:
//! `[[x, y], z] = [x, [y, z]] + [[x, z], y]`.

use crate::error::{Error, Result};
use crate::matrix::{add_vec, unit, Matrix};
use crate::report::AlgebraReport;
use crate::scalar::Field;
use crate::subspace::Subspace;
use crate::tensor::Bilinear;

/// Largest dimension accepted by [`LeibnizAlgebra::new`].
pub const DIM_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeibnizAlgebra<F> {
    names: Option<Vec<String>>,
    bracket: Bilinear<F>,
}

/// A quotient algebra together with its canonical maps.
#[derive(Debug, Clone)]
pub struct Quotient<F> {
    pub algebra: LeibnizAlgebra<F>,
    /// Canonical surjection `a -> a / i`.
    pub projection: Matrix<F>,
    /// Linear section picking the coset representatives.
    pub section: Matrix<F>,
}

impl<F: Field> LeibnizAlgebra<F> {
    /// Wraps a square structure tensor. The Leibniz identity is not checked
    /// here; see [`validate_leibniz`](Self::validate_leibniz).
    pub fn new(bracket: Bilinear<F>) -> Result<Self> {
        let (a, b, c) = bracket.shape();
        if a != b || b != c {
            return Err(Error::DimensionMismatch(format!(
                "structure tensor of shape {a}x{b}x{c}"
            )));
        }
        if a > DIM_CAP {
            return Err(Error::DimensionCap {
                dim: a,
                cap: DIM_CAP,
            });
        }
        Ok(LeibnizAlgebra {
            names: None,
            bracket,
        })
    }

    /// Builds an algebra from its nonzero brackets `(i, j, [(k, c)])`.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, Vec<(usize, F)>)]) -> Result<Self> {
        let mut t: Bilinear<F> = Bilinear::zeros(dim, dim, dim);
        for (i, j, terms) in brackets {
            if *i >= dim || *j >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket index ({i}, {j}) out of range for dim {dim}"
                )));
            }
            let mut v = t.basis(*i, *j).to_vec();
            for (k, c) in terms {
                if *k >= dim {
                    return Err(Error::DimensionMismatch(format!(
                        "output index {k} out of range for dim {dim}"
                    )));
                }
                v[*k] = v[*k].clone() + c.clone();
            }
            t.set(*i, *j, &v);
        }
        Self::new(t)
    }

    pub fn abelian(dim: usize) -> Self {
        LeibnizAlgebra {
            names: None,
            bracket: Bilinear::zeros(dim, dim, dim),
        }
    }

    pub fn zero() -> Self {
        Self::abelian(0)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} names for dimension {}",
                names.len(),
                self.dim()
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.bracket.left_dim()
    }

    pub fn structure(&self) -> &Bilinear<F> {
        &self.bracket
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.bracket.apply(x, y)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[F] {
        self.bracket.basis(i, j)
    }

    /// Matrix of `y -> [x, y]`.
    pub fn left_mult(&self, x: &[F]) -> Matrix<F> {
        self.bracket.left_operator(x)
    }

    /// Matrix of `y -> [y, x]`.
    pub fn right_mult(&self, x: &[F]) -> Matrix<F> {
        self.bracket.right_operator(x)
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.is_zero()
    }

    /// Antisymmetric with `[x, x] = 0`; such algebras are Lie algebras.
    pub fn is_lie(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            self.bracket_basis(i, i).iter().all(Field::is_zero)
                && (0..n).all(|j| {
                    let a = self.bracket_basis(i, j);
                    let b = self.bracket_basis(j, i);
                    a.iter()
                        .zip(b)
                        .all(|(x, y)| (x.clone() + y.clone()).is_zero())
                })
        })
    }

    /// Checks `[[x, y], z] = [x, [y, z]] + [[x, z], y]` on all basis triples.
    pub fn validate_leibniz(&self) -> AlgebraReport<F> {
        let n = self.dim();
        let mut report = AlgebraReport::new();
        for i in 0..n {
            for j in 0..n {
                let xy = self.bracket_basis(i, j).to_vec();
                for k in 0..n {
                    let lhs = self.bracket.apply_left_vec(&xy, k);
                    let yz = self.bracket_basis(j, k);
                    let xz = self.bracket_basis(i, k);
                    let rhs = add_vec(
                        &self.bracket.apply_right_vec(i, yz),
                        &self.bracket.apply_left_vec(xz, j),
                    );
                    report.check("Leibniz", &[i, j, k], lhs, rhs);
                }
            }
        }
        report
    }

    /// `{x : [x, y] = [y, x] = 0 for all y}`.
    pub fn annihilator(&self) -> Subspace<F> {
        let n = self.dim();
        let mut stacked = Matrix::zeros(0, n);
        for j in 0..n {
            let e = unit::<F>(n, j);
            stacked = stacked
                .vstack(&self.right_mult(&e))
                .vstack(&self.left_mult(&e));
        }
        stacked.nullspace()
    }

    /// Span of all brackets `[x, y]`.
    pub fn commutator(&self) -> Subspace<F> {
        let n = self.dim();
        let mut vectors = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                vectors.push(self.bracket_basis(i, j).to_vec());
            }
        }
        Subspace::span(n, vectors)
    }

    pub fn is_perfect(&self) -> bool {
        self.commutator().is_full()
    }

    fn check_ambient(&self, s: &Subspace<F>) -> Result<()> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "subspace of F^{} in an algebra of dimension {}",
                s.ambient_dim(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// Two-sided ideal test: `[s, a] + [a, s] ⊆ s`.
    pub fn is_ideal(&self, s: &Subspace<F>) -> Result<bool> {
        self.check_ambient(s)?;
        let n = self.dim();
        for v in s.basis().row_vectors() {
            for j in 0..n {
                if !s.contains(&self.bracket.apply_left_vec(v, j))
                    || !s.contains(&self.bracket.apply_right_vec(j, v))
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_subalgebra(&self, s: &Subspace<F>) -> Result<bool> {
        self.check_ambient(s)?;
        let basis = s.basis_vectors();
        Ok(basis
            .iter()
            .all(|x| basis.iter().all(|y| s.contains(&self.bracket(x, y)))))
    }

    /// The subalgebra on `s`, in the coordinates of the canonical basis of
    /// `s`. Fails if `s` is not closed under the bracket.
    pub fn subalgebra(&self, s: &Subspace<F>) -> Result<Self> {
        self.check_ambient(s)?;
        let basis = s.basis_vectors();
        let k = basis.len();
        let mut t = Bilinear::zeros(k, k, k);
        for i in 0..k {
            for j in 0..k {
                let v = self.bracket(&basis[i], &basis[j]);
                let coords = s.coordinates(&v).ok_or_else(|| {
                    Error::NotClosed(format!(
                        "bracket of basis vectors {i}, {j} leaves the subspace"
                    ))
                })?;
                t.set(i, j, &coords);
            }
        }
        Self::new(t)
    }

    /// Quotient by an ideal. Coset representatives are the coordinate vectors
    /// at the non-pivot columns of the ideal's canonical basis, in index
    /// order.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<Quotient<F>> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal(
                "quotient requires a two-sided ideal".into(),
            ));
        }
        let n = self.dim();
        let free = ideal.free_columns();
        let k = free.len();
        let section = Matrix::from_fn(n, k, |i, j| if i == free[j] { F::one() } else { F::zero() });
        let project = |v: &[F]| -> Vec<F> {
            let r = ideal.reduce(v);
            free.iter().map(|&c| r[c].clone()).collect()
        };
        let cols: Vec<Vec<F>> = (0..n).map(|i| project(&unit(n, i))).collect();
        let projection = Matrix::from_columns(k, &cols);
        let bracket = Bilinear::from_fn(k, k, k, |i, j| {
            project(self.bracket_basis(free[i], free[j]))
        });
        Ok(Quotient {
            algebra: Self::new(bracket)?,
            projection,
            section,
        })
    }

    /// `self ⊕ other` with basis of `self` first.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (a, b) = (self.dim(), other.dim());
        let bracket = Bilinear::from_fn(a + b, a + b, a + b, |i, j| {
            let mut v = vec![F::zero(); a + b];
            if i < a && j < a {
                v[..a].clone_from_slice(self.bracket_basis(i, j));
            } else if i >= a && j >= a {
                v[a..].clone_from_slice(other.bracket_basis(i - a, j - a));
            }
            v
        });
        LeibnizAlgebra {
            names: None,
            bracket,
        }
    }

    /// The isomorphic algebra whose basis is the columns of `change`.
    pub fn transport(&self, change: &Matrix<F>) -> Result<Self> {
        let n = self.dim();
        if change.shape() != (n, n) {
            return Err(Error::DimensionMismatch(
                "basis change must be square".into(),
            ));
        }
        let inv = change
            .inverse()
            .ok_or_else(|| Error::Invalid("basis change is singular".into()))?;
        let bracket = self.bracket.pull_back(change, change, |v| inv.apply(&v), n);
        Self::new(bracket)
    }

    /// Checks that `map: self -> target` preserves brackets on basis pairs.
    pub fn check_homomorphism(&self, map: &Matrix<F>, target: &Self) -> Result<AlgebraReport<F>> {
        if map.shape() != (target.dim(), self.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "map of shape {:?} between algebras of dimensions {} and {}",
                map.shape(),
                self.dim(),
                target.dim()
            )));
        }
        let cols = map.columns();
        let mut report = AlgebraReport::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let lhs = map.apply(self.bracket_basis(i, j));
                let rhs = target.bracket(&cols[i], &cols[j]);
                report.check("homomorphism", &[i, j], lhs, rhs);
            }
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    type Q = Rational;

    fn l2() -> LeibnizAlgebra<Q> {
        LeibnizAlgebra::from_brackets(2, &[(0, 0, vec![(1, int(1))])]).unwrap()
    }

    fn sl2() -> LeibnizAlgebra<Q> {
        // e, h, f with [h,e]=2e, [h,f]=-2f, [e,f]=h.
        LeibnizAlgebra::from_brackets(
            3,
            &[
                (1, 0, vec![(0, int(2))]),
                (0, 1, vec![(0, int(-2))]),
                (1, 2, vec![(2, int(-2))]),
                (2, 1, vec![(2, int(2))]),
                (0, 2, vec![(1, int(1))]),
                (2, 0, vec![(1, int(-1))]),
            ],
        )
        .unwrap()
    }

    fn span(n: usize, vs: &[&[i64]]) -> Subspace<Q> {
        Subspace::span(
            n,
            vs.iter()
                .map(|v| v.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn validate_examples() {
        assert!(LeibnizAlgebra::<Q>::abelian(2).validate_leibniz().ok());
        assert!(l2().validate_leibniz().ok());
        assert!(sl2().validate_leibniz().ok());
        let bad = LeibnizAlgebra::<Q>::from_brackets(1, &[(0, 0, vec![(0, int(1))])]).unwrap();
        let report = bad.validate_leibniz();
        assert!(!report.ok());
        let v = &report.violations()[0];
        assert_eq!(v.witness, vec![0, 0, 0]);
        assert_eq!(v.lhs, vec![int(1)]);
        assert_eq!(v.rhs, vec![int(2)]);
    }

    #[test]
    fn annihilator_examples() {
        assert!(LeibnizAlgebra::<Q>::abelian(3).annihilator().is_full());
        assert_eq!(l2().annihilator(), span(2, &[&[0, 1]]));
        assert!(sl2().annihilator().is_zero());
    }

    #[test]
    fn commutator_examples() {
        assert!(LeibnizAlgebra::<Q>::abelian(3).commutator().is_zero());
        assert_eq!(l2().commutator(), span(2, &[&[0, 1]]));
        assert!(sl2().commutator().is_full());
    }

    #[test]
    fn ideal_examples() {
        let a = l2();
        assert!(a.is_ideal(&a.annihilator()).unwrap());
        assert!(a.is_ideal(&span(2, &[&[0, 1]])).unwrap());
        assert!(!a.is_ideal(&span(2, &[&[1, 0]])).unwrap());
        assert!(a.is_ideal(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn quotient_examples() {
        let a = l2();
        let q0 = a.quotient(&Subspace::zero(2)).unwrap();
        assert_eq!(q0.algebra, a);
        assert_eq!(q0.projection, Matrix::identity(2));
        let qa = a.quotient(&Subspace::full(2)).unwrap();
        assert_eq!(qa.algebra.dim(), 0);
        let q = a.quotient(&span(2, &[&[0, 1]])).unwrap();
        assert_eq!(q.algebra.dim(), 1);
        assert!(q.algebra.is_abelian());
        assert!(matches!(
            a.quotient(&span(2, &[&[1, 0]])),
            Err(Error::NotAnIdeal(_))
        ));
    }

    #[test]
    fn lie_detection() {
        assert!(sl2().is_lie());
        assert!(!l2().is_lie());
    }

    #[test]
    fn transport_preserves_validity() {
        let p = Matrix::from_rows(2, vec![vec![int(1), int(1)], vec![int(0), int(2)]]);
        let b = l2().transport(&p).unwrap();
        assert!(b.validate_leibniz().ok());
        assert_eq!(b.annihilator().dim(), 1);
        let report = l2().check_homomorphism(&p.inverse().unwrap(), &b).unwrap();
        assert!(report.ok(), "{report}");
    }

    #[test]
    fn dimension_cap() {
        let t = Bilinear::<Q>::zeros(DIM_CAP + 1, DIM_CAP + 1, DIM_CAP + 1);
        assert!(matches!(
            LeibnizAlgebra::new(t),
            Err(Error::DimensionCap { .. })
        ));
    }
}
