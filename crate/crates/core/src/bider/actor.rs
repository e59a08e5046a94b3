use super::{bider_qn, bider_xmod, BiderPair, BiderQuad, PairAlgebra, QuadAlgebra};
use crate::action::ActionData;
use crate::error::Result;
use crate::matrix::{unit, Matrix};
use crate::scalar::Field;
use crate::tensor::Bilinear;
use crate::xmod::{ConditionFlags, CrossedModule, QuotientXMod, SubCrossedModule, XModMorphism};

/// `Δ(d, D) = ((dμ, Dμ), (μd, μD))` written in the canonical bases.
#[derive(Debug, Clone)]
pub struct Delta<F> {
    pub pairs: PairAlgebra<F>,
    pub quads: QuadAlgebra<F>,
    pub matrix: Matrix<F>,
}

/// The actor crossed module of `acted_on`: pairs on top, quadruples at the
/// base, Δ as boundary.
#[derive(Debug, Clone)]
pub struct Actor<F> {
    pub acted_on: CrossedModule<F>,
    pub pairs: PairAlgebra<F>,
    pub quads: QuadAlgebra<F>,
    pub xmod: CrossedModule<F>,
    pub flags: ConditionFlags,
}

fn delta_of<F: Field>(mu: &Matrix<F>, p: &BiderPair<F>) -> BiderQuad<F> {
    BiderQuad {
        sigma1: p.d.mul(mu),
        theta1: p.big_d.mul(mu),
        sigma2: mu.mul(&p.d),
        theta2: mu.mul(&p.big_d),
    }
}

fn delta_matrix<F: Field>(
    x: &CrossedModule<F>,
    pairs: &PairAlgebra<F>,
    quads: &QuadAlgebra<F>,
) -> Result<Matrix<F>> {
    let cols = pairs
        .basis()
        .iter()
        .enumerate()
        .map(|(i, p)| {
            quads.express(
                &delta_of(x.boundary(), p),
                &format!("image of pair {i} under delta"),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(quads.dim(), &cols))
}

pub fn delta<F: Field>(x: &CrossedModule<F>) -> Result<Delta<F>> {
    let pairs = bider_qn(x)?;
    let quads = bider_xmod(x)?;
    let matrix = delta_matrix(x, &pairs, &quads)?;
    Ok(Delta {
        pairs,
        quads,
        matrix,
    })
}

/// `(σ1 d - d σ2, θ1 d - d θ2)`.
fn act_left<F: Field>(s: &BiderQuad<F>, p: &BiderPair<F>) -> BiderPair<F> {
    BiderPair {
        d: s.sigma1.mul(&p.d).sub(&p.d.mul(&s.sigma2)),
        big_d: s.theta1.mul(&p.d).sub(&p.d.mul(&s.theta2)),
    }
}

/// `(d σ2 - σ1 d, D σ2 - σ1 D)`.
fn act_right<F: Field>(p: &BiderPair<F>, s: &BiderQuad<F>) -> BiderPair<F> {
    BiderPair {
        d: p.d.mul(&s.sigma2).sub(&s.sigma1.mul(&p.d)),
        big_d: p.big_d.mul(&s.sigma2).sub(&s.sigma1.mul(&p.big_d)),
    }
}

pub fn actor<F: Field>(x: &CrossedModule<F>) -> Result<Actor<F>> {
    let Delta {
        pairs,
        quads,
        matrix,
    } = delta(x)?;
    let (a, b) = (pairs.dim(), quads.dim());
    let mut left = Bilinear::zeros(b, a, a);
    let mut right = Bilinear::zeros(a, b, a);
    for (i, s) in quads.basis().iter().enumerate() {
        for (j, p) in pairs.basis().iter().enumerate() {
            left.set(
                i,
                j,
                &pairs.express(&act_left(s, p), &format!("[quad {i}, pair {j}]"))?,
            );
            right.set(
                j,
                i,
                &pairs.express(&act_right(p, s), &format!("[pair {j}, quad {i}]"))?,
            );
        }
    }
    let action = ActionData::new(
        quads.algebra().clone(),
        pairs.algebra().clone(),
        left,
        right,
    )?;
    let xmod = CrossedModule::new(action, matrix)?;
    Ok(Actor {
        flags: x.conditions(),
        acted_on: x.clone(),
        pairs,
        quads,
        xmod,
    })
}

/// `(d_n, D_n)` with `d_n(q) = -[q, n]`, `D_n(q) = [n, q]`.
pub(crate) fn canonical_pair<F: Field>(x: &CrossedModule<F>, n: &[F]) -> BiderPair<F> {
    BiderPair {
        d: x.action().left.right_operator(n).neg(),
        big_d: x.action().right.left_operator(n),
    }
}

/// `σ1(n) = -[n, q]`, `θ1(n) = [q, n]`, `σ2(q') = -[q', q]`, `θ2(q') = [q, q']`.
pub(crate) fn canonical_quad<F: Field>(x: &CrossedModule<F>, q: &[F]) -> BiderQuad<F> {
    BiderQuad {
        sigma1: x.action().right.right_operator(q).neg(),
        theta1: x.action().left.left_operator(q),
        sigma2: x.base().right_mult(q).neg(),
        theta2: x.base().left_mult(q),
    }
}

impl<F: Field> Actor<F> {
    /// The morphism `source -> actor` sending top basis vector `j` to
    /// `pairs[j]` and base basis vector `i` to `quads[i]`.
    pub fn morphism_from_elements(
        &self,
        source: &CrossedModule<F>,
        pairs: &[BiderPair<F>],
        quads: &[BiderQuad<F>],
    ) -> Result<XModMorphism<F>> {
        let top = pairs
            .iter()
            .enumerate()
            .map(|(j, p)| {
                self.pairs
                    .express(p, &format!("image of top basis vector {j}"))
            })
            .collect::<Result<Vec<_>>>()?;
        let base = quads
            .iter()
            .enumerate()
            .map(|(i, s)| {
                self.quads
                    .express(s, &format!("image of base basis vector {i}"))
            })
            .collect::<Result<Vec<_>>>()?;
        XModMorphism::new(
            source.clone(),
            self.xmod.clone(),
            Matrix::from_columns(self.pairs.dim(), &top),
            Matrix::from_columns(self.quads.dim(), &base),
        )
    }

    /// `n -> (d_n, D_n)`, `q -> ((σ1^q, θ1^q), (σ2^q, θ2^q))`.
    pub fn canonical_morphism(&self) -> Result<XModMorphism<F>> {
        let x = &self.acted_on;
        let (nn, nq) = x.dims();
        let pairs: Vec<_> = (0..nn).map(|j| canonical_pair(x, &unit(nn, j))).collect();
        let quads: Vec<_> = (0..nq).map(|i| canonical_quad(x, &unit(nq, i))).collect();
        self.morphism_from_elements(x, &pairs, &quads)
    }

    /// Inner biderivations: the image of the canonical morphism.
    pub fn inner(&self) -> Result<SubCrossedModule<F>> {
        self.canonical_morphism()?.image()
    }

    /// Outer biderivations: the actor modulo the inner ones.
    pub fn outer(&self) -> Result<QuotientXMod<F>> {
        let inn = self.inner()?;
        self.xmod.quotient(&inn.top, &inn.base)
    }

    /// Matrix of `Δ`.
    pub fn delta(&self) -> &Matrix<F> {
        self.xmod.boundary()
    }
}

pub fn canonical_morphism<F: Field>(x: &CrossedModule<F>) -> Result<XModMorphism<F>> {
    actor(x)?.canonical_morphism()
}

pub fn inner_xmod<F: Field>(x: &CrossedModule<F>) -> Result<SubCrossedModule<F>> {
    actor(x)?.inner()
}

pub fn outer_xmod<F: Field>(x: &CrossedModule<F>) -> Result<QuotientXMod<F>> {
    actor(x)?.outer()
}
