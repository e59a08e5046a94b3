//! Crossed modules of Leibniz algebras, their morphisms, sub- and quotient
//! objects, the center and the CON1–CON3 conditions.

use crate::action::ActionData;
use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::matrix::{unit, Matrix};
use crate::report::AlgebraReport;
use crate::scalar::Field;
use crate::subspace::Subspace;
use crate::tensor::Bilinear;

/// A crossed module `(n, q, μ)`: the base q acts on the top n and
/// `μ: n -> q` is the boundary.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrossedModule<F> {
    action: ActionData<F>,
    boundary: Matrix<F>,
}

/// `(φ, ψ)` between two crossed modules, `φ` on tops and `ψ` on bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XModMorphism<F> {
    pub source: CrossedModule<F>,
    pub target: CrossedModule<F>,
    pub top_map: Matrix<F>,
    pub base_map: Matrix<F>,
}

/// A sub crossed module: the two subspaces and the crossed module induced
/// on their canonical bases.
#[derive(Debug, Clone)]
pub struct SubCrossedModule<F> {
    pub top: Subspace<F>,
    pub base: Subspace<F>,
    pub xmod: CrossedModule<F>,
}

#[derive(Debug, Clone)]
pub struct QuotientXMod<F> {
    pub xmod: CrossedModule<F>,
    pub top_projection: Matrix<F>,
    pub base_projection: Matrix<F>,
}

#[derive(Debug, Clone)]
pub struct Center<F> {
    pub center: SubCrossedModule<F>,
    /// Set when none of CON1–CON3 holds.
    pub warning: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConditionFlags {
    /// `Ann(n) = 0 = Ann(q)`.
    pub con1: bool,
    /// `Ann(n) = 0` and `[q, q] = q`.
    pub con2: bool,
    /// `[n, n] = n` and `[q, q] = q`.
    pub con3: bool,
    /// `[n, n] = n` and `Ann(q) = 0`. Diagnostic only.
    pub perfect_top_centerless_base: bool,
}

impl ConditionFlags {
    pub fn any(&self) -> bool {
        self.con1 || self.con2 || self.con3
    }

    /// Names of the conditions that fail.
    pub fn failed(&self) -> Vec<&'static str> {
        [
            ("CON1", self.con1),
            ("CON2", self.con2),
            ("CON3", self.con3),
        ]
        .into_iter()
        .filter(|(_, v)| !v)
        .map(|(k, _)| k)
        .collect()
    }
}

impl<F: Field> CrossedModule<F> {
    /// `action` is the action of the base on the top.
    pub fn new(action: ActionData<F>, boundary: Matrix<F>) -> Result<Self> {
        let (n, q) = (action.target.dim(), action.actor.dim());
        if boundary.shape() != (q, n) {
            return Err(Error::DimensionMismatch(format!(
                "boundary of shape {:?} for top dim {n} and base dim {q}",
                boundary.shape()
            )));
        }
        Ok(CrossedModule { action, boundary })
    }

    /// `(n, q, ι)` for an ideal `n` of `q`, acting by the bracket.
    pub fn from_ideal(q: &LeibnizAlgebra<F>, ideal: &Subspace<F>) -> Result<Self> {
        if !q.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal(
                "top of an inclusion crossed module must be an ideal".into(),
            ));
        }
        let n = q.subalgebra(ideal)?;
        let incl = ideal.inclusion();
        let action = ActionData::on_ideal(q, &n, &incl)?;
        Self::new(action, incl)
    }

    /// `(q, q, id)`.
    pub fn identity_of(q: &LeibnizAlgebra<F>) -> Self {
        CrossedModule {
            action: ActionData::adjoint(q),
            boundary: Matrix::identity(q.dim()),
        }
    }

    /// `(0, q, 0)`.
    pub fn zero_top(q: &LeibnizAlgebra<F>) -> Self {
        CrossedModule {
            action: ActionData::zero(q.clone(), LeibnizAlgebra::zero()),
            boundary: Matrix::zeros(q.dim(), 0),
        }
    }

    /// `(0, 0, 0)`.
    pub fn zero() -> Self {
        Self::zero_top(&LeibnizAlgebra::zero())
    }

    pub fn top(&self) -> &LeibnizAlgebra<F> {
        &self.action.target
    }

    pub fn base(&self) -> &LeibnizAlgebra<F> {
        &self.action.actor
    }

    pub fn boundary(&self) -> &Matrix<F> {
        &self.boundary
    }

    pub fn action(&self) -> &ActionData<F> {
        &self.action
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.top().dim(), self.base().dim())
    }

    /// `[q, n]`.
    pub fn act_left(&self, q: &[F], n: &[F]) -> Vec<F> {
        self.action.left.apply(q, n)
    }

    /// `[n, q]`.
    pub fn act_right(&self, n: &[F], q: &[F]) -> Vec<F> {
        self.action.right.apply(n, q)
    }

    /// Both algebras, the action, the boundary as a homomorphism, XLb1 and
    /// XLb2, all on basis elements.
    pub fn validate(&self) -> AlgebraReport<F> {
        let mut report = AlgebraReport::new();
        report.absorb("top", self.top().validate_leibniz());
        report.absorb("base", self.base().validate_leibniz());
        report.absorb("action", self.action.validate());
        let hom = self
            .top()
            .check_homomorphism(&self.boundary, self.base())
            .expect("shape checked at construction");
        report.absorb("boundary", hom);
        let (nn, nq) = self.dims();
        let mu = &self.boundary;
        for j in 0..nn {
            let n = unit::<F>(nn, j);
            let mun = mu.column(j);
            for i in 0..nq {
                let q = unit::<F>(nq, i);
                report.check(
                    "XLb1a",
                    &[i, j],
                    mu.apply(&self.act_left(&q, &n)),
                    self.base().bracket(&q, &mun),
                );
                report.check(
                    "XLb1b",
                    &[j, i],
                    mu.apply(&self.act_right(&n, &q)),
                    self.base().bracket(&mun, &q),
                );
            }
            for k in 0..nn {
                let n2 = unit::<F>(nn, k);
                let bracket = self.top().bracket(&n, &n2);
                report.check("XLb2a", &[j, k], self.act_left(&mun, &n2), bracket.clone());
                report.check("XLb2b", &[j, k], self.act_right(&n, &mu.column(k)), bracket);
            }
        }
        report
    }

    pub fn conditions(&self) -> ConditionFlags {
        let ann_n = self.top().annihilator().is_zero();
        let ann_q = self.base().annihilator().is_zero();
        let perf_n = self.top().is_perfect();
        let perf_q = self.base().is_perfect();
        ConditionFlags {
            con1: ann_n && ann_q,
            con2: ann_n && perf_q,
            con3: perf_n && perf_q,
            perfect_top_centerless_base: perf_n && ann_q,
        }
    }

    /// The crossed module induced on a pair of subspaces. Fails unless both
    /// are subalgebras, `μ(top) ⊆ base` and the base subspace acting on
    /// the top subspace stays inside it.
    pub fn restrict(&self, top: &Subspace<F>, base: &Subspace<F>) -> Result<SubCrossedModule<F>> {
        let tb = top.basis_vectors();
        let bb = base.basis_vectors();
        let n = self.top().subalgebra(top)?;
        let q = self.base().subalgebra(base)?;
        let leave = |what: &str| Error::NotClosed(format!("{what} leaves the sub crossed module"));
        let mut left = Bilinear::zeros(bb.len(), tb.len(), tb.len());
        let mut right = Bilinear::zeros(tb.len(), bb.len(), tb.len());
        for (i, x) in bb.iter().enumerate() {
            for (j, y) in tb.iter().enumerate() {
                left.set(
                    i,
                    j,
                    &top.coordinates(&self.act_left(x, y))
                        .ok_or_else(|| leave("left action"))?,
                );
                right.set(
                    j,
                    i,
                    &top.coordinates(&self.act_right(y, x))
                        .ok_or_else(|| leave("right action"))?,
                );
            }
        }
        let cols = tb
            .iter()
            .map(|y| {
                base.coordinates(&self.boundary.apply(y))
                    .ok_or_else(|| leave("boundary"))
            })
            .collect::<Result<Vec<_>>>()?;
        let boundary = Matrix::from_columns(bb.len(), &cols);
        let xmod = CrossedModule::new(ActionData::new(q, n, left, right)?, boundary)?;
        Ok(SubCrossedModule {
            top: top.clone(),
            base: base.clone(),
            xmod,
        })
    }

    /// Crossed-module ideal test for `(I, J)`: `I` and `J` two-sided ideals,
    /// `μ(I) ⊆ J`, `[J, n] + [n, J] ⊆ I` and `[q, I] + [I, q] ⊆ I`.
    pub fn is_ideal(&self, i: &Subspace<F>, j: &Subspace<F>) -> Result<bool> {
        if !self.top().is_ideal(i)? || !self.base().is_ideal(j)? {
            return Ok(false);
        }
        let (nn, nq) = self.dims();
        let ib = i.basis_vectors();
        let jb = j.basis_vectors();
        if !ib.iter().all(|x| j.contains(&self.boundary.apply(x))) {
            return Ok(false);
        }
        for y in &jb {
            for k in 0..nn {
                let e = unit::<F>(nn, k);
                if !i.contains(&self.act_left(y, &e)) || !i.contains(&self.act_right(&e, y)) {
                    return Ok(false);
                }
            }
        }
        for x in &ib {
            for k in 0..nq {
                let e = unit::<F>(nq, k);
                if !i.contains(&self.act_left(&e, x)) || !i.contains(&self.act_right(x, &e)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn quotient(&self, i: &Subspace<F>, j: &Subspace<F>) -> Result<QuotientXMod<F>> {
        if !self.is_ideal(i, j)? {
            return Err(Error::NotAnIdeal(
                "pair fails the crossed-module ideal conditions".into(),
            ));
        }
        let qt = self.top().quotient(i)?;
        let qb = self.base().quotient(j)?;
        let (a, b) = (qt.algebra.dim(), qb.algebra.dim());
        let st = qt.section.columns();
        let sb = qb.section.columns();
        let left = Bilinear::from_fn(b, a, a, |x, y| {
            qt.projection.apply(&self.act_left(&sb[x], &st[y]))
        });
        let right = Bilinear::from_fn(a, b, a, |y, x| {
            qt.projection.apply(&self.act_right(&st[y], &sb[x]))
        });
        let boundary = qb.projection.mul(&self.boundary).mul(&qt.section);
        let xmod = CrossedModule::new(
            ActionData::new(qb.algebra, qt.algebra, left, right)?,
            boundary,
        )?;
        Ok(QuotientXMod {
            xmod,
            top_projection: qt.projection,
            base_projection: qb.projection,
        })
    }

    /// `n^q = {n : [q, n] = [n, q] = 0 for all q}`.
    pub fn invariants(&self) -> Subspace<F> {
        let (nn, nq) = self.dims();
        let mut blocks = Matrix::zeros(0, nn);
        for i in 0..nq {
            let e = unit::<F>(nq, i);
            blocks = blocks.vstack(&self.action.left.left_operator(&e));
            blocks = blocks.vstack(&self.action.right.right_operator(&e));
        }
        blocks.nullspace()
    }

    /// `st_q(n) = {q : [q, n] = [n, q] = 0 for all n}`.
    pub fn stabilizer(&self) -> Subspace<F> {
        let (nn, nq) = self.dims();
        let mut blocks = Matrix::zeros(0, nq);
        for j in 0..nn {
            let e = unit::<F>(nn, j);
            blocks = blocks.vstack(&self.action.left.right_operator(&e));
            blocks = blocks.vstack(&self.action.right.left_operator(&e));
        }
        blocks.nullspace()
    }

    /// `(n^q, st_q(n) ∩ Ann(q), μ)`. Always computed; a warning is attached
    /// when no CON condition holds, since the annihilator then need not be
    /// the center of q.
    pub fn center(&self) -> Result<Center<F>> {
        let top = self.invariants();
        let base = self.stabilizer().intersection(&self.base().annihilator())?;
        let center = self.restrict(&top, &base)?;
        let flags = self.conditions();
        let warning = (!flags.any()).then(|| {
            "none of CON1, CON2, CON3 holds; the base component uses the annihilator of the base algebra".to_string()
        });
        Ok(Center { center, warning })
    }

    /// Componentwise direct product.
    pub fn direct_product(&self, other: &Self) -> Self {
        let (n1, q1) = self.dims();
        let (n2, q2) = other.dims();
        let (n, q) = (n1 + n2, q1 + q2);
        let split = |v: &[F], k: usize| (v[..k].to_vec(), v[k..].to_vec());
        let left = Bilinear::from_fn(q, n, n, |i, j| {
            let (qa, qb) = split(&unit(q, i), q1);
            let (na, nb) = split(&unit(n, j), n1);
            let mut v = self.act_left(&qa, &na);
            v.extend(other.act_left(&qb, &nb));
            v
        });
        let right = Bilinear::from_fn(n, q, n, |j, i| {
            let (qa, qb) = split(&unit(q, i), q1);
            let (na, nb) = split(&unit(n, j), n1);
            let mut v = self.act_right(&na, &qa);
            v.extend(other.act_right(&nb, &qb));
            v
        });
        let action = ActionData {
            actor: self.base().direct_sum(other.base()),
            target: self.top().direct_sum(other.top()),
            left,
            right,
        };
        CrossedModule {
            action,
            boundary: self.boundary.block_diag(&other.boundary),
        }
    }
}

impl<F: Field> SubCrossedModule<F> {
    pub fn dims(&self) -> (usize, usize) {
        (self.top.dim(), self.base.dim())
    }
}

impl<F: Field> XModMorphism<F> {
    pub fn new(
        source: CrossedModule<F>,
        target: CrossedModule<F>,
        top_map: Matrix<F>,
        base_map: Matrix<F>,
    ) -> Result<Self> {
        let (sn, sq) = source.dims();
        let (tn, tq) = target.dims();
        if top_map.shape() != (tn, sn) || base_map.shape() != (tq, sq) {
            return Err(Error::DimensionMismatch(format!(
                "morphism maps of shapes {:?}, {:?} between dims ({sn},{sq}) and ({tn},{tq})",
                top_map.shape(),
                base_map.shape()
            )));
        }
        Ok(XModMorphism {
            source,
            target,
            top_map,
            base_map,
        })
    }

    pub fn identity(x: &CrossedModule<F>) -> Self {
        let (n, q) = x.dims();
        XModMorphism {
            source: x.clone(),
            target: x.clone(),
            top_map: Matrix::identity(n),
            base_map: Matrix::identity(q),
        }
    }

    pub fn zero(source: &CrossedModule<F>, target: &CrossedModule<F>) -> Self {
        let (sn, sq) = source.dims();
        let (tn, tq) = target.dims();
        XModMorphism {
            source: source.clone(),
            target: target.clone(),
            top_map: Matrix::zeros(tn, sn),
            base_map: Matrix::zeros(tq, sq),
        }
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &Self) -> Result<Self> {
        if first.target != self.source {
            return Err(Error::DimensionMismatch(
                "composing morphisms with different middle objects".into(),
            ));
        }
        Ok(XModMorphism {
            source: first.source.clone(),
            target: self.target.clone(),
            top_map: self.top_map.mul(&first.top_map),
            base_map: self.base_map.mul(&first.base_map),
        })
    }

    /// Both maps homomorphisms, `ψη = μφ`, and `φ[p,m] = [ψp, φm]`,
    /// `φ[m,p] = [φm, ψp]` on basis elements.
    pub fn validate(&self) -> AlgebraReport<F> {
        let mut report = AlgebraReport::new();
        let (s, t) = (&self.source, &self.target);
        let (phi, psi) = (&self.top_map, &self.base_map);
        report.absorb(
            "top",
            s.top()
                .check_homomorphism(phi, t.top())
                .expect("shape checked at construction"),
        );
        report.absorb(
            "base",
            s.base()
                .check_homomorphism(psi, t.base())
                .expect("shape checked at construction"),
        );
        let (nm, np) = s.dims();
        let lhs = psi.mul(s.boundary());
        let rhs = t.boundary().mul(phi);
        for j in 0..nm {
            report.check("commutes", &[j], lhs.column(j), rhs.column(j));
        }
        for i in 0..np {
            let p = unit::<F>(np, i);
            let psip = psi.column(i);
            for j in 0..nm {
                let m = unit::<F>(nm, j);
                let phim = phi.column(j);
                report.check(
                    "action-left",
                    &[i, j],
                    phi.apply(&s.act_left(&p, &m)),
                    t.act_left(&psip, &phim),
                );
                report.check(
                    "action-right",
                    &[j, i],
                    phi.apply(&s.act_right(&m, &p)),
                    t.act_right(&phim, &psip),
                );
            }
        }
        report
    }

    fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.ok() {
            Ok(())
        } else {
            Err(Error::Invalid(format!(
                "morphism fails its conditions: {report}"
            )))
        }
    }

    pub fn kernel(&self) -> Result<SubCrossedModule<F>> {
        self.require_valid()?;
        self.source
            .restrict(&self.top_map.nullspace(), &self.base_map.nullspace())
    }

    /// The image as a sub crossed module of the target.
    pub fn image(&self) -> Result<SubCrossedModule<F>> {
        self.require_valid()?;
        self.target
            .restrict(&self.top_map.column_space(), &self.base_map.column_space())
    }
}
