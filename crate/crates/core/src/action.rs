//! Actions of one Leibniz algebra on another and the semidirect product.

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::matrix::{add_vec, sub_vec, unit, Matrix};
use crate::report::AlgebraReport;
use crate::scalar::Field;
use crate::tensor::Bilinear;

/// An action of `actor` (p) on `target` (m): bilinear maps `[p, m]` and
/// `[m, p]` with values in m.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ActionData<F> {
    pub actor: LeibnizAlgebra<F>,
    pub target: LeibnizAlgebra<F>,
    /// `p x m -> m`.
    pub left: Bilinear<F>,
    /// `m x p -> m`.
    pub right: Bilinear<F>,
}

/// `m ⋊ p` with its two inclusions. Basis order is m first, then p.
#[derive(Debug, Clone)]
pub struct Semidirect<F> {
    pub algebra: LeibnizAlgebra<F>,
    pub inclusion_target: Matrix<F>,
    pub inclusion_actor: Matrix<F>,
    pub projection_actor: Matrix<F>,
}

impl<F: Field> ActionData<F> {
    pub fn new(
        actor: LeibnizAlgebra<F>,
        target: LeibnizAlgebra<F>,
        left: Bilinear<F>,
        right: Bilinear<F>,
    ) -> Result<Self> {
        let (p, m) = (actor.dim(), target.dim());
        if left.shape() != (p, m, m) || right.shape() != (m, p, m) {
            return Err(Error::DimensionMismatch(format!(
                "action tensors of shapes {:?} and {:?} for dim p = {p}, dim m = {m}",
                left.shape(),
                right.shape()
            )));
        }
        Ok(ActionData {
            actor,
            target,
            left,
            right,
        })
    }

    pub fn zero(actor: LeibnizAlgebra<F>, target: LeibnizAlgebra<F>) -> Self {
        let (p, m) = (actor.dim(), target.dim());
        ActionData {
            left: Bilinear::zeros(p, m, m),
            right: Bilinear::zeros(m, p, m),
            actor,
            target,
        }
    }

    /// An algebra acting on itself by its bracket.
    pub fn adjoint(algebra: &LeibnizAlgebra<F>) -> Self {
        let t = algebra.structure().clone();
        ActionData {
            actor: algebra.clone(),
            target: algebra.clone(),
            left: t.clone(),
            right: t,
        }
    }

    /// The restriction of the bracket of `algebra` to an ideal given by an
    /// injective map `inclusion: ideal -> algebra`.
    pub fn on_ideal(
        algebra: &LeibnizAlgebra<F>,
        ideal: &LeibnizAlgebra<F>,
        inclusion: &Matrix<F>,
    ) -> Result<Self> {
        let (q, n) = (algebra.dim(), ideal.dim());
        if inclusion.shape() != (q, n) {
            return Err(Error::DimensionMismatch("inclusion shape".into()));
        }
        let pull = |v: Vec<F>| -> Result<Vec<F>> {
            inclusion.solve(&v).ok_or_else(|| {
                Error::NotAnIdeal(
                    "bracket with the algebra leaves the image of the inclusion".into(),
                )
            })
        };
        let cols = inclusion.columns();
        let mut left = Bilinear::zeros(q, n, n);
        let mut right = Bilinear::zeros(n, q, n);
        for i in 0..q {
            let e = unit::<F>(q, i);
            for (j, c) in cols.iter().enumerate() {
                left.set(i, j, &pull(algebra.bracket(&e, c))?);
                right.set(j, i, &pull(algebra.bracket(c, &e))?);
            }
        }
        Self::new(algebra.clone(), ideal.clone(), left, right)
    }

    /// `[p, m]`.
    pub fn act_left(&self, p: &[F], m: &[F]) -> Vec<F> {
        self.left.apply(p, m)
    }

    /// `[m, p]`.
    pub fn act_right(&self, m: &[F], p: &[F]) -> Vec<F> {
        self.right.apply(m, p)
    }

    /// The six action identities on all basis triples. Every violated
    /// identity is reported, labelled `action1` .. `action6`.
    pub fn validate(&self) -> AlgebraReport<F> {
        let (np, nm) = (self.actor.dim(), self.target.dim());
        let mut report = AlgebraReport::new();
        let pe: Vec<Vec<F>> = (0..np).map(|i| unit(np, i)).collect();
        let me: Vec<Vec<F>> = (0..nm).map(|i| unit(nm, i)).collect();
        let mb = |x: &[F], y: &[F]| self.target.bracket(x, y);
        let pb = |x: &[F], y: &[F]| self.actor.bracket(x, y);
        let pm = |p: &[F], m: &[F]| self.left.apply(p, m);
        let mp = |m: &[F], p: &[F]| self.right.apply(m, p);

        for (a, p) in pe.iter().enumerate() {
            for (b, m) in me.iter().enumerate() {
                for (c, m2) in me.iter().enumerate() {
                    // [p,[m,m']] = [[p,m],m'] - [[p,m'],m]
                    report.check(
                        "action1",
                        &[a, b, c],
                        pm(p, &mb(m, m2)),
                        sub_vec(&mb(&pm(p, m), m2), &mb(&pm(p, m2), m)),
                    );
                    // [m,[p,m']] = [[m,p],m'] - [[m,m'],p]
                    report.check(
                        "action2",
                        &[b, a, c],
                        mb(m, &pm(p, m2)),
                        sub_vec(&mb(&mp(m, p), m2), &mp(&mb(m, m2), p)),
                    );
                    // [m,[m',p]] = [[m,m'],p] - [[m,p],m']
                    report.check(
                        "action3",
                        &[b, c, a],
                        mb(m, &mp(m2, p)),
                        sub_vec(&mp(&mb(m, m2), p), &mb(&mp(m, p), m2)),
                    );
                }
                for (c, p2) in pe.iter().enumerate() {
                    // [m,[p,p']] = [[m,p],p'] - [[m,p'],p]
                    report.check(
                        "action4",
                        &[b, a, c],
                        mp(m, &pb(p, p2)),
                        sub_vec(&mp(&mp(m, p), p2), &mp(&mp(m, p2), p)),
                    );
                    // [p,[m,p']] = [[p,m],p'] - [[p,p'],m]
                    report.check(
                        "action5",
                        &[a, b, c],
                        pm(p, &mp(m, p2)),
                        sub_vec(&mp(&pm(p, m), p2), &pm(&pb(p, p2), m)),
                    );
                    // [p,[p',m]] = [[p,p'],m] - [[p,m],p']
                    report.check(
                        "action6",
                        &[a, c, b],
                        pm(p, &pm(p2, m)),
                        sub_vec(&pm(&pb(p, p2), m), &mp(&pm(p, m), p2)),
                    );
                }
            }
        }
        report
    }

    /// `m ⋊ p` with bracket `[(m,p),(m',p')] = ([m,m'] + [p,m'] + [m,p'], [p,p'])`.
    pub fn semidirect(&self) -> Result<Semidirect<F>> {
        let report = self.validate();
        if !report.ok() {
            return Err(Error::Invalid(format!("action fails its axioms: {report}")));
        }
        Ok(self.semidirect_unchecked())
    }

    pub(crate) fn semidirect_unchecked(&self) -> Semidirect<F> {
        let (nm, np) = (self.target.dim(), self.actor.dim());
        let n = nm + np;
        let split = |v: &[F]| (v[..nm].to_vec(), v[nm..].to_vec());
        let bracket = Bilinear::from_fn(n, n, n, |i, j| {
            let (m1, p1) = split(&unit(n, i));
            let (m2, p2) = split(&unit(n, j));
            let top = add_vec(
                &add_vec(&self.target.bracket(&m1, &m2), &self.left.apply(&p1, &m2)),
                &self.right.apply(&m1, &p2),
            );
            let mut v = top;
            v.extend(self.actor.bracket(&p1, &p2));
            v
        });
        let algebra = LeibnizAlgebra::new(bracket).expect("square tensor");
        let inclusion_target =
            Matrix::from_fn(n, nm, |i, j| if i == j { F::one() } else { F::zero() });
        let inclusion_actor =
            Matrix::from_fn(n, np, |i, j| if i == nm + j { F::one() } else { F::zero() });
        Semidirect {
            algebra,
            projection_actor: inclusion_actor.transpose(),
            inclusion_target,
            inclusion_actor,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};
    use crate::subspace::Subspace;

    type Q = Rational;

    fn l2() -> LeibnizAlgebra<Q> {
        LeibnizAlgebra::from_brackets(2, &[(0, 0, vec![(1, int(1))])]).unwrap()
    }

    #[test]
    fn zero_action_is_valid_and_gives_direct_sum() {
        let d = ActionData::zero(l2(), LeibnizAlgebra::abelian(1));
        assert!(d.validate().ok());
        let s = d.semidirect().unwrap();
        assert_eq!(s.algebra, LeibnizAlgebra::abelian(1).direct_sum(&l2()));
    }

    #[test]
    fn adjoint_action_is_valid() {
        let d = ActionData::adjoint(&l2());
        assert!(d.validate().ok());
        let s = d.semidirect().unwrap();
        assert_eq!(s.algebra.dim(), 4);
        assert!(s.algebra.validate_leibniz().ok());
        let image_m = s.inclusion_target.column_space();
        assert!(s.algebra.is_ideal(&image_m).unwrap());
        assert!(s
            .algebra
            .is_subalgebra(&s.inclusion_actor.column_space())
            .unwrap());
        assert!(s
            .algebra
            .check_homomorphism(&s.projection_actor, &l2())
            .unwrap()
            .ok());
    }

    #[test]
    fn restriction_to_an_ideal_is_valid() {
        let ideal = l2()
            .subalgebra(&Subspace::span(2, vec![vec![int(0), int(1)]]))
            .unwrap();
        let incl = Matrix::from_columns(2, &[vec![int(0), int(1)]]);
        let d = ActionData::on_ideal(&l2(), &ideal, &incl).unwrap();
        assert!(d.validate().ok());
    }

    #[test]
    fn abelian_action_lives_in_mixed_blocks() {
        // p = m = A1, [p,m] = 1, [m,p] = -1 satisfies all six identities.
        let a1 = LeibnizAlgebra::<Q>::abelian(1);
        let left = Bilinear::from_fn(1, 1, 1, |_, _| vec![int(1)]);
        let right = Bilinear::from_fn(1, 1, 1, |_, _| vec![int(-1)]);
        let d = ActionData::new(a1.clone(), a1, left, right).unwrap();
        assert!(d.validate().ok(), "{}", d.validate());
        let s = d.semidirect().unwrap().algebra;
        assert!(s.bracket_basis(0, 0).iter().all(|x| x.is_zero()));
        assert!(s.bracket_basis(1, 1).iter().all(|x| x.is_zero()));
        assert_eq!(s.bracket_basis(1, 0), &[int(1), int(0)]);
    }

    #[test]
    fn every_violated_axiom_is_reported() {
        let a1 = LeibnizAlgebra::<Q>::abelian(1);
        let left = Bilinear::from_fn(1, 1, 1, |_, _| vec![int(1)]);
        let d = ActionData::new(a1.clone(), a1, left, Bilinear::zeros(1, 1, 1)).unwrap();
        let report = d.validate();
        assert_eq!(report.labels(), vec!["action6"]);
        assert!(d.semidirect().is_err());
    }
}
