//! Actions of one crossed module on another: the ξ-data, its axioms, the
//! correspondence with morphisms into the actor, and the semidirect
//! product of crossed modules.

use crate::action::ActionData;
use crate::bider::{Actor, BiderPair, BiderQuad};
use crate::error::{Error, Result};
use crate::matrix::{add_vec, neg_vec, sub_vec, unit, Matrix};
use crate::report::AlgebraReport;
use crate::scalar::Field;
use crate::tensor::Bilinear;
use crate::xmod::{CrossedModule, XModMorphism};

/// An action of `actor` = (m, p, η) on `target` = (n, q, μ).
///
/// p acts on n and on q; m acts through η. `xi1: m x q -> n` and
/// `xi2: q x m -> n` are the mixed terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XModActionData<F> {
    pub actor: CrossedModule<F>,
    pub target: CrossedModule<F>,
    pub p_on_n: ActionData<F>,
    pub p_on_q: ActionData<F>,
    pub xi1: Bilinear<F>,
    pub xi2: Bilinear<F>,
}

/// The semidirect product `(n ⋊ m, q ⋊ p, (μ, η))` with its split
/// extension `target -> xmod -> actor` and the section of the projection.
#[derive(Debug, Clone)]
pub struct SemidirectXMod<F> {
    pub xmod: CrossedModule<F>,
    pub inclusion: XModMorphism<F>,
    pub projection: XModMorphism<F>,
    pub section: XModMorphism<F>,
}

/// Labels that the forward direction does not need.
const NOT_NEEDED_FORWARD: [&str; 4] = ["LbM6a", "LbM6b", "p-on-n:action6", "p-on-q:action6"];

impl<F: Field> XModActionData<F> {
    pub fn new(
        actor: CrossedModule<F>,
        target: CrossedModule<F>,
        p_on_n: ActionData<F>,
        p_on_q: ActionData<F>,
        xi1: Bilinear<F>,
        xi2: Bilinear<F>,
    ) -> Result<Self> {
        let (nm, np) = actor.dims();
        let (nn, nq) = target.dims();
        let mismatch = |what: &str| {
            Err(Error::DimensionMismatch(format!(
                "{what} does not fit dims ({nm},{np}) and ({nn},{nq})"
            )))
        };
        if p_on_n.actor != *actor.base() || p_on_n.target != *target.top() {
            return mismatch("p_on_n");
        }
        if p_on_q.actor != *actor.base() || p_on_q.target != *target.base() {
            return mismatch("p_on_q");
        }
        if xi1.shape() != (nm, nq, nn) {
            return mismatch("xi1");
        }
        if xi2.shape() != (nq, nm, nn) {
            return mismatch("xi2");
        }
        Ok(XModActionData {
            actor,
            target,
            p_on_n,
            p_on_q,
            xi1,
            xi2,
        })
    }

    /// Everything zero.
    pub fn zero(actor: &CrossedModule<F>, target: &CrossedModule<F>) -> Self {
        let (nm, _) = actor.dims();
        let (nn, nq) = target.dims();
        XModActionData {
            p_on_n: ActionData::zero(actor.base().clone(), target.top().clone()),
            p_on_q: ActionData::zero(actor.base().clone(), target.base().clone()),
            xi1: Bilinear::zeros(nm, nq, nn),
            xi2: Bilinear::zeros(nq, nm, nn),
            actor: actor.clone(),
            target: target.clone(),
        }
    }

    /// A crossed module acting on itself: q on n by the given action, q on
    /// itself by its bracket, `ξ1(m, q) = [m, q]`, `ξ2(q, m) = [q, m]`.
    pub fn conjugation(x: &CrossedModule<F>) -> Self {
        XModActionData {
            actor: x.clone(),
            target: x.clone(),
            p_on_n: x.action().clone(),
            p_on_q: ActionData::adjoint(x.base()),
            xi1: x.action().right.clone(),
            xi2: x.action().left.clone(),
        }
    }

    /// All axioms on basis elements: the two equivariance identities, the
    /// six compatibilities of the p-actions with the q-action, the
    /// seventeen identities involving ξ, and both p-actions as actions.
    /// Violations are sorted by label and witness.
    pub fn validate(&self) -> AlgebraReport<F> {
        let mut report = AlgebraReport::new();
        report.absorb("p-on-n", self.p_on_n.validate());
        report.absorb("p-on-q", self.p_on_q.validate());

        let x = &self.actor;
        let y = &self.target;
        let (nm, np) = x.dims();
        let (nn, nq) = y.dims();
        let (eta, mu) = (x.boundary(), y.boundary());
        let basis = |d: usize| (0..d).map(|i| unit::<F>(d, i)).collect::<Vec<_>>();
        let (me, pe, ne, qe) = (basis(nm), basis(np), basis(nn), basis(nq));

        let qn = |q: &[F], n: &[F]| y.act_left(q, n);
        let nq_ = |n: &[F], q: &[F]| y.act_right(n, q);
        let pn = |p: &[F], n: &[F]| self.p_on_n.act_left(p, n);
        let np_ = |n: &[F], p: &[F]| self.p_on_n.act_right(n, p);
        let pq = |p: &[F], q: &[F]| self.p_on_q.act_left(p, q);
        let qp = |q: &[F], p: &[F]| self.p_on_q.act_right(q, p);
        let pm = |p: &[F], m: &[F]| x.act_left(p, m);
        let mp = |m: &[F], p: &[F]| x.act_right(m, p);
        let mn = |m: &[F], n: &[F]| pn(&eta.apply(m), n);
        let nm_ = |n: &[F], m: &[F]| np_(n, &eta.apply(m));
        let mq = |m: &[F], q: &[F]| pq(&eta.apply(m), q);
        let qm = |q: &[F], m: &[F]| qp(q, &eta.apply(m));
        let xi1 = |m: &[F], q: &[F]| self.xi1.apply(m, q);
        let xi2 = |q: &[F], m: &[F]| self.xi2.apply(q, m);
        let qb = |a: &[F], b: &[F]| y.base().bracket(a, b);
        let mb = |a: &[F], b: &[F]| x.top().bracket(a, b);

        for (a, p) in pe.iter().enumerate() {
            for (b, n) in ne.iter().enumerate() {
                report.check("LbEQ1", &[a, b], mu.apply(&pn(p, n)), pq(p, &mu.apply(n)));
                report.check("LbEQ2", &[b, a], mu.apply(&np_(n, p)), qp(&mu.apply(n), p));
                for (c, q) in qe.iter().enumerate() {
                    report.check(
                        "LbCOM1",
                        &[b, a, c],
                        nq_(n, &pq(p, q)),
                        sub_vec(&nq_(&np_(n, p), q), &np_(&nq_(n, q), p)),
                    );
                    report.check(
                        "LbCOM2",
                        &[a, b, c],
                        pn(p, &nq_(n, q)),
                        sub_vec(&nq_(&pn(p, n), q), &qn(&pq(p, q), n)),
                    );
                    report.check(
                        "LbCOM3",
                        &[a, c, b],
                        pn(p, &qn(q, n)),
                        sub_vec(&qn(&pq(p, q), n), &nq_(&pn(p, n), q)),
                    );
                    report.check(
                        "LbCOM4",
                        &[b, c, a],
                        nq_(n, &qp(q, p)),
                        sub_vec(&np_(&nq_(n, q), p), &nq_(&np_(n, p), q)),
                    );
                    report.check(
                        "LbCOM5",
                        &[c, b, a],
                        qn(q, &np_(n, p)),
                        sub_vec(&np_(&qn(q, n), p), &qn(&qp(q, p), n)),
                    );
                    report.check(
                        "LbCOM6",
                        &[c, a, b],
                        qn(q, &pn(p, n)),
                        sub_vec(&qn(&qp(q, p), n), &np_(&qn(q, n), p)),
                    );
                }
            }
        }

        for (a, m) in me.iter().enumerate() {
            for (c, q) in qe.iter().enumerate() {
                report.check("LbM1a", &[c, a], mu.apply(&xi2(q, m)), qm(q, m));
                report.check("LbM1b", &[a, c], mu.apply(&xi1(m, q)), mq(m, q));
            }
            for (b, n) in ne.iter().enumerate() {
                let mun = mu.apply(n);
                report.check("LbM2a", &[b, a], xi2(&mun, m), nm_(n, m));
                report.check("LbM2b", &[a, b], xi1(m, &mun), mn(m, n));
            }
            for (k, p) in pe.iter().enumerate() {
                for (c, q) in qe.iter().enumerate() {
                    report.check(
                        "LbM3a",
                        &[c, k, a],
                        xi2(q, &pm(p, m)),
                        sub_vec(&xi2(&qp(q, p), m), &np_(&xi2(q, m), p)),
                    );
                    report.check(
                        "LbM3b",
                        &[k, a, c],
                        xi1(&pm(p, m), q),
                        sub_vec(&xi2(&pq(p, q), m), &pn(p, &xi2(q, m))),
                    );
                    report.check(
                        "LbM3c",
                        &[c, a, k],
                        xi2(q, &mp(m, p)),
                        sub_vec(&np_(&xi2(q, m), p), &xi2(&qp(q, p), m)),
                    );
                    report.check(
                        "LbM3d",
                        &[a, k, c],
                        xi1(&mp(m, p), q),
                        sub_vec(&np_(&xi1(m, q), p), &xi1(m, &qp(q, p))),
                    );
                    report.check(
                        "LbM6a",
                        &[a, k, c],
                        xi1(m, &pq(p, q)),
                        neg_vec(&xi1(m, &qp(q, p))),
                    );
                    report.check(
                        "LbM6b",
                        &[k, a, c],
                        pn(p, &xi1(m, q)),
                        neg_vec(&pn(p, &xi2(q, m))),
                    );
                }
            }
            for (b, m2) in me.iter().enumerate() {
                let bracket = mb(m, m2);
                for (c, q) in qe.iter().enumerate() {
                    report.check(
                        "LbM4a",
                        &[c, a, b],
                        xi2(q, &bracket),
                        sub_vec(&nm_(&xi2(q, m), m2), &nm_(&xi2(q, m2), m)),
                    );
                    report.check(
                        "LbM4b",
                        &[a, b, c],
                        xi1(&bracket, q),
                        sub_vec(&nm_(&xi1(m, q), m2), &mn(m, &xi2(q, m2))),
                    );
                }
            }
            for (c, q) in qe.iter().enumerate() {
                for (d, q2) in qe.iter().enumerate() {
                    report.check(
                        "LbM5a",
                        &[c, d, a],
                        xi2(&qb(q, q2), m),
                        add_vec(&nq_(&xi2(q, m), q2), &qn(q, &xi2(q2, m))),
                    );
                    report.check(
                        "LbM5b",
                        &[a, c, d],
                        xi1(m, &qb(q, q2)),
                        sub_vec(&nq_(&xi1(m, q), q2), &nq_(&xi1(m, q2), q)),
                    );
                    report.check(
                        "LbM5c",
                        &[c, a, d],
                        qn(q, &xi1(m, q2)),
                        neg_vec(&qn(q, &xi2(q2, m))),
                    );
                }
            }
        }
        report.sort();
        report
    }

    /// The axioms the forward direction uses: everything except LbM6a,
    /// LbM6b and the sixth action identity of each p-action.
    pub fn validate_forward(&self) -> AlgebraReport<F> {
        let mut report = AlgebraReport::new();
        for v in self.validate().into_violations() {
            if !NOT_NEEDED_FORWARD.contains(&v.label.as_str()) {
                report.push(v);
            }
        }
        report
    }

    fn require(&self, report: AlgebraReport<F>) -> Result<()> {
        if report.ok() {
            Ok(())
        } else {
            Err(Error::Invalid(format!(
                "crossed-module action fails its axioms: {report}"
            )))
        }
    }

    /// `m -> (d_m, D_m)` with `d_m(q) = -ξ2(q, m)`, `D_m(q) = ξ1(m, q)`, and
    /// `p -> ((-[., p], [p, .]) on n, (-[., p], [p, .]) on q)`.
    ///
    /// Needs only the forward axioms and no condition on the target.
    pub fn morphism_from_action(&self, actor: &Actor<F>) -> Result<XModMorphism<F>> {
        if actor.acted_on != self.target {
            return Err(Error::DimensionMismatch(
                "actor of a different crossed module".into(),
            ));
        }
        self.require(self.validate_forward())?;
        let (nm, np) = self.actor.dims();
        let (nn, nq) = self.target.dims();
        let pairs: Vec<_> = (0..nm)
            .map(|j| {
                let m = unit::<F>(nm, j);
                let d = (0..nq)
                    .map(|i| neg_vec(&self.xi2.apply(&unit(nq, i), &m)))
                    .collect::<Vec<_>>();
                let big_d = (0..nq)
                    .map(|i| self.xi1.apply(&m, &unit(nq, i)))
                    .collect::<Vec<_>>();
                BiderPair {
                    d: Matrix::from_columns(nn, &d),
                    big_d: Matrix::from_columns(nn, &big_d),
                }
            })
            .collect();
        let quads: Vec<_> = (0..np)
            .map(|k| {
                let p = unit::<F>(np, k);
                BiderQuad {
                    sigma1: self.p_on_n.right.right_operator(&p).neg(),
                    theta1: self.p_on_n.left.left_operator(&p),
                    sigma2: self.p_on_q.right.right_operator(&p).neg(),
                    theta2: self.p_on_q.left.left_operator(&p),
                }
            })
            .collect();
        actor.morphism_from_elements(&self.actor, &pairs, &quads)
    }

    /// Reads action data off a morphism into the actor. Refuses unless the
    /// acted-on crossed module satisfies one of CON1–CON3.
    pub fn action_from_morphism(f: &XModMorphism<F>, actor: &Actor<F>) -> Result<Self> {
        let flags = actor.acted_on.conditions();
        if !flags.any() {
            return Err(Error::NoCondition(format!(
                "the acted-on crossed module fails {}",
                flags.failed().join(", ")
            )));
        }
        let report = f.validate();
        if !report.ok() {
            return Err(Error::Invalid(format!(
                "morphism fails its conditions: {report}"
            )));
        }
        Self::action_from_morphism_unchecked(f, actor)
    }

    /// The same extraction without the condition or validity checks. The
    /// result need not satisfy all axioms.
    pub fn action_from_morphism_unchecked(f: &XModMorphism<F>, actor: &Actor<F>) -> Result<Self> {
        if f.target != actor.xmod {
            return Err(Error::DimensionMismatch(
                "morphism does not land in this actor".into(),
            ));
        }
        let x = &f.source;
        let y = &actor.acted_on;
        let (nm, np) = x.dims();
        let (nn, nq) = y.dims();
        let mut pn = Bilinear::zeros(np, nn, nn);
        let mut np_ = Bilinear::zeros(nn, np, nn);
        let mut pq = Bilinear::zeros(np, nq, nq);
        let mut qp = Bilinear::zeros(nq, np, nq);
        for k in 0..np {
            let s = actor.quads.element(&f.base_map.column(k));
            for j in 0..nn {
                pn.set(k, j, &s.theta1.column(j));
                np_.set(j, k, &neg_vec(&s.sigma1.column(j)));
            }
            for i in 0..nq {
                pq.set(k, i, &s.theta2.column(i));
                qp.set(i, k, &neg_vec(&s.sigma2.column(i)));
            }
        }
        let mut xi1 = Bilinear::zeros(nm, nq, nn);
        let mut xi2 = Bilinear::zeros(nq, nm, nn);
        for j in 0..nm {
            let pair = actor.pairs.element(&f.top_map.column(j));
            for i in 0..nq {
                xi1.set(j, i, &pair.big_d.column(i));
                xi2.set(i, j, &neg_vec(&pair.d.column(i)));
            }
        }
        let p_on_n = ActionData::new(x.base().clone(), y.top().clone(), pn, np_)?;
        let p_on_q = ActionData::new(x.base().clone(), y.base().clone(), pq, qp)?;
        Self::new(x.clone(), y.clone(), p_on_n, p_on_q, xi1, xi2)
    }

    /// `(n ⋊ m, q ⋊ p, (μ, η))`, basis n before m and q before p, with
    /// `[(q,p),(n,m)] = ([q,n] + [p,n] + ξ2(q,m), [p,m])` and
    /// `[(n,m),(q,p)] = ([n,q] + [n,p] + ξ1(m,q), [m,p])`.
    pub fn semidirect_xmod(&self) -> Result<SemidirectXMod<F>> {
        self.require(self.validate())?;
        let x = &self.actor;
        let y = &self.target;
        let (nm, np) = x.dims();
        let (nn, nq) = y.dims();
        let eta = x.boundary();
        // m acting on n through η.
        let m_on_n = ActionData::new(
            x.top().clone(),
            y.top().clone(),
            self.p_on_n
                .left
                .pull_back(eta, &Matrix::identity(nn), |v| v, nn),
            self.p_on_n
                .right
                .pull_back(&Matrix::identity(nn), eta, |v| v, nn),
        )?;
        let top = m_on_n.semidirect()?;
        let base = self.p_on_q.semidirect()?;
        let (dn, dq) = (nn + nm, nq + np);
        let split = |v: &[F], k: usize| (v[..k].to_vec(), v[k..].to_vec());
        let join = |mut a: Vec<F>, b: Vec<F>| {
            a.extend(b);
            a
        };
        let left = Bilinear::from_fn(dq, dn, dn, |i, j| {
            let (q, p) = split(&unit(dq, i), nq);
            let (n, m) = split(&unit(dn, j), nn);
            let first = add_vec(
                &add_vec(&y.act_left(&q, &n), &self.p_on_n.act_left(&p, &n)),
                &self.xi2.apply(&q, &m),
            );
            join(first, x.act_left(&p, &m))
        });
        let right = Bilinear::from_fn(dn, dq, dn, |j, i| {
            let (q, p) = split(&unit(dq, i), nq);
            let (n, m) = split(&unit(dn, j), nn);
            let first = add_vec(
                &add_vec(&y.act_right(&n, &q), &self.p_on_n.act_right(&n, &p)),
                &self.xi1.apply(&m, &q),
            );
            join(first, x.act_right(&m, &p))
        });
        let action = ActionData::new(base.algebra.clone(), top.algebra.clone(), left, right)?;
        let xmod = CrossedModule::new(action, y.boundary().block_diag(eta))?;
        let inclusion = XModMorphism::new(
            y.clone(),
            xmod.clone(),
            top.inclusion_target.clone(),
            base.inclusion_target.clone(),
        )?;
        let projection = XModMorphism::new(
            xmod.clone(),
            x.clone(),
            top.projection_actor.clone(),
            base.projection_actor.clone(),
        )?;
        let section = XModMorphism::new(
            x.clone(),
            xmod.clone(),
            top.inclusion_actor,
            base.inclusion_actor,
        )?;
        Ok(SemidirectXMod {
            xmod,
            inclusion,
            projection,
            section,
        })
    }
}

impl<F: Field> SemidirectXMod<F> {
    /// All three maps are morphisms, the section splits the projection and
    /// the inclusion lands in its kernel.
    pub fn check_split(&self) -> AlgebraReport<F> {
        let mut report = AlgebraReport::new();
        report.absorb("xmod", self.xmod.validate());
        report.absorb("inclusion", self.inclusion.validate());
        report.absorb("projection", self.projection.validate());
        report.absorb("section", self.section.validate());
        let split = self
            .projection
            .compose(&self.section)
            .expect("matching middle object");
        let (nm, np) = self.section.source.dims();
        let (top_id, base_id) = (Matrix::identity(nm), Matrix::identity(np));
        for j in 0..nm {
            report.check(
                "splits-top",
                &[j],
                split.top_map.column(j),
                top_id.column(j),
            );
        }
        for i in 0..np {
            report.check(
                "splits-base",
                &[i],
                split.base_map.column(i),
                base_id.column(i),
            );
        }
        let composite = self
            .projection
            .compose(&self.inclusion)
            .expect("matching middle object");
        report.check(
            "exact-top",
            &[],
            composite.top_map.data().to_vec(),
            vec![F::zero(); composite.top_map.data().len()],
        );
        report.check(
            "exact-base",
            &[],
            composite.base_map.data().to_vec(),
            vec![F::zero(); composite.base_map.data().len()],
        );
        report
    }
}
