use super::actor::{actor, Actor};
use super::{BiderPair, BiderQuad};
use crate::error::{Error, Result};
use crate::matrix::{neg_vec, unit, Matrix};
use crate::report::AlgebraReport;
use crate::scalar::Field;
use crate::xmod::{CrossedModule, QuotientXMod, SubCrossedModule, XModMorphism};

/// `0 -> x -> middle -> quotient -> 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortExactSequence<F> {
    pub inclusion: XModMorphism<F>,
    pub projection: XModMorphism<F>,
}

/// The morphism `(α, β)` from the middle term into the actor of the left
/// term, with the inner/outer row it maps onto.
#[derive(Debug, Clone)]
pub struct Lift<F> {
    pub actor: Actor<F>,
    pub alpha_beta: XModMorphism<F>,
    pub canonical: XModMorphism<F>,
    pub inner: SubCrossedModule<F>,
    pub outer: QuotientXMod<F>,
    /// The induced map from the quotient term to the outer biderivations.
    pub gamma: XModMorphism<F>,
    /// Validity of both morphisms and commutativity of both squares.
    pub report: AlgebraReport<F>,
}

fn right_inverse<F: Field>(m: &Matrix<F>) -> Result<Matrix<F>> {
    let cols = (0..m.rows())
        .map(|i| {
            m.solve(&unit(m.rows(), i))
                .ok_or_else(|| Error::NotExact("projection is not surjective".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(m.cols(), &cols))
}

fn compare<F: Field>(report: &mut AlgebraReport<F>, label: &str, a: &Matrix<F>, b: &Matrix<F>) {
    for j in 0..a.cols() {
        report.check(label, &[j], a.column(j), b.column(j));
    }
}

impl<F: Field> ShortExactSequence<F> {
    pub fn new(inclusion: XModMorphism<F>, projection: XModMorphism<F>) -> Result<Self> {
        if inclusion.target != projection.source {
            return Err(Error::NotExact(
                "the two morphisms do not share the middle term".into(),
            ));
        }
        Ok(ShortExactSequence {
            inclusion,
            projection,
        })
    }

    pub fn middle(&self) -> &CrossedModule<F> {
        &self.inclusion.target
    }

    /// Both morphisms valid, injective then surjective, and image equals
    /// kernel on tops and on bases.
    pub fn check_exact(&self) -> Result<()> {
        for (name, f) in [
            ("inclusion", &self.inclusion),
            ("projection", &self.projection),
        ] {
            let r = f.validate();
            if !r.ok() {
                return Err(Error::NotExact(format!("{name} is not a morphism: {r}")));
            }
        }
        let (i, p) = (&self.inclusion, &self.projection);
        if !i.top_map.is_injective() || !i.base_map.is_injective() {
            return Err(Error::NotExact("inclusion is not injective".into()));
        }
        if !p.top_map.is_surjective() || !p.base_map.is_surjective() {
            return Err(Error::NotExact("projection is not surjective".into()));
        }
        if i.top_map.column_space() != p.top_map.nullspace()
            || i.base_map.column_space() != p.base_map.nullspace()
        {
            return Err(Error::NotExact(
                "image of the inclusion differs from the kernel of the projection".into(),
            ));
        }
        Ok(())
    }
}

/// Builds `(α, β)` for an exact sequence whose left term satisfies one of
/// CON1–CON3 and checks the commutative diagram onto `Inn -> Act -> Out`.
pub fn lift_sequence<F: Field>(seq: &ShortExactSequence<F>) -> Result<Lift<F>> {
    seq.check_exact()?;
    let x = &seq.inclusion.source;
    let flags = x.conditions();
    if !flags.any() {
        return Err(Error::NoCondition(format!(
            "left term fails {}",
            flags.failed().join(", ")
        )));
    }
    let act = actor(x)?;
    let mid = seq.middle();
    let (it, ib) = (&seq.inclusion.top_map, &seq.inclusion.base_map);
    let pull_n = |v: Vec<F>| {
        it.solve(&v)
            .ok_or_else(|| Error::NotExact("bracket leaves the image of the top".into()))
    };
    let pull_q = |v: Vec<F>| {
        ib.solve(&v)
            .ok_or_else(|| Error::NotExact("bracket leaves the image of the base".into()))
    };
    let (nn, nq) = x.dims();
    let (mn, mq) = mid.dims();
    let in_cols = it.columns();
    let iq_cols = ib.columns();

    let mut pairs = Vec::with_capacity(mn);
    for j in 0..mn {
        let e = unit::<F>(mn, j);
        let d = (0..nq)
            .map(|i| pull_n(mid.act_left(&iq_cols[i], &e)).map(|v| neg_vec(&v)))
            .collect::<Result<Vec<_>>>()?;
        let big_d = (0..nq)
            .map(|i| pull_n(mid.act_right(&e, &iq_cols[i])))
            .collect::<Result<Vec<_>>>()?;
        pairs.push(BiderPair {
            d: Matrix::from_columns(nn, &d),
            big_d: Matrix::from_columns(nn, &big_d),
        });
    }
    let mut quads = Vec::with_capacity(mq);
    for k in 0..mq {
        let e = unit::<F>(mq, k);
        let sigma1 = (0..nn)
            .map(|j| pull_n(mid.act_right(&in_cols[j], &e)).map(|v| neg_vec(&v)))
            .collect::<Result<Vec<_>>>()?;
        let theta1 = (0..nn)
            .map(|j| pull_n(mid.act_left(&e, &in_cols[j])))
            .collect::<Result<Vec<_>>>()?;
        let sigma2 = (0..nq)
            .map(|i| pull_q(mid.base().bracket(&iq_cols[i], &e)).map(|v| neg_vec(&v)))
            .collect::<Result<Vec<_>>>()?;
        let theta2 = (0..nq)
            .map(|i| pull_q(mid.base().bracket(&e, &iq_cols[i])))
            .collect::<Result<Vec<_>>>()?;
        quads.push(BiderQuad {
            sigma1: Matrix::from_columns(nn, &sigma1),
            theta1: Matrix::from_columns(nn, &theta1),
            sigma2: Matrix::from_columns(nq, &sigma2),
            theta2: Matrix::from_columns(nq, &theta2),
        });
    }
    let alpha_beta = act.morphism_from_elements(mid, &pairs, &quads)?;
    let mut report = AlgebraReport::new();
    report.absorb("alpha-beta", alpha_beta.validate());

    let canonical = act.canonical_morphism()?;
    compare(
        &mut report,
        "left-square-top",
        &alpha_beta.top_map.mul(it),
        &canonical.top_map,
    );
    compare(
        &mut report,
        "left-square-base",
        &alpha_beta.base_map.mul(ib),
        &canonical.base_map,
    );

    let inner = canonical.image()?;
    let outer = act.xmod.quotient(&inner.top, &inner.base)?;
    let (pt, pb) = (&seq.projection.top_map, &seq.projection.base_map);
    let to_out_top = outer.top_projection.mul(&alpha_beta.top_map);
    let to_out_base = outer.base_projection.mul(&alpha_beta.base_map);
    let gamma = XModMorphism::new(
        seq.projection.target.clone(),
        outer.xmod.clone(),
        to_out_top.mul(&right_inverse(pt)?),
        to_out_base.mul(&right_inverse(pb)?),
    )?;
    report.absorb("gamma", gamma.validate());
    compare(
        &mut report,
        "right-square-top",
        &to_out_top,
        &gamma.top_map.mul(pt),
    );
    compare(
        &mut report,
        "right-square-base",
        &to_out_base,
        &gamma.base_map.mul(pb),
    );

    Ok(Lift {
        actor: act,
        alpha_beta,
        canonical,
        inner,
        outer,
        gamma,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LeibnizAlgebra;
    use crate::scalar::{int, Rational};

    type Q = Rational;

    fn sl2() -> LeibnizAlgebra<Q> {
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

    #[test]
    fn trivial_extension_lifts_to_the_canonical_morphism() {
        let x = CrossedModule::identity_of(&sl2());
        let seq = ShortExactSequence::new(
            XModMorphism::identity(&x),
            XModMorphism::zero(&x, &CrossedModule::zero()),
        )
        .unwrap();
        let lift = lift_sequence(&seq).unwrap();
        assert!(lift.report.ok(), "{}", lift.report);
        assert_eq!(lift.alpha_beta, lift.canonical);
    }

    #[test]
    fn zero_sequence() {
        let z = CrossedModule::<Q>::zero();
        let seq = ShortExactSequence::new(XModMorphism::identity(&z), XModMorphism::identity(&z))
            .unwrap();
        let lift = lift_sequence(&seq).unwrap();
        assert_eq!(lift.alpha_beta.top_map.shape(), (0, 0));
        assert!(lift.report.ok());
    }

    #[test]
    fn direct_product_with_abelian() {
        let x = CrossedModule::identity_of(&sl2());
        let y = CrossedModule::identity_of(&LeibnizAlgebra::abelian(1));
        let mid = x.direct_product(&y);
        let incl =
            |k: usize, n: usize| Matrix::from_fn(n, k, |i, j| if i == j { int(1) } else { int(0) });
        let proj = Matrix::from_fn(1, 4, |_, j| if j == 3 { int(1) } else { int(0) });
        let i = XModMorphism::new(x.clone(), mid.clone(), incl(3, 4), incl(3, 4)).unwrap();
        let p = XModMorphism::new(mid, y, proj.clone(), proj).unwrap();
        let lift = lift_sequence(&ShortExactSequence::new(i, p).unwrap()).unwrap();
        assert!(lift.report.ok(), "{}", lift.report);
    }

    #[test]
    fn non_exact_sequences_are_rejected() {
        let x = CrossedModule::identity_of(&sl2());
        let seq = ShortExactSequence::new(XModMorphism::zero(&x, &x), XModMorphism::identity(&x))
            .unwrap();
        assert!(matches!(lift_sequence(&seq), Err(Error::NotExact(_))));
    }
}
