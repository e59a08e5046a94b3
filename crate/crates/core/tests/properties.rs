//! Property tests. Random inputs come from small integer matrices and from
//! catalog objects moved to a random basis, which keeps every algebra valid
//! while exercising the solvers on unfamiliar structure constants.

use leibniz_xmod::bider::identities::{collapse_identities, theta_sigma_identity};
use leibniz_xmod::bider::{actor, bider_algebra, bider_qn, bider_xmod, BiderElement, BiderPair};
use leibniz_xmod::catalog::{self, CatalogObject};
use leibniz_xmod::io::{bider_from_json, bider_to_json, Codec};
use leibniz_xmod::scalar::int;
use leibniz_xmod::{
    ActionData, CrossedModule, Field, LeibnizAlgebra, Matrix, Rational, ShortExactSequence,
    Subspace, XModActionData, XModMorphism, F2, F3,
};
use proptest::prelude::*;
use serde_json::Value;

type Q = Rational;

fn matrix(rows: usize, cols: usize, entries: Vec<i64>) -> Matrix<Q> {
    Matrix::from_vec(rows, cols, entries.into_iter().map(int).collect())
}

fn small_matrix() -> impl Strategy<Value = Matrix<Q>> {
    (0usize..5, 0usize..6).prop_flat_map(|(r, c)| {
        prop::collection::vec(-3i64..=3, r * c).prop_map(move |e| matrix(r, c, e))
    })
}

fn invertible(n: usize) -> impl Strategy<Value = Matrix<Q>> {
    prop::collection::vec(-2i64..=2, n * n)
        .prop_map(move |e| matrix(n, n, e))
        .prop_filter("singular", |m| m.inverse().is_some())
}

/// A catalog algebra of dimension at most `cap`, in a random basis.
fn algebra(cap: usize) -> impl Strategy<Value = (LeibnizAlgebra<Q>, Matrix<Q>)> {
    let small: Vec<LeibnizAlgebra<Q>> = catalog::ids_of_kind("algebra")
        .into_iter()
        .map(|id| catalog::algebra(id).unwrap())
        .filter(|a| a.dim() <= cap)
        .collect();
    prop::sample::select(small).prop_flat_map(|a| {
        let n = a.dim();
        invertible(n).prop_map(move |p| (a.transport(&p).unwrap(), p))
    })
}

/// Crossed modules `(I, q, inclusion)` for a distinguished ideal `I` of a
/// randomly based algebra `q`.
fn xmod(cap: usize) -> impl Strategy<Value = CrossedModule<Q>> {
    (algebra(cap), 0usize..4).prop_map(|((a, _), k)| {
        let ideal = match k {
            0 => Subspace::full(a.dim()),
            1 => a.commutator(),
            2 => a.annihilator(),
            _ => Subspace::zero(a.dim()),
        };
        CrossedModule::from_ideal(&a, &ideal).unwrap()
    })
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn rref_is_idempotent(m in small_matrix()) {
        let once = m.rref().matrix;
        prop_assert_eq!(once.rref().matrix, once);
    }

    #[test]
    fn nullspace_vectors_are_killed(m in small_matrix()) {
        let ns = m.nullspace();
        for v in ns.basis_vectors() {
            prop_assert!(m.apply(&v).iter().all(|c| c.is_zero()));
        }
        prop_assert_eq!(ns.dim() + m.rank(), m.cols());
    }

    #[test]
    fn subspace_equality_is_mutual_containment(a in small_matrix(), b in small_matrix()) {
        let cols = a.cols().min(b.cols());
        let first = |m: &Matrix<Q>| m.select(&(0..m.rows()).collect::<Vec<_>>(), &(0..cols).collect::<Vec<_>>());
        let (u, w) = (Subspace::from_rows(first(&a)), Subspace::from_rows(first(&b)));
        let mutual = u.is_subspace_of(&w).unwrap() && w.is_subspace_of(&u).unwrap();
        prop_assert_eq!(u == w, mutual);
        // A shuffled spanning set gives the identical basis.
        let mut rows = u.basis_vectors();
        rows.reverse();
        rows.extend(u.basis_vectors());
        prop_assert_eq!(Subspace::span(cols, rows), u);
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn distinguished_subspaces_are_ideals((a, _) in algebra(6)) {
        prop_assert!(a.validate_leibniz().ok());
        prop_assert!(a.is_ideal(&a.annihilator()).unwrap());
        prop_assert!(a.is_ideal(&a.commutator()).unwrap());
        let ab = a.quotient(&a.commutator()).unwrap();
        prop_assert!(ab.algebra.is_abelian());
    }

    #[test]
    fn invariants_survive_a_change_of_basis((a, p) in algebra(3)) {
        let name = catalog::ids_of_kind("algebra")
            .into_iter()
            .map(|id| catalog::algebra::<Q>(id).unwrap())
            .find(|b| b.transport(&p).ok().as_ref() == Some(&a))
            .expect("came from the catalog");
        prop_assert_eq!(a.annihilator().dim(), name.annihilator().dim());
        prop_assert_eq!(a.commutator().dim(), name.commutator().dim());
        prop_assert_eq!(bider_algebra(&a).unwrap().dim(), bider_algebra(&name).unwrap().dim());
        // The basis change itself is an isomorphism onto the original.
        prop_assert!(a.check_homomorphism(&p, &name).unwrap().ok());
    }

    #[test]
    fn adjoint_semidirect_products_are_leibniz((a, _) in algebra(3)) {
        let action = ActionData::adjoint(&a);
        prop_assert!(action.validate().ok());
        let s = action.semidirect().unwrap();
        prop_assert!(s.algebra.validate_leibniz().ok());
        let n = a.dim();
        for p in 0..n {
            for m in 0..n {
                let (ep, em) = (leibniz_xmod::matrix::unit::<Q>(n, p), leibniz_xmod::matrix::unit::<Q>(n, m));
                let (ip, im) = (s.inclusion_actor.apply(&ep), s.inclusion_target.apply(&em));
                prop_assert_eq!(s.algebra.bracket(&ip, &im), s.inclusion_target.apply(&action.act_left(&ep, &em)));
                prop_assert_eq!(s.algebra.bracket(&im, &ip), s.inclusion_target.apply(&action.act_right(&em, &ep)));
            }
        }
        let target = s.inclusion_target.column_space();
        prop_assert!(s.algebra.is_ideal(&target).unwrap());
        prop_assert!(s.algebra.is_subalgebra(&s.inclusion_actor.column_space()).unwrap());
        prop_assert_eq!(s.projection_actor.nullspace(), target);
    }
}

proptest! {
    #![proptest_config(config(12))]

    #[test]
    fn crossed_module_constructions_stay_valid(x in xmod(3)) {
        prop_assert!(x.validate().ok());
        let (n, _) = x.dims();
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (leibniz_xmod::matrix::unit::<Q>(n, i), leibniz_xmod::matrix::unit::<Q>(n, j));
                let bracket = x.top().bracket(&a, &b);
                prop_assert_eq!(x.act_left(&x.boundary().apply(&a), &b), bracket.clone());
                prop_assert_eq!(x.act_right(&a, &x.boundary().apply(&b)), bracket);
            }
        }
        let c = x.center().unwrap();
        prop_assert!(c.center.xmod.validate().ok());
        prop_assert!(c.center.top.is_subspace_of(&x.invariants()).unwrap());
        prop_assert!(c.center.base.is_subspace_of(&x.stabilizer()).unwrap());

        let a = actor(&x).unwrap();
        prop_assert!(a.xmod.validate().ok());
        let f = a.canonical_morphism().unwrap();
        prop_assert!(f.validate().ok());
        let (k, im) = (f.kernel().unwrap(), f.image().unwrap());
        prop_assert!(k.xmod.validate().ok() && im.xmod.validate().ok());
        prop_assert!(a.xmod.is_ideal(&im.top, &im.base).unwrap());
        if x.conditions().any() {
            prop_assert_eq!(&k.top, &c.center.top);
            prop_assert_eq!(&k.base, &c.center.base);
            prop_assert!(theta_sigma_identity(bider_algebra(x.base()).unwrap().basis()).ok());
        }
        let flags = x.conditions();
        if flags.con2 || flags.con3 || x.top().annihilator().is_zero() {
            let quads = bider_xmod(&x).unwrap();
            prop_assert!(collapse_identities(bider_qn(&x).unwrap().basis(), quads.basis()).ok());
        }
    }

    #[test]
    fn biderivation_algebras_are_closed(x in xmod(3)) {
        let pairs = bider_qn(&x).unwrap();
        let mu = x.boundary();
        for (i, p) in pairs.basis().iter().enumerate() {
            prop_assert!(pairs.solutions().contains(&p.to_flat()));
            let top = BiderPair { d: p.d.mul(mu), big_d: p.big_d.mul(mu) };
            let base = BiderPair { d: mu.mul(&p.d), big_d: mu.mul(&p.big_d) };
            prop_assert!(bider_algebra(x.top()).unwrap().contains(&top));
            prop_assert!(bider_algebra(x.base()).unwrap().contains(&base));
            for (j, p2) in pairs.basis().iter().enumerate() {
                let b = p.bracket(p2, mu);
                let coords = pairs.coordinates(&b).expect("closed under the bracket");
                prop_assert_eq!(&coords[..], pairs.algebra().bracket_basis(i, j));
            }
        }
        prop_assert!(pairs.algebra().validate_leibniz().ok());
        let quads = bider_xmod(&x).unwrap();
        for (i, s) in quads.basis().iter().enumerate() {
            for (j, s2) in quads.basis().iter().enumerate() {
                prop_assert_eq!(&quads.coordinates(&s.bracket(s2)).unwrap()[..], quads.algebra().bracket_basis(i, j));
            }
        }
        prop_assert!(quads.algebra().validate_leibniz().ok());
    }

    #[test]
    fn conjugation_round_trips(x in xmod(3)) {
        let a = actor(&x).unwrap();
        let d = XModActionData::conjugation(&x);
        prop_assert!(d.validate().ok());
        let s = d.semidirect_xmod().unwrap();
        prop_assert!(s.check_split().ok());
        if a.flags.any() {
            let f = d.morphism_from_action(&a).unwrap();
            prop_assert_eq!(&f, &a.canonical_morphism().unwrap());
            prop_assert_eq!(XModActionData::action_from_morphism(&f, &a).unwrap(), d);
        }
    }

    #[test]
    fn morphisms_into_the_actor_round_trip(y in xmod(3), source in 0usize..4) {
        let a = actor(&y).unwrap();
        prop_assume!(a.flags.any());
        let ids = catalog::ids_of_kind("crossed-module");
        let src = catalog::crossed_module::<Q>(ids[source]).unwrap();
        for f in [a.canonical_morphism().unwrap(), XModMorphism::zero(&src, &a.xmod)] {
            let d = XModActionData::action_from_morphism(&f, &a).unwrap();
            prop_assert!(d.validate().ok());
            prop_assert_eq!(d.morphism_from_action(&a).unwrap(), f);
        }
    }
}

fn round_trip<F: Field, T: Codec<F> + PartialEq + std::fmt::Debug>(x: &T) {
    let doc = x.to_json();
    let text = serde_json::to_string(&doc).unwrap();
    let back = T::from_json(&serde_json::from_str::<Value>(&text).unwrap()).unwrap();
    assert_eq!(&back, x);
}

fn round_trip_everything<F: Field>() {
    for id in catalog::ids() {
        match catalog::load::<F>(id).unwrap().object {
            CatalogObject::Algebra(a) => {
                round_trip(&a);
                let b = bider_algebra(&a).unwrap();
                let input = a.to_json();
                assert_eq!(
                    bider_from_json::<F, BiderPair<F>>(&bider_to_json(&b, &input)).unwrap(),
                    b
                );
                round_trip(&ActionData::adjoint(&a));
            }
            CatalogObject::CrossedModule(x) => {
                round_trip(&x);
                let input = x.to_json();
                let a = actor(&x).unwrap();
                round_trip(&a.xmod);
                round_trip(&a.canonical_morphism().unwrap());
                assert_eq!(
                    bider_from_json::<F, _>(&bider_to_json(&a.pairs, &input)).unwrap(),
                    a.pairs
                );
                assert_eq!(
                    bider_from_json::<F, _>(&bider_to_json(&a.quads, &input)).unwrap(),
                    a.quads
                );
                round_trip(&x.center().unwrap().center.xmod);
                round_trip(&a.outer().unwrap().xmod);
                round_trip(&XModActionData::conjugation(&x));
            }
            CatalogObject::Action(d) => {
                round_trip(&d);
                if d.validate().ok() {
                    let s = d.semidirect_xmod().unwrap();
                    round_trip(&s.xmod);
                    round_trip(&s.section);
                }
            }
            CatalogObject::Sequence(s) => round_trip::<F, ShortExactSequence<F>>(&s),
        }
    }
}

#[test]
fn every_catalog_entry_and_result_survives_serialization() {
    round_trip_everything::<Q>();
    round_trip_everything::<F2>();
    round_trip_everything::<F3>();
}

#[test]
fn lie_crossed_modules_have_diagonal_pairs() {
    for id in ["sl2-id", "sl2-in-sl2xsl2"] {
        let x = catalog::crossed_module::<Q>(id).unwrap();
        assert!(x.top().is_lie() && x.base().is_lie() && x.conditions().any());
        let pairs = bider_qn(&x).unwrap();
        assert!(pairs.basis().iter().all(|p| p.d == p.big_d), "{id}");
        let s = pairs.algebra().structure();
        for i in 0..pairs.dim() {
            for j in 0..pairs.dim() {
                let neg: Vec<Q> = s.basis(j, i).iter().map(|c| -c.clone()).collect();
                assert_eq!(s.basis(i, j), &neg[..], "{id}");
            }
        }
    }
}
