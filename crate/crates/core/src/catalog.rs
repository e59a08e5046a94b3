//! Built-in fixtures: small algebras, crossed modules, action data and an
//! exact sequence. Every entry is validated when loaded.

use crate::algebra::LeibnizAlgebra;
use crate::bider::{actor, ShortExactSequence};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{int, Field};
use crate::subspace::Subspace;
use crate::xaction::XModActionData;
use crate::xmod::{CrossedModule, XModMorphism};

#[derive(Debug, Clone)]
pub enum CatalogObject<F> {
    Algebra(LeibnizAlgebra<F>),
    CrossedModule(CrossedModule<F>),
    Action(XModActionData<F>),
    Sequence(ShortExactSequence<F>),
}

impl<F> CatalogObject<F> {
    pub fn kind(&self) -> &'static str {
        match self {
            CatalogObject::Algebra(_) => "algebra",
            CatalogObject::CrossedModule(_) => "crossed-module",
            CatalogObject::Action(_) => "action",
            CatalogObject::Sequence(_) => "sequence",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry<F> {
    pub id: &'static str,
    pub note: &'static str,
    pub object: CatalogObject<F>,
}

/// Entries whose action data satisfy only the axioms the forward
/// direction needs.
pub const FORWARD_ONLY: [&str; 1] = ["forward-only-action"];

const ENTRIES: [(&str, &str); 20] = [
    ("A1", "abelian, dimension 1"),
    ("A2", "abelian, dimension 2"),
    ("L2", "[e1,e1] = e2; non-Lie, Ann = span{e2}"),
    ("sl2", "basis e, h, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h"),
    ("r2", "[x,y] = y; centerless, not perfect"),
    ("sl2-heis3", "sl2 acting on the Heisenberg algebra span{x,y,z}, [x,y] = z; perfect with center span{z}"),
    ("zero-L2", "(0, L2, 0)"),
    ("q-q-id-L2", "(L2, L2, id)"),
    ("n-in-L2", "(span{e2}, L2, inclusion)"),
    ("sl2-id", "(sl2, sl2, id); CON1, CON2, CON3"),
    ("A1-id", "(A1, A1, id); no condition holds"),
    ("r2-id", "(r2, r2, id); CON1 only"),
    ("A2-id", "(A2, A2, id)"),
    ("zero-sl2-heis3", "(0, sl2-heis3, 0); CON2 and CON3 without CON1"),
    ("sl2-in-sl2xsl2", "Lie crossed module: first summand of sl2 + sl2 as an ideal; CON1, CON2, CON3"),
    ("sl2-selfaction", "(sl2, sl2, id) acting on itself by the bracket"),
    ("zero-action", "(A2, A2, id) acting on (L2, L2, id) by zero"),
    (
        "forward-only-action",
        "read back from the identity of the actor of (A1, A1, id); fails only LbM6a, LbM6b and the sixth p-action identity, yet maps to a valid morphism",
    ),
    ("sl2-split", "0 -> (sl2, sl2, id) -> product with (A1, A1, id) -> (A1, A1, id) -> 0"),
    ("n-in-L2-zero", "(span{e2}, L2, inclusion) acting on (0, L2, 0) by zero"),
];

pub fn ids() -> Vec<&'static str> {
    ENTRIES.iter().map(|(id, _)| *id).collect()
}

fn names<F: Field>(a: LeibnizAlgebra<F>, names: &[&str]) -> LeibnizAlgebra<F> {
    a.with_names(names.iter().map(|s| s.to_string()).collect())
        .expect("one name per basis vector")
}

pub fn l2<F: Field>() -> LeibnizAlgebra<F> {
    names(
        LeibnizAlgebra::from_brackets(2, &[(0, 0, vec![(1, int(1))])]).expect("fixed"),
        &["e1", "e2"],
    )
}

pub fn sl2<F: Field>() -> LeibnizAlgebra<F> {
    let a = LeibnizAlgebra::from_brackets(
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
    .expect("fixed");
    names(a, &["e", "h", "f"])
}

pub fn r2<F: Field>() -> LeibnizAlgebra<F> {
    let a =
        LeibnizAlgebra::from_brackets(2, &[(0, 1, vec![(1, int(1))]), (1, 0, vec![(1, int(-1))])])
            .expect("fixed");
    names(a, &["x", "y"])
}

/// Basis e, h, f, x, y, z; x, y span the standard representation.
pub fn sl2_heis3<F: Field>() -> LeibnizAlgebra<F> {
    let mut brackets: Vec<(usize, usize, Vec<(usize, F)>)> = vec![
        (1, 0, vec![(0, int(2))]),
        (0, 1, vec![(0, int(-2))]),
        (1, 2, vec![(2, int(-2))]),
        (2, 1, vec![(2, int(2))]),
        (0, 2, vec![(1, int(1))]),
        (2, 0, vec![(1, int(-1))]),
        (3, 4, vec![(5, int(1))]),
        (4, 3, vec![(5, int(-1))]),
    ];
    // s . v for s in {e, h, f}, v in {x, y}.
    let rep: [(usize, usize, usize, i64); 4] =
        [(0, 4, 3, 1), (1, 3, 3, 1), (1, 4, 4, -1), (2, 3, 4, 1)];
    for (s, v, out, c) in rep {
        brackets.push((s, v, vec![(out, int(c))]));
        brackets.push((v, s, vec![(out, int(-c))]));
    }
    let a = LeibnizAlgebra::from_brackets(6, &brackets).expect("fixed");
    names(a, &["e", "h", "f", "x", "y", "z"])
}

fn n_in_l2<F: Field>() -> CrossedModule<F> {
    let e2 = Subspace::span(2, vec![vec![F::zero(), F::one()]]);
    CrossedModule::from_ideal(&l2(), &e2).expect("span{e2} is an ideal of L2")
}

fn sl2_in_sum<F: Field>() -> CrossedModule<F> {
    let q = sl2::<F>().direct_sum(&sl2());
    let first = Subspace::span(6, (0..3).map(|i| crate::matrix::unit(6, i)).collect());
    CrossedModule::from_ideal(&q, &first).expect("a summand is an ideal")
}

fn split_sequence<F: Field>() -> Result<ShortExactSequence<F>> {
    let x = CrossedModule::identity_of(&sl2::<F>());
    let y = CrossedModule::identity_of(&LeibnizAlgebra::<F>::abelian(1));
    let mid = x.direct_product(&y);
    let incl = Matrix::from_fn(4, 3, |i, j| if i == j { F::one() } else { F::zero() });
    let proj = Matrix::from_fn(1, 4, |_, j| if j == 3 { F::one() } else { F::zero() });
    ShortExactSequence::new(
        XModMorphism::new(x, mid.clone(), incl.clone(), incl)?,
        XModMorphism::new(mid, y, proj.clone(), proj)?,
    )
}

fn forward_only<F: Field>() -> Result<XModActionData<F>> {
    let y = CrossedModule::identity_of(&LeibnizAlgebra::<F>::abelian(1));
    let a = actor(&y)?;
    XModActionData::action_from_morphism_unchecked(&XModMorphism::identity(&a.xmod), &a)
}

fn build<F: Field>(id: &str) -> Result<CatalogObject<F>> {
    use CatalogObject::*;
    Ok(match id {
        "A1" => Algebra(names(LeibnizAlgebra::abelian(1), &["a"])),
        "A2" => Algebra(names(LeibnizAlgebra::abelian(2), &["a1", "a2"])),
        "L2" => Algebra(l2()),
        "sl2" => Algebra(sl2()),
        "r2" => Algebra(r2()),
        "sl2-heis3" => Algebra(sl2_heis3()),
        "zero-L2" => CrossedModule(crate::xmod::CrossedModule::zero_top(&l2())),
        "q-q-id-L2" => CrossedModule(crate::xmod::CrossedModule::identity_of(&l2())),
        "n-in-L2" => CrossedModule(n_in_l2()),
        "sl2-id" => CrossedModule(crate::xmod::CrossedModule::identity_of(&sl2())),
        "A1-id" => CrossedModule(crate::xmod::CrossedModule::identity_of(
            &LeibnizAlgebra::abelian(1),
        )),
        "r2-id" => CrossedModule(crate::xmod::CrossedModule::identity_of(&r2())),
        "A2-id" => CrossedModule(crate::xmod::CrossedModule::identity_of(
            &LeibnizAlgebra::abelian(2),
        )),
        "zero-sl2-heis3" => CrossedModule(crate::xmod::CrossedModule::zero_top(&sl2_heis3())),
        "sl2-in-sl2xsl2" => CrossedModule(sl2_in_sum()),
        "sl2-selfaction" => Action(XModActionData::conjugation(
            &crate::xmod::CrossedModule::identity_of(&sl2()),
        )),
        "zero-action" => Action(XModActionData::zero(
            &crate::xmod::CrossedModule::identity_of(&LeibnizAlgebra::abelian(2)),
            &crate::xmod::CrossedModule::identity_of(&l2()),
        )),
        "forward-only-action" => Action(forward_only()?),
        "n-in-L2-zero" => Action(XModActionData::zero(
            &n_in_l2(),
            &crate::xmod::CrossedModule::zero_top(&l2()),
        )),
        "sl2-split" => Sequence(split_sequence()?),
        _ => return Err(Error::UnknownCatalogEntry(id.to_string())),
    })
}

fn check<F: Field>(id: &str, obj: &CatalogObject<F>) -> Result<()> {
    let fail = |what: String| Err(Error::Invalid(format!("catalog entry {id}: {what}")));
    match obj {
        CatalogObject::Algebra(a) => {
            let r = a.validate_leibniz();
            if !r.ok() {
                return fail(r.to_string());
            }
        }
        CatalogObject::CrossedModule(x) => {
            let r = x.validate();
            if !r.ok() {
                return fail(r.to_string());
            }
        }
        CatalogObject::Action(d) => {
            let r = if FORWARD_ONLY.contains(&id) {
                d.validate_forward()
            } else {
                d.validate()
            };
            if !r.ok() {
                return fail(r.to_string());
            }
        }
        CatalogObject::Sequence(s) => s.check_exact()?,
    }
    Ok(())
}

/// Builds and validates one entry.
pub fn load<F: Field>(id: &str) -> Result<CatalogEntry<F>> {
    let (id, note) = ENTRIES
        .iter()
        .find(|(k, _)| *k == id)
        .copied()
        .ok_or_else(|| Error::UnknownCatalogEntry(id.to_string()))?;
    let object = build(id)?;
    check(id, &object)?;
    Ok(CatalogEntry { id, note, object })
}

pub fn algebra<F: Field>(id: &str) -> Result<LeibnizAlgebra<F>> {
    match load(id)?.object {
        CatalogObject::Algebra(a) => Ok(a),
        other => Err(Error::Invalid(format!(
            "{id} is a {}, not an algebra",
            other.kind()
        ))),
    }
}

pub fn crossed_module<F: Field>(id: &str) -> Result<CrossedModule<F>> {
    match load(id)?.object {
        CatalogObject::CrossedModule(x) => Ok(x),
        other => Err(Error::Invalid(format!(
            "{id} is a {}, not a crossed module",
            other.kind()
        ))),
    }
}

pub fn action<F: Field>(id: &str) -> Result<XModActionData<F>> {
    match load(id)?.object {
        CatalogObject::Action(d) => Ok(d),
        other => Err(Error::Invalid(format!(
            "{id} is a {}, not action data",
            other.kind()
        ))),
    }
}

pub fn sequence<F: Field>(id: &str) -> Result<ShortExactSequence<F>> {
    match load(id)?.object {
        CatalogObject::Sequence(s) => Ok(s),
        other => Err(Error::Invalid(format!(
            "{id} is a {}, not a sequence",
            other.kind()
        ))),
    }
}

/// Ids of every entry of one kind.
pub fn ids_of_kind(kind: &str) -> Vec<&'static str> {
    ids()
        .into_iter()
        .filter(|id| {
            build::<crate::scalar::F2>(id)
                .map(|o| o.kind() == kind)
                .unwrap_or(false)
        })
        .collect()
}
