//! JSON encoding of every object the crate reads or writes.
//!
//! Scalars: rationals are strings `"a/b"` in lowest terms (`"a"` when the
//! denominator is 1), prime-field elements are integers. Both forms are
//! accepted on input. Matrices are row-major nested arrays. Bilinear maps
//! and brackets use sparse triples `[i, j, [[k, c], ...]]` with zero
//! entries omitted.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::action::ActionData;
use crate::algebra::LeibnizAlgebra;
use crate::bider::{BiderAlgebra, BiderKind, BiderPair, BiderQuad, ShortExactSequence};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, FieldTag};
use crate::subspace::Subspace;
use crate::tensor::Bilinear;
use crate::xaction::XModActionData;
use crate::xmod::{CrossedModule, XModMorphism};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub trait Codec<F: Field>: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

pub fn scalar_to_json<F: Field>(x: &F) -> Value {
    match F::TAG {
        FieldTag::Rational => Value::String(x.to_string()),
        FieldTag::Prime(_) => Value::Number(
            x.to_string()
                .parse::<u64>()
                .expect("prime field elements print as integers")
                .into(),
        ),
    }
}

pub fn scalar_from_json<F: Field>(v: &Value) -> Result<F> {
    match v {
        Value::String(s) => F::parse(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => F::parse(&n.to_string()),
        other => Err(parse_err(format!("expected a scalar, found {other}"))),
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| parse_err(format!("missing key {key:?}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| parse_err(format!("{what} must be an array")))
}

fn index(v: &Value, bound: usize, what: &str) -> Result<usize> {
    let i = v
        .as_u64()
        .ok_or_else(|| parse_err(format!("{what} must be a non-negative integer")))?
        as usize;
    if i >= bound {
        return Err(parse_err(format!(
            "{what} {i} out of range (dimension {bound})"
        )));
    }
    Ok(i)
}

fn usize_of(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| parse_err(format!("{key:?} must be a non-negative integer")))
}

pub fn matrix_to_json<F: Field>(m: &Matrix<F>) -> Value {
    Value::Array(
        m.row_vectors()
            .map(|r| Value::Array(r.iter().map(scalar_to_json).collect()))
            .collect(),
    )
}

/// Reads a matrix whose shape is fixed by context.
pub fn matrix_from_json<F: Field>(v: &Value, rows: usize, cols: usize) -> Result<Matrix<F>> {
    let rs = array(v, "matrix")?;
    if rs.len() != rows {
        return Err(parse_err(format!(
            "matrix has {} rows, expected {rows}",
            rs.len()
        )));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for r in rs {
        let r = array(r, "matrix row")?;
        if r.len() != cols {
            return Err(parse_err(format!(
                "matrix row has {} entries, expected {cols}",
                r.len()
            )));
        }
        for x in r {
            data.push(scalar_from_json(x)?);
        }
    }
    Ok(Matrix::from_vec(rows, cols, data))
}

pub fn tensor_to_json<F: Field>(t: &Bilinear<F>) -> Value {
    let (l, r, _) = t.shape();
    let mut out = Vec::new();
    for i in 0..l {
        for j in 0..r {
            let entries: Vec<Value> = t
                .basis(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| json!([k, scalar_to_json(c)]))
                .collect();
            if !entries.is_empty() {
                out.push(json!([i, j, entries]));
            }
        }
    }
    Value::Array(out)
}

pub fn tensor_from_json<F: Field>(v: &Value, shape: (usize, usize, usize)) -> Result<Bilinear<F>> {
    let (l, r, o) = shape;
    let mut t = Bilinear::zeros(l, r, o);
    let mut seen = std::collections::BTreeSet::new();
    for triple in array(v, "bilinear map")? {
        let triple = array(triple, "sparse triple")?;
        if triple.len() != 3 {
            return Err(parse_err("sparse triple must have three entries"));
        }
        let i = index(&triple[0], l, "left index")?;
        let j = index(&triple[1], r, "right index")?;
        if !seen.insert((i, j)) {
            return Err(parse_err(format!("pair ({i}, {j}) listed twice")));
        }
        let mut value = vec![F::zero(); o];
        for entry in array(&triple[2], "bracket value")? {
            let entry = array(entry, "coefficient")?;
            if entry.len() != 2 {
                return Err(parse_err("coefficient must be [index, scalar]"));
            }
            let k = index(&entry[0], o, "output index")?;
            value[k] = value[k].clone() + scalar_from_json(&entry[1])?;
        }
        t.set(i, j, &value);
    }
    Ok(t)
}

/// Rejects a document whose optional `"field"` key names another field.
pub fn check_field<F: Field>(v: &Value) -> Result<()> {
    match v.get("field") {
        None => Ok(()),
        Some(Value::String(s)) if s.eq_ignore_ascii_case(&F::TAG.to_string()) => Ok(()),
        Some(other) => Err(parse_err(format!(
            "document is over {other}, command runs over {}",
            F::TAG
        ))),
    }
}

/// SHA-256 of the compact serialization (keys sorted).
pub fn digest(v: &Value) -> String {
    hex::encode(Sha256::digest(v.to_string().as_bytes()))
}

impl<F: Field> Codec<F> for LeibnizAlgebra<F> {
    fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("dim".into(), json!(self.dim()));
        if let Some(names) = self.names() {
            m.insert("names".into(), json!(names));
        }
        m.insert("brackets".into(), tensor_to_json(self.structure()));
        Value::Object(m)
    }

    fn from_json(v: &Value) -> Result<Self> {
        let dim = usize_of(v, "dim")?;
        let t = tensor_from_json(field(v, "brackets")?, (dim, dim, dim))?;
        let a = LeibnizAlgebra::new(t)?;
        match v.get("names") {
            None => Ok(a),
            Some(names) => {
                let names = array(names, "names")?
                    .iter()
                    .map(|n| {
                        n.as_str()
                            .map(str::to_string)
                            .ok_or_else(|| parse_err("names must be strings"))
                    })
                    .collect::<Result<Vec<_>>>()?;
                a.with_names(names)
            }
        }
    }
}

fn action_tensors_to_json<F: Field>(a: &ActionData<F>) -> Value {
    json!({ "left": tensor_to_json(&a.left), "right": tensor_to_json(&a.right) })
}

fn action_tensors_from_json<F: Field>(
    v: &Value,
    actor: &LeibnizAlgebra<F>,
    target: &LeibnizAlgebra<F>,
) -> Result<ActionData<F>> {
    let (p, m) = (actor.dim(), target.dim());
    let left = tensor_from_json(field(v, "left")?, (p, m, m))?;
    let right = tensor_from_json(field(v, "right")?, (m, p, m))?;
    ActionData::new(actor.clone(), target.clone(), left, right)
}

impl<F: Field> Codec<F> for ActionData<F> {
    fn to_json(&self) -> Value {
        let mut v = action_tensors_to_json(self);
        v["actor"] = self.actor.to_json();
        v["target"] = self.target.to_json();
        v
    }

    fn from_json(v: &Value) -> Result<Self> {
        let actor = LeibnizAlgebra::from_json(field(v, "actor")?)?;
        let target = LeibnizAlgebra::from_json(field(v, "target")?)?;
        action_tensors_from_json(v, &actor, &target)
    }
}

impl<F: Field> Codec<F> for CrossedModule<F> {
    fn to_json(&self) -> Value {
        json!({
            "top": self.top().to_json(),
            "base": self.base().to_json(),
            "boundary": matrix_to_json(self.boundary()),
            "action": action_tensors_to_json(self.action()),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let top = LeibnizAlgebra::from_json(field(v, "top")?)?;
        let base = LeibnizAlgebra::from_json(field(v, "base")?)?;
        let boundary = matrix_from_json(field(v, "boundary")?, base.dim(), top.dim())?;
        let action = action_tensors_from_json(field(v, "action")?, &base, &top)?;
        CrossedModule::new(action, boundary)
    }
}

impl<F: Field> Codec<F> for XModMorphism<F> {
    fn to_json(&self) -> Value {
        json!({
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "top_map": matrix_to_json(&self.top_map),
            "base_map": matrix_to_json(&self.base_map),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let source = CrossedModule::from_json(field(v, "source")?)?;
        let target = CrossedModule::from_json(field(v, "target")?)?;
        maps_from_json(v, source, target)
    }
}

/// Reads `"top_map"` and `"base_map"` between known crossed modules.
pub fn maps_from_json<F: Field>(
    v: &Value,
    source: CrossedModule<F>,
    target: CrossedModule<F>,
) -> Result<XModMorphism<F>> {
    let (sn, sq) = source.dims();
    let (tn, tq) = target.dims();
    let top = matrix_from_json(field(v, "top_map")?, tn, sn)?;
    let base = matrix_from_json(field(v, "base_map")?, tq, sq)?;
    XModMorphism::new(source, target, top, base)
}

fn maps_to_json<F: Field>(f: &XModMorphism<F>) -> Value {
    json!({ "top_map": matrix_to_json(&f.top_map), "base_map": matrix_to_json(&f.base_map) })
}

impl<F: Field> Codec<F> for XModActionData<F> {
    fn to_json(&self) -> Value {
        json!({
            "actor": self.actor.to_json(),
            "target": self.target.to_json(),
            "p_on_n": action_tensors_to_json(&self.p_on_n),
            "p_on_q": action_tensors_to_json(&self.p_on_q),
            "xi1": tensor_to_json(&self.xi1),
            "xi2": tensor_to_json(&self.xi2),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let actor = CrossedModule::from_json(field(v, "actor")?)?;
        let target = CrossedModule::from_json(field(v, "target")?)?;
        let (nm, _) = actor.dims();
        let (nn, nq) = target.dims();
        let p_on_n = action_tensors_from_json(field(v, "p_on_n")?, actor.base(), target.top())?;
        let p_on_q = action_tensors_from_json(field(v, "p_on_q")?, actor.base(), target.base())?;
        let xi1 = tensor_from_json(field(v, "xi1")?, (nm, nq, nn))?;
        let xi2 = tensor_from_json(field(v, "xi2")?, (nq, nm, nn))?;
        XModActionData::new(actor, target, p_on_n, p_on_q, xi1, xi2)
    }
}

impl<F: Field> Codec<F> for ShortExactSequence<F> {
    fn to_json(&self) -> Value {
        json!({
            "sub": self.inclusion.source.to_json(),
            "middle": self.inclusion.target.to_json(),
            "quotient": self.projection.target.to_json(),
            "inclusion": maps_to_json(&self.inclusion),
            "projection": maps_to_json(&self.projection),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let sub = CrossedModule::from_json(field(v, "sub")?)?;
        let middle = CrossedModule::from_json(field(v, "middle")?)?;
        let quotient = CrossedModule::from_json(field(v, "quotient")?)?;
        let inclusion = maps_from_json(field(v, "inclusion")?, sub, middle.clone())?;
        let projection = maps_from_json(field(v, "projection")?, middle, quotient)?;
        ShortExactSequence::new(inclusion, projection)
    }
}

impl<F: Field> Codec<F> for Subspace<F> {
    fn to_json(&self) -> Value {
        json!({ "ambient": self.ambient_dim(), "basis": matrix_to_json(self.basis()) })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let ambient = usize_of(v, "ambient")?;
        let rows = array(field(v, "basis")?, "basis")?.len();
        Ok(Subspace::from_rows(matrix_from_json(
            field(v, "basis")?,
            rows,
            ambient,
        )?))
    }
}

/// How one kind of solution element is written out.
pub trait ElementCodec<F: Field>: Sized {
    fn element_to_json(&self) -> Value;
    fn element_from_json(v: &Value, shape: (usize, usize)) -> Result<Self>;
}

impl<F: Field> ElementCodec<F> for BiderPair<F> {
    fn element_to_json(&self) -> Value {
        json!({ "d": matrix_to_json(&self.d), "D": matrix_to_json(&self.big_d) })
    }

    fn element_from_json(v: &Value, (n, q): (usize, usize)) -> Result<Self> {
        Ok(BiderPair {
            d: matrix_from_json(field(v, "d")?, n, q)?,
            big_d: matrix_from_json(field(v, "D")?, n, q)?,
        })
    }
}

impl<F: Field> ElementCodec<F> for BiderQuad<F> {
    fn element_to_json(&self) -> Value {
        json!({
            "sigma1": matrix_to_json(&self.sigma1),
            "theta1": matrix_to_json(&self.theta1),
            "sigma2": matrix_to_json(&self.sigma2),
            "theta2": matrix_to_json(&self.theta2),
        })
    }

    fn element_from_json(v: &Value, (n, q): (usize, usize)) -> Result<Self> {
        Ok(BiderQuad {
            sigma1: matrix_from_json(field(v, "sigma1")?, n, n)?,
            theta1: matrix_from_json(field(v, "theta1")?, n, n)?,
            sigma2: matrix_from_json(field(v, "sigma2")?, q, q)?,
            theta2: matrix_from_json(field(v, "theta2")?, q, q)?,
        })
    }
}

fn kind_from_name(s: &str) -> Result<BiderKind> {
    [
        BiderKind::Algebra,
        BiderKind::BaseToTop,
        BiderKind::CrossedModule,
    ]
    .into_iter()
    .find(|k| k.name() == s)
    .ok_or_else(|| parse_err(format!("unknown biderivation kind {s:?}")))
}

/// A solution space together with the digest of the input it was
/// computed from.
pub fn bider_to_json<F, E>(b: &BiderAlgebra<F, E>, input: &Value) -> Value
where
    F: Field,
    E: crate::bider::BiderElement<F> + ElementCodec<F>,
{
    json!({
        "kind": b.kind().name(),
        "input_digest": digest(input),
        "shape": [b.shape().0, b.shape().1],
        "basis": b.basis().iter().map(ElementCodec::element_to_json).collect::<Vec<_>>(),
        "algebra": b.algebra().to_json(),
    })
}

pub fn bider_from_json<F, E>(v: &Value) -> Result<BiderAlgebra<F, E>>
where
    F: Field,
    E: crate::bider::BiderElement<F> + ElementCodec<F>,
{
    let kind = kind_from_name(
        field(v, "kind")?
            .as_str()
            .ok_or_else(|| parse_err("kind must be a string"))?,
    )?;
    let shape = array(field(v, "shape")?, "shape")?;
    if shape.len() != 2 {
        return Err(parse_err("shape must have two entries"));
    }
    let dim = |x: &Value| {
        x.as_u64()
            .map(|d| d as usize)
            .ok_or_else(|| parse_err("shape entries must be integers"))
    };
    let shape = (dim(&shape[0])?, dim(&shape[1])?);
    let basis = array(field(v, "basis")?, "basis")?
        .iter()
        .map(|e| E::element_from_json(e, shape))
        .collect::<Result<Vec<_>>>()?;
    let algebra = LeibnizAlgebra::from_json(field(v, "algebra")?)?;
    BiderAlgebra::from_parts(kind, shape, basis, algebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bider::{bider_algebra, bider_xmod};
    use crate::scalar::{int, Rational, F3};

    type Q = Rational;

    fn l2<F: Field>() -> LeibnizAlgebra<F> {
        LeibnizAlgebra::from_brackets(2, &[(0, 0, vec![(1, int(1))])]).unwrap()
    }

    #[test]
    fn scalar_formats() {
        assert_eq!(scalar_to_json(&Q::new(-3, 6)), json!("-1/2"));
        assert_eq!(scalar_to_json(&Q::new(4, 1)), json!("4"));
        assert_eq!(scalar_to_json(&F3::new(5)), json!(2));
        assert_eq!(scalar_from_json::<Q>(&json!(7)).unwrap(), int(7));
        assert_eq!(scalar_from_json::<F3>(&json!("1/2")).unwrap(), F3::new(2));
        assert!(scalar_from_json::<Q>(&json!("x")).is_err());
        assert!(scalar_from_json::<Q>(&json!(1.5)).is_err());
    }

    #[test]
    fn algebra_round_trip_and_layout() {
        let a: LeibnizAlgebra<Q> = l2();
        let v = a.to_json();
        assert_eq!(v, json!({"dim": 2, "brackets": [[0, 0, [[1, "1"]]]]}));
        assert_eq!(LeibnizAlgebra::from_json(&v).unwrap(), a);
        let named = a.with_names(vec!["x".into(), "y".into()]).unwrap();
        assert_eq!(LeibnizAlgebra::from_json(&named.to_json()).unwrap(), named);
    }

    #[test]
    fn malformed_documents() {
        let bad = [
            json!({"dim": 2}),
            json!({"dim": 2, "brackets": [[0, 2, []]]}),
            json!({"dim": 2, "brackets": [[0, 0, [[1, "1"]]], [0, 0, []]]}),
            json!({"dim": 1, "brackets": [[0, 0, [[0]]]]}),
            json!({"dim": "two", "brackets": []}),
        ];
        for v in bad {
            assert!(
                matches!(LeibnizAlgebra::<Q>::from_json(&v), Err(Error::Parse(_))),
                "{v}"
            );
        }
    }

    #[test]
    fn field_mismatch_is_rejected() {
        assert!(check_field::<Q>(&json!({"field": "F2"})).is_err());
        assert!(check_field::<Q>(&json!({"field": "Q"})).is_ok());
        assert!(check_field::<F3>(&json!({"field": "f3"})).is_ok());
        assert!(check_field::<F3>(&json!({})).is_ok());
    }

    #[test]
    fn crossed_module_and_bider_round_trip() {
        let x = CrossedModule::identity_of(&l2::<Q>());
        let v = x.to_json();
        assert_eq!(CrossedModule::from_json(&v).unwrap(), x);
        let quads = bider_xmod(&x).unwrap();
        let w = bider_to_json(&quads, &v);
        assert_eq!(bider_from_json::<Q, BiderQuad<Q>>(&w).unwrap(), quads);
        let pairs = bider_algebra(&l2::<Q>()).unwrap();
        let w = bider_to_json(&pairs, &l2::<Q>().to_json());
        assert_eq!(bider_from_json::<Q, BiderPair<Q>>(&w).unwrap(), pairs);
        assert_eq!(w["input_digest"].as_str().unwrap().len(), 64);
    }

    #[test]
    fn zero_dimensional_objects() {
        let z = CrossedModule::<Q>::zero();
        assert_eq!(CrossedModule::from_json(&z.to_json()).unwrap(), z);
        let x = CrossedModule::zero_top(&l2::<Q>());
        assert_eq!(CrossedModule::from_json(&x.to_json()).unwrap(), x);
    }
}
