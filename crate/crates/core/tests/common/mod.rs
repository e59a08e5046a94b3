//! Independent brute-force oracles over F2. Vectors are bitmasks, linear
//! maps are lists of column bitmasks and every check is done by plain
//! enumeration, without touching the library's solvers.

#![allow(dead_code)]

use leibniz_xmod::{Bilinear, CrossedModule, Field, LeibnizAlgebra, Matrix, F2};
use rand::Rng;

pub type Vector = u8;

/// Bilinear map on bitmask vectors: `table[i * right + j]` is `f(e_i, e_j)`.
#[derive(Clone, Debug)]
pub struct Table {
    pub left: usize,
    pub right: usize,
    pub table: Vec<Vector>,
}

impl Table {
    pub fn apply(&self, x: Vector, y: Vector) -> Vector {
        let mut out = 0;
        for i in 0..self.left {
            if x >> i & 1 == 1 {
                for j in 0..self.right {
                    if y >> j & 1 == 1 {
                        out ^= self.table[i * self.right + j];
                    }
                }
            }
        }
        out
    }

    pub fn from_bilinear(b: &Bilinear<F2>) -> Self {
        let (l, r, _) = b.shape();
        let table = (0..l)
            .flat_map(|i| (0..r).map(move |j| (i, j)))
            .map(|(i, j)| pack(b.basis(i, j)))
            .collect();
        Table {
            left: l,
            right: r,
            table,
        }
    }

    pub fn to_bilinear(&self, out: usize) -> Bilinear<F2> {
        Bilinear::from_fn(self.left, self.right, out, |i, j| {
            unpack(self.table[i * self.right + j], out)
        })
    }
}

pub fn pack(v: &[F2]) -> Vector {
    v.iter().enumerate().fold(
        0,
        |acc, (k, c)| if c.is_zero() { acc } else { acc | 1 << k },
    )
}

pub fn unpack(v: Vector, dim: usize) -> Vec<F2> {
    (0..dim).map(|k| F2::new((v >> k & 1) as i64)).collect()
}

/// Linear map as its column images.
pub fn apply_map(cols: &[Vector], x: Vector) -> Vector {
    cols.iter()
        .enumerate()
        .fold(0, |acc, (j, c)| if x >> j & 1 == 1 { acc ^ c } else { acc })
}

/// All linear maps from dimension `src` to dimension `dst`.
pub fn all_maps(src: usize, dst: usize) -> Vec<Vec<Vector>> {
    let total = 1usize << (src * dst);
    (0..total)
        .map(|bits| {
            (0..src)
                .map(|j| ((bits >> (j * dst)) & ((1 << dst) - 1)) as Vector)
                .collect()
        })
        .collect()
}

/// Row-major entries of a map given by columns, as flat F2 coordinates.
pub fn flatten(cols: &[Vector], rows: usize) -> Vec<F2> {
    let mut v = Vec::with_capacity(rows * cols.len());
    for r in 0..rows {
        for c in cols {
            v.push(F2::new((c >> r & 1) as i64));
        }
    }
    v
}

pub fn basis(dim: usize) -> impl Iterator<Item = Vector> {
    (0..dim).map(|i| 1 << i)
}

pub fn is_leibniz(t: &Table, dim: usize) -> bool {
    basis(dim).all(|x| {
        basis(dim).all(|y| {
            basis(dim).all(|z| {
                t.apply(t.apply(x, y), z) == t.apply(x, t.apply(y, z)) ^ t.apply(t.apply(x, z), y)
            })
        })
    })
}

/// An F2 crossed module in bitmask form.
#[derive(Clone, Debug)]
pub struct OracleXMod {
    pub n: usize,
    pub q: usize,
    pub top: Table,
    pub base: Table,
    /// `[q, n]`.
    pub left: Table,
    /// `[n, q]`.
    pub right: Table,
    pub mu: Vec<Vector>,
}

impl OracleXMod {
    pub fn from_library(x: &CrossedModule<F2>) -> Self {
        let (n, q) = x.dims();
        OracleXMod {
            n,
            q,
            top: Table::from_bilinear(x.top().structure()),
            base: Table::from_bilinear(x.base().structure()),
            left: Table::from_bilinear(&x.action().left),
            right: Table::from_bilinear(&x.action().right),
            mu: x.boundary().columns().iter().map(|c| pack(c)).collect(),
        }
    }

    /// The crossed-module axioms checked by direct evaluation.
    pub fn is_valid(&self) -> bool {
        let (n, q) = (self.n, self.q);
        let (tb, bb, l, r) = (&self.top, &self.base, &self.left, &self.right);
        let mu = |x| apply_map(&self.mu, x);
        if !is_leibniz(tb, n) || !is_leibniz(bb, q) {
            return false;
        }
        for a in basis(n) {
            for b in basis(n) {
                if mu(tb.apply(a, b)) != bb.apply(mu(a), mu(b)) {
                    return false;
                }
                if l.apply(mu(a), b) != tb.apply(a, b) || r.apply(a, mu(b)) != tb.apply(a, b) {
                    return false;
                }
            }
            for x in basis(q) {
                if mu(l.apply(x, a)) != bb.apply(x, mu(a))
                    || mu(r.apply(a, x)) != bb.apply(mu(a), x)
                {
                    return false;
                }
            }
        }
        // The six action identities of q on n; signs vanish over F2.
        for p in basis(q) {
            for m in basis(n) {
                for m2 in basis(n) {
                    let ok = l.apply(p, tb.apply(m, m2))
                        == tb.apply(l.apply(p, m), m2) ^ tb.apply(l.apply(p, m2), m)
                        && tb.apply(m, l.apply(p, m2))
                            == tb.apply(r.apply(m, p), m2) ^ r.apply(tb.apply(m, m2), p)
                        && tb.apply(m, r.apply(m2, p))
                            == r.apply(tb.apply(m, m2), p) ^ tb.apply(r.apply(m, p), m2);
                    if !ok {
                        return false;
                    }
                }
                for p2 in basis(q) {
                    let ok = r.apply(m, bb.apply(p, p2))
                        == r.apply(r.apply(m, p), p2) ^ r.apply(r.apply(m, p2), p)
                        && l.apply(p, r.apply(m, p2))
                            == r.apply(l.apply(p, m), p2) ^ l.apply(bb.apply(p, p2), m)
                        && l.apply(p, l.apply(p2, m))
                            == l.apply(bb.apply(p, p2), m) ^ r.apply(l.apply(p, m), p2);
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn to_library(&self) -> CrossedModule<F2> {
        let top = LeibnizAlgebra::new(self.top.to_bilinear(self.n)).unwrap();
        let base = LeibnizAlgebra::new(self.base.to_bilinear(self.q)).unwrap();
        let action = leibniz_xmod::ActionData::new(
            base,
            top,
            self.left.to_bilinear(self.n),
            self.right.to_bilinear(self.n),
        )
        .unwrap();
        let mu = Matrix::from_columns(
            self.q,
            &self
                .mu
                .iter()
                .map(|c| unpack(*c, self.q))
                .collect::<Vec<_>>(),
        );
        CrossedModule::new(action, mu).unwrap()
    }
}

/// Every pair `(d, D)` of maps `q -> n` satisfying the three biderivation
/// equations, as flat coordinates (`d` row-major, then `D`).
///
/// `d` and `D` are enumerated separately against their own equation, then
/// every combination is tested against the coupling equation; this covers
/// all `2^(2 nq)` pairs.
pub fn enumerate_pairs(x: &OracleXMod) -> Vec<Vec<F2>> {
    let (n, q) = (x.n, x.q);
    let (bb, l, r) = (&x.base, &x.left, &x.right);
    let maps = all_maps(q, n);
    let ds: Vec<&Vec<Vector>> = maps
        .iter()
        .filter(|d| {
            basis(q).all(|a| {
                basis(q).all(|b| {
                    apply_map(d, bb.apply(a, b))
                        == r.apply(apply_map(d, a), b) ^ l.apply(a, apply_map(d, b))
                })
            })
        })
        .collect();
    let big_ds: Vec<&Vec<Vector>> = maps
        .iter()
        .filter(|d| {
            basis(q).all(|a| {
                basis(q).all(|b| {
                    apply_map(d, bb.apply(a, b))
                        == r.apply(apply_map(d, a), b) ^ r.apply(apply_map(d, b), a)
                })
            })
        })
        .collect();
    let mut out = Vec::new();
    for d in &ds {
        for big_d in &big_ds {
            if basis(q).all(|a| {
                basis(q).all(|b| l.apply(a, apply_map(d, b)) == l.apply(a, apply_map(big_d, b)))
            }) {
                let mut v = flatten(d, n);
                v.extend(flatten(big_d, n));
                out.push(v);
            }
        }
    }
    out
}

fn is_bider_of(t: &Table, dim: usize, s: &[Vector], th: &[Vector]) -> bool {
    basis(dim).all(|a| {
        basis(dim).all(|b| {
            apply_map(s, t.apply(a, b)) == t.apply(apply_map(s, a), b) ^ t.apply(a, apply_map(s, b))
                && apply_map(th, t.apply(a, b))
                    == t.apply(apply_map(th, a), b) ^ t.apply(apply_map(th, b), a)
                && t.apply(a, apply_map(s, b)) == t.apply(a, apply_map(th, b))
        })
    })
}

/// Every quadruple satisfying the crossed-module biderivation axioms, as
/// flat coordinates `σ1, θ1, σ2, θ2` (each row-major).
pub fn enumerate_quads(x: &OracleXMod) -> Vec<Vec<F2>> {
    let (n, q) = (x.n, x.q);
    let (l, r) = (&x.left, &x.right);
    let mu = |v| apply_map(&x.mu, v);
    let tops: Vec<(Vec<Vector>, Vec<Vector>)> = all_maps(n, n)
        .into_iter()
        .flat_map(|s| all_maps(n, n).into_iter().map(move |t| (s.clone(), t)))
        .filter(|(s, t)| is_bider_of(&x.top, n, s, t))
        .collect();
    let bases: Vec<(Vec<Vector>, Vec<Vector>)> = all_maps(q, q)
        .into_iter()
        .flat_map(|s| all_maps(q, q).into_iter().map(move |t| (s.clone(), t)))
        .filter(|(s, t)| is_bider_of(&x.base, q, s, t))
        .collect();
    let mut out = Vec::new();
    for (s1, t1) in &tops {
        for (s2, t2) in &bases {
            let ok = basis(n).all(|m| {
                mu(apply_map(s1, m)) == apply_map(s2, mu(m))
                    && mu(apply_map(t1, m)) == apply_map(t2, mu(m))
                    && basis(q).all(|p| {
                        apply_map(s1, l.apply(p, m))
                            == l.apply(apply_map(s2, p), m) ^ l.apply(p, apply_map(s1, m))
                            && apply_map(s1, r.apply(m, p))
                                == r.apply(apply_map(s1, m), p) ^ r.apply(m, apply_map(s2, p))
                            && apply_map(t1, l.apply(p, m))
                                == l.apply(apply_map(t2, p), m) ^ r.apply(apply_map(t1, m), p)
                            && apply_map(t1, r.apply(m, p))
                                == r.apply(apply_map(t1, m), p) ^ l.apply(apply_map(t2, p), m)
                            && l.apply(p, apply_map(s1, m)) == l.apply(p, apply_map(t1, m))
                            && r.apply(m, apply_map(s2, p)) == r.apply(m, apply_map(t2, p))
                    })
            });
            if ok {
                let mut v = flatten(s1, n);
                v.extend(flatten(t1, n));
                v.extend(flatten(s2, q));
                v.extend(flatten(t2, q));
                out.push(v);
            }
        }
    }
    out
}

/// `(a, a, id)` for an algebra table.
pub fn identity_xmod(t: &Table, dim: usize) -> OracleXMod {
    OracleXMod {
        n: dim,
        q: dim,
        top: t.clone(),
        base: t.clone(),
        left: t.clone(),
        right: t.clone(),
        mu: basis(dim).collect(),
    }
}

/// Every Leibniz bracket on F2^dim (feasible for dim <= 2).
pub fn all_leibniz_tables(dim: usize) -> Vec<Table> {
    let cells = dim * dim;
    let total = 1usize << (cells * dim);
    (0..total)
        .map(|bits| Table {
            left: dim,
            right: dim,
            table: (0..cells)
                .map(|c| ((bits >> (c * dim)) & ((1 << dim) - 1)) as Vector)
                .collect(),
        })
        .filter(|t| is_leibniz(t, dim))
        .collect()
}

/// A nonzero Leibniz bracket on F2^dim by rejection sampling of sparse
/// structure constants.
pub fn random_leibniz_table(dim: usize, rng: &mut impl Rng) -> Table {
    loop {
        let table: Vec<Vector> = (0..dim * dim)
            .map(|_| {
                (0..dim).fold(0, |acc, k| {
                    if rng.gen_bool(0.15) {
                        acc | 1 << k
                    } else {
                        acc
                    }
                })
            })
            .collect();
        let t = Table {
            left: dim,
            right: dim,
            table,
        };
        if t.table.iter().any(|&v| v != 0) && is_leibniz(&t, dim) {
            return t;
        }
    }
}

/// All F2 crossed modules with top dimension 1 and base dimension 2.
pub fn all_small_xmods() -> Vec<OracleXMod> {
    let mut out = Vec::new();
    for base in all_leibniz_tables(2) {
        for top in all_leibniz_tables(1) {
            for mu in all_maps(1, 2) {
                for left in 0..4u8 {
                    for right in 0..4u8 {
                        let x = OracleXMod {
                            n: 1,
                            q: 2,
                            top: top.clone(),
                            base: base.clone(),
                            left: Table {
                                left: 2,
                                right: 1,
                                table: vec![left & 1, left >> 1 & 1],
                            },
                            right: Table {
                                left: 1,
                                right: 2,
                                table: vec![right & 1, right >> 1 & 1],
                            },
                            mu: mu.clone(),
                        };
                        if x.is_valid() {
                            out.push(x);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Solutions of `A x = 0` by enumerating every vector.
pub fn brute_nullspace(a: &Matrix<F2>) -> Vec<Vec<F2>> {
    let c = a.cols();
    (0..1u32 << c)
        .map(|bits| {
            (0..c)
                .map(|k| F2::new((bits >> k & 1) as i64))
                .collect::<Vec<_>>()
        })
        .filter(|x| a.apply(x).iter().all(|v| v.is_zero()))
        .collect()
}
