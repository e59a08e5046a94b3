//! Identities satisfied by biderivations, as executable checks on basis
//! elements. Each returns a report whose labels name the identity.

use super::{pair_residual, BiderPair, BiderQuad};
use crate::matrix::{unit, Matrix};
use crate::report::AlgebraReport;
use crate::scalar::Field;
use crate::xmod::CrossedModule;

/// For pairs `(d, D): q -> n`, `(dμ, Dμ)` is a biderivation of n and
/// `(μd, μD)` one of q.
pub fn delta_components<F: Field>(
    x: &CrossedModule<F>,
    pairs: &[BiderPair<F>],
) -> AlgebraReport<F> {
    let mut report = AlgebraReport::new();
    let mu = x.boundary();
    let (tn, tq) = (x.top().structure(), x.base().structure());
    for (i, p) in pairs.iter().enumerate() {
        let mut r = Vec::new();
        pair_residual(
            tn,
            tn,
            tn,
            &BiderPair {
                d: p.d.mul(mu),
                big_d: p.big_d.mul(mu),
            },
            &mut r,
        );
        let zeros = vec![F::zero(); r.len()];
        report.check("pair-times-boundary-in-bider-top", &[i], r, zeros);
        let mut r = Vec::new();
        pair_residual(
            tq,
            tq,
            tq,
            &BiderPair {
                d: mu.mul(&p.d),
                big_d: mu.mul(&p.big_d),
            },
            &mut r,
        );
        let zeros = vec![F::zero(); r.len()];
        report.check("boundary-times-pair-in-bider-base", &[i], r, zeros);
    }
    report
}

/// `[D1 μ d2 (q), q'] = [D1 μ D2 (q), q']` and
/// `[q, D1 μ d2 (q')] = [q, D1 μ D2 (q')]`.
pub fn twisted_pair_identities<F: Field>(
    x: &CrossedModule<F>,
    pairs: &[BiderPair<F>],
) -> AlgebraReport<F> {
    let mut report = AlgebraReport::new();
    let mu = x.boundary();
    let (left, right) = (&x.action().left, &x.action().right);
    let nq = x.base().dim();
    for (a, p1) in pairs.iter().enumerate() {
        for (b, p2) in pairs.iter().enumerate() {
            let u = p1.big_d.mul(mu).mul(&p2.d);
            let v = p1.big_d.mul(mu).mul(&p2.big_d);
            for i in 0..nq {
                for j in 0..nq {
                    report.check(
                        "twisted-right",
                        &[a, b, i, j],
                        right.apply_left_vec(&u.column(i), j),
                        right.apply_left_vec(&v.column(i), j),
                    );
                    report.check(
                        "twisted-left",
                        &[a, b, i, j],
                        left.apply_right_vec(i, &u.column(j)),
                        left.apply_right_vec(i, &v.column(j)),
                    );
                }
            }
        }
    }
    report
}

/// The twelve bracket identities tying quadruples to pairs and to each
/// other, e.g. `[D σ2 (q), q'] = [D θ2 (q), q']` and
/// `[θ1 σ1' (n), q] = [θ1 θ1' (n), q]`.
pub fn quad_pair_identities<F: Field>(
    x: &CrossedModule<F>,
    pairs: &[BiderPair<F>],
    quads: &[BiderQuad<F>],
) -> AlgebraReport<F> {
    let mut report = AlgebraReport::new();
    let (nn, nq) = x.dims();
    let (left, right) = (&x.action().left, &x.action().right);
    let tn = x.top().structure();
    let en = |j: usize| unit::<F>(nn, j);
    let eq = |i: usize| unit::<F>(nq, i);

    for (s, quad) in quads.iter().enumerate() {
        for (p, pair) in pairs.iter().enumerate() {
            // Maps q -> n built from both.
            let ds = pair.big_d.mul(&quad.sigma2);
            let dt = pair.big_d.mul(&quad.theta2);
            let td = quad.theta1.mul(&pair.d);
            let tbig = quad.theta1.mul(&pair.big_d);
            let maps: [(&str, &Matrix<F>, &Matrix<F>); 2] =
                [("D-sigma2", &ds, &dt), ("theta1-d", &td, &tbig)];
            for (name, u, v) in maps {
                for i in 0..nq {
                    let (ui, vi) = (u.column(i), v.column(i));
                    for k in 0..nq {
                        report.check(
                            &format!("{name}-right-base"),
                            &[s, p, i, k],
                            right.apply_left_vec(&ui, k),
                            right.apply_left_vec(&vi, k),
                        );
                        report.check(
                            &format!("{name}-left-base"),
                            &[s, p, k, i],
                            left.apply_right_vec(k, &ui),
                            left.apply_right_vec(k, &vi),
                        );
                    }
                    for j in 0..nn {
                        report.check(
                            &format!("{name}-right-top"),
                            &[s, p, i, j],
                            tn.apply_left_vec(&ui, j),
                            tn.apply_left_vec(&vi, j),
                        );
                        report.check(
                            &format!("{name}-left-top"),
                            &[s, p, j, i],
                            tn.apply_right_vec(j, &ui),
                            tn.apply_right_vec(j, &vi),
                        );
                    }
                }
            }
        }
        for (t, other) in quads.iter().enumerate() {
            let a = quad.theta1.mul(&other.sigma1);
            let b = quad.theta1.mul(&other.theta1);
            for j in 0..nn {
                let (aj, bj) = (a.column(j), b.column(j));
                for i in 0..nq {
                    report.check(
                        "theta1-sigma1-right",
                        &[s, t, j, i],
                        right.apply(&aj, &eq(i)),
                        right.apply(&bj, &eq(i)),
                    );
                    report.check(
                        "theta1-sigma1-left",
                        &[s, t, i, j],
                        left.apply(&eq(i), &aj),
                        left.apply(&eq(i), &bj),
                    );
                }
            }
            let a = quad.theta2.mul(&other.sigma2);
            let b = quad.theta2.mul(&other.theta2);
            for i in 0..nq {
                let (ai, bi) = (a.column(i), b.column(i));
                for j in 0..nn {
                    report.check(
                        "theta2-sigma2-left",
                        &[s, t, i, j],
                        left.apply(&ai, &en(j)),
                        left.apply(&bi, &en(j)),
                    );
                    report.check(
                        "theta2-sigma2-right",
                        &[s, t, j, i],
                        right.apply(&en(j), &ai),
                        right.apply(&en(j), &bi),
                    );
                }
            }
        }
    }
    report
}

/// `θ σ' = θ θ'` for biderivations of one algebra; holds when the algebra
/// has zero annihilator or is perfect.
pub fn theta_sigma_identity<F: Field>(pairs: &[BiderPair<F>]) -> AlgebraReport<F> {
    let mut report = AlgebraReport::new();
    for (a, p) in pairs.iter().enumerate() {
        for (b, p2) in pairs.iter().enumerate() {
            let lhs = p.big_d.mul(&p2.d);
            let rhs = p.big_d.mul(&p2.big_d);
            report.check(
                "theta-sigma",
                &[a, b],
                lhs.data().to_vec(),
                rhs.data().to_vec(),
            );
        }
    }
    report
}

/// `D σ2 = D θ2` and `θ1 d = θ1 D`; hold when the top has zero annihilator
/// or the base is perfect.
pub fn collapse_identities<F: Field>(
    pairs: &[BiderPair<F>],
    quads: &[BiderQuad<F>],
) -> AlgebraReport<F> {
    let mut report = AlgebraReport::new();
    for (s, quad) in quads.iter().enumerate() {
        for (p, pair) in pairs.iter().enumerate() {
            report.check(
                "D-sigma2-equals-D-theta2",
                &[s, p],
                pair.big_d.mul(&quad.sigma2).data().to_vec(),
                pair.big_d.mul(&quad.theta2).data().to_vec(),
            );
            report.check(
                "theta1-d-equals-theta1-D",
                &[s, p],
                quad.theta1.mul(&pair.d).data().to_vec(),
                quad.theta1.mul(&pair.big_d).data().to_vec(),
            );
        }
    }
    report
}
