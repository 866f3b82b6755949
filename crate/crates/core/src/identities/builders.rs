//! Side builders. Each takes the target order and the enumeration cap and
//! returns a series reliable through that order.

use super::terms::{apply, fin, Ctx, INF};
use crate::error::Result;
use crate::partitions::Stat;
use crate::series::{gaussian_coefficients, triple_product, Monomial, PochSpec, QSeries, VarSet};
use crate::sip::{class_spec, positional_weights, ClassId};

fn tri(k: i64) -> i64 {
    k * (k + 1) / 2
}

fn sign(k: i64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn oracle(id: ClassId, c: &Ctx, extra: &[(Stat, Monomial)], cap: u64) -> Result<QSeries> {
    class_spec(id).oracle(&c.weights(extra), c.n, cap)
}

/// Substitute `(var, value)` pairs, then drop the substituted variables.
fn specialize(s: QSeries, subs: &[(&str, Monomial)], keep: &[&str]) -> Result<QSeries> {
    let mut s = s;
    for (v, m) in subs {
        s = s.substitute(v, m)?;
    }
    s.with_vars(&VarSet::new(keep.iter().copied())?)
}

fn konst(c: i64) -> Monomial {
    Monomial::constant(c)
}

// --- Göllnitz–Gordon -------------------------------------------------------

pub fn gg36_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.sum(0, |k| k * k, |k| c.term(c.m(1, k * k, &[]), &[c.pq(-1, 1, 2, fin(k))], &[c.pq(1, 2, 2, fin(k))]))
}

pub fn gg36_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.quot(&[], &[c.pq(1, 1, 8, INF), c.pq(1, 4, 8, INF), c.pq(1, 7, 8, INF)])
}

pub fn gg36_oracle(n: i64, cap: u64) -> Result<QSeries> {
    oracle(ClassId::GgA, &Ctx::new(&[], n), &[], cap)
}

// --- P4 family ---------------------------------------------------------------

/// `prod_{i<k} (x + y q^{2i+1}) q^{k^2} / (q^4;q^4)_k`, i.e. `x^k (-yq/x;q^2)_k q^{k^2} / (q^4;q^4)_k`.
fn p4_term(c: &Ctx, k: i64) -> Result<QSeries> {
    let mut s = c.lead(c.m(1, k * k, &[]));
    for i in 0..k {
        s = s.mul_poly(&[c.m(1, 0, &[("x", 1)]), c.m(1, 2 * i + 1, &[("y", 1)])]);
    }
    apply(s, &[], &[c.pq(1, 4, 4, fin(k))])
}

fn p4_sum(n: i64, parity: Option<i64>) -> Result<QSeries> {
    let c = Ctx::new(&["x", "y"], n);
    match parity {
        None => c.sum(0, |k| k * k, |k| p4_term(&c, k)),
        Some(r) => c.sum(0, |j| (2 * j + r).pow(2), |j| p4_term(&c, 2 * j + r)),
    }
}

pub fn p4_gen_lhs(n: i64, _: u64) -> Result<QSeries> {
    p4_sum(n, None)
}

pub fn p4_gen_e_lhs(n: i64, _: u64) -> Result<QSeries> {
    p4_sum(n, Some(0))
}

pub fn p4_gen_o_lhs(n: i64, _: u64) -> Result<QSeries> {
    p4_sum(n, Some(1))
}

pub fn p4_gen_split(n: i64, cap: u64) -> Result<QSeries> {
    p4_gen_e_lhs(n, cap)?.add(&p4_gen_o_lhs(n, cap)?)
}

fn p4_oracle_of(id: ClassId, n: i64, cap: u64) -> Result<QSeries> {
    class_spec(id).oracle(&class_spec(id).default_weights, n, cap)
}

pub fn p4_oracle(n: i64, cap: u64) -> Result<QSeries> {
    p4_oracle_of(ClassId::P4, n, cap)
}

pub fn p4e_oracle(n: i64, cap: u64) -> Result<QSeries> {
    p4_oracle_of(ClassId::P4e, n, cap)
}

pub fn p4o_oracle(n: i64, cap: u64) -> Result<QSeries> {
    p4_oracle_of(ClassId::P4o, n, cap)
}

/// `(-xq;q^2)_inf / (yq^2;q^2)_inf * (1 + (1+y) sum_{k>=1} ...)`.
pub fn p4_watson_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["x", "y"], n);
    let inner = c.sum(
        1,
        |k| 3 * k * k,
        |k| {
            let mut s = c.lead(c.m(sign(k), 3 * k * k, &[]));
            s = s.mul_one_plus(&c.m(-1, 4 * k, &[("y", 1)]));
            for i in 0..k {
                s = s.mul_poly(&[c.m(1, 0, &[("x", 1)]), c.m(1, 2 * i + 1, &[("y", 1)])]);
            }
            apply(
                s,
                &[c.p(1, 4, &[("y", 2)], 4, fin(k - 1))],
                &[c.pq(1, 4, 4, fin(k)), c.p(-1, 1, &[("x", 1)], 2, fin(k))],
            )
        },
    )?;
    let bracket = c.one().add(&inner.mul_one_plus(&c.m(1, 0, &[("y", 1)])))?;
    apply(bracket, &[c.p(-1, 1, &[("x", 1)], 2, INF)], &[c.p(1, 2, &[("y", 1)], 2, INF)])
}

/// `c q^q` with no other variables.
fn qm(c: i64, q: i64) -> Monomial {
    Monomial::new(c, q, Default::default())
}

fn watson_at(n: i64, cap: u64, xv: Monomial, yv: Monomial) -> Result<QSeries> {
    specialize(p4_watson_rhs(n, cap)?, &[("x", xv), ("y", yv)], &[])
}

fn p4_weighted(n: i64, cap: u64, names: &[&str], odd: Monomial, even: Monomial) -> Result<QSeries> {
    let c = Ctx::new(names, n);
    oracle(ClassId::P4, &c, &[(Stat::OddParts, odd), (Stat::EvenParts, even)], cap)
}

pub fn slater4_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.sum(0, |k| k * k, |k| c.term(c.m(sign(k), k * k, &[]), &[c.pq(-1, 1, 2, fin(k))], &[c.pq(1, 4, 4, fin(k))]))
}

pub fn slater4_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.quot(&[c.pq(1, 1, 2, INF), c.pq(1, 2, 4, INF)], &[])
}

pub fn slater4_from_p4(n: i64, cap: u64) -> Result<QSeries> {
    specialize(p4_gen_lhs(n, cap)?, &[("x", konst(-1)), ("y", konst(-1))], &[])
}

pub fn slater25_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.sum(0, |k| k * k, |k| c.term(c.m(1, k * k, &[]), &[c.pq(-1, 1, 2, fin(k))], &[c.pq(1, 4, 4, fin(k))]))
}

pub fn slater25_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.quot(&[c.pq(1, 3, 6, INF), c.pq(1, 3, 6, INF), c.pq(1, 6, 6, INF), c.pq(-1, 1, 2, INF)], &[c.pq(1, 2, 2, INF)])
}

pub fn slater25_from_p4(n: i64, cap: u64) -> Result<QSeries> {
    specialize(p4_gen_lhs(n, cap)?, &[("x", konst(1)), ("y", konst(1))], &[])
}

pub fn slater51_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.sum(
        0,
        |k| 4 * k * k,
        |k| c.term(c.m(1, 4 * k * k, &[]), &[c.pq(1, 1, 2, fin(2 * k))], &[c.pq(1, 4, 4, fin(2 * k))]),
    )
}

pub fn slater51_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.quot(&[c.pq(1, 5, 12, INF), c.pq(1, 7, 12, INF), c.pq(1, 12, 12, INF)], &[c.pq(1, 4, 4, INF)])
}

pub fn slater51_from_p4e(n: i64, cap: u64) -> Result<QSeries> {
    specialize(p4_gen_e_lhs(n, cap)?, &[("x", konst(-1)), ("y", konst(1))], &[])
}

pub fn slater55_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.sum(
        0,
        |k| 4 * k * (k + 1),
        |k| c.term(c.m(1, 4 * k * (k + 1), &[]), &[c.pq(1, 1, 2, fin(2 * k + 1))], &[c.pq(1, 4, 4, fin(2 * k + 1))]),
    )
}

pub fn slater55_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.quot(&[c.pq(1, 1, 12, INF), c.pq(1, 11, 12, INF), c.pq(1, 12, 12, INF)], &[c.pq(1, 4, 4, INF)])
}

/// The odd-length split at `(x, y) = (-1, 1)` is `-q` times the sum.
pub fn slater55_from_p4o(n: i64, cap: u64) -> Result<QSeries> {
    let s = specialize(p4_gen_o_lhs(n + 1, cap)?, &[("x", konst(-1)), ("y", konst(1))], &[])?;
    Ok(s.neg().shift_q(-1))
}

pub fn thm35_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.sum(0, |k| k * k, |k| c.term(c.m(1, k * k, &[]), &[c.pq(1, 1, 2, fin(k))], &[c.pq(1, 4, 4, fin(k))]))
}

pub fn thm35_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.quot(&[c.pq(1, 2, 4, INF), c.pq(1, 2, 4, INF)], &[c.pq(1, 1, 2, INF)])
}

pub fn thm35_oracle(n: i64, cap: u64) -> Result<QSeries> {
    p4_weighted(n, cap, &[], konst(1), konst(-1))
}

pub fn thm35_watson(n: i64, cap: u64) -> Result<QSeries> {
    watson_at(n, cap, konst(1), konst(-1))
}

/// `x^k (q/x;q^2)_k = prod_{i<k} (x - q^{2i+1})`.
pub fn thm36_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["x"], n);
    c.sum(
        0,
        |k| k * k,
        |k| {
            let mut s = c.lead(c.m(1, k * k, &[]));
            for i in 0..k {
                s = s.mul_poly(&[c.m(1, 0, &[("x", 1)]), c.m(-1, 2 * i + 1, &[])]);
            }
            apply(s, &[], &[c.pq(1, 4, 4, fin(k))])
        },
    )
}

pub fn thm36_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["x"], n);
    c.quot(&[c.p(-1, 1, &[("x", 1)], 2, INF)], &[c.pq(-1, 2, 2, INF)])
}

pub fn thm36_oracle(n: i64, cap: u64) -> Result<QSeries> {
    let c = Ctx::new(&["x"], n);
    oracle(ClassId::P4, &c, &[(Stat::OddParts, c.m(1, 0, &[("x", 1)])), (Stat::EvenParts, konst(-1))], cap)
}

pub fn thm36_watson(n: i64, cap: u64) -> Result<QSeries> {
    specialize(p4_watson_rhs(n, cap)?, &[("y", konst(-1))], &["x"])
}

pub fn thm37_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.sum(0, |k| k * k, |k| c.term(c.m(sign(k), k * k, &[]), &[c.pq(1, 1, 2, fin(k))], &[c.pq(1, 4, 4, fin(k))]))
}

pub fn thm37_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.quot(
        &[c.pq(1, 1, 6, INF), c.pq(1, 5, 6, INF), c.pq(1, 6, 12, INF), c.pq(1, 6, 12, INF)],
        &[c.pq(1, 2, 6, INF), c.pq(1, 3, 6, INF), c.pq(1, 4, 6, INF)],
    )
}

pub fn thm37_oracle(n: i64, cap: u64) -> Result<QSeries> {
    p4_weighted(n, cap, &[], konst(-1), konst(1))
}

pub fn thm37_watson(n: i64, cap: u64) -> Result<QSeries> {
    watson_at(n, cap, konst(-1), konst(1))
}

pub fn thm38_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.sum(0, |k| k * k + k, |k| c.term(c.m(1, k * k + k, &[]), &[], &[c.pq(1, 2, 2, fin(k))]))
}

pub fn thm38_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.quot(&[c.pq(-1, 2, 2, INF)], &[])
}

pub fn thm38_mid(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.quot(
        &[c.pq(-1, 2, 2, INF), c.pq(1, 2, 6, INF), c.pq(1, 4, 6, INF), c.pq(1, 6, 6, INF)],
        &[c.pq(1, 4, 2, INF), c.pq(1, 2, 2, fin(1))],
    )
}

pub fn thm38_oracle(n: i64, cap: u64) -> Result<QSeries> {
    p4_weighted(n, cap, &[], qm(1, 1), qm(1, 2))
}

pub fn thm38_watson(n: i64, cap: u64) -> Result<QSeries> {
    watson_at(n, cap, qm(1, 1), qm(1, 2))
}

pub fn thm39_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.sum(0, |k| k * k + k, |k| c.term(c.m(sign(k), k * k + k, &[]), &[], &[c.pq(-1, 2, 2, fin(k))]))
}

pub fn thm39_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.sum(0, |k| 3 * k * k + k, |k| Ok(c.lead(c.m(1, 3 * k * k + k, &[])).mul_one_plus(&c.m(-1, 4 * k + 2, &[]))))
}

pub fn thm39_oracle(n: i64, cap: u64) -> Result<QSeries> {
    p4_weighted(n, cap, &[], qm(-1, 1), qm(1, 2))
}

pub fn thm39_watson(n: i64, cap: u64) -> Result<QSeries> {
    watson_at(n, cap, qm(-1, 1), qm(1, 2))
}

/// The lost-notebook identity under `q -> q^2`.
pub fn thm39_lost_notebook(n: i64, cap: u64) -> Result<QSeries> {
    lost_notebook_lhs(n / 2 + 1, cap)?.substitute_q(false, 2)
}

// --- auxiliary identities --------------------------------------------------

pub fn jacobi_lhs(n: i64, _: u64) -> Result<QSeries> {
    Ok(triple_product(n)?.0)
}

pub fn jacobi_rhs(n: i64, _: u64) -> Result<QSeries> {
    Ok(triple_product(n)?.1)
}

/// Largest `n` in the finite q-binomial family; `w^n` marks each member.
pub const QBINOM_MAX_N: i64 = 20;

pub fn qbinom_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["z", "w"], n);
    let mut acc = QSeries::zero(&c.vars, n);
    for k in 0..=QBINOM_MAX_N {
        let s = QSeries::polynomial(&c.vars, &[c.m(1, 0, &[("w", k)])]);
        acc = acc.add(&apply(s, &[c.p(-1, 0, &[("z", 1)], 1, fin(k))], &[])?.truncate(n))?;
    }
    Ok(acc)
}

pub fn qbinom_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["z", "w"], n);
    let mut terms = Vec::new();
    for m in 0..=QBINOM_MAX_N {
        for k in 0..=m {
            for (j, g) in gaussian_coefficients(m, k).into_iter().enumerate() {
                let mono = c.m(1, k * (k - 1) / 2 + j as i64, &[("z", k), ("w", m)]);
                terms.push(Monomial::new(g, mono.q, mono.exps));
            }
        }
    }
    Ok(QSeries::polynomial(&c.vars, &terms).truncate(n))
}

pub fn lost_notebook_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.sum(0, tri, |k| c.term(c.m(sign(k), tri(k), &[]), &[], &[c.pq(-1, 1, 1, fin(k))]))
}

pub fn lost_notebook_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.sum(
        0,
        |k| k * (3 * k + 1) / 2,
        |k| Ok(c.lead(c.m(1, k * (3 * k + 1) / 2, &[])).mul_one_plus(&c.m(-1, 2 * k + 1, &[]))),
    )
}

pub fn fine_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["b", "t"], n);
    c.sum(
        0,
        |k| k,
        |k| c.term(c.m(1, k, &[("t", k)]), &[], &[c.pq(1, 1, 1, fin(k)), c.p(1, 1, &[("b", 1)], 1, fin(k))]),
    )
}

pub fn fine_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["b", "t"], n);
    let s = c.sum(0, tri, |r| {
        c.term(c.m(sign(r), tri(r), &[("b", r)]), &[c.p(1, 1, &[("t", 1)], 1, fin(r))], &[c.pq(1, 1, 1, fin(r))])
    })?;
    apply(s, &[], &[c.p(1, 1, &[("b", 1)], 1, INF), c.p(1, 1, &[("t", 1)], 1, INF)])
}

// --- strict overpartitions ---------------------------------------------------

pub fn lebesgue_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["a"], n);
    c.sum(0, tri, |k| c.term(c.m(1, tri(k), &[]), &[c.p(-1, 1, &[("a", 1)], 1, fin(k))], &[c.pq(1, 1, 1, fin(k))]))
}

pub fn lebesgue_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["a"], n);
    c.quot(&[c.p(-1, 2, &[("a", 1)], 2, INF), c.pq(-1, 1, 1, INF)], &[])
}

pub fn lebesgue_oracle(n: i64, cap: u64) -> Result<QSeries> {
    let c = Ctx::new(&["a"], n);
    oracle(ClassId::Sbar, &c, &[(Stat::Overlined, c.m(1, 0, &[("a", 1)]))], cap)
}

pub fn sbar_gen_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["a", "z"], n);
    c.sum(0, tri, |k| {
        c.term(c.m(1, tri(k), &[("z", k)]), &[c.p(-1, 1, &[("a", 1)], 1, fin(k))], &[c.pq(1, 1, 1, fin(k))])
    })
}

pub fn sbar_oracle(n: i64, cap: u64) -> Result<QSeries> {
    let spec = class_spec(ClassId::Sbar);
    spec.oracle(&spec.default_weights, n, cap)
}

/// `(-aq)_inf (-zq)_inf sum (-a)^k q^k / ((q)_k (-zq)_k)`.
pub fn sbar_fine(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["a", "z"], n);
    let s = c.sum(
        0,
        |k| k,
        |k| c.term(c.m(sign(k), k, &[("a", k)]), &[], &[c.pq(1, 1, 1, fin(k)), c.p(-1, 1, &[("z", 1)], 1, fin(k))]),
    )?;
    apply(s, &[c.p(-1, 1, &[("a", 1)], 1, INF), c.p(-1, 1, &[("z", 1)], 1, INF)], &[])
}

pub fn h2_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["a", "z"], n);
    let s = c.sum(
        0,
        |h| h * (h + 1),
        |h| {
            c.term(
                c.m(1, h * (h + 1), &[("a", h), ("z", h)]),
                &[],
                &[c.pq(1, 1, 1, fin(h)), c.p(-1, 1, &[("z", 1)], 1, fin(h))],
            )
        },
    )?;
    apply(s, &[c.p(-1, 1, &[("z", 1)], 1, INF)], &[])
}

pub fn cauchy_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["z"], n);
    c.sum(0, |k| k * (k - 1) / 2, |k| c.term(c.m(1, k * (k - 1) / 2, &[("z", k)]), &[], &[c.pq(1, 1, 1, fin(k))]))
}

/// `(-z;q)_inf = (1+z)(-zq;q)_inf`; the first factor has no q-power.
pub fn cauchy_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["z"], n);
    Ok(c.quot(&[c.p(-1, 1, &[("z", 1)], 1, INF)], &[])?.mul_one_plus(&c.m(1, 0, &[("z", 1)])))
}

/// `sum prod_{i<k} (a + q^{i+s}) q^{k(k+1)/2} / (q)_k`, evaluated at `a = 0`.
fn rr_limit(n: i64, s: i64) -> Result<QSeries> {
    let c = Ctx::new(&["a"], n);
    let sum = c.sum(0, tri, |k| {
        let mut t = c.lead(c.m(1, tri(k), &[]));
        for i in 0..k {
            t = t.mul_poly(&[c.m(1, 0, &[("a", 1)]), c.m(1, i + s, &[])]);
        }
        apply(t, &[], &[c.pq(1, 1, 1, fin(k))])
    })?;
    specialize(sum, &[("a", konst(0))], &[])
}

pub fn rr1_lhs(n: i64, _: u64) -> Result<QSeries> {
    rr_limit(n, 0)
}

pub fn rr1_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.quot(&[], &[c.pq(1, 1, 5, INF), c.pq(1, 4, 5, INF)])
}

pub fn rr2_lhs(n: i64, _: u64) -> Result<QSeries> {
    rr_limit(n, 1)
}

pub fn rr2_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.quot(&[], &[c.pq(1, 2, 5, INF), c.pq(1, 3, 5, INF)])
}

pub fn slater8_from_lebesgue(n: i64, cap: u64) -> Result<QSeries> {
    let s = specialize(lebesgue_lhs(n, cap)?, &[("a", konst(1))], &[])?;
    let c = Ctx::new(&[], n);
    apply(s, &[c.pq(1, 1, 1, INF)], &[c.pq(-1, 1, 1, INF)])
}

pub fn slater8_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    let s = c.sum(0, tri, |k| c.term(c.m(1, tri(k), &[]), &[c.pq(-1, 1, 1, fin(k))], &[c.pq(1, 1, 1, fin(k))]))?;
    apply(s, &[c.pq(1, 1, 1, INF)], &[c.pq(-1, 1, 1, INF)])
}

pub fn slater8_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.quot(&[c.pq(1, 1, 4, INF), c.pq(1, 3, 4, INF), c.pq(1, 4, 4, INF)], &[])
}

pub fn slater13_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.sum(
        0,
        |k| k * (k - 1) / 2,
        |k| c.term(c.m(1, k * (k - 1) / 2, &[]), &[c.pq(-1, 1, 1, fin(k))], &[c.pq(1, 1, 1, fin(k))]),
    )
}

pub fn slater13_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    let a = c.quot(&[c.pq(1, 1, 4, INF), c.pq(1, 3, 4, INF), c.pq(1, 4, 4, INF)], &[])?;
    let b = c.quot(&[c.pq(1, 2, 4, INF), c.pq(1, 2, 4, INF), c.pq(1, 4, 4, INF)], &[])?;
    apply(a.add(&b)?, &[c.pq(-1, 1, 1, INF)], &[c.pq(1, 1, 1, INF)])
}

/// `(-q)_inf ((-q^2;q^2)_inf + (-q;q^2)_inf)`.
pub fn slater13_alt(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    let a = c.quot(&[c.pq(-1, 2, 2, INF)], &[])?;
    let b = c.quot(&[c.pq(-1, 1, 2, INF)], &[])?;
    apply(a.add(&b)?, &[c.pq(-1, 1, 1, INF)], &[])
}

// --- positional gap classes -------------------------------------------------

fn z_alt(c: &Ctx) -> [(Stat, Monomial); 1] {
    [(Stat::AltSum, c.m(1, 0, &[("z", 1)]))]
}

fn gzq_sum(n: i64, z_per_term: i64, q_shift: i64) -> Result<QSeries> {
    let c = Ctx::new(&["z"], n);
    c.sum(
        0,
        |k| 3 * k * k + q_shift * k,
        |k| {
            c.term(
                c.m(1, 3 * k * k + q_shift * k, &[("z", z_per_term * k)]),
                &[],
                &[c.p(1, 1, &[("z", 1)], 2, fin(k)), c.pq(1, 4, 4, fin(k))],
            )
        },
    )
}

pub fn g_gen_lhs(n: i64, _: u64) -> Result<QSeries> {
    gzq_sum(n, 1, -2)
}

pub fn g_oracle_z(n: i64, cap: u64) -> Result<QSeries> {
    let c = Ctx::new(&["z"], n);
    oracle(ClassId::G, &c, &z_alt(&c), cap)
}

pub fn gprime_gen_lhs(n: i64, _: u64) -> Result<QSeries> {
    gzq_sum(n, 3, 0)
}

/// Literal `z^n q^{3n^2}` numerator (negative control).
pub fn gprime_gen_literal(n: i64, _: u64) -> Result<QSeries> {
    gzq_sum(n, 1, 0)
}

pub fn gprime_oracle_z(n: i64, cap: u64) -> Result<QSeries> {
    let c = Ctx::new(&["z"], n);
    oracle(ClassId::GPrime, &c, &z_alt(&c), cap)
}

pub fn slater15_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.sum(
        0,
        |k| k * (3 * k - 2),
        |k| c.term(c.m(sign(k), k * (3 * k - 2), &[]), &[], &[c.pq(1, 4, 4, fin(k)), c.pq(-1, 1, 2, fin(k))]),
    )
}

pub fn slater15_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.quot(&[c.pq(1, 1, 5, INF), c.pq(1, 4, 5, INF), c.pq(1, 5, 5, INF)], &[c.pq(1, 2, 2, INF)])
}

pub fn slater15_from_g(n: i64, cap: u64) -> Result<QSeries> {
    specialize(g_gen_lhs(n, cap)?, &[("z", konst(-1))], &[])
}

pub fn slater19_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.sum(
        0,
        |k| 3 * k * k,
        |k| c.term(c.m(sign(k), 3 * k * k, &[]), &[], &[c.pq(1, 4, 4, fin(k)), c.pq(-1, 1, 2, fin(k))]),
    )
}

pub fn slater19_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.quot(&[c.pq(1, 2, 5, INF), c.pq(1, 3, 5, INF), c.pq(1, 5, 5, INF)], &[c.pq(1, 2, 2, INF)])
}

pub fn slater19_from_gprime(n: i64, cap: u64) -> Result<QSeries> {
    specialize(gprime_gen_lhs(n, cap)?, &[("z", konst(-1))], &[])
}

/// The Sears chain at `z = -1`: `(1/(-q;q^2)_inf) sum q^{n^2}/(q^4;q^4)_n`.
pub fn slater19_from_sears(n: i64, cap: u64) -> Result<QSeries> {
    specialize(sears_c(n, cap)?, &[("z", konst(-1))], &[])
}

/// `sum_h z^h q^{h^2} [k, h]_{q^2}` as monomials.
fn inner_binomial(c: &Ctx, k: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    for h in 0..=k {
        for (j, g) in gaussian_coefficients(k, h).into_iter().enumerate() {
            let m = c.m(1, h * h + 2 * j as i64, &[("z", h)]);
            out.push(Monomial::new(g, m.q, m.exps));
        }
    }
    out
}

/// The first line of the change-of-summation chain for the `g` class.
pub fn g_resum_first(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["z"], n);
    let a = c.sum(
        1,
        |k| 3 * k * k - 2 * k,
        |k| {
            let t = c.term(
                c.m(1, 3 * k * k - 2 * k, &[("z", k)]),
                &[],
                &[c.p(1, 2, &[("z", 2)], 4, fin(k)), c.pq(1, 4, 4, fin(k - 1))],
            )?;
            Ok(t.mul_poly(&inner_binomial(&c, k)))
        },
    )?;
    let b = c.sum(
        0,
        |k| 3 * k * k + 2 * k,
        |k| {
            let t = c.term(
                c.m(1, 3 * k * k + 2 * k, &[("z", k)]),
                &[],
                &[c.p(1, 2, &[("z", 2)], 4, fin(k)), c.pq(1, 4, 4, fin(k))],
            )?;
            Ok(t.mul_poly(&inner_binomial(&c, k)))
        },
    )?;
    a.add(&b)
}

/// The last line of the chain: a double sum in `h` and `k`.
pub fn g_resum_last(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["z"], n);
    c.sum(
        0,
        |h| 4 * h * h - 2 * h,
        |h| {
            let q0 = 4 * h * h - 2 * h;
            c.sum(
                0,
                |k| q0 + 3 * k * k + 6 * k * h - 2 * k,
                |k| {
                    c.term(
                        c.m(1, q0 + 3 * k * k + 6 * k * h - 2 * k, &[("z", 2 * h + k)]),
                        &[],
                        &[
                            c.pq(1, 4, 4, fin(h)),
                            c.p(1, 2, &[("z", 2)], 4, fin(h)),
                            c.p(1, 2 * h + 1, &[("z", 1)], 2, fin(k)),
                            c.p(-1, 2 * h + 1, &[("z", 1)], 2, fin(k)),
                            c.pq(-1, 2 * h + 2, 2, fin(k)),
                            c.pq(1, 2, 2, fin(k)),
                        ],
                    )
                },
            )
        },
    )
}

/// `x^a y^b` graded by `q^{a+b}` over `(x; xy)_n (x^2y^2; x^2y^2)_n`; `sign`
/// is `+1` for `(x;xy)_n` and `-1` for the literal `(-x;xy)_n`.
fn gxy_sum(n: i64, prime: bool, sign_x: i64) -> Result<QSeries> {
    let c = Ctx::new(&["x", "y"], n);
    let exps = |k: i64| {
        if prime {
            ((3 * k * k + 3 * k) / 2, (3 * k * k - 3 * k) / 2)
        } else {
            ((3 * k * k - k) / 2, (3 * k * k - 3 * k) / 2)
        }
    };
    let xy = c.m(1, 2, &[("x", 1), ("y", 1)]);
    let x2y2 = c.m(1, 4, &[("x", 2), ("y", 2)]);
    c.sum(
        0,
        |k| exps(k).0 + exps(k).1,
        |k| {
            let (a, b) = exps(k);
            c.term(
                c.m(1, a + b, &[("x", a), ("y", b)]),
                &[],
                &[
                    PochSpec::new(c.m(sign_x, 1, &[("x", 1)]), xy.clone(), fin(k)),
                    PochSpec::new(x2y2.clone(), x2y2.clone(), fin(k)),
                ],
            )
        },
    )
}

pub fn gxy_lhs(n: i64, _: u64) -> Result<QSeries> {
    gxy_sum(n, false, 1)
}

pub fn gxy_literal(n: i64, _: u64) -> Result<QSeries> {
    gxy_sum(n, false, -1)
}

pub fn gpxy_lhs(n: i64, _: u64) -> Result<QSeries> {
    gxy_sum(n, true, 1)
}

pub fn gpxy_literal(n: i64, _: u64) -> Result<QSeries> {
    gxy_sum(n, true, -1)
}

pub fn g_oracle_xy(n: i64, cap: u64) -> Result<QSeries> {
    class_spec(ClassId::G).oracle(&positional_weights(), n, cap)
}

pub fn gprime_oracle_xy(n: i64, cap: u64) -> Result<QSeries> {
    class_spec(ClassId::GPrime).oracle(&positional_weights(), n, cap)
}

pub fn sears_a(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["z"], n);
    c.sum(
        0,
        |k| 3 * k * k,
        |k| c.term(c.m(1, 3 * k * k, &[("z", k)]), &[], &[c.p(1, 1, &[("z", 1)], 2, fin(k)), c.pq(1, 4, 4, fin(k))]),
    )
}

pub fn sears_b(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["z"], n);
    let s = c.sum(
        0,
        |k| k * k + k,
        |k| c.term(c.m(1, k * k + k, &[]), &[], &[c.p(1, 1, &[("z", 1)], 2, fin(k)), c.pq(1, 2, 2, fin(k))]),
    )?;
    apply(s, &[], &[c.pq(-1, 2, 2, INF)])
}

pub fn sears_c(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["z"], n);
    let s = c.sum(0, |k| k * k, |k| c.term(c.m(sign(k), k * k, &[("z", k)]), &[], &[c.pq(1, 4, 4, fin(k))]))?;
    apply(s, &[], &[c.p(1, 1, &[("z", 1)], 2, INF)])
}

pub fn rogers518_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.sum(0, |k| k * k, |k| c.term(c.m(1, k * k, &[]), &[], &[c.pq(1, 4, 4, fin(k))]))
}

pub fn rogers518_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.quot(&[], &[c.pq(-1, 2, 2, INF), c.pq(1, 1, 5, INF), c.pq(1, 4, 5, INF)])
}

// --- odd parts and the closing theorem -----------------------------------------

pub fn partition_odd_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["z"], n);
    c.sum(
        0,
        |k| k * (2 * k + 1),
        |k| {
            c.term(
                c.m(1, k * (2 * k + 1), &[("z", k)]),
                &[],
                &[c.pq(1, 2, 2, fin(k)), c.p(1, 1, &[("z", 1)], 2, fin(k + 1))],
            )
        },
    )
}

pub fn partition_odd_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&["z"], n);
    c.quot(&[], &[c.p(1, 1, &[("z", 1)], 2, INF)])
}

pub fn odd_oracle(n: i64, cap: u64) -> Result<QSeries> {
    let spec = class_spec(ClassId::Odd);
    spec.oracle(&spec.default_weights, n, cap)
}

pub fn slater5_lhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.sum(
        0,
        |k| k * (2 * k + 1),
        |k| c.term(c.m(sign(k), k * (2 * k + 1), &[]), &[], &[c.pq(1, 2, 2, fin(k)), c.pq(-1, 1, 2, fin(k + 1))]),
    )
}

pub fn slater5_rhs(n: i64, _: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    c.quot(&[c.pq(1, 1, 2, INF), c.pq(-1, 2, 2, INF)], &[])
}

pub fn slater5_from_odd(n: i64, cap: u64) -> Result<QSeries> {
    specialize(partition_odd_lhs(n, cap)?, &[("z", konst(-1))], &[])
}

/// `sum over members of (-1)^{#λ} q^{|λ|}`.
fn signed_count(id: ClassId, n: i64, cap: u64) -> Result<QSeries> {
    let c = Ctx::new(&[], n);
    oracle(id, &c, &[(Stat::Length, konst(-1))], cap)
}

pub fn final_p4(n: i64, cap: u64) -> Result<QSeries> {
    signed_count(ClassId::P4, n, cap)
}

pub fn final_s4(n: i64, cap: u64) -> Result<QSeries> {
    signed_count(ClassId::S4, n, cap)
}
