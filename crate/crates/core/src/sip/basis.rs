//! Basis polynomials `B(n, h)`: the weighted count of basis partitions with
//! `n` parts and largest part `h`, three ways — by enumeration, by the
//! defining recurrence, and by the Gaussian-polynomial closed form.
//!
//! Weightings: `x^{o} y^{e} q^{|b|}` for `p4`, `a^{#over} z^{#} q^{|b|}` for
//! `sbar`, and the pure `x^{|b_o|} y^{|b_e|}` for `g`/`gprime`. Values are
//! exact polynomials (possibly Laurent in `x` for the even-`h` `p4` case).

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::classes::{class_spec, ClassId};
use crate::error::{Error, Result};
use crate::partitions::{oracle_series, Stat, WeightMap};
use crate::series::{q_binomial, Monomial, QSeries, VarSet, EXACT};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisPoly {
    pub class: ClassId,
    pub n: usize,
    pub h: i64,
    pub value: QSeries,
}

fn has_poly(id: ClassId) -> Result<()> {
    match id {
        ClassId::P4 | ClassId::Sbar | ClassId::G | ClassId::GPrime => Ok(()),
        _ => Err(Error::NoBasis(format!("{id} (no basis polynomial)"))),
    }
}

/// The weight map used for `B(n, h)` of class `id`.
pub fn basis_weights(id: ClassId) -> Result<WeightMap> {
    has_poly(id)?;
    Ok(match id {
        ClassId::G | ClassId::GPrime => {
            let vars = VarSet::new(["x", "y"]).expect("static var set");
            let x = vars.exps(&[("x", 1)]).expect("x");
            let y = vars.exps(&[("y", 1)]).expect("y");
            WeightMap::new(
                vars,
                vec![(Stat::OddIndexedSum, Monomial::new(1, 0, x)), (Stat::EvenIndexedSum, Monomial::new(1, 0, y))],
            )
        }
        _ => class_spec(id).default_weights,
    })
}

fn vars_of(id: ClassId) -> VarSet {
    basis_weights(id).expect("checked").vars
}

/// `c · q^q · prod var^e` over the class's variable set.
fn mono(vars: &VarSet, q: i64, pairs: &[(&str, i64)]) -> Monomial {
    let pairs: Vec<(&str, i32)> =
        pairs.iter().map(|&(v, e)| (v, i32::try_from(e).expect("exponent fits i32"))).collect();
    Monomial::new(1, q, vars.exps(&pairs).expect("class variables"))
}

fn zero(vars: &VarSet) -> QSeries {
    QSeries::zero(vars, EXACT)
}

fn single(vars: &VarSet, m: Monomial) -> QSeries {
    QSeries::polynomial(vars, &[m])
}

/// Weighted sum over enumerated basis partitions with `n` parts and largest `h`.
pub fn basis_poly_enumerated(id: ClassId, n: usize, h: i64) -> Result<QSeries> {
    let weights = basis_weights(id)?;
    if h < 0 || (n == 0) != (h == 0) {
        return Ok(zero(&weights.vars));
    }
    let spec = class_spec(id);
    let members: Vec<_> = spec.enumerate_basis(n, h as u32)?.into_iter().filter(|b| b.largest() as i64 == h).collect();
    // basis partitions are exact polynomials: no truncation
    oracle_series(&members, &weights, EXACT)
}

type Memo = Mutex<HashMap<(ClassId, usize, i64), QSeries>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `B(n, h)` from the class recurrence, memoized per `(id, n, h)`.
pub fn basis_poly_recurrence(id: ClassId, n: usize, h: i64) -> Result<QSeries> {
    has_poly(id)?;
    if let Some(v) = memo().lock().expect("memo lock").get(&(id, n, h)) {
        return Ok(v.clone());
    }
    let v = recurrence_step(id, n, h)?;
    // values are deterministic, so a concurrent duplicate insert is harmless
    memo().lock().expect("memo lock").entry((id, n, h)).or_insert_with(|| v.clone());
    Ok(v)
}

fn recurrence_step(id: ClassId, n: usize, h: i64) -> Result<QSeries> {
    let vars = vars_of(id);
    let m = |q, pairs: &[(&str, i64)]| mono(&vars, q, pairs);
    let rec = |n, h| basis_poly_recurrence(id, n, h);
    if n == 0 {
        return Ok(if h == 0 { QSeries::polynomial(&vars, &[Monomial::one()]) } else { zero(&vars) });
    }
    if h <= 0 {
        return Ok(zero(&vars));
    }
    let two = |a: QSeries, ma: Monomial, b: QSeries, mb: Monomial| a.mul_monomial(&ma).add(&b.mul_monomial(&mb));
    Ok(match id {
        ClassId::P4 => {
            if h % 2 == 0 {
                rec(n, h - 1)?.mul_monomial(&m(1, &[("x", -1), ("y", 1)]))
            } else if n == 1 {
                if h == 1 {
                    single(&vars, m(1, &[("x", 1)]))
                } else {
                    zero(&vars)
                }
            } else {
                two(rec(n - 1, h - 2)?, m(h, &[("x", 1)]), rec(n - 1, h - 4)?, m(h + 1, &[("y", 1)]))?
            }
        }
        ClassId::Sbar => {
            if n == 1 {
                match h {
                    1 => single(&vars, m(1, &[("z", 1)])),
                    2 => single(&vars, m(2, &[("a", 1), ("z", 1)])),
                    _ => zero(&vars),
                }
            } else {
                two(rec(n - 1, h - 1)?, m(h, &[("z", 1)]), rec(n - 1, h - 2)?, m(h, &[("a", 1), ("z", 1)]))?
            }
        }
        ClassId::G => {
            if n == 1 {
                match h {
                    1 | 2 => single(&vars, m(0, &[("x", h)])),
                    _ => zero(&vars),
                }
            } else {
                two(
                    rec(n - 2, h - 3)?,
                    m(0, &[("x", h), ("y", h - 1)]),
                    rec(n - 2, h - 4)?,
                    m(0, &[("x", h), ("y", h - 2)]),
                )?
            }
        }
        ClassId::GPrime => match n {
            1 => match h {
                3 | 4 => single(&vars, m(0, &[("x", h)])),
                _ => zero(&vars),
            },
            2 => match h {
                5 | 6 => single(&vars, m(0, &[("x", h), ("y", 2)])),
                _ => zero(&vars),
            },
            _ => two(
                rec(n - 2, h - 3)?,
                m(0, &[("x", h), ("y", h - 3)]),
                rec(n - 2, h - 4)?,
                m(0, &[("x", h), ("y", h - 4)]),
            )?,
        },
        _ => unreachable!("checked by has_poly"),
    })
}

fn tri(k: i64) -> i64 {
    k * (k + 1) / 2
}

/// `B(n, h)` from the Gaussian-polynomial closed form; zero off its support.
pub fn basis_poly_closed(id: ClassId, n: usize, big_h: i64) -> Result<QSeries> {
    has_poly(id)?;
    let vars = vars_of(id);
    let n = n as i64;
    if n == 0 {
        return Ok(if big_h == 0 { QSeries::polynomial(&vars, &[Monomial::one()]) } else { zero(&vars) });
    }
    let binom = |top: i64, h: i64, base: Monomial, lead: Monomial| q_binomial(&vars, top, h, &base).mul_monomial(&lead);
    let out = match id {
        ClassId::P4 => {
            let twice = big_h - 2 * n + 1;
            if twice < 0 {
                return Ok(zero(&vars));
            }
            let q2 = Monomial::q_power(2);
            if twice % 2 == 0 {
                let h = twice / 2;
                binom(n - 1, h, q2, mono(&vars, n * n + h * h + 2 * h, &[("x", n - h), ("y", h)]))
            } else {
                let h = (twice - 1) / 2;
                binom(n - 1, h, q2, mono(&vars, n * n + h * h + 2 * h + 1, &[("x", n - h - 1), ("y", h + 1)]))
            }
        }
        ClassId::Sbar => {
            let h = big_h - n;
            binom(n, h, Monomial::q_power(1), mono(&vars, tri(n) + tri(h), &[("a", h), ("z", n)]))
        }
        ClassId::G | ClassId::GPrime => {
            let m = (n + 1) / 2;
            let (h, ex, ey) = match (id, n % 2) {
                (ClassId::G, 1) => {
                    let h = big_h - 3 * m + 2;
                    (h, (3 * m * m - m) / 2, (3 * m * m - 3 * m) / 2)
                }
                (ClassId::G, _) => {
                    let m = n / 2;
                    let h = big_h - 3 * m;
                    (h, (3 * m * m + 3 * m) / 2, (3 * m * m + m) / 2)
                }
                (_, 1) => {
                    let h = big_h - 3 * m;
                    (h, (3 * m * m + 3 * m) / 2, (3 * m * m - 3 * m) / 2)
                }
                _ => {
                    let m = n / 2;
                    let h = big_h - 3 * m - 2;
                    (h, (3 * m * m + 7 * m) / 2, (3 * m * m + m) / 2)
                }
            };
            let top = if n % 2 == 1 { m } else { n / 2 };
            if h < 0 {
                return Ok(zero(&vars));
            }
            let xy = mono(&vars, 0, &[("x", 1), ("y", 1)]);
            binom(top, h, xy, mono(&vars, 0, &[("x", ex + tri(h)), ("y", ey + tri(h) - h)]))
        }
        _ => unreachable!("checked by has_poly"),
    };
    Ok(out)
}

/// Largest `h` for which `B(n, h)` can be nonzero.
pub fn max_basis_part(id: ClassId, n: usize) -> i64 {
    let n = n as i64;
    match id {
        ClassId::P4 => 4 * n - 2,
        ClassId::Sbar => 2 * n,
        ClassId::G => 2 * n + 1,
        _ => 2 * n + 4,
    }
}
