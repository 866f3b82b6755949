use num_bigint::BigInt;
use num_traits::Zero;

use super::monomial::Monomial;
use super::qseries::QSeries;
use super::varset::VarSet;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochLength {
    Finite(u32),
    Infinite,
}

/// `(base; step)_length = prod_{i < length} (1 - base * step^i)`.
///
/// The step is a monomial rather than a bare q-power so that symbols such
/// as `(x; xy)_n` are expressible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PochSpec {
    pub base: Monomial,
    pub step: Monomial,
    pub length: PochLength,
}

impl PochSpec {
    pub fn new(base: Monomial, step: Monomial, length: PochLength) -> Self {
        Self { base, step, length }
    }

    /// `(c q^a; q^d)_n` with no symbolic variables.
    pub fn q(c: i64, a: i64, d: i64, length: PochLength) -> Self {
        Self::new(Monomial::new(c, a, Default::default()), Monomial::q_power(d), length)
    }

    /// The factor monomials `base * step^i` that can affect orders `<= order`.
    pub fn factors(&self, order: i64) -> Result<Vec<Monomial>> {
        match self.length {
            PochLength::Finite(n) => {
                let mut out = Vec::with_capacity(n as usize);
                let mut m = self.base.clone();
                for _ in 0..n {
                    out.push(m.clone());
                    m = m.mul(&self.step);
                }
                Ok(out)
            }
            PochLength::Infinite => {
                if self.base.q < 1 || self.step.q < 1 {
                    return Err(Error::DivergentProduct);
                }
                let mut out = Vec::new();
                let mut m = self.base.clone();
                while m.q <= order {
                    out.push(m.clone());
                    m = m.mul(&self.step);
                }
                Ok(out)
            }
        }
    }
}

/// Expand the Pochhammer symbol, reliable through `q^order`.
pub fn pochhammer(spec: &PochSpec, vars: &VarSet, order: i64) -> Result<QSeries> {
    mul_poch(&QSeries::one(vars, order), spec)
}

/// `s * (spec)`.
pub fn mul_poch(s: &QSeries, spec: &PochSpec) -> Result<QSeries> {
    let mut out = s.clone();
    for f in spec.factors(s.max_order())? {
        out = out.mul_one_plus(&f.neg());
    }
    Ok(out)
}

/// `s / (spec)`; every factor needs a positive q-power or a unit value.
pub fn div_poch(s: &QSeries, spec: &PochSpec) -> Result<QSeries> {
    let mut out = s.clone();
    for f in spec.factors(s.max_order())? {
        out = out.div_one_plus(&f.neg())?;
    }
    Ok(out)
}

/// `1 / (spec)` reliable through `q^order`.
pub fn poch_inverse(spec: &PochSpec, vars: &VarSet, order: i64) -> Result<QSeries> {
    div_poch(&QSeries::one(vars, order), spec)
}

/// Coefficients of the Gaussian polynomial `[n, m]_u` in the formal base `u`.
///
/// Built from the Pascal recurrence `[n,m] = [n-1,m-1] + u^m [n-1,m]`; the
/// result is empty when `m < 0` or `m > n`.
pub fn gaussian_coefficients(n: i64, m: i64) -> Vec<BigInt> {
    if m < 0 || n < 0 || m > n {
        return Vec::new();
    }
    let m = m.min(n - m) as usize;
    let n = n as usize;
    // rows[j] = [i, j] for the current i
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for i in 1..=n {
        let top = m.min(i);
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(top + 1);
        for j in 0..=top {
            if j == 0 || j == i {
                next.push(vec![BigInt::from(1)]);
                continue;
            }
            let a = &rows[j - 1];
            let empty = Vec::new();
            let b = rows.get(j).unwrap_or(&empty);
            let len = a.len().max(b.len() + j);
            let mut v = vec![BigInt::zero(); len];
            for (k, c) in a.iter().enumerate() {
                v[k] += c;
            }
            for (k, c) in b.iter().enumerate() {
                v[k + j] += c;
            }
            next.push(v);
        }
        rows = next;
    }
    rows.swap_remove(m)
}

/// `[n, m]` evaluated at `u = base` as an exact polynomial.
pub fn q_binomial(vars: &VarSet, n: i64, m: i64, base: &Monomial) -> QSeries {
    let coeffs = gaussian_coefficients(n, m);
    let terms: Vec<Monomial> = coeffs
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            let p = base.pow(k as u32);
            Monomial::new(c * p.coeff, p.q, p.exps)
        })
        .collect();
    QSeries::polynomial(vars, &terms)
}

/// Both sides of the Jacobi triple product over `{z}`:
/// `sum_n z^n q^{n^2}` and `(q^2;q^2)_inf (-zq;q^2)_inf (-q/z;q^2)_inf`.
pub fn triple_product(order: i64) -> Result<(QSeries, QSeries)> {
    let vars = VarSet::new(["z"]).expect("static var set");
    let z = |k: i32| vars.exps(&[("z", k)]).expect("z declared");
    let mut terms = Vec::new();
    let mut n: i64 = 0;
    while n * n <= order {
        terms.push(Monomial::new(1, n * n, z(n as i32)));
        if n > 0 {
            terms.push(Monomial::new(1, n * n, z(-(n as i32))));
        }
        n += 1;
    }
    let lhs = QSeries::polynomial(&vars, &terms).truncate(order);
    let specs = [
        PochSpec::q(1, 2, 2, PochLength::Infinite),
        PochSpec::new(Monomial::new(-1, 1, z(1)), Monomial::q_power(2), PochLength::Infinite),
        PochSpec::new(Monomial::new(-1, 1, z(-1)), Monomial::q_power(2), PochLength::Infinite),
    ];
    let mut rhs = QSeries::one(&vars, order);
    for s in &specs {
        rhs = mul_poch(&rhs, s)?;
    }
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::coeff::MultiCoeff;

    fn ints(s: &QSeries, upto: i64) -> Vec<i64> {
        (0..=upto).map(|k| i64::try_from(s.coeff(k).constant_term()).unwrap()).collect()
    }

    #[test]
    fn small_products() {
        let v = VarSet::empty();
        let a = pochhammer(&PochSpec::q(1, 1, 1, PochLength::Finite(2)), &v, 10).unwrap();
        assert_eq!(ints(&a, 4), [1, -1, -1, 1, 0]);
        let b = pochhammer(&PochSpec::q(-1, 1, 2, PochLength::Finite(2)), &v, 10).unwrap();
        assert_eq!(ints(&b, 5), [1, 1, 0, 1, 1, 0]);
        let va = VarSet::new(["a"]).unwrap();
        let e = PochSpec::new(
            Monomial::new(1, 0, va.exps(&[("a", 1)]).unwrap()),
            Monomial::q_power(1),
            PochLength::Finite(0),
        );
        assert_eq!(pochhammer(&e, &va, 5).unwrap(), QSeries::one(&va, 5));
    }

    #[test]
    fn infinite_needs_positive_powers() {
        let v = VarSet::empty();
        assert_eq!(pochhammer(&PochSpec::q(1, 0, 1, PochLength::Infinite), &v, 5), Err(Error::DivergentProduct));
        // Euler: (q;q)_inf = 1 - q - q^2 + q^5 + q^7 - ...
        let e = pochhammer(&PochSpec::q(1, 1, 1, PochLength::Infinite), &v, 7).unwrap();
        assert_eq!(ints(&e, 7), [1, -1, -1, 0, 0, 1, 0, 1]);
        assert_eq!(e.max_order(), 7);
    }

    #[test]
    fn gaussian_polynomials() {
        let v = VarSet::empty();
        let g = |n, m| ints(&q_binomial(&v, n, m, &Monomial::q_power(1)).truncate(20), 6);
        assert_eq!(g(2, 1), [1, 1, 0, 0, 0, 0, 0]);
        assert_eq!(g(4, 2), [1, 1, 2, 1, 1, 0, 0]);
        assert_eq!(g(7, 0), [1, 0, 0, 0, 0, 0, 0]);
        assert!(q_binomial(&v, 3, 4, &Monomial::q_power(1)).is_zero());
        assert!(q_binomial(&v, 3, -1, &Monomial::q_power(1)).is_zero());
    }

    #[test]
    fn triple_product_low_orders() {
        let (l, r) = triple_product(12).unwrap();
        assert!(l.equal(&r).unwrap().is_match());
        assert_eq!(l.coeff(0), MultiCoeff::constant(1));
        let z = l.vars().exps(&[("z", 1)]).unwrap();
        let expect: MultiCoeff = [(z, BigInt::from(1)), (-z, BigInt::from(1))].into_iter().collect();
        assert_eq!(l.coeff(1), expect);
    }
}
