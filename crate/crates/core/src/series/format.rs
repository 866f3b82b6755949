//! Canonical text forms.
//!
//! Terms are ordered by q-exponent, then by exponent vector
//! lexicographically in variable-set order; coefficients are decimal.
//! Example: `1 + z*q - z^-1*q^2 + O(q^3)`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::coeff::MultiCoeff;
use super::qseries::QSeries;
use super::varset::{Exps, VarSet};

fn factors(e: &Exps, q: Option<i64>, vars: &VarSet) -> Vec<String> {
    let mut out = Vec::new();
    for (i, name) in vars.names().iter().enumerate() {
        match e.get(i) {
            0 => {}
            1 => out.push(name.clone()),
            k => out.push(format!("{name}^{k}")),
        }
    }
    match q {
        None | Some(0) => {}
        Some(1) => out.push("q".into()),
        Some(k) => out.push(format!("q^{k}")),
    }
    out
}

fn push_term(buf: &mut String, c: &BigInt, fs: Vec<String>) {
    let neg = c.is_negative();
    let abs = c.abs();
    if buf.is_empty() {
        if neg {
            buf.push('-');
        }
    } else {
        buf.push_str(if neg { " - " } else { " + " });
    }
    if fs.is_empty() {
        buf.push_str(&abs.to_string());
    } else {
        if !abs.is_one() {
            buf.push_str(&abs.to_string());
            buf.push('*');
        }
        buf.push_str(&fs.join("*"));
    }
}

/// `z + z^3`, `-2*x*y^-1`, or `0`.
pub fn coeff_to_string(c: &MultiCoeff, vars: &VarSet) -> String {
    let mut buf = String::new();
    for (e, v) in c.iter() {
        push_term(&mut buf, v, factors(e, None, vars));
    }
    if buf.is_empty() {
        buf.push('0');
    }
    buf
}

/// Flat series text, with a trailing `O(q^{N+1})` unless the series is exact.
pub fn series_to_string(s: &QSeries) -> String {
    let mut buf = String::new();
    for (k, c) in s.iter() {
        for (e, v) in c.iter() {
            push_term(&mut buf, v, factors(e, Some(k), s.vars()));
        }
    }
    if !s.is_exact() {
        if buf.is_empty() {
            buf.push_str(&format!("O(q^{})", s.max_order() + 1));
        } else {
            buf.push_str(&format!(" + O(q^{})", s.max_order() + 1));
        }
    } else if buf.is_empty() {
        buf.push('0');
    }
    buf
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::monomial::Monomial;

    #[test]
    fn canonical_order_and_signs() {
        let v = VarSet::new(["z"]).unwrap();
        let z = |k| v.exps(&[("z", k)]).unwrap();
        let s = QSeries::polynomial(
            &v,
            &[Monomial::new(1, 3, z(3)), Monomial::new(1, 1, z(1)), Monomial::one(), Monomial::new(-2, 2, z(-1))],
        )
        .truncate(3);
        assert_eq!(series_to_string(&s), "1 + z*q - 2*z^-1*q^2 + z^3*q^3 + O(q^4)");
        let c: MultiCoeff = [(z(3), BigInt::from(1)), (z(1), BigInt::from(1))].into_iter().collect();
        assert_eq!(coeff_to_string(&c, &v), "z + z^3");
        assert_eq!(coeff_to_string(&MultiCoeff::zero(), &v), "0");
        assert_eq!(coeff_to_string(&MultiCoeff::constant(-5), &v), "-5");
        assert_eq!(series_to_string(&QSeries::zero(&v, 2)), "O(q^3)");
    }
}
