//! `λ = b + π` decomposition into a basis partition and a weakly decreasing
//! vector of multiples of the modulus, found by bounded search.

use super::classes::{from_parts, to_parts, ClassSpec, Part};
use crate::error::{Error, Result};
use crate::partitions::{format_vector, Partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub basis: Partition,
    pub pi: Vec<u32>,
}

/// Every decomposition of `p`, stopping once `limit` have been found.
///
/// Works from the smallest part up: `b_n` must satisfy the last-part basis
/// rule, and each `b_i` must satisfy the pair rule with `b_{i+1}` while
/// keeping `π_i >= π_{i+1}`. Overline flags carry over from `λ` to `b`.
pub fn all_decompositions(spec: &ClassSpec, p: &Partition, limit: usize) -> Result<Vec<Decomposition>> {
    let rules = *spec.basis_rules()?;
    let lam = to_parts(p);
    let n = lam.len();
    if let Some(len) = rules.length {
        if len(n).is_some() {
            return Ok(Vec::new());
        }
    }
    let k = spec.modulus;
    let mut out = Vec::new();
    let mut b = vec![Part::plain(0); n];
    let mut pi = vec![0u32; n];

    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        lam: &[Part],
        k: u32,
        rules: &super::classes::Rules,
        b: &mut [Part],
        pi: &mut [u32],
        out: &mut Vec<Decomposition>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        let n = lam.len();
        let floor = if i + 1 < n { pi[i + 1] } else { 0 };
        let mut j = floor;
        while j < lam[i].value {
            let cand = Part { value: lam[i].value - j, over: lam[i].over };
            let ok = if i + 1 == n {
                (rules.last)(n, cand).is_none()
            } else {
                (rules.pair)(i + 1, cand, b[i + 1]).is_none()
            };
            if ok {
                b[i] = cand;
                pi[i] = j;
                if i == 0 {
                    out.push(Decomposition { basis: from_parts(b), pi: pi.to_vec() });
                    if out.len() >= limit {
                        return;
                    }
                } else {
                    go(i - 1, lam, k, rules, b, pi, out, limit);
                }
            }
            j += k;
        }
    }

    if n == 0 {
        return Ok(vec![Decomposition { basis: Partition::empty(), pi: Vec::new() }]);
    }
    go(n - 1, &lam, k, &rules, &mut b, &mut pi, &mut out, limit);
    Ok(out)
}

/// The unique decomposition of a member.
pub fn sip_decompose(spec: &ClassSpec, p: &Partition) -> Result<Decomposition> {
    spec.check_member(p)?;
    let found = all_decompositions(spec, p, 2)?;
    match found.len() {
        0 => Err(Error::Decomposition(format!("{p} has no decomposition in class {}", spec.id))),
        1 => Ok(found.into_iter().next().expect("one element")),
        _ => Err(Error::Decomposition(format!(
            "{p} decomposes more than once in class {}: {} + {} and {} + {}",
            spec.id,
            found[0].basis,
            format_vector(&found[0].pi),
            found[1].basis,
            format_vector(&found[1].pi)
        ))),
    }
}

/// `λ_i = b_i + π_i`; the output is checked for membership.
pub fn sip_recompose(spec: &ClassSpec, b: &Partition, pi: &[u32]) -> Result<Partition> {
    spec.check_basis(b)?;
    if pi.len() != b.len() {
        return Err(Error::Decomposition(format!("basis {b} has {} parts but π has {}", b.len(), pi.len())));
    }
    if let Some(x) = pi.iter().find(|&&x| x % spec.modulus != 0) {
        return Err(Error::Decomposition(format!("π entry {x} is not a multiple of {}", spec.modulus)));
    }
    if pi.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Decomposition(format!("π = {} is not weakly decreasing", format_vector(pi))));
    }
    let parts: Vec<u32> = b.parts().iter().zip(pi).map(|(x, y)| x + y).collect();
    let p = Partition::with_overlines(parts, b.overlined().to_vec())
        .map_err(|e| Error::Decomposition(format!("recomposition of {b} + {} failed: {e}", format_vector(pi))))?;
    spec.check_member(&p).map_err(|e| Error::Decomposition(format!("recomposed partition is not a member: {e}")))?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sip::{class_spec, ClassId};

    #[test]
    fn worked_decomposition() {
        let a = class_spec(ClassId::GgA);
        let d = sip_decompose(&a, &"12,9,5,1".parse().unwrap()).unwrap();
        assert_eq!(d.basis.to_string(), "8,5,3,1");
        assert_eq!(d.pi, [4, 4, 2, 0]);
        let back = sip_recompose(&a, &"8,5,3,1".parse().unwrap(), &[4, 4, 2, 0]).unwrap();
        assert_eq!(back.to_string(), "12,9,5,1");
    }

    #[test]
    fn p4_singletons_and_basis_fixed_points() {
        let p4 = class_spec(ClassId::P4);
        let d = sip_decompose(&p4, &"5".parse().unwrap()).unwrap();
        assert_eq!((d.basis.to_string(), d.pi), ("1".to_string(), vec![4]));
        let d = sip_decompose(&p4, &"1".parse().unwrap()).unwrap();
        assert_eq!((d.basis.to_string(), d.pi), ("1".to_string(), vec![0]));
        for b in p4.enumerate_basis(3, 12).unwrap() {
            assert_eq!(sip_decompose(&p4, &b).unwrap(), Decomposition { pi: vec![0; 3], basis: b });
        }
        assert!(matches!(sip_decompose(&p4, &"3,2".parse().unwrap()), Err(Error::NotMember(_))));
    }

    #[test]
    fn recompose_rejects_bad_input() {
        let p4 = class_spec(ClassId::P4);
        let b: Partition = "4,1".parse().unwrap();
        assert!(sip_recompose(&p4, &b, &[2, 0]).is_err());
        assert!(sip_recompose(&p4, &b, &[0, 4]).is_err());
        assert!(sip_recompose(&p4, &b, &[4]).is_err());
        assert_eq!(sip_recompose(&p4, &b, &[4, 4]).unwrap().to_string(), "8,5");
    }

    #[test]
    fn overlines_carry_over() {
        let s = class_spec(ClassId::Sbar);
        let d = sip_decompose(&s, &"7~,3".parse().unwrap()).unwrap();
        assert_eq!(d.basis.to_string(), "3~,1");
        assert_eq!(d.pi, [4, 2]);
    }
}
