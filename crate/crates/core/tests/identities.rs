use std::collections::BTreeSet;

use sipverify::identities::{
    build_side, catalog, lookup, negative_controls, oracle_crosscheck, verify, verify_all, Status,
};
use sipverify::series::{div_poch, series_to_string, EqualityReport, Monomial, PochLength, PochSpec, QSeries, VarSet};
use sipverify::Error;

const CAP: u64 = 60;

fn side(id: &str, s: &str, n: i64) -> QSeries {
    build_side(id, s, n, CAP).unwrap()
}

/// Substitute each `(var, c)` by the constant `c` and drop the variable.
fn at(s: &QSeries, subs: &[(&str, i64)]) -> QSeries {
    let mut out = s.clone();
    for &(v, c) in subs {
        out = out.substitute(v, &Monomial::constant(c)).unwrap();
    }
    let keep: Vec<&str> =
        s.vars().names().iter().map(String::as_str).filter(|n| subs.iter().all(|(v, _)| v != n)).collect();
    out.with_vars(&VarSet::new(keep).unwrap()).unwrap()
}

fn assert_same(a: &QSeries, b: &QSeries, what: &str) {
    let r = a.equal(b).unwrap();
    assert!(r.is_match(), "{what}: {r:?}");
}

#[test]
fn catalog_is_well_formed() {
    let mut ids = BTreeSet::new();
    for rec in catalog().iter().chain(negative_controls()) {
        assert!(ids.insert(rec.id), "duplicate id {}", rec.id);
        assert!(rec.sides.len() >= 2, "{} has fewer than two sides", rec.id);
        let names: BTreeSet<_> = rec.side_names().into_iter().collect();
        assert_eq!(names.len(), rec.sides.len(), "{} repeats a side name", rec.id);
        assert!(rec.side("LHS").is_ok() && rec.side("rhs").is_ok() || rec.id == "final-thm", "{}", rec.id);
        assert!(!rec.anchor.is_empty());
        assert_eq!(rec.default_order, 60);
    }
    assert!(matches!(lookup("no-such"), Err(Error::UnknownIdentity(_))));
    assert!(matches!(build_side("slater-4", "middle", 5, CAP), Err(Error::UnknownSide { .. })));
}

#[test]
fn degenerate_and_moderate_orders() {
    assert!(verify_all(1, CAP).iter().all(|r| r.is_match()));
    let reports = verify_all(30, CAP);
    let ids: Vec<&str> = reports.iter().map(|r| r.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted, "reports are in id order");
    for r in &reports {
        assert_eq!(r.status, Status::Match, "{}", r.to_text(false));
    }
}

#[test]
fn documented_small_expansions() {
    assert_eq!(series_to_string(&side("slater-4", "rhs", 6)), "1 - q - q^2 + q^4 - q^6 + O(q^7)");
    assert_eq!(series_to_string(&side("partition-odd", "rhs", 3)), "1 + z*q + z^2*q^2 + z*q^3 + z^3*q^3 + O(q^4)");
    assert_eq!(series_to_string(&side("jacobi-triple", "lhs", 1)), "1 + z^-1*q + z*q + O(q^2)");
}

#[test]
fn perturbed_builder_is_caught() {
    let lhs = side("slater-4", "lhs", 20);
    // drop the factor (1 - q^5) from the product side
    let rhs = div_poch(&side("slater-4", "rhs", 20), &PochSpec::q(1, 5, 1, PochLength::Finite(1))).unwrap();
    match lhs.equal(&rhs).unwrap() {
        EqualityReport::Mismatch { q_exponent, .. } => assert_eq!(q_exponent, 5),
        m => panic!("expected a mismatch, got {m:?}"),
    }
}

#[test]
fn negative_controls_mismatch() {
    for rec in negative_controls() {
        let r = verify(rec.id, 20, CAP).unwrap();
        assert_eq!(r.status, Status::Mismatch, "{}", rec.id);
    }
    let r = verify("gprime-gen-literal", 20, CAP).unwrap();
    assert_eq!(r.first_mismatch.unwrap().q_exponent, 3);
}

#[test]
fn p4_symmetry_under_x_q_negation() {
    let s = side("p4-gen", "lhs", 40);
    let x = s.vars().exps(&[("x", 1)]).unwrap();
    let t = s.substitute("x", &Monomial::new(-1, 0, x)).unwrap().substitute_q(true, 1).unwrap();
    assert_same(&s, &t, "(x,q) -> (-x,-q)");
}

#[test]
fn p4_specializations() {
    let n = 40;
    assert_same(&at(&side("p4-gen", "lhs", n), &[("x", -1), ("y", -1)]), &side("slater-4", "lhs", n), "slater-4");
    assert_same(&at(&side("p4-gen", "lhs", n), &[("x", 1), ("y", 1)]), &side("slater-25", "lhs", n), "slater-25");
    assert_same(&at(&side("p4-gen-e", "lhs", n), &[("x", -1), ("y", 1)]), &side("slater-51", "lhs", n), "slater-51");
    let odd = at(&side("p4-gen-o", "lhs", n + 1), &[("x", -1), ("y", 1)]).neg().shift_q(-1);
    assert_same(&odd, &side("slater-55", "lhs", n), "slater-55");
}

#[test]
fn positional_and_alternating_weights_agree_at_one() {
    let n = 30;
    assert_same(
        &at(&side("gxy-gen", "lhs", n), &[("x", 1), ("y", 1)]),
        &at(&side("g-gen", "lhs", n), &[("z", 1)]),
        "G",
    );
    assert_same(
        &at(&side("gpxy-gen", "lhs", n), &[("x", 1), ("y", 1)]),
        &at(&side("gprime-gen", "lhs", n), &[("z", 1)]),
        "G'",
    );
}

#[test]
fn counting_series_are_nonnegative() {
    for (id, s) in [
        ("gg-36", "oracle"),
        ("p4-gen", "oracle"),
        ("sbar-gen", "oracle"),
        ("g-gen", "oracle"),
        ("gprime-gen", "oracle"),
        ("gxy-gen", "oracle"),
        ("gpxy-gen", "oracle"),
        ("partition-odd", "oracle"),
        ("p4-gen", "lhs"),
        ("gxy-gen", "lhs"),
    ] {
        assert!(!side(id, s, 30).has_negative_coefficient(), "{id}:{s}");
    }
}

#[test]
fn oracle_crosschecks_at_25() {
    for id in ["p4-gen", "sbar-gen", "g-gen", "gprime-gen", "gxy-gen", "gpxy-gen", "partition-odd", "gg-36"] {
        let r = oracle_crosscheck(id, 25, CAP).unwrap();
        assert!(r.is_match(), "{}", r.to_text(false));
    }
    assert!(oracle_crosscheck("slater-4", 10, CAP).is_err());
}

#[test]
fn sears_chain_reaches_slater_19() {
    for id in ["sears-517", "slater-19", "rogers-518"] {
        let r = verify(id, 40, CAP).unwrap();
        assert!(r.is_match(), "{}", r.to_text(false));
    }
}

#[test]
fn cap_limits_oracle_sides_only() {
    let r = verify("gg-36", 30, 20).unwrap();
    assert_eq!(r.status, Status::Error);
    assert!(matches!(r.error, Some(Error::CapExceeded { .. })));
    assert!(verify("slater-19", 80, 20).unwrap().is_match());
}
