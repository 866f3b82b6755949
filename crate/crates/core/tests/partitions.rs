use proptest::prelude::*;
use sipverify::partitions::{
    enumerate_overpartitions_strict, enumerate_partitions, ferrers_compose, ferrers_decompose, format_vector,
    oracle_series, stats_of, validate_strict_overpartition, FerrersSplit, Partition, Stat, WeightMap,
};
use sipverify::series::{pochhammer, Monomial, PochLength, PochSpec, VarSet};
use sipverify::Error;

fn arb_partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn arb_odd_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..15, 0..12).prop_map(|v| {
        let mut parts: Vec<u32> = v.into_iter().map(|k| 2 * k + 1).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

#[test]
fn partition_numbers_match_euler_product() {
    let v = VarSet::empty();
    let gf = pochhammer(&PochSpec::q(1, 1, 1, PochLength::Infinite), &v, 30).unwrap().inverse().unwrap();
    for n in 0..=30u64 {
        let count = enumerate_partitions(n, 60).unwrap().len();
        assert_eq!(gf.coeff(n as i64).constant_term(), count.into(), "p({n})");
    }
}

#[test]
fn strict_overpartitions_are_valid_and_distinct() {
    for n in 0..=18 {
        let all = enumerate_overpartitions_strict(n, 60).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for p in &all {
            validate_strict_overpartition(p).unwrap();
            assert_eq!(p.weight(), n);
            assert!(seen.insert(p.to_string()), "duplicate {p}");
        }
    }
    assert_eq!(enumerate_overpartitions_strict(2, 60).unwrap().len(), 2);
}

#[test]
fn length_tracking_oracle() {
    let vars = VarSet::new(["z"]).unwrap();
    let weights = WeightMap::new(
        vars.clone(),
        vec![
            (Stat::Weight, Monomial::q_power(1)),
            (Stat::Length, Monomial::new(1, 0, vars.exps(&[("z", 1)]).unwrap())),
        ],
    );
    let members = enumerate_partitions(4, 60).unwrap();
    let s = oracle_series(members.iter(), &weights, 4).unwrap();
    // 4, 3+1, 2+2, 2+1+1, 1+1+1+1
    assert_eq!(sipverify::series::coeff_to_string(&s.coeff(4), &vars), "z + 2*z^2 + z^3 + z^4");
}

#[test]
fn cap_is_enforced() {
    assert!(matches!(enumerate_partitions(61, 60), Err(Error::CapExceeded { requested: 61, cap: 60 })));
    assert!(enumerate_overpartitions_strict(10, 5).is_err());
}

#[test]
fn parse_errors() {
    for bad in ["2,3", "0", "a", "3,,1", "3~~"] {
        assert!(bad.parse::<Partition>().is_err(), "{bad} should not parse");
    }
    assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
    assert_eq!(" 7~, 3 ".parse::<Partition>().unwrap().to_string(), "7~,3");
    assert_eq!(format_vector(&[4, 4, 2, 0]), "4,4,2,0");
}

#[test]
fn ferrers_rejects_bad_input() {
    assert!(ferrers_decompose(&"4,1".parse().unwrap()).is_err());
    let split = |n, r: &str, b: &str| FerrersSplit { n, right: r.parse().unwrap(), below: b.parse().unwrap() };
    assert!(ferrers_compose(&split(1, "2,2", "")).is_err());
    assert!(ferrers_compose(&split(1, "3", "")).is_err());
    assert!(ferrers_compose(&split(1, "", "5")).is_err());
    assert_eq!(ferrers_compose(&split(1, "2", "3,1")).unwrap().to_string(), "5,3,1");
}

proptest! {
    #[test]
    fn display_parse_roundtrip(p in arb_partition(10, 30)) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn stats_are_consistent(p in arb_partition(12, 20)) {
        let s = stats_of(&p);
        prop_assert_eq!(s.length, p.len() as u64);
        prop_assert_eq!(s.odd_parts + s.even_parts, s.length);
        prop_assert_eq!(s.odd_indexed_sum + s.even_indexed_sum, s.weight);
        prop_assert_eq!(s.alt_sum, s.odd_indexed_sum as i64 - s.even_indexed_sum as i64);
        prop_assert_eq!(s.weight, p.weight());
    }

    #[test]
    fn ferrers_roundtrip(p in arb_odd_partition()) {
        let split = ferrers_decompose(&p).unwrap();
        prop_assert_eq!(split.weight(), p.weight());
        prop_assert!(split.right.len() <= split.n as usize);
        prop_assert!(split.below.largest() <= 2 * split.n + 1);
        prop_assert_eq!(ferrers_compose(&split).unwrap(), p);
    }
}
