use proptest::prelude::*;
use sipverify::partitions::Partition;
use sipverify::sip::{
    basis_poly_closed, basis_poly_enumerated, basis_poly_recurrence, class_by_name, class_spec, sip_decompose,
    sip_recompose, verify_sip_property, ClassId,
};
use sipverify::Error;

const SIP_CLASSES: [ClassId; 6] = [ClassId::GgA, ClassId::P4, ClassId::Sbar, ClassId::G, ClassId::GPrime, ClassId::Odd];

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn registry_round_trips_names() {
    for id in ClassId::ALL {
        assert_eq!(class_by_name(id.as_str()).unwrap().id, id);
    }
    assert!(matches!(class_by_name("p5"), Err(Error::UnknownClass(_))));
}

#[test]
fn p4_splits_by_parity_of_length() {
    let (all, even, odd) = (class_spec(ClassId::P4), class_spec(ClassId::P4e), class_spec(ClassId::P4o));
    for n in 0..=30 {
        let ms = all.members_of_weight(n, 60).unwrap();
        let e: Vec<_> = ms.iter().filter(|p| p.len() % 2 == 0).cloned().collect();
        let o: Vec<_> = ms.iter().filter(|p| p.len() % 2 == 1).cloned().collect();
        assert_eq!(even.members_of_weight(n, 60).unwrap(), e, "weight {n}");
        assert_eq!(odd.members_of_weight(n, 60).unwrap(), o, "weight {n}");
    }
}

#[test]
fn basis_partitions_are_members() {
    for id in SIP_CLASSES {
        let spec = class_spec(id);
        for b in spec.basis_up_to(25).unwrap() {
            assert!(spec.is_member(&b), "{id}: basis {b} is not a member");
            let d = sip_decompose(&spec, &b).unwrap();
            assert_eq!(d.basis, b);
            assert!(d.pi.iter().all(|&x| x == 0));
        }
    }
}

#[test]
fn hand_checked_decompositions() {
    let cases = [
        (ClassId::GgA, "12,9,5,1", "8,5,3,1", vec![4, 4, 2, 0]),
        (ClassId::P4, "1", "1", vec![0]),
        (ClassId::P4, "5", "1", vec![4]),
        (ClassId::Sbar, "7~,3", "3~,1", vec![4, 2]),
        (ClassId::Odd, "5,3,1", "1,1,1", vec![4, 2, 0]),
        (ClassId::GgA, "()", "()", vec![]),
    ];
    for (id, p, b, pi) in cases {
        let d = sip_decompose(&class_spec(id), &part(p)).unwrap();
        assert_eq!((d.basis.to_string(), d.pi.clone()), (b.to_string(), pi.clone()), "{id} {p}");
        assert_eq!(sip_recompose(&class_spec(id), &d.basis, &d.pi).unwrap(), part(p));
    }
}

#[test]
fn non_members_cite_a_rule() {
    let err = sip_decompose(&class_spec(ClassId::P4), &part("3,2")).unwrap_err();
    assert!(matches!(&err, Error::NotMember(m) if m.contains("rule (3)")), "{err}");
    assert!(sip_decompose(&class_spec(ClassId::GgA), &part("3,2")).is_err());
    let s4 = class_spec(ClassId::S4);
    assert!(matches!(sip_decompose(&s4, &part("3")), Err(Error::NoBasis(_))));
    assert!(verify_sip_property(&s4, 5, 60).is_err());
}

#[test]
fn recompose_validates_its_input() {
    let p4 = class_spec(ClassId::P4);
    // not a basis partition
    assert!(sip_recompose(&p4, &part("5"), &[0]).is_err());
    // pi not a multiple of the modulus
    assert!(sip_recompose(&p4, &part("1"), &[2]).is_err());
    // wrong length
    assert!(sip_recompose(&p4, &part("1"), &[0, 0]).is_err());
}

#[test]
fn sip_audit_is_clean_to_weight_30() {
    for id in SIP_CLASSES {
        let r = verify_sip_property(&class_spec(id), 30, 60).unwrap();
        assert!(r.is_clean(), "{id}: {:?}", r.violations);
        assert!(r.members_checked > 0);
    }
}

#[test]
fn basis_polynomials_three_ways_to_n8() {
    use sipverify::sip::max_basis_part;
    for id in [ClassId::P4, ClassId::Sbar, ClassId::G, ClassId::GPrime] {
        for n in 0..=8 {
            for h in 0..=max_basis_part(id, n) + 1 {
                let e = basis_poly_enumerated(id, n, h).unwrap();
                assert_eq!(e, basis_poly_recurrence(id, n, h).unwrap(), "{id} n={n} h={h}");
                assert_eq!(e, basis_poly_closed(id, n, h).unwrap(), "{id} n={n} h={h}");
            }
        }
    }
}

fn class_and_pair() -> impl Strategy<Value = (ClassId, Partition, Vec<u32>)> {
    (prop::sample::select(SIP_CLASSES.to_vec()), any::<prop::sample::Index>(), prop::collection::vec(0u32..4, 20))
        .prop_map(|(id, pick, raw)| {
            let spec = class_spec(id);
            let bases = spec.basis_up_to(18).unwrap();
            let b = bases[pick.index(bases.len())].clone();
            let mut mu: Vec<u32> = raw[..b.len()].to_vec();
            mu.sort_unstable_by(|a, b| b.cmp(a));
            let pi = mu.into_iter().map(|m| m * spec.modulus).collect();
            (id, b, pi)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn recompose_then_decompose((id, b, pi) in class_and_pair()) {
        let spec = class_spec(id);
        let p = sip_recompose(&spec, &b, &pi).unwrap();
        prop_assert!(spec.is_member(&p));
        prop_assert_eq!(p.weight(), b.weight() + pi.iter().map(|&x| x as u64).sum::<u64>());
        let d = sip_decompose(&spec, &p).unwrap();
        prop_assert_eq!(d.basis, b);
        prop_assert_eq!(d.pi, pi);
    }
}
