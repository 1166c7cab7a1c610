use num_bigint::BigUint;
use pcount_core::oracle::{self, count_by_predicate, enumerate_partitions};
use pcount_core::restricted::{complement, evaluate, p_m, q_m};
use pcount_core::{gp_terms_up_to, PTable, Restriction};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn formula_matches_dp(m in 1u64..25, n in 0u64..400) {
        let mut t = PTable::new();
        let pm = oracle::p_m_dp(m, n).unwrap();
        let qm = oracle::q_m_dp(m, n).unwrap();
        prop_assert_eq!(&p_m(&mut t, m, n).unwrap(), &pm);
        prop_assert_eq!(&q_m(&mut t, m, n).unwrap(), &qm);
        prop_assert_eq!(pm, qm);
    }

    #[test]
    fn complement_adds_up(m in 1u64..30, n in 0u64..600) {
        let mut t = PTable::new();
        let inside = p_m(&mut t, m, n).unwrap();
        let outside = complement(&mut t, m, n).unwrap();
        prop_assert_eq!(inside + outside, t.p(n as i64));
    }

    #[test]
    fn extension_order_is_irrelevant(steps in prop::collection::vec(0u64..400, 1..6)) {
        let mut stepped = PTable::new();
        for &s in &steps {
            stepped.extend(s);
        }
        let top = *steps.iter().max().unwrap();
        let mut once = PTable::new();
        once.extend(top);
        prop_assert_eq!(stepped.counts(), once.counts());
        prop_assert_eq!(stepped.stats().extensions, top);
    }

    #[test]
    fn cache_text_round_trips(n in 0u64..300) {
        let mut t = PTable::new();
        t.extend(n);
        let mut buf = Vec::new();
        t.write_to(&mut buf).unwrap();
        let back = PTable::read_from(buf.as_slice()).unwrap();
        prop_assert_eq!(back.counts(), t.counts());
    }

    #[test]
    fn predicate_counts_match_formula(m in 1u64..8, n in 0u64..=30) {
        let mut t = PTable::new();
        let free = count_by_predicate(n, Restriction::modulus_free(m).unwrap()).unwrap();
        let bound = count_by_predicate(n, Restriction::multiplicity_bound(m).unwrap()).unwrap();
        prop_assert_eq!(&free, &p_m(&mut t, m, n).unwrap());
        prop_assert_eq!(&bound, &q_m(&mut t, m, n).unwrap());
    }
}

#[test]
fn truncation_term_count() {
    let mut t = PTable::new();
    let e = evaluate(&mut t, 7, 164).unwrap();
    // 7, 14, 35, 49, 84, 105, 154 fit under 164; 182 does not
    assert_eq!(e.terms, 7);
    assert_eq!(e.terms, gp_terms_up_to(164 / 7).len());
}

#[test]
fn enumeration_cardinalities() {
    let dp = oracle::p_dp_table(40);
    for n in 0..=40u64 {
        let listed = enumerate_partitions(n).unwrap().count();
        assert_eq!(BigUint::from(listed), dp[n as usize], "n = {n}");
    }
    assert_eq!(enumerate_partitions(17).unwrap().count(), 297);
}

#[test]
fn m_one_for_q_side() {
    let mut t = PTable::new();
    for n in 1..=200 {
        assert_eq!(q_m(&mut t, 1, n).unwrap(), BigUint::ZERO);
    }
    assert_eq!(q_m(&mut t, 1, 0).unwrap(), BigUint::from(1u32));
}
