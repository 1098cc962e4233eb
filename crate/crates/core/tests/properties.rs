use std::collections::BTreeSet;

use cmreg::oracle::{bivariate_box, naive_hilbert_samuel};
use cmreg::semigroup::ValueSet;
use cmreg::staircase::{StaircaseIdeal, StaircaseInstance};
use cmreg::{HilbertData, HilbertSeries};
use num_bigint::BigInt;
use proptest::prelude::*;

fn numerator() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..20, 1..8)
}

fn members(v: &ValueSet, bound: usize) -> BTreeSet<usize> {
    v.members_below(bound).collect()
}

fn closed_set() -> impl Strategy<Value = (Vec<u64>, Vec<usize>)> {
    (prop::collection::vec(2u64..12, 2..4), prop::collection::vec(0usize..20, 1..4))
}

proptest! {
    #[test]
    fn normalize_is_idempotent_and_keeps_values(q in numerator(), dim in 0u32..3) {
        let raw = HilbertSeries::raw(&q, dim);
        let once = raw.normalize();
        prop_assert_eq!(once.normalize(), once.clone());
        for t in 0..15 {
            prop_assert_eq!(raw.expand(t), once.expand(t));
        }
    }

    #[test]
    fn series_round_trip(prefix in prop::collection::vec(0u64..30, 0..10), e0 in 1u64..20) {
        let mut h = prefix.clone();
        h.extend(std::iter::repeat_n(e0, 12));
        let data = HilbertData::stabilize(1, 0, |n| Ok(h.get(n).copied().unwrap_or(e0))).unwrap();
        let series = HilbertSeries::from_data(&data, 1).unwrap();
        for (t, &v) in data.values.iter().enumerate() {
            prop_assert_eq!(series.expand(t as i64), BigInt::from(v));
        }
        let e = series.hilbert_coefficients(2);
        prop_assert_eq!(&e[0], &BigInt::from(e0));
        let p = series.postulation().finite().unwrap_or(-1);
        let sum: i64 = (0..=p).map(|t| e0 as i64 - h[t as usize] as i64).sum();
        prop_assert_eq!(&e[1], &BigInt::from(sum));
    }

    #[test]
    fn value_set_operations_match_sets((gens, shifts) in closed_set()) {
        prop_assume!(gens.iter().fold(0, |g, &a| num_integer::gcd(g, a)) == 1);
        let s = ValueSet::semigroup(&gens).unwrap();
        let a = ValueSet::translates(&shifts, &s);
        let b = ValueSet::translates(&[shifts[0] + 1], &s);
        let bound = a.conductor().max(b.conductor()) + 40;
        let (sa, sb) = (members(&a, bound), members(&b, bound));
        prop_assert_eq!(members(&a.union(&b), bound), sa.union(&sb).copied().collect::<BTreeSet<_>>());
        prop_assert_eq!(members(&a.intersection(&b), bound), sa.intersection(&sb).copied().collect::<BTreeSet<_>>());
        let sum: BTreeSet<usize> = sa.iter().flat_map(|x| sb.iter().map(move |y| x + y)).filter(|&z| z < bound).collect();
        prop_assert_eq!(members(&a.sumset(&b), bound), sum);
    }

    #[test]
    fn staircase_box_independence(
        j in prop::collection::vec((0u32..5, 0u32..5), 1..3),
        a in 1u32..4,
        b in 1u32..4,
        extra in prop::collection::vec((0u32..4, 0u32..4), 0..2),
        n in 0usize..4,
    ) {
        let mut i = vec![(a, 0), (0, b)];
        i.extend(extra.into_iter().filter(|&e| e != (0, 0)));
        let j: Vec<_> = j.into_iter().filter(|&e| e != (0, 0)).collect();
        prop_assume!(!j.is_empty());
        let Ok(inst) = StaircaseInstance::new(StaircaseIdeal::new(j), StaircaseIdeal::new(i)) else {
            return Ok(());
        };
        let side = bivariate_box(&inst, n + 1);
        prop_assert_eq!(naive_hilbert_samuel(&inst, n, side), naive_hilbert_samuel(&inst, n, 2 * side));
        let mut engine = cmreg::staircase::StaircaseEngine::new(&inst);
        prop_assert_eq!(engine.hilbert_samuel(n).unwrap(), naive_hilbert_samuel(&inst, n, side));
    }

    #[test]
    fn staircase_products_are_minimal_and_commute(
        p in prop::collection::vec((0u32..6, 0u32..6), 1..4),
        q in prop::collection::vec((0u32..6, 0u32..6), 1..4),
    ) {
        let (p, q) = (StaircaseIdeal::new(p), StaircaseIdeal::new(q));
        let pq = p.product(&q);
        prop_assert_eq!(&pq, &q.product(&p));
        prop_assert!(pq.is_subset(&p.intersect(&q)));
        let gens = pq.gens();
        for (k, g) in gens.iter().enumerate() {
            for (l, h) in gens.iter().enumerate() {
                prop_assert!(k == l || !(h.0 <= g.0 && h.1 <= g.1));
            }
        }
        prop_assert!(p.colon(&q).product(&q).is_subset(&p));
    }
}
