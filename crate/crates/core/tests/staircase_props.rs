use gdp_core::oracle::{all_catalan_subsets, CatalanSampler};
use gdp_core::{
    build_pi, build_sigma, check_order_transfer, phase_profile, restrict_through, SearchBudget,
    SignedList,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn catalan_list(max_len: usize) -> impl Strategy<Value = SignedList> {
    (2..=max_len, 1i64..=5, any::<u64>()).prop_filter_map(
        "no lists of this shape",
        |(t, max_abs, seed)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            CatalanSampler::new(t, max_abs).sample(&mut rng)
        },
    )
}

proptest! {
    #[test]
    fn pi_is_a_bijection_with_catalan_image(xs in catalan_list(20)) {
        let p = build_pi(&xs).unwrap();
        prop_assert!(p.is_bijection());
        prop_assert_eq!(p.apply(1), 1);
        prop_assert!(p.reordered.is_generalized_catalan());
        let inv = p.inverse();
        for q in 1..=p.len() {
            prop_assert_eq!(inv[p.apply(q) - 1], q);
            prop_assert_eq!(p.reordered.at(q), xs.at(p.apply(q)));
        }
    }

    #[test]
    fn pi_respects_order_transfer(xs in catalan_list(20)) {
        prop_assert!(check_order_transfer(&xs, &build_pi(&xs).unwrap()));
    }

    #[test]
    fn restriction_transfers_catalan_sublists(xs in catalan_list(12)) {
        let p = build_pi(&xs).unwrap();
        for steps in all_catalan_subsets(&p.reordered, &SearchBudget::default()).unwrap() {
            let image = restrict_through(&xs, &p, &steps).unwrap();
            prop_assert!(xs.sublist(&image).unwrap().is_generalized_catalan());
        }
    }

    #[test]
    fn phase_profile_invariants(xs in catalan_list(20)) {
        let p = build_pi(&xs).unwrap();
        let profile = phase_profile(&xs, &p).unwrap();
        prop_assert_eq!(profile.check_invariants(&p), Ok(()));
        prop_assert_eq!(profile.up_phases[0].start(), &1);
        prop_assert_eq!(profile.down_phases[0].start(), &0);
        prop_assert_eq!(profile.up_phases.last().unwrap().end(), &xs.len());
    }

    #[test]
    fn sigma_is_a_bijection_on_zero_sum_lists(
        v in prop::collection::vec(prop_oneof![-4i64..=-1, 1i64..=4], 1..12),
    ) {
        let mut v = v;
        let sum: i64 = v.iter().sum();
        if sum != 0 {
            v.push(-sum);
        }
        let xs = SignedList::new(v).unwrap();
        let s = build_sigma(&xs).unwrap();
        prop_assert!(s.is_bijection());
        prop_assert_eq!(s.apply(1), 1);
        prop_assert_eq!(*s.running_sums.last().unwrap(), 0);
    }
}
