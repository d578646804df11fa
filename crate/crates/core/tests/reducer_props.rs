use gdp_core::oracle::{reducible_bruteforce, CatalanSampler};
use gdp_core::{
    is_valid_decomposition, reduce, reduce_equality, reduce_strict, reduce_y1, Certificate,
    ReduceOutcome, RunProfile, SearchBudget, SignedList, DEFAULT_SEARCH_LIMIT,
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

/// Single-peak lists with `cost == width`: an up-run of `p` entries with
/// maximum `α` and a down-run of `α + β - p` entries with maximum `β`.
fn single_peak() -> impl Strategy<Value = SignedList> {
    (1i64..=7, 1i64..=7, any::<u64>()).prop_filter_map("masses differ", |(alpha, beta, seed)| {
        use rand::seq::SliceRandom;
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = rng.gen_range(1..(alpha + beta)) as usize;
        let n = (alpha + beta) as usize - p;
        let mut up: Vec<i64> = (0..p).map(|_| rng.gen_range(1..=alpha)).collect();
        up[0] = alpha;
        up.shuffle(&mut rng);
        let mass: i64 = up.iter().sum();
        // Fill the down-run to the same mass, one unit at a time.
        let mut down = vec![1i64; n];
        down[0] = beta;
        let mut missing = mass - down.iter().sum::<i64>();
        if missing < 0 || missing > (n as i64 - 1) * (beta - 1) {
            return None;
        }
        while missing > 0 {
            let i = rng.gen_range(1..n);
            if down[i] < beta {
                down[i] += 1;
                missing -= 1;
            }
        }
        down.shuffle(&mut rng);
        let mut v = up;
        v.extend(down.iter().map(|d| -d));
        SignedList::new(v).ok()
    })
}

proptest! {
    #[test]
    fn dispatch_matches_cost_width_regimes(xs in catalan_list(16)) {
        let runs = RunProfile::of(&xs).unwrap();
        let (cost, width) = (runs.cost(), xs.len() as i64);
        let outcome = reduce(&xs, DEFAULT_SEARCH_LIMIT).unwrap();
        match &outcome {
            ReduceOutcome::Decomposition { decomposition, .. } => {
                prop_assert!(is_valid_decomposition(&xs, &decomposition.part));
            }
            ReduceOutcome::Irreducible(Certificate::Coprime { .. }) => {
                prop_assert_eq!(cost, width);
                prop_assert_eq!(runs.y, 1);
            }
            ReduceOutcome::Irreducible(Certificate::Exhaustive { .. }) => prop_assert!(cost > width),
            ReduceOutcome::Undecided { .. } => prop_assert!(false, "t ≤ 16 is within the limit"),
        }
        if cost < width {
            let d = reduce_strict(&xs).unwrap();
            prop_assert!(is_valid_decomposition(&xs, &d.part));
        }
        if cost == width && runs.y > 1 {
            let d = reduce_equality(&xs).unwrap();
            prop_assert!(is_valid_decomposition(&xs, &d.part));
        }
        let brute = reducible_bruteforce(&xs, &SearchBudget::default()).unwrap();
        prop_assert_eq!(outcome.is_irreducible(), brute.is_none());
    }

    #[test]
    fn single_peak_verdicts_match_bruteforce(xs in single_peak()) {
        let runs = RunProfile::of(&xs).unwrap();
        prop_assert_eq!((runs.y, runs.cost()), (1, xs.len() as i64));
        let outcome = reduce_y1(&xs).unwrap();
        if let Some(d) = outcome.decomposition() {
            prop_assert!(is_valid_decomposition(&xs, &d.part));
        }
        let brute = reducible_bruteforce(&xs, &SearchBudget::default()).unwrap();
        prop_assert_eq!(outcome.is_irreducible(), brute.is_none());
    }

    #[test]
    fn coprime_certificates_describe_two_value_lists(xs in single_peak()) {
        let outcome = reduce(&xs, DEFAULT_SEARCH_LIMIT).unwrap();
        if let ReduceOutcome::Irreducible(Certificate::Coprime { alpha1, beta1, positives, negatives }) = outcome {
            prop_assert!(xs.entries().iter().all(|&v| v == alpha1 || v == -beta1));
            prop_assert_eq!(positives as i64, beta1);
            prop_assert_eq!(negatives as i64, alpha1);
            let (mut a, mut b) = (alpha1, beta1);
            while b != 0 {
                (a, b) = (b, a % b);
            }
            prop_assert_eq!(a, 1);
        }
    }
}

#[test]
fn reduce_matches_bruteforce_on_random_lists() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let budget = SearchBudget::default();
    for t in 2..=12 {
        let sampler = CatalanSampler::new(t, 4);
        for _ in 0..1000 {
            let xs = sampler.sample(&mut rng).unwrap();
            let outcome = reduce(&xs, t).unwrap();
            let brute = reducible_bruteforce(&xs, &budget).unwrap();
            assert_eq!(outcome.decomposition().is_some(), brute.is_some(), "{xs}");
        }
    }
}

#[test]
fn cost_width_regimes_are_all_exercised() {
    // Guards the generators above against drifting into a single regime.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut below, mut equal, mut above) = (0, 0, 0);
    for t in [4, 6, 8, 10] {
        let sampler = CatalanSampler::new(t, 3);
        for _ in 0..200 {
            let xs = sampler.sample(&mut rng).unwrap();
            match RunProfile::of(&xs).unwrap().cost().cmp(&(t as i64)) {
                std::cmp::Ordering::Less => below += 1,
                std::cmp::Ordering::Equal => equal += 1,
                std::cmp::Ordering::Greater => above += 1,
            }
        }
    }
    assert!(
        below > 0 && equal > 0 && above > 0,
        "{below} {equal} {above}"
    );
}
