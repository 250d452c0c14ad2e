use mindist_core::random::{random_full_rank, random_systematic};
use mindist_core::{
    brute_force_distance, build_gamma_set, minimum_distance, BitMatrix, EngineConfig, Strategy,
};
use proptest::prelude::*;

fn config(strategy: Strategy, s: usize, workers: usize) -> EngineConfig {
    EngineConfig {
        strategy,
        saved_levels: s,
        workers,
        ..EngineConfig::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_configuration_matches_brute_force(
        k in 2usize..14,
        extra in 1usize..30,
        seed in any::<u64>(),
        s in 1usize..=5,
        unroll in 1usize..=3,
        workers in 1usize..4,
    ) {
        let g = random_full_rank::<u32>(k, k + extra, seed);
        let d = brute_force_distance(&g, 28).unwrap();
        for strategy in Strategy::ALL {
            let cfg = EngineConfig { unroll, ..config(strategy, s, workers) };
            let r = minimum_distance(&g, &cfg).unwrap();
            prop_assert!(r.is_exact());
            prop_assert_eq!(r.distance, d);
            prop_assert!(r.lower >= d || r.g_reached == k);
        }
    }

    #[test]
    fn word_widths_agree(k in 2usize..12, n in 12usize..100, seed in any::<u64>()) {
        prop_assume!(k < n);
        let g32 = random_systematic::<u32>(k, n, seed).unwrap();
        let g64: BitMatrix<u64> = g32.convert();
        let a = minimum_distance(&g32, &EngineConfig::default()).unwrap();
        let b = minimum_distance(&g64, &EngineConfig::default()).unwrap();
        prop_assert_eq!(a.distance, b.distance);
        prop_assert_eq!(a.counters, b.counters);
        prop_assert_eq!(a.bounds_trace, b.bounds_trace);
    }
}

#[test]
fn bounds_trace_is_monotone() {
    let g = random_systematic::<u32>(30, 90, 11).unwrap();
    let r = minimum_distance(&g, &EngineConfig::default()).unwrap();
    for w in r.bounds_trace.windows(2) {
        assert!(w[1].lower > w[0].lower);
        assert!(w[1].upper <= w[0].upper);
        assert_eq!(w[1].g, w[0].g + 1);
    }
    let last = r.bounds_trace.last().unwrap();
    assert!(last.lower >= last.upper);
    assert_eq!(last.upper, r.distance);
}

#[test]
fn two_information_sets_finish_earlier() {
    let mut compared = 0;
    for seed in 0..12 {
        let g = random_systematic::<u32>(14, 40, seed).unwrap();
        let set = build_gamma_set(&g).unwrap();
        assert!(set.full_rank_count() >= 2);
        let two = minimum_distance(&g, &EngineConfig::default()).unwrap();
        let one = minimum_distance(
            &g,
            &EngineConfig {
                max_information_sets: Some(1),
                ..EngineConfig::default()
            },
        )
        .unwrap();
        assert_eq!(one.gamma_summary.m, 1);
        assert_eq!(one.distance, two.distance);
        if two.distance > 2 {
            assert!(two.g_reached < one.g_reached, "seed {seed}");
            compared += 1;
        }
    }
    assert!(compared > 0);
}

#[test]
fn resume_reproduces_a_full_run() {
    let g = random_systematic::<u64>(26, 80, 4).unwrap();
    let full = minimum_distance(&g, &EngineConfig::default()).unwrap();
    for cap in 1..full.g_reached {
        let part = minimum_distance(
            &g,
            &EngineConfig {
                max_g: cap,
                ..EngineConfig::default()
            },
        )
        .unwrap();
        assert!(!part.is_exact());
        let cp = part.to_text().parse().unwrap();
        let rest = minimum_distance(
            &g,
            &EngineConfig {
                resume: Some(cp),
                ..EngineConfig::default()
            },
        )
        .unwrap();
        assert_eq!(rest.distance, full.distance);
        assert_eq!(rest.bounds_trace, full.bounds_trace);
        assert_eq!(
            part.counters.combinations + rest.counters.combinations,
            full.counters.combinations
        );
    }
}

#[test]
fn parallel_runs_are_deterministic() {
    let g = random_systematic::<u32>(32, 80, 21).unwrap();
    let base = minimum_distance(&g, &config(Strategy::Saved, 3, 1)).unwrap();
    for workers in [2, 3, 8] {
        for strategy in [Strategy::Saved, Strategy::SavedUnrolled] {
            let r = minimum_distance(&g, &config(strategy, 3, workers)).unwrap();
            assert_eq!(r.distance, base.distance);
            assert_eq!(r.counters.combinations, base.counters.combinations);
            assert_eq!(r.counters.row_additions, base.counters.row_additions);
        }
    }
}
