//! Property tests for the word-level invariants and the float/exact
//! agreement of the counting profiles.

use num_traits::ToPrimitive;
use proptest::prelude::*;

use culminating::counting::{
    count_culminating, culminating_counts_upto, float_profiles, positive_counts_upto,
};
use culminating::word::{parse_word, zigzag_witness, Step, StepSystem, Word};

const SYSTEMS: [(u32, u32); 5] = [(1, 1), (2, 1), (1, 2), (3, 2), (5, 3)];

fn arb_system() -> impl Strategy<Value = StepSystem> {
    prop::sample::select(SYSTEMS.to_vec()).prop_map(|(a, b)| StepSystem::new(a, b).unwrap())
}

fn arb_word() -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY, 0..40).prop_map(|bits| {
        Word::new(
            bits.into_iter()
                .map(|up| if up { Step::Up } else { Step::Down })
                .collect(),
        )
    })
}

proptest! {
    #[test]
    fn culminating_implies_positive(sys in arb_system(), w in arb_word()) {
        if w.is_culminating(&sys) {
            prop_assert!(w.is_positive(&sys));
        }
    }

    #[test]
    fn culminating_closed_under_mirror(sys in arb_system(), w in arb_word()) {
        if w.is_culminating(&sys) {
            prop_assert!(w.mirror().is_culminating(&sys));
        }
        prop_assert_eq!(w.mirror().mirror(), w);
    }

    #[test]
    fn height_profile_consistency(sys in arb_system(), w in arb_word()) {
        let heights = w.heights(&sys);
        prop_assert_eq!(heights.len(), w.len() + 1);
        prop_assert_eq!(heights[0], 0);
        prop_assert_eq!(*heights.last().unwrap(), w.phi(&sys));
        let max = *heights.iter().max().unwrap();
        prop_assert_eq!(w.height(&sys), max);
        prop_assert!(w.height(&sys) >= w.phi(&sys));
    }

    #[test]
    fn text_round_trip(w in arb_word()) {
        prop_assert_eq!(parse_word(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn zigzag_always_culminates(sys in arb_system(), n in 0u64..24) {
        let z = zigzag_witness(&sys, n);
        prop_assert!(z.is_culminating(&sys));
    }
}

#[test]
fn all_up_words_culminate() {
    for &(a, b) in &SYSTEMS {
        let sys = StepSystem::new(a, b).unwrap();
        for n in 1..=12 {
            assert!(Word::all_up(n).is_culminating(&sys));
        }
    }
}

#[test]
fn culminating_counts_stay_positive() {
    for &(a, b) in &SYSTEMS {
        let sys = StepSystem::new(a, b).unwrap();
        for n in 1..=30 {
            assert!(count_culminating(&sys, n) >= 1u32.into(), "({a},{b}) n={n}");
        }
    }
}

#[test]
fn float_profiles_agree_with_exact_to_nano() {
    for (a, b) in [(1u32, 1u32), (1, 2)] {
        let sys = StepSystem::new(a, b).unwrap();
        let n = 200;
        let profiles = float_profiles(&sys, n);
        let c = culminating_counts_upto(&sys, n);
        let p = positive_counts_upto(&sys, n);
        for i in 0..=n {
            let scale = 2f64.powi(i as i32);
            let c_exact = c[i].to_f64().unwrap() / scale;
            let p_exact = p[i].to_f64().unwrap() / scale;
            let c_err = (profiles.culminating[i] - c_exact).abs();
            let p_err = (profiles.positive[i] - p_exact).abs();
            assert!(
                c_err <= 1e-9 * c_exact.max(f64::MIN_POSITIVE),
                "({a},{b}) c_{i}"
            );
            assert!(p_err <= 1e-9 * p_exact, "({a},{b}) p_{i}");
        }
    }
}
