//! Property tests for the core invariants: transform roundtrips, bounds,
//! axiom-checker agreement, and conditional duality.

use std::sync::Arc;

use beliefkit::belief::{
    check_belief_axioms, CheckMode, MassFunction,
};
use beliefkit::conditioning::{condition, ConditioningRule};
use beliefkit::frame::{Frame, FrameExt};
use beliefkit::rational::{rat, Rat};
use beliefkit::setfn::SetFunction;
use num::{One, Zero};
use proptest::prelude::*;

/// Random mass function over a random frame of up to `max_n` elements.
fn arb_mass(max_n: usize) -> impl Strategy<Value = MassFunction> {
    (1..=max_n).prop_flat_map(|n| {
        let frame = Frame::with_size(n).unwrap();
        let full = frame.full_mask();
        prop::collection::vec((1..=full, 1..=100u64), 1..=6).prop_map(move |pairs| {
            let total: u64 = pairs.iter().map(|(_, w)| w).sum();
            let mut f = SetFunction::zero(Arc::clone(&frame));
            for (mask, w) in pairs {
                let cur = f.at_mask(mask).clone();
                f.set_mask(mask, cur + Rat::new(w.into(), total.into()));
            }
            MassFunction::try_new(f).unwrap()
        })
    })
}

/// Arbitrary small-rational table over a frame of up to 3 elements; not
/// necessarily a belief function (or even normalized).
fn arb_table() -> impl Strategy<Value = SetFunction> {
    (1..=3usize).prop_flat_map(|n| {
        let frame = Frame::with_size(n).unwrap();
        let len = frame.num_subsets();
        prop::collection::vec((-2i64..=8, 1i64..=8), len).prop_map(move |cells| {
            let values = cells.into_iter().map(|(p, q)| rat(p, q)).collect();
            SetFunction::new(Arc::clone(&frame), values).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mobius_roundtrip_is_identity(mass in arb_mass(6)) {
        let bel = mass.belief();
        prop_assert_eq!(bel.mass(), &mass);
        // And through the raw transforms as well.
        prop_assert_eq!(&bel.set_function().mobius(), mass.set_function());
    }

    #[test]
    fn subset_sums_match_the_naive_double_loop(mass in arb_mass(4)) {
        let bel = mass.belief();
        let values = mass.set_function().values();
        for a in 0..values.len() {
            let mut naive = Rat::zero();
            for b in 0..values.len() {
                if b & !a == 0 {
                    naive += values[b].clone();
                }
            }
            prop_assert_eq!(bel.belief_mask(a as u64), &naive);
        }
    }

    #[test]
    fn belief_is_bounded_and_monotone(mass in arb_mass(5)) {
        let bel = mass.belief();
        let frame = bel.frame();
        for a in frame.subsets() {
            let b = bel.belief(&a);
            let pl = bel.plausibility(&a);
            prop_assert!(&Rat::zero() <= b);
            prop_assert!(b <= &pl);
            prop_assert!(pl <= Rat::one());
        }
        for a in 0..frame.num_subsets() as u64 {
            for b in 0..frame.num_subsets() as u64 {
                if a & !b == 0 {
                    prop_assert!(bel.belief_mask(a) <= bel.belief_mask(b));
                }
            }
        }
    }

    #[test]
    fn check_modes_agree_on_arbitrary_tables(f in arb_table()) {
        let mobius = check_belief_axioms(&f, CheckMode::Mobius).unwrap();
        let direct = check_belief_axioms(&f, CheckMode::Direct).unwrap();
        prop_assert_eq!(mobius.ok(), direct.ok());
    }

    #[test]
    fn check_modes_agree_on_valid_beliefs(mass in arb_mass(3)) {
        let bel = mass.belief();
        let mobius = check_belief_axioms(bel.set_function(), CheckMode::Mobius).unwrap();
        let direct = check_belief_axioms(bel.set_function(), CheckMode::Direct).unwrap();
        prop_assert!(mobius.ok());
        prop_assert!(direct.ok());
    }

    #[test]
    fn conditionals_are_dual_and_supported_inside_the_event(
        mass in arb_mass(5),
        b_bits in 1u64..32,
        rule_ds in any::<bool>(),
    ) {
        let bel = mass.belief();
        let frame = bel.frame();
        let b = frame.subset_from_bits(b_bits & frame.full_mask());
        prop_assume!(!b.is_empty());
        prop_assume!(!bel.belief(&b).is_zero());
        let rule = if rule_ds { ConditioningRule::Ds } else { ConditioningRule::Fh };
        let report = condition(&bel, &b, rule).unwrap();
        for a in frame.subsets() {
            prop_assert_eq!(
                report.plausibility(&a),
                Rat::one() - report.belief(&a.complement())
            );
            prop_assert_eq!(report.belief(&a), report.belief(&a.intersection(&b)));
        }
    }
}
