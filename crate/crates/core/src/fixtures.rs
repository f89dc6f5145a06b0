//! Checked-in counterexample fixtures.
//!
//! Both instances were found once by seeded randomized search over small
//! random belief functions and are frozen here as explicit data, so the
//! test suite verifies them without paying a per-run search cost.

use crate::belief::{BeliefFunction, MassFunction};
use crate::frame::{Frame, FrameExt, Subset};
use crate::rational::rat;

/// A belief function and two events whose envelope-rule updates do not
/// commute: updating on `first` then `second`, on `second` then `first`,
/// and on the intersection give three different beliefs at `witness`.
pub struct NonCommuteFixture {
    pub belief: BeliefFunction,
    pub first: Subset,
    pub second: Subset,
    pub witness: Subset,
}

pub fn fh_noncommute() -> NonCommuteFixture {
    let frame = Frame::with_size(4).unwrap();
    let mass = MassFunction::from_entries(
        &frame,
        [
            (frame.subset_from_bits(0b0001), rat(1, 9)),
            (frame.subset_from_bits(0b0011), rat(2, 9)),
            (frame.subset_from_bits(0b1011), rat(2, 9)),
            (frame.subset_from_bits(0b1110), rat(4, 9)),
        ],
    )
    .unwrap();
    NonCommuteFixture {
        belief: BeliefFunction::from_mass(mass),
        first: frame.subset_from_bits(0b1101),
        second: frame.subset_from_bits(0b0111),
        witness: frame.subset_from_bits(0b0001),
    }
}

/// A belief function violating the sure-thing principle under Dempster
/// conditioning: belief in `target` is strictly below both conditional
/// beliefs, given `given` and given its complement.
pub struct SureThingFixture {
    pub belief: BeliefFunction,
    pub target: Subset,
    pub given: Subset,
}

pub fn ds_sure_thing_violation() -> SureThingFixture {
    let frame = Frame::with_size(4).unwrap();
    let mass = MassFunction::from_entries(
        &frame,
        [
            (frame.subset_from_bits(0b1010), rat(1, 8)),
            (frame.subset_from_bits(0b0111), rat(7, 8)),
        ],
    )
    .unwrap();
    SureThingFixture {
        belief: BeliefFunction::from_mass(mass),
        target: frame.subset_from_bits(0b0011),
        given: frame.subset_from_bits(0b1001),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditioning::{
        condition, ds_condition, iterate, sure_thing_check, ConditioningRule,
    };

    #[test]
    fn envelope_updates_disagree_on_the_stored_instance() {
        let fx = fh_noncommute();
        let rule = ConditioningRule::Fh;
        let bc = iterate(&fx.belief, &[fx.first.clone(), fx.second.clone()], rule).unwrap();
        let cb = iterate(&fx.belief, &[fx.second.clone(), fx.first.clone()], rule).unwrap();
        let joint = condition(&fx.belief, &fx.first.intersection(&fx.second), rule).unwrap();
        assert_eq!(bc.belief(&fx.witness), &rat(5, 33));
        assert_eq!(cb.belief(&fx.witness), &rat(7, 43));
        assert_eq!(joint.belief(&fx.witness), &rat(1, 5));
    }

    #[test]
    fn dempster_updates_agree_on_the_same_instance() {
        let fx = fh_noncommute();
        let rule = ConditioningRule::Ds;
        let bc = iterate(&fx.belief, &[fx.first.clone(), fx.second.clone()], rule).unwrap();
        let cb = iterate(&fx.belief, &[fx.second.clone(), fx.first.clone()], rule).unwrap();
        let joint = ds_condition(&fx.belief, &fx.first.intersection(&fx.second)).unwrap();
        assert_eq!(bc.belief_function(), cb.belief_function());
        assert_eq!(bc.belief_function(), joint.belief_function());
    }

    #[test]
    fn stored_instance_violates_sure_thing_under_dempster() {
        let fx = ds_sure_thing_violation();
        let report =
            sure_thing_check(&fx.belief, &fx.target, &fx.given, ConditioningRule::Ds).unwrap();
        assert!(!report.holds);
        assert_eq!(report.belief, rat(0, 1));
        assert_eq!(report.given_event, rat(7, 8));
        assert_eq!(report.given_complement, rat(1, 8));
    }
}
