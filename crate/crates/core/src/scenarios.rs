//! Named worked constructions.
//!
//! These are the concrete examples the demos and the test suite lean on:
//! the three-prisoners puzzle, its partition form, the three-point
//! constraint family whose envelope forgets an equality, and a small
//! vertex family whose lower envelope is not a belief function.

use std::sync::Arc;

use rand::Rng;

use crate::belief::{BeliefFunction, MassFunction};
use crate::credal::{CredalSet, LinearConstraint, PartitionScenario};
use crate::frame::{Frame, FrameExt, Subset};
use crate::rational::{rat, Rat};
use crate::setfn::SetFunction;

/// The three-prisoners frame and belief function. Element `xy` reads
/// "x is pardoned and the jailer names y"; the pardon is uniform over the
/// prisoners and the jailer's tie-break when `a` is pardoned is unknown.
pub struct ThreePrisoners {
    pub belief: BeliefFunction,
    pub lives_a: Subset,
    pub lives_b: Subset,
    pub lives_c: Subset,
    pub says_b: Subset,
    pub says_c: Subset,
}

pub fn three_prisoners() -> ThreePrisoners {
    let frame = Frame::new(["ab", "ac", "bc", "cb"]).unwrap();
    let lives_a = frame.subset(&["ab", "ac"]).unwrap();
    let lives_b = frame.subset(&["bc"]).unwrap();
    let lives_c = frame.subset(&["cb"]).unwrap();
    let says_b = frame.subset(&["ab", "cb"]).unwrap();
    let says_c = frame.subset(&["ac", "bc"]).unwrap();
    let mass = MassFunction::from_entries(
        &frame,
        [
            (lives_b.clone(), rat(1, 3)),
            (lives_c.clone(), rat(1, 3)),
            (lives_a.clone(), rat(1, 3)),
        ],
    )
    .unwrap();
    ThreePrisoners {
        belief: BeliefFunction::from_mass(mass),
        lives_a,
        lives_b,
        lives_c,
        says_b,
        says_c,
    }
}

/// The same situation as a chance process over the who-is-pardoned
/// partition, weight 1/3 per cell.
pub fn three_prisoners_partition() -> PartitionScenario {
    let tp = three_prisoners();
    let frame = Arc::clone(tp.belief.frame());
    PartitionScenario::new(
        frame,
        vec![tp.lives_b, tp.lives_c, tp.lives_a],
        vec![rat(1, 3), rat(1, 3), rat(1, 3)],
    )
    .unwrap()
}

/// Three-point constraint family: `1/4 <= Pr(a) <= 1/2`, the same for `b`,
/// and `Pr(a) = Pr(b)`. Its lower envelope is a belief function, but the
/// envelope forgets the equality constraint.
pub fn lost_info_constraints() -> (Arc<Frame>, Vec<LinearConstraint>) {
    let frame = Frame::new(["a", "b", "c"]).unwrap();
    let pa = LinearConstraint::event_coeffs(&frame, 0b001);
    let pb = LinearConstraint::event_coeffs(&frame, 0b010);
    let difference: Vec<Rat> = pa
        .iter()
        .zip(&pb)
        .map(|(x, y)| x.clone() - y)
        .collect();
    let constraints = vec![
        LinearConstraint::ge(pa.clone(), rat(1, 4)),
        LinearConstraint::le(pa, rat(1, 2)),
        LinearConstraint::ge(pb.clone(), rat(1, 4)),
        LinearConstraint::le(pb, rat(1, 2)),
        LinearConstraint::eq(difference, rat(0, 1)),
    ];
    (frame, constraints)
}

/// Three distributions on three points whose lower envelope violates the
/// belief-function characterization (negative inverse-transform mass at
/// the full set).
pub fn non_belief_credal() -> CredalSet {
    let frame = Frame::new(["a", "b", "c"]).unwrap();
    CredalSet::new(
        frame,
        vec![
            vec![rat(1, 2), rat(1, 2), rat(0, 1)],
            vec![rat(0, 1), rat(1, 2), rat(1, 2)],
            vec![rat(1, 2), rat(0, 1), rat(1, 2)],
        ],
    )
    .unwrap()
}

/// The lower envelope of [`non_belief_credal`] as a raw set function.
pub fn non_belief_envelope() -> SetFunction {
    crate::credal::envelope_setfunction(&non_belief_credal()).lower
}

/// A random partition scenario over a random frame of 2..=`max_n` elements,
/// with a random nonempty event. Weights are positive and sum to one
/// exactly; the partition is valid by construction.
pub fn random_partition_scenario(
    rng: &mut impl Rng,
    max_n: usize,
) -> (PartitionScenario, Subset) {
    let n = rng.gen_range(2..=max_n);
    let frame = Frame::with_size(n).unwrap();
    // Assign each element to one of up to n cells, then compact.
    let cell_count = rng.gen_range(1..=n);
    let mut members: Vec<u64> = vec![0; cell_count];
    for el in 0..n {
        members[rng.gen_range(0..cell_count)] |= 1 << el;
    }
    let cells: Vec<Subset> = members
        .into_iter()
        .filter(|m| *m != 0)
        .map(|m| frame.subset_from_bits(m))
        .collect();
    let weights: Vec<u64> = (0..cells.len()).map(|_| rng.gen_range(1..=100)).collect();
    let total: u64 = weights.iter().sum();
    let weights: Vec<Rat> = weights
        .into_iter()
        .map(|w| Rat::new(w.into(), total.into()))
        .collect();
    let scenario = PartitionScenario::new(Arc::clone(&frame), cells, weights)
        .expect("constructed partition is valid");
    let event = frame.subset_from_bits(rng.gen_range(1..=frame.full_mask()));
    (scenario, event)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_scenarios_are_always_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let (ps, event) = random_partition_scenario(&mut rng, 6);
            assert!(!event.is_empty());
            let sum: Rat = ps.weights().iter().cloned().sum();
            assert_eq!(sum, rat(1, 1));
        }
    }
}
