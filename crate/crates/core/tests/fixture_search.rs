//! Seeded searches that produced the checked-in counterexample fixtures.
//!
//! The fixtures in `beliefkit::fixtures` are frozen data; these searches
//! are kept (ignored) so the data can be regenerated or extended:
//!
//! ```text
//! cargo test -p beliefkit --test fixture_search -- --ignored --nocapture
//! ```

use std::sync::Arc;

use beliefkit::belief::{BeliefFunction, MassFunction};
use beliefkit::conditioning::{condition, ConditioningRule};
use beliefkit::frame::{Frame, FrameExt};
use beliefkit::rational::Rat;
use beliefkit::setfn::SetFunction;
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEARCH_SEED: u64 = 2026;

/// Small integer weights keep the frozen rationals readable.
fn small_random_belief(rng: &mut impl Rng, frame: &Arc<Frame>) -> BeliefFunction {
    let focal_count = rng.gen_range(2..=4);
    let full = frame.full_mask();
    let mut f = SetFunction::zero(Arc::clone(frame));
    let mut weights: Vec<(u64, u64)> = Vec::new();
    for _ in 0..focal_count {
        weights.push((rng.gen_range(1..=full), rng.gen_range(1..=4u64)));
    }
    let total: u64 = weights.iter().map(|(_, w)| w).sum();
    for (mask, w) in weights {
        let cur = f.at_mask(mask).clone();
        f.set_mask(mask, cur + Rat::new(w.into(), total.into()));
    }
    BeliefFunction::from_mass(MassFunction::try_new(f).unwrap())
}

fn print_mass(bel: &BeliefFunction) {
    for (s, m) in bel.mass().focal_sets() {
        println!("    mask {:#06b} = {s} -> {m}", s.bits());
    }
}

#[test]
#[ignore = "search already ran; fixtures are frozen"]
fn search_envelope_noncommute() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEARCH_SEED);
    for attempt in 0u64..200_000 {
        let n = 3 + (attempt % 2) as usize;
        let frame = Frame::with_size(n).unwrap();
        let bel = small_random_belief(&mut rng, &frame);
        let full = frame.full_mask();
        let b = frame.subset_from_bits(rng.gen_range(1..full));
        let c = frame.subset_from_bits(rng.gen_range(1..full));
        if bel.belief(&b).is_zero()
            || bel.belief(&c).is_zero()
            || bel.belief(&b.intersection(&c)).is_zero()
        {
            continue;
        }
        let on_b = condition(&bel, &b, ConditioningRule::Fh).unwrap();
        let on_c = condition(&bel, &c, ConditioningRule::Fh).unwrap();
        if on_b.belief_function().belief(&c).is_zero()
            || on_c.belief_function().belief(&b).is_zero()
        {
            continue;
        }
        let bc = condition(on_b.belief_function(), &c, ConditioningRule::Fh).unwrap();
        let cb = condition(on_c.belief_function(), &b, ConditioningRule::Fh).unwrap();
        let joint = condition(&bel, &b.intersection(&c), ConditioningRule::Fh).unwrap();
        let witness = frame.subsets().find(|a| {
            let x = bc.belief(a);
            let y = cb.belief(a);
            let z = joint.belief(a);
            x != y && y != z && x != z
        });
        if let Some(a) = witness {
            println!("attempt {attempt}: n={n}");
            print_mass(&bel);
            println!("  B = {b} (mask {:#06b})", b.bits());
            println!("  C = {c} (mask {:#06b})", c.bits());
            println!("  A = {a} (mask {:#06b})", a.bits());
            println!("  B-then-C at A: {}", bc.belief(&a));
            println!("  C-then-B at A: {}", cb.belief(&a));
            println!("  joint at A:    {}", joint.belief(&a));
            return;
        }
    }
    panic!("no counterexample found");
}

#[test]
#[ignore = "search already ran; fixtures are frozen"]
fn search_dempster_sure_thing_violation() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEARCH_SEED);
    for attempt in 0u64..200_000 {
        let n = 3 + (attempt % 2) as usize;
        let frame = Frame::with_size(n).unwrap();
        let bel = small_random_belief(&mut rng, &frame);
        let full = frame.full_mask();
        let p = frame.subset_from_bits(rng.gen_range(1..full));
        let q = frame.subset_from_bits(rng.gen_range(1..full));
        if bel.plausibility(&q).is_zero() || bel.plausibility(&q.complement()).is_zero() {
            continue;
        }
        let on_q = condition(&bel, &q, ConditioningRule::Ds).unwrap();
        let on_not_q = condition(&bel, &q.complement(), ConditioningRule::Ds).unwrap();
        let lo = on_q.belief(&p).min(on_not_q.belief(&p));
        if bel.belief(&p) < lo {
            println!("attempt {attempt}: n={n}");
            print_mass(&bel);
            println!("  p = {p} (mask {:#06b})", p.bits());
            println!("  q = {q} (mask {:#06b})", q.bits());
            println!("  Bel(p) = {}", bel.belief(&p));
            println!("  Bel(p||q) = {}", on_q.belief(&p));
            println!("  Bel(p||not q) = {}", on_not_q.belief(&p));
            return;
        }
    }
    panic!("no counterexample found");
}
