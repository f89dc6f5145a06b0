//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `--nocapture`). All comparisons are exact rational
//! equalities; the stated runtime budgets are asserted where given.
//!
//! ```text
//! cargo test -p beliefkit-cli --test acceptance -- --nocapture
//! ```

use std::time::{Duration, Instant};

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use beliefkit::belief::{mobius_inverse, random_belief_with, BeliefFunction};
use beliefkit::condmass::certify;
use beliefkit::conditioning::{
    condition, containment_check, ds_condition, fh_condition, iterate, sure_thing_check,
    ConditioningRule,
};
use beliefkit::credal::{
    conditional_envelope, envelope, envelope_setfunction, extreme_points, partition_belief,
    polytope_vertices, redistribution_credal,
};
use beliefkit::doc::Document;
use beliefkit::fixtures;
use beliefkit::frame::{Frame, FrameExt};
use beliefkit::rational::rat;
use beliefkit::scenarios;

const SEED_ENVELOPE: u64 = 0xBE11EF01;
const SEED_CONDITIONAL: u64 = 0xBE11EF02;
const SEED_CERTIFY: u64 = 0xBE11EF03;
const SEED_SURE_THING: u64 = 0xBE11EF04;
const SEED_COMMUTE: u64 = 0xBE11EF05;
const SEED_REDISTRIBUTION: u64 = 0xBE11EF06;
const SEED_ROUNDTRIP: u64 = 0xBE11EF07;

struct Criterion {
    number: u32,
    name: &'static str,
    budget: Option<Duration>,
    start: Instant,
}

impl Criterion {
    fn start(number: u32, name: &'static str, budget: Option<Duration>) -> Self {
        Criterion {
            number,
            name,
            budget,
            start: Instant::now(),
        }
    }

    fn finish(self, violations: usize) {
        let elapsed = self.start.elapsed();
        let within_budget = self.budget.is_none_or(|b| elapsed <= b);
        let status = if violations == 0 && within_budget {
            "PASS"
        } else {
            "FAIL"
        };
        match self.budget {
            Some(b) => println!(
                "acceptance {:02} {}: {status} ({elapsed:.2?} of {b:?} budget)",
                self.number, self.name
            ),
            None => println!(
                "acceptance {:02} {}: {status} ({elapsed:.2?})",
                self.number, self.name
            ),
        }
        assert_eq!(
            violations, 0,
            "criterion {} ({}) recorded violations",
            self.number, self.name
        );
        assert!(
            within_budget,
            "criterion {} ({}) exceeded its runtime budget: {elapsed:?}",
            self.number, self.name
        );
    }
}

/// Seeded random belief functions cycling the frame size through
/// 2..=`max_n`. The same seed always reproduces the same sweep.
fn random_bels(seed: u64, count: usize, max_n: usize) -> Vec<BeliefFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = 2 + (i % (max_n - 1));
            let frame = Frame::with_size(n).unwrap();
            let focal = rng.gen_range(1..=(n + 2));
            random_belief_with(&mut rng, &frame, focal)
        })
        .collect()
}

#[test]
fn a01_three_prisoners_reproduction() {
    let c = Criterion::start(1, "three-prisoners reproduction", Some(Duration::from_secs(1)));
    let tp = scenarios::three_prisoners();
    let mut violations = 0;
    violations += usize::from(tp.belief.belief(&tp.says_b) != &rat(1, 3));
    violations += usize::from(tp.belief.plausibility(&tp.says_b) != rat(2, 3));
    let fh = fh_condition(&tp.belief, &tp.says_b).expect("defined");
    violations += usize::from(fh.belief(&tp.lives_a) != &rat(0, 1));
    violations += usize::from(fh.plausibility(&tp.lives_a) != rat(1, 2));
    let ds = ds_condition(&tp.belief, &tp.says_b).expect("defined");
    violations += usize::from(ds.belief(&tp.lives_a) != &rat(1, 2));
    violations += usize::from(ds.plausibility(&tp.lives_a) != rat(1, 2));
    c.finish(violations);
}

#[test]
fn a02_envelope_equivalence() {
    let c = Criterion::start(
        2,
        "unconditional envelope equals belief and plausibility",
        Some(Duration::from_secs(60)),
    );
    let mut violations = 0;
    for bel in random_bels(SEED_ENVELOPE, 200, 6) {
        let frame = bel.frame();
        let cs = extreme_points(&bel).expect("within cap");
        for a in frame.subsets() {
            let (lo, hi) = envelope(&cs, &a);
            if lo != *bel.belief(&a) || hi != bel.plausibility(&a) {
                violations += 1;
            }
        }
    }
    c.finish(violations);
}

#[test]
fn a03_conditional_envelope_equivalence() {
    let c = Criterion::start(
        3,
        "conditional envelope equals the closed form",
        Some(Duration::from_secs(300)),
    );
    let mut violations = 0;
    for bel in random_bels(SEED_CONDITIONAL, 200, 6) {
        let frame = bel.frame();
        let cs = extreme_points(&bel).expect("within cap");
        for b in frame.subsets() {
            if bel.belief(&b).is_zero() {
                continue;
            }
            let closed = fh_condition(&bel, &b).expect("defined");
            for a in frame.subsets() {
                let (lo, hi) = conditional_envelope(&cs, &a, &b).expect("all vertices positive");
                if lo != *closed.belief(&a) || hi != closed.plausibility(&a) {
                    violations += 1;
                }
            }
        }
    }
    c.finish(violations);
}

#[test]
fn a04_conditional_mass_certification() {
    let c = Criterion::start(
        4,
        "conditional-mass construction certifies the conditional",
        Some(Duration::from_secs(300)),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_CERTIFY);
    let mut violations = 0;
    let mut pairs = 0usize;
    while pairs < 500 {
        let n = rng.gen_range(2..=6usize);
        let frame = Frame::with_size(n).unwrap();
        let focal = rng.gen_range(1..=(n + 2));
        let bel = random_belief_with(&mut rng, &frame, focal);
        let b = frame.subset_from_bits(rng.gen_range(1..=frame.full_mask()));
        if bel.belief(&b).is_zero() {
            continue;
        }
        // (a) the conditional's inverse transform is a valid mass function
        let conditional = fh_condition(&bel, &b).expect("defined");
        if mobius_inverse(conditional.belief_function().set_function()).is_err() {
            violations += 1;
        }
        // (b) the explicit construction reproduces the conditional exactly
        let report = certify(&bel, &b).expect("defined and within straddler cap");
        if !report.certified() {
            violations += 1;
        }
        pairs += 1;
    }
    c.finish(violations);
}

#[test]
fn a05_containment_chain() {
    let c = Criterion::start(5, "containment chain never violated", None);
    let mut violations = 0;
    for bel in random_bels(SEED_CONDITIONAL, 200, 6) {
        let frame = bel.frame();
        for b in frame.subsets() {
            if bel.belief(&b).is_zero() {
                continue;
            }
            // Spot-check the per-pair operation, then sweep every subset
            // against the two hoisted conditionals.
            let report = containment_check(&bel, &frame.full_set(), &b).expect("defined");
            if !report.holds {
                violations += 1;
            }
            let fh = fh_condition(&bel, &b).expect("defined");
            let ds = ds_condition(&bel, &b).expect("defined");
            for a in frame.subsets() {
                let chain = fh.belief(&a) <= ds.belief(&a)
                    && *ds.belief(&a) <= ds.plausibility(&a)
                    && ds.plausibility(&a) <= fh.plausibility(&a);
                if !chain {
                    violations += 1;
                }
            }
        }
    }
    c.finish(violations);
}

#[test]
fn a06_sure_thing_principle() {
    let c = Criterion::start(
        6,
        "sure-thing: envelope rule holds, Dempster fixture violates",
        None,
    );
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_SURE_THING);
    let mut violations = 0;
    let mut cases = 0usize;
    while cases < 1000 {
        let n = rng.gen_range(2..=6usize);
        let frame = Frame::with_size(n).unwrap();
        let focal = rng.gen_range(1..=(n + 2));
        let bel = random_belief_with(&mut rng, &frame, focal);
        let full = frame.full_mask();
        let p = frame.subset_from_bits(rng.gen_range(0..=full));
        let q = frame.subset_from_bits(rng.gen_range(1..full));
        if bel.belief(&q).is_zero() || bel.belief(&q.complement()).is_zero() {
            continue;
        }
        let report =
            sure_thing_check(&bel, &p, &q, ConditioningRule::Fh).expect("both sides defined");
        if !report.holds {
            violations += 1;
        }
        cases += 1;
    }
    let fx = fixtures::ds_sure_thing_violation();
    let report = sure_thing_check(&fx.belief, &fx.target, &fx.given, ConditioningRule::Ds)
        .expect("both sides defined");
    if report.holds {
        violations += 1; // the stored instance must violate the principle
    }
    c.finish(violations);
}

#[test]
fn a07_commutativity() {
    let c = Criterion::start(
        7,
        "Dempster updates commute, envelope fixture does not",
        None,
    );
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_COMMUTE);
    let mut violations = 0;
    let mut cases = 0usize;
    while cases < 500 {
        let n = rng.gen_range(2..=6usize);
        let frame = Frame::with_size(n).unwrap();
        let focal = rng.gen_range(1..=(n + 2));
        let bel = random_belief_with(&mut rng, &frame, focal);
        let full = frame.full_mask();
        let b = frame.subset_from_bits(rng.gen_range(1..=full));
        let d = frame.subset_from_bits(rng.gen_range(1..=full));
        if bel.plausibility(&b.intersection(&d)).is_zero() {
            continue;
        }
        let rule = ConditioningRule::Ds;
        let bd = iterate(&bel, &[b.clone(), d.clone()], rule).expect("defined");
        let db = iterate(&bel, &[d.clone(), b.clone()], rule).expect("defined");
        let joint = ds_condition(&bel, &b.intersection(&d)).expect("defined");
        if bd.belief_function() != db.belief_function()
            || bd.belief_function() != joint.belief_function()
        {
            violations += 1;
        }
        cases += 1;
    }
    let fx = fixtures::fh_noncommute();
    let rule = ConditioningRule::Fh;
    let bc = iterate(&fx.belief, &[fx.first.clone(), fx.second.clone()], rule).expect("defined");
    let cb = iterate(&fx.belief, &[fx.second.clone(), fx.first.clone()], rule).expect("defined");
    let joint =
        condition(&fx.belief, &fx.first.intersection(&fx.second), rule).expect("defined");
    let distinct = bc.belief(&fx.witness) != cb.belief(&fx.witness)
        && cb.belief(&fx.witness) != joint.belief(&fx.witness)
        && bc.belief(&fx.witness) != joint.belief(&fx.witness);
    if !distinct {
        violations += 1;
    }
    c.finish(violations);
}

#[test]
fn a08_three_point_constraint_family() {
    let c = Criterion::start(8, "three-point constraint family envelope", None);
    let mut violations = 0;
    let (frame, constraints) = scenarios::lost_info_constraints();
    let cs = polytope_vertices(&constraints, &frame).expect("feasible");
    let expected = vec![
        vec![rat(1, 4), rat(1, 4), rat(1, 2)],
        vec![rat(1, 2), rat(1, 2), rat(0, 1)],
    ];
    violations += usize::from(cs.vertices() != expected.as_slice());
    let a = frame.subset(&["a"]).unwrap();
    let b = frame.subset(&["b"]).unwrap();
    violations += usize::from(envelope(&cs, &a) != (rat(1, 4), rat(1, 2)));
    violations += usize::from(envelope(&cs, &b) != (rat(1, 4), rat(1, 2)));
    violations += usize::from(!envelope_setfunction(&cs).is_belief_function());
    c.finish(violations);
}

#[test]
fn a09_redistribution_interpretation() {
    let c = Criterion::start(
        9,
        "partition envelopes equal the two rules",
        Some(Duration::from_secs(120)),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_REDISTRIBUTION);
    let mut violations = 0;
    let mut scenarios_checked = 0usize;
    while scenarios_checked < 100 {
        let (ps, b) = scenarios::random_partition_scenario(&mut rng, 6);
        let bel = partition_belief(&ps);
        if bel.belief(&b).is_zero() {
            continue;
        }
        let frame = ps.frame();
        let original = redistribution_credal(&ps, &frame.full_set()).expect("never degenerate");
        let redistributed = redistribution_credal(&ps, &b).expect("event meets a cell");
        let fh = fh_condition(&bel, &b).expect("defined");
        let ds = ds_condition(&bel, &b).expect("defined");
        for a in frame.subsets() {
            let (lo, hi) = conditional_envelope(&original, &a, &b).expect("positive event");
            if lo != *fh.belief(&a) || hi != fh.plausibility(&a) {
                violations += 1;
            }
            let (lo, hi) = conditional_envelope(&redistributed, &a, &b).expect("positive event");
            if lo != *ds.belief(&a) || hi != ds.plausibility(&a) {
                violations += 1;
            }
        }
        scenarios_checked += 1;
    }
    c.finish(violations);
}

#[test]
fn a10_roundtrip_and_format_stability() {
    let c = Criterion::start(10, "roundtrips and byte-stable demo output", None);
    let mut violations = 0;

    // Inverse-transform roundtrip on generated mass functions.
    for bel in random_bels(SEED_ROUNDTRIP, 50, 6) {
        let mass = bel.mass().clone();
        let rebuilt = BeliefFunction::from_mass(mass.clone());
        if rebuilt.mass() != &mass || &rebuilt != &bel {
            violations += 1;
        }
        if &bel.set_function().mobius() != mass.set_function() {
            violations += 1;
        }
    }

    // Serialize/parse identity for every document kind.
    let tp = scenarios::three_prisoners();
    let (frame, constraints) = scenarios::lost_info_constraints();
    let docs = vec![
        Document::from_frame(tp.belief.frame()),
        Document::from_mass(tp.belief.mass()),
        Document::from_belief(&tp.belief),
        Document::from_credal(&scenarios::non_belief_credal()),
        Document::from_partition(&scenarios::three_prisoners_partition()),
        Document::from_constraints(&frame, &constraints),
        Document::from_conditional(&fh_condition(&tp.belief, &tp.says_b).expect("defined")),
        Document::from_certification(&certify(&tp.belief, &tp.says_b).expect("defined")),
    ];
    for doc in docs {
        let text = doc.to_json();
        match Document::from_json(&text) {
            Ok(parsed) => {
                if parsed != doc || parsed.to_json() != text {
                    violations += 1;
                }
            }
            Err(_) => violations += 1,
        }
    }

    // Documents round-trip through their core values exactly.
    let mass_doc = Document::from_mass(tp.belief.mass());
    if mass_doc.to_mass().ok().as_ref() != Some(tp.belief.mass()) {
        violations += 1;
    }
    let belief_doc = Document::from_belief(&tp.belief);
    if belief_doc.to_belief().ok().as_ref() != Some(&tp.belief) {
        violations += 1;
    }

    // Demo outputs are byte-identical to the golden files.
    let golden_dir = std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for name in ["three-prisoners", "noncommute", "sure-thing", "beehive", "lost-info"] {
        let expected = std::fs::read(golden_dir.join(format!("{name}.txt"))).expect("golden");
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_beliefkit"))
            .args(["demo", name])
            .output()
            .expect("binary runs");
        if !out.status.success() || out.stdout != expected {
            violations += 1;
        }
    }

    c.finish(violations);
}
