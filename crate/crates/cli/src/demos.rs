//! Scripted walkthroughs that recompute the worked examples and verify
//! every claimed value exactly. Output is deterministic, so the demo texts
//! double as golden files; any mismatch flips the exit code.

use clap::ValueEnum;
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use beliefkit::belief::random_belief_with;
use beliefkit::conditioning::{
    condition, containment_check, ds_condition, fh_condition, iterate, sure_thing_check,
    ConditioningRule,
};
use beliefkit::credal::{
    conditional_envelope, envelope, envelope_setfunction, extreme_points, partition_belief,
    polytope_vertices, redistribution_credal,
};
use beliefkit::fixtures;
use beliefkit::frame::{Frame, FrameExt};
use beliefkit::rational::{format_rat, rat, Rat};
use beliefkit::scenarios;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DemoName {
    /// The jailer puzzle: both rules conditioned on "says b".
    ThreePrisoners,
    /// Stored instance where envelope updates do not commute.
    Noncommute,
    /// The sure-thing principle: envelope rule obeys, Dempster violates.
    SureThing,
    /// Partition chance process: original vs redistributed credal set.
    Beehive,
    /// Envelopes forget constraints: the three-point family.
    LostInfo,
}

pub struct DemoReport {
    pub text: String,
    pub ok: bool,
}

struct W {
    out: String,
    ok: bool,
}

impl W {
    fn new(title: &str) -> Self {
        let mut w = W {
            out: String::new(),
            ok: true,
        };
        w.line(title);
        w.line(&"=".repeat(title.len()));
        w
    }

    fn line(&mut self, s: &str) {
        self.out.push_str(s);
        self.out.push('\n');
    }

    fn blank(&mut self) {
        self.out.push('\n');
    }

    fn claim(&mut self, label: &str, got: &Rat, expected: &Rat) {
        if got == expected {
            self.line(&format!("  {label} = {} [ok]", format_rat(got)));
        } else {
            self.ok = false;
            self.line(&format!(
                "  {label} = {} [MISMATCH: expected {}]",
                format_rat(got),
                format_rat(expected)
            ));
        }
    }

    fn claim_true(&mut self, label: &str, got: bool) {
        if got {
            self.line(&format!("  {label} [ok]"));
        } else {
            self.ok = false;
            self.line(&format!("  {label} [FAILED]"));
        }
    }

    fn finish(mut self) -> DemoReport {
        self.blank();
        if self.ok {
            self.line("all claims verified");
        } else {
            self.line("SOME CLAIMS FAILED");
        }
        DemoReport {
            text: self.out,
            ok: self.ok,
        }
    }
}

fn vertex_text(v: &[Rat]) -> String {
    let coords: Vec<String> = v.iter().map(format_rat).collect();
    format!("({})", coords.join(", "))
}

pub fn run(name: DemoName) -> DemoReport {
    match name {
        DemoName::ThreePrisoners => three_prisoners(),
        DemoName::Noncommute => noncommute(),
        DemoName::SureThing => sure_thing(),
        DemoName::Beehive => beehive(),
        DemoName::LostInfo => lost_info(),
    }
}

fn three_prisoners() -> DemoReport {
    let mut w = W::new("three-prisoners");
    w.blank();
    w.line("Outcome xy reads: x is pardoned, the jailer names y. The pardon");
    w.line("is uniform over a, b, c; when a is pardoned, the jailer's choice");
    w.line("between naming b and naming c is unknown.");
    w.blank();
    let tp = scenarios::three_prisoners();
    w.line("Mass assignment:");
    for (set, m) in tp.belief.mass().focal_sets() {
        w.line(&format!("  m({set}) = {}", format_rat(&m)));
    }
    w.blank();
    w.line(&format!("Events: lives-a = {}, says-b = {}.", tp.lives_a, tp.says_b));
    w.blank();
    w.line("Prior bounds:");
    w.claim("Bel(says-b)", tp.belief.belief(&tp.says_b), &rat(1, 3));
    w.claim("Pl(says-b)", &tp.belief.plausibility(&tp.says_b), &rat(2, 3));
    let lives_and_says = tp.lives_a.intersection(&tp.says_b);
    w.claim(
        "Bel(lives-a & says-b)",
        tp.belief.belief(&lives_and_says),
        &rat(0, 1),
    );
    w.claim(
        "Pl(lives-a & says-b)",
        &tp.belief.plausibility(&lives_and_says),
        &rat(1, 3),
    );
    w.blank();
    w.line("Conditioning on says-b, envelope rule (fh):");
    let fh = fh_condition(&tp.belief, &tp.says_b).expect("Bel(says-b) > 0");
    w.claim("Bel(lives-a | says-b)", fh.belief(&tp.lives_a), &rat(0, 1));
    w.claim(
        "Pl(lives-a | says-b)",
        &fh.plausibility(&tp.lives_a),
        &rat(1, 2),
    );
    w.blank();
    w.line("Conditioning on says-b, Dempster rule (ds):");
    let ds = ds_condition(&tp.belief, &tp.says_b).expect("Pl(says-b) > 0");
    w.claim("Bel(lives-a || says-b)", ds.belief(&tp.lives_a), &rat(1, 2));
    w.claim(
        "Pl(lives-a || says-b)",
        &ds.plausibility(&tp.lives_a),
        &rat(1, 2),
    );
    w.blank();
    w.line("Containment chain Bel(A|B) <= Bel(A||B) <= Pl(A||B) <= Pl(A|B):");
    let chain = containment_check(&tp.belief, &tp.lives_a, &tp.says_b).expect("both rules defined");
    let (a, b, c, d) = chain.quadruple();
    w.line(&format!(
        "  {} <= {} <= {} <= {}",
        format_rat(a),
        format_rat(b),
        format_rat(c),
        format_rat(d)
    ));
    w.claim("chain lower end", a, &rat(0, 1));
    w.claim("chain upper end", d, &rat(1, 2));
    w.claim_true("chain holds", chain.holds);
    w.finish()
}

fn noncommute() -> DemoReport {
    let mut w = W::new("noncommute");
    w.blank();
    w.line("Envelope-rule updates need not commute: observing B then C, C");
    w.line("then B, and B & C at once can disagree. Dempster updates always");
    w.line("agree. Stored instance (found once by seeded search):");
    w.blank();
    let fx = fixtures::fh_noncommute();
    w.line("Mass assignment:");
    for (set, m) in fx.belief.mass().focal_sets() {
        w.line(&format!("  m({set}) = {}", format_rat(&m)));
    }
    w.blank();
    w.line(&format!(
        "B = {}, C = {}, witness A = {}.",
        fx.first, fx.second, fx.witness
    ));
    w.blank();
    let rule = ConditioningRule::Fh;
    let bc = iterate(&fx.belief, &[fx.first.clone(), fx.second.clone()], rule)
        .expect("updates defined");
    let cb = iterate(&fx.belief, &[fx.second.clone(), fx.first.clone()], rule)
        .expect("updates defined");
    let joint = condition(&fx.belief, &fx.first.intersection(&fx.second), rule)
        .expect("updates defined");
    w.line("Envelope rule at the witness:");
    w.claim("Bel after B then C", bc.belief(&fx.witness), &rat(5, 33));
    w.claim("Bel after C then B", cb.belief(&fx.witness), &rat(7, 43));
    w.claim("Bel after B & C", joint.belief(&fx.witness), &rat(1, 5));
    w.claim_true(
        "three pairwise different updates",
        bc.belief(&fx.witness) != cb.belief(&fx.witness)
            && cb.belief(&fx.witness) != joint.belief(&fx.witness)
            && bc.belief(&fx.witness) != joint.belief(&fx.witness),
    );
    w.blank();
    w.line("Dempster rule on the same instance:");
    let dbc = iterate(
        &fx.belief,
        &[fx.first.clone(), fx.second.clone()],
        ConditioningRule::Ds,
    )
    .expect("updates defined");
    let dcb = iterate(
        &fx.belief,
        &[fx.second.clone(), fx.first.clone()],
        ConditioningRule::Ds,
    )
    .expect("updates defined");
    let djoint = ds_condition(&fx.belief, &fx.first.intersection(&fx.second))
        .expect("updates defined");
    w.claim_true(
        "B then C, C then B, and B & C all coincide",
        dbc.belief_function() == dcb.belief_function()
            && dcb.belief_function() == djoint.belief_function(),
    );
    w.finish()
}

fn sure_thing() -> DemoReport {
    let mut w = W::new("sure-thing");
    w.blank();
    w.line("The principle: if belief in p given q and belief in p given the");
    w.line("complement of q are both at least some threshold, belief in p");
    w.line("must reach that threshold too, i.e. Bel(p) >= min of the two");
    w.line("conditional beliefs.");
    w.blank();
    w.line("Envelope rule, 200 seeded random instances:");
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut checked = 0usize;
    let mut violations = 0usize;
    while checked < 200 {
        let n = rng.gen_range(2..=5usize);
        let frame = Frame::with_size(n).unwrap();
        let focal = rng.gen_range(1..=(n + 2));
        let bel = random_belief_with(&mut rng, &frame, focal);
        let full = frame.full_mask();
        let p = frame.subset_from_bits(rng.gen_range(0..=full));
        let q = frame.subset_from_bits(rng.gen_range(1..full));
        if bel.belief(&q).is_zero() || bel.belief(&q.complement()).is_zero() {
            continue;
        }
        let report = sure_thing_check(&bel, &p, &q, ConditioningRule::Fh)
            .expect("both conditionals defined");
        if !report.holds {
            violations += 1;
        }
        checked += 1;
    }
    w.claim_true(
        &format!("principle holds in {checked} of {checked} cases"),
        violations == 0,
    );
    w.blank();
    w.line("Dempster rule, stored violation (found once by seeded search):");
    let fx = fixtures::ds_sure_thing_violation();
    w.line("Mass assignment:");
    for (set, m) in fx.belief.mass().focal_sets() {
        w.line(&format!("  m({set}) = {}", format_rat(&m)));
    }
    w.line(&format!("p = {}, q = {}.", fx.target, fx.given));
    let report = sure_thing_check(&fx.belief, &fx.target, &fx.given, ConditioningRule::Ds)
        .expect("both conditionals defined");
    w.claim("Bel(p)", &report.belief, &rat(0, 1));
    w.claim("Bel(p || q)", &report.given_event, &rat(7, 8));
    w.claim("Bel(p || ~q)", &report.given_complement, &rat(1, 8));
    w.claim_true(
        "Bel(p) < min of the conditionals: principle violated",
        !report.holds,
    );
    w.finish()
}

fn beehive() -> DemoReport {
    let mut w = W::new("beehive");
    w.blank();
    w.line("A chance process picks a partition cell X_i with probability a_i");
    w.line("and then an element inside the cell by an unknown process. The");
    w.line("consistent distributions form the credal set P. Redistributing");
    w.line("each straddling cell's weight into its part inside an event B");
    w.line("gives the family P'. Conditional envelopes over P are the");
    w.line("envelope-rule conditionals; over P' they are Dempster's.");
    w.blank();
    let tp = scenarios::three_prisoners();
    let ps = scenarios::three_prisoners_partition();
    w.line("Cells of the three-prisoners partition (weight 1/3 each):");
    for cell in ps.cells() {
        w.line(&format!("  {cell}"));
    }
    w.blank();
    let bel = partition_belief(&ps);
    let full = ps.frame().full_set();
    let original = redistribution_credal(&ps, &full).expect("full event never degenerates");
    let redistributed = redistribution_credal(&ps, &tp.says_b).expect("says-b meets cells");
    w.line(&format!(
        "P has {} vertices; P' (for B = says-b) has {}.",
        original.vertex_count(),
        redistributed.vertex_count()
    ));
    w.blank();
    w.line("Conditional envelope of lives-a given says-b over P:");
    let (lo, hi) =
        conditional_envelope(&original, &tp.lives_a, &tp.says_b).expect("Bel(says-b) > 0");
    w.claim("lower", &lo, &rat(0, 1));
    w.claim("upper", &hi, &rat(1, 2));
    let fh = fh_condition(&bel, &tp.says_b).expect("defined");
    w.claim_true(
        "equals the envelope-rule conditional",
        &lo == fh.belief(&tp.lives_a) && hi == fh.plausibility(&tp.lives_a),
    );
    w.blank();
    w.line("Conditional envelope of lives-a given says-b over P':");
    let (lo, hi) =
        conditional_envelope(&redistributed, &tp.lives_a, &tp.says_b).expect("Pl(says-b) > 0");
    w.claim("lower", &lo, &rat(1, 2));
    w.claim("upper", &hi, &rat(1, 2));
    let ds = ds_condition(&bel, &tp.says_b).expect("defined");
    w.claim_true(
        "equals the Dempster conditional",
        &lo == ds.belief(&tp.lives_a) && hi == ds.plausibility(&tp.lives_a),
    );
    w.blank();
    w.line("Seeded random scenarios, all events and subsets:");
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0usize;
    let mut exact = true;
    while checked < 10 {
        let (ps, b) = scenarios::random_partition_scenario(&mut rng, 4);
        let bel = partition_belief(&ps);
        if bel.belief(&b).is_zero() {
            continue;
        }
        let original = redistribution_credal(&ps, &ps.frame().full_set()).unwrap();
        let redistributed = redistribution_credal(&ps, &b).unwrap();
        let fh = fh_condition(&bel, &b).unwrap();
        let ds = ds_condition(&bel, &b).unwrap();
        for a in ps.frame().subsets() {
            let (lo, hi) = conditional_envelope(&original, &a, &b).unwrap();
            exact &= &lo == fh.belief(&a) && hi == fh.plausibility(&a);
            let (lo, hi) = conditional_envelope(&redistributed, &a, &b).unwrap();
            exact &= &lo == ds.belief(&a) && hi == ds.plausibility(&a);
        }
        checked += 1;
    }
    w.claim_true(
        &format!("{checked} of {checked} scenarios match both rules exactly"),
        exact,
    );
    w.finish()
}

fn lost_info() -> DemoReport {
    let mut w = W::new("lost-info");
    w.blank();
    w.line("Representing a family of distributions by its lower envelope can");
    w.line("lose information, even when the envelope is a belief function.");
    w.blank();
    w.line("Family P over {a, b, c}: 1/4 <= Pr(a) <= 1/2, 1/4 <= Pr(b) <= 1/2,");
    w.line("and Pr(a) = Pr(b).");
    w.blank();
    let (frame, constraints) = scenarios::lost_info_constraints();
    let cs = polytope_vertices(&constraints, &frame).expect("feasible");
    w.line("Vertices of P:");
    for v in cs.vertices() {
        w.line(&format!("  {}", vertex_text(v)));
    }
    w.blank();
    let a = frame.subset(&["a"]).unwrap();
    let b = frame.subset(&["b"]).unwrap();
    let report = envelope_setfunction(&cs);
    w.claim_true("lower envelope is a belief function", report.is_belief_function());
    let (a_lo, a_hi) = envelope(&cs, &a);
    let (b_lo, b_hi) = envelope(&cs, &b);
    w.claim("Bel({a})", &a_lo, &rat(1, 4));
    w.claim("Pl({a})", &a_hi, &rat(1, 2));
    w.claim("Bel({b})", &b_lo, &rat(1, 4));
    w.claim("Pl({b})", &b_hi, &rat(1, 2));
    w.blank();
    w.line("The envelope keeps both ranges but forgets Pr(a) = Pr(b): the");
    w.line("belief function's consistent family contains distributions with");
    w.line("Pr(a) != Pr(b). First such extreme point:");
    let bel = report.verdict.as_ref().expect("verdict checked above");
    let consistent = extreme_points(bel).expect("small frame");
    let witness = consistent
        .vertices()
        .iter()
        .find(|v| v[0] != v[1])
        .expect("an asymmetric vertex exists");
    w.line(&format!("  {}", vertex_text(witness)));
    w.claim("Pr(a) at the witness", &witness[0], &rat(1, 4));
    w.claim("Pr(b) at the witness", &witness[1], &rat(1, 2));
    let consistent_ok = frame.subsets().all(|s| {
        let pr: Rat = s.elements().map(|i| witness[i].clone()).sum();
        &pr >= bel.belief(&s)
    });
    w.claim_true("witness is consistent with the envelope", consistent_ok);
    w.claim_true("witness violates the forgotten constraint", witness[0] != witness[1]);
    w.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_demo_verifies_its_claims() {
        for name in [
            DemoName::ThreePrisoners,
            DemoName::Noncommute,
            DemoName::SureThing,
            DemoName::Beehive,
            DemoName::LostInfo,
        ] {
            let report = run(name);
            assert!(report.ok, "demo {name:?} failed:\n{}", report.text);
        }
    }

    #[test]
    fn demo_output_is_deterministic() {
        let a = run(DemoName::Beehive);
        let b = run(DemoName::Beehive);
        assert_eq!(a.text, b.text);
    }
}
