//! The two conditioning rules and their comparative behavior.
//!
//! The envelope rule (tag `FH`) conditions by taking the infimum and
//! supremum of the Bayes updates of every probability function consistent
//! with the belief function. Its closed form, for `Bel(B) > 0`:
//!
//! ```text
//! Bel(A|B) = Bel(A n B) / (Bel(A n B) + Pl(comp(A) n B))
//! Pl(A|B)  = Pl(A n B)  / (Pl(A n B)  + Bel(comp(A) n B))
//! ```
//!
//! Dempster's rule (tag `DS`) is defined when `Pl(B) > 0`:
//!
//! ```text
//! Bel(A||B) = (Bel(A u comp(B)) - Bel(comp(B))) / (1 - Bel(comp(B)))
//! Pl(A||B)  = Pl(A n B) / Pl(B)
//! ```
//!
//! Both generalize Bayes conditioning on additive belief functions. The
//! envelope rule nests inside Dempster's: `Bel(A|B) <= Bel(A||B) <=
//! Pl(A||B) <= Pl(A|B)` wherever both are defined. Dempster updates commute
//! and compose to conditioning on the intersection; envelope updates need
//! not commute. The envelope rule satisfies the sure-thing principle;
//! Dempster's does not.

use std::fmt;

use num::{One, Zero};
use thiserror::Error;

use crate::belief::BeliefFunction;
use crate::frame::{FrameExt, Subset};
use crate::rational::Rat;
use crate::setfn::SetFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConditioningRule {
    /// Lower/upper envelope of Bayes updates over all consistent
    /// probability functions.
    Fh,
    /// Dempster's rule: straddling mass is pushed into the conditioning
    /// event before renormalization.
    Ds,
}

impl fmt::Display for ConditioningRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditioningRule::Fh => write!(f, "FH"),
            ConditioningRule::Ds => write!(f, "DS"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConditioningError {
    #[error("{rule} conditioning on {event} is undefined: {reason}")]
    Undefined {
        rule: ConditioningRule,
        event: String,
        reason: String,
    },
    #[error("step {step}: {source}")]
    AtStep {
        step: usize,
        source: Box<ConditioningError>,
    },
}

impl ConditioningError {
    fn undefined(rule: ConditioningRule, event: &Subset, reason: impl Into<String>) -> Self {
        ConditioningError::Undefined {
            rule,
            event: event.to_string(),
            reason: reason.into(),
        }
    }
}

/// A fully materialized conditional belief function together with the rule
/// and event that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionalReport {
    rule: ConditioningRule,
    event: Subset,
    belief: BeliefFunction,
}

impl ConditionalReport {
    pub fn rule(&self) -> ConditioningRule {
        self.rule
    }

    pub fn event(&self) -> &Subset {
        &self.event
    }

    pub fn belief_function(&self) -> &BeliefFunction {
        &self.belief
    }

    pub fn into_belief_function(self) -> BeliefFunction {
        self.belief
    }

    pub fn belief(&self, a: &Subset) -> &Rat {
        self.belief.belief(a)
    }

    pub fn plausibility(&self, a: &Subset) -> Rat {
        self.belief.plausibility(a)
    }
}

/// Envelope conditioning. Requires `Bel(b) > 0`.
pub fn fh_condition(
    bel: &BeliefFunction,
    b: &Subset,
) -> Result<ConditionalReport, ConditioningError> {
    let frame = bel.frame();
    assert!(b.frame() == frame, "event belongs to a different frame");
    if bel.belief(b).is_zero() {
        return Err(ConditioningError::undefined(
            ConditioningRule::Fh,
            b,
            "Bel(event) = 0",
        ));
    }
    let full = frame.full_mask();
    let bm = b.bits();
    let mut values = Vec::with_capacity(frame.num_subsets());
    for a in 0..frame.num_subsets() as u64 {
        let inside = bel.belief_mask(a & bm).clone();
        let outside = bel.plausibility_mask(full & !a & bm);
        let denom = inside.clone() + outside;
        // Positive whenever Bel(b) > 0: the denominator dominates the total
        // mass of focal sets inside b.
        assert!(denom > Rat::zero(), "conditional denominator vanished");
        values.push(inside / denom);
    }
    let f = SetFunction::new(frame.clone(), values).expect("length matches frame");
    let belief = BeliefFunction::try_new(f)
        .expect("envelope conditional of a belief function is a belief function");
    Ok(ConditionalReport {
        rule: ConditioningRule::Fh,
        event: b.clone(),
        belief,
    })
}

/// Dempster conditioning. Requires `Pl(b) > 0`.
pub fn ds_condition(
    bel: &BeliefFunction,
    b: &Subset,
) -> Result<ConditionalReport, ConditioningError> {
    let frame = bel.frame();
    assert!(b.frame() == frame, "event belongs to a different frame");
    if bel.plausibility(b).is_zero() {
        return Err(ConditioningError::undefined(
            ConditioningRule::Ds,
            b,
            "Pl(event) = 0",
        ));
    }
    let full = frame.full_mask();
    let comp = full & !b.bits();
    let base = bel.belief_mask(comp).clone();
    let denom = Rat::one() - &base;
    let mut values = Vec::with_capacity(frame.num_subsets());
    for a in 0..frame.num_subsets() as u64 {
        let num = bel.belief_mask(a | comp).clone() - &base;
        values.push(num / denom.clone());
    }
    let f = SetFunction::new(frame.clone(), values).expect("length matches frame");
    let belief = BeliefFunction::try_new(f)
        .expect("Dempster conditional of a belief function is a belief function");
    Ok(ConditionalReport {
        rule: ConditioningRule::Ds,
        event: b.clone(),
        belief,
    })
}

/// Rule-dispatching form of [`fh_condition`] / [`ds_condition`].
pub fn condition(
    bel: &BeliefFunction,
    b: &Subset,
    rule: ConditioningRule,
) -> Result<ConditionalReport, ConditioningError> {
    match rule {
        ConditioningRule::Fh => fh_condition(bel, b),
        ConditioningRule::Ds => ds_condition(bel, b),
    }
}

/// Left-to-right fold of the chosen rule over a sequence of events. A
/// failure reports the zero-based step at which conditioning was undefined.
pub fn iterate(
    bel: &BeliefFunction,
    events: &[Subset],
    rule: ConditioningRule,
) -> Result<ConditionalReport, ConditioningError> {
    let mut current = bel.clone();
    let mut last_event = None;
    for (step, event) in events.iter().enumerate() {
        let report = condition(&current, event, rule).map_err(|e| ConditioningError::AtStep {
            step,
            source: Box::new(e),
        })?;
        current = report.belief;
        last_event = Some(event.clone());
    }
    let event = last_event.unwrap_or_else(|| bel.frame().full_set());
    Ok(ConditionalReport {
        rule,
        event,
        belief: current,
    })
}

/// The four conditional values of both rules at `(a, b)`, with the
/// containment verdict `Bel(A|B) <= Bel(A||B) <= Pl(A||B) <= Pl(A|B)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentReport {
    pub fh_belief: Rat,
    pub ds_belief: Rat,
    pub ds_plausibility: Rat,
    pub fh_plausibility: Rat,
    pub holds: bool,
}

impl ContainmentReport {
    pub fn quadruple(&self) -> (&Rat, &Rat, &Rat, &Rat) {
        (
            &self.fh_belief,
            &self.ds_belief,
            &self.ds_plausibility,
            &self.fh_plausibility,
        )
    }
}

/// Evaluates both rules at `(a, b)`. `Bel(b) > 0` suffices for both to be
/// defined.
pub fn containment_check(
    bel: &BeliefFunction,
    a: &Subset,
    b: &Subset,
) -> Result<ContainmentReport, ConditioningError> {
    let fh = fh_condition(bel, b)?;
    let ds = ds_condition(bel, b)?;
    let fh_belief = fh.belief(a).clone();
    let ds_belief = ds.belief(a).clone();
    let ds_plausibility = ds.plausibility(a);
    let fh_plausibility = fh.plausibility(a);
    let holds = fh_belief <= ds_belief
        && ds_belief <= ds_plausibility
        && ds_plausibility <= fh_plausibility;
    Ok(ContainmentReport {
        fh_belief,
        ds_belief,
        ds_plausibility,
        fh_plausibility,
        holds,
    })
}

/// Whether belief in `p` is at least the smaller of the conditional beliefs
/// in `p` given `q` and given the complement of `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SureThingReport {
    pub belief: Rat,
    pub given_event: Rat,
    pub given_complement: Rat,
    pub holds: bool,
}

pub fn sure_thing_check(
    bel: &BeliefFunction,
    p: &Subset,
    q: &Subset,
    rule: ConditioningRule,
) -> Result<SureThingReport, ConditioningError> {
    let comp = q.complement();
    let on_q = condition(bel, q, rule)?;
    let on_comp = condition(bel, &comp, rule)?;
    let belief = bel.belief(p).clone();
    let given_event = on_q.belief(p).clone();
    let given_complement = on_comp.belief(p).clone();
    let holds = belief >= given_event.clone().min(given_complement.clone());
    Ok(SureThingReport {
        belief,
        given_event,
        given_complement,
        holds,
    })
}
