//! Constructive certificates for envelope conditionals.
//!
//! Conditioning by the envelope rule on an event `B` with `Bel(B) > 0`
//! yields a belief function; this module produces the witnessing mass
//! function explicitly instead of taking that on faith.
//!
//! The construction works over the focal sets that meet `B`. Those inside
//! `B` are the *heads* `B_1..B_t` with normalized weights `beta_i`; those
//! meeting `B` without being contained in it are the *straddlers*
//! `A'_1..A'_s`, cut down to `A_j = A'_j n B` with normalized weights
//! `alpha_j`. A *string* is a head index plus a strictly increasing tail of
//! straddler indices, and represents the set `B_i u A_{j_1} u ... u A_{j_r}`.
//! String weights are assigned by the recursion
//!
//! ```text
//! w(i, {})   = beta_i
//! w(i, T)    = beta_i / (1 - sum_{j in T} alpha_j)  -  sum_{Y proper subset of T} w(i, Y)
//! ```
//!
//! so that the weights of all tails below a fixed tail `T` telescope to
//! `beta_i / (1 - sum alpha_j)`. Summing string weights by represented set
//! gives the conditional mass; its subset sums reproduce the closed-form
//! conditional belief exactly, which is checked per instance together with
//! nonnegativity rather than assumed.

use std::collections::HashMap;
use std::sync::Arc;

use num::{One, Zero};
use thiserror::Error;

use crate::belief::{AxiomViolation, BeliefFunction, MassFunction};
use crate::conditioning::{fh_condition, ConditionalReport, ConditioningError, ConditioningRule};
use crate::frame::{FrameExt, Subset};
use crate::rational::Rat;
use crate::setfn::SetFunction;

/// The tail powerset drives the cost, independently of frame size.
pub const MAX_STRADDLERS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CondMassError {
    #[error(transparent)]
    Undefined(#[from] ConditioningError),
    #[error("decomposition has {got} straddling focal sets, cap is {max}")]
    TooManyStraddlers { got: usize, max: usize },
}

/// Focal sets of a mass function sorted against a conditioning event:
/// heads inside the event, straddlers cut down to it, weights normalized
/// by the total mass meeting the event.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FocalDecomposition {
    event: Subset,
    inside: Vec<u64>,
    straddling_raw: Vec<u64>,
    straddling: Vec<u64>,
    beta_raw: Vec<Rat>,
    alpha_raw: Vec<Rat>,
    normalizer: Rat,
    beta: Vec<Rat>,
    alpha: Vec<Rat>,
}

impl FocalDecomposition {
    pub fn event(&self) -> &Subset {
        &self.event
    }

    /// Focal sets with positive mass contained in the event, as subsets.
    pub fn inside_sets(&self) -> Vec<Subset> {
        let frame = self.event.frame();
        self.inside
            .iter()
            .map(|m| frame.subset_from_bits(*m))
            .collect()
    }

    /// Focal sets meeting the event without being contained in it.
    pub fn straddling_sets(&self) -> Vec<Subset> {
        let frame = self.event.frame();
        self.straddling_raw
            .iter()
            .map(|m| frame.subset_from_bits(*m))
            .collect()
    }

    /// The straddling sets cut down to the event.
    pub fn cut_sets(&self) -> Vec<Subset> {
        let frame = self.event.frame();
        self.straddling
            .iter()
            .map(|m| frame.subset_from_bits(*m))
            .collect()
    }

    pub fn head_count(&self) -> usize {
        self.inside.len()
    }

    pub fn straddler_count(&self) -> usize {
        self.straddling.len()
    }

    /// Total raw mass meeting the event.
    pub fn normalizer(&self) -> &Rat {
        &self.normalizer
    }

    pub fn head_weight(&self, i: usize) -> &Rat {
        &self.beta[i]
    }

    pub fn straddler_weight(&self, j: usize) -> &Rat {
        &self.alpha[j]
    }

    pub fn raw_head_weight(&self, i: usize) -> &Rat {
        &self.beta_raw[i]
    }

    pub fn raw_straddler_weight(&self, j: usize) -> &Rat {
        &self.alpha_raw[j]
    }
}

/// A head index plus a strictly increasing tail of straddler indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FocalString {
    pub head: usize,
    pub tail: Vec<usize>,
}

impl FocalString {
    pub fn new(head: usize, tail: Vec<usize>) -> Self {
        assert!(
            tail.windows(2).all(|w| w[0] < w[1]),
            "tail indices must be strictly increasing"
        );
        FocalString { head, tail }
    }

    fn tail_mask(&self) -> u32 {
        self.tail.iter().fold(0u32, |acc, j| acc | (1 << j))
    }
}

/// Splits the focal sets of `m` against `b` and normalizes the weights.
/// Undefined when no focal set lies inside `b`, i.e. when `Bel(b) = 0`.
pub fn decompose(m: &MassFunction, b: &Subset) -> Result<FocalDecomposition, CondMassError> {
    assert!(b.frame() == m.frame(), "event belongs to a different frame");
    let bm = b.bits();
    let mut inside = Vec::new();
    let mut beta_raw = Vec::new();
    let mut straddling_raw = Vec::new();
    let mut straddling = Vec::new();
    let mut alpha_raw = Vec::new();
    for (mask, value) in m.set_function().values().iter().enumerate() {
        let mask = mask as u64;
        if value.is_zero() || mask & bm == 0 {
            continue;
        }
        if mask & !bm == 0 {
            inside.push(mask);
            beta_raw.push(value.clone());
        } else {
            straddling_raw.push(mask);
            straddling.push(mask & bm);
            alpha_raw.push(value.clone());
        }
    }
    if inside.is_empty() {
        return Err(ConditioningError::Undefined {
            rule: ConditioningRule::Fh,
            event: b.to_string(),
            reason: "Bel(event) = 0".into(),
        }
        .into());
    }
    if straddling.len() > MAX_STRADDLERS {
        return Err(CondMassError::TooManyStraddlers {
            got: straddling.len(),
            max: MAX_STRADDLERS,
        });
    }
    let normalizer: Rat = beta_raw.iter().chain(alpha_raw.iter()).cloned().sum();
    let beta = beta_raw.iter().map(|v| v / &normalizer).collect();
    let alpha = alpha_raw.iter().map(|v| v / &normalizer).collect();
    Ok(FocalDecomposition {
        event: b.clone(),
        inside,
        straddling_raw,
        straddling,
        beta_raw,
        alpha_raw,
        normalizer,
        beta,
        alpha,
    })
}

impl FocalDecomposition {
    /// String weight by the defining recursion, memoized on the canonical
    /// (head, tail-set) form. The memo lives only for this invocation.
    fn tail_weight(&self, head: usize, tail: u32, memo: &mut HashMap<u32, Rat>) -> Rat {
        if tail == 0 {
            return self.beta[head].clone();
        }
        if let Some(v) = memo.get(&tail) {
            return v.clone();
        }
        let mut blocked = Rat::zero();
        for (j, alpha) in self.alpha.iter().enumerate() {
            if tail & (1 << j) != 0 {
                blocked += alpha;
            }
        }
        let denominator = Rat::one() - blocked;
        // Positive because the heads contribute weight: sum of all alphas
        // is strictly below one whenever some beta is positive.
        assert!(
            denominator > Rat::zero(),
            "string-weight denominator must stay positive"
        );
        let mut value = self.beta[head].clone() / denominator;
        let mut sub = (tail - 1) & tail;
        loop {
            value -= self.tail_weight(head, sub, memo);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & tail;
        }
        memo.insert(tail, value.clone());
        value
    }

    /// The represented set of a (head, tail-mask) string.
    fn represented_mask(&self, head: usize, tail: u32) -> u64 {
        let mut mask = self.inside[head];
        for (j, cut) in self.straddling.iter().enumerate() {
            if tail & (1 << j) != 0 {
                mask |= cut;
            }
        }
        mask
    }

    /// Weights of every string (each head crossed with every tail), in
    /// (head, tail cardinality, tail mask) order.
    pub fn string_table(&self) -> Vec<StringWeight> {
        let frame = self.event.frame();
        let tails = 1u32 << self.straddler_count();
        let mut rows = Vec::with_capacity(self.head_count() << self.straddler_count());
        for head in 0..self.head_count() {
            let mut memo = HashMap::new();
            let mut masks: Vec<u32> = (0..tails).collect();
            masks.sort_by_key(|m| (m.count_ones(), *m));
            for tail in masks {
                let value = self.tail_weight(head, tail, &mut memo);
                rows.push(StringWeight {
                    head,
                    tail: (0..self.straddler_count())
                        .filter(|j| tail & (1 << j) != 0)
                        .collect(),
                    set: frame.subset_from_bits(self.represented_mask(head, tail)),
                    value,
                });
            }
        }
        rows
    }

    /// Aggregates string weights by represented set. Validity (zero at the
    /// empty set, nonnegativity, total one) is checked, not assumed.
    pub fn conditional_mass(&self) -> Result<MassFunction, AxiomViolation> {
        let frame = self.event.frame();
        let mut values = SetFunction::zero(Arc::clone(frame));
        let tails = 1u32 << self.straddler_count();
        for head in 0..self.head_count() {
            let mut memo = HashMap::new();
            for tail in 0..tails {
                let value = self.tail_weight(head, tail, &mut memo);
                let mask = self.represented_mask(head, tail);
                let current = values.at_mask(mask).clone();
                values.set_mask(mask, current + value);
            }
        }
        MassFunction::try_new(values)
    }
}

/// One string and its weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringWeight {
    pub head: usize,
    pub tail: Vec<usize>,
    pub set: Subset,
    pub value: Rat,
}

/// Weight of a single string. The cache is per-invocation, so calls are
/// independent and parallel-safe.
pub fn string_mass(fd: &FocalDecomposition, s: &FocalString) -> Rat {
    assert!(s.head < fd.head_count(), "head index out of range");
    assert!(
        s.tail.iter().all(|j| *j < fd.straddler_count()),
        "tail index out of range"
    );
    fd.tail_weight(s.head, s.tail_mask(), &mut HashMap::new())
}

/// The full certificate: decomposition, string table, aggregated mass with
/// its validity verdict, and the exact comparison against the closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificationReport {
    pub decomposition: FocalDecomposition,
    pub strings: Vec<StringWeight>,
    pub mass: Result<MassFunction, AxiomViolation>,
    pub closed_form: ConditionalReport,
    /// First subset where the reconstructed belief differs from the closed
    /// form. Always `None` unless the implementation is broken.
    pub mismatch: Option<Subset>,
    /// Reconstructed belief assigns one to the conditioning event.
    pub event_belief_is_one: bool,
}

impl CertificationReport {
    pub fn certified(&self) -> bool {
        self.mass.is_ok() && self.mismatch.is_none() && self.event_belief_is_one
    }
}

/// Builds the conditional mass for `Bel(.|b)` and checks, exactly and per
/// instance, that it is a valid mass function whose subset sums reproduce
/// the closed-form conditional.
pub fn certify(bel: &BeliefFunction, b: &Subset) -> Result<CertificationReport, CondMassError> {
    let decomposition = decompose(bel.mass(), b)?;
    let strings = decomposition.string_table();
    let mass = decomposition.conditional_mass();
    let closed_form = fh_condition(bel, b).expect("decompose enforced Bel(b) > 0");
    let (mismatch, event_belief_is_one) = match &mass {
        Ok(m) => {
            let reconstructed = BeliefFunction::from_mass(m.clone());
            let frame = bel.frame();
            let mismatch = frame.subsets().find(|c| {
                reconstructed.belief(c) != closed_form.belief(c)
            });
            (mismatch, reconstructed.belief(b).is_one())
        }
        Err(_) => (None, false),
    };
    Ok(CertificationReport {
        decomposition,
        strings,
        mass,
        closed_form,
        mismatch,
        event_belief_is_one,
    })
}
