//! Mass functions, belief functions, and the axiom checkers.
//!
//! A mass function assigns nonnegative weight to subsets, zero to the empty
//! set, summing to one. Its subset-sum transform is a belief function; the
//! alternating-sign inverse recovers the mass exactly. A total set function
//! is a belief function iff it maps the empty set to 0, the full set to 1,
//! and its inverse transform is nonnegative everywhere; on tiny frames the
//! superadditivity inequality can also be checked literally over every
//! collection of distinct nonempty subsets, and the two verdicts agree.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::frame::{Frame, FrameError, FrameExt, Subset};
use crate::rational::Rat;
use crate::setfn::SetFunction;

/// Largest frame on which the literal collection-enumeration check runs.
pub const MAX_DIRECT_CHECK: usize = 3;

/// Weight granularity for random generation.
const MAX_WEIGHT: u64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomViolation {
    #[error("axiom B0 violated: value at the empty set is {value}, want 0")]
    B0 { value: Rat },
    #[error("axiom B1 violated: value at {subset} is {value}, outside [0, 1]")]
    B1 { subset: Subset, value: Rat },
    #[error("axiom B2 violated: value at the full set is {value}, want 1")]
    B2 { value: Rat },
    #[error("not a belief function: inverse transform is negative at {subset} (mass {value})")]
    B3Mobius { subset: Subset, value: Rat },
    #[error("axiom B3 violated for collection {collection:?}: f(union) = {lhs} < {rhs}")]
    B3Direct {
        collection: Vec<Subset>,
        lhs: Rat,
        rhs: Rat,
    },
    #[error("axiom M1 violated: mass at the empty set is {value}, want 0")]
    M1 { value: Rat },
    #[error("axiom M2 violated: masses sum to {sum}, want 1")]
    M2 { sum: Rat },
    #[error("mass at {subset} is {value}, negative")]
    MassNegative { subset: Subset, value: Rat },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("direct axiom check enumerates all subset collections and supports frames up to {max} elements, got {got}")]
    DirectTooLarge { got: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// B0-B2 plus nonnegativity of the inverse transform.
    Mobius,
    /// B0-B2 plus the superadditivity inequality over every collection of
    /// distinct nonempty subsets. Frames up to [`MAX_DIRECT_CHECK`] only.
    Direct,
}

/// Outcome of [`check_belief_axioms`], one verdict per axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub mode: CheckMode,
    pub b0: Option<AxiomViolation>,
    pub b1: Option<AxiomViolation>,
    pub b2: Option<AxiomViolation>,
    pub b3: Option<AxiomViolation>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.b0.is_none() && self.b1.is_none() && self.b2.is_none() && self.b3.is_none()
    }

    /// First violated axiom in B0, B1, B2, B3 order.
    pub fn first_violation(&self) -> Option<&AxiomViolation> {
        [&self.b0, &self.b1, &self.b2, &self.b3]
            .into_iter()
            .find_map(|v| v.as_ref())
    }
}

/// Checks whether a total set function is a belief function.
pub fn check_belief_axioms(
    f: &SetFunction,
    mode: CheckMode,
) -> Result<AxiomReport, CheckError> {
    let frame = f.frame();
    let n = frame.len();
    if mode == CheckMode::Direct && n > MAX_DIRECT_CHECK {
        return Err(CheckError::DirectTooLarge {
            got: n,
            max: MAX_DIRECT_CHECK,
        });
    }

    let b0 = (!f.at_mask(0).is_zero()).then(|| AxiomViolation::B0 {
        value: f.at_mask(0).clone(),
    });
    let full = frame.full_mask();
    let b2 = (!f.at_mask(full).is_one()).then(|| AxiomViolation::B2 {
        value: f.at_mask(full).clone(),
    });
    let b1 = f.values().iter().enumerate().find_map(|(mask, v)| {
        (v < &Rat::zero() || v > &Rat::one()).then(|| AxiomViolation::B1 {
            subset: frame.subset_from_bits(mask as u64),
            value: v.clone(),
        })
    });
    let b3 = match mode {
        CheckMode::Mobius => {
            let inverse = f.mobius();
            inverse.values().iter().enumerate().find_map(|(mask, v)| {
                (v < &Rat::zero()).then(|| AxiomViolation::B3Mobius {
                    subset: frame.subset_from_bits(mask as u64),
                    value: v.clone(),
                })
            })
        }
        CheckMode::Direct => check_b3_direct(f),
    };

    Ok(AxiomReport { mode, b0, b1, b2, b3 })
}

/// Literal superadditivity check over every collection of distinct nonempty
/// subsets.
fn check_b3_direct(f: &SetFunction) -> Option<AxiomViolation> {
    let frame = f.frame();
    let full = frame.full_mask();
    let nonempty: Vec<u64> = (1..=full).collect();
    for family in 1u64..(1 << nonempty.len()) {
        let members: Vec<u64> = nonempty
            .iter()
            .enumerate()
            .filter(|(i, _)| family & (1 << i) != 0)
            .map(|(_, m)| *m)
            .collect();
        let union = members.iter().fold(0u64, |acc, m| acc | m);
        let mut rhs = Rat::zero();
        for pick in 1u64..(1 << members.len()) {
            let inter = members
                .iter()
                .enumerate()
                .filter(|(i, _)| pick & (1 << i) != 0)
                .fold(full, |acc, (_, m)| acc & m);
            if pick.count_ones() % 2 == 1 {
                rhs += f.at_mask(inter).clone();
            } else {
                rhs -= f.at_mask(inter).clone();
            }
        }
        if f.at_mask(union) < &rhs {
            return Some(AxiomViolation::B3Direct {
                collection: members
                    .iter()
                    .map(|m| frame.subset_from_bits(*m))
                    .collect(),
                lhs: f.at_mask(union).clone(),
                rhs,
            });
        }
    }
    None
}

/// Nonnegative weights on subsets: zero at the empty set, summing to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MassFunction(SetFunction);

impl MassFunction {
    /// Validates M1, nonnegativity, and M2, in that order.
    pub fn try_new(f: SetFunction) -> Result<Self, AxiomViolation> {
        if !f.at_mask(0).is_zero() {
            return Err(AxiomViolation::M1 {
                value: f.at_mask(0).clone(),
            });
        }
        for (mask, v) in f.values().iter().enumerate() {
            if v < &Rat::zero() {
                return Err(AxiomViolation::MassNegative {
                    subset: f.frame().subset_from_bits(mask as u64),
                    value: v.clone(),
                });
            }
        }
        let sum: Rat = f.values().iter().cloned().sum();
        if !sum.is_one() {
            return Err(AxiomViolation::M2 { sum });
        }
        Ok(MassFunction(f))
    }

    pub fn from_entries<I>(frame: &Arc<Frame>, entries: I) -> Result<Self, AxiomViolation>
    where
        I: IntoIterator<Item = (Subset, Rat)>,
    {
        let mut f = SetFunction::zero(Arc::clone(frame));
        for (subset, value) in entries {
            let current = f.get(&subset).clone();
            f.set(&subset, current + value);
        }
        MassFunction::try_new(f)
    }

    pub fn frame(&self) -> &Arc<Frame> {
        self.0.frame()
    }

    pub fn set_function(&self) -> &SetFunction {
        &self.0
    }

    pub fn get(&self, subset: &Subset) -> &Rat {
        self.0.get(subset)
    }

    pub fn at_mask(&self, mask: u64) -> &Rat {
        self.0.at_mask(mask)
    }

    /// Subsets with positive mass, in canonical order.
    pub fn focal_sets(&self) -> Vec<(Subset, Rat)> {
        let mut focal: Vec<(Subset, Rat)> = self
            .0
            .values()
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(mask, v)| (self.frame().subset_from_bits(mask as u64), v.clone()))
            .collect();
        focal.sort_by(|a, b| a.0.cmp(&b.0));
        focal
    }

    /// The belief function this mass induces.
    pub fn belief(&self) -> BeliefFunction {
        BeliefFunction::from_mass(self.clone())
    }
}

/// The inverse transform of an arbitrary set function, validated as a mass
/// function. Fails with a witness when the input is not a belief function.
pub fn mobius_inverse(f: &SetFunction) -> Result<MassFunction, AxiomViolation> {
    MassFunction::try_new(f.mobius())
}

/// A belief function with its mass function (the unique inverse transform)
/// kept alongside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeliefFunction {
    values: SetFunction,
    mass: MassFunction,
}

impl BeliefFunction {
    /// Subset-sum transform of a valid mass function. Always a belief
    /// function.
    pub fn from_mass(mass: MassFunction) -> Self {
        let values = mass.set_function().zeta();
        BeliefFunction { values, mass }
    }

    /// Validates an arbitrary total set function as a belief function
    /// (empty 0, full 1, range, nonnegative inverse transform).
    pub fn try_new(f: SetFunction) -> Result<Self, AxiomViolation> {
        let report = check_belief_axioms(&f, CheckMode::Mobius)
            .expect("mobius mode has no frame cap");
        if let Some(violation) = report.first_violation() {
            return Err(violation.clone());
        }
        let mass = MassFunction::try_new(f.mobius()).expect("checked nonnegative");
        Ok(BeliefFunction { values: f, mass })
    }

    /// Total ignorance: all mass on the full set.
    pub fn vacuous(frame: &Arc<Frame>) -> Self {
        let mut f = SetFunction::zero(Arc::clone(frame));
        f.set_mask(frame.full_mask(), Rat::one());
        BeliefFunction::from_mass(MassFunction::try_new(f).expect("vacuous mass is valid"))
    }

    /// The additive belief function of a probability vector (mass on
    /// singletons). Coordinates must be nonnegative and sum to one.
    pub fn from_probability(frame: &Arc<Frame>, coords: &[Rat]) -> Result<Self, AxiomViolation> {
        assert_eq!(coords.len(), frame.len(), "coordinate count mismatch");
        let entries = coords
            .iter()
            .enumerate()
            .map(|(i, p)| (frame.singleton(i), p.clone()));
        Ok(BeliefFunction::from_mass(MassFunction::from_entries(
            frame, entries,
        )?))
    }

    pub fn frame(&self) -> &Arc<Frame> {
        self.values.frame()
    }

    pub fn set_function(&self) -> &SetFunction {
        &self.values
    }

    /// The unique mass function with this belief as its subset-sum.
    pub fn mass(&self) -> &MassFunction {
        &self.mass
    }

    pub fn belief(&self, subset: &Subset) -> &Rat {
        self.values.get(subset)
    }

    pub fn belief_mask(&self, mask: u64) -> &Rat {
        self.values.at_mask(mask)
    }

    /// `Pl(A) = 1 - Bel(complement of A)`.
    pub fn plausibility(&self, subset: &Subset) -> Rat {
        self.plausibility_mask(subset.index() as u64)
    }

    pub fn plausibility_mask(&self, mask: u64) -> Rat {
        let full = self.frame().full_mask();
        Rat::one() - self.values.at_mask(full & !mask)
    }

    /// True when the mass is supported on singletons only, i.e. the belief
    /// function is an additive probability.
    pub fn is_probability(&self) -> bool {
        self.mass
            .set_function()
            .values()
            .iter()
            .enumerate()
            .all(|(mask, v)| v.is_zero() || mask.count_ones() == 1)
    }

    /// The probability vector, when additive.
    pub fn as_probability(&self) -> Option<Vec<Rat>> {
        self.is_probability().then(|| {
            (0..self.frame().len())
                .map(|i| self.mass.at_mask(1 << i).clone())
                .collect()
        })
    }
}

/// Deterministic random belief function: normalized integer weights on
/// `focal_count` random nonempty subsets.
pub fn random_belief(seed: u64, n: usize, focal_count: usize) -> Result<BeliefFunction, FrameError> {
    let frame = Frame::with_size(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_belief_with(&mut rng, &frame, focal_count))
}

pub fn random_belief_with(
    rng: &mut impl Rng,
    frame: &Arc<Frame>,
    focal_count: usize,
) -> BeliefFunction {
    assert!(focal_count >= 1, "need at least one focal set");
    let full = frame.full_mask();
    let mut weights: BTreeMap<u64, u64> = BTreeMap::new();
    for _ in 0..focal_count {
        let mask = rng.gen_range(1..=full);
        *weights.entry(mask).or_insert(0) += rng.gen_range(1..=MAX_WEIGHT);
    }
    let total: u64 = weights.values().sum();
    let mut f = SetFunction::zero(Arc::clone(frame));
    for (mask, w) in weights {
        f.set_mask(mask, Rat::new(w.into(), total.into()));
    }
    BeliefFunction::from_mass(MassFunction::try_new(f).expect("generated mass is valid"))
}

/// Deterministic random point in the probability simplex, all coordinates
/// strictly positive rationals.
pub fn random_probability(seed: u64, n: usize) -> Result<Vec<Rat>, FrameError> {
    let frame = Frame::with_size(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_probability_with(&mut rng, &frame))
}

pub fn random_probability_with(rng: &mut impl Rng, frame: &Arc<Frame>) -> Vec<Rat> {
    let weights: Vec<u64> = (0..frame.len())
        .map(|_| rng.gen_range(1..=MAX_WEIGHT))
        .collect();
    let total: u64 = weights.iter().sum();
    weights
        .into_iter()
        .map(|w| Rat::new(w.into(), total.into()))
        .collect()
}
