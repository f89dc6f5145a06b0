//! Exact-arithmetic toolkit for belief functions on finite frames.
//!
//! Everything runs on arbitrary-precision rationals; equalities in the test
//! suite are exact, never tolerance-based. The crate provides:
//!
//! - frames, bitmask subsets, and dense set functions with fast subset-sum
//!   and inverse transforms ([`frame`], [`setfn`]);
//! - mass and belief functions with axiom checkers and deterministic random
//!   generators ([`belief`]);
//! - two conditioning rules in closed form, iterated updates, the
//!   containment chain, and the sure-thing principle ([`conditioning`]);
//! - a brute-force credal-set oracle: permutation-enumerated extreme
//!   points, envelopes, conditional envelopes, constraint-polytope vertex
//!   enumeration, and partition/redistribution scenarios ([`credal`]);
//! - a constructive certificate that envelope conditionals are belief
//!   functions, via an explicit conditional mass function ([`condmass`]);
//! - a JSON document format with rationals as `"p/q"` strings ([`doc`]).

pub mod belief;
pub mod condmass;
pub mod conditioning;
pub mod credal;
pub mod doc;
pub mod fixtures;
pub mod frame;
pub mod rational;
pub mod scenarios;
pub mod setfn;

pub use belief::{
    check_belief_axioms, mobius_inverse, random_belief, random_probability, AxiomReport,
    AxiomViolation, BeliefFunction, CheckMode, MassFunction,
};
pub use condmass::{certify, decompose, string_mass, CertificationReport, FocalDecomposition};
pub use conditioning::{
    condition, containment_check, ds_condition, fh_condition, iterate, sure_thing_check,
    ConditionalReport, ConditioningError, ConditioningRule,
};
pub use credal::{
    conditional_envelope, envelope, envelope_setfunction, extreme_points, partition_belief,
    polytope_vertices, redistribution_credal, CredalSet, LinearConstraint, PartitionScenario,
};
pub use frame::{Frame, FrameError, FrameExt, Subset};
pub use rational::{format_rat, parse_rat, rat, Rat};
pub use setfn::SetFunction;
