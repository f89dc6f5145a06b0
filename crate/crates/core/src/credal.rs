//! Brute-force credal-set ground truth.
//!
//! A [`CredalSet`] is the convex hull of an explicit, canonically sorted
//! vertex list of probability distributions. Envelopes over the set reduce
//! to min/max over vertices: events are linear in the distribution, and a
//! conditional probability is a linear-fractional function with positive
//! denominator, so both attain their extrema at vertices of the polytope.
//!
//! The extreme points of the consistent-probability polytope of a belief
//! function come from the permutation-allocation construction: for each
//! ordering of the frame, every focal set hands its whole mass to its
//! earliest member. Constraint polytopes inside the simplex are enumerated
//! the generic way, by solving every maximal active-constraint subset.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::sync::OnceLock;

use itertools::Itertools;
use num::{One, Zero};
use thiserror::Error;

use crate::belief::{AxiomViolation, BeliefFunction, MassFunction};
use crate::frame::{Frame, FrameExt, Subset};
use crate::rational::Rat;
use crate::setfn::SetFunction;

/// Permutation enumeration visits `n!` orderings.
pub const MAX_ENUMERATION_FRAME: usize = 7;
/// Constraint-polytope enumeration solves all active-constraint subsets.
pub const MAX_POLYTOPE_FRAME: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CredalError {
    #[error("{what} supports frames up to {max} elements, got {got}")]
    FrameTooLarge {
        what: &'static str,
        got: usize,
        max: usize,
    },
    #[error("credal set needs at least one vertex")]
    Empty,
    #[error("vertex {index} is not a probability distribution: {reason}")]
    BadVertex { index: usize, reason: String },
    #[error("constraint {index} has {got} coefficients, frame needs {want}")]
    BadConstraint { index: usize, got: usize, want: usize },
    #[error("constraint system is infeasible within the probability simplex")]
    Infeasible,
    #[error("conditioning event {event} has probability 0 at vertex {index}")]
    ConditioningUndefined { event: String, index: usize },
    #[error("every distribution in the redistributed family assigns probability 0 to {event}")]
    DegenerateScenario { event: String },
}

/// A polytope of probability distributions, stored as its vertex list in
/// canonical (lexicographic) order without duplicates.
#[derive(Debug, Clone)]
pub struct CredalSet {
    frame: Arc<Frame>,
    vertices: Vec<Vec<Rat>>,
    event_sums: OnceLock<Vec<Vec<Rat>>>,
}

impl PartialEq for CredalSet {
    fn eq(&self, other: &Self) -> bool {
        self.frame == other.frame && self.vertices == other.vertices
    }
}

impl Eq for CredalSet {}

impl CredalSet {
    pub fn new(frame: Arc<Frame>, vertices: Vec<Vec<Rat>>) -> Result<Self, CredalError> {
        if vertices.is_empty() {
            return Err(CredalError::Empty);
        }
        for (index, v) in vertices.iter().enumerate() {
            if v.len() != frame.len() {
                return Err(CredalError::BadVertex {
                    index,
                    reason: format!("{} coordinates, frame has {}", v.len(), frame.len()),
                });
            }
            if let Some(p) = v.iter().find(|p| **p < Rat::zero()) {
                return Err(CredalError::BadVertex {
                    index,
                    reason: format!("negative coordinate {p}"),
                });
            }
            let sum: Rat = v.iter().cloned().sum();
            if !sum.is_one() {
                return Err(CredalError::BadVertex {
                    index,
                    reason: format!("coordinates sum to {sum}"),
                });
            }
        }
        let canonical: BTreeSet<Vec<Rat>> = vertices.into_iter().collect();
        Ok(CredalSet {
            frame,
            vertices: canonical.into_iter().collect(),
            event_sums: OnceLock::new(),
        })
    }

    pub fn frame(&self) -> &Arc<Frame> {
        &self.frame
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Per-vertex probabilities of every event, `sums[v][mask]`.
    fn sums(&self) -> &Vec<Vec<Rat>> {
        self.event_sums.get_or_init(|| {
            self.vertices
                .iter()
                .map(|v| {
                    let mut s = vec![Rat::zero(); self.frame.num_subsets()];
                    for mask in 1..s.len() {
                        let low = mask.trailing_zeros() as usize;
                        s[mask] = s[mask & (mask - 1)].clone() + &v[low];
                    }
                    s
                })
                .collect()
        })
    }
}

/// Extreme points of the polytope of probability functions consistent with
/// a belief function, by permutation allocation.
pub fn extreme_points(bel: &BeliefFunction) -> Result<CredalSet, CredalError> {
    let frame = bel.frame();
    let n = frame.len();
    if n > MAX_ENUMERATION_FRAME {
        return Err(CredalError::FrameTooLarge {
            what: "permutation enumeration",
            got: n,
            max: MAX_ENUMERATION_FRAME,
        });
    }
    let focal: Vec<(u64, Rat)> = bel
        .mass()
        .set_function()
        .values()
        .iter()
        .enumerate()
        .filter(|(_, m)| !m.is_zero())
        .map(|(mask, m)| (mask as u64, m.clone()))
        .collect();
    let mut vertices = BTreeSet::new();
    for order in (0..n).permutations(n) {
        let mut p = vec![Rat::zero(); n];
        for (mask, m) in &focal {
            let first = order
                .iter()
                .copied()
                .find(|el| mask & (1 << el) != 0)
                .expect("focal sets are nonempty");
            p[first] += m;
        }
        vertices.insert(p);
    }
    CredalSet::new(Arc::clone(frame), vertices.into_iter().collect())
}

/// `(min, max)` of the probability of `a` over the vertex list.
pub fn envelope(cs: &CredalSet, a: &Subset) -> (Rat, Rat) {
    assert!(a.frame() == cs.frame(), "event belongs to a different frame");
    let sums = cs.sums();
    let column = a.index();
    let mut lo = sums[0][column].clone();
    let mut hi = lo.clone();
    for row in &sums[1..] {
        let v = &row[column];
        if v < &lo {
            lo = v.clone();
        }
        if v > &hi {
            hi = v.clone();
        }
    }
    (lo, hi)
}

/// `(min, max)` of `Pr(a | b)` over the vertex list. Linear-fractional in
/// the distribution, so vertex extrema are polytope extrema.
pub fn conditional_envelope(
    cs: &CredalSet,
    a: &Subset,
    b: &Subset,
) -> Result<(Rat, Rat), CredalError> {
    assert!(a.frame() == cs.frame(), "event belongs to a different frame");
    assert!(b.frame() == cs.frame(), "event belongs to a different frame");
    let sums = cs.sums();
    let ab = a.intersection(b).index();
    let bcol = b.index();
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    for (index, row) in sums.iter().enumerate() {
        if row[bcol].is_zero() {
            return Err(CredalError::ConditioningUndefined {
                event: b.to_string(),
                index,
            });
        }
        let v = row[ab].clone() / &row[bcol];
        if lo.as_ref().is_none_or(|cur| &v < cur) {
            lo = Some(v.clone());
        }
        if hi.as_ref().is_none_or(|cur| &v > cur) {
            hi = Some(v);
        }
    }
    Ok((lo.expect("nonempty"), hi.expect("nonempty")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

/// `coeffs . p  <relation>  bound` over the frame's element probabilities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<Rat>,
    pub relation: Relation,
    pub bound: Rat,
}

impl LinearConstraint {
    pub fn le(coeffs: Vec<Rat>, bound: Rat) -> Self {
        LinearConstraint {
            coeffs,
            relation: Relation::Le,
            bound,
        }
    }

    pub fn eq(coeffs: Vec<Rat>, bound: Rat) -> Self {
        LinearConstraint {
            coeffs,
            relation: Relation::Eq,
            bound,
        }
    }

    pub fn ge(coeffs: Vec<Rat>, bound: Rat) -> Self {
        LinearConstraint {
            coeffs,
            relation: Relation::Ge,
            bound,
        }
    }

    /// Coefficient row for the event `a` (sum of its element probabilities).
    pub fn event_coeffs(frame: &Frame, a: u64) -> Vec<Rat> {
        (0..frame.len())
            .map(|i| {
                if a & (1 << i) != 0 {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            })
            .collect()
    }
}

/// Enumerates the vertices of `{p in simplex : constraints hold}` exactly,
/// by solving every subset of at most `n` tight inequalities against the
/// equality system and keeping unique feasible solutions.
pub fn polytope_vertices(
    constraints: &[LinearConstraint],
    frame: &Arc<Frame>,
) -> Result<CredalSet, CredalError> {
    let n = frame.len();
    if n > MAX_POLYTOPE_FRAME {
        return Err(CredalError::FrameTooLarge {
            what: "constraint-polytope enumeration",
            got: n,
            max: MAX_POLYTOPE_FRAME,
        });
    }
    for (index, c) in constraints.iter().enumerate() {
        if c.coeffs.len() != n {
            return Err(CredalError::BadConstraint {
                index,
                got: c.coeffs.len(),
                want: n,
            });
        }
    }

    // Normal form: rows of (coeffs, rhs). Equalities always active;
    // inequalities as `coeffs . p <= rhs`.
    let mut equalities: Vec<(Vec<Rat>, Rat)> = vec![(vec![Rat::one(); n], Rat::one())];
    let mut inequalities: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for i in 0..n {
        let mut row = vec![Rat::zero(); n];
        row[i] = -Rat::one();
        inequalities.push((row, Rat::zero()));
    }
    for c in constraints {
        match c.relation {
            Relation::Eq => equalities.push((c.coeffs.clone(), c.bound.clone())),
            Relation::Le => inequalities.push((c.coeffs.clone(), c.bound.clone())),
            Relation::Ge => inequalities.push((
                c.coeffs.iter().map(|x| -x.clone()).collect(),
                -c.bound.clone(),
            )),
        }
    }

    let mut vertices = BTreeSet::new();
    let m = inequalities.len();
    for size in 0..=n.min(m) {
        for tight in (0..m).combinations(size) {
            let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(equalities.len() + size);
            for (coeffs, rhs) in &equalities {
                let mut row = coeffs.clone();
                row.push(rhs.clone());
                rows.push(row);
            }
            for &t in &tight {
                let (coeffs, rhs) = &inequalities[t];
                let mut row = coeffs.clone();
                row.push(rhs.clone());
                rows.push(row);
            }
            let Some(p) = solve_unique(rows, n) else {
                continue;
            };
            let feasible = inequalities.iter().all(|(coeffs, rhs)| {
                let lhs: Rat = coeffs
                    .iter()
                    .zip(&p)
                    .map(|(c, x)| c.clone() * x)
                    .sum();
                &lhs <= rhs
            });
            if feasible {
                vertices.insert(p);
            }
        }
    }
    if vertices.is_empty() {
        // A nonempty bounded polyhedron always has a vertex.
        return Err(CredalError::Infeasible);
    }
    CredalSet::new(Arc::clone(frame), vertices.into_iter().collect())
}

/// Gauss-Jordan elimination over exact rationals on augmented rows.
/// `Some` only when the system is consistent with a unique solution.
fn solve_unique(mut rows: Vec<Vec<Rat>>, n: usize) -> Option<Vec<Rat>> {
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let pivot = rows[r][c].clone();
        for j in c..=n {
            let v = rows[r][j].clone() / &pivot;
            rows[r][j] = v;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in c..=n {
                    let delta = rows[r][j].clone() * &factor;
                    rows[i][j] -= delta;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    for row in &rows[r..] {
        if !row[n].is_zero() {
            return None; // inconsistent
        }
    }
    if pivot_cols.len() < n {
        return None; // underdetermined
    }
    let mut x = vec![Rat::zero(); n];
    for (k, &c) in pivot_cols.iter().enumerate() {
        x[c] = rows[k][n].clone();
    }
    Some(x)
}

/// The lower envelope of a credal set at every subset, with the verdict of
/// the belief-function check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnvelopeReport {
    pub lower: SetFunction,
    pub verdict: Result<BeliefFunction, AxiomViolation>,
}

impl EnvelopeReport {
    pub fn is_belief_function(&self) -> bool {
        self.verdict.is_ok()
    }
}

pub fn envelope_setfunction(cs: &CredalSet) -> EnvelopeReport {
    let frame = cs.frame();
    let mut lower = SetFunction::zero(Arc::clone(frame));
    for mask in 0..frame.num_subsets() as u64 {
        let (lo, _) = envelope(cs, &frame.subset_from_bits(mask));
        lower.set_mask(mask, lo);
    }
    let verdict = BeliefFunction::try_new(lower.clone());
    EnvelopeReport { lower, verdict }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScenarioError {
    #[error("partition cell {0} is empty")]
    EmptyCell(usize),
    #[error("partition cells {0} and {1} overlap")]
    Overlap(usize, usize),
    #[error("partition cells do not cover the frame")]
    Cover,
    #[error("{cells} cells but {weights} weights")]
    WeightCount { cells: usize, weights: usize },
    #[error("weight {index} is {value}, must be positive")]
    NonPositiveWeight { index: usize, value: Rat },
    #[error("weights sum to {0}, want 1")]
    WeightSum(Rat),
}

/// A chance process: cell `X_i` of a partition is picked with probability
/// `a_i`, then an element inside the cell is picked by an unknown process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionScenario {
    frame: Arc<Frame>,
    cells: Vec<Subset>,
    weights: Vec<Rat>,
}

impl PartitionScenario {
    pub fn new(
        frame: Arc<Frame>,
        cells: Vec<Subset>,
        weights: Vec<Rat>,
    ) -> Result<Self, ScenarioError> {
        if cells.len() != weights.len() {
            return Err(ScenarioError::WeightCount {
                cells: cells.len(),
                weights: weights.len(),
            });
        }
        let mut seen = 0u64;
        for (i, cell) in cells.iter().enumerate() {
            assert!(cell.frame() == &frame, "cell belongs to a different frame");
            if cell.is_empty() {
                return Err(ScenarioError::EmptyCell(i));
            }
            if cell.bits() & seen != 0 {
                let j = cells[..i]
                    .iter()
                    .position(|c| c.bits() & cell.bits() != 0)
                    .expect("overlap witnessed");
                return Err(ScenarioError::Overlap(j, i));
            }
            seen |= cell.bits();
        }
        if seen != frame.full_mask() {
            return Err(ScenarioError::Cover);
        }
        for (index, w) in weights.iter().enumerate() {
            if w <= &Rat::zero() {
                return Err(ScenarioError::NonPositiveWeight {
                    index,
                    value: w.clone(),
                });
            }
        }
        let sum: Rat = weights.iter().cloned().sum();
        if !sum.is_one() {
            return Err(ScenarioError::WeightSum(sum));
        }
        Ok(PartitionScenario {
            frame,
            cells,
            weights,
        })
    }

    pub fn frame(&self) -> &Arc<Frame> {
        &self.frame
    }

    pub fn cells(&self) -> &[Subset] {
        &self.cells
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }
}

/// The belief function of the scenario: mass `a_i` on cell `X_i`. Its
/// consistent-probability polytope is exactly `{Pr : Pr(X_i) = a_i}`.
pub fn partition_belief(ps: &PartitionScenario) -> BeliefFunction {
    let entries = ps
        .cells
        .iter()
        .cloned()
        .zip(ps.weights.iter().cloned());
    BeliefFunction::from_mass(
        MassFunction::from_entries(&ps.frame, entries).expect("partition mass is valid"),
    )
}

/// The credal set of the redistributed process: a cell that meets both `b`
/// and its complement spends its whole weight inside `cell n b`; other
/// cells are unchanged. Pass the full set to recover the original credal
/// set of the scenario.
pub fn redistribution_credal(
    ps: &PartitionScenario,
    b: &Subset,
) -> Result<CredalSet, CredalError> {
    assert!(b.frame() == &ps.frame, "event belongs to a different frame");
    if ps.cells.iter().all(|cell| cell.intersection(b).is_empty()) {
        return Err(CredalError::DegenerateScenario {
            event: b.to_string(),
        });
    }
    let supports: Vec<Vec<usize>> = ps
        .cells
        .iter()
        .map(|cell| {
            let inter = cell.intersection(b);
            let support = if inter.is_empty() || cell.is_subset_of(b) {
                cell.clone()
            } else {
                inter
            };
            support.elements().collect()
        })
        .collect();
    let mut vertices = BTreeSet::new();
    for choice in supports.iter().map(|s| s.iter().copied()).multi_cartesian_product() {
        let mut p = vec![Rat::zero(); ps.frame.len()];
        for (el, w) in choice.into_iter().zip(&ps.weights) {
            p[el] += w;
        }
        vertices.insert(p);
    }
    CredalSet::new(Arc::clone(&ps.frame), vertices.into_iter().collect())
}
