//! Dense set functions over a frame.
//!
//! A [`SetFunction`] stores one rational per subset, indexed by bitmask. The
//! subset-sum (zeta) transform and its inverse run in `O(n * 2^n)` by the
//! usual one-bit-at-a-time dynamic program.

use std::sync::Arc;

use num::Zero;
use thiserror::Error;

use crate::frame::{Frame, Subset};
use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetFunctionError {
    #[error("value vector has length {got}, frame of size {n} needs {want}")]
    Length { got: usize, n: usize, want: usize },
}

/// A total function from subsets of a frame to rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFunction {
    frame: Arc<Frame>,
    values: Vec<Rat>,
}

impl SetFunction {
    pub fn new(frame: Arc<Frame>, values: Vec<Rat>) -> Result<Self, SetFunctionError> {
        if values.len() != frame.num_subsets() {
            return Err(SetFunctionError::Length {
                got: values.len(),
                n: frame.len(),
                want: frame.num_subsets(),
            });
        }
        Ok(SetFunction { frame, values })
    }

    pub fn zero(frame: Arc<Frame>) -> Self {
        let values = vec![Rat::zero(); frame.num_subsets()];
        SetFunction { frame, values }
    }

    pub fn frame(&self) -> &Arc<Frame> {
        &self.frame
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn get(&self, subset: &Subset) -> &Rat {
        assert!(
            subset.frame() == &self.frame,
            "subset belongs to a different frame"
        );
        &self.values[subset.index()]
    }

    pub fn at_mask(&self, mask: u64) -> &Rat {
        &self.values[mask as usize]
    }

    pub fn set(&mut self, subset: &Subset, value: Rat) {
        assert!(
            subset.frame() == &self.frame,
            "subset belongs to a different frame"
        );
        self.values[subset.index()] = value;
    }

    pub fn set_mask(&mut self, mask: u64, value: Rat) {
        self.values[mask as usize] = value;
    }

    /// In-place subset-sum transform: `out[A] = sum_{B subseteq A} in[B]`.
    pub fn zeta_in_place(&mut self) {
        zeta(&mut self.values, self.frame.len());
    }

    /// In-place inverse of [`zeta_in_place`](Self::zeta_in_place):
    /// `out[A] = sum_{B subseteq A} (-1)^{|A \ B|} in[B]`.
    pub fn mobius_in_place(&mut self) {
        mobius(&mut self.values, self.frame.len());
    }

    /// Subset-summed copy.
    pub fn zeta(&self) -> SetFunction {
        let mut out = self.clone();
        out.zeta_in_place();
        out
    }

    /// Alternating-sign inverse copy.
    pub fn mobius(&self) -> SetFunction {
        let mut out = self.clone();
        out.mobius_in_place();
        out
    }
}

pub(crate) fn zeta(values: &mut [Rat], n: usize) {
    for bit in 0..n {
        let step = 1usize << bit;
        for mask in 0..values.len() {
            if mask & step != 0 {
                let low = values[mask ^ step].clone();
                values[mask] += low;
            }
        }
    }
}

pub(crate) fn mobius(values: &mut [Rat], n: usize) {
    for bit in 0..n {
        let step = 1usize << bit;
        for mask in 0..values.len() {
            if mask & step != 0 {
                let low = values[mask ^ step].clone();
                values[mask] -= low;
            }
        }
    }
}
