//! Finite frames and their subsets.
//!
//! A [`Frame`] is an ordered list of distinct element labels. Subsets are
//! bitmasks over element positions: subset `k` contains exactly the elements
//! whose ordinal bit is set in `k`, for `0 <= k < 2^n`. All set functions in
//! this crate are dense vectors indexed by that encoding.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest frame supported by the dense set-function representation.
pub const MAX_FRAME_SIZE: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("frame must have between 1 and {max} elements, got {got}")]
    Size { got: usize, max: usize },
    #[error("element labels must be unique and non-empty (offending label `{0}`)")]
    BadLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
}

/// A finite sample space: an ordered list of distinct, non-empty labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    labels: Vec<String>,
}

impl Frame {
    /// Builds a frame from element labels. Labels must be unique, non-empty,
    /// and number between 1 and [`MAX_FRAME_SIZE`].
    pub fn new<I, S>(labels: I) -> Result<Arc<Frame>, FrameError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() || labels.len() > MAX_FRAME_SIZE {
            return Err(FrameError::Size {
                got: labels.len(),
                max: MAX_FRAME_SIZE,
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || labels[..i].contains(label) {
                return Err(FrameError::BadLabel(label.clone()));
            }
        }
        Ok(Arc::new(Frame { labels }))
    }

    /// A frame with synthetic labels `e1..en`.
    pub fn with_size(n: usize) -> Result<Arc<Frame>, FrameError> {
        Frame::new((1..=n).map(|i| format!("e{i}")))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Number of subsets, `2^n`.
    pub fn num_subsets(&self) -> usize {
        1 << self.labels.len()
    }

    /// Bitmask of the full set.
    pub fn full_mask(&self) -> u64 {
        (1u64 << self.labels.len()) - 1
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Frame-bound accessors that hand out subsets.
pub trait FrameExt {
    fn empty_set(&self) -> Subset;
    fn full_set(&self) -> Subset;
    fn singleton(&self, index: usize) -> Subset;
    fn subset_from_bits(&self, bits: u64) -> Subset;
    fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset, FrameError>;
    fn subsets(&self) -> SubsetIter;
}

impl FrameExt for Arc<Frame> {
    fn empty_set(&self) -> Subset {
        self.subset_from_bits(0)
    }

    fn full_set(&self) -> Subset {
        self.subset_from_bits(self.full_mask())
    }

    fn singleton(&self, index: usize) -> Subset {
        assert!(index < self.len(), "element index {index} out of range");
        self.subset_from_bits(1 << index)
    }

    /// Wraps a raw bitmask. Panics if bits outside the frame are set.
    fn subset_from_bits(&self, bits: u64) -> Subset {
        assert!(
            bits <= self.full_mask(),
            "bitmask {bits:#b} exceeds frame of size {}",
            self.len()
        );
        Subset {
            frame: Arc::clone(self),
            bits,
        }
    }

    /// Resolves a list of element labels into a subset.
    fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset, FrameError> {
        let mut bits = 0u64;
        for label in labels {
            let idx = self
                .index_of(label.as_ref())
                .ok_or_else(|| FrameError::UnknownLabel(label.as_ref().to_owned()))?;
            bits |= 1 << idx;
        }
        Ok(self.subset_from_bits(bits))
    }

    /// All `2^n` subsets in bitmask order.
    fn subsets(&self) -> SubsetIter {
        SubsetIter {
            frame: Arc::clone(self),
            next: 0,
            end: self.num_subsets() as u64,
        }
    }
}

/// A subset of a specific frame. Set algebra on subsets of different frames
/// is a programming error and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    frame: Arc<Frame>,
    bits: u64,
}

impl Subset {
    pub fn frame(&self) -> &Arc<Frame> {
        &self.frame
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Index into a dense `2^n` set-function vector.
    pub fn index(&self) -> usize {
        self.bits as usize
    }

    /// Number of elements in the subset.
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == self.frame.full_mask()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.bits & (1 << element) != 0
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.assert_same_frame(other);
        self.bits & !other.bits == 0
    }

    pub fn complement(&self) -> Subset {
        Subset {
            frame: Arc::clone(&self.frame),
            bits: self.frame.full_mask() & !self.bits,
        }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.assert_same_frame(other);
        Subset {
            frame: Arc::clone(&self.frame),
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        self.assert_same_frame(other);
        Subset {
            frame: Arc::clone(&self.frame),
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        self.assert_same_frame(other);
        Subset {
            frame: Arc::clone(&self.frame),
            bits: self.bits & !other.bits,
        }
    }

    /// Element indices, ascending.
    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.frame.len()).filter(|i| self.contains(*i))
    }

    /// Element labels, in frame order.
    pub fn labels(&self) -> Vec<&str> {
        self.elements().map(|i| self.frame.label(i)).collect()
    }

    fn assert_same_frame(&self, other: &Subset) {
        assert!(
            self.frame == other.frame,
            "subsets belong to different frames: {:?} vs {:?}",
            self.frame.labels(),
            other.frame.labels()
        );
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(", "))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(", "))
    }
}

/// Canonical subset order: cardinality first, then bitmask value.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.frame
            .labels()
            .cmp(other.frame.labels())
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct SubsetIter {
    frame: Arc<Frame>,
    next: u64,
    end: u64,
}

impl Iterator for SubsetIter {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        if self.next >= self.end {
            return None;
        }
        let bits = self.next;
        self.next += 1;
        Some(Subset {
            frame: Arc::clone(&self.frame),
            bits,
        })
    }
}
