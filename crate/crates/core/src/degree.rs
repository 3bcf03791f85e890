use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::tree::MAX_VERTICES;

/// The multiset of internal-vertex degrees of a tree, stored in
/// non-increasing order.
///
/// Leaves are implicit: a sequence of `k` internal degrees summing to `s`
/// forces exactly `s - 2k + 2` leaves, hence `n = s - k + 2` vertices.
/// Every such sequence with all entries >= 2 is realized by some tree.
/// The empty sequence denotes the two-vertex path; [`singleton`] denotes
/// the one-vertex tree, which has no internal vertices at all.
///
/// [`singleton`]: DegreeSequence::singleton
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
    n: usize,
}

impl DegreeSequence {
    /// Sorts and validates a list of internal degrees.
    pub fn new(degrees: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut degrees: Vec<usize> = degrees.into_iter().collect();
        if let Some(&d) = degrees.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidDegreeSequence(format!(
                "internal degree {d} is below 2"
            )));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let sum: usize = degrees.iter().sum();
        let n = sum - 2 * degrees.len() + 2 + degrees.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n, MAX_VERTICES));
        }
        Ok(DegreeSequence { degrees, n })
    }

    /// The sequence of the one-vertex tree.
    pub fn singleton() -> Self {
        DegreeSequence {
            degrees: Vec::new(),
            n: 1,
        }
    }

    /// Internal degrees, non-increasing.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Number of internal vertices.
    pub fn internal_count(&self) -> usize {
        self.degrees.len()
    }

    /// Number of non-internal vertices forced by the sequence.
    pub fn leaf_count(&self) -> usize {
        self.n - self.degrees.len()
    }

    /// Total number of vertices of any realizing tree.
    pub fn n(&self) -> usize {
        self.n
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for DegreeSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.degrees.len()))?;
        for d in &self.degrees {
            seq.serialize_element(d)?;
        }
        seq.end()
    }
}
