//! Cycle types, i.e. partitions of `n` in descending order.

use std::collections::BTreeMap;
use std::fmt;

use crate::PermError;

/// Multiset of cycle lengths, stored sorted in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    lengths: Vec<usize>,
}

impl CycleType {
    /// Canonicalizes `lengths`; every length must be positive.
    pub fn new(mut lengths: Vec<usize>) -> Result<Self, PermError> {
        if lengths.contains(&0) {
            return Err(PermError::ZeroLength);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { lengths })
    }

    pub(crate) fn from_sorted_unchecked(mut lengths: Vec<usize>) -> Self {
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Self { lengths }
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// The number of points permuted, `Σ lengths`.
    pub fn n(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn num_cycles(&self) -> usize {
        self.lengths.len()
    }

    /// Map from cycle length to the number of cycles of that length.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &l in &self.lengths {
            *m.entry(l).or_insert(0) += 1;
        }
        m
    }

    /// Sign of any permutation of this type.
    pub fn sign(&self) -> i32 {
        if (self.n() - self.num_cycles()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// Checks that the type describes permutations of `n` points.
    pub fn check_size(&self, n: usize) -> Result<(), PermError> {
        let got = self.n();
        if got == n {
            Ok(())
        } else {
            Err(PermError::SizeMismatch { expected: n, got })
        }
    }

    /// All cycle types of `n`, in descending lexicographic order.
    pub fn all(n: usize) -> Vec<CycleType> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        partitions_into(n, n, &mut current, &mut out);
        out
    }
}

fn partitions_into(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<CycleType>) {
    if rest == 0 {
        out.push(CycleType {
            lengths: current.clone(),
        });
        return;
    }
    for part in (1..=max.min(rest)).rev() {
        current.push(part);
        partitions_into(rest - part, part, current, out);
        current.pop();
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.lengths.iter().map(usize::to_string).collect();
        write!(f, "[{}]", body.join(","))
    }
}
