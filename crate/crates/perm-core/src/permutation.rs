//! Permutations of `0..n` stored as image vectors.

use std::fmt;

use crate::{CycleType, PermError};

/// A bijection of `{0, …, n−1}`; `images[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation after checking that `images` is a bijection.
    pub fn new(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(PermError::NotBijection(n));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// The cycle `0 → 1 → … → n−1 → 0`.
    pub fn long_cycle(n: usize) -> Self {
        Self {
            images: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    /// Builds a permutation of `0..n` from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= n || touched[x] {
                    return Err(PermError::NotBijection(n));
                }
                touched[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::new(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different sizes"
        );
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from_sorted_unchecked(self.cycles().iter().map(Vec::len).collect())
    }

    /// `+1` for even permutations, `−1` for odd ones.
    pub fn sign(&self) -> i32 {
        self.cycle_type().sign()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// All permutations of `0..n` in lexicographic order of their image vectors.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut next: Option<Vec<usize>> = Some((0..n).collect());
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut a = current.clone();
        if next_lexicographic(&mut a) {
            next = Some(a);
        }
        Some(Permutation { images: current })
    })
}

fn next_lexicographic(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
