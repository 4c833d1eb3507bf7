use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use perm_core::{Kind, StratumSignature};

use crate::RauzyError;

/// Row of a generalized permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Row {
    Top,
    Bottom,
}

/// Two rows of symbols in which every symbol occurs exactly twice.
///
/// The rows are not required to use a canonical labeling; see
/// [`GeneralizedPermutation::canonical`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneralizedPermutation {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl GeneralizedPermutation {
    /// Validates symbol occurrences, realizability and, for ordinary
    /// permutations, irreducibility.
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self, RauzyError> {
        let p = Self::checked(top, bottom)?;
        if p.is_ordinary() && !p.is_irreducible() {
            return Err(RauzyError::Reducible);
        }
        Ok(p)
    }

    /// Like [`new`](Self::new) without the irreducibility check.
    pub fn checked(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self, RauzyError> {
        if top.is_empty() || bottom.is_empty() {
            return Err(RauzyError::EmptyRow);
        }
        let total = top.len() + bottom.len();
        if !total.is_multiple_of(2) {
            return Err(RauzyError::Symbols {
                expected: total / 2,
            });
        }
        let n = total / 2;
        let mut counts = vec![0usize; n];
        for &s in top.iter().chain(&bottom) {
            if s >= n {
                return Err(RauzyError::Symbols { expected: n });
            }
            counts[s] += 1;
        }
        if let Some((symbol, &count)) = counts.iter().enumerate().find(|(_, &c)| c != 2) {
            return Err(RauzyError::Occurrences { symbol, count });
        }
        let p = GeneralizedPermutation { top, bottom };
        if !p.is_realizable() {
            return Err(RauzyError::Unrealizable);
        }
        Ok(p)
    }

    pub(crate) fn raw(top: Vec<usize>, bottom: Vec<usize>) -> Self {
        GeneralizedPermutation { top, bottom }
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn num_symbols(&self) -> usize {
        (self.top.len() + self.bottom.len()) / 2
    }

    pub fn row(&self, row: Row) -> &[usize] {
        match row {
            Row::Top => &self.top,
            Row::Bottom => &self.bottom,
        }
    }

    /// Every symbol occurs once in each row.
    pub fn is_ordinary(&self) -> bool {
        if self.top.len() != self.bottom.len() {
            return false;
        }
        let mut seen = vec![false; self.num_symbols()];
        self.top
            .iter()
            .all(|&s| !std::mem::replace(&mut seen[s], true))
    }

    /// Neither row's symbol set is a proper subset of the other's.
    pub fn is_realizable(&self) -> bool {
        let n = self.num_symbols();
        let mut in_top = vec![false; n];
        let mut in_bottom = vec![false; n];
        self.top.iter().for_each(|&s| in_top[s] = true);
        self.bottom.iter().for_each(|&s| in_bottom[s] = true);
        let top_only = (0..n).any(|s| in_top[s] && !in_bottom[s]);
        let bottom_only = (0..n).any(|s| in_bottom[s] && !in_top[s]);
        top_only == bottom_only
    }

    /// For ordinary permutations: no proper prefix of the top row has the
    /// same symbol set as the prefix of the bottom row of equal length.
    /// Generalized permutations are reported irreducible.
    pub fn is_irreducible(&self) -> bool {
        if !self.is_ordinary() {
            return true;
        }
        let n = self.top.len();
        let mut balance = vec![0i32; n];
        let mut open = 0usize;
        for k in 0..n - 1 {
            for (s, delta) in [(self.top[k], 1), (self.bottom[k], -1)] {
                let before = balance[s];
                balance[s] += delta;
                if before == 0 {
                    open += 1;
                } else if balance[s] == 0 {
                    open -= 1;
                }
            }
            if open == 0 {
                return false;
            }
        }
        true
    }

    /// First symbol of the top row equals the last symbol of the bottom row.
    pub fn is_standard(&self) -> bool {
        self.top.first() == self.bottom.last()
    }

    /// Relabels symbols in order of first appearance, top row first.
    pub fn canonical(&self) -> Self {
        let mut map = vec![usize::MAX; self.num_symbols()];
        let mut next = 0;
        let mut relabel = |s: usize| {
            if map[s] == usize::MAX {
                map[s] = next;
                next += 1;
            }
            map[s]
        };
        let top = self.top.iter().map(|&s| relabel(s)).collect();
        let bottom = self.bottom.iter().map(|&s| relabel(s)).collect();
        GeneralizedPermutation { top, bottom }
    }

    /// Both rows read backwards.
    pub fn reversed(&self) -> Self {
        GeneralizedPermutation {
            top: self.top.iter().rev().copied().collect(),
            bottom: self.bottom.iter().rev().copied().collect(),
        }
    }

    /// Positions `(row, index)` of both occurrences of every symbol.
    pub fn occurrences(&self) -> Vec<[(Row, usize); 2]> {
        let mut first: HashMap<usize, (Row, usize)> = HashMap::new();
        let mut out = vec![[(Row::Top, 0), (Row::Top, 0)]; self.num_symbols()];
        for (row, seq) in [(Row::Top, &self.top), (Row::Bottom, &self.bottom)] {
            for (i, &s) in seq.iter().enumerate() {
                match first.remove(&s) {
                    Some(pos) => out[s] = [pos, (row, i)],
                    None => {
                        first.insert(s, (row, i));
                    }
                }
            }
        }
        out
    }

    /// Singularity profile of the suspension.
    ///
    /// Corners of the suspension polygon are glued along the paired sides;
    /// in the flat limit every corner strictly inside a row has angle `π`
    /// and the two extreme corners have angle `0`, so the cone angle of a
    /// singularity is `π` times its number of interior corners.
    ///
    /// Panics if the corner counts are degenerate, which happens only for
    /// reducible permutations; see [`try_stratum`](Self::try_stratum).
    pub fn stratum(&self) -> StratumSignature {
        self.try_stratum()
            .expect("irreducible permutations have a suspension")
    }

    /// Like [`stratum`](Self::stratum), failing on degenerate corner counts.
    pub fn try_stratum(&self) -> Result<StratumSignature, RauzyError> {
        let p = self.top.len();
        let q = self.bottom.len();
        // top corners 0..=p, bottom corners p+1..=p+1+q
        let top = |i: usize| i;
        let bottom = |j: usize| p + 1 + j;
        let mut parent: Vec<usize> = (0..p + q + 2).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        let mut union = |a: usize, b: usize| {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        };
        union(top(0), bottom(0));
        union(top(p), bottom(q));
        let corner = |row: Row, i: usize| match row {
            Row::Top => top(i),
            Row::Bottom => bottom(i),
        };
        for [(r1, i1), (r2, i2)] in self.occurrences() {
            if r1 == r2 {
                union(corner(r1, i1), corner(r2, i2 + 1));
                union(corner(r1, i1 + 1), corner(r2, i2));
            } else {
                union(corner(r1, i1), corner(r2, i2));
                union(corner(r1, i1 + 1), corner(r2, i2 + 1));
            }
        }
        let mut angles: HashMap<usize, i32> = HashMap::new();
        for c in 0..p + q + 2 {
            let interior = (c > top(0) && c < top(p)) || (c > bottom(0) && c < bottom(q));
            let root = find(&mut parent, c);
            *angles.entry(root).or_insert(0) += interior as i32;
        }
        let ordinary = self.is_ordinary();
        if angles.values().any(|&a| a == 0 || (ordinary && a % 2 != 0)) {
            return Err(RauzyError::NoSuspension);
        }
        let orders: Vec<i32> = angles
            .values()
            .map(|&a| if ordinary { a / 2 - 1 } else { a - 2 })
            .collect();
        let kind = if ordinary {
            Kind::Abelian
        } else {
            Kind::Quadratic
        };
        StratumSignature::new(kind, orders).map_err(|_| RauzyError::NoSuspension)
    }
}

impl fmt::Display for GeneralizedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |row: &[usize]| {
            row.iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "{} / {}", join(&self.top), join(&self.bottom))
    }
}

impl FromStr for GeneralizedPermutation {
    type Err = RauzyError;

    /// Parses `"0 1 1 / 2 3 2 3 0"`.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| RauzyError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let (top, bottom) = input.split_once('/').ok_or_else(|| fail("missing `/`"))?;
        let row = |text: &str| -> Result<Vec<usize>, RauzyError> {
            text.split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| fail("symbols must be integers"))
                })
                .collect()
        };
        GeneralizedPermutation::new(row(top)?, row(bottom)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(text: &str) -> GeneralizedPermutation {
        text.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert!(matches!(
            "0 1 / 1".parse::<GeneralizedPermutation>(),
            Err(RauzyError::Symbols { .. })
        ));
        assert!(matches!(
            "0 1 / 0 1".parse::<GeneralizedPermutation>(),
            Err(RauzyError::Reducible)
        ));
        assert!(matches!(
            "0 1 / 0 1 2 2".parse::<GeneralizedPermutation>(),
            Err(RauzyError::Unrealizable)
        ));
        assert!(gp("0 0 1 / 1 2 2").is_realizable());
    }

    #[test]
    fn canonical_labels() {
        let p = GeneralizedPermutation::new(vec![2, 0, 1], vec![1, 0, 2]).unwrap();
        assert_eq!(p.canonical(), gp("0 1 2 / 2 1 0"));
        assert_eq!(p.to_string(), "2 0 1 / 1 0 2");
    }

    #[test]
    fn small_strata() {
        assert_eq!(gp("0 1 / 1 0").stratum().to_string(), "H(0)");
        assert_eq!(gp("0 1 2 / 2 1 0").stratum().to_string(), "H(0^2)");
        assert_eq!(gp("0 1 2 3 / 3 2 1 0").stratum().to_string(), "H(2)");
        assert_eq!(gp("0 1 2 3 4 / 4 3 2 1 0").stratum().to_string(), "H(1^2)");
    }
}
