use std::collections::{BTreeMap, HashSet};

use perm_core::{all_permutations, CycleType, StratumSignature};
use rayon::prelude::*;

use crate::surface::{
    automorphism_count, canonical_form, commutator_cycles, cylinders_of_pair, is_transitive,
    stratum_of_pair,
};
use crate::{h2_surfaces, SquareTiledError, SquareTiledSurface};

/// Largest number of squares accepted by the exhaustive strategies.
pub const BRUTE_FORCE_LIMIT: usize = 10;

/// How a census is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// One `h` per conjugacy class, all `v`; isomorphism classes counted by
    /// Burnside's lemma over the centralizer of `h`.
    Centralizer,
    /// One `h` per conjugacy class, all `v`; isomorphism classes counted by
    /// deduplicating breadth-first canonical encodings.
    Canonical,
    /// Closed-form count by cylinder diagrams, valid for `H(2)` only.
    GenusTwoFormula,
    /// Explicit surfaces from cylinder parameters, valid for `H(2)` only;
    /// records joint horizontal and vertical cylinder counts.
    GenusTwoConstruction,
}

/// Number of isomorphism classes of square-tiled surfaces of a stratum by
/// number of squares and of horizontal cylinders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    stratum: StratumSignature,
    n_max: usize,
    counts: BTreeMap<usize, BTreeMap<usize, u64>>,
    joint: Option<BTreeMap<(usize, usize), u64>>,
}

impl Census {
    /// Builds a census from explicit counts `(squares, cylinders) ↦ count`.
    pub fn from_counts(
        stratum: StratumSignature,
        n_max: usize,
        counts: impl IntoIterator<Item = ((usize, usize), u64)>,
    ) -> Self {
        let mut map: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
        for ((n, c), k) in counts {
            if k > 0 {
                *map.entry(n).or_default().entry(c).or_default() += k;
            }
        }
        Census {
            stratum,
            n_max,
            counts: map,
            joint: None,
        }
    }

    /// Census of explicit surfaces, one per isomorphism class, with joint
    /// horizontal and vertical cylinder counts.
    pub fn from_surfaces(
        stratum: StratumSignature,
        n_max: usize,
        surfaces: &[SquareTiledSurface],
    ) -> Self {
        let mut counts: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
        let mut joint: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for s in surfaces.iter().filter(|s| s.num_squares() <= n_max) {
            let horizontal = s.horizontal_cylinders().len();
            let vertical = s.vertical_cylinders().len();
            *counts
                .entry(s.num_squares())
                .or_default()
                .entry(horizontal)
                .or_default() += 1;
            *joint.entry((horizontal, vertical)).or_default() += 1;
        }
        Census {
            stratum,
            n_max,
            counts,
            joint: Some(joint),
        }
    }

    pub fn stratum(&self) -> &StratumSignature {
        &self.stratum
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn count(&self, squares: usize, cylinders: usize) -> u64 {
        self.counts
            .get(&squares)
            .and_then(|m| m.get(&cylinders))
            .copied()
            .unwrap_or(0)
    }

    pub fn total(&self, squares: usize) -> u64 {
        self.counts
            .get(&squares)
            .map(|m| m.values().sum())
            .unwrap_or(0)
    }

    /// Surfaces with at most `squares` squares, restricted to a number of
    /// cylinders when given.
    pub fn cumulative(&self, squares: usize, cylinders: Option<usize>) -> u64 {
        self.counts
            .range(..=squares)
            .map(|(_, m)| match cylinders {
                Some(c) => m.get(&c).copied().unwrap_or(0),
                None => m.values().sum(),
            })
            .sum()
    }

    /// Number of surfaces with `i` horizontal and `j` vertical cylinders,
    /// summed over all sizes; absent for closed-form censuses.
    pub fn joint(&self) -> Option<&BTreeMap<(usize, usize), u64>> {
        self.joint.as_ref()
    }

    /// Nonzero entries `(squares, cylinders, count)` in increasing order.
    pub fn entries(&self) -> Vec<(usize, usize, u64)> {
        self.counts
            .iter()
            .flat_map(|(&n, m)| m.iter().map(move |(&c, &k)| (n, c, k)))
            .collect()
    }

    /// Tab-separated table with a header line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("N\tcylinders\tcount\n");
        for (n, c, k) in self.entries() {
            out.push_str(&format!("{n}\t{c}\t{k}\n"));
        }
        out
    }

    /// Cumulative counts per number of cylinders.
    pub fn to_json(&self) -> serde_json::Value {
        let cylinder_values: std::collections::BTreeSet<usize> = self
            .counts
            .values()
            .flat_map(|m| m.keys().copied())
            .collect();
        let rows: Vec<serde_json::Value> = (1..=self.n_max)
            .map(|n| {
                let by_cyl: serde_json::Map<String, serde_json::Value> = cylinder_values
                    .iter()
                    .map(|&c| (c.to_string(), self.cumulative(n, Some(c)).into()))
                    .collect();
                serde_json::json!({
                    "N": n,
                    "count": self.total(n),
                    "cumulative": self.cumulative(n, None),
                    "cumulative_by_cylinders": by_cyl,
                })
            })
            .collect();
        serde_json::json!({
            "stratum": self.stratum.to_string(),
            "n_max": self.n_max,
            "rows": rows,
        })
    }
}

/// Census with the default strategy: the closed form for `H(2)` and
/// Burnside counting otherwise.
pub fn enumerate_sts(s: &StratumSignature, n_max: usize) -> Result<Census, SquareTiledError> {
    let strategy = if is_genus_two_minimal(s) {
        Strategy::GenusTwoFormula
    } else {
        Strategy::Centralizer
    };
    Census::enumerate(s, n_max, strategy)
}

fn is_genus_two_minimal(s: &StratumSignature) -> bool {
    s.is_abelian() && s.orders() == [2]
}

impl Census {
    pub fn enumerate(
        s: &StratumSignature,
        n_max: usize,
        strategy: Strategy,
    ) -> Result<Census, SquareTiledError> {
        if !s.is_abelian() {
            return Err(SquareTiledError::NotAbelian(s.to_string()));
        }
        match strategy {
            Strategy::GenusTwoFormula => {
                if !is_genus_two_minimal(s) {
                    return Err(SquareTiledError::NotAbelian(s.to_string()));
                }
                Ok(h2_census(n_max))
            }
            Strategy::GenusTwoConstruction => {
                if !is_genus_two_minimal(s) {
                    return Err(SquareTiledError::NotAbelian(s.to_string()));
                }
                Ok(Census::from_surfaces(s.clone(), n_max, &h2_surfaces(n_max)))
            }
            _ if n_max > BRUTE_FORCE_LIMIT => Err(SquareTiledError::ResourceLimit {
                requested: n_max,
                limit: BRUTE_FORCE_LIMIT,
            }),
            _ => Ok(brute_force(s, n_max, strategy)),
        }
    }
}

/// Permutation with the given cycle lengths on consecutive blocks.
fn block_cycles(lengths: &[usize]) -> Vec<usize> {
    let n: usize = lengths.iter().sum();
    let mut h = vec![0; n];
    let mut start = 0;
    for &len in lengths {
        for i in 0..len {
            h[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    h
}

/// `Π k^{m_k} m_k!` for cycle multiplicities `m_k`.
fn centralizer_order(cycle_type: &CycleType) -> u64 {
    cycle_type
        .multiplicities()
        .iter()
        .map(|(&k, &m)| (k as u64).pow(m as u32) * (1..=m as u64).product::<u64>())
        .product()
}

type Tally = BTreeMap<usize, u64>;

fn brute_force(s: &StratumSignature, n_max: usize, strategy: Strategy) -> Census {
    let include_marked = s.marked_points() > 0;
    let mut counts = BTreeMap::new();
    let mut joint: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for n in 1..=n_max {
        let types = CycleType::all(n);
        let per_type: Vec<(Tally, BTreeMap<(usize, usize), u64>)> = types
            .par_iter()
            .map(|ct| census_for_h(s, include_marked, ct, strategy))
            .collect();
        let mut tally: Tally = BTreeMap::new();
        for (t, j) in per_type {
            for (c, k) in t {
                *tally.entry(c).or_default() += k;
            }
            for (key, k) in j {
                *joint.entry(key).or_default() += k;
            }
        }
        tally.retain(|_, k| *k > 0);
        if !tally.is_empty() {
            counts.insert(n, tally);
        }
    }
    Census {
        stratum: s.clone(),
        n_max,
        counts,
        joint: Some(joint),
    }
}

fn census_for_h(
    s: &StratumSignature,
    include_marked: bool,
    ct: &CycleType,
    strategy: Strategy,
) -> (Tally, BTreeMap<(usize, usize), u64>) {
    let h = block_cycles(ct.lengths());
    let n = h.len();
    let target: Vec<usize> = {
        let mut t: Vec<usize> = s.orders().iter().map(|&k| k as usize + 1).collect();
        t.sort_unstable();
        t
    };
    let matches = |v: &[usize]| {
        let mut cycles = commutator_cycles(&h, v);
        if !include_marked {
            cycles.retain(|&c| c > 1);
        }
        cycles.sort_unstable();
        cycles == target
    };
    let mut weighted: BTreeMap<usize, u64> = BTreeMap::new();
    let mut joint_weighted: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for v in all_permutations(n) {
        let v = v.images();
        if !is_transitive(&h, v) || !matches(v) {
            continue;
        }
        debug_assert_eq!(&stratum_of_pair(&h, v, include_marked), s);
        let weight = match strategy {
            Strategy::Centralizer => automorphism_count(&h, v) as u64,
            _ => {
                let (code, _) = canonical_form(&h, v);
                if !seen.insert(code) {
                    continue;
                }
                1
            }
        };
        let horizontal = cylinders_of_pair(&h, v).len();
        let vertical = cylinders_of_pair(v, &h).len();
        *weighted.entry(horizontal).or_default() += weight;
        *joint_weighted.entry((horizontal, vertical)).or_default() += weight;
    }
    if strategy == Strategy::Centralizer {
        let z = centralizer_order(ct);
        for k in weighted.values_mut().chain(joint_weighted.values_mut()) {
            debug_assert_eq!(*k % z, 0);
            *k /= z;
        }
    }
    (weighted, joint_weighted)
}

/// Closed-form census of `H(2)`. One-cylinder surfaces: a cylinder of width
/// `w` and height `h` whose top boundary is cut into three saddle
/// connections, with `w` twists, up to the cyclic relabeling of the three
/// pieces. Two-cylinder surfaces: a narrow cylinder `w₁ × h₁` glued into a
/// wide one `w₂ × h₂`, `w₁ < w₂`, with `w₁·w₂` twist pairs. Surfaces in
/// `H(2)` have no nontrivial translation automorphisms.
pub fn h2_census(n_max: usize) -> Census {
    let mut counts = Vec::new();
    for n in 1..=n_max {
        let one: u64 = (1..=n)
            .filter(|w| n % w == 0)
            .map(|w| {
                let w = w as u64;
                w * (w.saturating_sub(1)) * (w.saturating_sub(2)) / 6
            })
            .sum();
        let mut two = 0u64;
        for w1 in 1..n {
            for h1 in 1..=(n - 1) / w1 {
                let rest = n - w1 * h1;
                for w2 in w1 + 1..=rest {
                    if rest % w2 == 0 {
                        two += (w1 * w2) as u64;
                    }
                }
            }
        }
        counts.push(((n, 1), one));
        counts.push(((n, 2), two));
    }
    Census::from_counts(
        StratumSignature::abelian(&[2]).expect("valid stratum"),
        n_max,
        counts,
    )
}
