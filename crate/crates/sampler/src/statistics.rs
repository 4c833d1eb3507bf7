use std::collections::BTreeMap;

use perm_core::StratumSignature;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rauzy::{rauzy_class, rauzy_move, representative, GeneralizedPermutation, MoveKind};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{IntegerIet, SamplerError};

/// Largest grid accepted by [`pk_exhaustive`].
pub const MAX_GRID_POINTS: u128 = 200_000_000;

/// Number of independent chains a random run is split into; fixed so that
/// results do not depend on the thread count.
pub const CHAINS: u64 = 16;

/// Largest Rauzy class precomputed for random walks; bigger classes are
/// walked move by move.
const WALK_CLASS_CAP: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    Random,
}

/// Histogram of band counts with the parameters that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandStatistics {
    pub stratum: String,
    pub method: Method,
    pub representative: String,
    pub grid: u64,
    pub samples: u64,
    pub walk: u64,
    pub seed: Option<u64>,
    /// Draws discarded because the dependent length was not positive.
    pub rejected: u64,
    pub total: u64,
    pub histogram: BTreeMap<usize, u64>,
}

impl BandStatistics {
    /// Empirical frequency of `k` bands.
    pub fn proportion(&self, k: usize) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        self.histogram.get(&k).copied().unwrap_or(0) as f64 / self.total as f64
    }

    /// Binomial standard error of [`proportion`](Self::proportion).
    pub fn standard_error(&self, k: usize) -> f64 {
        let p = self.proportion(k);
        if self.total == 0 {
            return f64::INFINITY;
        }
        (p * (1.0 - p) / self.total as f64).sqrt()
    }

    /// Tab-separated histogram with a header line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("bands\tcount\tproportion\tstderr\n");
        for (&k, &c) in &self.histogram {
            out.push_str(&format!(
                "{k}\t{c}\t{:.6}\t{:.6}\n",
                self.proportion(k),
                self.standard_error(k)
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    fn merge(&mut self, histogram: &BTreeMap<usize, u64>, rejected: u64) {
        for (&k, &c) in histogram {
            *self.histogram.entry(k).or_default() += c;
            self.total += c;
        }
        self.rejected += rejected;
    }
}

/// Free symbols of the length lattice and, for generalized permutations,
/// the dependent symbol with the signs expressing it through the others.
struct LengthLattice {
    symbols: usize,
    free: Vec<usize>,
    dependent: Option<(usize, Vec<(usize, i64)>)>,
}

impl LengthLattice {
    fn new(p: &GeneralizedPermutation) -> Self {
        let n = p.num_symbols();
        let mut balance = vec![0i64; n];
        p.top().iter().for_each(|&s| balance[s] += 1);
        p.bottom().iter().for_each(|&s| balance[s] -= 1);
        // Σ balance·λ = 0; solve for the last bottom-only symbol
        match (0..n).rev().find(|&s| balance[s] < 0) {
            None => LengthLattice {
                symbols: n,
                free: (0..n).collect(),
                dependent: None,
            },
            Some(dep) => {
                let terms = (0..n)
                    .filter(|&s| s != dep && balance[s] != 0)
                    .map(|s| (s, balance[s] / 2))
                    .collect();
                LengthLattice {
                    symbols: n,
                    free: (0..n).filter(|&s| s != dep).collect(),
                    dependent: Some((dep, terms)),
                }
            }
        }
    }

    fn dims(&self) -> usize {
        self.free.len()
    }

    /// Full length vector from free coordinates, `None` when the dependent
    /// length is not positive.
    fn lengths(&self, free: &[u64]) -> Option<Vec<u64>> {
        let mut lengths = vec![0u64; self.symbols];
        for (&s, &l) in self.free.iter().zip(free) {
            lengths[s] = l;
        }
        if let Some((dep, terms)) = &self.dependent {
            let value: i64 = terms.iter().map(|&(s, c)| c * lengths[s] as i64).sum();
            if value <= 0 {
                return None;
            }
            lengths[*dep] = value as u64;
        }
        Some(lengths)
    }
}

fn band_count(p: &GeneralizedPermutation, lengths: Vec<u64>) -> Result<usize, SamplerError> {
    IntegerIet::new(p.clone(), lengths)?.band_count()
}

/// Band statistics over every admissible length vector with free
/// coordinates in `{1..grid}` for the representative of `s`.
pub fn pk_exhaustive(s: &StratumSignature, grid: u64) -> Result<BandStatistics, SamplerError> {
    if grid == 0 {
        return Err(SamplerError::InvalidArgument(
            "grid must be positive".into(),
        ));
    }
    let p = representative(s)?;
    let lattice = LengthLattice::new(&p);
    let dims = lattice.dims();
    let points = (grid as u128).checked_pow(dims as u32).unwrap_or(u128::MAX);
    if points > MAX_GRID_POINTS {
        return Err(SamplerError::ResourceLimit {
            what: "grid size",
            requested: points,
            limit: MAX_GRID_POINTS,
        });
    }
    let partial: Vec<Result<(BTreeMap<usize, u64>, u64), SamplerError>> = (1..=grid)
        .into_par_iter()
        .map(|first| {
            let mut histogram = BTreeMap::new();
            let mut rejected = 0;
            let mut free = vec![1u64; dims];
            free[0] = first;
            loop {
                match lattice.lengths(&free) {
                    Some(lengths) => *histogram.entry(band_count(&p, lengths)?).or_default() += 1,
                    None => rejected += 1,
                }
                // odometer over coordinates 1..dims
                let mut i = 1;
                while i < dims {
                    if free[i] < grid {
                        free[i] += 1;
                        break;
                    }
                    free[i] = 1;
                    i += 1;
                }
                if i >= dims {
                    break;
                }
            }
            Ok((histogram, rejected))
        })
        .collect();
    let mut stats = BandStatistics {
        stratum: s.to_string(),
        method: Method::Exhaustive,
        representative: p.to_string(),
        grid,
        samples: points as u64,
        walk: 0,
        seed: None,
        rejected: 0,
        total: 0,
        histogram: BTreeMap::new(),
    };
    for part in partial {
        let (h, r) = part?;
        stats.merge(&h, r);
    }
    Ok(stats)
}

/// Random walk on the permutations reachable from a seed by Rauzy moves.
enum Walker {
    Graph {
        members: Vec<GeneralizedPermutation>,
        successors: Vec<Vec<usize>>,
        start: usize,
    },
    Direct {
        start: GeneralizedPermutation,
    },
}

impl Walker {
    fn new(seed: &GeneralizedPermutation) -> Result<Self, SamplerError> {
        match rauzy_class(seed, true, true, WALK_CLASS_CAP) {
            Ok(class) => {
                let members = class.members().to_vec();
                let mut successors = vec![Vec::new(); members.len()];
                for &(from, _, to) in class.edges() {
                    successors[from].push(to);
                }
                let start = class.index_of(&seed.canonical()).expect("seed in class");
                Ok(Walker::Graph {
                    members,
                    successors,
                    start,
                })
            }
            Err(rauzy::RauzyError::ClassTooLarge { .. }) => Ok(Walker::Direct {
                start: seed.clone(),
            }),
            Err(e) => Err(e.into()),
        }
    }

    fn walk(&self, steps: u64, rng: &mut ChaCha8Rng) -> GeneralizedPermutation {
        match self {
            Walker::Graph {
                members,
                successors,
                start,
            } => {
                let mut at = *start;
                for _ in 0..steps {
                    let next = &successors[at];
                    if next.is_empty() {
                        break;
                    }
                    at = next[rng.random_range(0..next.len())];
                }
                members[at].clone()
            }
            Walker::Direct { start } => {
                let mut at = start.clone();
                for _ in 0..steps {
                    let next: Vec<GeneralizedPermutation> = MoveKind::ALL
                        .iter()
                        .filter_map(|&m| rauzy_move(&at, m).ok())
                        .collect();
                    if next.is_empty() {
                        break;
                    }
                    at = next[rng.random_range(0..next.len())].clone();
                }
                at
            }
        }
    }
}

/// Band statistics of `samples` draws: a Rauzy walk of random length in
/// `[walk/2, walk]` from the representative of `s`, then uniform free
/// lengths in `{1..grid}`. Draws with a non-positive dependent length are
/// rejected and counted.
pub fn pk_random(
    s: &StratumSignature,
    samples: u64,
    walk: u64,
    grid: u64,
    seed: u64,
) -> Result<BandStatistics, SamplerError> {
    if grid == 0 {
        return Err(SamplerError::InvalidArgument(
            "grid must be positive".into(),
        ));
    }
    let p = representative(s)?;
    let walker = Walker::new(&p)?;
    let partial: Vec<Result<(BTreeMap<usize, u64>, u64), SamplerError>> = (0..CHAINS)
        .into_par_iter()
        .map(|chain| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(chain);
            let share = samples / CHAINS + u64::from(chain < samples % CHAINS);
            let mut histogram = BTreeMap::new();
            let mut rejected = 0;
            for _ in 0..share {
                let steps = rng.random_range(walk / 2..=walk);
                let q = walker.walk(steps, &mut rng);
                let lattice = LengthLattice::new(&q);
                let free: Vec<u64> = (0..lattice.dims())
                    .map(|_| rng.random_range(1..=grid))
                    .collect();
                match lattice.lengths(&free) {
                    Some(lengths) => *histogram.entry(band_count(&q, lengths)?).or_default() += 1,
                    None => rejected += 1,
                }
            }
            Ok((histogram, rejected))
        })
        .collect();
    let mut stats = BandStatistics {
        stratum: s.to_string(),
        method: Method::Random,
        representative: p.to_string(),
        grid,
        samples,
        walk,
        seed: Some(seed),
        rejected: 0,
        total: 0,
        histogram: BTreeMap::new(),
    };
    for part in partial {
        let (h, r) = part?;
        stats.merge(&h, r);
    }
    Ok(stats)
}
