use std::collections::{HashMap, VecDeque};

use perm_core::StratumSignature;
use rayon::prelude::*;

use crate::{rauzy_move, GeneralizedPermutation, MoveKind, RauzyError};

/// Default cap on the number of members explored by [`rauzy_class`].
pub const DEFAULT_CLASS_CAP: usize = 2_000_000;

/// Closure of a permutation under the enabled Rauzy moves.
#[derive(Debug, Clone)]
pub struct RauzyClass {
    members: Vec<GeneralizedPermutation>,
    index: HashMap<GeneralizedPermutation, usize>,
    edges: Vec<(usize, MoveKind, usize)>,
}

impl RauzyClass {
    /// Members sorted lexicographically by `(top, bottom)`.
    pub fn members(&self) -> &[GeneralizedPermutation] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &GeneralizedPermutation) -> bool {
        self.index.contains_key(&p.canonical())
    }

    pub fn index_of(&self, p: &GeneralizedPermutation) -> Option<usize> {
        self.index.get(&p.canonical()).copied()
    }

    /// Labeled moves `(from, kind, to)` between member indices.
    pub fn edges(&self) -> &[(usize, MoveKind, usize)] {
        &self.edges
    }

    /// Stratum shared by all members.
    pub fn stratum(&self) -> StratumSignature {
        self.members[0].stratum()
    }

    /// Every member reaches every other along the recorded moves.
    pub fn is_strongly_connected(&self) -> bool {
        let n = self.members.len();
        let mut forward = vec![Vec::new(); n];
        let mut backward = vec![Vec::new(); n];
        for &(a, _, b) in &self.edges {
            forward[a].push(b);
            backward[b].push(a);
        }
        let reach_all = |adj: &Vec<Vec<usize>>| {
            let mut seen = vec![false; n];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !std::mem::replace(&mut seen[w], true) {
                        stack.push(w);
                    }
                }
            }
            seen.iter().all(|&s| s)
        };
        n == 0 || (reach_all(&forward) && reach_all(&backward))
    }
}

/// Breadth-first closure of `seed` under left and/or right moves.
pub fn rauzy_class(
    seed: &GeneralizedPermutation,
    use_left: bool,
    use_right: bool,
    cap: usize,
) -> Result<RauzyClass, RauzyError> {
    let kinds: Vec<MoveKind> = MoveKind::ALL
        .into_iter()
        .filter(|k| if k.is_right() { use_right } else { use_left })
        .collect();
    let start = seed.canonical();
    let mut found: HashMap<GeneralizedPermutation, usize> = HashMap::new();
    let mut order = vec![start.clone()];
    found.insert(start, 0);
    let mut raw_edges = Vec::new();
    let mut frontier: VecDeque<usize> = VecDeque::from([0]);
    while !frontier.is_empty() {
        let layer: Vec<usize> = frontier.drain(..).collect();
        let images: Vec<(usize, MoveKind, GeneralizedPermutation)> = layer
            .par_iter()
            .flat_map_iter(|&i| {
                let p = &order[i];
                kinds
                    .iter()
                    .filter_map(move |&k| rauzy_move(p, k).ok().map(|q| (i, k, q)))
                    .collect::<Vec<_>>()
            })
            .collect();
        for (i, kind, q) in images {
            let j = match found.get(&q) {
                Some(&j) => j,
                None => {
                    if order.len() >= cap {
                        return Err(RauzyError::ClassTooLarge(cap));
                    }
                    let j = order.len();
                    found.insert(q.clone(), j);
                    order.push(q);
                    frontier.push_back(j);
                    j
                }
            };
            raw_edges.push((i, kind, j));
        }
    }
    // renumber members in sorted order
    let mut sorted: Vec<usize> = (0..order.len()).collect();
    sorted.sort_by(|&a, &b| order[a].cmp(&order[b]));
    let mut position = vec![0; order.len()];
    for (new, &old) in sorted.iter().enumerate() {
        position[old] = new;
    }
    let members: Vec<GeneralizedPermutation> = sorted.iter().map(|&i| order[i].clone()).collect();
    let index = members
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let mut edges: Vec<(usize, MoveKind, usize)> = raw_edges
        .into_iter()
        .map(|(a, k, b)| (position[a], k, position[b]))
        .collect();
    edges.sort();
    Ok(RauzyClass {
        members,
        index,
        edges,
    })
}

/// Members whose first top symbol equals their last bottom symbol.
pub fn standard_members(class: &RauzyClass) -> Vec<GeneralizedPermutation> {
    class
        .members()
        .iter()
        .filter(|p| p.is_standard())
        .cloned()
        .collect()
}
