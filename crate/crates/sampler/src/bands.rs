use rauzy::{GeneralizedPermutation, Row};

use crate::SamplerError;

/// Largest total length accepted by [`IntegerIet::band_count`].
pub const MAX_CELLS: u64 = 1 << 22;

/// A generalized permutation with a positive integer length per symbol;
/// top and bottom rows have equal total length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerIet {
    perm: GeneralizedPermutation,
    lengths: Vec<u64>,
}

const UP: usize = 0;
const DOWN: usize = 1;

impl IntegerIet {
    pub fn new(perm: GeneralizedPermutation, lengths: Vec<u64>) -> Result<Self, SamplerError> {
        let fail = |reason: &str| SamplerError::Lengths {
            perm: perm.to_string(),
            lengths: lengths.clone(),
            reason: reason.to_string(),
        };
        if lengths.len() != perm.num_symbols() {
            return Err(fail("one length per symbol is required"));
        }
        if lengths.contains(&0) {
            return Err(fail("lengths must be positive"));
        }
        let top: u64 = perm.top().iter().map(|&s| lengths[s]).sum();
        let bottom: u64 = perm.bottom().iter().map(|&s| lengths[s]).sum();
        if top != bottom {
            return Err(fail("top and bottom rows differ in length"));
        }
        Ok(IntegerIet { perm, lengths })
    }

    /// The exchange of the maximal runs of a cell permutation `x ↦ cells[x]`
    /// on which it acts as a translation.
    pub fn from_cell_map(cells: &[usize]) -> Result<Self, SamplerError> {
        let n = cells.len();
        let mut starts = vec![0];
        for x in 1..n {
            if cells[x] != cells[x - 1] + 1 {
                starts.push(x);
            }
        }
        let lengths: Vec<u64> = starts
            .iter()
            .enumerate()
            .map(|(i, &s)| (starts.get(i + 1).copied().unwrap_or(n) - s) as u64)
            .collect();
        let top: Vec<usize> = (0..starts.len()).collect();
        let mut bottom = top.clone();
        bottom.sort_by_key(|&i| cells[starts[i]]);
        let perm = GeneralizedPermutation::checked(top, bottom)?;
        IntegerIet::new(perm, lengths)
    }

    pub fn perm(&self) -> &GeneralizedPermutation {
        &self.perm
    }

    pub fn lengths(&self) -> &[u64] {
        &self.lengths
    }

    pub fn total_length(&self) -> u64 {
        self.perm.top().iter().map(|&s| self.lengths[s]).sum()
    }

    /// Number of maximal bands of closed trajectories.
    ///
    /// States are unit cells crossed upward or downward, which is the
    /// orientation double cover. Two neighbouring cells lie in one band
    /// when their trajectories stay inside a common piece at every return.
    pub fn band_count(&self) -> Result<usize, SamplerError> {
        let width = self.total_length();
        if width > MAX_CELLS {
            return Err(SamplerError::ResourceLimit {
                what: "total length",
                requested: width as u128,
                limit: MAX_CELLS as u128,
            });
        }
        let w = width as usize;
        let layout = Layout::new(&self.perm, &self.lengths, w);
        let states = 2 * w;
        let next: Vec<usize> = (0..states).map(|s| layout.step(s)).collect();

        let mut cycle = vec![usize::MAX; states];
        let mut cycles = 0;
        for start in 0..states {
            if cycle[start] != usize::MAX {
                continue;
            }
            let mut s = start;
            while cycle[s] == usize::MAX {
                cycle[s] = cycles;
                s = next[s];
            }
            cycles += 1;
        }

        let mut uf = UnionFind::new(cycles);
        for x in 0..w {
            uf.union(cycle[2 * x + UP], cycle[2 * x + DOWN]);
        }
        // gap g = 2x + d sits between cells x and x+1 crossed in direction d
        let gaps = states.saturating_sub(2);
        let gap_next = |g: usize| -> Option<usize> {
            let (x, d) = (g / 2, g % 2);
            if !layout.same_piece(x, d) {
                return None;
            }
            let (a, b) = (next[2 * x + d], next[2 * (x + 1) + d]);
            let (ya, yb) = (a / 2, b / 2);
            Some(2 * ya.min(yb) + a % 2)
        };
        // 0 unknown, 1 on a path, 2 closed, 3 broken
        let mut status = vec![0u8; gaps];
        let mut path = Vec::new();
        for start in 0..gaps {
            if status[start] != 0 {
                continue;
            }
            path.clear();
            let mut g = start;
            let verdict = loop {
                match status[g] {
                    1 => break 2,
                    2 => break 2,
                    3 => break 3,
                    _ => {}
                }
                status[g] = 1;
                path.push(g);
                match gap_next(g) {
                    Some(h) => g = h,
                    None => break 3,
                }
            };
            for &g in &path {
                status[g] = verdict;
            }
        }
        for g in 0..gaps {
            if status[g] == 2 {
                let (x, d) = (g / 2, g % 2);
                uf.union(cycle[2 * x + d], cycle[2 * (x + 1) + d]);
            }
        }
        Ok(uf.components())
    }
}

/// Cell-level description of the pieces of both rows.
struct Layout {
    /// For each cell and row: symbol, offset inside the piece, occurrence.
    top: Vec<(usize, usize, usize)>,
    bottom: Vec<(usize, usize, usize)>,
    /// Row and start cell of both occurrences of each symbol.
    occurrences: Vec<[(Row, usize); 2]>,
    lengths: Vec<usize>,
}

impl Layout {
    fn new(perm: &GeneralizedPermutation, lengths: &[u64], w: usize) -> Self {
        let lengths: Vec<usize> = lengths.iter().map(|&l| l as usize).collect();
        let mut occurrences = vec![[(Row::Top, usize::MAX); 2]; perm.num_symbols()];
        let mut seen = vec![0usize; perm.num_symbols()];
        let mut rows = [Vec::with_capacity(w), Vec::with_capacity(w)];
        for (r, row) in [Row::Top, Row::Bottom].into_iter().enumerate() {
            let mut start = 0;
            for &s in perm.row(row) {
                let k = seen[s];
                occurrences[s][k] = (row, start);
                seen[s] += 1;
                for o in 0..lengths[s] {
                    rows[r].push((s, o, k));
                }
                start += lengths[s];
            }
        }
        let [top, bottom] = rows;
        Layout {
            top,
            bottom,
            occurrences,
            lengths,
        }
    }

    fn same_piece(&self, x: usize, d: usize) -> bool {
        let row = if d == UP { &self.top } else { &self.bottom };
        let (s1, _, k1) = row[x];
        let (s2, _, k2) = row[x + 1];
        s1 == s2 && k1 == k2
    }

    /// Next crossing of a trajectory crossing cell `x` in direction `d`.
    fn step(&self, state: usize) -> usize {
        let (x, d) = (state / 2, state % 2);
        let (row, cells) = if d == UP {
            (Row::Top, &self.top)
        } else {
            (Row::Bottom, &self.bottom)
        };
        let (s, o, k) = cells[x];
        let (other_row, start) = self.occurrences[s][1 - k];
        if other_row == row {
            let flipped = start + self.lengths[s] - 1 - o;
            2 * flipped + (1 - d)
        } else {
            2 * (start + o) + d
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            components: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.components -= 1;
        }
    }

    fn components(&self) -> usize {
        self.components
    }
}
