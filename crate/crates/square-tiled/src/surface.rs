use perm_core::{Permutation, StratumSignature};

use crate::SquareTiledError;

/// Unit squares glued by `right` (square to the right neighbour) and `up`
/// (square to the upper neighbour).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareTiledSurface {
    right: Permutation,
    up: Permutation,
}

/// A maximal cylinder made of `height` rows of `width` squares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cylinder {
    pub width: usize,
    pub height: usize,
}

impl SquareTiledSurface {
    pub fn new(right: Permutation, up: Permutation) -> Result<Self, SquareTiledError> {
        if right.len() != up.len() {
            return Err(SquareTiledError::SizeMismatch(right.len(), up.len()));
        }
        if right.is_empty() {
            return Err(SquareTiledError::Empty);
        }
        if !is_transitive(right.images(), up.images()) {
            return Err(SquareTiledError::Disconnected);
        }
        Ok(SquareTiledSurface { right, up })
    }

    pub fn num_squares(&self) -> usize {
        self.right.len()
    }

    pub fn right(&self) -> &Permutation {
        &self.right
    }

    pub fn up(&self) -> &Permutation {
        &self.up
    }

    /// Cone-angle profile; fixed points of the commutator are marked points
    /// and are kept only when `include_marked` is set.
    pub fn stratum(&self, include_marked: bool) -> StratumSignature {
        stratum_of_pair(self.right.images(), self.up.images(), include_marked)
    }

    /// Maximal horizontal cylinders, sorted.
    pub fn horizontal_cylinders(&self) -> Vec<Cylinder> {
        cylinders_of_pair(self.right.images(), self.up.images())
    }

    /// Maximal vertical cylinders, sorted.
    pub fn vertical_cylinders(&self) -> Vec<Cylinder> {
        cylinders_of_pair(self.up.images(), self.right.images())
    }

    /// The surface turned by a quarter turn, which exchanges horizontal
    /// and vertical directions.
    pub fn rotated(&self) -> Self {
        SquareTiledSurface {
            right: self.up.clone(),
            up: self.right.inverse(),
        }
    }

    /// Number of translation automorphisms.
    pub fn automorphisms(&self) -> usize {
        canonical_form(self.right.images(), self.up.images()).1
    }

    /// Encoding shared exactly by isomorphic surfaces.
    pub fn canonical_encoding(&self) -> Vec<usize> {
        canonical_form(self.right.images(), self.up.images()).0
    }
}

/// Stratum of a square-tiled surface.
pub fn stratum_of_sts(s: &SquareTiledSurface, include_marked: bool) -> StratumSignature {
    s.stratum(include_marked)
}

pub(crate) fn is_transitive(h: &[usize], v: &[usize]) -> bool {
    let n = h.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for y in [h[x], v[x]] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == n
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Lengths of the cycles of `h v h⁻¹ v⁻¹`.
pub(crate) fn commutator_cycles(h: &[usize], v: &[usize]) -> Vec<usize> {
    let n = h.len();
    let (hi, vi) = (inverse(h), inverse(v));
    let c: Vec<usize> = (0..n).map(|x| h[v[hi[vi[x]]]]).collect();
    let mut seen = vec![false; n];
    let mut lengths = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = c[x];
            len += 1;
        }
        lengths.push(len);
    }
    lengths
}

pub(crate) fn stratum_of_pair(h: &[usize], v: &[usize], include_marked: bool) -> StratumSignature {
    let orders: Vec<i32> = commutator_cycles(h, v)
        .into_iter()
        .map(|len| len as i32 - 1)
        .filter(|&k| include_marked || k > 0)
        .collect();
    StratumSignature::abelian(&orders).expect("commutator orders sum to an even number")
}

/// Rows are the cycles of `h`; a row and the row above it belong to the same
/// cylinder when no singularity sits on the line between them, that is
/// `v(h(i)) = h(v(i))` along the whole row.
pub(crate) fn cylinders_of_pair(h: &[usize], v: &[usize]) -> Vec<Cylinder> {
    let n = h.len();
    let mut row = vec![usize::MAX; n];
    let mut widths = Vec::new();
    for start in 0..n {
        if row[start] != usize::MAX {
            continue;
        }
        let id = widths.len();
        let mut x = start;
        let mut width = 0;
        while row[x] == usize::MAX {
            row[x] = id;
            x = h[x];
            width += 1;
        }
        widths.push(width);
    }
    let rows = widths.len();
    let mut smooth_above = vec![true; rows];
    for i in 0..n {
        if v[h[i]] != h[v[i]] {
            smooth_above[row[i]] = false;
        }
    }
    let mut parent: Vec<usize> = (0..rows).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut first_square = vec![usize::MAX; rows];
    for i in 0..n {
        if first_square[row[i]] == usize::MAX {
            first_square[row[i]] = i;
        }
    }
    for r in 0..rows {
        if smooth_above[r] {
            let above = row[v[first_square[r]]];
            let (a, b) = (find(&mut parent, r), find(&mut parent, above));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut heights = std::collections::BTreeMap::new();
    for r in 0..rows {
        let root = find(&mut parent, r);
        heights.entry(root).or_insert((widths[r], 0)).1 += 1;
    }
    let mut out: Vec<Cylinder> = heights
        .into_values()
        .map(|(width, height)| Cylinder { width, height })
        .collect();
    out.sort();
    out
}

/// Squares whose lower left corner is a singularity; all squares when
/// there is none. The set is preserved by isomorphisms.
fn distinguished_squares(h: &[usize], v: &[usize]) -> Vec<usize> {
    let n = h.len();
    let (hi, vi) = (inverse(h), inverse(v));
    let singular: Vec<usize> = (0..n).filter(|&x| v[h[vi[hi[x]]]] != x).collect();
    if singular.is_empty() {
        (0..n).collect()
    } else {
        singular
    }
}

/// Breadth-first relabeling from every distinguished start square; returns
/// the smallest encoding and the number of start squares attaining it.
pub(crate) fn canonical_form(h: &[usize], v: &[usize]) -> (Vec<usize>, usize) {
    let n = h.len();
    let mut best: Option<Vec<usize>> = None;
    let mut ties = 0;
    let mut label = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut code = Vec::with_capacity(2 * n);
    for start in distinguished_squares(h, v) {
        label.iter_mut().for_each(|l| *l = usize::MAX);
        order.clear();
        code.clear();
        label[start] = 0;
        order.push(start);
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for y in [h[x], v[x]] {
                if label[y] == usize::MAX {
                    label[y] = order.len();
                    order.push(y);
                }
                code.push(label[y]);
            }
        }
        match &best {
            Some(b) if code.as_slice() > b.as_slice() => {}
            Some(b) if code.as_slice() == b.as_slice() => ties += 1,
            _ => {
                best = Some(code.clone());
                ties = 1;
            }
        }
    }
    (best.expect("at least one square"), ties)
}

/// Number of permutations commuting with both `h` and `v`; for a connected
/// surface each is fixed by the image of square 0.
pub(crate) fn automorphism_count(h: &[usize], v: &[usize]) -> usize {
    let n = h.len();
    let mut z = vec![usize::MAX; n];
    let mut stack = Vec::with_capacity(n);
    (0..n)
        .filter(|&target| {
            z.iter_mut().for_each(|x| *x = usize::MAX);
            z[0] = target;
            stack.clear();
            stack.push(0);
            while let Some(x) = stack.pop() {
                for g in [h, v] {
                    let (a, b) = (g[x], g[z[x]]);
                    if z[a] == usize::MAX {
                        z[a] = b;
                        stack.push(a);
                    } else if z[a] != b {
                        return false;
                    }
                }
            }
            true
        })
        .count()
}
