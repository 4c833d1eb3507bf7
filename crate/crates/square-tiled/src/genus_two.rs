//! Explicit construction of every square-tiled surface of `H(2)` from its
//! cylinder parameters.

use std::collections::HashSet;

use perm_core::Permutation;

use crate::SquareTiledSurface;

fn surface(h: Vec<usize>, v: Vec<usize>) -> SquareTiledSurface {
    SquareTiledSurface::new(
        Permutation::new(h).expect("valid right gluing"),
        Permutation::new(v).expect("valid up gluing"),
    )
    .expect("connected by construction")
}

/// One cylinder `width × height`; its top boundary reads saddle connections
/// of lengths `a, b, c`, its bottom reads them as `c, b, a` starting at
/// `twist`.
fn one_cylinder(a: usize, b: usize, c: usize, height: usize, twist: usize) -> SquareTiledSurface {
    let w = a + b + c;
    let n = w * height;
    let sq = |row: usize, x: usize| row * w + x;
    let mut h = vec![0; n];
    let mut v = vec![0; n];
    for row in 0..height {
        for x in 0..w {
            h[sq(row, x)] = sq(row, (x + 1) % w);
            v[sq(row, x)] = if row + 1 < height {
                sq(row + 1, x)
            } else {
                let bottom = if x < a {
                    c + b + x
                } else if x < a + b {
                    c + (x - a)
                } else {
                    x - a - b
                };
                sq(0, (bottom + twist) % w)
            };
        }
    }
    surface(h, v)
}

/// A narrow cylinder `w1 × h1` standing on the first `w1` units of the top
/// of a wide cylinder `w2 × h2`; the rest of the wide top is glued back to
/// its own bottom.
fn two_cylinders(
    (w1, h1, t1): (usize, usize, usize),
    (w2, h2, t2): (usize, usize, usize),
) -> SquareTiledSurface {
    let wide = |row: usize, x: usize| row * w2 + x;
    let narrow = |row: usize, x: usize| w2 * h2 + row * w1 + x;
    let n = w1 * h1 + w2 * h2;
    let mut h = vec![0; n];
    let mut v = vec![0; n];
    for row in 0..h2 {
        for x in 0..w2 {
            h[wide(row, x)] = wide(row, (x + 1) % w2);
            v[wide(row, x)] = if row + 1 < h2 {
                wide(row + 1, x)
            } else if x < w1 {
                narrow(0, (x + t1) % w1)
            } else {
                wide(0, (t2 + x) % w2)
            };
        }
    }
    for row in 0..h1 {
        for x in 0..w1 {
            h[narrow(row, x)] = narrow(row, (x + 1) % w1);
            v[narrow(row, x)] = if row + 1 < h1 {
                narrow(row + 1, x)
            } else {
                wide(0, (t2 + x) % w2)
            };
        }
    }
    surface(h, v)
}

/// One representative of every isomorphism class of square-tiled surfaces
/// in `H(2)` with at most `n_max` squares.
pub fn h2_surfaces(n_max: usize) -> Vec<SquareTiledSurface> {
    let mut out = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for w in 3..=n_max {
        for height in 1..=n_max / w {
            for a in 1..w - 1 {
                for b in 1..w - a {
                    let c = w - a - b;
                    for twist in 0..w {
                        let s = one_cylinder(a, b, c, height, twist);
                        if seen.insert(s.canonical_encoding()) {
                            out.push(s);
                        }
                    }
                }
            }
        }
    }
    for w1 in 1..n_max {
        for h1 in 1..n_max / w1 {
            for w2 in w1 + 1..=n_max - w1 * h1 {
                for h2 in 1..=(n_max - w1 * h1) / w2 {
                    for t1 in 0..w1 {
                        for t2 in 0..w2 {
                            out.push(two_cylinders((w1, h1, t1), (w2, h2, t2)));
                        }
                    }
                }
            }
        }
    }
    out
}
