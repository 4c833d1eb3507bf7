//! Brute-force oracles: enumerate polygon gluings directly and read off the
//! vertex degrees by merging corners.

use std::collections::HashMap;

use genfun::{
    abelian_f, abelian_f_by_coefficients, quadratic_f, quadratic_g, Monomial, PartitionPolynomial,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use perm_core::all_permutations;

struct Corners {
    parent: Vec<usize>,
}

impl Corners {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        self.parent[x] = r;
        r
    }

    fn join(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.parent[ra] = rb;
    }

    /// Class sizes, divided by `scale`, as a monomial.
    fn monomial(&mut self, scale: usize) -> Monomial {
        let n = self.parent.len();
        let mut sizes: HashMap<usize, usize> = HashMap::new();
        for x in 0..n {
            let r = self.find(x);
            *sizes.entry(r).or_insert(0) += 1;
        }
        let parts: Vec<usize> = sizes
            .values()
            .map(|&s| {
                assert_eq!(s % scale, 0);
                s / scale
            })
            .collect();
        PartitionPolynomial::monomial_of_parts(&parts)
    }
}

fn to_polynomial(var: char, counts: HashMap<Monomial, u64>, norm: usize) -> PartitionPolynomial {
    let mut p = PartitionPolynomial::zero(var);
    for (m, c) in counts {
        p.add_term(m, BigRational::new(BigInt::from(c), BigInt::from(norm)));
    }
    p
}

/// Rooted gluings of the two boundaries of a cylinder by translations: top
/// side `i` goes to bottom side `σ(i)`, with side 0 glued to side 0.
fn brute_abelian(n: usize) -> PartitionPolynomial {
    let mut counts = HashMap::new();
    for sigma in all_permutations(n).filter(|s| s.apply(0) == 0) {
        let mut c = Corners::new(2 * n);
        for i in 0..n {
            let j = sigma.apply(i);
            c.join(i, n + j);
            c.join((i + 1) % n, n + (j + 1) % n);
        }
        *counts.entry(c.monomial(2)).or_insert(0) += 1;
    }
    to_polynomial('t', counts, 1)
}

fn matchings(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let first = items[0];
    let mut out = Vec::new();
    for k in 1..items.len() {
        let rest: Vec<usize> = items[1..]
            .iter()
            .copied()
            .filter(|&x| x != items[k])
            .collect();
        for mut m in matchings(&rest) {
            m.push((first, items[k]));
            out.push(m);
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Flip gluing of sides `i` and `j` of a boundary cycle of length `len`
/// whose corners start at `offset`.
fn glue_flip(c: &mut Corners, offset: usize, len: usize, i: usize, j: usize) {
    c.join(offset + i, offset + (j + 1) % len);
    c.join(offset + (i + 1) % len, offset + j);
}

/// Gluings of a `2n`-gon, weighted by `1/(2n)`.
fn brute_g(n: usize) -> PartitionPolynomial {
    let mut counts = HashMap::new();
    let sides: Vec<usize> = (0..2 * n).collect();
    for m in matchings(&sides) {
        let mut c = Corners::new(2 * n);
        for (i, j) in m {
            glue_flip(&mut c, 0, 2 * n, i, j);
        }
        *counts.entry(c.monomial(1)).or_insert(0) += 1;
    }
    to_polynomial('p', counts, 2 * n)
}

/// Gluings of a cylinder with `l+2m` top and `l+2n` bottom sides: `l` sides
/// go across by translations, the rest are paired within their boundary.
fn brute_lmn(l: usize, m: usize, n: usize) -> PartitionPolynomial {
    let top = l + 2 * m;
    let bottom = l + 2 * n;
    let mut counts = HashMap::new();
    for shared_top in combinations(top, l) {
        let rest_top: Vec<usize> = (0..top).filter(|x| !shared_top.contains(x)).collect();
        let top_matchings = matchings(&rest_top);
        for shared_bottom in combinations(bottom, l) {
            let rest_bottom: Vec<usize> =
                (0..bottom).filter(|x| !shared_bottom.contains(x)).collect();
            let bottom_matchings = matchings(&rest_bottom);
            for order in all_permutations(l) {
                for tm in &top_matchings {
                    for bm in &bottom_matchings {
                        let mut c = Corners::new(top + bottom);
                        for (k, &i) in shared_top.iter().enumerate() {
                            let j = shared_bottom[order.apply(k)];
                            c.join(i, top + j);
                            c.join((i + 1) % top, top + (j + 1) % bottom);
                        }
                        for &(i, j) in tm {
                            glue_flip(&mut c, 0, top, i, j);
                        }
                        for &(i, j) in bm {
                            glue_flip(&mut c, top, bottom, i, j);
                        }
                        *counts.entry(c.monomial(1)).or_insert(0) += 1;
                    }
                }
            }
        }
    }
    to_polynomial('p', counts, top * bottom)
}

#[test]
fn abelian_recursion_matches_gluings() {
    for n in 1..=8 {
        assert_eq!(abelian_f(n).unwrap(), brute_abelian(n), "n={n}");
    }
}

#[test]
fn coefficient_recursion_matches_operator_form() {
    for n in 1..=8 {
        assert_eq!(
            abelian_f(n).unwrap(),
            abelian_f_by_coefficients(n).unwrap(),
            "n={n}"
        );
    }
}

#[test]
fn polygon_series_matches_gluings() {
    for n in 1..=6 {
        assert_eq!(quadratic_g(n).unwrap(), brute_g(n), "n={n}");
    }
}

#[test]
fn assemblies_match_gluings() {
    for l in 0..=2 {
        for m in 1..=4 {
            for n in 1..=4 {
                if l + m + n > 6 {
                    continue;
                }
                assert_eq!(
                    quadratic_f(l, m, n).unwrap(),
                    brute_lmn(l, m, n),
                    "l={l} m={m} n={n}"
                );
            }
        }
    }
}

#[test]
fn polygon_series_has_nonnegative_coefficients() {
    for n in 1..=7 {
        let g = quadratic_g(n).unwrap();
        assert!(g
            .terms()
            .all(|(_, c)| *c > BigRational::from_integer(0.into())));
        assert_eq!(g.homogeneous_weight(), Some(2 * n));
    }
}
