//! The cut-and-join operators and the recursions built on them.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use perm_core::{Kind, StratumSignature};

use crate::polynomial::{weight, Monomial, PartitionPolynomial};
use crate::GenfunError;

fn int(k: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// Memoized first and second partial derivatives of one polynomial.
struct Derivatives<'a> {
    f: &'a PartitionPolynomial,
    first: HashMap<usize, PartitionPolynomial>,
    second: HashMap<(usize, usize), PartitionPolynomial>,
}

impl<'a> Derivatives<'a> {
    fn new(f: &'a PartitionPolynomial) -> Self {
        Self {
            f,
            first: HashMap::new(),
            second: HashMap::new(),
        }
    }

    fn d(&mut self, i: usize) -> PartitionPolynomial {
        let f = self.f;
        self.first
            .entry(i)
            .or_insert_with(|| f.derivative(i))
            .clone()
    }

    fn dd(&mut self, i: usize, j: usize) -> PartitionPolynomial {
        let key = (i.min(j), i.max(j));
        if let Some(p) = self.second.get(&key) {
            return p.clone();
        }
        let p = self.d(key.0).derivative(key.1);
        self.second.insert(key, p.clone());
        p
    }
}

/// `M₁ = Σ_{i≥2} Σ_{j=1}^{i−1} (i−1) t_j t_{i−j} ∂/∂t_{i−1} + j(i−j) t_{i+1} ∂²/∂t_j∂t_{i−j}`.
pub fn apply_m1(f: &PartitionPolynomial) -> PartitionPolynomial {
    let top = f.max_variable();
    let mut derivs = Derivatives::new(f);
    let mut out = PartitionPolynomial::zero(f.var());
    for i in 2..=2 * top + 1 {
        for j in 1..i {
            let k = i - j;
            if i - 1 <= top {
                let d = derivs.d(i - 1);
                if !d.is_zero() {
                    let term = d.times_variable(j).times_variable(k).scale(&int(i - 1));
                    out = &out + &term;
                }
            }
            if j <= top && k <= top {
                let dd = derivs.dd(j, k);
                if !dd.is_zero() {
                    let term = dd.times_variable(i + 1).scale(&int(j * k));
                    out = &out + &term;
                }
            }
        }
    }
    out
}

/// `F_n` from `F₁ = t₁` and `(n−1)F_n = M₁F_{n−1}`.
pub fn abelian_f(n: usize) -> Result<PartitionPolynomial, GenfunError> {
    if n == 0 {
        return Err(GenfunError::ZeroIndex);
    }
    let mut f = PartitionPolynomial::variable('t', 1);
    for k in 2..=n {
        f = apply_m1(&f).scale(&BigRational::new(BigInt::one(), BigInt::from(k - 1)));
    }
    debug_assert_eq!(f.homogeneous_weight(), Some(n));
    Ok(f)
}

/// `F_n` through the coefficient-level form of the recursion: every monomial
/// `ν` of `F_n` collects the monomials of `F_{n−1}` that `M₁` sends onto it.
pub fn abelian_f_by_coefficients(n: usize) -> Result<PartitionPolynomial, GenfunError> {
    if n == 0 {
        return Err(GenfunError::ZeroIndex);
    }
    let mut current: BTreeMap<Monomial, BigRational> = BTreeMap::new();
    current.insert(vec![1], BigRational::one());
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for nu in partitions_as_multiplicities(size) {
            let v = |k: usize| -> i64 { nu.get(k - 1).copied().unwrap_or(0) as i64 };
            let lookup = |shift: &[(usize, i64)]| -> Option<BigRational> {
                let mut mu: Vec<i64> = nu.iter().map(|&e| e as i64).collect();
                for &(k, delta) in shift {
                    if mu.len() < k {
                        mu.resize(k, 0);
                    }
                    mu[k - 1] += delta;
                }
                if mu.iter().any(|&e| e < 0) {
                    return None;
                }
                let key: Monomial = trimmed(mu.iter().map(|&e| e as u32).collect());
                current.get(&key).cloned()
            };
            let mut total = BigRational::zero();
            for i in 2..=size + 1 {
                for j in 1..i {
                    let k = i - j;
                    // join: μ = ν − e_j − e_k + e_{i−1}, weight (i−1)·μ_{i−1}
                    if let Some(c) = lookup(&[(j, -1), (k, -1), (i - 1, 1)]) {
                        let mu_prev = v(i - 1) + 1 - i64::from(k == 1) - i64::from(j == 1);
                        total += c * int(i - 1) * BigRational::from_integer(mu_prev.into());
                    }
                    // cut: μ = ν + e_j + e_k − e_{i+1}, weight j·k·μ_j·(μ_k − δ_{jk})
                    if let Some(c) = lookup(&[(j, 1), (k, 1), (i + 1, -1)]) {
                        let pair = (v(j) + 1) * (v(k) + 1 + i64::from(j == k));
                        total += c * int(j * k) * BigRational::from_integer(pair.into());
                    }
                }
            }
            if !total.is_zero() {
                next.insert(trimmed(nu.clone()), total / int(size - 1));
            }
        }
        current = next;
    }
    let mut out = PartitionPolynomial::zero('t');
    for (m, c) in current {
        out.add_term(m, c);
    }
    Ok(out)
}

fn trimmed(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn partitions_as_multiplicities(n: usize) -> Vec<Monomial> {
    fn rec(rest: usize, max: usize, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if rest == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            current[part - 1] += 1;
            rec(rest - part, part, current, out);
            current[part - 1] -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut vec![0; n], &mut out);
    out
}

/// `M₂ = Σ_{i≥2} Σ_{j=1}^{i−1} (i−2) p_j p_{i−j} ∂/∂p_{i−2} + j(i−j) p_{i+2} ∂²/∂p_j∂p_{i−j}`.
pub fn apply_m2(f: &PartitionPolynomial) -> PartitionPolynomial {
    let top = f.max_variable();
    let mut derivs = Derivatives::new(f);
    let mut out = PartitionPolynomial::zero(f.var());
    for i in 2..=2 * top + 2 {
        for j in 1..i {
            let k = i - j;
            if i >= 3 && i - 2 <= top {
                let d = derivs.d(i - 2);
                if !d.is_zero() {
                    let term = d.times_variable(j).times_variable(k).scale(&int(i - 2));
                    out = &out + &term;
                }
            }
            if j <= top && k <= top {
                let dd = derivs.dd(j, k);
                if !dd.is_zero() {
                    let term = dd.times_variable(i + 2).scale(&int(j * k));
                    out = &out + &term;
                }
            }
        }
    }
    out
}

/// `G_n` from `2G₁ = p₁²` and `2n·G_n = M₂G_{n−1}`.
pub fn quadratic_g(n: usize) -> Result<PartitionPolynomial, GenfunError> {
    if n == 0 {
        return Err(GenfunError::ZeroIndex);
    }
    let p1 = PartitionPolynomial::variable('p', 1);
    let mut g = (&p1 * &p1).scale(&BigRational::new(BigInt::one(), BigInt::from(2)));
    for k in 2..=n {
        g = apply_m2(&g).scale(&BigRational::new(BigInt::one(), BigInt::from(2 * k)));
    }
    debug_assert_eq!(g.homogeneous_weight(), Some(2 * n));
    Ok(g)
}

/// `F_{l,m,n}` for `l ∈ {0, 1, 2}`, assembled from `G_m` and `G_n`.
pub fn quadratic_f(l: usize, m: usize, n: usize) -> Result<PartitionPolynomial, GenfunError> {
    if m == 0 || n == 0 {
        return Err(GenfunError::NonPositive { m, n });
    }
    if l > 2 {
        return Err(GenfunError::UnsupportedL(l));
    }
    let gm = quadratic_g(m)?;
    let gn = quadratic_g(n)?;
    let f = match l {
        0 => &gm * &gn,
        1 => join_once(&gm, &gn),
        _ => join_twice(&gm, &gn),
    };
    debug_assert!(f.is_zero() || f.homogeneous_weight() == Some(2 * (l + m + n)));
    Ok(f)
}

fn p(i: usize) -> PartitionPolynomial {
    PartitionPolynomial::variable('p', i)
}

fn join_once(gm: &PartitionPolynomial, gn: &PartitionPolynomial) -> PartitionPolynomial {
    let mut dm = Derivatives::new(gm);
    let mut dn = Derivatives::new(gn);
    let mut out = PartitionPolynomial::zero('p');
    for i in 1..=gm.max_variable() {
        let a = dm.d(i);
        if a.is_zero() {
            continue;
        }
        for j in 1..=gn.max_variable() {
            let b = dn.d(j);
            if b.is_zero() {
                continue;
            }
            let term = (&a * &b).times_variable(i + j + 2).scale(&int(i * j));
            out = &out + &term;
        }
    }
    out
}

fn join_twice(gm: &PartitionPolynomial, gn: &PartitionPolynomial) -> PartitionPolynomial {
    let top_m = gm.max_variable();
    let top_n = gn.max_variable();
    let mut dm = Derivatives::new(gm);
    let mut dn = Derivatives::new(gn);
    let mut out = PartitionPolynomial::zero('p');
    let half = BigRational::new(BigInt::one(), BigInt::from(2));

    // two boundary components on each side, joined pairwise
    for i in 1..=top_m {
        for j in 1..=top_m {
            let a = dm.dd(i, j);
            if a.is_zero() {
                continue;
            }
            for k in 1..=top_n {
                for l in 1..=top_n {
                    let b = dn.dd(k, l);
                    if b.is_zero() {
                        continue;
                    }
                    let term = (&a * &b)
                        .times_variable(i + k + 2)
                        .times_variable(j + l + 2)
                        .scale(&(int(i * j * k * l) * &half));
                    out = &out + &term;
                }
            }
        }
    }

    // two components on one side joined to a single component on the other;
    // the two edges are unordered
    for i in 1..=top_m.max(top_n) {
        for j in 1..=top_m.max(top_n) {
            for k in 1..=top_m.max(top_n) {
                let w = int(i * j * k * (k + 1));
                let lhs = if i <= top_m && j <= top_m && k <= top_n {
                    &dm.dd(i, j) * &dn.d(k)
                } else {
                    PartitionPolynomial::zero('p')
                };
                let rhs = if k <= top_m && i <= top_n && j <= top_n {
                    &dm.d(k) * &dn.dd(i, j)
                } else {
                    PartitionPolynomial::zero('p')
                };
                let sum = &lhs + &rhs;
                if sum.is_zero() {
                    continue;
                }
                out = &out + &sum.times_variable(i + j + k + 4).scale(&(w * &half));
            }
        }
    }

    // one component on each side joined by both edges
    for i in 1..=top_m {
        let a = dm.d(i);
        if a.is_zero() {
            continue;
        }
        for j in 1..=top_n {
            let b = dn.d(j);
            if b.is_zero() {
                continue;
            }
            let mut splits = PartitionPolynomial::zero('p');
            for k in 0..=i {
                for l in 0..=j {
                    splits = &splits + &(&p(k + l + 2) * &p(i + j + 2 - k - l));
                }
            }
            let term = (&(&a * &b) * &splits).scale(&(int(i * j) * &half));
            out = &out + &term;
        }
    }
    out
}

/// Context needed to turn a rooted count into a weighted diagram count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootedContext {
    /// Coefficient of `F_n`.
    Abelian { n: usize },
    /// Coefficient of `F_{l,m,n}`.
    Quadratic { m: usize, n: usize },
}

/// Abelian: divide by `n`. Quadratic: halve when `m = n`.
pub fn weighted_from_rooted(coefficient: &BigRational, context: RootedContext) -> BigRational {
    match context {
        RootedContext::Abelian { n } => coefficient / int(n),
        RootedContext::Quadratic { m, n } if m == n => coefficient / int(2),
        RootedContext::Quadratic { .. } => coefficient.clone(),
    }
}

/// The monomial marking a stratum: `t_{m+1}` per Abelian zero of order `m`,
/// `p_{d+2}` per quadratic singularity of order `d`.
pub fn stratum_monomial(s: &StratumSignature) -> Monomial {
    let shift = match s.kind() {
        Kind::Abelian => 1,
        Kind::Quadratic => 2,
    };
    let parts: Vec<usize> = s.orders().iter().map(|&o| (o + shift) as usize).collect();
    let m = PartitionPolynomial::monomial_of_parts(&parts);
    debug_assert_eq!(
        weight(&m),
        match s.kind() {
            Kind::Abelian => s.abelian_n(),
            Kind::Quadratic => 2 * s.dim(),
        }
    );
    m
}

/// Weighted count of one-cylinder diagrams of type `(l, {m, n})` in a
/// quadratic stratum, read off `F_{l,m,n}`.
pub fn weighted_lmn_count(
    s: &StratumSignature,
    l: usize,
    m: usize,
    n: usize,
) -> Result<BigRational, GenfunError> {
    let dim = s.dim();
    if l + m + n != dim {
        return Err(GenfunError::Dimension {
            sum: l + m + n,
            dim,
        });
    }
    let f = quadratic_f(l, m, n)?;
    let c = f.coefficient(&stratum_monomial(s));
    Ok(weighted_from_rooted(&c, RootedContext::Quadratic { m, n }))
}
