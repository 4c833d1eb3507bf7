//! Bernoulli numbers, `ζ(k)` by Euler–Maclaurin and multiple zeta values by
//! splitting the iterated integral at `1/2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::sync::OnceLock;

use crate::VolumeError;

/// Number of Euler–Maclaurin correction terms.
const EM_TERMS: usize = 8;

/// Numeric value with an absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

/// Bernoulli numbers `B_0..=B_n` with `B_1 = −1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for m in 1..=n {
        // Σ_{k=0}^{m} C(m+1, k) B_k = 0
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            acc += bk * BigRational::from_integer(binom.clone());
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// Rational `r` with `ζ(2k) = r·π^{2k}`.
pub fn even_zeta_coefficient(k: u32) -> BigRational {
    assert!(k >= 1, "ζ(0) is not a positive even value");
    let two_k = 2 * k as usize;
    let fresh;
    let b = if two_k <= CACHED_BERNOULLI {
        &cached_bernoulli()[two_k]
    } else {
        fresh = bernoulli_numbers(two_k);
        &fresh[two_k]
    };
    let fact: BigInt = (1..=two_k).map(BigInt::from).product();
    b.abs() * BigRational::from_integer(BigInt::one() << (two_k - 1))
        / BigRational::from_integer(fact)
}

const CACHED_BERNOULLI: usize = 96;

fn cached_bernoulli() -> &'static [BigRational] {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| bernoulli_numbers(CACHED_BERNOULLI))
}

fn euler_maclaurin_coefficients() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let b = &cached_bernoulli()[..=2 * EM_TERMS + 2];
        let mut fact = 1.0f64;
        let mut out = Vec::with_capacity(EM_TERMS + 1);
        for m in 1..=2 * EM_TERMS + 2 {
            fact *= m as f64;
            if m % 2 == 0 {
                out.push(b[m].to_f64().unwrap() / fact);
            }
        }
        out
    })
}

/// `ζ(s)` summing `N−1` terms directly and correcting the tail by
/// Euler–Maclaurin. The error bound is the first omitted correction plus a
/// rounding allowance.
pub fn zeta_series(s: u32, n: usize) -> Estimate {
    assert!(s >= 2 && n >= 1);
    let sf = s as f64;
    let nf = n as f64;
    let head: f64 = (1..n).rev().map(|k| (k as f64).powf(-sf)).sum();
    let mut tail = nf.powf(1.0 - sf) / (sf - 1.0) + 0.5 * nf.powf(-sf);
    let coefficients = euler_maclaurin_coefficients();
    // rising factorial s(s+1)…(s+2j−2) and the power N^{−s−2j+1}
    let mut rising = sf;
    let mut power = nf.powf(-sf - 1.0);
    let mut omitted = 0.0;
    for (j, c) in coefficients.iter().enumerate() {
        let term = c * rising * power;
        if j == EM_TERMS {
            omitted = term.abs();
        } else {
            tail += term;
        }
        rising *= (sf + 2.0 * j as f64 + 1.0) * (sf + 2.0 * j as f64 + 2.0);
        power /= nf * nf;
    }
    let value = head + tail;
    Estimate {
        value,
        error: omitted + 64.0 * f64::EPSILON * value,
    }
}

/// `ζ(k)` to absolute error at most `precision` (down to `f64` rounding).
pub fn zeta_numeric(k: u32, precision: f64) -> Result<f64, VolumeError> {
    Ok(zeta_estimate(k, precision)?.value)
}

/// Like [`zeta_numeric`] but also reports the error bound.
pub fn zeta_estimate(k: u32, precision: f64) -> Result<Estimate, VolumeError> {
    if k < 2 {
        return Err(VolumeError::Divergent(vec![k]));
    }
    let mut n = 4;
    loop {
        let e = zeta_series(k, n);
        // below the rounding floor a longer series gains nothing
        if e.error <= precision || e.error <= 128.0 * f64::EPSILON * e.value || n >= 1 << 16 {
            return Ok(e);
        }
        n *= 2;
    }
}

/// `Σ_{n₁>n₂>…>n_k≥1, n₁≤N} z^{n₁} / (n₁^{a₁}⋯n_k^{a_k})`.
fn truncated_polylog(indices: &[u32], z: f64, n_max: usize) -> f64 {
    // partial[m] = inner sum over chains whose largest element is at most m
    let mut partial = vec![1.0f64; n_max + 1];
    for (level, &a) in indices.iter().enumerate().rev() {
        let outermost = level == 0;
        let mut next = vec![0.0f64; n_max + 1];
        let mut acc = 0.0;
        let mut zpow = 1.0;
        for m in 1..=n_max {
            zpow *= z;
            let weight = (m as f64).powi(-(a as i32));
            acc += if outermost { zpow } else { 1.0 } * weight * partial[m - 1];
            next[m] = acc;
        }
        partial = next;
    }
    partial[n_max]
}

/// Letters of the iterated-integral word: `false` for `dt/t`, `true` for
/// `dt/(1−t)`.
fn word_of(indices: &[u32]) -> Vec<bool> {
    let mut w = Vec::new();
    for &a in indices {
        w.extend(std::iter::repeat_n(false, a as usize - 1));
        w.push(true);
    }
    w
}

fn indices_of(word: &[bool]) -> Vec<u32> {
    let mut out = Vec::new();
    let mut run = 1;
    for &letter in word {
        if letter {
            out.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    out
}

/// Multiple zeta value with arguments ordered so that the summation indices
/// increase left to right: `ζ(a₁,…,a_k) = Σ_{n₁<…<n_k} ∏ n_i^{−a_i}`. The
/// last argument must be at least 2; in this convention `ζ(1,3) = ζ(4)/4`.
pub fn mzv_numeric(args: &[u32], precision: f64) -> Result<f64, VolumeError> {
    if args.is_empty() || args.contains(&0) || *args.last().unwrap() < 2 {
        return Err(VolumeError::Divergent(args.to_vec()));
    }
    let descending: Vec<u32> = args.iter().rev().copied().collect();
    let word = word_of(&descending);
    let weight = word.len();
    let bits = (1.0 / precision.max(1e-300)).log2().ceil().max(0.0) as usize;
    let n_max = (bits + 4 * weight + 20).max(64);
    let half_line = |w: &[bool]| -> f64 {
        if w.is_empty() {
            1.0
        } else {
            truncated_polylog(&indices_of(w), 0.5, n_max)
        }
    };
    let mut total = 0.0;
    for cut in 0..=weight {
        let (upper, lower) = word.split_at(cut);
        let mirrored: Vec<bool> = upper.iter().rev().map(|&l| !l).collect();
        total += half_line(&mirrored) * half_line(lower);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bernoulli_numbers() {
        let b = bernoulli_numbers(8);
        let r = |p: i64, q: i64| BigRational::new(p.into(), q.into());
        assert_eq!(b[1], r(-1, 2));
        assert_eq!(b[2], r(1, 6));
        assert_eq!(b[3], r(0, 1));
        assert_eq!(b[4], r(-1, 30));
        assert_eq!(b[8], r(-1, 30));
    }

    #[test]
    fn even_zeta_rationals() {
        assert_eq!(
            even_zeta_coefficient(1),
            BigRational::new(1.into(), 6.into())
        );
        assert_eq!(
            even_zeta_coefficient(2),
            BigRational::new(1.into(), 90.into())
        );
        assert_eq!(
            even_zeta_coefficient(3),
            BigRational::new(1.into(), 945.into())
        );
    }

    #[test]
    fn word_round_trip() {
        for args in [vec![2], vec![3, 1], vec![2, 1, 4], vec![1, 1, 2]] {
            assert_eq!(indices_of(&word_of(&args)), args);
        }
    }

    #[test]
    fn log_two() {
        assert!((truncated_polylog(&[1], 0.5, 80) - 2f64.ln()).abs() < 1e-15);
    }
}
