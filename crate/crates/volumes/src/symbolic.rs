//! Exact values `Σ r·ζ(k₁)⋯ζ(k_j)·π^e` with rational `r`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::zeta::{even_zeta_coefficient, zeta_estimate, Estimate};
use crate::VolumeError;

/// Transcendental part of a term: a multiset of zeta arguments and a power
/// of `π`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Factor {
    zetas: Vec<u32>,
    pi_power: i32,
}

impl Factor {
    pub fn new(mut zetas: Vec<u32>, pi_power: i32) -> Self {
        zetas.sort_unstable();
        Factor { zetas, pi_power }
    }

    pub fn zetas(&self) -> &[u32] {
        &self.zetas
    }

    pub fn pi_power(&self) -> i32 {
        self.pi_power
    }

    fn times(&self, other: &Factor) -> Factor {
        let mut zetas = self.zetas.clone();
        zetas.extend_from_slice(&other.zetas);
        Factor::new(zetas, self.pi_power + other.pi_power)
    }
}

/// Finite sum of rational multiples of [`Factor`]s. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolicValue {
    terms: BTreeMap<Factor, BigRational>,
}

impl SymbolicValue {
    pub fn zero() -> Self {
        SymbolicValue::default()
    }

    pub fn rational(r: BigRational) -> Self {
        SymbolicValue::term(r, Factor::default())
    }

    pub fn integer(n: i64) -> Self {
        SymbolicValue::rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `r·ζ(k)`.
    pub fn zeta(r: BigRational, k: u32) -> Self {
        SymbolicValue::term(r, Factor::new(vec![k], 0))
    }

    /// `r·π^e`.
    pub fn pi_power(r: BigRational, e: i32) -> Self {
        SymbolicValue::term(r, Factor::new(Vec::new(), e))
    }

    pub fn term(r: BigRational, factor: Factor) -> Self {
        let mut v = SymbolicValue::zero();
        v.add_term(factor, r);
        v
    }

    fn add_term(&mut self, factor: Factor, r: BigRational) {
        if r.is_zero() {
            return;
        }
        let entry = self.terms.entry(factor).or_insert_with(BigRational::zero);
        *entry += r;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Factor, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a single factor.
    pub fn coefficient(&self, factor: &Factor) -> BigRational {
        self.terms
            .get(factor)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// The rational `r` if the value is `r·ζ(k)` for the given `k`.
    pub fn as_zeta_multiple(&self, k: u32) -> Option<BigRational> {
        match self.terms.iter().next() {
            None => Some(BigRational::zero()),
            Some((f, c)) if self.terms.len() == 1 && f == &Factor::new(vec![k], 0) => {
                Some(c.clone())
            }
            _ => None,
        }
    }

    /// The rational value if no transcendental factor remains.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.as_factor_multiple(&Factor::default())
    }

    pub fn as_factor_multiple(&self, factor: &Factor) -> Option<BigRational> {
        match self.terms.iter().next() {
            None => Some(BigRational::zero()),
            Some((f, c)) if self.terms.len() == 1 && f == factor => Some(c.clone()),
            _ => None,
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let mut out = SymbolicValue::zero();
        for (f, c) in &self.terms {
            out.add_term(f.clone(), c * r);
        }
        out
    }

    /// Replaces every `ζ(2k)` by its rational multiple of `π^{2k}`.
    pub fn normalized(&self) -> Self {
        let mut out = SymbolicValue::zero();
        for (f, c) in &self.terms {
            let mut coefficient = c.clone();
            let mut pi_power = f.pi_power;
            let mut odd = Vec::new();
            for &k in &f.zetas {
                if k % 2 == 0 {
                    coefficient *= even_zeta_coefficient(k / 2);
                    pi_power += k as i32;
                } else {
                    odd.push(k);
                }
            }
            out.add_term(Factor::new(odd, pi_power), coefficient);
        }
        out
    }

    /// Exact quotient by a nonzero rational.
    pub fn div_rational(&self, r: &BigRational) -> Result<Self, VolumeError> {
        if r.is_zero() {
            return Err(VolumeError::DivisionByZero);
        }
        Ok(self.scale(&r.recip()))
    }

    /// Numeric value with an absolute error bound at most about `precision`.
    pub fn numeric(&self, precision: f64) -> Estimate {
        let terms: Vec<(&Factor, &BigRational)> = self.terms.iter().collect();
        let per_term = precision / (terms.len().max(1) as f64 * 4.0);
        let parts: Vec<Estimate> = terms
            .par_iter()
            .map(|(f, c)| factor_estimate(f, c, per_term))
            .collect();
        parts.iter().fold(
            Estimate {
                value: 0.0,
                error: 0.0,
            },
            |acc, e| Estimate {
                value: acc.value + e.value,
                error: acc.error + e.error,
            },
        )
    }

    pub fn to_f64(&self) -> f64 {
        self.numeric(1e-14).value
    }

    /// JSON mirror with exact numerators and denominators as strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_record()).expect("serializable")
    }

    pub fn to_record(&self) -> SymbolicRecord {
        SymbolicRecord {
            text: self.to_string(),
            value: self.to_f64(),
            terms: self
                .terms
                .iter()
                .map(|(f, c)| TermRecord {
                    numerator: c.numer().to_string(),
                    denominator: c.denom().to_string(),
                    zeta: f.zetas.clone(),
                    pi_power: f.pi_power,
                })
                .collect(),
        }
    }
}

fn factor_estimate(f: &Factor, c: &BigRational, precision: f64) -> Estimate {
    let coefficient = c.to_f64().unwrap_or(f64::NAN);
    let mut value = coefficient * std::f64::consts::PI.powi(f.pi_power);
    let mut relative = 4.0 * f64::EPSILON;
    for &k in &f.zetas {
        let z = zeta_estimate(k, precision / value.abs().max(1.0)).expect("k ≥ 2 by construction");
        value *= z.value;
        relative += z.error / z.value;
    }
    Estimate {
        value,
        error: value.abs() * relative,
    }
}

/// Serializable form of a [`SymbolicValue`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymbolicRecord {
    pub text: String,
    pub value: f64,
    pub terms: Vec<TermRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    pub numerator: String,
    pub denominator: String,
    pub zeta: Vec<u32>,
    pub pi_power: i32,
}

impl Add for &SymbolicValue {
    type Output = SymbolicValue;
    fn add(self, other: &SymbolicValue) -> SymbolicValue {
        let mut out = self.clone();
        for (f, c) in &other.terms {
            out.add_term(f.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymbolicValue {
    type Output = SymbolicValue;
    fn sub(self, other: &SymbolicValue) -> SymbolicValue {
        self + &(-other)
    }
}

impl Neg for &SymbolicValue {
    type Output = SymbolicValue;
    fn neg(self) -> SymbolicValue {
        self.scale(&-BigRational::one())
    }
}

impl Mul for &SymbolicValue {
    type Output = SymbolicValue;
    fn mul(self, other: &SymbolicValue) -> SymbolicValue {
        let mut out = SymbolicValue::zero();
        for (fa, ca) in &self.terms {
            for (fb, cb) in &other.terms {
                out.add_term(fa.times(fb), ca * cb);
            }
        }
        out
    }
}

impl std::iter::Sum for SymbolicValue {
    fn sum<I: Iterator<Item = SymbolicValue>>(iter: I) -> Self {
        iter.fold(SymbolicValue::zero(), |acc, v| &acc + &v)
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.zetas.iter().map(|k| format!("zeta({k})")).collect();
        match self.pi_power {
            0 => {}
            1 => parts.push("pi".to_string()),
            e => parts.push(format!("pi^{e}")),
        }
        write!(f, "{}", parts.join(" * "))
    }
}

impl fmt::Display for SymbolicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(factor, c)| {
                if factor == &Factor::default() {
                    c.to_string()
                } else {
                    format!("{c} * {factor}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl FromStr for SymbolicValue {
    type Err = VolumeError;

    /// Parses the text form produced by `Display`.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| VolumeError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = input.trim();
        if trimmed == "0" {
            return Ok(SymbolicValue::zero());
        }
        let mut out = SymbolicValue::zero();
        for term in trimmed.split(" + ") {
            let mut coefficient = BigRational::one();
            let mut zetas = Vec::new();
            let mut pi_power = 0;
            for piece in term.split('*').map(str::trim) {
                if let Some(arg) = piece
                    .strip_prefix("zeta(")
                    .and_then(|r| r.strip_suffix(')'))
                {
                    let k: u32 = arg.trim().parse().map_err(|_| fail("bad zeta argument"))?;
                    if k < 2 {
                        return Err(fail("zeta argument below 2"));
                    }
                    zetas.push(k);
                } else if piece == "pi" {
                    pi_power += 1;
                } else if let Some(e) = piece.strip_prefix("pi^") {
                    pi_power += e
                        .trim()
                        .parse::<i32>()
                        .map_err(|_| fail("bad pi exponent"))?;
                } else {
                    coefficient *= parse_rational(piece).ok_or_else(|| fail("bad coefficient"))?;
                }
            }
            out.add_term(Factor::new(zetas, pi_power), coefficient);
        }
        Ok(out)
    }
}

fn parse_rational(text: &str) -> Option<BigRational> {
    match text.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p.trim().parse().ok()?, q))
        }
        None => Some(BigRational::from_integer(text.trim().parse().ok()?)),
    }
}
