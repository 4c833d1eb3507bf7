//! Sparse polynomials in `x₁, x₂, …` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exponent vector; entry `k` is the exponent of variable `k+1`. Trailing
/// zeros are trimmed.
pub type Monomial = Vec<u32>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

/// Polynomial over `Q` in variables indexed from 1, printed with `var` as the
/// variable letter (`t` or `p`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionPolynomial {
    var: char,
    terms: BTreeMap<Monomial, BigRational>,
}

impl PartitionPolynomial {
    pub fn zero(var: char) -> Self {
        Self {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var: char) -> Self {
        let mut p = Self::zero(var);
        p.add_term(Vec::new(), BigRational::one());
        p
    }

    /// The variable `x_i`, `i ≥ 1`.
    pub fn variable(var: char, i: usize) -> Self {
        assert!(i >= 1, "variables are indexed from 1");
        let mut m = vec![0; i];
        m[i - 1] = 1;
        let mut p = Self::zero(var);
        p.add_term(m, BigRational::one());
        p
    }

    /// Monomial with one factor `x_d` for every entry `d` of `parts`.
    pub fn monomial_of_parts(parts: &[usize]) -> Monomial {
        let mut m = Vec::new();
        for &d in parts {
            assert!(d >= 1, "variables are indexed from 1");
            if m.len() < d {
                m.resize(d, 0);
            }
            m[d - 1] += 1;
        }
        m
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, monomial: Monomial, coefficient: BigRational) {
        if coefficient.is_zero() {
            return;
        }
        let key = trim(monomial);
        let entry = self
            .terms
            .entry(key.clone())
            .or_insert_with(BigRational::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coefficient(&self, monomial: &[u32]) -> BigRational {
        let key = trim(monomial.to_vec());
        self.terms
            .get(&key)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of `∏ x_d` over the entries `d` of `parts`.
    pub fn coefficient_of_parts(&self, parts: &[usize]) -> BigRational {
        self.coefficient(&Self::monomial_of_parts(parts))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.var);
        if c.is_zero() {
            return out;
        }
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a * c);
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    /// `∂/∂x_i`.
    pub fn derivative(&self, i: usize) -> Self {
        assert!(i >= 1, "variables are indexed from 1");
        let mut out = Self::zero(self.var);
        for (m, a) in &self.terms {
            let e = m.get(i - 1).copied().unwrap_or(0);
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[i - 1] -= 1;
            out.add_term(m2, a * BigRational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Multiplication by `x_i`.
    pub fn times_variable(&self, i: usize) -> Self {
        let mut out = Self::zero(self.var);
        for (m, a) in &self.terms {
            let mut m2 = m.clone();
            if m2.len() < i {
                m2.resize(i, 0);
            }
            m2[i - 1] += 1;
            out.terms.insert(m2, a.clone());
        }
        out
    }

    /// Largest variable index occurring in any term.
    pub fn max_variable(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// The common weight `Σ i·eᵢ` of all terms, if the polynomial is homogeneous.
    pub fn homogeneous_weight(&self) -> Option<usize> {
        let mut weights = self.terms.keys().map(|m| weight(m));
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// Sorted text lines `coeff * t1^a t3^b`.
    pub fn to_lines(&self) -> Vec<String> {
        self.terms
            .iter()
            .rev()
            .map(|(m, a)| format!("{} * {}", a, monomial_text(self.var, m)))
            .collect()
    }
}

pub(crate) fn weight(m: &[u32]) -> usize {
    m.iter()
        .enumerate()
        .map(|(k, &e)| (k + 1) * e as usize)
        .sum()
}

fn monomial_text(var: char, m: &[u32]) -> String {
    let factors: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(k, &e)| {
            if e == 1 {
                format!("{var}{}", k + 1)
            } else {
                format!("{var}{}^{e}", k + 1)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join(" ")
    }
}

impl Add for &PartitionPolynomial {
    type Output = PartitionPolynomial;

    fn add(self, rhs: &PartitionPolynomial) -> PartitionPolynomial {
        let mut out = self.clone();
        for (m, a) in &rhs.terms {
            out.add_term(m.clone(), a.clone());
        }
        out
    }
}

impl Mul for &PartitionPolynomial {
    type Output = PartitionPolynomial;

    fn mul(self, rhs: &PartitionPolynomial) -> PartitionPolynomial {
        let mut out = PartitionPolynomial::zero(self.var);
        for (m1, a1) in &self.terms {
            for (m2, a2) in &rhs.terms {
                let len = m1.len().max(m2.len());
                let m: Monomial = (0..len)
                    .map(|k| m1.get(k).copied().unwrap_or(0) + m2.get(k).copied().unwrap_or(0))
                    .collect();
                out.add_term(m, a1 * a2);
            }
        }
        out
    }
}

impl fmt::Display for PartitionPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", self.to_lines().join(" + "))
    }
}
