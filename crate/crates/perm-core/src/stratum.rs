//! Singularity profiles of strata of Abelian and quadratic differentials.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::{CycleType, PermError};

/// Abelian differentials (translation surfaces) or quadratic differentials
/// (half-translation surfaces).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Abelian,
    Quadratic,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Abelian => "Abelian",
            Kind::Quadratic => "quadratic",
        }
    }

    fn letter(self) -> char {
        match self {
            Kind::Abelian => 'H',
            Kind::Quadratic => 'Q',
        }
    }
}

/// Multiset of singularity orders with its derived invariants.
///
/// Orders are stored in descending order. Order `0` denotes a marked regular
/// point and is accepted for both kinds; `−1` (a simple pole) only for
/// quadratic differentials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StratumSignature {
    kind: Kind,
    orders: Vec<i32>,
}

impl StratumSignature {
    pub fn new(kind: Kind, mut orders: Vec<i32>) -> Result<Self, PermError> {
        let lowest = match kind {
            Kind::Abelian => 0,
            Kind::Quadratic => -1,
        };
        if let Some(&bad) = orders.iter().find(|&&o| o < lowest) {
            return Err(PermError::Order {
                kind: kind.name(),
                order: bad,
            });
        }
        orders.sort_unstable_by(|a, b| b.cmp(a));
        let total: i32 = orders.iter().sum();
        let valid = match kind {
            Kind::Abelian => total % 2 == 0,
            Kind::Quadratic => (total + 4) % 4 == 0 && total >= -4,
        };
        if !valid {
            return Err(PermError::Degree {
                kind: kind.name(),
                orders,
            });
        }
        Ok(Self { kind, orders })
    }

    pub fn abelian(orders: &[i32]) -> Result<Self, PermError> {
        Self::new(Kind::Abelian, orders.to_vec())
    }

    pub fn quadratic(orders: &[i32]) -> Result<Self, PermError> {
        Self::new(Kind::Quadratic, orders.to_vec())
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_abelian(&self) -> bool {
        self.kind == Kind::Abelian
    }

    /// Orders in descending order, marked points included.
    pub fn orders(&self) -> &[i32] {
        &self.orders
    }

    /// Number of listed singularities (zeros, poles and marked points).
    pub fn num_singularities(&self) -> usize {
        self.orders.len()
    }

    pub fn genus(&self) -> usize {
        let total: i32 = self.orders.iter().sum();
        match self.kind {
            Kind::Abelian => ((total + 2) / 2) as usize,
            Kind::Quadratic => ((total + 4) / 4) as usize,
        }
    }

    /// Complex dimension: `2g + r − 1` (Abelian) or `2g + k − 2` (quadratic).
    pub fn dim(&self) -> usize {
        let g = self.genus();
        match self.kind {
            Kind::Abelian => 2 * g + self.orders.len() - 1,
            Kind::Quadratic => 2 * g + self.orders.len() - 2,
        }
    }

    /// `n = Σ (mᵢ + 1)`, the size of the symmetric group in the Abelian
    /// character formula; equals `dim − 1`.
    pub fn abelian_n(&self) -> usize {
        self.orders.iter().map(|&m| (m + 1) as usize).sum()
    }

    /// Cycle type `(m₁+1, …, m_r+1)` of an Abelian signature.
    pub fn abelian_cycle_type(&self) -> CycleType {
        CycleType::new(self.orders.iter().map(|&m| (m + 1) as usize).collect())
            .expect("orders are non-negative")
    }

    /// Multiplicity `μ_k` of each order `k`.
    pub fn multiplicities(&self) -> BTreeMap<i32, usize> {
        let mut m = BTreeMap::new();
        for &o in &self.orders {
            *m.entry(o).or_insert(0) += 1;
        }
        m
    }

    /// Number of marked regular points (order `0`).
    pub fn marked_points(&self) -> usize {
        self.orders.iter().filter(|&&o| o == 0).count()
    }

    /// The same stratum with marked points removed.
    pub fn without_marked(&self) -> Self {
        Self {
            kind: self.kind,
            orders: self.orders.iter().copied().filter(|&o| o != 0).collect(),
        }
    }
}

impl fmt::Display for StratumSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.orders.len() {
            let o = self.orders[i];
            let mut j = i;
            while j < self.orders.len() && self.orders[j] == o {
                j += 1;
            }
            if j - i == 1 {
                parts.push(o.to_string());
            } else {
                parts.push(format!("{}^{}", o, j - i));
            }
            i = j;
        }
        write!(f, "{}({})", self.kind.letter(), parts.join(","))
    }
}

impl FromStr for StratumSignature {
    type Err = PermError;

    /// Parses `H(3,1)`, `H(1^4)`, `Q(1^3,-1^3)`; whitespace is ignored.
    fn from_str(input: &str) -> Result<Self, PermError> {
        let fail = |reason: &str| PermError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('H') => Kind::Abelian,
            Some('Q') => Kind::Quadratic,
            _ => return Err(fail("expected `H` or `Q`")),
        };
        let rest = chars.as_str();
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| fail("expected parenthesized orders"))?;
        let mut orders = Vec::new();
        if !body.is_empty() {
            for item in body.split(',') {
                let (order, mult) = match item.split_once('^') {
                    Some((o, m)) => (o, m),
                    None => (item, "1"),
                };
                let order: i32 = order
                    .parse()
                    .map_err(|_| fail(&format!("bad order `{order}`")))?;
                let mult: usize = mult
                    .parse()
                    .map_err(|_| fail(&format!("bad multiplicity `{mult}`")))?;
                if mult == 0 {
                    return Err(fail("multiplicity must be positive"));
                }
                orders.extend(std::iter::repeat_n(order, mult));
            }
        }
        Self::new(kind, orders)
    }
}
