//! One-cylinder separatrix diagrams: grouping of standard permutations into
//! orbits of relabelings, symmetry orders, `(l, m, n)` types and weighted
//! counts.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use perm_core::{Kind, StratumSignature};
use rauzy::{standard_members, GeneralizedPermutation, RauzyClass};
use rayon::prelude::*;
use volumes::{contribution_abelian, contribution_quadratic, SymbolicValue, VolumeError};

#[derive(Debug, thiserror::Error)]
pub enum DiagramError {
    #[error("permutation `{0}` is not standard")]
    NotStandard(String),
    #[error("permutations from different strata: {0} and {1}")]
    MixedStrata(String, String),
    #[error("enumeration of dimension {0} is too large")]
    TooLarge(usize),
    #[error(transparent)]
    Volume(#[from] VolumeError),
}

/// Counts `(l, m, n)` of a one-cylinder diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lmn {
    /// Saddle connections on both boundaries.
    pub l: usize,
    /// Saddle connections occurring twice on the top boundary.
    pub m: usize,
    /// Saddle connections occurring twice on the bottom boundary.
    pub n: usize,
}

impl Lmn {
    pub fn new(l: usize, m: usize, n: usize) -> Self {
        Lmn { l, m, n }
    }

    /// Equal up to exchanging `m` and `n`.
    pub fn matches_unordered(&self, other: &Lmn) -> bool {
        self.l == other.l
            && ((self.m == other.m && self.n == other.n)
                || (self.m == other.n && self.n == other.m))
    }
}

/// An orbit of standard permutations describing one diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatrixDiagram {
    kind: Kind,
    canonical_rep: GeneralizedPermutation,
    orbit_size: usize,
    symmetry_order: u64,
    lmn: Option<Lmn>,
    stratum: StratumSignature,
}

impl SeparatrixDiagram {
    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Lexicographically smallest member of the orbit.
    pub fn canonical_rep(&self) -> &GeneralizedPermutation {
        &self.canonical_rep
    }

    pub fn orbit_size(&self) -> usize {
        self.orbit_size
    }

    /// Order `|Γ|` of the symmetry group.
    pub fn symmetry_order(&self) -> u64 {
        self.symmetry_order
    }

    /// `None` for Abelian diagrams.
    pub fn lmn(&self) -> Option<Lmn> {
        self.lmn
    }

    pub fn stratum(&self) -> &StratumSignature {
        &self.stratum
    }

    /// Exact contribution to the volume of the stratum.
    pub fn contribution(&self) -> Result<SymbolicValue, DiagramError> {
        Ok(match self.lmn {
            None => contribution_abelian(self.symmetry_order, &self.stratum)?,
            Some(Lmn { l, m, n }) => {
                contribution_quadratic(self.symmetry_order, l, m, n, &self.stratum)?
            }
        })
    }

    /// JSON record with the contribution as `{"coeff": "p/q", "zeta": d}`.
    pub fn to_json(&self) -> Result<serde_json::Value, DiagramError> {
        let d = self.stratum.dim();
        let coeff = self
            .contribution()?
            .as_zeta_multiple(d as u32)
            .expect("single zeta term");
        let (l, m, n) = match self.lmn {
            Some(Lmn { l, m, n }) => (Some(l), Some(m), Some(n)),
            None => (None, None, None),
        };
        Ok(serde_json::json!({
            "stratum": self.stratum.to_string(),
            "canonical_rep": self.canonical_rep.to_string(),
            "orbit_size": self.orbit_size,
            "symmetry_order": self.symmetry_order,
            "l": l,
            "m": m,
            "n": n,
            "contribution": {
                "coeff": format!("{}/{}", coeff.numer(), coeff.denom()),
                "zeta": d,
            },
        }))
    }
}

/// `(l, m, n)` of a standard permutation, ignoring the distinguished symbol;
/// `None` for ordinary permutations.
pub fn lmn_of(p: &GeneralizedPermutation) -> Result<Option<Lmn>, DiagramError> {
    if !p.is_standard() {
        return Err(DiagramError::NotStandard(p.to_string()));
    }
    if p.is_ordinary() {
        return Ok(None);
    }
    let (top, bottom) = stripped(p);
    let n_sym = p.num_symbols();
    let mut in_top = vec![0usize; n_sym];
    let mut in_bottom = vec![0usize; n_sym];
    top.iter().for_each(|&s| in_top[s] += 1);
    bottom.iter().for_each(|&s| in_bottom[s] += 1);
    let mut lmn = Lmn::new(0, 0, 0);
    for s in 0..n_sym {
        match (in_top[s], in_bottom[s]) {
            (1, 1) => lmn.l += 1,
            (2, 0) => lmn.m += 1,
            (0, 2) => lmn.n += 1,
            _ => {}
        }
    }
    Ok(Some(lmn))
}

fn stripped(p: &GeneralizedPermutation) -> (&[usize], &[usize]) {
    let bottom = p.bottom();
    (&p.top()[1..], &bottom[..bottom.len() - 1])
}

fn rotated(row: &[usize], k: usize) -> impl Iterator<Item = usize> + '_ {
    row[k..].iter().chain(&row[..k]).copied()
}

fn assemble(
    mark: usize,
    top: impl Iterator<Item = usize>,
    bottom: impl Iterator<Item = usize>,
) -> GeneralizedPermutation {
    let top: Vec<usize> = std::iter::once(mark).chain(top).collect();
    let bottom: Vec<usize> = bottom.chain(std::iter::once(mark)).collect();
    GeneralizedPermutation::checked(top, bottom)
        .expect("relabelings preserve validity")
        .canonical()
}

/// Images of a standard permutation under all relabelings: independent
/// rotations of both rows, and for quadratic permutations also the exchange
/// of the rows. Returns the images (with repetition) and their number.
fn images(p: &GeneralizedPermutation) -> Vec<GeneralizedPermutation> {
    let mark = p.top()[0];
    let (top, bottom) = stripped(p);
    let swaps: &[bool] = if p.is_ordinary() {
        &[false]
    } else {
        &[false, true]
    };
    let mut out = Vec::with_capacity(top.len() * bottom.len() * swaps.len());
    for &swap in swaps {
        let (a, b) = if swap { (bottom, top) } else { (top, bottom) };
        for i in 0..a.len() {
            for j in 0..b.len() {
                out.push(assemble(mark, rotated(a, i), rotated(b, j)));
            }
        }
    }
    out
}

/// The orbit of a standard permutation, sorted.
pub fn orbit(p: &GeneralizedPermutation) -> Result<Vec<GeneralizedPermutation>, DiagramError> {
    if !p.is_standard() {
        return Err(DiagramError::NotStandard(p.to_string()));
    }
    let set: BTreeSet<_> = images(&p.canonical()).into_iter().collect();
    Ok(set.into_iter().collect())
}

/// Partitions standard permutations of one stratum into diagrams, sorted by
/// canonical representative.
pub fn group_standard(
    perms: &[GeneralizedPermutation],
) -> Result<Vec<SeparatrixDiagram>, DiagramError> {
    let Some(first) = perms.first() else {
        return Ok(Vec::new());
    };
    let stratum = first.stratum();
    let mut remaining: BTreeSet<GeneralizedPermutation> = BTreeSet::new();
    for p in perms {
        if !p.is_standard() {
            return Err(DiagramError::NotStandard(p.to_string()));
        }
        let s = p.stratum();
        if s != stratum {
            return Err(DiagramError::MixedStrata(
                stratum.to_string(),
                s.to_string(),
            ));
        }
        remaining.insert(p.canonical());
    }
    let mut out = Vec::new();
    while let Some(p) = remaining.pop_first() {
        let all = images(&p);
        let group_order = all.len();
        let members: BTreeSet<_> = all.into_iter().collect();
        for q in &members {
            remaining.remove(q);
        }
        let rep = members.first().expect("orbit contains p").clone();
        out.push(SeparatrixDiagram {
            kind: stratum.kind(),
            lmn: lmn_of(&rep)?,
            orbit_size: members.len(),
            symmetry_order: (group_order / members.len()) as u64,
            canonical_rep: rep,
            stratum: stratum.clone(),
        });
    }
    out.sort_by(|a, b| a.canonical_rep.cmp(&b.canonical_rep));
    Ok(out)
}

/// Diagrams of the standard members of a class.
pub fn diagrams_of_class(class: &RauzyClass) -> Result<Vec<SeparatrixDiagram>, DiagramError> {
    group_standard(&standard_members(class))
}

/// Largest number of symbols accepted by [`standard_permutations`].
pub const MAX_ENUMERATION_SYMBOLS: usize = 10;

/// All canonical standard permutations with `symbols` symbols, grouped by
/// stratum. Abelian: every ordinary standard permutation. Quadratic: every
/// non-ordinary realizable one with a suspension.
pub fn standard_permutations(
    kind: Kind,
    symbols: usize,
) -> Result<BTreeMap<StratumSignature, Vec<GeneralizedPermutation>>, DiagramError> {
    if symbols > MAX_ENUMERATION_SYMBOLS {
        return Err(DiagramError::TooLarge(symbols));
    }
    if symbols < 2 {
        return Ok(BTreeMap::new());
    }
    let perms: Vec<GeneralizedPermutation> = match kind {
        Kind::Abelian => abelian_candidates(symbols),
        Kind::Quadratic => quadratic_candidates(symbols),
    };
    let mut out: BTreeMap<StratumSignature, Vec<GeneralizedPermutation>> = BTreeMap::new();
    for (s, p) in perms
        .into_par_iter()
        .filter_map(|p| p.try_stratum().ok().map(|s| (s, p)))
        .collect::<Vec<_>>()
    {
        out.entry(s).or_default().push(p);
    }
    for v in out.values_mut() {
        v.sort();
    }
    Ok(out)
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

fn abelian_candidates(symbols: usize) -> Vec<GeneralizedPermutation> {
    let rest: Vec<usize> = (1..symbols).collect();
    permutations_of(&rest)
        .into_iter()
        .map(|mut bottom| {
            bottom.push(0);
            GeneralizedPermutation::checked((0..symbols).collect(), bottom)
                .expect("ordinary standard permutation")
                .canonical()
        })
        .collect()
}

/// Perfect matchings of `0..2k`, as a symbol per position.
fn matchings(positions: usize) -> Vec<Vec<usize>> {
    fn extend(slots: &mut Vec<Option<usize>>, next: usize, out: &mut Vec<Vec<usize>>) {
        let Some(first) = slots.iter().position(Option::is_none) else {
            out.push(slots.iter().map(|s| s.unwrap()).collect());
            return;
        };
        slots[first] = Some(next);
        for j in first + 1..slots.len() {
            if slots[j].is_none() {
                slots[j] = Some(next);
                extend(slots, next + 1, out);
                slots[j] = None;
            }
        }
        slots[first] = None;
    }
    let mut out = Vec::new();
    extend(&mut vec![None; positions], 1, &mut out);
    out
}

fn quadratic_candidates(symbols: usize) -> Vec<GeneralizedPermutation> {
    let positions = 2 * (symbols - 1);
    let all = matchings(positions);
    (1..positions)
        .into_par_iter()
        .flat_map_iter(|split| {
            all.iter().filter_map(move |word| {
                let top = std::iter::once(0)
                    .chain(word[..split].iter().copied())
                    .collect();
                let bottom = word[split..]
                    .iter()
                    .copied()
                    .chain(std::iter::once(0))
                    .collect();
                let p = GeneralizedPermutation::checked(top, bottom).ok()?;
                (!p.is_ordinary()).then(|| p.canonical())
            })
        })
        .collect()
}

/// Diagrams of a stratum from the enumeration of its standard permutations.
pub fn diagrams_of_stratum(s: &StratumSignature) -> Result<Vec<SeparatrixDiagram>, DiagramError> {
    let symbols = match s.kind() {
        Kind::Abelian => s.dim(),
        Kind::Quadratic => s.dim() + 1,
    };
    let mut all = standard_permutations(s.kind(), symbols)?;
    group_standard(&all.remove(s).unwrap_or_default())
}

/// `Σ 1/|Γ|`, optionally restricted to diagrams of type `(l, {m, n})`.
pub fn weighted_count(diagrams: &[SeparatrixDiagram], lmn: Option<Lmn>) -> BigRational {
    diagrams
        .iter()
        .filter(|d| match (lmn, d.lmn) {
            (None, _) => true,
            (Some(want), Some(have)) => want.matches_unordered(&have),
            (Some(_), None) => false,
        })
        .map(|d| BigRational::new(BigInt::from(1), BigInt::from(d.symmetry_order)))
        .fold(BigRational::zero(), |a, b| a + b)
}

/// Sum of the contributions of the diagrams.
pub fn total_contribution(diagrams: &[SeparatrixDiagram]) -> Result<SymbolicValue, DiagramError> {
    let mut total = SymbolicValue::zero();
    for d in diagrams {
        total = &total + &d.contribution()?;
    }
    Ok(total)
}
