use perm_core::{Kind, StratumSignature};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{GeneralizedPermutation, RauzyError};

/// Random trials before the search for a quadratic representative gives up.
pub const SEARCH_TRIALS: usize = 200_000;

const CATALOGUE: &[(&str, &str)] = &[
    ("H(0)", "0 1 / 1 0"),
    ("H(1^4)", "0 1 2 3 4 5 6 7 8 / 4 3 2 5 8 7 6 1 0"),
    ("Q(1^3,-1^3)", "0 1 2 3 1 2 3 / 4 4 5 5 6 6 0"),
];

/// A standard permutation whose suspension lies in `s`.
///
/// Abelian strata are reached by drawing permutations `σ` of the cycle type
/// `(m₁+1,…,m_r+1)` until `T·σ⁻¹` is a long cycle, `T` being the cyclic
/// order of the top boundary of a single cylinder. Quadratic strata are
/// reached by random one-cylinder gluings.
pub fn representative(s: &StratumSignature) -> Result<GeneralizedPermutation, RauzyError> {
    for (name, perm) in CATALOGUE {
        if name.parse::<StratumSignature>().ok().as_ref() == Some(s) {
            return Ok(perm.parse().expect("catalogue entries are valid"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let found = match s.kind() {
        Kind::Abelian => abelian_search(s, &mut rng),
        Kind::Quadratic => quadratic_search(s, &mut rng),
    };
    found.ok_or_else(|| RauzyError::NotFound(s.to_string()))
}

fn abelian_search(s: &StratumSignature, rng: &mut ChaCha8Rng) -> Option<GeneralizedPermutation> {
    let lengths: Vec<usize> = s.orders().iter().map(|&m| m as usize + 1).collect();
    let n: usize = lengths.iter().sum();
    let mut labels: Vec<usize> = (0..n).collect();
    for _ in 0..SEARCH_TRIALS {
        labels.shuffle(rng);
        let mut sigma_inv = vec![0; n];
        let mut start = 0;
        for &len in &lengths {
            let cycle = &labels[start..start + len];
            for k in 0..len {
                sigma_inv[cycle[(k + 1) % len]] = cycle[k];
            }
            start += len;
        }
        // bottom successor map B = T∘σ⁻¹
        let next = |x: usize| (sigma_inv[x] + 1) % n;
        let mut bottom = Vec::with_capacity(n + 1);
        let mut x = 0;
        loop {
            bottom.push(x + 1);
            x = next(x);
            if x == 0 {
                break;
            }
        }
        if bottom.len() != n {
            continue;
        }
        bottom.push(0);
        let top: Vec<usize> = (0..=n).collect();
        if let Ok(p) = GeneralizedPermutation::new(top, bottom) {
            if &p.stratum() == s {
                return Some(p.canonical());
            }
        }
    }
    None
}

fn quadratic_search(s: &StratumSignature, rng: &mut ChaCha8Rng) -> Option<GeneralizedPermutation> {
    let d = s.dim();
    if d < 2 {
        return None;
    }
    for _ in 0..SEARCH_TRIALS {
        let m = rng.random_range(1..d);
        let n = rng.random_range(1..=d - m);
        let l = d - m - n;
        let mut top: Vec<usize> = (1..=l)
            .chain((l + 1..=l + m).flat_map(|x| [x, x]))
            .collect();
        let mut bottom: Vec<usize> = (1..=l)
            .chain((l + m + 1..=l + m + n).flat_map(|x| [x, x]))
            .collect();
        top.shuffle(rng);
        bottom.shuffle(rng);
        top.insert(0, 0);
        bottom.push(0);
        if let Ok(p) = GeneralizedPermutation::new(top, bottom) {
            if &p.stratum() == s {
                return Some(p.canonical());
            }
        }
    }
    None
}
