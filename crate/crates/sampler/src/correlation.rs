use std::collections::BTreeMap;

use perm_core::StratumSignature;
use serde::{Deserialize, Serialize};
use square_tiled::{Census, Strategy};

use crate::SamplerError;

/// Joint and marginal frequencies of horizontal and vertical cylinder
/// counts over all square-tiled surfaces with at most `n_max` squares.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UncorrelatednessReport {
    pub stratum: String,
    pub n_max: usize,
    pub surfaces: u64,
    /// Cylinder counts indexing rows and columns.
    pub cylinders: Vec<usize>,
    pub horizontal: Vec<f64>,
    pub vertical: Vec<f64>,
    pub joint: Vec<Vec<f64>>,
    /// `|p(i, j) − p_i·p_j|`.
    pub deviation: Vec<Vec<f64>>,
    pub max_deviation: f64,
}

/// Uncorrelatedness experiment on the census of `s`; `H(2)` uses the
/// explicit cylinder construction, other strata the exhaustive census.
pub fn uncorrelatedness_report(
    s: &StratumSignature,
    n_max: usize,
) -> Result<UncorrelatednessReport, SamplerError> {
    let strategy = if s.is_abelian() && s.orders() == [2] {
        Strategy::GenusTwoConstruction
    } else {
        Strategy::Canonical
    };
    let census = Census::enumerate(s, n_max, strategy)?;
    let joint: &BTreeMap<(usize, usize), u64> = census.joint().expect("joint counts recorded");
    let surfaces: u64 = joint.values().sum();
    if surfaces == 0 {
        return Err(SamplerError::NoSurfaces {
            stratum: s.to_string(),
            n_max,
        });
    }
    let cylinders: Vec<usize> = {
        let mut c: Vec<usize> = joint.keys().flat_map(|&(i, j)| [i, j]).collect();
        c.sort_unstable();
        c.dedup();
        c
    };
    let total = surfaces as f64;
    let freq = |i: usize, j: usize| joint.get(&(i, j)).copied().unwrap_or(0) as f64 / total;
    let joint_matrix: Vec<Vec<f64>> = cylinders
        .iter()
        .map(|&i| cylinders.iter().map(|&j| freq(i, j)).collect())
        .collect();
    let horizontal: Vec<f64> = joint_matrix.iter().map(|row| row.iter().sum()).collect();
    let vertical: Vec<f64> = (0..cylinders.len())
        .map(|j| joint_matrix.iter().map(|row| row[j]).sum())
        .collect();
    let deviation: Vec<Vec<f64>> = joint_matrix
        .iter()
        .enumerate()
        .map(|(a, row)| {
            row.iter()
                .enumerate()
                .map(|(b, &p)| (p - horizontal[a] * vertical[b]).abs())
                .collect()
        })
        .collect();
    let max_deviation = deviation.iter().flatten().copied().fold(0.0, f64::max);
    Ok(UncorrelatednessReport {
        stratum: s.to_string(),
        n_max,
        surfaces,
        cylinders,
        horizontal,
        vertical,
        joint: joint_matrix,
        deviation,
        max_deviation,
    })
}
