use crate::{Census, SquareTiledError};

/// Leading coefficient `c` of `cumulative(N) ≈ (c/2d)·N^d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VolumeFit {
    pub coefficient: f64,
    /// Root mean square of the relative residuals over the fitted points.
    pub relative_residual: f64,
    pub points: usize,
}

/// Least-squares fit of `y ≈ (c/2d)·x^d` through the origin.
pub fn fit_power_law(points: &[(f64, f64)], d: u32) -> Result<VolumeFit, SquareTiledError> {
    if points.len() < 2 {
        return Err(SquareTiledError::InsufficientData {
            needed: 2,
            got: points.len(),
        });
    }
    let scale = 2.0 * d as f64;
    let (num, den) = points.iter().fold((0.0, 0.0), |(a, b), &(x, y)| {
        let basis = x.powi(d as i32) / scale;
        (a + basis * y, b + basis * basis)
    });
    let coefficient = num / den;
    let sq: f64 = points
        .iter()
        .map(|&(x, y)| {
            let model = coefficient * x.powi(d as i32) / scale;
            ((y - model) / model).powi(2)
        })
        .sum();
    Ok(VolumeFit {
        coefficient,
        relative_residual: (sq / points.len() as f64).sqrt(),
        points: points.len(),
    })
}

/// Fit over the upper half `N ∈ [N_max/2, N_max]` of the census, restricted
/// to a number of cylinders when given.
pub fn volume_fit(
    census: &Census,
    d: u32,
    cylinders: Option<usize>,
) -> Result<VolumeFit, SquareTiledError> {
    let n_max = census.n_max();
    let points: Vec<(f64, f64)> = (n_max.div_ceil(2).max(1)..=n_max)
        .map(|n| (n as f64, census.cumulative(n, cylinders) as f64))
        .filter(|&(_, y)| y > 0.0)
        .collect();
    fit_power_law(&points, d)
}
