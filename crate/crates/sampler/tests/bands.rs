use perm_core::{Permutation, StratumSignature};
use proptest::prelude::*;
use sampler::{pk_exhaustive, pk_random, uncorrelatedness_report, IntegerIet};
use square_tiled::SquareTiledSurface;

fn stratum(text: &str) -> StratumSignature {
    text.parse().unwrap()
}

/// The first return of the vertical flow of a one-cylinder surface of height
/// one to its core circle, cut at a singular corner of the top boundary.
fn return_map(up: &[usize]) -> Option<Vec<usize>> {
    let n = up.len();
    let h = |x: usize| (x + 1) % n;
    let cut = (0..n).find(|&j| up[h(j)] != h(up[j]))?;
    let shift = cut + 1;
    Some(
        (0..n)
            .map(|c| (up[(c + shift) % n] + n - shift) % n)
            .collect(),
    )
}

fn one_cylinder_surface(up: &[usize]) -> SquareTiledSurface {
    SquareTiledSurface::new(
        Permutation::long_cycle(up.len()),
        Permutation::new(up.to_vec()).unwrap(),
    )
    .unwrap()
}

#[test]
fn four_symbol_reversal_with_unit_lengths() {
    let t = IntegerIet::new("0 1 2 3 / 3 2 1 0".parse().unwrap(), vec![1, 1, 1, 1]).unwrap();
    let cells = [3, 2, 1, 0];
    let s = one_cylinder_surface(&cells);
    assert_eq!(t.perm().stratum().to_string(), "H(2)");
    assert_eq!(t.band_count().unwrap(), 2);
    let map = return_map(&cells).unwrap();
    let u = IntegerIet::from_cell_map(&map).unwrap();
    assert_eq!(u.band_count().unwrap(), s.vertical_cylinders().len());
}

#[test]
fn genus_two_grid_proportions() {
    let stats = pk_exhaustive(&stratum("H(2)"), 20).unwrap();
    assert_eq!(stats.total, 20u64.pow(4));
    assert!(
        (stats.proportion(1) - 4.0 / 9.0).abs() < 0.03,
        "{}",
        stats.proportion(1)
    );
    assert!((stats.proportion(2) - 5.0 / 9.0).abs() < 0.03);
    assert!(stats.histogram.keys().all(|&k| (1..=2).contains(&k)));
}

#[test]
fn unit_grid_has_one_point() {
    for name in ["H(2)", "H(1^2)", "Q(1^3,-1^3)", "Q(2,-1^6)"] {
        let stats = pk_exhaustive(&stratum(name), 1).unwrap();
        assert_eq!(stats.total + stats.rejected, 1, "{name}");
    }
}

#[test]
fn random_runs_are_reproducible() {
    let s = stratum("Q(1^3,-1^3)");
    let a = pk_random(&s, 2000, 50, 16, 7).unwrap();
    let b = pk_random(&s, 2000, 50, 16, 7).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.total + a.rejected, 2000);
    let c = pk_random(&s, 2000, 50, 16, 8).unwrap();
    assert_ne!(a.histogram, c.histogram);
    let zero = pk_random(&s, 200, 0, 8, 1).unwrap();
    assert!(zero.histogram.keys().all(|&k| (1..=4).contains(&k)));
}

#[test]
fn genus_two_random_sampling() {
    let stats = pk_random(&stratum("H(2)"), 100_000, 100, 64, 2024).unwrap();
    let p = stats.proportion(1);
    let se = stats.standard_error(1);
    assert!((p - 4.0 / 9.0).abs() < 3.0 * se + 1e-12, "{p} ± {se}");
}

#[test]
fn uncorrelatedness_trend() {
    let s = stratum("H(2)");
    let small = uncorrelatedness_report(&s, 12).unwrap();
    let large = uncorrelatedness_report(&s, 30).unwrap();
    assert!(large.max_deviation < 0.05, "{}", large.max_deviation);
    assert!(large.max_deviation < small.max_deviation);
    for i in 0..large.cylinders.len() {
        for j in 0..large.cylinders.len() {
            assert!((large.deviation[i][j] - large.deviation[j][i]).abs() < 1e-12);
        }
    }
    assert!(uncorrelatedness_report(&s, 1).is_err());
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn bands_are_vertical_cylinders(up in (2usize..=12).prop_flat_map(permutation)) {
        let s = one_cylinder_surface(&up);
        if let Some(map) = return_map(&up) {
            let t = IntegerIet::from_cell_map(&map).unwrap();
            prop_assert_eq!(t.band_count().unwrap(), s.vertical_cylinders().len());
        }
    }

    #[test]
    fn rescaling_keeps_band_count(
        (up, factor) in ((2usize..=10).prop_flat_map(permutation), 2u64..=5)
    ) {
        if let Some(map) = return_map(&up) {
            let t = IntegerIet::from_cell_map(&map).unwrap();
            let scaled = IntegerIet::new(
                t.perm().clone(),
                t.lengths().iter().map(|l| l * factor).collect(),
            ).unwrap();
            prop_assert_eq!(scaled.band_count().unwrap(), t.band_count().unwrap());
        }
    }

    #[test]
    fn generalized_band_counts_respect_the_genus_bound(
        which in 0usize..4,
        lengths in proptest::collection::vec(1u64..=12, 7),
    ) {
        let name = ["Q(1^3,-1^3)", "Q(2,-1^6)", "Q(1^2,-1^2)", "Q(2^2)"][which];
        let s = stratum(name);
        let p = rauzy::representative(&s).unwrap();
        let n = p.num_symbols();
        let mut lengths = lengths[..n].to_vec();
        // repair the balance on the last bottom-only symbol
        let mut balance = vec![0i64; n];
        p.top().iter().for_each(|&x| balance[x] += 1);
        p.bottom().iter().for_each(|&x| balance[x] -= 1);
        let dep = (0..n).rev().find(|&x| balance[x] < 0).unwrap();
        let rest: i64 = (0..n).filter(|&x| x != dep).map(|x| balance[x] / 2 * lengths[x] as i64).sum();
        prop_assume!(rest > 0);
        lengths[dep] = rest as u64;
        let t = IntegerIet::new(p, lengths).unwrap();
        let k = t.band_count().unwrap();
        let bound = s.genus() + s.num_singularities() - 1;
        prop_assert!((1..=bound.max(1)).contains(&k), "{} bands", k);
    }
}

#[test]
fn pole_heavy_dimension_five_sampling() {
    let stats = pk_random(&stratum("Q(2,-1^6)"), 200_000, 500, 256, 42).unwrap();
    let p = stats.proportion(1);
    assert!((p - 0.2472).abs() < 0.01, "{p}");
    assert!((p - 0.2395).abs() < 0.01, "{p}");
}
