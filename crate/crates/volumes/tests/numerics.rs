//! Zeta and multiple zeta numerics against closed forms and naive sums.

use std::f64::consts::PI;

use num_rational::BigRational;
use volumes::{mzv_numeric, zeta_numeric, zeta_series, Factor, SymbolicValue, VolumeError};

fn mzv(args: &[u32]) -> f64 {
    mzv_numeric(args, 1e-14).unwrap()
}

fn z(k: u32) -> f64 {
    zeta_numeric(k, 1e-15).unwrap()
}

/// Naive double sum `Σ_{a<b≤N} a^{−s}b^{−t}` with the tail of the outer
/// sum estimated by its integral; accurate to about `ln N / N²` plus `1/N`
/// when the first argument is 1.
fn naive_depth_two(s: u32, t: u32, n: usize) -> f64 {
    let mut inner = 0.0;
    let mut total = 0.0;
    for b in 1..=n {
        total += inner / (b as f64).powi(t as i32);
        inner += 1.0 / (b as f64).powi(s as i32);
    }
    total + inner * (n as f64).powi(1 - t as i32) / (t as f64 - 1.0)
}

#[test]
fn even_values_match_bernoulli_closed_forms() {
    assert!((z(2) - PI.powi(2) / 6.0).abs() < 1e-14);
    assert!((z(4) - PI.powi(4) / 90.0).abs() < 1e-12);
    assert!((z(6) - PI.powi(6) / 945.0).abs() < 1e-14);
    assert!((z(12) - 691.0 * PI.powi(12) / 638512875.0).abs() < 1e-14);
}

#[test]
fn odd_values_match_reference_digits() {
    assert!((z(3) - 1.2020569031595942).abs() < 1e-15);
    assert!((z(5) - 1.036_927_755_143_37).abs() < 1e-15);
    assert!((z(7) - 1.0083492773819228).abs() < 1e-15);
}

#[test]
fn doubling_series_length_stays_within_error_bound() {
    for k in [2u32, 3, 5, 7, 9, 11] {
        for n in [2usize, 4, 8, 16, 32] {
            let a = zeta_series(k, n);
            let b = zeta_series(k, 2 * n);
            assert!(
                (a.value - b.value).abs() <= a.error,
                "k={k} n={n}: {} vs {} (bound {})",
                a.value,
                b.value,
                a.error
            );
        }
    }
}

#[test]
fn divergent_arguments_rejected() {
    assert!(matches!(
        zeta_numeric(1, 1e-10),
        Err(VolumeError::Divergent(_))
    ));
    assert!(matches!(
        mzv_numeric(&[3, 1], 1e-10),
        Err(VolumeError::Divergent(_))
    ));
    assert!(matches!(
        mzv_numeric(&[], 1e-10),
        Err(VolumeError::Divergent(_))
    ));
    assert!(matches!(
        mzv_numeric(&[0, 2], 1e-10),
        Err(VolumeError::Divergent(_))
    ));
}

#[test]
fn depth_one_agrees_with_zeta() {
    for k in 2..=12 {
        assert!((mzv(&[k]) - z(k)).abs() < 1e-13, "k={k}");
    }
}

#[test]
fn argument_order_convention() {
    // the larger summation index carries the last argument
    assert!((mzv(&[1, 3]) - z(4) / 4.0).abs() < 1e-8);
    assert!((mzv(&[2, 2]) - 3.0 * z(4) / 4.0).abs() < 1e-8);
    assert!((2.0 * mzv(&[1, 3]) + mzv(&[2, 2]) - 5.0 * z(4) / 4.0).abs() < 1e-8);
    assert!((mzv(&[1, 2]) - z(3)).abs() < 1e-13);
}

#[test]
fn classical_identities() {
    // stuffle: ζ(a)ζ(b) = ζ(a,b) + ζ(b,a) + ζ(a+b)
    for (a, b) in [(2u32, 3u32), (2, 5), (3, 4), (3, 3), (4, 5)] {
        let lhs = z(a) * z(b);
        let rhs = mzv(&[a, b]) + mzv(&[b, a]) + z(a + b);
        assert!((lhs - rhs).abs() < 1e-12, "({a},{b})");
    }
    assert!((mzv(&[1, 5]) - (0.75 * z(6) - 0.5 * z(3) * z(3))).abs() < 1e-12);
    assert!((mzv(&[2, 4]) - (z(3) * z(3) - 4.0 * PI.powi(6) / 2835.0)).abs() < 1e-12);
    assert!((mzv(&[1, 1, 2]) - z(4)).abs() < 1e-12);
    assert!((mzv(&[1, 1, 3]) - (2.0 * z(5) - z(2) * z(3))).abs() < 1e-12);
}

#[test]
fn agrees_with_naive_nested_sums() {
    for (s, t) in [(1u32, 2u32), (1, 3), (2, 2), (2, 3), (3, 2), (1, 6), (4, 3)] {
        let naive = naive_depth_two(s, t, 200_000);
        assert!((mzv(&[s, t]) - naive).abs() < 2e-5, "({s},{t}): {naive}");
    }
}

#[test]
fn zeta_polynomial_identity() {
    let lhs = 140.0 * z(6) + 120.0 * z(2) * z(4) + 28.0 * z(2).powi(3);
    assert!((lhs - PI.powi(6) / 2.0).abs() < 1e-10);

    let q = |n: i64| BigRational::from_integer(n.into());
    let symbolic = &(&SymbolicValue::zeta(q(140), 6)
        + &SymbolicValue::term(q(120), Factor::new(vec![2, 4], 0)))
        + &SymbolicValue::term(q(28), Factor::new(vec![2, 2, 2], 0));
    assert_eq!(
        symbolic.normalized(),
        SymbolicValue::pi_power(BigRational::new(1.into(), 2.into()), 6)
    );
}

#[test]
fn two_zeros_genus_three_proportions() {
    let z6 = z(6);
    let p1 = 3.0 * z(7) / (16.0 * z6);
    let p2 = (55.0 * mzv(&[1, 6])
        + 29.0 * mzv(&[2, 5])
        + 15.0 * mzv(&[3, 4])
        + 8.0 * mzv(&[4, 3])
        + 4.0 * mzv(&[5, 2]))
        / (16.0 * z6);
    let p3 = (12.0 * z6 - 12.0 * z(7)
        + 48.0 * z(4) * mzv(&[1, 2])
        + 48.0 * z(3) * mzv(&[1, 3])
        + 24.0 * z(2) * mzv(&[1, 4])
        + 6.0 * mzv(&[1, 5])
        - 250.0 * mzv(&[1, 6])
        - 6.0 * z(3) * mzv(&[2, 2])
        - 5.0 * z(2) * mzv(&[2, 3])
        + 6.0 * mzv(&[2, 4])
        - 52.0 * mzv(&[2, 5])
        + 6.0 * mzv(&[3, 3])
        - 82.0 * mzv(&[3, 4])
        + 6.0 * mzv(&[4, 2])
        - 54.0 * mzv(&[4, 3])
        + 6.0 * mzv(&[5, 2])
        + 120.0 * mzv(&[1, 1, 5])
        - 30.0 * mzv(&[1, 2, 4])
        - 120.0 * mzv(&[1, 3, 3])
        - 120.0 * mzv(&[1, 4, 2])
        - 54.0 * mzv(&[2, 1, 4])
        - 34.0 * mzv(&[2, 2, 3])
        - 29.0 * mzv(&[2, 3, 2])
        - 88.0 * mzv(&[3, 1, 3])
        - 34.0 * mzv(&[3, 2, 2])
        - 48.0 * mzv(&[4, 1, 2]))
        / (32.0 * z6);
    let p4 = z(2) / (8.0 * z6)
        * (z(4) - z(5) + mzv(&[1, 3]) + mzv(&[2, 2]) - mzv(&[2, 3]) - mzv(&[3, 2]));
    for (value, expected) in [(p1, 0.19), (p2, 0.47), (p3, 0.30), (p4, 0.04)] {
        assert!((value - expected).abs() < 0.005, "{value} vs {expected}");
    }
    assert!(
        (p1 + p2 + p3 + p4 - 1.0).abs() < 1e-9,
        "sum {}",
        p1 + p2 + p3 + p4
    );
}
