//! Contribution formulas, totals, bounds and hyperelliptic values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use perm_core::StratumSignature;
use volumes::{
    c1_bounds, c1_minimal, c1_principal, c1_total_abelian, contribution_abelian,
    contribution_quadratic, estimate_volume, exact_volume, hyperelliptic_p1, hyperelliptic_volume,
    HyperellipticComponent, SymbolicValue,
};

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

fn stratum(text: &str) -> StratumSignature {
    text.parse().unwrap()
}

/// Even partitions of `2g−2` as descending Abelian strata.
fn abelian_strata(g: usize) -> Vec<StratumSignature> {
    fn parts(rest: usize, max: usize, acc: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            acc.push(p as i32);
            parts(rest - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    parts(2 * g - 2, 2 * g - 2, &mut Vec::new(), &mut out);
    out.iter()
        .map(|o| StratumSignature::abelian(o).unwrap())
        .collect()
}

#[test]
fn abelian_examples() {
    assert_eq!(
        contribution_abelian(3, &stratum("H(2)")).unwrap(),
        SymbolicValue::zeta(q(2, 6), 4)
    );
    assert_eq!(
        contribution_abelian(1, &stratum("H(1,1,1,1)")).unwrap(),
        SymbolicValue::zeta(q(2 * 24, 5040), 9)
    );
    assert!(contribution_abelian(1, &stratum("Q(1,-1)")).is_err());
    assert!(contribution_abelian(0, &stratum("H(2)")).is_err());
}

#[test]
fn quadratic_examples() {
    let s = stratum("Q(1^3,-1^3)");
    let table = [
        ((2, 0, 5, 1), 3),
        ((18, 0, 3, 3), 2),
        ((1, 2, 3, 1), 24),
        ((1, 3, 2, 1), 48),
    ];
    let mut total = SymbolicValue::zero();
    for ((gamma, l, m, n), r) in table {
        let c = contribution_quadratic(gamma, l, m, n, &s).unwrap();
        assert_eq!(c, SymbolicValue::zeta(q(r, 1), 6));
        total = &total + &c;
    }
    assert_eq!(total, SymbolicValue::zeta(q(77, 1), 6));
    assert_eq!(total.to_string(), "77 * zeta(6)");
}

#[test]
fn genus_two_minimal_volume_from_two_diagrams() {
    let s = stratum("H(2)");
    let one_cylinder = contribution_abelian(3, &s).unwrap();
    let two_cylinder = SymbolicValue::zeta(q(2, 6) * q(5, 4), 4);
    let volume = &one_cylinder + &two_cylinder;
    assert_eq!(volume, SymbolicValue::zeta(q(3, 4), 4));
    assert_eq!(volume.normalized(), SymbolicValue::pi_power(q(1, 120), 4));
}

#[test]
fn totals_match_closed_forms() {
    assert_eq!(
        c1_total_abelian(&stratum("H(3,1)")).unwrap(),
        SymbolicValue::zeta(q(1, 15), 7)
    );
    for g in 2..=10usize {
        let minimal = stratum(&format!("H({})", 2 * g - 2));
        let expected = q(4, (2 * g * (2 * g - 1)) as i64);
        assert_eq!(
            c1_total_abelian(&minimal).unwrap(),
            SymbolicValue::zeta(expected, 2 * g as u32),
            "g={g}"
        );
    }
    for g in 2..=6usize {
        let principal = stratum(&format!("H(1^{})", 2 * g - 2));
        let expected = BigRational::new(
            BigInt::from(4),
            BigInt::from(4 * g - 2) * (BigInt::one() << (2 * g - 2)),
        );
        assert_eq!(
            c1_total_abelian(&principal).unwrap(),
            SymbolicValue::zeta(expected, 4 * g as u32 - 3),
            "g={g}"
        );
    }
}

#[test]
fn totals_match_weighted_counts() {
    // c₁ = Σ_D contribution(D) = 2·(Σ_D 1/|Γ(D)|)·∏μ!/(d−2)!·ζ(d)
    for g in 2..=4 {
        for s in abelian_strata(g) {
            let weighted = frobenius::weighted_one_cyl_count(&s).unwrap();
            let unit = contribution_abelian(1, &s).unwrap();
            let expected = unit.scale(&weighted);
            assert_eq!(c1_total_abelian(&s).unwrap(), expected, "{s}");
        }
    }
}

#[test]
fn bounds_for_three_one() {
    let s = stratum("H(3,1)");
    let (lower, upper) = c1_bounds(&s).unwrap();
    assert_eq!(lower, SymbolicValue::zeta(q(1, 16), 7));
    assert_eq!(upper, SymbolicValue::zeta(q(29, 386), 7));
    let exact = c1_total_abelian(&s).unwrap().to_f64();
    assert!(lower.to_f64() < exact && exact < upper.to_f64());
}

#[test]
fn bounds_sandwich_low_genus() {
    for g in 2..=5 {
        for s in abelian_strata(g) {
            let (lower, upper) = c1_bounds(&s).unwrap();
            let exact = c1_total_abelian(&s).unwrap().to_f64();
            assert!(lower.to_f64() <= exact && exact <= upper.to_f64(), "{s}");
        }
    }
}

#[test]
fn bounds_ratio_decreases_to_one() {
    let mut previous = f64::INFINITY;
    for g in 2..=30usize {
        let (lower, upper) = c1_bounds(&stratum(&format!("H({})", 2 * g - 2))).unwrap();
        let ratio = upper.to_f64() / lower.to_f64();
        assert!(ratio > 1.0 && ratio < previous, "g={g}");
        previous = ratio;
    }
    assert!(previous < 1.03);
}

#[test]
fn hyperelliptic_genus_two() {
    let p1 = hyperelliptic_p1(HyperellipticComponent::Minimal, 2).unwrap();
    assert_eq!(p1.normalized().as_rational(), Some(q(4, 9)));
    let vol = hyperelliptic_volume(HyperellipticComponent::Minimal, 2).unwrap();
    assert_eq!(vol, SymbolicValue::pi_power(q(1, 120), 4));

    let p1 = hyperelliptic_p1(HyperellipticComponent::TwoZeros, 2).unwrap();
    let vol = hyperelliptic_volume(HyperellipticComponent::TwoZeros, 2).unwrap();
    assert_eq!(vol, SymbolicValue::pi_power(q(1, 270), 4));
    assert_eq!((&p1 * &vol).normalized(), SymbolicValue::zeta(q(1, 12), 5));
    assert!(hyperelliptic_p1(HyperellipticComponent::Minimal, 1).is_err());
}

#[test]
fn hyperelliptic_product_is_single_diagram_contribution() {
    // the unique one-cylinder diagram of the component has |Γ| = d − 1;
    // swapping the two equal zeros halves the labeled contribution
    for g in 2..=9usize {
        let minimal = stratum(&format!("H({})", 2 * g - 2));
        let d = minimal.dim() as u64;
        let product = &hyperelliptic_p1(HyperellipticComponent::Minimal, g).unwrap()
            * &hyperelliptic_volume(HyperellipticComponent::Minimal, g).unwrap();
        assert_eq!(
            product.normalized(),
            contribution_abelian(d - 1, &minimal).unwrap().normalized()
        );

        let two = stratum(&format!("H({},{})", g - 1, g - 1));
        let d = two.dim() as u64;
        let product = &hyperelliptic_p1(HyperellipticComponent::TwoZeros, g).unwrap()
            * &hyperelliptic_volume(HyperellipticComponent::TwoZeros, g).unwrap();
        let labeled = contribution_abelian(d - 1, &two).unwrap().scale(&q(1, 2));
        assert_eq!(product.normalized(), labeled.normalized(), "g={g}");
    }
}

#[test]
fn volume_estimates() {
    let c1 = SymbolicValue::zeta(q(77, 1), 6);
    let v = estimate_volume(&c1, 0.4366, 0.001).unwrap();
    let in_pi6 = v.value / std::f64::consts::PI.powi(6);
    assert!((in_pi6 - 0.1866).abs() < 5e-5, "{in_pi6}");
    assert!((v.error - v.value * 0.001 / 0.4366).abs() < 1e-9);

    let h2 = SymbolicValue::zeta(q(1, 3), 4);
    assert_eq!(
        exact_volume(&h2, &q(4, 9)).unwrap(),
        SymbolicValue::pi_power(q(1, 120), 4)
    );
    let v = estimate_volume(&h2, 1.0, 0.0).unwrap();
    assert!((v.value - h2.to_f64()).abs() < 1e-15);
    assert!(estimate_volume(&h2, 0.0, 0.0).is_err());
    assert!(estimate_volume(&h2, 1.5, 0.0).is_err());
}

#[test]
fn closed_forms_match_character_sums() {
    for g in 2..=10usize {
        let s = stratum(&format!("H({})", 2 * g - 2));
        assert_eq!(
            c1_minimal(g).unwrap(),
            c1_total_abelian(&s).unwrap(),
            "g={g}"
        );
        let unit = contribution_abelian(1, &s).unwrap();
        let weighted = frobenius::minimal_count(g).unwrap();
        assert_eq!(c1_minimal(g).unwrap(), unit.scale(&weighted), "g={g}");
    }
    for g in 2..=6usize {
        let s = stratum(&format!("H(1^{})", 2 * g - 2));
        assert_eq!(
            c1_principal(g).unwrap(),
            c1_total_abelian(&s).unwrap(),
            "g={g}"
        );
        let unit = contribution_abelian(1, &s).unwrap();
        let weighted = frobenius::principal_count(g).unwrap();
        assert_eq!(c1_principal(g).unwrap(), unit.scale(&weighted), "g={g}");
    }
    assert!(c1_minimal(1).is_err());
}
