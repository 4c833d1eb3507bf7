//! Algebraic properties of partition polynomials and the assemblies.

use std::collections::HashMap;
use std::sync::OnceLock;

use genfun::{abelian_f, quadratic_f, quadratic_g, PartitionPolynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn small_polynomial() -> impl Strategy<Value = PartitionPolynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, 0..4), -5i64..6), 0..5).prop_map(
        |terms| {
            let mut p = PartitionPolynomial::zero('p');
            for (mono, c) in terms {
                let mut m = mono;
                while m.last() == Some(&0) {
                    m.pop();
                }
                p.add_term(m, BigRational::from_integer(BigInt::from(c)));
            }
            p
        },
    )
}

fn assemblies() -> &'static HashMap<(usize, usize, usize), PartitionPolynomial> {
    static CACHE: OnceLock<HashMap<(usize, usize, usize), PartitionPolynomial>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut out = HashMap::new();
        for l in 0..=2 {
            for m in 1..=3 {
                for n in 1..=3 {
                    out.insert((l, m, n), quadratic_f(l, m, n).unwrap());
                }
            }
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn leibniz_rule(a in small_polynomial(), b in small_polynomial(), i in 1usize..4) {
        let lhs = (&a * &b).derivative(i);
        let rhs = &(&a.derivative(i) * &b) + &(&a * &b.derivative(i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_commutes(a in small_polynomial(), b in small_polynomial()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn assemblies_symmetric_and_homogeneous(l in 0usize..=2, m in 1usize..=3, n in 1usize..=3) {
        let f = &assemblies()[&(l, m, n)];
        prop_assert_eq!(f, &assemblies()[&(l, n, m)]);
        prop_assert_eq!(f.homogeneous_weight(), Some(2 * (l + m + n)));
        prop_assert!(f.terms().all(|(_, c)| c > &BigRational::zero()));
    }

    #[test]
    fn series_weights(n in 1usize..=7) {
        prop_assert_eq!(abelian_f(n).unwrap().homogeneous_weight(), Some(n));
        prop_assert_eq!(quadratic_g(n.min(5)).unwrap().homogeneous_weight(), Some(2 * n.min(5)));
    }
}
