//! Randomized checks of moves, canonical labels and text round trips.

use proptest::prelude::*;
use rauzy::{rauzy_move, stratum_of, undo_move, GeneralizedPermutation, MoveKind};

fn ordinary() -> impl Strategy<Value = GeneralizedPermutation> {
    (2usize..9)
        .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        .prop_filter_map("reducible", |bottom| {
            GeneralizedPermutation::new((0..bottom.len()).collect(), bottom).ok()
        })
}

fn generalized() -> impl Strategy<Value = GeneralizedPermutation> {
    (2usize..8, 1usize..13)
        .prop_flat_map(|(n, split)| {
            let symbols: Vec<usize> = (0..n).flat_map(|s| [s, s]).collect();
            (Just(split.min(2 * n - 1)), Just(symbols).prop_shuffle())
        })
        .prop_filter_map("invalid", |(split, symbols)| {
            let (top, bottom) = symbols.split_at(split);
            GeneralizedPermutation::new(top.to_vec(), bottom.to_vec())
                .ok()
                .filter(|p| p.try_stratum().is_ok())
        })
}

fn kind() -> impl Strategy<Value = MoveKind> {
    prop::sample::select(MoveKind::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn moves_preserve_invariants(p in prop_oneof![ordinary(), generalized()], k in kind()) {
        if let Ok(q) = rauzy_move(&p, k) {
            prop_assert_eq!(q.num_symbols(), p.num_symbols());
            prop_assert_eq!(stratum_of(&q), stratum_of(&p));
            prop_assert_eq!(q.is_ordinary(), p.is_ordinary());
            prop_assert!(q.is_irreducible());
            prop_assert_eq!(&q, &q.canonical());
            prop_assert_eq!(undo_move(&q, k).unwrap(), p.canonical());
        }
    }

    #[test]
    fn ordinary_moves_always_defined(p in ordinary(), k in kind()) {
        prop_assert!(rauzy_move(&p, k).is_ok());
    }

    #[test]
    fn canonical_and_text(p in prop_oneof![ordinary(), generalized()]) {
        let c = p.canonical();
        prop_assert_eq!(c.canonical(), c.clone());
        prop_assert_eq!(stratum_of(&c), stratum_of(&p));
        prop_assert_eq!(p.to_string().parse::<GeneralizedPermutation>().unwrap(), p.clone());
        prop_assert_eq!(stratum_of(&p.reversed()), stratum_of(&p));
    }
}
