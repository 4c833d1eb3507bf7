//! Rauzy classes, standard members and stratum invariance.

use perm_core::StratumSignature;
use rauzy::{
    rauzy_class, rauzy_move, representative, standard_members, stratum_of, undo_move,
    GeneralizedPermutation, MoveKind, RauzyClass, DEFAULT_CLASS_CAP,
};

fn gp(text: &str) -> GeneralizedPermutation {
    text.parse().unwrap()
}

fn reversal(n: usize) -> GeneralizedPermutation {
    GeneralizedPermutation::new((0..n).collect(), (0..n).rev().collect()).unwrap()
}

fn class(seed: &GeneralizedPermutation, left: bool, right: bool) -> RauzyClass {
    rauzy_class(seed, left, right, DEFAULT_CLASS_CAP).unwrap()
}

fn assert_class_invariants(c: &RauzyClass) {
    let s = c.stratum();
    for p in c.members() {
        assert_eq!(stratum_of(p), s, "{p}");
        assert_eq!(p, &p.canonical());
        assert!(p.is_irreducible() && p.is_realizable());
        assert_eq!(p.num_symbols(), c.members()[0].num_symbols());
    }
    assert!(c.is_strongly_connected());
    assert!(c.members().windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn three_zeros_three_poles_class() {
    let seed = gp("0 1 2 3 1 2 3 / 4 4 5 5 6 6 0");
    assert_eq!(stratum_of(&seed).to_string(), "Q(1^3,-1^3)");
    let c = class(&seed, true, true);
    assert_eq!(c.len(), 2010);
    assert_eq!(standard_members(&c).len(), 158);
    assert_class_invariants(&c);
    for text in [
        "0 1 2 3 1 2 3 / 4 5 5 6 6 4 0",
        "0 1 1 2 2 3 3 / 4 5 6 4 5 6 0",
        "0 1 2 2 3 3 1 / 4 5 6 4 5 6 0",
    ] {
        assert!(c.contains(&gp(text)), "{text}");
    }
}

#[test]
fn torus_class() {
    let c = class(&gp("0 1 / 1 0"), false, true);
    assert_eq!(c.len(), 1);
    assert_eq!(standard_members(&c).len(), 1);
    assert_eq!(c.stratum().to_string(), "H(0)");
}

#[test]
fn hyperelliptic_right_classes_have_size_two_to_n_minus_one_minus_one() {
    for n in 2..=9 {
        let c = class(&reversal(n), false, true);
        assert_eq!(c.len(), (1 << (n - 1)) - 1, "n={n}");
        assert_class_invariants(&c);
    }
}

#[test]
fn genus_two_classes() {
    let c = class(&gp("0 1 2 3 / 3 2 1 0"), false, true);
    assert_eq!(c.len(), 7);
    assert_eq!(c.stratum().to_string(), "H(2)");
    let standard: Vec<String> = standard_members(&c).iter().map(|p| p.to_string()).collect();
    assert_eq!(
        standard,
        [
            "0 1 2 3 / 1 3 2 0",
            "0 1 2 3 / 2 1 3 0",
            "0 1 2 3 / 3 2 1 0"
        ]
    );
    let both = class(&gp("0 1 2 3 / 3 2 1 0"), true, true);
    assert_eq!(both.len(), 7);
}

#[test]
fn seeds_in_one_class_give_identical_classes() {
    for seed in [
        gp("0 1 2 3 4 5 / 5 4 3 2 1 0"),
        gp("0 1 2 3 4 5 / 3 2 5 4 1 0"),
    ] {
        let c = class(&seed, true, true);
        for p in c.members().iter().step_by(7) {
            let other = class(p, true, true);
            assert_eq!(other.members(), c.members());
        }
    }
}

#[test]
fn backward_moves_invert_moves() {
    let seeds = [
        gp("0 1 2 3 4 5 / 3 2 5 4 1 0"),
        gp("0 1 2 3 1 2 3 / 4 4 5 5 6 6 0"),
        gp("0 0 1 / 1 2 2"),
    ];
    for seed in seeds {
        let c = class(&seed, true, true);
        for p in c.members() {
            for kind in MoveKind::ALL {
                if let Ok(q) = rauzy_move(p, kind) {
                    assert_eq!(&undo_move(&q, kind).unwrap(), p, "{p} {}", kind.name());
                }
            }
        }
    }
}

#[test]
fn representatives_land_in_their_strata() {
    let mut strata: Vec<String> = vec![
        "H(0)",
        "H(2)",
        "H(1,1)",
        "H(4)",
        "H(3,1)",
        "H(2,2)",
        "H(2,1,1)",
        "H(1^4)",
        "H(6)",
        "H(1^6)",
        "H(8)",
        "H(1^8)",
        "H(10)",
        "H(1^10)",
        "H(2,0)",
        "H(0^3)",
        "Q(2,-1^2)",
        "Q(1^3,-1^3)",
        "Q(-1^4)",
        "Q(1,-1^5)",
        "Q(2,-1^6)",
        "Q(5,-1)",
        "Q(2,2)",
        "Q(1^2,2,-1^4)",
        "Q(6,-1^2)",
        "Q(1^4)",
        "Q(8)",
        "Q(2,1,1)",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    strata.push("Q(12)".into());
    for text in strata {
        let s: StratumSignature = text.parse().unwrap();
        let p = representative(&s).unwrap_or_else(|e| panic!("{text}: {e}"));
        assert_eq!(stratum_of(&p), s, "{text}");
        assert!(p.is_standard());
    }
}

#[test]
fn catalogue_entries() {
    let s: StratumSignature = "H(1,1,1,1)".parse().unwrap();
    assert_eq!(
        representative(&s).unwrap(),
        gp("0 1 2 3 4 5 6 7 8 / 4 3 2 5 8 7 6 1 0")
    );
    let s: StratumSignature = "H(0)".parse().unwrap();
    assert_eq!(representative(&s).unwrap(), gp("0 1 / 1 0"));
}

#[test]
fn empty_quadratic_strata_have_no_representative() {
    for text in ["Q(1,-1)", "Q(4)", "Q(3,1)"] {
        let s: StratumSignature = text.parse().unwrap();
        assert!(representative(&s).is_err(), "{text}");
    }
}
