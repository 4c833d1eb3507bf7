//! Published polynomials and excerpts, transcribed as `(coefficient, monomial)`.

use genfun::{
    abelian_f, quadratic_f, stratum_monomial, weighted_from_rooted, weighted_lmn_count,
    PartitionPolynomial, RootedContext,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use perm_core::StratumSignature;

fn ratio(text: &str) -> BigRational {
    match text.split_once('/') {
        Some((a, b)) => {
            BigRational::new(a.parse::<BigInt>().unwrap(), b.parse::<BigInt>().unwrap())
        }
        None => BigRational::from_integer(text.parse::<BigInt>().unwrap()),
    }
}

/// Parses `"p1^3 p4 p2"` into the exponent vector of that monomial.
fn monomial(text: &str) -> Vec<u32> {
    let mut parts = Vec::new();
    for factor in text.split_whitespace() {
        let body = &factor[1..];
        let (index, exp) = match body.split_once('^') {
            Some((i, e)) => (i.parse::<usize>().unwrap(), e.parse::<usize>().unwrap()),
            None => (body.parse::<usize>().unwrap(), 1),
        };
        parts.extend(std::iter::repeat_n(index, exp));
    }
    PartitionPolynomial::monomial_of_parts(&parts)
}

fn polynomial(var: char, terms: &[(&str, &str)]) -> PartitionPolynomial {
    let mut p = PartitionPolynomial::zero(var);
    for (c, m) in terms {
        p.add_term(monomial(m), ratio(c));
    }
    p
}

fn assert_excerpt(f: &PartitionPolynomial, excerpt: &[(&str, &str)]) {
    for (c, m) in excerpt {
        assert_eq!(f.coefficient(&monomial(m)), ratio(c), "monomial {m}");
    }
}

#[test]
fn abelian_series_first_six() {
    let expected: [&[(&str, &str)]; 6] = [
        &[("1", "t1")],
        &[("1", "t1^2")],
        &[("1", "t1^3"), ("1", "t3")],
        &[("1", "t1^4"), ("4", "t1 t3"), ("1", "t2^2")],
        &[
            ("1", "t1^5"),
            ("10", "t3 t1^2"),
            ("5", "t1 t2^2"),
            ("8", "t5"),
        ],
        &[
            ("1", "t1^6"),
            ("20", "t1^3 t3"),
            ("15", "t1^2 t2^2"),
            ("48", "t1 t5"),
            ("24", "t2 t4"),
            ("12", "t3^2"),
        ],
    ];
    for (k, terms) in expected.iter().enumerate() {
        assert_eq!(
            abelian_f(k + 1).unwrap(),
            polynomial('t', terms),
            "F_{}",
            k + 1
        );
    }
}

const F015: &[(&str, &str)] = &[
    ("4", "p1^3 p4 p2 p3"),
    ("1", "p1^5 p2^2 p3"),
    ("3", "p1^3 p5 p2^2"),
    ("1/2", "p1^6 p2 p4"),
    ("5", "p1^4 p6 p2"),
    ("7/2", "p1^4 p5 p3"),
    ("1/10", "p1^7 p5"),
    ("5/2", "p1^5 p7"),
    ("21/2", "p9 p1^3"),
    ("21/4", "p8 p1^2 p2"),
    ("7/2", "p1^2 p7 p3"),
    ("13/4", "p1^2 p4 p6"),
    ("33/20", "p1^2 p5^2"),
    ("1/4", "p1^4 p2^4"),
    ("1/4", "p1^6 p3^2"),
    ("1/2", "p1^3 p3^3"),
    ("1/2", "p1^2 p4 p2^3"),
    ("1/2", "p1^2 p2^2 p3^2"),
    ("3/2", "p1^4 p4^2"),
];

const F033: &[(&str, &str)] = &[
    ("1/3", "p4 p1^3 p2 p3"),
    ("1", "p4 p1 p2 p5"),
    ("1/36", "p3^4"),
    ("1/3", "p1^5 p2^2 p3"),
    ("1/6", "p1^2 p2^2 p3^2"),
    ("1/6", "p3^2 p4 p2"),
    ("1/3", "p1 p5 p3^2"),
    ("1/4", "p1^4 p2^4"),
    ("1/9", "p1^6 p3^2"),
    ("1/9", "p1^3 p3^3"),
    ("1/4", "p2^2 p4^2"),
    ("1", "p5^2 p1^2"),
    ("1", "p5 p1^3 p2^2"),
    ("1/2", "p4 p1^2 p2^3"),
    ("2/3", "p5 p1^4 p3"),
];

const F213: &[(&str, &str)] = &[
    ("10", "p4 p5 p2 p1"),
    ("16", "p8 p1^2 p2"),
    ("4", "p7 p2^2 p1"),
    ("13", "p4 p6 p1^2"),
    ("7", "p5^2 p1^2"),
    ("12", "p9 p1^3"),
    ("5", "p10 p2"),
    ("36", "p11 p1"),
    ("1/2", "p4^2 p2^2"),
    ("5", "p1^3 p2 p3 p4"),
    ("5", "p1 p2 p3 p6"),
    ("1", "p3^3 p1^3"),
    ("3", "p1 p5 p3^2"),
    ("4", "p1 p3 p4^2"),
    ("2", "p3 p9"),
    ("13/2", "p4 p8"),
    ("5", "p5 p7"),
    ("3/2", "p6^2"),
    ("1", "p1^4 p4^2"),
    ("1", "p1^2 p2^3 p4"),
    ("1", "p1^2 p2^2 p3^2"),
    ("2", "p1^3 p2^2 p5"),
    ("1", "p1^4 p2 p6"),
    ("2", "p1^4 p3 p5"),
    ("13", "p1^2 p3 p7"),
];

#[test]
fn excerpt_l0_m1_n5() {
    assert_excerpt(&quadratic_f(0, 1, 5).unwrap(), F015);
}

#[test]
fn excerpt_l0_m3_n3() {
    assert_excerpt(&quadratic_f(0, 3, 3).unwrap(), F033);
}

#[test]
fn excerpt_l2_m1_n3() {
    assert_excerpt(&quadratic_f(2, 1, 3).unwrap(), F213);
}

#[test]
fn excerpts_are_homogeneous() {
    for excerpt in [F015, F033, F213] {
        assert_eq!(polynomial('p', excerpt).homogeneous_weight(), Some(12));
    }
}

#[test]
fn three_poles_three_zeros_counts() {
    let s: StratumSignature = "Q(1^3,-1^3)".parse().unwrap();
    let target = stratum_monomial(&s);
    assert_eq!(
        quadratic_f(0, 1, 5).unwrap().coefficient(&target),
        ratio("1/2")
    );
    assert_eq!(
        quadratic_f(0, 3, 3).unwrap().coefficient(&target),
        ratio("1/9")
    );
    assert_eq!(
        quadratic_f(2, 1, 3).unwrap().coefficient(&target),
        ratio("1")
    );
    assert_eq!(weighted_lmn_count(&s, 0, 3, 3).unwrap(), ratio("1/18"));
    assert_eq!(weighted_lmn_count(&s, 2, 1, 3).unwrap(), ratio("1"));
    assert_eq!(weighted_lmn_count(&s, 0, 1, 5).unwrap(), ratio("1/2"));
}

#[test]
fn minimal_genus_two_weighted_count() {
    let f3 = abelian_f(3).unwrap();
    let c = f3.coefficient(&monomial("t3"));
    assert_eq!(
        weighted_from_rooted(&c, RootedContext::Abelian { n: 3 }),
        ratio("1/3")
    );
}
