//! Library arithmetic against hand-written integer multiplication for the
//! complex numbers, Hamilton's quaternions, and their doublings.

use octoplane::properties::{
    check, check_alternative, check_associative, check_flexible, check_norm_multiplicative, find_zero_divisors,
};
use octoplane::{ExactNumber, Property};
use proptest::prelude::*;

type Q = [i64; 4];

fn complex_mul(a: [i64; 2], b: [i64; 2]) -> [i64; 2] {
    [a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]]
}

fn hamilton(a: Q, b: Q) -> Q {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn qconj(a: Q) -> Q {
    [a[0], -a[1], -a[2], -a[3]]
}

fn qsub(a: Q, b: Q) -> Q {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

fn qadd(a: Q, b: Q) -> Q {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

/// Octonions as quaternion pairs: (a, b)(c, d) = (ac - d*b, da + bc*).
fn octonion_mul(x: [i64; 8], y: [i64; 8]) -> [i64; 8] {
    let split = |v: [i64; 8]| -> (Q, Q) { ([v[0], v[1], v[2], v[3]], [v[4], v[5], v[6], v[7]]) };
    let ((a, b), (c, d)) = (split(x), split(y));
    let lo = qsub(hamilton(a, c), hamilton(qconj(d), b));
    let hi = qadd(hamilton(d, a), hamilton(b, qconj(c)));
    [lo[0], lo[1], lo[2], lo[3], hi[0], hi[1], hi[2], hi[3]]
}

fn num(coords: &[i64]) -> ExactNumber {
    ExactNumber::from_i64s(coords).unwrap()
}

fn basis8(i: usize) -> [i64; 8] {
    let mut v = [0; 8];
    v[i] = 1;
    v
}

fn norm8(v: [i64; 8]) -> i64 {
    v.iter().map(|c| c * c).sum()
}

#[test]
fn complex_and_quaternion_bases_match() {
    for i in 0..2 {
        for j in 0..2 {
            let (mut a, mut b) = ([0; 2], [0; 2]);
            a[i] = 1;
            b[j] = 1;
            assert_eq!(&num(&a) * &num(&b), num(&complex_mul(a, b)));
        }
    }
    for i in 0..4 {
        for j in 0..4 {
            let (mut a, mut b) = ([0; 4], [0; 4]);
            a[i] = 1;
            b[j] = 1;
            assert_eq!(&num(&a) * &num(&b), num(&hamilton(a, b)), "e{i} e{j}");
        }
    }
}

#[test]
fn octonion_basis_matches_and_indexes_by_xor() {
    for i in 0..8 {
        for j in 0..8 {
            let p = octonion_mul(basis8(i), basis8(j));
            assert_eq!(&num(&basis8(i)) * &num(&basis8(j)), num(&p));
            let nonzero: Vec<usize> = (0..8).filter(|&k| p[k] != 0).collect();
            assert_eq!(nonzero, vec![i ^ j]);
        }
    }
}

#[test]
fn associator_witness() {
    let (e1, e2, e4) = (basis8(1), basis8(2), basis8(4));
    let left = octonion_mul(octonion_mul(e1, e2), e4);
    let right = octonion_mul(e1, octonion_mul(e2, e4));
    assert_eq!(left, basis8(7));
    assert_eq!(right.map(|c| -c), basis8(7));

    let report = check_associative(3, 10, 1).unwrap();
    assert!(!report.holds());
    let ce = report.counterexample.unwrap();
    assert_eq!(ce, vec![num(&e1), num(&e2), num(&e4)]);
    let assoc = octoplane::properties::associator(&ce[0], &ce[1], &ce[2]).unwrap();
    assert_eq!(assoc, num(&basis8(7).map(|c| 2 * c)));
}

#[test]
fn expected_verdicts_through_level_four() {
    for property in Property::ALL {
        for level in 0..=4 {
            let report = check(property, level, 20, 5).unwrap();
            assert!(report.matches_expectation(), "{} at level {level}", property.name());
            if !report.holds() {
                assert!(
                    report.recheck(),
                    "counterexample for {} does not recheck",
                    property.name()
                );
            }
        }
    }
    assert!(check_flexible(5, 20, 5).unwrap().holds());
    assert!(!check_alternative(4, 20, 5).unwrap().holds());
    assert!(!check_norm_multiplicative(4, 20, 5).unwrap().holds());
}

#[test]
fn zero_divisors_vanish_in_oracle_arithmetic() {
    for level in 0..=3 {
        assert!(find_zero_divisors(level).unwrap().is_empty());
    }
    let pairs = find_zero_divisors(4).unwrap();
    assert!(!pairs.is_empty());
    for (a, b) in &pairs {
        assert!(!a.is_zero() && !b.is_zero());
        // sedenions as octonion pairs
        let to_i =
            |n: &ExactNumber| -> Vec<i64> { n.coords().iter().map(|c| c.to_integer().try_into().unwrap()).collect() };
        let (x, y) = (to_i(a), to_i(b));
        let half = |v: &[i64]| -> ([i64; 8], [i64; 8]) { (v[..8].try_into().unwrap(), v[8..].try_into().unwrap()) };
        let ((p, q), (r, s)) = (half(&x), half(&y));
        let oconj = |v: [i64; 8]| -> [i64; 8] {
            let mut w = v.map(|c| -c);
            w[0] = v[0];
            w
        };
        let lo: Vec<i64> = octonion_mul(p, r)
            .iter()
            .zip(octonion_mul(oconj(s), q))
            .map(|(u, v)| u - v)
            .collect();
        let hi: Vec<i64> = octonion_mul(s, p)
            .iter()
            .zip(octonion_mul(q, oconj(r)))
            .map(|(u, v)| u + v)
            .collect();
        assert!(lo.iter().chain(&hi).all(|&c| c == 0), "{a} * {b}");
    }
}

fn octonion() -> impl Strategy<Value = [i64; 8]> {
    proptest::array::uniform8(-9i64..=9)
}

proptest! {
    #[test]
    fn octonion_product_matches(x in octonion(), y in octonion()) {
        prop_assert_eq!(&num(&x) * &num(&y), num(&octonion_mul(x, y)));
    }

    #[test]
    fn oracle_norm_is_multiplicative(x in octonion(), y in octonion()) {
        prop_assert_eq!(norm8(octonion_mul(x, y)), norm8(x) * norm8(y));
    }

    #[test]
    fn moufang_identity(x in octonion(), y in octonion(), z in octonion()) {
        // z(x(zy)) = ((zx)z)y
        let (x, y, z) = (num(&x), num(&y), num(&z));
        prop_assert_eq!(&z * &(&x * &(&z * &y)), &(&(&z * &x) * &z) * &y);
    }

    #[test]
    fn conjugation_is_an_anti_involution(x in octonion(), y in octonion()) {
        let (a, b) = (num(&x), num(&y));
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &b.conj() * &a.conj());
        prop_assert_eq!((&a * &a.conj()).re().clone(), a.norm_sq());
    }
}
