use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use octoplane::topology::{smith_normal_form, IntMatrix};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Determinant by permutation expansion.
fn leibniz(m: &[Vec<i64>]) -> i128 {
    fn go(m: &[Vec<i64>], row: usize, used: &mut Vec<bool>, sign: i128) -> i128 {
        if row == m.len() {
            return sign;
        }
        let mut total = 0;
        for c in 0..m.len() {
            if used[c] {
                continue;
            }
            // parity of the columns already used to the right of c
            let inversions = (c + 1..m.len()).filter(|&j| used[j]).count();
            let s = if inversions % 2 == 0 { sign } else { -sign };
            if m[row][c] != 0 {
                used[c] = true;
                total += m[row][c] as i128 * go(m, row + 1, used, s);
                used[c] = false;
            }
        }
        total
    }
    go(m, 0, &mut vec![false; m.len()], 1)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (0..n)
        .flat_map(|last| {
            subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

/// d_k = gcd of all k x k minors; invariant factors are d_k / d_(k-1).
fn minor_gcd_factors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let (r, c) = (m.len(), m[0].len());
    let mut out = Vec::new();
    let mut prev = BigInt::from(1);
    for k in 1..=r.min(c) {
        let mut g = BigInt::zero();
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                let sub: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j]).collect()).collect();
                g = g.gcd(&BigInt::from(leibniz(&sub)));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

#[test]
fn leibniz_sanity() {
    assert_eq!(leibniz(&[vec![2, 4], vec![6, 8]]), -8);
    assert_eq!(leibniz(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]), -1);
    assert_eq!(leibniz(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]), 4);
}

#[test]
fn spec_example_against_minors() {
    let m = vec![vec![2, 4], vec![6, 8]];
    assert_eq!(minor_gcd_factors(&m), vec![BigInt::from(2), BigInt::from(4)]);
}

#[test]
fn thousand_random_4x4_match_minor_gcds() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..1200 {
        // mix in low-rank and sparse matrices
        let density = [1.0, 0.5, 0.25][trial % 3];
        let mut m: Vec<Vec<i64>> = (0..4)
            .map(|_| {
                (0..4)
                    .map(|_| {
                        if rng.gen_bool(density) {
                            rng.gen_range(-20..=20)
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        if trial % 5 == 0 {
            let (a, b) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
            m[3] = (0..4).map(|j| a * m[0][j] + b * m[1][j]).collect();
        }
        let im = IntMatrix::from_rows(&m);
        let snf = smith_normal_form(&im);
        assert!(snf.verify(&im), "verification failed on {m:?}");
        assert_eq!(
            snf.invariant_factors(),
            minor_gcd_factors(&m),
            "factors differ on {m:?}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]
    #[test]
    fn snf_up_to_8x8(
        rows in 1usize..=8,
        cols in 1usize..=8,
        entries in proptest::collection::vec(-20i64..=20, 64),
    ) {
        let m: Vec<Vec<i64>> = (0..rows).map(|i| entries[i * 8..i * 8 + cols].to_vec()).collect();
        let im = IntMatrix::from_rows(&m);
        let snf = smith_normal_form(&im);
        prop_assert!(snf.verify(&im));
        prop_assert!(snf.invariant_factors().iter().all(|f| f.is_positive()));
    }

    #[test]
    fn small_matches_minors(
        rows in 1usize..=3,
        cols in 1usize..=3,
        entries in proptest::collection::vec(-9i64..=9, 9),
    ) {
        let m: Vec<Vec<i64>> = (0..rows).map(|i| entries[i * 3..i * 3 + cols].to_vec()).collect();
        prop_assert_eq!(smith_normal_form(&IntMatrix::from_rows(&m)).invariant_factors(), minor_gcd_factors(&m));
    }
}
