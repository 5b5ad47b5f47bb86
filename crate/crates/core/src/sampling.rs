//! Seeded random sampling shared by every randomized check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::number::{dim, CdNumber, ExactNumber, FloatNumber};
use crate::scalar::{Exact, Scalar};

/// Inclusive bound on exact sample coordinates.
pub const EXACT_COORD_BOUND: i64 = 9;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer coordinates drawn uniformly from `[-9, 9]`.
pub fn random_exact<R: Rng + ?Sized>(level: u32, rng: &mut R) -> ExactNumber {
    let coords = (0..dim(level))
        .map(|_| Exact::from_i64(rng.gen_range(-EXACT_COORD_BOUND..=EXACT_COORD_BOUND)))
        .collect();
    CdNumber::from_coords(coords).expect("power-of-two length")
}

/// Nonzero variant of [`random_exact`].
pub fn random_exact_nonzero<R: Rng + ?Sized>(level: u32, rng: &mut R) -> ExactNumber {
    loop {
        let x = random_exact(level, rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Standard normal coordinates.
pub fn random_gaussian<R: Rng + ?Sized>(level: u32, rng: &mut R) -> FloatNumber {
    let coords = (0..dim(level)).map(|_| rng.sample(StandardNormal)).collect();
    CdNumber::from_coords(coords).expect("power-of-two length")
}

/// Uniform on the unit sphere of the algebra.
pub fn random_unit<R: Rng + ?Sized>(level: u32, rng: &mut R) -> FloatNumber {
    loop {
        let x = random_gaussian(level, rng);
        let n = x.norm();
        if n > 1e-6 {
            return x.scale(&(1.0 / n));
        }
    }
}

/// Uniform point on the unit sphere in `R^n`.
pub fn random_sphere_point<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        let norm = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if norm > 1e-6 {
            return v.into_iter().map(|c| c / norm).collect();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_samples() {
        let a: Vec<_> = (0..5)
            .map({
                let mut r = rng(7);
                move |_| random_exact(3, &mut r)
            })
            .collect();
        let mut r = rng(7);
        let b: Vec<_> = (0..5).map(|_| random_exact(3, &mut r)).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn exact_samples_stay_in_range() {
        let mut r = rng(1);
        for _ in 0..100 {
            let x = random_exact(2, &mut r);
            assert!(x.coords().iter().all(|c| c.to_f64().abs() <= 9.0 && c.is_integer()));
        }
    }

    #[test]
    fn unit_samples_have_unit_norm() {
        let mut r = rng(3);
        for level in 0..=3 {
            assert!((random_unit(level, &mut r).norm() - 1.0).abs() < 1e-12);
        }
    }
}
