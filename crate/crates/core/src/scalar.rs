//! Scalar fields underlying the Cayley-Dickson tower.
//!
//! Two scalars are provided: [`Exact`] (arbitrary-precision rationals) for
//! every algebraic-identity path, and `f64` for the geometric code, where
//! all comparisons go through an explicit tolerance.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational scalar.
pub type Exact = BigRational;

/// Absolute tolerance for unit-scale floating-point quantities.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A real scalar field: the coefficient ring of every algebra in the tower.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Lossy conversion, used for reporting and for feeding exact values into
    /// floating-point code.
    fn to_f64(&self) -> f64;

    /// Zero test. Exact scalars ignore `tol`.
    fn is_zero_within(&self, tol: f64) -> bool;

    /// Whether this scalar type compares without rounding.
    fn is_exact() -> bool;
}

impl Scalar for Exact {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_zero_within(&self, _tol: f64) -> bool {
        self.is_zero()
    }

    fn is_exact() -> bool {
        true
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_zero_within(&self, tol: f64) -> bool {
        self.abs() <= tol
    }

    fn is_exact() -> bool {
        false
    }
}

/// Renders an exact scalar as `"n"` or `"n/d"`.
pub fn exact_to_string(v: &Exact) -> String {
    v.to_string()
}

/// Parses the `"n"` / `"n/d"` form produced by [`exact_to_string`].
pub fn exact_from_str(s: &str) -> Option<Exact> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Absolute value of an exact scalar.
pub fn exact_abs(v: &Exact) -> Exact {
    v.abs()
}
