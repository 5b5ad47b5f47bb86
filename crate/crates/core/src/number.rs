//! Elements of the level-`n` Cayley-Dickson algebra.
//!
//! A level-`n` element carries `2^n` coordinates. The level-`(n+1)` element
//! `(a, b)` stores the coordinates of `a` in its first half and those of `b`
//! in its second half, so basis indices are preserved by [`CdNumber::embed`].
//! Multiplication is the doubling rule
//!
//! ```text
//! (a, b)(c, d) = (ac - d*b, da + bc*)
//! (a, b)*      = (a*, -b)
//! ```
//!
//! applied recursively down to the scalar field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::AlgebraError;
use crate::scalar::{exact_from_str, exact_to_string, Exact, Scalar};

/// Largest level accepted by constructors. `2^20` coordinates is far beyond
/// anything desk-scale; the cap only guards against shift overflow.
pub const MAX_LEVEL: u32 = 20;

#[derive(Clone, PartialEq)]
pub struct CdNumber<S> {
    level: u32,
    coords: Vec<S>,
}

/// Exact rational element.
pub type ExactNumber = CdNumber<Exact>;
/// Double-precision element.
pub type FloatNumber = CdNumber<f64>;

/// Result of [`CdNumber::inverse`].
#[derive(Debug, Clone, PartialEq)]
pub struct Inverse<S> {
    pub value: CdNumber<S>,
    /// `false` at levels >= 4, where `x* / |x|^2` need not be a two-sided
    /// inverse because zero divisors exist.
    pub guaranteed: bool,
}

pub const fn dim(level: u32) -> usize {
    1usize << level
}

impl<S: Scalar> CdNumber<S> {
    pub fn zero(level: u32) -> Self {
        Self {
            level,
            coords: vec![S::zero(); dim(level)],
        }
    }

    pub fn one(level: u32) -> Self {
        Self::real(level, S::one())
    }

    /// `r * e0`.
    pub fn real(level: u32, r: S) -> Self {
        let mut out = Self::zero(level);
        out.coords[0] = r;
        out
    }

    pub fn basis(level: u32, index: usize) -> Result<Self, AlgebraError> {
        if level > MAX_LEVEL || index >= dim(level) {
            return Err(AlgebraError::IndexOutOfRange { level, index });
        }
        let mut out = Self::zero(level);
        out.coords[index] = S::one();
        Ok(out)
    }

    pub fn from_coords(coords: Vec<S>) -> Result<Self, AlgebraError> {
        let len = coords.len();
        if !len.is_power_of_two() {
            return Err(AlgebraError::BadLength { len });
        }
        Ok(Self {
            level: len.trailing_zeros(),
            coords,
        })
    }

    pub fn from_i64s(coords: &[i64]) -> Result<Self, AlgebraError> {
        Self::from_coords(coords.iter().map(|&c| S::from_i64(c)).collect())
    }

    /// Builds the level-`(n+1)` element `(a, b)`.
    pub fn pair(a: &Self, b: &Self) -> Result<Self, AlgebraError> {
        a.same_level(b)?;
        let mut coords = a.coords.clone();
        coords.extend_from_slice(&b.coords);
        Ok(Self {
            level: a.level + 1,
            coords,
        })
    }

    /// Splits a level-`(n+1)` element into `(a, b)`. Level 0 has no halves.
    pub fn halves(&self) -> Option<(Self, Self)> {
        if self.level == 0 {
            return None;
        }
        let (a, b) = self.coords.split_at(self.coords.len() / 2);
        Some((
            Self {
                level: self.level - 1,
                coords: a.to_vec(),
            },
            Self {
                level: self.level - 1,
                coords: b.to_vec(),
            },
        ))
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    pub fn re(&self) -> &S {
        &self.coords[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn same_level(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.level == other.level {
            Ok(())
        } else {
            Err(AlgebraError::LevelMismatch {
                left: self.level,
                right: other.level,
            })
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_level(other)?;
        Ok(Self {
            level: self.level,
            coords: product(self.level, &self.coords, &other.coords),
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_level(other)?;
        Ok(self.zip_with(other, |a, b| a.clone() + b.clone()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_level(other)?;
        Ok(self.zip_with(other, |a, b| a.clone() - b.clone()))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        Self {
            level: self.level,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            level: self.level,
            coords: conj_slice(&self.coords),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        Self {
            level: self.level,
            coords: self.coords.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    /// Squared norm: the sum of squared coordinates.
    pub fn norm_sq(&self) -> S {
        self.coords.iter().fold(S::zero(), |acc, c| acc + c.clone() * c.clone())
    }

    /// `x* / |x|^2`.
    pub fn inverse(&self) -> Result<Inverse<S>, AlgebraError> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let inv_n = S::one() / n;
        Ok(Inverse {
            value: self.conj().scale(&inv_n),
            guaranteed: self.level <= 3,
        })
    }

    /// Zero-pads into a higher level; index-preserving.
    pub fn embed(&self, target_level: u32) -> Result<Self, AlgebraError> {
        if target_level < self.level {
            return Err(AlgebraError::EmbedDown {
                from: self.level,
                to: target_level,
            });
        }
        if target_level > MAX_LEVEL {
            return Err(AlgebraError::LevelTooLarge {
                level: target_level,
                max: MAX_LEVEL,
            });
        }
        let mut coords = self.coords.clone();
        coords.resize(dim(target_level), S::zero());
        Ok(Self {
            level: target_level,
            coords,
        })
    }

    /// `<x, y> = (x*y + y*x) / 2`, read off the real coordinate.
    pub fn inner_product(&self, other: &Self) -> Result<S, AlgebraError> {
        let xy = self.conj().try_mul(other)?;
        let yx = other.conj().try_mul(self)?;
        let two = S::from_i64(2);
        Ok((xy.coords[0].clone() + yx.coords[0].clone()) / two)
    }

    /// Real part `(x + x*) / 2` as a scalar.
    pub fn real_part(&self) -> S {
        self.coords[0].clone()
    }

    /// Imaginary part `x - re(x)`.
    pub fn imag_part(&self) -> Self {
        let mut out = self.clone();
        out.coords[0] = S::zero();
        out
    }

    /// `(xy)z - x(yz)`.
    pub fn associator(x: &Self, y: &Self, z: &Self) -> Result<Self, AlgebraError> {
        let left = x.try_mul(y)?.try_mul(z)?;
        let right = x.try_mul(&y.try_mul(z)?)?;
        left.try_sub(&right)
    }

    /// `xy - yx`.
    pub fn commutator(x: &Self, y: &Self) -> Result<Self, AlgebraError> {
        x.try_mul(y)?.try_sub(&y.try_mul(x)?)
    }

    /// Maximum absolute coordinate, as `f64`.
    pub fn max_abs(&self) -> f64 {
        self.coords.iter().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
    }

    pub fn to_float(&self) -> FloatNumber {
        CdNumber {
            level: self.level,
            coords: self.coords.iter().map(Scalar::to_f64).collect(),
        }
    }
}

impl FloatNumber {
    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Euclidean distance between coordinate vectors.
    pub fn distance(&self, other: &Self) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }
}

fn conj_slice<S: Scalar>(x: &[S]) -> Vec<S> {
    let mut out: Vec<S> = x.iter().map(|c| -c.clone()).collect();
    out[0] = x[0].clone();
    out
}

fn add_into<S: Scalar>(out: &mut Vec<S>, a: Vec<S>, b: Vec<S>, subtract: bool) {
    out.extend(a.into_iter().zip(b).map(|(a, b)| if subtract { a - b } else { a + b }));
}

/// Product through the cached basis table where one exists, otherwise by
/// the doubling recursion.
fn product<S: Scalar>(level: u32, x: &[S], y: &[S]) -> Vec<S> {
    let Some(table) = crate::table::flat_table(level) else {
        return mul_slices(x, y);
    };
    let n = x.len();
    let mut out = vec![S::zero(); n];
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let e = table[i * n + j];
            let term = a.clone() * b.clone();
            let acc = std::mem::replace(&mut out[e.index], S::zero());
            out[e.index] = if e.sign > 0 { acc + term } else { acc - term };
        }
    }
    out
}

/// Reference product by the doubling rule on halves.
pub(crate) fn mul_slices<S: Scalar>(x: &[S], y: &[S]) -> Vec<S> {
    let n = x.len();
    if n == 1 {
        return vec![x[0].clone() * y[0].clone()];
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let ac = mul_slices(a, c);
    let d_conj_b = mul_slices(&conj_slice(d), b);
    let da = mul_slices(d, a);
    let b_c_conj = mul_slices(b, &conj_slice(c));
    let mut out = Vec::with_capacity(n);
    add_into(&mut out, ac, d_conj_b, true);
    add_into(&mut out, da, b_c_conj, false);
    out
}

/// Panics on level mismatch; use [`CdNumber::try_mul`] to get an error.
impl<S: Scalar> Mul for &CdNumber<S> {
    type Output = CdNumber<S>;

    fn mul(self, rhs: Self) -> CdNumber<S> {
        self.try_mul(rhs).expect("level mismatch in product")
    }
}

impl<S: Scalar> Add for &CdNumber<S> {
    type Output = CdNumber<S>;

    fn add(self, rhs: Self) -> CdNumber<S> {
        self.try_add(rhs).expect("level mismatch in sum")
    }
}

impl<S: Scalar> Sub for &CdNumber<S> {
    type Output = CdNumber<S>;

    fn sub(self, rhs: Self) -> CdNumber<S> {
        self.try_sub(rhs).expect("level mismatch in difference")
    }
}

impl<S: Scalar> Neg for &CdNumber<S> {
    type Output = CdNumber<S>;

    fn neg(self) -> CdNumber<S> {
        CdNumber {
            level: self.level,
            coords: self.coords.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for CdNumber<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})e{i}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for CdNumber<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CdNumber<{}>{:?}", self.level, self.coords)
    }
}

#[derive(Serialize, Deserialize)]
struct Wire<T> {
    level: u32,
    coords: Vec<T>,
}

impl Serialize for ExactNumber {
    fn serialize<Se: Serializer>(&self, serializer: Se) -> Result<Se::Ok, Se::Error> {
        Wire {
            level: self.level,
            coords: self.coords.iter().map(exact_to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = Wire::<String>::deserialize(deserializer)?;
        let coords = wire
            .coords
            .iter()
            .map(|s| exact_from_str(s).ok_or_else(|| D::Error::custom(format!("bad scalar {s:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let n = CdNumber::from_coords(coords).map_err(D::Error::custom)?;
        if n.level != wire.level {
            return Err(D::Error::custom("level does not match coordinate count"));
        }
        Ok(n)
    }
}

impl Serialize for FloatNumber {
    fn serialize<Se: Serializer>(&self, serializer: Se) -> Result<Se::Ok, Se::Error> {
        Wire {
            level: self.level,
            coords: self.coords.clone(),
        }
        .serialize(serializer)
    }
}
