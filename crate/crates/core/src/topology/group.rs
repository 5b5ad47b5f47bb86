use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::error::TopologyError;

/// `Z^rank + Z/t1 + ... + Z/tk` with `t1 | t2 | ... | tk`, every `ti >= 2`.
///
/// With rational coefficients `rank` counts copies of `Q` and `torsion` is
/// always empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self {
            rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        Self {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        Self::from_parts(0, &[order])
    }

    /// Normalizes an arbitrary list of cyclic orders into the invariant
    /// factor form. Orders `0` and `1` are dropped.
    pub fn from_parts(rank: usize, orders: &[u64]) -> Self {
        let orders: Vec<u64> = orders.iter().copied().filter(|&o| o > 1).collect();
        if orders.is_empty() {
            return Self::free(rank);
        }
        let snf = smith_normal_form(&IntMatrix::diagonal(
            &orders.iter().map(|&o| BigInt::from(o)).collect::<Vec<_>>(),
        ));
        let torsion = snf
            .invariant_factors()
            .iter()
            .map(|f| f.to_u64().expect("factor divides a u64 product"))
            .filter(|&f| f > 1)
            .collect();
        Self { rank, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Normal-form check: every coefficient is at least 2 and divides the next.
    pub fn is_normalized(&self) -> bool {
        self.torsion.iter().all(|&t| t >= 2) && self.torsion.windows(2).all(|w| w[1] % w[0] == 0)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Coefficient group for cohomology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoefficientSpec {
    Integers,
    Modular(u64),
    Rationals,
}

impl CoefficientSpec {
    pub fn modular(m: u64) -> Result<Self, TopologyError> {
        if m < 2 {
            return Err(TopologyError::BadCoefficients(format!(
                "modulus {m} must be at least 2"
            )));
        }
        Ok(Self::Modular(m))
    }

    /// The coefficient group itself, in the same encoding as cohomology
    /// results.
    pub fn as_group(self) -> AbelianGroup {
        match self {
            Self::Integers | Self::Rationals => AbelianGroup::free(1),
            Self::Modular(m) => AbelianGroup::cyclic(m),
        }
    }

    /// `A/sA` for the coefficient group `A`.
    pub(crate) fn quotient_by(self, s: u64) -> Vec<u64> {
        match self {
            Self::Integers => vec![s],
            Self::Modular(m) => vec![s.gcd(&m)],
            Self::Rationals => vec![],
        }
    }

    /// The `s`-torsion `A[s]` of the coefficient group `A`.
    pub(crate) fn torsion_of(self, s: u64) -> Vec<u64> {
        match self {
            Self::Integers | Self::Rationals => vec![],
            Self::Modular(m) => vec![s.gcd(&m)],
        }
    }

    /// `A^n`.
    pub(crate) fn power(self, n: usize) -> AbelianGroup {
        match self {
            Self::Integers | Self::Rationals => AbelianGroup::free(n),
            Self::Modular(m) => AbelianGroup::from_parts(0, &vec![m; n]),
        }
    }
}

impl FromStr for CoefficientSpec {
    type Err = TopologyError;

    /// Accepts `Z`, `Q`, `Zmod:m` and `Z/m`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "Z" => return Ok(Self::Integers),
            "Q" => return Ok(Self::Rationals),
            _ => {}
        }
        let m = s
            .strip_prefix("Zmod:")
            .or_else(|| s.strip_prefix("Z/"))
            .ok_or_else(|| TopologyError::BadCoefficients(s.to_string()))?;
        let m: u64 = m.parse().map_err(|_| TopologyError::BadCoefficients(s.to_string()))?;
        Self::modular(m)
    }
}

impl fmt::Display for CoefficientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Integers => write!(f, "Z"),
            Self::Modular(m) => write!(f, "Zmod:{m}"),
            Self::Rationals => write!(f, "Q"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form_merges_coprime_parts() {
        let g = AbelianGroup::from_parts(1, &[2, 3, 1, 4]);
        assert_eq!(
            g,
            AbelianGroup {
                rank: 1,
                torsion: vec![2, 12]
            }
        );
        assert!(g.is_normalized());
        assert_eq!(g.to_string(), "Z + Z/2 + Z/12");
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
    }

    #[test]
    fn parses_coefficients() {
        assert_eq!("Z".parse::<CoefficientSpec>().unwrap(), CoefficientSpec::Integers);
        assert_eq!("Q".parse::<CoefficientSpec>().unwrap(), CoefficientSpec::Rationals);
        assert_eq!(
            "Zmod:3".parse::<CoefficientSpec>().unwrap(),
            CoefficientSpec::Modular(3)
        );
        assert_eq!("Z/2".parse::<CoefficientSpec>().unwrap(), CoefficientSpec::Modular(2));
        assert!("Zmod:1".parse::<CoefficientSpec>().is_err());
        assert!("R".parse::<CoefficientSpec>().is_err());
    }

    #[test]
    fn json_shape() {
        let g = AbelianGroup::from_parts(2, &[2]);
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"rank":2,"torsion":[2]}"#);
    }
}
