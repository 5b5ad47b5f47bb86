use serde::Serialize;

use super::triple::{check_level, TriplePoint};
use crate::error::ProjectiveError;
use crate::number::{CdNumber, FloatNumber};
use crate::DEFAULT_TOL;

/// A representative `(x, y)` of a point of the projective line.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LinePoint {
    x: FloatNumber,
    y: FloatNumber,
}

impl LinePoint {
    pub fn new(x: FloatNumber, y: FloatNumber, tol: f64) -> Result<Self, ProjectiveError> {
        check_level(x.level())?;
        x.try_mul(&y)?;
        let norm_sq = x.norm_sq() + y.norm_sq();
        if (norm_sq - 1.0).abs() > tol {
            return Err(ProjectiveError::NormViolation { norm_sq, expected: 1.0 });
        }
        Ok(Self { x, y })
    }

    pub fn x(&self) -> &FloatNumber {
        &self.x
    }

    pub fn y(&self) -> &FloatNumber {
        &self.y
    }

    pub fn level(&self) -> u32 {
        self.x.level()
    }

    /// `(xx*, xy*, yy*)`.
    pub fn invariants(&self) -> [FloatNumber; 3] {
        [
            &self.x * &self.x.conj(),
            &self.x * &self.y.conj(),
            &self.y * &self.y.conj(),
        ]
    }
}

pub fn line_equivalent(p: &LinePoint, q: &LinePoint, tol: f64) -> bool {
    p.level() == q.level()
        && p.invariants()
            .iter()
            .zip(q.invariants().iter())
            .all(|(a, b)| (a - b).max_abs() <= tol)
}

/// `[x, y] -> [x, y, 0]`.
pub fn line_include(p: &LinePoint) -> TriplePoint {
    TriplePoint::new(
        p.x.clone(),
        p.y.clone(),
        FloatNumber::zero(p.level()),
        // Two entries always generate an associative subalgebra; the slack
        // only absorbs rounding already accepted by the line point.
        DEFAULT_TOL.max((p.x.norm_sq() + p.y.norm_sq() - 1.0).abs()),
    )
    .expect("two-generated subalgebras are associative")
}

/// `[x, y] -> (2xy*, |x|^2 - |y|^2)` on the unit sphere of `R^(d+1)`.
pub fn line_to_sphere(p: &LinePoint) -> Vec<f64> {
    let xy = &p.x * &p.y.conj();
    let mut out: Vec<f64> = xy.coords().iter().map(|c| 2.0 * c).collect();
    out.push(p.x.norm_sq() - p.y.norm_sq());
    out
}

/// Inverse of [`line_to_sphere`] up to equivalence.
///
/// For `s = (w, t)` the representative takes a real entry of norm
/// `sqrt((1 + t)/2)` (when `t >= 0`) or `sqrt((1 - t)/2)` (otherwise) and
/// solves `2xy* = w` for the other entry.
pub fn sphere_to_line(s: &[f64], tol: f64) -> Result<LinePoint, ProjectiveError> {
    let d = s.len().saturating_sub(1);
    if !d.is_power_of_two() {
        return Err(ProjectiveError::UnsupportedLevel(u32::MAX));
    }
    let level = d.trailing_zeros();
    check_level(level)?;
    let norm_sq: f64 = s.iter().map(|c| c * c).sum();
    if (norm_sq - 1.0).abs() > tol {
        return Err(ProjectiveError::NormViolation { norm_sq, expected: 1.0 });
    }
    let t = s[d];
    let w = CdNumber::from_coords(s[..d].to_vec())?;
    let (x, y) = if t >= 0.0 {
        let alpha = ((1.0 + t) / 2.0).sqrt();
        // x = alpha, y = w* / (2 alpha)
        (FloatNumber::real(level, alpha), w.conj().scale(&(0.5 / alpha)))
    } else {
        let beta = ((1.0 - t) / 2.0).sqrt();
        // y = beta, x = w / (2 beta)
        (w.scale(&(0.5 / beta)), FloatNumber::real(level, beta))
    };
    let n = (x.norm_sq() + y.norm_sq()).sqrt();
    LinePoint::new(x.scale(&(1.0 / n)), y.scale(&(1.0 / n)), tol.max(1e-9))
}

/// The attaching map `(x, y) -> [x, y]` from the unit sphere of `A^2`.
pub fn attaching_map(x: &FloatNumber, y: &FloatNumber, tol: f64) -> Result<LinePoint, ProjectiveError> {
    LinePoint::new(x.clone(), y.clone(), tol)
}

/// Points with `1 - |x|^2 - |y|^2` below this are treated as boundary points.
pub const BOUNDARY_SNAP: f64 = 1e-14;

/// `(x, y) -> [x, y, sqrt(1 - |x|^2 - |y|^2)]` on the closed unit disk.
pub fn disk_extension(x: &FloatNumber, y: &FloatNumber, tol: f64) -> Result<TriplePoint, ProjectiveError> {
    check_level(x.level())?;
    let r = x.norm_sq() + y.norm_sq();
    if r > 1.0 + tol {
        return Err(ProjectiveError::NormViolation {
            norm_sq: r,
            expected: 1.0,
        });
    }
    // sqrt amplifies rounding near the boundary sphere; snap there so the
    // boundary lands exactly on the image of the attaching map.
    let gap = 1.0 - r;
    let z = if gap <= BOUNDARY_SNAP { 0.0 } else { gap.sqrt() };
    let z = FloatNumber::real(x.level(), z);
    TriplePoint::new(x.clone(), y.clone(), z, tol)
}
