use rand::Rng;
use serde::Serialize;

use crate::error::ProjectiveError;
use crate::number::{CdNumber, FloatNumber};
use crate::sampling::random_gaussian;

/// Highest level with a division algebra (`d = 8`).
pub const MAX_DIVISION_LEVEL: u32 = 3;

pub(crate) fn check_level(level: u32) -> Result<(), ProjectiveError> {
    if level > MAX_DIVISION_LEVEL {
        Err(ProjectiveError::UnsupportedLevel(level))
    } else {
        Ok(())
    }
}

/// Largest coordinate of any associator `(a, b, c)` with entries drawn from
/// `elems`, over all ordered choices (repetitions included).
pub(crate) fn max_associator(elems: &[&FloatNumber]) -> f64 {
    let mut worst = 0.0f64;
    for a in elems {
        for b in elems {
            let ab = *a * *b;
            for c in elems {
                let left = &ab * *c;
                let right = *a * &(*b * *c);
                worst = worst.max((&left - &right).max_abs());
            }
        }
    }
    worst
}

/// A representative `(x, y, z)` of a point of the projective plane.
///
/// Membership in the constraint set is checked on construction: the squared
/// norms sum to one, and every associator of the entries vanishes. Conjugates
/// are real-affine in the entries, so the 27 ordered associators of
/// `{x, y, z}` also cover the conjugate-closed products.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TriplePoint {
    x: FloatNumber,
    y: FloatNumber,
    z: FloatNumber,
}

impl TriplePoint {
    pub fn new(x: FloatNumber, y: FloatNumber, z: FloatNumber, tol: f64) -> Result<Self, ProjectiveError> {
        check_level(x.level())?;
        x.try_mul(&y)?;
        x.try_mul(&z)?;
        let norm_sq = x.norm_sq() + y.norm_sq() + z.norm_sq();
        if (norm_sq - 1.0).abs() > tol {
            return Err(ProjectiveError::NormViolation { norm_sq, expected: 1.0 });
        }
        let assoc = max_associator(&[&x, &y, &z]);
        if assoc > tol {
            return Err(ProjectiveError::NotAssociative(assoc));
        }
        Ok(Self { x, y, z })
    }

    /// Rescales to unit total norm before validating.
    pub fn normalized(x: FloatNumber, y: FloatNumber, z: FloatNumber, tol: f64) -> Result<Self, ProjectiveError> {
        let n = (x.norm_sq() + y.norm_sq() + z.norm_sq()).sqrt();
        if n == 0.0 {
            return Err(ProjectiveError::NormViolation {
                norm_sq: 0.0,
                expected: 1.0,
            });
        }
        let s = 1.0 / n;
        Self::new(x.scale(&s), y.scale(&s), z.scale(&s), tol)
    }

    /// Real triple `(x, y, z) * e0`, normalized.
    pub fn real(level: u32, x: f64, y: f64, z: f64) -> Result<Self, ProjectiveError> {
        Self::normalized(
            CdNumber::real(level, x),
            CdNumber::real(level, y),
            CdNumber::real(level, z),
            crate::DEFAULT_TOL,
        )
    }

    pub fn level(&self) -> u32 {
        self.x.level()
    }

    pub fn x(&self) -> &FloatNumber {
        &self.x
    }

    pub fn y(&self) -> &FloatNumber {
        &self.y
    }

    pub fn z(&self) -> &FloatNumber {
        &self.z
    }

    pub fn entries(&self) -> [&FloatNumber; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn invariants(&self) -> InvariantSextuple {
        let (x, y, z) = (&self.x, &self.y, &self.z);
        InvariantSextuple {
            xx: x * &x.conj(),
            xy: x * &y.conj(),
            xz: x * &z.conj(),
            yy: y * &y.conj(),
            yz: y * &z.conj(),
            zz: z * &z.conj(),
        }
    }

    /// Right-multiplies every entry by `w`. When `w` is a unit of the
    /// subalgebra generated by the entries the result is equivalent.
    pub fn right_multiply(&self, w: &FloatNumber, tol: f64) -> Result<Self, ProjectiveError> {
        Self::new(&self.x * w, &self.y * w, &self.z * w, tol)
    }

    /// A random unit in the span of `1, x, y, z, xy`, all of which lie in
    /// the subalgebra generated by the entries.
    pub fn random_unit_in_subalgebra<R: Rng + ?Sized>(&self, rng: &mut R) -> FloatNumber {
        let level = self.level();
        let xy = &self.x * &self.y;
        let gens = [&CdNumber::one(level), &self.x, &self.y, &self.z, &xy];
        loop {
            let coeffs = random_gaussian(2, rng);
            let extra: f64 = rng.sample(rand_distr::StandardNormal);
            let weights = [
                coeffs.coords()[0],
                coeffs.coords()[1],
                coeffs.coords()[2],
                coeffs.coords()[3],
                extra,
            ];
            let mut w = FloatNumber::zero(level);
            for (g, c) in gens.iter().zip(weights) {
                w = &w + &g.scale(&c);
            }
            let n = w.norm();
            if n > 1e-3 {
                return w.scale(&(1.0 / n));
            }
        }
    }

    /// An equivalent representative `(xw, yw, zw)` for a random unit `w` of
    /// the entries' subalgebra.
    pub fn random_equivalent<R: Rng + ?Sized>(&self, rng: &mut R, tol: f64) -> Result<Self, ProjectiveError> {
        let w = self.random_unit_in_subalgebra(rng);
        self.right_multiply(&w, tol)
    }
}

/// The six products whose agreement defines equivalence of triples.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantSextuple {
    pub xx: FloatNumber,
    pub xy: FloatNumber,
    pub xz: FloatNumber,
    pub yy: FloatNumber,
    pub yz: FloatNumber,
    pub zz: FloatNumber,
}

impl InvariantSextuple {
    pub fn components(&self) -> [&FloatNumber; 6] {
        [&self.xx, &self.xy, &self.xz, &self.yy, &self.yz, &self.zz]
    }

    /// Largest coordinate difference over all six components.
    pub fn max_difference(&self, other: &Self) -> f64 {
        self.components()
            .iter()
            .zip(other.components())
            .map(|(a, b)| (*a - b).max_abs())
            .fold(0.0, f64::max)
    }

    /// `xx* + yy* + zz*`, which is `1` on valid triples.
    pub fn trace(&self) -> f64 {
        self.xx.re() + self.yy.re() + self.zz.re()
    }

    /// Largest imaginary coordinate of the diagonal entries.
    pub fn diagonal_imaginary(&self) -> f64 {
        [&self.xx, &self.yy, &self.zz]
            .iter()
            .map(|d| d.imag_part().max_abs())
            .fold(0.0, f64::max)
    }
}

/// Equality of all six invariants within `tol`.
pub fn equivalent(p: &TriplePoint, q: &TriplePoint, tol: f64) -> bool {
    p.level() == q.level() && p.invariants().max_difference(&q.invariants()) <= tol
}

/// A random point of the plane: the image of a Gaussian chart point under a
/// random coordinate chart, moved to a random equivalent representative.
pub fn random_triple<R: Rng + ?Sized>(level: u32, rng: &mut R) -> Result<TriplePoint, ProjectiveError> {
    use super::chart::{chart_backward, Functional};
    check_level(level)?;
    let axis = rng.gen_range(0..3);
    let f = Functional::coordinate(axis);
    let u = random_gaussian(level, rng);
    let v = random_gaussian(level, rng);
    let p = chart_backward(&f, &u, &v)?;
    p.random_equivalent(rng, crate::DEFAULT_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{random_unit, rng};
    use crate::DEFAULT_TOL;

    fn unit_oct(seed: u64) -> FloatNumber {
        random_unit(3, &mut rng(seed))
    }

    #[test]
    fn basic_invariants() {
        let p = TriplePoint::real(3, 1.0, 0.0, 0.0).unwrap();
        let inv = p.invariants();
        assert_eq!(inv.xx, FloatNumber::one(3));
        for c in [&inv.xy, &inv.xz, &inv.yy, &inv.yz, &inv.zz] {
            assert!(c.is_zero());
        }
    }

    #[test]
    fn diagonal_unit_multiple() {
        let u = unit_oct(1);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let p = TriplePoint::new(u.scale(&s), u.scale(&s), FloatNumber::zero(3), DEFAULT_TOL).unwrap();
        let inv = p.invariants();
        let half = FloatNumber::real(3, 0.5);
        for c in [&inv.xx, &inv.yy, &inv.xy] {
            assert!(c.distance(&half) < 1e-12);
        }
        for c in [&inv.xz, &inv.yz, &inv.zz] {
            assert!(c.max_abs() < 1e-12);
        }
    }

    #[test]
    fn random_triples_have_trace_one() {
        let mut r = rng(2);
        for level in 0..=3 {
            for _ in 0..50 {
                let inv = random_triple(level, &mut r).unwrap().invariants();
                assert!((inv.trace() - 1.0).abs() < 1e-9);
                assert!(inv.diagonal_imaginary() < 1e-9);
            }
        }
    }

    #[test]
    fn equivalence_examples() {
        let e0 = TriplePoint::real(3, 1.0, 0.0, 0.0).unwrap();
        let e1 = TriplePoint::real(3, 0.0, 1.0, 0.0).unwrap();
        assert!(equivalent(&e0, &e0, DEFAULT_TOL));
        assert!(!equivalent(&e0, &e1, DEFAULT_TOL));
        let u = unit_oct(3);
        let moved = TriplePoint::new(u, FloatNumber::zero(3), FloatNumber::zero(3), DEFAULT_TOL).unwrap();
        assert!(equivalent(&e0, &moved, DEFAULT_TOL));
    }

    #[test]
    fn equivalence_is_an_equivalence() {
        let mut r = rng(4);
        for _ in 0..50 {
            let p = random_triple(3, &mut r).unwrap();
            let q = p.random_equivalent(&mut r, DEFAULT_TOL).unwrap();
            let s = q.random_equivalent(&mut r, DEFAULT_TOL).unwrap();
            assert!(equivalent(&p, &q, DEFAULT_TOL) && equivalent(&q, &p, DEFAULT_TOL));
            assert!(equivalent(&p, &s, DEFAULT_TOL));
        }
    }

    #[test]
    fn rejects_bad_triples() {
        let two = FloatNumber::real(3, 2.0);
        let z = FloatNumber::zero(3);
        assert!(matches!(
            TriplePoint::new(two, z.clone(), z.clone(), DEFAULT_TOL),
            Err(ProjectiveError::NormViolation { .. })
        ));
        // e1, e2, e4 generate the whole octonion algebra
        let s = 1.0 / 3f64.sqrt();
        let b = |i| FloatNumber::basis(3, i).unwrap().scale(&s);
        assert!(matches!(
            TriplePoint::new(b(1), b(2), b(4), DEFAULT_TOL),
            Err(ProjectiveError::NotAssociative(_))
        ));
        assert!(matches!(
            TriplePoint::new(
                FloatNumber::one(4),
                FloatNumber::zero(4),
                FloatNumber::zero(4),
                DEFAULT_TOL
            ),
            Err(ProjectiveError::UnsupportedLevel(4))
        ));
        assert!(TriplePoint::new(FloatNumber::one(3), FloatNumber::zero(2), z, DEFAULT_TOL).is_err());
    }
}
