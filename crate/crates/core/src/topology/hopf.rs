//! Desk-scale evidence for Hopf invariant one: determinants of the
//! multiplication operators, and the linking number of two fibers of the
//! complex Hopf map.

use std::f64::consts::PI;

use nalgebra::{DMatrix, Matrix4, Vector3, Vector4};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::TopologyError;
use crate::number::{dim, FloatNumber};
use crate::projective::sphere_to_line;
use crate::sampling::{random_sphere_point, random_unit, rng};

/// Magnitude slack allowed on `|det|` before it counts as non-unit.
pub const DET_TOL: f64 = 1e-6;
/// Regular values closer than this angle (radians) are resampled.
pub const MIN_VALUE_SEPARATION: f64 = 0.1;
pub const MIN_SEGMENTS: usize = 64;
const RESAMPLE_ATTEMPTS: usize = 1000;

/// Matrix of `x -> b x` in the standard basis.
pub fn left_multiplication_matrix(b: &FloatNumber) -> DMatrix<f64> {
    operator_matrix(b.level(), |e| b * e)
}

/// Matrix of `x -> x a` in the standard basis.
pub fn right_multiplication_matrix(a: &FloatNumber) -> DMatrix<f64> {
    operator_matrix(a.level(), |e| e * a)
}

fn operator_matrix(level: u32, f: impl Fn(&FloatNumber) -> FloatNumber) -> DMatrix<f64> {
    let n = dim(level);
    let mut m = DMatrix::zeros(n, n);
    for j in 0..n {
        let image = f(&FloatNumber::basis(level, j).expect("index in range"));
        for (i, c) in image.coords().iter().enumerate() {
            m[(i, j)] = *c;
        }
    }
    m
}

/// Result of [`multiplication_bidegree`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bidegree {
    pub left: i32,
    pub right: i32,
    pub samples: usize,
    /// Largest `||det| - 1|` seen over all samples.
    pub max_det_deviation: f64,
}

impl Bidegree {
    /// `p * q`, the Hopf invariant of the Hopf construction up to sign.
    pub fn product(&self) -> i32 {
        self.left * self.right
    }
}

/// Degrees of `x -> b x` and `y -> y a` read off from determinant signs for
/// `samples` random unit `a`, `b`.
pub fn multiplication_bidegree(level: u32, samples: usize, seed: u64) -> Result<Bidegree, TopologyError> {
    if !(1..=3).contains(&level) {
        return Err(TopologyError::InvalidArgument(format!(
            "bidegree needs a division algebra level in 1..=3, got {level}"
        )));
    }
    if samples == 0 {
        return Err(TopologyError::InvalidArgument("samples must be positive".into()));
    }
    let mut r = rng(seed);
    let mut signs = [None::<i32>; 2];
    let mut max_dev: f64 = 0.0;
    for _ in 0..samples {
        let b = random_unit(level, &mut r);
        let a = random_unit(level, &mut r);
        let dets = [
            left_multiplication_matrix(&b).determinant(),
            right_multiplication_matrix(&a).determinant(),
        ];
        for (slot, det) in signs.iter_mut().zip(dets) {
            let dev = (det.abs() - 1.0).abs();
            max_dev = max_dev.max(dev);
            if dev > DET_TOL {
                return Err(TopologyError::Inconsistent(format!(
                    "determinant {det} of a unit multiplication is not +-1"
                )));
            }
            let sign = if det > 0.0 { 1 } else { -1 };
            match slot {
                Some(s) if *s != sign => {
                    return Err(TopologyError::Inconsistent(
                        "determinant sign changes across units".into(),
                    ))
                }
                _ => *slot = Some(sign),
            }
        }
    }
    Ok(Bidegree {
        left: signs[0].expect("samples > 0"),
        right: signs[1].expect("samples > 0"),
        samples,
        max_det_deviation: max_dev,
    })
}

/// Gauss linking number of two closed polygons (vertex lists, closing edge
/// implied), summed exactly over segment pairs via the signed solid angle
/// of each pair (Klenin and Langowski).
pub fn gauss_linking_number(a: &[Vector3<f64>], b: &[Vector3<f64>]) -> f64 {
    let mut total = 0.0;
    for i in 0..a.len() {
        let (p1, p2) = (a[i], a[(i + 1) % a.len()]);
        for j in 0..b.len() {
            let (p3, p4) = (b[j], b[(j + 1) % b.len()]);
            total += segment_solid_angle(p1, p2, p3, p4);
        }
    }
    total / (4.0 * PI)
}

fn segment_solid_angle(p1: Vector3<f64>, p2: Vector3<f64>, p3: Vector3<f64>, p4: Vector3<f64>) -> f64 {
    let r13 = p3 - p1;
    let r14 = p4 - p1;
    let r23 = p3 - p2;
    let r24 = p4 - p2;
    let faces = [r13.cross(&r14), r14.cross(&r24), r24.cross(&r23), r23.cross(&r13)];
    let mut n = [Vector3::zeros(); 4];
    for (dst, f) in n.iter_mut().zip(faces) {
        let len = f.norm();
        if len < 1e-300 {
            return 0.0;
        }
        *dst = f / len;
    }
    let omega: f64 = (0..4).map(|k| n[k].dot(&n[(k + 1) % 4]).clamp(-1.0, 1.0).asin()).sum();
    let orient = (p4 - p3).cross(&(p2 - p1)).dot(&r13);
    omega * orient.signum()
}

/// Fiber of the complex Hopf map over `s` in `S^2`, as `segments` points
/// `(x e^{it}, y e^{it})` of `S^3` in `R^4`.
pub fn hopf_fiber(s: &[f64], segments: usize) -> Result<Vec<Vector4<f64>>, TopologyError> {
    let p = sphere_to_line(s, 1e-9)?;
    let (x, y) = (p.x(), p.y());
    Ok((0..segments)
        .map(|k| {
            let t = 2.0 * PI * k as f64 / segments as f64;
            let u = FloatNumber::from_coords(vec![t.cos(), t.sin()]).expect("length 2");
            let (xu, yu) = (x * &u, y * &u);
            Vector4::new(xu.coords()[0], xu.coords()[1], yu.coords()[0], yu.coords()[1])
        })
        .collect())
}

/// Stereographic projection of `S^3` from `pole` onto the orthogonal
/// hyperplane, in an orthonormal frame `f1, f2, f3` with
/// `det[f1, f2, f3, pole] = +1`.
#[derive(Debug, Clone)]
pub struct Stereographic {
    pole: Vector4<f64>,
    frame: [Vector4<f64>; 3],
}

impl Stereographic {
    pub fn new(pole: Vector4<f64>) -> Self {
        let pole = pole.normalize();
        let mut frame: Vec<Vector4<f64>> = Vec::with_capacity(3);
        for k in 0..4 {
            if frame.len() == 3 {
                break;
            }
            let mut v = Vector4::ith(k, 1.0);
            v -= pole * pole.dot(&v);
            for f in &frame {
                v -= *f * f.dot(&v);
            }
            if v.norm() > 1e-6 {
                frame.push(v.normalize());
            }
        }
        let mut frame = [frame[0], frame[1], frame[2]];
        if Matrix4::from_columns(&[frame[0], frame[1], frame[2], pole]).determinant() < 0.0 {
            frame[2] = -frame[2];
        }
        Self { pole, frame }
    }

    pub fn project(&self, q: &Vector4<f64>) -> Vector3<f64> {
        let scale = 1.0 / (1.0 - q.dot(&self.pole));
        Vector3::new(
            self.frame[0].dot(q) * scale,
            self.frame[1].dot(q) * scale,
            self.frame[2].dot(q) * scale,
        )
    }
}

/// Among the poles `+-e_i` and `(+-1, +-1, +-1, +-1)/2`, the one farthest
/// from every vertex.
fn choose_pole(points: &[Vector4<f64>]) -> Vector4<f64> {
    let axes = (0..8).map(|k| Vector4::ith(k / 2, if k % 2 == 0 { 1.0 } else { -1.0 }));
    let diagonals = (0..16).map(|k: usize| Vector4::from_fn(|i, _| if k >> i & 1 == 0 { 0.5 } else { -0.5 }));
    let candidates = axes.chain(diagonals);
    let clearance = |p: &Vector4<f64>| points.iter().map(|q| (q - p).norm()).fold(f64::INFINITY, f64::min);
    candidates
        .max_by(|p, q| clearance(p).total_cmp(&clearance(q)))
        .expect("nonempty candidates")
}

/// Linking number of the fibers over `s1`, `s2` after stereographic
/// projection, as a real number (close to an integer when resolved).
pub fn fiber_linking_number(s1: &[f64], s2: &[f64], segments: usize) -> Result<f64, TopologyError> {
    if segments < MIN_SEGMENTS {
        return Err(TopologyError::InvalidArgument(format!(
            "at least {MIN_SEGMENTS} segments required, got {segments}"
        )));
    }
    let f1 = hopf_fiber(s1, segments)?;
    let f2 = hopf_fiber(s2, segments)?;
    let all: Vec<_> = f1.iter().chain(&f2).copied().collect();
    let proj = Stereographic::new(choose_pole(&all));
    let c1: Vec<_> = f1.iter().map(|q| proj.project(q)).collect();
    let c2: Vec<_> = f2.iter().map(|q| proj.project(q)).collect();
    Ok(gauss_linking_number(&c1, &c2))
}

fn angle(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>().clamp(-1.0, 1.0).acos()
}

/// Two random points of `S^2` at least [`MIN_VALUE_SEPARATION`] apart.
pub fn random_value_pair<R: Rng + ?Sized>(rng: &mut R) -> Result<(Vec<f64>, Vec<f64>), TopologyError> {
    for _ in 0..RESAMPLE_ATTEMPTS {
        let a = random_sphere_point(3, rng);
        let b = random_sphere_point(3, rng);
        if angle(&a, &b) >= MIN_VALUE_SEPARATION {
            return Ok((a, b));
        }
    }
    Err(TopologyError::Geometry(
        "could not sample separated regular values".into(),
    ))
}

/// Linking number of two fibers of the complex Hopf map, checked to be the
/// same integer over `samples` seeded regular-value pairs.
pub fn linking_hopf_invariant(samples: usize, segments: usize, seed: u64) -> Result<i64, TopologyError> {
    if samples == 0 {
        return Err(TopologyError::InvalidArgument("samples must be positive".into()));
    }
    let mut r = rng(seed);
    let mut value = None;
    for _ in 0..samples {
        let (a, b) = random_value_pair(&mut r)?;
        let lk = fiber_linking_number(&a, &b, segments)?;
        let rounded = lk.round();
        if (lk - rounded).abs() > 0.1 {
            return Err(TopologyError::Geometry(format!(
                "linking number {lk} is not near an integer"
            )));
        }
        let rounded = rounded as i64;
        match value {
            Some(v) if v != rounded => {
                return Err(TopologyError::Inconsistent(format!(
                    "fiber linking numbers disagree: {v} and {rounded}"
                )))
            }
            _ => value = Some(rounded),
        }
    }
    Ok(value.expect("samples > 0"))
}
