use rand::Rng;
use serde::Serialize;

use super::triple::TriplePoint;
use crate::error::ProjectiveError;
use crate::number::{CdNumber, FloatNumber};
use crate::sampling::{random_sphere_point, rng};
use crate::DEFAULT_TOL;

/// Coefficients below this magnitude cannot anchor a chart.
pub const ANCHOR_EPS: f64 = 1e-12;

/// The real linear functional `l(x, y, z) = ax + by + cz`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Functional {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    /// Positions of the two chart coordinates followed by the anchor.
    fn order(self) -> [usize; 3] {
        match self {
            Axis::Z => [0, 1, 2],
            Axis::Y => [0, 2, 1],
            Axis::X => [1, 2, 0],
        }
    }

    fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }
}

impl Functional {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self, ProjectiveError> {
        if a == 0.0 && b == 0.0 && c == 0.0 {
            return Err(ProjectiveError::ZeroFunctional);
        }
        Ok(Self { a, b, c })
    }

    /// The coordinate functional `(1,0,0)`, `(0,1,0)` or `(0,0,1)`.
    pub fn coordinate(axis: usize) -> Self {
        let mut abc = [0.0; 3];
        abc[axis] = 1.0;
        Self {
            a: abc[0],
            b: abc[1],
            c: abc[2],
        }
    }

    pub fn coefficients(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    /// The chart anchor: `c` when usable, else `b`, else `a`.
    pub fn anchor(&self) -> Result<Axis, ProjectiveError> {
        [Axis::Z, Axis::Y, Axis::X]
            .into_iter()
            .find(|ax| self.coefficients()[ax.index()].abs() >= ANCHOR_EPS)
            .ok_or(ProjectiveError::ZeroFunctional)
    }

    pub fn eval(&self, p: &TriplePoint) -> FloatNumber {
        let [x, y, z] = p.entries();
        let sum = &x.scale(&self.a) + &y.scale(&self.b);
        &sum + &z.scale(&self.c)
    }

    /// Membership in the chart domain `l(p) != 0`.
    pub fn contains(&self, p: &TriplePoint, tol: f64) -> bool {
        self.eval(p).norm() > tol
    }
}

pub fn eval_functional(f: &Functional, p: &TriplePoint) -> FloatNumber {
    f.eval(p)
}

/// `[x, y, z] -> (x l* / |l|^2, y l* / |l|^2)` in the coordinates left over
/// by the anchor axis.
pub fn chart_forward(f: &Functional, p: &TriplePoint, tol: f64) -> Result<(FloatNumber, FloatNumber), ProjectiveError> {
    let order = f.anchor()?.order();
    let l = f.eval(p);
    let n = l.norm_sq();
    if n.sqrt() <= tol {
        return Err(ProjectiveError::OutsideChart(n.sqrt()));
    }
    let w = l.conj().scale(&(1.0 / n));
    let entries = p.entries();
    Ok((entries[order[0]] * &w, entries[order[1]] * &w))
}

/// `(u, v) -> [u/r, v/r, (1 - au - bv)/(cr)]` with the anchor coefficient
/// playing the role of `c`; the result is renormalized.
pub fn chart_backward(f: &Functional, u: &FloatNumber, v: &FloatNumber) -> Result<TriplePoint, ProjectiveError> {
    let axis = f.anchor()?;
    let order = axis.order();
    let coeffs = f.coefficients();
    let (alpha, beta, gamma) = (coeffs[order[0]], coeffs[order[1]], coeffs[order[2]]);
    let level = u.level();
    u.try_mul(v)?;
    let one = CdNumber::one(level);
    let w = &(&one - &u.scale(&alpha)) - &v.scale(&beta);
    let r = (u.norm_sq() + v.norm_sq() + w.norm_sq() / (gamma * gamma)).sqrt();
    let mut slots = [
        FloatNumber::zero(level),
        FloatNumber::zero(level),
        FloatNumber::zero(level),
    ];
    slots[order[0]] = u.scale(&(1.0 / r));
    slots[order[1]] = v.scale(&(1.0 / r));
    slots[order[2]] = w.scale(&(1.0 / (gamma * r)));
    let [x, y, z] = slots;
    TriplePoint::normalized(x, y, z, DEFAULT_TOL)
}

/// Grid of candidate functionals tried in order by [`separating_functional`].
pub fn candidate_grid() -> Vec<Functional> {
    let mut grid = Vec::new();
    for abc in [
        [1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, 0.0, 1.0],
        [1.0, 1.0, 0.0],
        [1.0, 0.0, 1.0],
        [0.0, 1.0, 1.0],
        [1.0, 1.0, 1.0],
        [1.0, -1.0, 0.0],
        [1.0, 0.0, -1.0],
        [0.0, 1.0, -1.0],
        [1.0, -1.0, 1.0],
        [1.0, 1.0, -1.0],
        [-1.0, 1.0, 1.0],
        [1.0, 2.0, 3.0],
        [3.0, -2.0, 1.0],
    ] {
        grid.push(Functional {
            a: abc[0],
            b: abc[1],
            c: abc[2],
        });
    }
    grid
}

/// Minimum of `|l(p)|`, `|l(q)|` relative to `|(a, b, c)|` that the grid
/// search insists on before accepting a candidate outright.
pub const SEPARATION_MARGIN: f64 = 0.05;
/// Random fallback attempts after the grid.
pub const SEPARATION_ATTEMPTS: usize = 256;

fn separation(f: &Functional, p: &TriplePoint, q: &TriplePoint) -> f64 {
    let scale = f.coefficients().iter().map(|c| c * c).sum::<f64>().sqrt();
    f.eval(p).norm().min(f.eval(q).norm()) / scale
}

/// A functional nonvanishing on both points, so both lie in one chart.
///
/// The grid is scanned in order for a candidate clearing
/// [`SEPARATION_MARGIN`]; failing that, seeded random unit triples are
/// tried, and the best candidate seen is returned if it clears `tol`.
pub fn separating_functional(p: &TriplePoint, q: &TriplePoint, tol: f64) -> Result<Functional, ProjectiveError> {
    let mut best: Option<(f64, Functional)> = None;
    let mut consider = |f: Functional| {
        let s = separation(&f, p, q);
        if best.is_none_or(|(b, _)| s > b) {
            best = Some((s, f));
        }
        s >= SEPARATION_MARGIN
    };
    for f in candidate_grid() {
        if consider(f) {
            return Ok(f);
        }
    }
    let mut r = rng(0x5e9a_4a7e);
    for _ in 0..SEPARATION_ATTEMPTS {
        let v = random_sphere_point(3, &mut r);
        if consider(Functional {
            a: v[0],
            b: v[1],
            c: v[2],
        }) {
            break;
        }
    }
    match best {
        Some((s, f)) if s > tol => Ok(f),
        _ => Err(ProjectiveError::SearchExhausted(
            candidate_grid().len() + SEPARATION_ATTEMPTS,
        )),
    }
}

/// Largest round-trip errors of one chart over `samples` random inputs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RoundTripErrors {
    /// `max |phi(psi(u, v)) - (u, v)|`.
    pub forward_backward: f64,
    /// `max` six-invariant difference between `psi(phi(p))` and `p`.
    pub backward_forward: f64,
    /// `max` chart difference between equivalent representatives.
    pub well_defined: f64,
}

impl RoundTripErrors {
    pub fn max(&self) -> f64 {
        self.forward_backward.max(self.backward_forward).max(self.well_defined)
    }
}

pub fn chart_round_trip<R: Rng + ?Sized>(
    f: &Functional,
    level: u32,
    samples: usize,
    rng: &mut R,
) -> Result<RoundTripErrors, ProjectiveError> {
    use crate::sampling::random_gaussian;
    super::triple::check_level(level)?;
    let mut errs = RoundTripErrors {
        forward_backward: 0.0,
        backward_forward: 0.0,
        well_defined: 0.0,
    };
    let mut done = 0;
    while done < samples {
        let u = random_gaussian(level, rng);
        let v = random_gaussian(level, rng);
        let p = chart_backward(f, &u, &v)?;
        let (u2, v2) = chart_forward(f, &p, DEFAULT_TOL)?;
        errs.forward_backward = errs.forward_backward.max(u.distance(&u2)).max(v.distance(&v2));

        let q = super::triple::random_triple(level, rng)?;
        if f.eval(&q).norm() < 1e-3 {
            continue;
        }
        let (a, b) = chart_forward(f, &q, DEFAULT_TOL)?;
        let back = chart_backward(f, &a, &b)?;
        errs.backward_forward = errs
            .backward_forward
            .max(back.invariants().max_difference(&q.invariants()));

        let q2 = q.random_equivalent(rng, DEFAULT_TOL)?;
        let (a2, b2) = chart_forward(f, &q2, DEFAULT_TOL)?;
        errs.well_defined = errs.well_defined.max(a.distance(&a2)).max(b.distance(&b2));
        done += 1;
    }
    Ok(errs)
}
