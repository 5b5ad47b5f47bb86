//! The projective plane over a division algebra of the tower (levels 0..=3,
//! real dimension `d = 1, 2, 4, 8`), handled entirely through
//! representatives and their invariants.
//!
//! Points are unit-norm triples whose entries generate an associative
//! subalgebra; two triples are identified when the six products
//! `xx*, xy*, xz*, yy*, yz*, zz*` agree. All arithmetic is `f64` with
//! explicit tolerances.

mod chart;
mod line;
mod triple;

pub use chart::{
    candidate_grid, chart_backward, chart_forward, chart_round_trip, eval_functional, separating_functional, Axis,
    Functional, RoundTripErrors, ANCHOR_EPS, SEPARATION_ATTEMPTS, SEPARATION_MARGIN,
};
pub use line::{
    attaching_map, disk_extension, line_equivalent, line_include, line_to_sphere, sphere_to_line, LinePoint,
    BOUNDARY_SNAP,
};
pub use triple::{equivalent, random_triple, InvariantSextuple, TriplePoint, MAX_DIVISION_LEVEL};
