//! Cellular (co)homology over Z, Z/m and Q, and Hopf invariant proxies.

pub mod cw;
pub mod group;
pub mod hopf;
pub mod matrix;
pub mod report;
pub mod snf;

pub use cw::{builtin_cw, Cell, CwDescription, BUILTIN_NAMES};
pub use group::{AbelianGroup, CoefficientSpec};
pub use hopf::{
    fiber_linking_number, gauss_linking_number, hopf_fiber, left_multiplication_matrix, linking_hopf_invariant,
    multiplication_bidegree, random_value_pair, right_multiplication_matrix, Bidegree, Stereographic, DET_TOL,
    MIN_SEGMENTS, MIN_VALUE_SEPARATION,
};
pub use matrix::IntMatrix;
pub use report::{ring_consistency_op3, RingConsistencyReport, OP3_OBSTRUCTION};
pub use snf::{smith_normal_form, SmithForm};
