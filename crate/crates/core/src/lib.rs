//! Cayley-Dickson algebras, the octonionic projective plane, and its
//! cellular cohomology.
//!
//! - [`number`] and [`table`]: the doubling tower over exact rationals or `f64`.
//! - [`properties`]: exact audits of commutativity, associativity,
//!   alternativity, flexibility, norm multiplicativity and zero divisors.
//! - [`projective`]: constrained triples, the six-invariant equivalence,
//!   affine charts, the projective line and the cell attaching map.
//! - [`topology`]: Smith normal form, cellular (co)homology, and Hopf
//!   invariant evidence.

pub mod error;
pub mod number;
pub mod projective;
pub mod properties;
pub mod sampling;
pub mod scalar;
pub mod table;
pub mod topology;

pub use error::{AlgebraError, ProjectiveError, TopologyError};
pub use number::{CdNumber, ExactNumber, FloatNumber, Inverse};
pub use properties::{Property, PropertyReport, Verdict};
pub use scalar::{Exact, Scalar, DEFAULT_TOL};
pub use table::{MultiplicationTable, TableEntry};
