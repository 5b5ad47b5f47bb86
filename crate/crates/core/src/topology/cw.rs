//! Finite CW complexes described by cells and cellular boundary matrices,
//! and their (co)homology.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::group::{AbelianGroup, CoefficientSpec};
use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::error::TopologyError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub id: String,
    pub dim: usize,
}

/// Cells plus the boundary maps `d_k : C_k -> C_(k-1)`.
///
/// `d_k` has shape `(#cells of dim k-1) x (#cells of dim k)`; degrees that
/// are not given explicitly are zero maps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CwDescription {
    pub name: String,
    cells: Vec<Cell>,
    boundaries: BTreeMap<usize, IntMatrix>,
}

impl CwDescription {
    pub fn new(
        name: impl Into<String>,
        cells: Vec<Cell>,
        boundaries: Vec<(usize, IntMatrix)>,
    ) -> Result<Self, TopologyError> {
        let cw = Self {
            name: name.into(),
            cells,
            boundaries: boundaries.into_iter().collect(),
        };
        for (&k, m) in &cw.boundaries {
            let expected = (cw.count(k.wrapping_sub(1)), cw.count(k));
            if k == 0 || m.shape() != expected {
                return Err(TopologyError::BoundaryShape {
                    degree: k,
                    rows: m.rows(),
                    cols: m.cols(),
                    expected_rows: expected.0,
                    expected_cols: expected.1,
                });
            }
        }
        for k in 2..=cw.top_dim() {
            if !(&cw.boundary(k - 1) * &cw.boundary(k)).is_zero() {
                return Err(TopologyError::BoundaryNotClosed(k));
            }
        }
        Ok(cw)
    }

    /// One cell in each listed dimension, all boundaries zero.
    pub fn with_cells_in(name: impl Into<String>, dims: &[usize]) -> Result<Self, TopologyError> {
        let cells = dims
            .iter()
            .map(|&d| Cell {
                id: format!("e{d}"),
                dim: d,
            })
            .collect();
        Self::new(name, cells, vec![])
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Number of cells of dimension `k`.
    pub fn count(&self, k: usize) -> usize {
        self.cells.iter().filter(|c| c.dim == k).count()
    }

    pub fn top_dim(&self) -> usize {
        self.cells.iter().map(|c| c.dim).max().unwrap_or(0)
    }

    pub fn dims(&self) -> BTreeSet<usize> {
        self.cells.iter().map(|c| c.dim).collect()
    }

    /// `d_k`, materialized as a zero matrix when not given.
    pub fn boundary(&self, k: usize) -> IntMatrix {
        if k == 0 {
            return IntMatrix::zeros(0, self.count(0));
        }
        self.boundaries
            .get(&k)
            .cloned()
            .unwrap_or_else(|| IntMatrix::zeros(self.count(k - 1), self.count(k)))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells.iter().map(|c| if c.dim % 2 == 0 { 1 } else { -1 }).sum()
    }

    /// Rank and invariant factors of `d_k`.
    fn boundary_data(&self, k: usize) -> (usize, Vec<u64>) {
        if k == 0 || k > self.top_dim() {
            return (0, vec![]);
        }
        let snf = smith_normal_form(&self.boundary(k));
        let factors = snf.invariant_factors();
        let orders = factors
            .iter()
            .map(|f| f.to_u64().expect("invariant factor fits in u64"))
            .collect();
        (factors.len(), orders)
    }

    /// Integral cellular homology `H_k`.
    pub fn homology(&self, k: usize) -> AbelianGroup {
        let (rank_k, _) = self.boundary_data(k);
        let (rank_up, factors_up) = self.boundary_data(k + 1);
        AbelianGroup::from_parts(self.count(k) - rank_k - rank_up, &factors_up)
    }

    /// Cellular cohomology `H^k(X; A)`.
    ///
    /// After Smith reduction the cochain complex splits into free summands
    /// and two-term pieces `A --s--> A`. A piece coming from `d_(k+1)`
    /// contributes the kernel `A[s]` in degree `k`; a piece from `d_k`
    /// contributes the cokernel `A/sA`.
    pub fn cohomology(&self, k: usize, coeffs: CoefficientSpec) -> AbelianGroup {
        let (rank_k, factors_k) = self.boundary_data(k);
        let (rank_up, factors_up) = self.boundary_data(k + 1);
        let free = coeffs.power(self.count(k) - rank_k - rank_up);
        let mut orders = free.torsion.clone();
        for &s in &factors_up {
            orders.extend(coeffs.torsion_of(s));
        }
        for &s in &factors_k {
            orders.extend(coeffs.quotient_by(s));
        }
        AbelianGroup::from_parts(free.rank, &orders)
    }

    /// `H^k` for every `k` in `0..=top_dim`.
    pub fn cohomology_table(&self, coeffs: CoefficientSpec) -> BTreeMap<usize, AbelianGroup> {
        (0..=self.top_dim()).map(|k| (k, self.cohomology(k, coeffs))).collect()
    }
}

/// Standard minimal cell structures, looked up by name.
///
/// `RP2`, `CP2`, `HP2`, `OP2`, `OP1` (alias `S8`) and `OP3` (alias
/// `hypothetical-OP3`): the last has one cell in each of the dimensions
/// 0, 8, 16, 24 and exists only as a cell description.
pub fn builtin_cw(name: &str) -> Result<CwDescription, TopologyError> {
    match name {
        "RP2" => CwDescription::new(
            "RP2",
            vec![
                Cell {
                    id: "e0".into(),
                    dim: 0,
                },
                Cell {
                    id: "e1".into(),
                    dim: 1,
                },
                Cell {
                    id: "e2".into(),
                    dim: 2,
                },
            ],
            vec![
                (1, IntMatrix::from_rows(&[vec![0]])),
                (2, IntMatrix::from_rows(&[vec![2]])),
            ],
        ),
        "CP2" => CwDescription::with_cells_in("CP2", &[0, 2, 4]),
        "HP2" => CwDescription::with_cells_in("HP2", &[0, 4, 8]),
        "OP2" => CwDescription::with_cells_in("OP2", &[0, 8, 16]),
        "OP1" | "S8" => CwDescription::with_cells_in("OP1", &[0, 8]),
        "OP3" | "hypothetical-OP3" => CwDescription::with_cells_in("hypothetical-OP3", &[0, 8, 16, 24]),
        other => Err(TopologyError::UnknownSpace(other.to_string())),
    }
}

pub const BUILTIN_NAMES: [&str; 6] = ["RP2", "CP2", "HP2", "OP2", "OP1", "OP3"];
