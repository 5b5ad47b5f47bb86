//! Signed multiplication tables on basis elements.
//!
//! Basis products are computed by unfolding the doubling rule on index
//! halves, so a full table costs `O(4^n * n)` integer work instead of `4^n`
//! exact products.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::number::dim;

/// Tables are capped at level 6 (64 x 64 entries).
pub const MAX_TABLE_LEVEL: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableEntry {
    pub sign: i8,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicationTable {
    pub level: u32,
    pub basis: Vec<String>,
    pub table: Vec<Vec<TableEntry>>,
}

fn conj_sign(index: usize) -> i8 {
    if index == 0 {
        1
    } else {
        -1
    }
}

/// `e_i * e_j = sign * e_index` at the given level.
pub fn basis_product(level: u32, i: usize, j: usize) -> TableEntry {
    if level == 0 {
        return TableEntry { sign: 1, index: 0 };
    }
    let h = dim(level - 1);
    match (i < h, j < h) {
        // (a,0)(c,0) = (ac, 0)
        (true, true) => basis_product(level - 1, i, j),
        // (a,0)(0,d) = (0, da)
        (true, false) => {
            let t = basis_product(level - 1, j - h, i);
            TableEntry {
                sign: t.sign,
                index: t.index + h,
            }
        }
        // (0,b)(c,0) = (0, bc*)
        (false, true) => {
            let t = basis_product(level - 1, i - h, j);
            TableEntry {
                sign: t.sign * conj_sign(j),
                index: t.index + h,
            }
        }
        // (0,b)(0,d) = (-d*b, 0)
        (false, false) => {
            let t = basis_product(level - 1, j - h, i - h);
            TableEntry {
                sign: -t.sign * conj_sign(j - h),
                index: t.index,
            }
        }
    }
}

/// Row-major signed tables for every level up to [`MAX_TABLE_LEVEL`],
/// built on first use.
pub(crate) fn flat_table(level: u32) -> Option<&'static [TableEntry]> {
    static TABLES: OnceLock<Vec<Vec<TableEntry>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        (0..=MAX_TABLE_LEVEL)
            .map(|l| {
                let n = dim(l);
                (0..n * n).map(|k| basis_product(l, k / n, k % n)).collect()
            })
            .collect()
    });
    tables.get(level as usize).map(Vec::as_slice)
}

impl MultiplicationTable {
    pub fn build(level: u32) -> Result<Self, AlgebraError> {
        if level > MAX_TABLE_LEVEL {
            return Err(AlgebraError::LevelTooLarge {
                level,
                max: MAX_TABLE_LEVEL,
            });
        }
        let n = dim(level);
        let table = (0..n)
            .map(|i| (0..n).map(|j| basis_product(level, i, j)).collect())
            .collect();
        Ok(Self {
            level,
            basis: (0..n).map(|i| format!("e{i}")).collect(),
            table,
        })
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn get(&self, i: usize, j: usize) -> TableEntry {
        self.table[i][j]
    }

    /// Every row and every column hits each basis index exactly once.
    pub fn is_signed_permutation(&self) -> bool {
        let n = self.size();
        let mut seen_rows = vec![false; n];
        let mut seen_cols = vec![false; n];
        for i in 0..n {
            seen_rows.iter_mut().for_each(|s| *s = false);
            seen_cols.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let r = self.table[i][j].index;
                let c = self.table[j][i].index;
                if seen_rows[r] || seen_cols[c] {
                    return false;
                }
                seen_rows[r] = true;
                seen_cols[c] = true;
            }
        }
        true
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }
}
