//! Consistency report for the cell structure a hypothetical `OP3` would
//! carry.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::cw::builtin_cw;
use super::group::{AbelianGroup, CoefficientSpec};

pub const OP3_OBSTRUCTION: &str = "If OP3 existed, its integral cohomology would be Z[x]/(x^4) with |x| = 8. \
Steenrod powers modulo 2 and 3 show that a generator x with x^3 != 0 can only exist if x has degree 2 or 4, \
so no such space exists. This conclusion is cited, not computed: no Steenrod operations are evaluated here.";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingConsistencyReport {
    pub space: String,
    /// Every degree from 0 through the top cell.
    pub groups: BTreeMap<usize, AbelianGroup>,
    /// Whether the groups are Z exactly in degrees 0, 8, 16, 24.
    pub groups_match: bool,
    pub obstruction: String,
    pub obstruction_computed: bool,
}

pub fn ring_consistency_op3() -> RingConsistencyReport {
    let cw = builtin_cw("hypothetical-OP3").expect("builtin space");
    let groups = cw.cohomology_table(CoefficientSpec::Integers);
    let groups_match = groups.iter().all(|(&k, g)| {
        let expected = if k % 8 == 0 {
            AbelianGroup::free(1)
        } else {
            AbelianGroup::trivial()
        };
        *g == expected
    }) && groups.len() == 25;
    RingConsistencyReport {
        space: cw.name.clone(),
        groups,
        groups_match,
        obstruction: OP3_OBSTRUCTION.to_string(),
        obstruction_computed: false,
    }
}
