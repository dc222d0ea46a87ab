use serde::{Deserialize, Serialize};

use super::eigen::spectrum;
use super::recurrence::{jacobi_matrix, MonicRecurrence};
use crate::error::{Error, Result};

const BILATTICE_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BilatticeReport {
    pub is_bilattice: bool,
    /// Starting points of the two progressions.
    pub offsets: (f64, f64),
    /// Common step of each progression, `nodes[2] − nodes[0]`.
    pub spacing: f64,
}

/// Whether sorted `nodes` are the union of two strictly interleaved
/// arithmetic progressions with a common step, i.e. `nodes[s + 2] − nodes[s]`
/// is the same positive number throughout (within 1e-8).
///
/// A uniform lattice is the degenerate case where the offsets differ by
/// half the step.
pub fn bilattice_check(nodes: &[f64]) -> Result<BilatticeReport> {
    if nodes.len() < 4 {
        return Err(Error::InvalidParameter("bilattice check needs at least 4 nodes".into()));
    }
    let spacing = nodes[2] - nodes[0];
    let tol = BILATTICE_TOL * spacing.abs().max(1.0);
    let increasing = nodes.windows(2).all(|w| w[0] < w[1]);
    let regular = nodes.windows(3).all(|w| (w[2] - w[0] - spacing).abs() <= tol);
    Ok(BilatticeReport {
        is_bilattice: increasing && regular && spacing > 0.0,
        offsets: (nodes[0], nodes[1]),
        spacing,
    })
}

/// Zeros of `p_n`, as eigenvalues of the leading `n × n` Jacobi block.
pub fn roots(rec: &MonicRecurrence<f64>, n: usize) -> Result<Vec<f64>> {
    spectrum(&jacobi_matrix(rec, n)?)
}

/// True if every gap of `outer` (length `k + 1`) holds exactly one point of
/// `inner` (length `k`), strictly.
pub fn interlaces(outer: &[f64], inner: &[f64]) -> bool {
    outer.len() == inner.len() + 1 && inner.iter().enumerate().all(|(i, &y)| outer[i] < y && y < outer[i + 1])
}
