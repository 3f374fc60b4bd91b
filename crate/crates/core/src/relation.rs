//! Grid-certified witness search for the orders `Φ ≺ Ψ` and `φ ⪯ ψ`.
//!
//! Both orders ask for one constant `C` that makes a pointwise inequality hold for
//! every `t > 0`. That is only semi-decidable, so a [`RelationReport`] certifies the
//! inequality on a finite `t` grid: it is a verification on the grid, not a proof.

use serde::Serialize;

/// A candidate constant together with one argument where it fails.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CandidateViolation {
    pub c: f64,
    pub t: f64,
}

/// Outcome of a relation check on finite grids.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationReport {
    pub holds: bool,
    /// Smallest candidate for which the inequality held on the whole `t` grid.
    pub witness_c: Option<f64>,
    /// Violating argument recorded for the largest candidate, when nothing held.
    pub counterexample_t: Option<f64>,
    /// One violating `t` for each rejected candidate, in candidate order.
    pub rejected: Vec<CandidateViolation>,
    pub grid: Vec<f64>,
    pub searched_c_range: (f64, f64),
}

impl RelationReport {
    /// Witness constant, or `None` when the relation was not certified.
    pub fn witness(&self) -> Option<f64> {
        self.witness_c
    }
}

/// Scans `c_grid` in increasing order and returns the first `C` for which
/// `satisfied(C, t)` holds at every `t` in `t_grid`.
///
/// `satisfied` must be monotone in `C` (true for `C` implies true for larger `C`) for
/// "first" to mean "smallest"; every order in this crate has that property.
pub fn certify(
    t_grid: &[f64],
    c_grid: &[f64],
    mut satisfied: impl FnMut(f64, f64) -> bool,
) -> RelationReport {
    let mut candidates = c_grid.to_vec();
    candidates.sort_by(f64::total_cmp);
    let range = (
        candidates.first().copied().unwrap_or(f64::NAN),
        candidates.last().copied().unwrap_or(f64::NAN),
    );
    let mut rejected = Vec::new();
    for &c in &candidates {
        match t_grid.iter().copied().find(|&t| !satisfied(c, t)) {
            None => {
                return RelationReport {
                    holds: true,
                    witness_c: Some(c),
                    counterexample_t: None,
                    rejected,
                    grid: t_grid.to_vec(),
                    searched_c_range: range,
                }
            }
            Some(t) => rejected.push(CandidateViolation { c, t }),
        }
    }
    RelationReport {
        holds: false,
        witness_c: None,
        counterexample_t: rejected.last().map(|v| v.t),
        rejected,
        grid: t_grid.to_vec(),
        searched_c_range: range,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_candidate_is_returned() {
        let r = certify(&[1.0, 2.0, 3.0], &[0.5, 1.0, 2.0, 4.0], |c, t| t <= c * 1.5);
        assert!(r.holds);
        assert_eq!(r.witness_c, Some(2.0));
        assert_eq!(r.rejected.len(), 2);
    }

    #[test]
    fn failure_keeps_one_violation_per_candidate() {
        let r = certify(&[1.0, 10.0, 100.0], &[1.0, 2.0], |c, t| t <= c);
        assert!(!r.holds);
        assert_eq!(r.rejected.len(), 2);
        assert_eq!(r.counterexample_t, Some(10.0));
        assert_eq!(r.searched_c_range, (1.0, 2.0));
    }
}
