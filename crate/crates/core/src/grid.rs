//! Sample grids shared by the relation checkers, class validators and norm sweeps.

/// `n` logarithmically spaced points from `lo` to `hi` inclusive.
///
/// Both endpoints are returned exactly.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi >= lo, "log_grid needs 0 < lo <= hi");
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let (a, b) = (lo.ln(), hi.ln());
            let step = (b - a) / (n - 1) as f64;
            (0..n)
                .map(|k| match k {
                    0 => lo,
                    k if k == n - 1 => hi,
                    k => (a + step * k as f64).exp(),
                })
                .collect()
        }
    }
}

/// Default argument grid for the Young/growth relations: 200 points on [1e-6, 1e6].
pub fn default_t_grid() -> Vec<f64> {
    log_grid(1e-6, 1e6, 200)
}

/// Default candidate constants: `10^(0.08 k)` for `k = -50..=50`.
///
/// Spans [1e-4, 1e4] and contains 1 exactly, so reflexive relations report witness 1.
/// Products of grid points that stay in range are grid points.
pub fn default_c_grid() -> Vec<f64> {
    (-50..=50).map(|k| 10f64.powf(0.08 * k as f64)).collect()
}

/// Default `s` values for the G₂ check (one per decade on [1e-6, 1e6]).
pub fn default_s_grid() -> Vec<f64> {
    (-6..=6).map(|k| 10f64.powi(k)).collect()
}

/// Default radii for global sweeps: `2^k`, `k = -6..=6`.
pub fn default_radii() -> Vec<f64> {
    (-6..=6).map(|k| 2f64.powi(k)).collect()
}

/// Sorted union of two radius lists with exact duplicates removed.
pub fn merge_sorted(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out: Vec<f64> = a.iter().chain(b).copied().collect();
    out.sort_by(f64::total_cmp);
    out.dedup();
    out
}

pub(crate) fn is_strictly_increasing(xs: &[f64]) -> bool {
    xs.windows(2).all(|w| w[0] < w[1])
}
