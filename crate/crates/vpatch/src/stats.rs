//! Monte Carlo patch-size tables.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use vpatch_core::metrics::{patch_area_trial, total_pixels_moved, PatchStats};
use vpatch_core::Error as CoreError;

use crate::error::{PipelineError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TotalRow {
    pub generators: usize,
    pub patches: usize,
    pub total_pixels_moved: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub version: String,
    pub width: usize,
    pub height: usize,
    pub trials: usize,
    pub seed: u64,
    pub patch_stats: Vec<PatchStats>,
    pub totals: Vec<TotalRow>,
}

impl StatsReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// Same result as `vpatch_core::metrics::patch_size_stats`, with trials
/// spread over the rayon pool and gathered in trial order.
pub fn par_patch_size_stats(
    n_generators: usize,
    width: usize,
    height: usize,
    trials: usize,
    seed: u64,
) -> Result<PatchStats> {
    if trials == 0 {
        return Err(PipelineError::Config("trials must be at least 1".into()));
    }
    let per_trial: Vec<Option<f64>> = (0..trials as u64)
        .into_par_iter()
        .map(|t| patch_area_trial(n_generators, width, height, seed, t))
        .collect::<Result<_, CoreError>>()?;
    let samples: Vec<f64> = per_trial.into_iter().flatten().collect();
    PatchStats::from_samples(n_generators, &samples).ok_or(CoreError::DegenerateGeometry.into())
}

/// Patch statistics for every generator count and the total-pixels-moved
/// matrix over `generators x patches`.
pub fn stats_command(
    generators: &[usize],
    patches: &[usize],
    trials: usize,
    seed: u64,
    size: (usize, usize),
) -> Result<StatsReport> {
    if generators.is_empty() || patches.is_empty() {
        return Err(PipelineError::Config(
            "generator and patch lists must be non-empty".into(),
        ));
    }
    if patches.contains(&0) {
        return Err(PipelineError::Config(
            "patch counts must be at least 1".into(),
        ));
    }
    let patch_stats = generators
        .iter()
        .map(|&g| par_patch_size_stats(g, size.0, size.1, trials, seed))
        .collect::<Result<Vec<_>>>()?;
    let totals = patch_stats
        .iter()
        .flat_map(|s| {
            patches.iter().map(move |&p| TotalRow {
                generators: s.generators,
                patches: p,
                total_pixels_moved: total_pixels_moved(s, p),
            })
        })
        .collect();
    Ok(StatsReport {
        version: vpatch_core::VERSION.to_string(),
        width: size.0,
        height: size.1,
        trials,
        seed,
        patch_stats,
        totals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use vpatch_core::metrics::patch_size_stats;

    #[test]
    fn parallel_matches_sequential() {
        let a = par_patch_size_stats(25, 96, 96, 12, 5).unwrap();
        let b = patch_size_stats(25, 96, 96, 12, 5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn grid_shape() {
        let r = stats_command(&[20, 30], &[5, 10, 15], 3, 1, (96, 96)).unwrap();
        assert_eq!(r.patch_stats.len(), 2);
        assert_eq!(r.totals.len(), 6);
        for row in &r.totals {
            let s = r
                .patch_stats
                .iter()
                .find(|s| s.generators == row.generators)
                .unwrap();
            assert_eq!(row.total_pixels_moved, s.mean * row.patches as f64);
        }
    }

    #[test]
    fn single_trial_has_zero_spread() {
        let r = stats_command(&[30], &[1], 1, 4, (96, 96)).unwrap();
        let s = r.patch_stats[0];
        assert_eq!((s.std, s.min, s.max), (0.0, s.mean, s.mean));
    }

    #[test]
    fn empty_lists_rejected() {
        assert!(stats_command(&[], &[5], 1, 0, (96, 96)).is_err());
        assert!(stats_command(&[50], &[], 1, 0, (96, 96)).is_err());
    }
}
