//! Analysis instruments: prediction entropy, structural similarity and
//! Monte Carlo statistics of patch sizes.

mod entropy;
mod ssim;
mod stats;

pub use entropy::{entropy, mean_entropy, ProbDist};
pub use ssim::{ssim, SsimParams};
pub use stats::{
    mean_bounded_area, mean_ssim_for_config, mean_ssim_with, patch_area_trial, patch_size_stats,
    ssim_trial, total_pixels_moved, PatchStats,
};
