//! VoronoiPatches, its random-fill variant, Random Erasing and input
//! normalization.
//!
//! All operations keep the image shape, and therefore the sample's label,
//! unchanged.

mod blur;
mod border;
mod config;
mod erasing;
mod normalize;
mod patches;

pub use blur::{gaussian_blur, gaussian_kernel, smooth_borders};
pub use border::calc_border;
pub use config::{EraseFill, FillMode, ReConfig, VpConfig};
pub use erasing::{random_erasing, EraseRect, ErasingOutcome, ERASE_RETRY_BUDGET};
pub use normalize::min_max_normalize;
pub use patches::{
    augment_patches, augment_patches_retrying, random_fill_patches, voronoi_patches, PatchMove,
    VpOutput, DEGENERATE_RETRIES,
};
