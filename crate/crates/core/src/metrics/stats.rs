use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;

use super::ssim::{ssim, SsimParams};
use crate::augment::{augment_patches, VpConfig};
use crate::geometry::{compute_voronoi, sample_generators, VoronoiDiagram};
use crate::rng::{derive_image_seed, seeded};
use crate::{Error, ImageTensor, Result};

/// Summary of the per-diagram mean bounded-region area, in pixels.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PatchStats {
    pub generators: usize,
    pub mean: f64,
    pub min: f64,
    pub max: f64,
    /// Population standard deviation.
    pub std: f64,
    /// Diagrams that contributed (those with at least one bounded region).
    pub trials: usize,
}

impl PatchStats {
    /// `None` for an empty sample.
    pub fn from_samples(generators: usize, samples: &[f64]) -> Option<Self> {
        if samples.is_empty() {
            return None;
        }
        let n = samples.len() as f64;
        let mean = samples.iter().sum::<f64>() / n;
        let var = samples.iter().map(|s| (s - mean) * (s - mean)).sum::<f64>() / n;
        let min = samples.iter().copied().fold(f64::INFINITY, f64::min);
        let max = samples.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Some(Self {
            generators,
            mean,
            min,
            max,
            std: libm::sqrt(var),
            trials: samples.len(),
        })
    }
}

/// Mean pixel area of the bounded regions, `None` if there are none.
pub fn mean_bounded_area(d: &VoronoiDiagram) -> Option<f64> {
    let areas: Vec<usize> = d
        .regions()
        .iter()
        .filter(|r| r.bounded)
        .map(|r| r.area())
        .collect();
    (!areas.is_empty()).then(|| areas.iter().sum::<usize>() as f64 / areas.len() as f64)
}

/// One Monte Carlo diagram, drawn from `derive_image_seed(seed, trial)`.
pub fn patch_area_trial(
    n_generators: usize,
    width: usize,
    height: usize,
    seed: u64,
    trial: u64,
) -> Result<Option<f64>> {
    let mut rng = seeded(derive_image_seed(seed, trial));
    let gens = sample_generators(&mut rng, n_generators, width, height)?;
    Ok(mean_bounded_area(&compute_voronoi(&gens)))
}

/// Statistics of the per-diagram mean bounded-region area over `trials`
/// diagrams. Trial `t` depends only on `(seed, t)`.
pub fn patch_size_stats(
    n_generators: usize,
    width: usize,
    height: usize,
    trials: usize,
    seed: u64,
) -> Result<PatchStats> {
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    let mut samples = Vec::with_capacity(trials);
    for t in 0..trials as u64 {
        if let Some(a) = patch_area_trial(n_generators, width, height, seed, t)? {
            samples.push(a);
        }
    }
    PatchStats::from_samples(n_generators, &samples).ok_or(Error::DegenerateGeometry)
}

/// Expected transported area per image: mean patch area times patch count.
pub fn total_pixels_moved(stats: &PatchStats, patches: usize) -> f64 {
    stats.mean * patches as f64
}

/// SSIM between image `trial % len` and its augmentation, drawn from
/// `derive_image_seed(seed, trial)`.
pub fn ssim_trial<F>(images: &[ImageTensor], seed: u64, trial: u64, augment: &F) -> Result<f64>
where
    F: Fn(&ImageTensor, &mut ChaCha8Rng) -> Result<ImageTensor>,
{
    if images.is_empty() {
        return Err(Error::invalid("no images"));
    }
    let original = &images[(trial % images.len() as u64) as usize];
    let mut rng = seeded(derive_image_seed(seed, trial));
    let augmented = augment(original, &mut rng)?;
    ssim(original, &augmented, &SsimParams::default())
}

/// Mean SSIM of `trials` augmentations by an arbitrary function, cycling
/// through `images`.
pub fn mean_ssim_with<F>(
    images: &[ImageTensor],
    trials: usize,
    seed: u64,
    augment: F,
) -> Result<f64>
where
    F: Fn(&ImageTensor, &mut ChaCha8Rng) -> Result<ImageTensor>,
{
    if images.is_empty() || trials == 0 {
        return Err(Error::invalid("need at least one image and one trial"));
    }
    let mut sum = 0.0;
    for t in 0..trials as u64 {
        sum += ssim_trial(images, seed, t, &augment)?;
    }
    Ok(sum / trials as f64)
}

/// Mean SSIM(original, VoronoiPatches(original)) over `trials` draws.
pub fn mean_ssim_for_config(
    images: &[ImageTensor],
    cfg: &VpConfig,
    trials: usize,
    seed: u64,
) -> Result<f64> {
    mean_ssim_with(images, trials, seed, |img, rng| {
        Ok(augment_patches(img, cfg, rng)?.image)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stats_from_samples() {
        let s = PatchStats::from_samples(50, &[2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0]).unwrap();
        assert_eq!(
            (s.mean, s.min, s.max, s.std, s.trials),
            (5.0, 2.0, 9.0, 2.0, 8)
        );
        assert!(PatchStats::from_samples(50, &[]).is_none());
    }

    #[test]
    fn single_trial_is_degenerate() {
        let s = patch_size_stats(30, 96, 96, 1, 3).unwrap();
        assert_eq!(s.trials, 1);
        assert_eq!(s.min, s.mean);
        assert_eq!(s.max, s.mean);
        assert_eq!(s.std, 0.0);
        assert!(patch_size_stats(30, 96, 96, 0, 3).is_err());
    }

    #[test]
    fn stats_are_reproducible() {
        assert_eq!(
            patch_size_stats(20, 64, 64, 5, 9).unwrap(),
            patch_size_stats(20, 64, 64, 5, 9).unwrap()
        );
    }

    #[test]
    fn totals_are_linear() {
        let s = PatchStats {
            generators: 70,
            mean: 673.0,
            min: 0.0,
            max: 0.0,
            std: 0.0,
            trials: 1,
        };
        assert_eq!(total_pixels_moved(&s, 15), 10_095.0);
        assert_eq!(total_pixels_moved(&s, 15) / total_pixels_moved(&s, 5), 3.0);
        let s50 = PatchStats {
            generators: 50,
            mean: 931.0,
            ..s
        };
        assert_eq!(total_pixels_moved(&s50, 10), 9_310.0);
        assert_eq!(total_pixels_moved(&s50, 1), 931.0);
    }

    #[test]
    fn identity_augmentation_scores_one() {
        let imgs: Vec<ImageTensor> = (0..3)
            .map(|k| {
                ImageTensor::from_fn(24, 24, 3, |x, y, c| {
                    ((x * (k + 1) + y + c) % 10) as f32 / 9.0
                })
            })
            .collect();
        assert_eq!(
            mean_ssim_with(&imgs, 7, 1, |img, _| Ok(img.clone())).unwrap(),
            1.0
        );
        assert!(mean_ssim_with(&[], 7, 1, |img, _| Ok(img.clone())).is_err());
    }

    #[test]
    fn vp_lowers_ssim() {
        let imgs = [ImageTensor::from_fn(64, 64, 3, |x, y, c| {
            ((x * 5 + y * 3 + c * 7) % 31) as f32 / 30.0
        })];
        let cfg = VpConfig {
            generators: 20,
            patches: 5,
            ..VpConfig::default()
        };
        let m = mean_ssim_for_config(&imgs, &cfg, 5, 2).unwrap();
        assert!(m < 1.0 && m > 0.0, "{m}");
    }
}
