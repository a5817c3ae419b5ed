use alloc::vec::Vec;

use rand_core::RngCore;

use super::blur::smooth_borders;
use super::border::calc_border;
use super::config::{FillMode, VpConfig};
use crate::geometry::{compute_voronoi, sample_generators, Point, VoronoiDiagram};
use crate::rng::{choose_index, uniform_f32};
use crate::{Error, ImageTensor, PixelMask, Result};

/// Audit record of one pasted patch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PatchMove {
    /// Region whose pixels were copied.
    pub source_region: usize,
    /// Region whose centroid the patch was centred on.
    pub target_region: usize,
    /// `target_centroid - source centroid`, in whole pixels.
    pub translation: (i64, i64),
    pub target_centroid: Point,
    /// Translated source pixels that landed inside the image.
    pub pixels_moved: usize,
}

#[derive(Debug, Clone)]
pub struct VpOutput {
    pub image: ImageTensor,
    /// One record per patch, in paste order.
    pub moves: Vec<PatchMove>,
    /// Smoothed band, present when `smooth` was set.
    pub border: Option<PixelMask>,
    /// The diagram the patches were cut from.
    pub diagram: VoronoiDiagram,
}

/// VoronoiPatches with transported content.
///
/// Builds a fresh diagram with `cfg.generators` uniform generators, then
/// `cfg.patches` times draws a source and a target among the bounded regions
/// (independently, with replacement) and copies the source pixels of
/// `sample` so that their mean lands on the target centroid. Pixels pushed
/// past the image edge are dropped and later patches overwrite earlier ones.
/// With `cfg.smooth` the seam band of all pasted patches is replaced by its
/// Gaussian-blurred values once every patch is in place.
pub fn voronoi_patches<R: RngCore + ?Sized>(
    sample: &ImageTensor,
    cfg: &VpConfig,
    rng: &mut R,
) -> Result<VpOutput> {
    if cfg.fill_mode != FillMode::Transport {
        return Err(Error::invalid(
            "voronoi_patches needs fill_mode = transport",
        ));
    }
    run(sample, cfg, rng)
}

/// Same region and target selection as [`voronoi_patches`], but the pasted
/// pixels are i.i.d. uniform `[0, 1)` per channel.
pub fn random_fill_patches<R: RngCore + ?Sized>(
    sample: &ImageTensor,
    cfg: &VpConfig,
    rng: &mut R,
) -> Result<VpOutput> {
    if cfg.fill_mode != FillMode::RandomFill {
        return Err(Error::invalid(
            "random_fill_patches needs fill_mode = random_fill",
        ));
    }
    run(sample, cfg, rng)
}

/// Dispatches on `cfg.fill_mode`.
pub fn augment_patches<R: RngCore + ?Sized>(
    sample: &ImageTensor,
    cfg: &VpConfig,
    rng: &mut R,
) -> Result<VpOutput> {
    run(sample, cfg, rng)
}

/// Fresh diagrams drawn after a [`Error::DegenerateGeometry`] failure
/// before [`augment_patches_retrying`] gives up.
pub const DEGENERATE_RETRIES: usize = 5;

/// [`augment_patches`], drawing a new diagram from the same stream up to
/// [`DEGENERATE_RETRIES`] times when one has no usable bounded region.
pub fn augment_patches_retrying<R: RngCore + ?Sized>(
    sample: &ImageTensor,
    cfg: &VpConfig,
    rng: &mut R,
) -> Result<VpOutput> {
    let mut attempt = 0;
    loop {
        match run(sample, cfg, rng) {
            Err(Error::DegenerateGeometry) if attempt < DEGENERATE_RETRIES => attempt += 1,
            other => return other,
        }
    }
}

fn run<R: RngCore + ?Sized>(sample: &ImageTensor, cfg: &VpConfig, rng: &mut R) -> Result<VpOutput> {
    cfg.validate()?;
    let (w, h) = (sample.width(), sample.height());
    let gens = sample_generators(rng, cfg.generators, w, h)?;
    let diagram = compute_voronoi(&gens);

    // Bounded regions that own at least one pixel, with their centroids.
    let candidates: Vec<(usize, (i64, i64))> = diagram
        .regions()
        .iter()
        .filter(|r| r.bounded)
        .filter_map(|r| {
            r.centroid
                .map(|c| (r.generator_index, (c.x as i64, c.y as i64)))
        })
        .collect();
    if candidates.is_empty() {
        return Err(Error::DegenerateGeometry);
    }

    // All draws first, so both fill modes select identical patches.
    let picks: Vec<(usize, usize)> = (0..cfg.patches)
        .map(|_| {
            (
                choose_index(rng, candidates.len()),
                choose_index(rng, candidates.len()),
            )
        })
        .collect();

    let mut image = sample.clone();
    let mut moves = Vec::with_capacity(picks.len());
    let mut pasted = Vec::with_capacity(if cfg.smooth { picks.len() } else { 0 });
    for (si, ti) in picks {
        let (source, (sx, sy)) = candidates[si];
        let (target, (tx, ty)) = candidates[ti];
        let (dx, dy) = (tx - sx, ty - sy);
        let mut landed = PixelMask::new(w, h);
        for (x, y) in diagram.region(source).mask.iter() {
            let (nx, ny) = (x as i64 + dx, y as i64 + dy);
            if nx < 0 || ny < 0 || nx >= w as i64 || ny >= h as i64 {
                continue;
            }
            let (nx, ny) = (nx as usize, ny as usize);
            match cfg.fill_mode {
                FillMode::Transport => {
                    let i = image.index(nx, ny, 0);
                    let j = sample.index(x, y, 0);
                    let ch = sample.channels();
                    image.as_mut_slice()[i..i + ch].copy_from_slice(&sample.as_slice()[j..j + ch]);
                }
                FillMode::RandomFill => {
                    for v in image.pixel_mut(nx, ny) {
                        *v = uniform_f32(rng);
                    }
                }
            }
            landed.insert(nx, ny);
        }
        moves.push(PatchMove {
            source_region: source,
            target_region: target,
            translation: (dx, dy),
            target_centroid: Point::new(tx as f64, ty as f64),
            pixels_moved: landed.len(),
        });
        if cfg.smooth {
            pasted.push(landed);
        }
    }

    let border = if cfg.smooth {
        let band = calc_border(&pasted, cfg.border_width, (w, h));
        image = smooth_borders(&image, &band, cfg.blur_sigma)?;
        Some(band)
    } else {
        None
    };
    Ok(VpOutput {
        image,
        moves,
        border,
        diagram,
    })
}
