//! Montage of one image: the original, an overlay of augmentation 0 and
//! further independent augmentations.

use std::path::Path;

use vpatch_core::rng::derive_image_seed;
use vpatch_core::ImageTensor;

use crate::batch::{augment_tensor, Augmented};
use crate::config::RunConfig;
use crate::error::{PipelineError, Result};

/// Gap between tiles, in pixels.
pub const TILE_GAP: usize = 4;

/// Montage tiles in row-major order plus the augmentation the overlay shows.
#[derive(Debug, Clone)]
pub struct Montage {
    pub image: ImageTensor,
    pub first: Augmented,
}

/// Builds a `rows x cols` montage of a normalized 3-channel `sample`.
///
/// Tile 0 is the sample, tile 1 the overlay of augmentation 0 and tile `k`
/// for `k >= 2` is augmentation `k - 2`. Augmentation `k` is seeded with
/// `derive_image_seed(cfg.seed, k)`.
pub fn build_montage(
    cfg: &RunConfig,
    sample: &ImageTensor,
    (rows, cols): (usize, usize),
) -> Result<Montage> {
    if rows * cols < 2 {
        return Err(PipelineError::Config(
            "montage needs at least 2 tiles".into(),
        ));
    }
    if sample.channels() != 3 {
        return Err(PipelineError::Config("montage needs an RGB image".into()));
    }
    let first = augment_tensor(cfg, sample, derive_image_seed(cfg.seed, 0))?;
    let mut tiles = vec![sample.clone(), overlay(sample, &first)];
    for k in 0..rows * cols - 2 {
        let aug = if k == 0 {
            first.clone()
        } else {
            augment_tensor(cfg, sample, derive_image_seed(cfg.seed, k as u64))?
        };
        tiles.push(aug.image);
    }
    Ok(Montage {
        image: tile(&tiles, rows, cols),
        first,
    })
}

/// Loads `input`, builds the montage and writes it as PNG to `out`.
pub fn preview_montage(
    cfg: &RunConfig,
    input: &Path,
    grid: (usize, usize),
    out: &Path,
) -> Result<Montage> {
    let sample = crate::batch::prepare_image(input, cfg.resize_to)?;
    let m = build_montage(cfg, &sample, grid)?;
    crate::io::save_png(&m.image, out)?;
    Ok(m)
}

const WHITE: [f32; 3] = [1.0, 1.0, 1.0];
const RED: [f32; 3] = [0.9, 0.15, 0.1];
const YELLOW: [f32; 3] = [1.0, 0.85, 0.0];

/// Dimmed sample with region boundaries, tinted source patches and target
/// centroids (VP), or the erased rectangle outline (RE).
fn overlay(sample: &ImageTensor, aug: &Augmented) -> ImageTensor {
    let mut img = sample.clone();
    img.as_mut_slice().iter_mut().for_each(|v| *v *= 0.6);
    let (w, h) = (img.width(), img.height());
    if let Some(vp) = &aug.vp {
        let d = &vp.diagram;
        for m in &vp.moves {
            for (x, y) in d.region(m.source_region).mask.iter() {
                let p = img.pixel_mut(x, y);
                p[0] = 0.5 * p[0] + 0.5 * RED[0];
                p[1] *= 0.5;
                p[2] *= 0.5;
            }
        }
        for y in 0..h {
            for x in 0..w {
                let l = d.label_at(x, y);
                let edge = (x + 1 < w && d.label_at(x + 1, y) != l)
                    || (y + 1 < h && d.label_at(x, y + 1) != l);
                if edge {
                    img.pixel_mut(x, y).copy_from_slice(&WHITE);
                }
            }
        }
        for m in &vp.moves {
            let (cx, cy) = (m.target_centroid.x as i64, m.target_centroid.y as i64);
            for y in cy - 1..=cy + 1 {
                for x in cx - 1..=cx + 1 {
                    if (0..w as i64).contains(&x) && (0..h as i64).contains(&y) {
                        img.pixel_mut(x as usize, y as usize)
                            .copy_from_slice(&YELLOW);
                    }
                }
            }
        }
    }
    if let Some(r) = aug.erased {
        for y in r.y..r.y + r.height {
            for x in r.x..r.x + r.width {
                let border =
                    y == r.y || y + 1 == r.y + r.height || x == r.x || x + 1 == r.x + r.width;
                if border {
                    img.pixel_mut(x, y).copy_from_slice(&RED);
                }
            }
        }
    }
    img
}

fn tile(tiles: &[ImageTensor], rows: usize, cols: usize) -> ImageTensor {
    let (tw, th, c) = tiles[0].dims();
    let w = cols * tw + (cols - 1) * TILE_GAP;
    let h = rows * th + (rows - 1) * TILE_GAP;
    let mut out = ImageTensor::zeros(w, h, c);
    for (k, t) in tiles.iter().enumerate() {
        let (ox, oy) = ((k % cols) * (tw + TILE_GAP), (k / cols) * (th + TILE_GAP));
        for y in 0..th {
            for x in 0..tw {
                out.pixel_mut(ox + x, oy + y).copy_from_slice(t.pixel(x, y));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Method;

    fn sample() -> ImageTensor {
        ImageTensor::from_fn(48, 40, 3, |x, y, c| {
            ((x * 5 + y * 3 + c * 40) % 97) as f32 / 96.0
        })
    }

    fn cfg(method: Method) -> RunConfig {
        let mut c = RunConfig {
            method,
            seed: 9,
            ..RunConfig::default()
        };
        c.vp.generators = 20;
        c.vp.patches = 4;
        c.re.probability = 1.0;
        c
    }

    #[test]
    fn layout_and_tiles() {
        let s = sample();
        let m = build_montage(&cfg(Method::Vp), &s, (2, 3)).unwrap();
        assert_eq!(
            m.image.dims(),
            (3 * 48 + 2 * TILE_GAP, 2 * 40 + TILE_GAP, 3)
        );
        assert_eq!(m.image.pixel(5, 7), s.pixel(5, 7));
        let ox = 2 * (48 + TILE_GAP);
        assert_eq!(m.image.pixel(ox + 3, 2), m.first.image.pixel(3, 2));
        assert!(m.first.vp.is_some());
    }

    #[test]
    fn erasing_overlay_outlines_rect() {
        let s = sample();
        let m = build_montage(&cfg(Method::Re), &s, (1, 2)).unwrap();
        let r = m.first.erased.expect("p = 1 always erases here");
        assert_eq!(m.image.pixel(48 + TILE_GAP + r.x, r.y), &RED);
    }

    #[test]
    fn too_few_tiles_rejected() {
        assert!(build_montage(&cfg(Method::Vp), &sample(), (1, 1)).is_err());
    }
}
