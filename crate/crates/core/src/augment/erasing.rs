use rand_core::RngCore;

use super::config::{EraseFill, ReConfig};
use crate::rng::{bernoulli, uniform_below, uniform_f32, uniform_range};
use crate::{ImageTensor, Result};

/// Attempts at drawing a rectangle that fits before giving up.
pub const ERASE_RETRY_BUDGET: usize = 100;

/// Erased rectangle: top-left corner and size in pixels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EraseRect {
    pub x: usize,
    pub y: usize,
    pub width: usize,
    pub height: usize,
}

impl EraseRect {
    #[inline]
    pub fn area(&self) -> usize {
        self.width * self.height
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErasingOutcome {
    pub image: ImageTensor,
    /// The erased rectangle, `None` when nothing was erased.
    pub rect: Option<EraseRect>,
    /// The probability draw selected this sample for erasing.
    pub applied: bool,
    /// Applied, but no rectangle fit within [`ERASE_RETRY_BUDGET`] draws.
    pub exhausted: bool,
}

/// Random Erasing: with probability `cfg.probability` overwrite one
/// axis-aligned rectangle with black or uniform noise.
///
/// Target area `S_e = U(area range) * W * H` and aspect `r = U(aspect
/// range)` give `h = round(sqrt(S_e * r))`, `w = round(sqrt(S_e / r))`; the
/// draw is repeated until `w < W` and `h < H`, then the top-left corner is
/// uniform over all placements that fit.
pub fn random_erasing<R: RngCore + ?Sized>(
    sample: &ImageTensor,
    cfg: &ReConfig,
    rng: &mut R,
) -> Result<ErasingOutcome> {
    cfg.validate()?;
    let mut image = sample.clone();
    if !bernoulli(rng, cfg.probability) {
        return Ok(ErasingOutcome {
            image,
            rect: None,
            applied: false,
            exhausted: false,
        });
    }
    let (w, h) = (sample.width(), sample.height());
    let area = (w * h) as f64;
    for _ in 0..ERASE_RETRY_BUDGET {
        let target =
            uniform_range(rng, cfg.area_fraction_range.0, cfg.area_fraction_range.1) * area;
        let aspect = uniform_range(rng, cfg.aspect_range.0, cfg.aspect_range.1);
        let eh = libm::round(libm::sqrt(target * aspect)) as usize;
        let ew = libm::round(libm::sqrt(target / aspect)) as usize;
        if ew == 0 || eh == 0 || ew >= w || eh >= h {
            continue;
        }
        let y0 = uniform_below(rng, (h - eh + 1) as u64) as usize;
        let x0 = uniform_below(rng, (w - ew + 1) as u64) as usize;
        for y in y0..y0 + eh {
            for x in x0..x0 + ew {
                for v in image.pixel_mut(x, y) {
                    *v = match cfg.fill {
                        EraseFill::Black => 0.0,
                        EraseFill::RandomUniform => uniform_f32(rng),
                    };
                }
            }
        }
        let rect = EraseRect {
            x: x0,
            y: y0,
            width: ew,
            height: eh,
        };
        return Ok(ErasingOutcome {
            image,
            rect: Some(rect),
            applied: true,
            exhausted: false,
        });
    }
    Ok(ErasingOutcome {
        image,
        rect: None,
        applied: true,
        exhausted: true,
    })
}
