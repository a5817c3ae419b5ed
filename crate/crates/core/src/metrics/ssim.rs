use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, ImageTensor, Result};

/// SSIM settings; the defaults are the canonical 11x11 Gaussian window with
/// sigma 1.5, `k1 = 0.01`, `k2 = 0.03`, for data in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SsimParams {
    pub window_size: usize,
    pub window_sigma: f64,
    pub k1: f64,
    pub k2: f64,
    pub dynamic_range: f64,
}

impl Default for SsimParams {
    fn default() -> Self {
        Self {
            window_size: 11,
            window_sigma: 1.5,
            k1: 0.01,
            k2: 0.03,
            dynamic_range: 1.0,
        }
    }
}

impl SsimParams {
    fn validate(&self) -> Result<()> {
        if self.window_size == 0 || self.window_size % 2 == 0 {
            return Err(Error::invalid("window_size must be odd"));
        }
        if !(self.window_sigma > 0.0 && self.dynamic_range > 0.0) {
            return Err(Error::invalid(
                "window_sigma and dynamic_range must be positive",
            ));
        }
        if !(self.k1 > 0.0 && self.k2 > 0.0) {
            return Err(Error::invalid("k1 and k2 must be positive"));
        }
        Ok(())
    }

    fn window(&self) -> Vec<f64> {
        let r = (self.window_size / 2) as isize;
        let denom = 2.0 * self.window_sigma * self.window_sigma;
        let mut w: Vec<f64> = (-r..=r)
            .map(|k| libm::exp(-((k * k) as f64) / denom))
            .collect();
        let s: f64 = w.iter().sum();
        w.iter_mut().for_each(|v| *v /= s);
        w
    }
}

/// Mean structural similarity of `a` and `b`.
///
/// Local statistics use the separable Gaussian window at every position
/// where it fits entirely inside the image. Multi-channel images average
/// the per-channel scores. `ssim(x, x)` is exactly 1 and the result is
/// exactly symmetric in its arguments.
pub fn ssim(a: &ImageTensor, b: &ImageTensor, params: &SsimParams) -> Result<f64> {
    a.ensure_same_dims(b)?;
    params.validate()?;
    let (w, h, ch) = a.dims();
    if w < params.window_size || h < params.window_size {
        return Err(Error::invalid("image is smaller than the SSIM window"));
    }
    let window = params.window();
    let c1 = (params.k1 * params.dynamic_range) * (params.k1 * params.dynamic_range);
    let c2 = (params.k2 * params.dynamic_range) * (params.k2 * params.dynamic_range);
    let total: f64 = (0..ch)
        .map(|c| {
            let x: Vec<f64> = a
                .as_slice()
                .iter()
                .skip(c)
                .step_by(ch)
                .map(|&v| v as f64)
                .collect();
            let y: Vec<f64> = b
                .as_slice()
                .iter()
                .skip(c)
                .step_by(ch)
                .map(|&v| v as f64)
                .collect();
            channel_ssim(&x, &y, w, h, &window, c1, c2)
        })
        .sum();
    Ok(total / ch as f64)
}

fn channel_ssim(x: &[f64], y: &[f64], w: usize, h: usize, win: &[f64], c1: f64, c2: f64) -> f64 {
    let xx: Vec<f64> = x.iter().map(|v| v * v).collect();
    let yy: Vec<f64> = y.iter().map(|v| v * v).collect();
    let xy: Vec<f64> = x.iter().zip(y).map(|(p, q)| p * q).collect();
    let mu_x = filter_valid(x, w, h, win);
    let mu_y = filter_valid(y, w, h, win);
    let e_xx = filter_valid(&xx, w, h, win);
    let e_yy = filter_valid(&yy, w, h, win);
    let e_xy = filter_valid(&xy, w, h, win);
    let mut sum = 0.0;
    for i in 0..mu_x.len() {
        let (mx, my) = (mu_x[i], mu_y[i]);
        let vx = e_xx[i] - mx * mx;
        let vy = e_yy[i] - my * my;
        let cov = e_xy[i] - mx * my;
        sum += ((2.0 * (mx * my) + c1) * (2.0 * cov + c2))
            / ((mx * mx + my * my + c1) * (vx + vy + c2));
    }
    sum / mu_x.len() as f64
}

/// Separable correlation keeping only fully covered positions.
fn filter_valid(src: &[f64], w: usize, h: usize, win: &[f64]) -> Vec<f64> {
    let n = win.len();
    let (ow, oh) = (w + 1 - n, h + 1 - n);
    let mut rows = vec![0.0; ow * h];
    for y in 0..h {
        let line = &src[y * w..(y + 1) * w];
        for x in 0..ow {
            rows[y * ow + x] = win.iter().zip(&line[x..x + n]).map(|(k, v)| k * v).sum();
        }
    }
    let mut out = vec![0.0; ow * oh];
    for y in 0..oh {
        for x in 0..ow {
            out[y * ow + x] = win
                .iter()
                .enumerate()
                .map(|(k, t)| t * rows[(y + k) * ow + x])
                .sum();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{seeded, uniform_f32};

    fn textured(w: usize, h: usize, ch: usize, seed: u64) -> ImageTensor {
        let mut rng = seeded(seed);
        ImageTensor::from_fn(w, h, ch, |x, y, c| {
            let base =
                0.5 + 0.3 * libm::sinf(x as f32 * 0.3 + c as f32) * libm::cosf(y as f32 * 0.2);
            (base + 0.15 * (uniform_f32(&mut rng) - 0.5)).clamp(0.0, 1.0)
        })
    }

    #[test]
    fn identical_is_exactly_one() {
        let p = SsimParams::default();
        for seed in 0..5 {
            let a = textured(40, 30, 3, seed);
            assert_eq!(ssim(&a, &a, &p).unwrap(), 1.0);
        }
        let flat = ImageTensor::from_fn(16, 16, 1, |_, _, _| 0.0);
        assert_eq!(ssim(&flat, &flat, &p).unwrap(), 1.0);
    }

    #[test]
    fn symmetric() {
        let p = SsimParams::default();
        let a = textured(32, 32, 3, 1);
        let b = textured(32, 32, 3, 2);
        assert_eq!(ssim(&a, &b, &p).unwrap(), ssim(&b, &a, &p).unwrap());
    }

    #[test]
    fn degrades_with_noise() {
        let p = SsimParams::default();
        let base = ImageTensor::from_fn(32, 32, 1, |_, _, _| 0.5);
        let mut last = 1.0;
        for amp in [0.001f32, 0.01, 0.05, 0.2] {
            let mut rng = seeded(9);
            let noisy = ImageTensor::from_fn(32, 32, 1, |_, _, _| {
                0.5 + amp * (uniform_f32(&mut rng) - 0.5)
            });
            let s = ssim(&base, &noisy, &p).unwrap();
            assert!(s < last, "amp {amp}: {s} !< {last}");
            last = s;
        }
    }

    #[test]
    fn inverted_is_far_below_small_perturbation() {
        let p = SsimParams::default();
        let a = textured(48, 48, 3, 4);
        let mut inv = a.clone();
        inv.as_mut_slice().iter_mut().for_each(|v| *v = 1.0 - *v);
        let mut near = a.clone();
        near.as_mut_slice()
            .iter_mut()
            .for_each(|v| *v = (*v + 0.01).min(1.0));
        let s_inv = ssim(&a, &inv, &p).unwrap();
        let s_near = ssim(&a, &near, &p).unwrap();
        assert!(s_inv < 0.0, "{s_inv}");
        assert!(s_near > 0.99 && s_inv < s_near);
    }

    #[test]
    fn rejects_mismatch_and_tiny_images() {
        let p = SsimParams::default();
        let a = textured(20, 20, 3, 0);
        assert!(matches!(
            ssim(&a, &textured(20, 21, 3, 0), &p),
            Err(Error::DimensionMismatch { .. })
        ));
        let small = textured(8, 8, 1, 0);
        assert!(ssim(&small, &small, &p).is_err());
        let bad = SsimParams {
            window_size: 10,
            ..p
        };
        assert!(ssim(&a, &a, &bad).is_err());
    }
}
