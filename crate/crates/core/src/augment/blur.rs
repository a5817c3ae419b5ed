use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, ImageTensor, PixelMask, Result};

/// Normalized Gaussian taps for offsets `-r..=r`, `r = ceil(3 sigma)`.
pub fn gaussian_kernel(sigma: f64) -> Vec<f64> {
    let radius = libm::ceil(3.0 * sigma) as isize;
    let denom = 2.0 * sigma * sigma;
    let mut taps: Vec<f64> = (-radius..=radius)
        .map(|k| libm::exp(-((k * k) as f64) / denom))
        .collect();
    let sum: f64 = taps.iter().sum();
    for t in &mut taps {
        *t /= sum;
    }
    taps
}

/// Separable Gaussian blur of every channel with edge-replicate padding.
/// Accumulation runs in `f64` in a fixed tap order.
pub fn gaussian_blur(image: &ImageTensor, sigma: f64) -> ImageTensor {
    let taps = gaussian_kernel(sigma);
    let r = (taps.len() / 2) as isize;
    let (w, h, ch) = image.dims();
    let src = image.as_slice();
    let clamp = |v: isize, n: usize| v.clamp(0, n as isize - 1) as usize;

    let mut rows = vec![0.0f64; src.len()];
    for y in 0..h {
        for x in 0..w {
            for c in 0..ch {
                let mut acc = 0.0;
                for (k, t) in taps.iter().enumerate() {
                    let sx = clamp(x as isize + k as isize - r, w);
                    acc += t * src[(y * w + sx) * ch + c] as f64;
                }
                rows[(y * w + x) * ch + c] = acc;
            }
        }
    }
    let mut out = ImageTensor::zeros(w, h, ch);
    let dst = out.as_mut_slice();
    for y in 0..h {
        for x in 0..w {
            for c in 0..ch {
                let mut acc = 0.0;
                for (k, t) in taps.iter().enumerate() {
                    let sy = clamp(y as isize + k as isize - r, h);
                    acc += t * rows[(sy * w + x) * ch + c];
                }
                dst[(y * w + x) * ch + c] = acc as f32;
            }
        }
    }
    out
}

/// Replaces the pixels of `border` with their Gaussian-blurred values; every
/// other pixel is returned bit-identical.
pub fn smooth_borders(aug: &ImageTensor, border: &PixelMask, sigma: f64) -> Result<ImageTensor> {
    if (border.width(), border.height()) != (aug.width(), aug.height()) {
        return Err(Error::invalid(
            "border mask does not match image dimensions",
        ));
    }
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(Error::invalid("sigma must be positive and finite"));
    }
    let mut out = aug.clone();
    if border.is_empty() {
        return Ok(out);
    }
    let blurred = gaussian_blur(aug, sigma);
    for (x, y) in border.iter() {
        out.pixel_mut(x, y).copy_from_slice(blurred.pixel(x, y));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_shape() {
        let k = gaussian_kernel(1.0);
        assert_eq!(k.len(), 7);
        assert!((k.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        assert_eq!(k[0], k[6]);
        assert!(k[3] > k[2] && k[2] > k[1]);
        assert_eq!(gaussian_kernel(0.4).len(), 5);
    }

    #[test]
    fn empty_border_is_identity() {
        let img = ImageTensor::from_fn(8, 8, 3, |x, y, c| ((x * 3 + y * 5 + c) % 11) as f32 / 10.0);
        let out = smooth_borders(&img, &PixelMask::new(8, 8), 1.0).unwrap();
        assert_eq!(out, img);
    }

    #[test]
    fn constant_image_is_fixed_point() {
        for v in [0.0f32, 0.3, 1.0] {
            let img = ImageTensor::from_fn(12, 9, 3, |_, _, _| v);
            let out = smooth_borders(&img, &PixelMask::full(12, 9), 1.7).unwrap();
            assert_eq!(out, img);
        }
    }

    #[test]
    fn step_edge_lands_between_levels() {
        let img = ImageTensor::from_fn(20, 6, 1, |x, _, _| if x < 10 { 0.2 } else { 0.8 });
        let border = PixelMask::from_pixels(20, 6, (0..6).flat_map(|y| [(9, y), (10, y)]));
        let out = smooth_borders(&img, &border, 1.0).unwrap();
        // 1-D response at the step: left pixel sees taps +1..+3 on the high
        // side, right pixel sees taps 0..+3.
        let k = gaussian_kernel(1.0);
        let left = 0.2 + 0.6 * (k[4] + k[5] + k[6]);
        let right = 0.2 + 0.6 * (k[3] + k[4] + k[5] + k[6]);
        for y in 0..6 {
            let (a, b) = (out.get(9, y, 0), out.get(10, y, 0));
            assert!(a > 0.2 && a < 0.8 && b > 0.2 && b < 0.8);
            assert!((a as f64 - left).abs() < 1e-6, "{a} vs {left}");
            assert!((b as f64 - right).abs() < 1e-6, "{b} vs {right}");
            assert_eq!(out.get(8, y, 0), 0.2);
            assert_eq!(out.get(11, y, 0), 0.8);
        }
    }

    #[test]
    fn mismatched_border_rejected() {
        let img = ImageTensor::zeros(4, 4, 1);
        assert!(smooth_borders(&img, &PixelMask::new(5, 4), 1.0).is_err());
    }
}
