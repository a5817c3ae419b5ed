use crate::ImageTensor;

/// Channel-wise min-max scaling to `[0, 1]`. A constant channel maps to
/// all zeros.
pub fn min_max_normalize(raw: &ImageTensor) -> ImageTensor {
    let ch = raw.channels();
    let mut lo = alloc::vec![f32::INFINITY; ch];
    let mut hi = alloc::vec![f32::NEG_INFINITY; ch];
    for px in raw.as_slice().chunks_exact(ch) {
        for c in 0..ch {
            lo[c] = lo[c].min(px[c]);
            hi[c] = hi[c].max(px[c]);
        }
    }
    let mut out = raw.clone();
    for px in out.as_mut_slice().chunks_exact_mut(ch) {
        for c in 0..ch {
            let range = hi[c] as f64 - lo[c] as f64;
            px[c] = if range > 0.0 {
                ((px[c] as f64 - lo[c] as f64) / range) as f32
            } else {
                0.0
            };
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_channel_unchanged() {
        let img = ImageTensor::new(3, 1, 1, vec![0.0, 0.25, 1.0]).unwrap();
        assert_eq!(min_max_normalize(&img), img);
    }

    #[test]
    fn constant_channel_zeroed() {
        let img = ImageTensor::new(2, 1, 2, vec![7.0, 1.0, 7.0, 3.0]).unwrap();
        assert_eq!(min_max_normalize(&img).as_slice(), &[0.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn byte_range() {
        let img = ImageTensor::new(3, 1, 1, vec![0.0, 127.5, 255.0]).unwrap();
        assert_eq!(min_max_normalize(&img).as_slice(), &[0.0, 0.5, 1.0]);
    }

    #[test]
    fn channels_scaled_independently() {
        let img = ImageTensor::from_fn(5, 4, 3, |x, y, c| {
            (x + 10 * y) as f32 * (c as f32 + 1.0) - 40.0
        });
        let out = min_max_normalize(&img);
        assert!(out.is_unit_range());
        for c in 0..3 {
            let plane = out.channel_plane(c);
            assert_eq!(plane.iter().cloned().fold(f32::INFINITY, f32::min), 0.0);
            assert_eq!(plane.iter().cloned().fold(f32::NEG_INFINITY, f32::max), 1.0);
        }
    }
}
