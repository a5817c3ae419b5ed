//! Bilinear resampling.
//!
//! Output pixel `x` samples the source at `(x + 0.5) * src_w / dst_w - 0.5`
//! (pixel centres aligned, no antialiasing), clamped to the source extent;
//! rows likewise. The two nearest source samples on each axis are blended
//! with weights `1 - f` and `f`, computed in `f64`.

use vpatch_core::ImageTensor;

struct Tap {
    i0: usize,
    i1: usize,
    f: f64,
}

fn taps(src: usize, dst: usize) -> Vec<Tap> {
    let scale = src as f64 / dst as f64;
    (0..dst)
        .map(|d| {
            let s = ((d as f64 + 0.5) * scale - 0.5).clamp(0.0, (src - 1) as f64);
            let i0 = s.floor() as usize;
            let i1 = (i0 + 1).min(src - 1);
            Tap {
                i0,
                i1,
                f: s - i0 as f64,
            }
        })
        .collect()
}

/// Resamples to `width x height`. Same-size input is copied unchanged.
pub fn resize_bilinear(src: &ImageTensor, width: usize, height: usize) -> ImageTensor {
    if src.width() == width && src.height() == height {
        return src.clone();
    }
    let ch = src.channels();
    let xs = taps(src.width(), width);
    let ys = taps(src.height(), height);
    ImageTensor::from_fn(width, height, ch, |x, y, c| {
        let (tx, ty) = (&xs[x], &ys[y]);
        let at = |sx: usize, sy: usize| src.get(sx, sy, c) as f64;
        let top = at(tx.i0, ty.i0) * (1.0 - tx.f) + at(tx.i1, ty.i0) * tx.f;
        let bottom = at(tx.i0, ty.i1) * (1.0 - tx.f) + at(tx.i1, ty.i1) * tx.f;
        (top * (1.0 - ty.f) + bottom * ty.f) as f32
    })
}
