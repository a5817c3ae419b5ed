#![allow(dead_code)]

use vpatch_core::geometry::{GeneratorSet, Point};
use vpatch_core::{ImageTensor, PixelMask};

/// Per-pixel linear scan written independently of the crate: strict `<`
/// keeps the lowest index on ties.
pub fn brute_force_labels(gens: &GeneratorSet) -> Vec<usize> {
    let (w, h) = (gens.width(), gens.height());
    let pts = gens.points();
    let mut out = Vec::with_capacity(w * h);
    for y in 0..h {
        for x in 0..w {
            let (px, py) = (x as f64 + 0.5, y as f64 + 0.5);
            let mut best = 0;
            let mut best_d = f64::INFINITY;
            for (i, g) in pts.iter().enumerate() {
                let (dx, dy) = (px - g.x, py - g.y);
                let d = dx * dx + dy * dy;
                if d < best_d {
                    best_d = d;
                    best = i;
                }
            }
            out.push(best);
        }
    }
    out
}

/// Pixel values that identify their position, so provenance is checkable.
pub fn coded_image(w: usize, h: usize) -> ImageTensor {
    ImageTensor::from_fn(w, h, 3, |x, y, c| match c {
        0 => x as f32 / w as f32,
        1 => y as f32 / h as f32,
        _ => ((x * 31 + y * 17) % 101) as f32 / 100.0,
    })
}

/// Mean of the mask's pixel coordinates rounded half up, by plain summation.
pub fn naive_centroid(mask: &PixelMask) -> Point {
    let (mut sx, mut sy, mut n) = (0.0f64, 0.0f64, 0.0f64);
    for (x, y) in mask.iter() {
        sx += x as f64;
        sy += y as f64;
        n += 1.0;
    }
    Point::new((sx / n + 0.5).floor(), (sy / n + 0.5).floor())
}
