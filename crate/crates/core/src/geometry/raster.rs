use alloc::vec::Vec;

use super::polygon::{polygon_area, EPSILON};
use super::{Point, VoronoiDiagram};
use crate::{Error, PixelMask, Result};

/// Horizontal extent of a convex polygon on the line `y = yc`.
fn span_at(vertices: &[Point], yc: f64) -> Option<(f64, f64)> {
    let n = vertices.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let (a, b) = (vertices[i], vertices[(i + 1) % n]);
        let (ymin, ymax) = if a.y <= b.y { (a.y, b.y) } else { (b.y, a.y) };
        if yc < ymin - EPSILON || yc > ymax + EPSILON {
            continue;
        }
        if (b.y - a.y).abs() <= EPSILON {
            lo = lo.min(a.x.min(b.x));
            hi = hi.max(a.x.max(b.x));
        } else {
            let t = ((yc - a.y) / (b.y - a.y)).clamp(0.0, 1.0);
            let x = a.x + t * (b.x - a.x);
            lo = lo.min(x);
            hi = hi.max(x);
        }
    }
    (lo <= hi).then_some((lo, hi))
}

/// Scanline fill of a convex polygon: every pixel whose centre lies in the
/// closed polygon (to within [`EPSILON`]). Zero-area polygons give an empty
/// mask.
pub fn rasterize_polygon(vertices: &[Point], width: usize, height: usize) -> PixelMask {
    let mut mask = PixelMask::new(width, height);
    for (x, y) in polygon_pixels(vertices, width, height, 0) {
        mask.insert(x, y);
    }
    mask
}

/// Candidate pixels of a polygon, widened by `margin` pixels on every row
/// and by one extra row above and below when `margin > 0`.
fn polygon_pixels(
    vertices: &[Point],
    width: usize,
    height: usize,
    margin: usize,
) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    if vertices.len() < 3 || polygon_area(vertices).abs() <= EPSILON {
        return out;
    }
    let ymin = vertices.iter().map(|p| p.y).fold(f64::INFINITY, f64::min);
    let ymax = vertices
        .iter()
        .map(|p| p.y)
        .fold(f64::NEG_INFINITY, f64::max);
    let m = margin as f64;
    let row0 = libm::ceil(ymin - 0.5 - EPSILON - m).max(0.0) as usize;
    let row1 = libm::floor(ymax - 0.5 + EPSILON + m);
    if row1 < 0.0 {
        return out;
    }
    let row1 = (row1 as usize).min(height - 1);
    for y in row0..=row1 {
        let yc = (y as f64 + 0.5).clamp(ymin, ymax);
        if margin == 0 && ((y as f64 + 0.5) < ymin - EPSILON || (y as f64 + 0.5) > ymax + EPSILON) {
            continue;
        }
        let Some((lo, hi)) = span_at(vertices, yc) else {
            continue;
        };
        let c0 = libm::ceil(lo - 0.5 - EPSILON - m).max(0.0) as usize;
        let c1 = libm::floor(hi - 0.5 + EPSILON + m);
        if c1 < 0.0 {
            continue;
        }
        for x in c0..=(c1 as usize).min(width - 1) {
            out.push((x, y));
        }
    }
    out
}

impl VoronoiDiagram {
    /// Rasterizes a bounded region from its polygon, keeping the pixels whose
    /// nearest generator is the region's own. Agrees with `region(i).mask`.
    pub fn rasterize_region(&self, i: usize) -> Result<PixelMask> {
        let region = self
            .regions()
            .get(i)
            .ok_or_else(|| Error::invalid("region index out of range"))?;
        if !region.bounded {
            return Err(Error::invalid("unbounded regions are not rasterized"));
        }
        let index = self.nearest_index();
        let mut mask = PixelMask::new(self.width(), self.height());
        for (x, y) in polygon_pixels(&region.vertices, self.width(), self.height(), 1) {
            if index.nearest(Point::pixel_center(x, y)) == i {
                mask.insert(x, y);
            }
        }
        Ok(mask)
    }
}
