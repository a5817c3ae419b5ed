//! Voronoi diagrams over a pixel grid.
//!
//! Pixel `(i, j)` is modelled as the point `(i + 0.5, j + 0.5)`. Every pixel
//! belongs to the generator at the smallest Euclidean distance, ties going to
//! the lowest generator index.

mod diagram;
mod index;
mod polygon;
mod raster;

use alloc::vec::Vec;

use rand_core::RngCore;

use crate::rng::uniform_f64;
use crate::{Error, Result};

pub use diagram::{bounded_regions, compute_voronoi, region_centroid, Region, VoronoiDiagram};
pub use index::NearestIndex;
pub use polygon::{convex_hull, is_convex, polygon_area, EPSILON};
pub use raster::rasterize_polygon;

/// A point in continuous pixel coordinates (x to the right, y down).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Centre of pixel `(x, y)`.
    #[inline]
    pub fn pixel_center(x: usize, y: usize) -> Self {
        Self {
            x: x as f64 + 0.5,
            y: y as f64 + 0.5,
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Squared Euclidean distance. Every nearest-generator decision in the
    /// crate goes through this expression.
    #[inline]
    pub fn dist2(self, other: Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    #[inline]
    pub fn dist(self, other: Point) -> f64 {
        libm::sqrt(self.dist2(other))
    }
}

/// Generator points of a diagram together with the grid they partition.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSet {
    points: Vec<Point>,
    width: usize,
    height: usize,
}

impl GeneratorSet {
    /// Validates at least three finite, pairwise distinct points inside
    /// `[0, width) x [0, height)`.
    pub fn new(points: Vec<Point>, width: usize, height: usize) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::invalid("grid dimensions must be non-zero"));
        }
        if points.len() < 3 {
            return Err(Error::invalid(
                "a Voronoi diagram needs at least 3 generators",
            ));
        }
        for (i, p) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::invalid("generator coordinates must be finite"));
            }
            if !(0.0..width as f64).contains(&p.x) || !(0.0..height as f64).contains(&p.y) {
                return Err(Error::invalid("generator lies outside the grid"));
            }
            if points[..i].contains(p) {
                return Err(Error::invalid("generators must be pairwise distinct"));
            }
        }
        Ok(Self {
            points,
            width,
            height,
        })
    }

    #[inline]
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.height
    }
}

/// Draws `n` distinct generators uniformly over `[0, width) x [0, height)`.
/// Exact duplicates are re-drawn.
pub fn sample_generators<R: RngCore + ?Sized>(
    rng: &mut R,
    n: usize,
    width: usize,
    height: usize,
) -> Result<GeneratorSet> {
    if n < 3 {
        return Err(Error::invalid("n must be at least 3"));
    }
    if width < 2 || height < 2 {
        return Err(Error::invalid("width and height must be at least 2"));
    }
    if n > width * height {
        return Err(Error::invalid("more generators than pixels"));
    }
    let (w, h) = (width as f64, height as f64);
    let mut points: Vec<Point> = Vec::with_capacity(n);
    while points.len() < n {
        let p = Point::new(uniform_f64(rng) * w, uniform_f64(rng) * h);
        // x * w can round up to w for x just below 1.
        if p.x >= w || p.y >= h || points.contains(&p) {
            continue;
        }
        points.push(p);
    }
    GeneratorSet::new(points, width, height)
}

/// Index of the generator closest to `x`, by linear scan; ties go to the
/// lowest index.
pub fn nearest_generator(x: Point, gens: &GeneratorSet) -> usize {
    let mut best = 0;
    let mut best_d = f64::INFINITY;
    for (i, g) in gens.points.iter().enumerate() {
        let d = x.dist2(*g);
        if d < best_d {
            best = i;
            best_d = d;
        }
    }
    best
}
