use alloc::vec;
use alloc::vec::Vec;

use super::{GeneratorSet, Point};

/// Uniform bucket grid answering exact nearest-generator queries.
///
/// Candidates are compared on `(dist2, index)`, and a bucket ring is only
/// skipped when its distance bound exceeds the best candidate by a relative
/// margin, so answers match a linear scan bit for bit.
#[derive(Debug, Clone)]
pub struct NearestIndex {
    points: Vec<Point>,
    cell: f64,
    cols: usize,
    rows: usize,
    // Bucket b holds point ids starts[b]..starts[b + 1] of `ids`.
    starts: Vec<u32>,
    ids: Vec<u32>,
}

impl NearestIndex {
    pub fn new(gens: &GeneratorSet) -> Self {
        let (w, h) = (gens.width() as f64, gens.height() as f64);
        let n = gens.len().max(1) as f64;
        let cell = libm::sqrt(w * h / n).max(1.0);
        let cols = (libm::ceil(w / cell) as usize).max(1);
        let rows = (libm::ceil(h / cell) as usize).max(1);
        let points = gens.points().to_vec();
        let bucket_of = |p: &Point| {
            let bx = ((p.x / cell) as usize).min(cols - 1);
            let by = ((p.y / cell) as usize).min(rows - 1);
            by * cols + bx
        };
        let mut counts = vec![0u32; cols * rows + 1];
        for p in &points {
            counts[bucket_of(p) + 1] += 1;
        }
        for b in 1..counts.len() {
            counts[b] += counts[b - 1];
        }
        let starts = counts.clone();
        let mut fill = counts;
        let mut ids = vec![0u32; points.len()];
        for (i, p) in points.iter().enumerate() {
            let b = bucket_of(p);
            ids[fill[b] as usize] = i as u32;
            fill[b] += 1;
        }
        Self {
            points,
            cell,
            cols,
            rows,
            starts,
            ids,
        }
    }

    /// Index of the generator nearest to `q`; ties go to the lowest index.
    /// `q` must lie inside the grid rectangle.
    pub fn nearest(&self, q: Point) -> usize {
        let bx = ((q.x / self.cell).max(0.0) as usize).min(self.cols - 1);
        let by = ((q.y / self.cell).max(0.0) as usize).min(self.rows - 1);
        let mut best = usize::MAX;
        let mut best_d = f64::INFINITY;
        let max_ring = self.cols.max(self.rows);
        for ring in 0..=max_ring {
            let x0 = bx as isize - ring as isize;
            let x1 = bx as isize + ring as isize;
            let y0 = by as isize - ring as isize;
            let y1 = by as isize + ring as isize;
            for y in y0.max(0)..=y1.min(self.rows as isize - 1) {
                let edge_row = y == y0 || y == y1;
                let mut x = x0.max(0);
                while x <= x1.min(self.cols as isize - 1) {
                    let b = y as usize * self.cols + x as usize;
                    for &id in &self.ids[self.starts[b] as usize..self.starts[b + 1] as usize] {
                        let id = id as usize;
                        let d = q.dist2(self.points[id]);
                        if d < best_d || (d == best_d && id < best) {
                            best = id;
                            best_d = d;
                        }
                    }
                    // Interior rows of the ring only touch its two side columns.
                    x = if edge_row || x == x1 { x + 1 } else { x1 };
                }
            }
            // Points outside this ring are more than ring * cell away.
            let bound = ring as f64 * self.cell;
            if best != usize::MAX && best_d < bound * bound * (1.0 - 1e-9) {
                break;
            }
        }
        best
    }
}

/// Side of the pixel blocks that share a candidate list in [`label_grid`].
const BLOCK: usize = 8;

/// Nearest-generator label of every pixel centre, row-major.
///
/// For each 8x8 block, `U` is the smallest distance within which some
/// generator covers the whole block; only generators whose distance to the
/// block is at most `U` can own any of its pixels. Those candidates are
/// scanned exactly, comparing `(dist2, index)`.
pub(crate) fn label_grid(gens: &GeneratorSet) -> Vec<u32> {
    let (w, h) = (gens.width(), gens.height());
    let points = gens.points();
    let mut labels = vec![0u32; w * h];
    let mut candidates: Vec<u32> = Vec::with_capacity(points.len());
    for by in (0..h).step_by(BLOCK) {
        let y1 = (by + BLOCK).min(h);
        for bx in (0..w).step_by(BLOCK) {
            let x1 = (bx + BLOCK).min(w);
            // Bounding box of the block's pixel centres.
            let (lx, hx) = (bx as f64 + 0.5, x1 as f64 - 0.5);
            let (ly, hy) = (by as f64 + 0.5, y1 as f64 - 0.5);
            let far = |p: &Point| {
                let dx = (p.x - lx).abs().max((p.x - hx).abs());
                let dy = (p.y - ly).abs().max((p.y - hy).abs());
                dx * dx + dy * dy
            };
            let near = |p: &Point| {
                let dx = (lx - p.x).max(0.0).max(p.x - hx);
                let dy = (ly - p.y).max(0.0).max(p.y - hy);
                dx * dx + dy * dy
            };
            let cover = points.iter().map(far).fold(f64::INFINITY, f64::min);
            let limit = cover * (1.0 + 1e-9) + 1e-9;
            candidates.clear();
            candidates.extend(
                points
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| near(p) <= limit)
                    .map(|(i, _)| i as u32),
            );
            for y in by..y1 {
                for x in bx..x1 {
                    let q = Point::pixel_center(x, y);
                    let mut best = candidates[0];
                    let mut best_d = q.dist2(points[best as usize]);
                    for &c in &candidates[1..] {
                        let d = q.dist2(points[c as usize]);
                        // Candidates ascend by index, so strict `<` keeps ties low.
                        if d < best_d {
                            best = c;
                            best_d = d;
                        }
                    }
                    labels[y * w + x] = best;
                }
            }
        }
    }
    labels
}
