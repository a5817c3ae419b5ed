use alloc::vec::Vec;

use super::index::{label_grid, NearestIndex};
use super::polygon::{convex_hull, strictly_inside, LabeledPolygon};
use super::{GeneratorSet, Point};
use crate::{Error, PixelMask, Result};

/// One Voronoi cell of a diagram.
#[derive(Debug, Clone)]
pub struct Region {
    pub generator_index: usize,
    /// Cell polygon clipped to the image frame, counter-clockwise. For a
    /// bounded region this is the complete cell.
    pub vertices: Vec<Point>,
    /// The cell is finite: its generator lies strictly inside the convex
    /// hull of all generators, so no edge is an infinite ray.
    pub finite: bool,
    /// The cell is finite and lies entirely inside the image frame. Only
    /// bounded regions take part in patch transport.
    pub bounded: bool,
    /// Pixels whose nearest generator is this one.
    pub mask: PixelMask,
    /// Rounded mean pixel coordinate of `mask`; `None` when the mask is empty.
    pub centroid: Option<Point>,
}

impl Region {
    #[inline]
    pub fn area(&self) -> usize {
        self.mask.len()
    }
}

#[derive(Debug, Clone)]
pub struct VoronoiDiagram {
    generators: GeneratorSet,
    regions: Vec<Region>,
    labels: Vec<u32>,
    index: NearestIndex,
}

impl VoronoiDiagram {
    #[inline]
    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    #[inline]
    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    #[inline]
    pub fn region(&self, i: usize) -> &Region {
        &self.regions[i]
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.generators.width()
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.generators.height()
    }

    /// Region index owning pixel `(x, y)`.
    #[inline]
    pub fn label_at(&self, x: usize, y: usize) -> usize {
        self.labels[y * self.width() + x] as usize
    }

    /// Row-major per-pixel region indices.
    #[inline]
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    #[inline]
    pub(crate) fn nearest_index(&self) -> &NearestIndex {
        &self.index
    }

    /// Indices of bounded regions, ascending.
    pub fn bounded_regions(&self) -> Vec<usize> {
        bounded_regions(self)
    }
}

/// Builds the diagram: one region per generator, in generator order.
///
/// Collinear generators produce a diagram without finite (and therefore
/// without bounded) regions; this is not an error.
pub fn compute_voronoi(gens: &GeneratorSet) -> VoronoiDiagram {
    let (width, height) = (gens.width(), gens.height());
    let points = gens.points();
    let hull = convex_hull(points);
    let index = NearestIndex::new(gens);

    let labels = label_grid(gens);
    let mut masks: Vec<PixelMask> = points
        .iter()
        .map(|_| PixelMask::new(width, height))
        .collect();
    for (i, &owner) in labels.iter().enumerate() {
        masks[owner as usize].insert(i % width, i / width);
    }

    let regions = masks
        .into_iter()
        .enumerate()
        .map(|(i, mask)| {
            let site = points[i];
            let mut cell = LabeledPolygon::rectangle(width as f64, height as f64);
            for (j, &other) in points.iter().enumerate() {
                if j != i {
                    cell.clip_bisector(site, other, j);
                }
            }
            let finite = strictly_inside(site, &hull);
            let bounded = finite && !cell.touches_frame();
            let centroid = region_centroid(&mask).ok();
            Region {
                generator_index: i,
                vertices: cell.vertices,
                finite,
                bounded,
                mask,
                centroid,
            }
        })
        .collect();

    VoronoiDiagram {
        generators: gens.clone(),
        regions,
        labels,
        index,
    }
}

/// Indices of regions with `bounded == true`, ascending.
pub fn bounded_regions(d: &VoronoiDiagram) -> Vec<usize> {
    d.regions
        .iter()
        .filter(|r| r.bounded)
        .map(|r| r.generator_index)
        .collect()
}

/// Mean pixel coordinate of `mask`, each component rounded half up.
pub fn region_centroid(mask: &PixelMask) -> Result<Point> {
    if mask.is_empty() {
        return Err(Error::invalid("centroid of an empty mask"));
    }
    let (sx, sy) = mask
        .iter()
        .fold((0u64, 0u64), |(a, b), (x, y)| (a + x as u64, b + y as u64));
    let n = mask.len() as u64;
    // floor(s / n + 1/2) in integers.
    let round = |s: u64| ((2 * s + n) / (2 * n)) as f64;
    Ok(Point::new(round(sx), round(sy)))
}
