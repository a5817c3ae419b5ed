use alloc::vec::Vec;

use super::Point;

/// Absolute tolerance for vertex comparisons and orientation tests.
pub const EPSILON: f64 = 1e-9;

#[inline]
fn cross(o: Point, a: Point, b: Point) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Signed shoelace area: positive for counter-clockwise vertex order.
pub fn polygon_area(vertices: &[Point]) -> f64 {
    let n = vertices.len();
    if n < 3 {
        return 0.0;
    }
    let mut twice = 0.0;
    for i in 0..n {
        let (a, b) = (vertices[i], vertices[(i + 1) % n]);
        twice += a.x * b.y - b.x * a.y;
    }
    0.5 * twice
}

/// Every turn of the closed polyline has the same orientation, up to
/// [`EPSILON`]. Fewer than three vertices is not a polygon.
pub fn is_convex(vertices: &[Point]) -> bool {
    let n = vertices.len();
    if n < 3 {
        return false;
    }
    let (mut pos, mut neg) = (false, false);
    for i in 0..n {
        let c = cross(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]);
        pos |= c > EPSILON;
        neg |= c < -EPSILON;
    }
    !(pos && neg)
}

/// Convex hull by the monotone chain, counter-clockwise, without collinear
/// vertices. Degenerate inputs give fewer than three vertices.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<Point> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: &mut dyn Iterator<Item = &Point> = if pass == 0 {
            &mut pts.iter()
        } else {
            &mut pts.iter().rev()
        };
        for &p in iter {
            while hull.len() >= start + 2
                && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// Strictly inside a counter-clockwise convex polygon: on the left of every
/// edge by more than [`EPSILON`].
pub(crate) fn strictly_inside(p: Point, ccw: &[Point]) -> bool {
    let n = ccw.len();
    n >= 3 && (0..n).all(|i| cross(ccw[i], ccw[(i + 1) % n], p) > EPSILON)
}

/// What an edge of a clipped cell lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum EdgeSource {
    /// A side of the image frame.
    Frame,
    /// The perpendicular bisector with another generator.
    Bisector(usize),
}

/// Convex polygon whose `i`-th edge runs from `vertices[i]` to
/// `vertices[i + 1]` and lies on `edges[i]`.
#[derive(Debug, Clone)]
pub(crate) struct LabeledPolygon {
    pub vertices: Vec<Point>,
    pub edges: Vec<EdgeSource>,
}

impl LabeledPolygon {
    pub fn rectangle(width: f64, height: f64) -> Self {
        Self {
            vertices: alloc::vec![
                Point::new(0.0, 0.0),
                Point::new(width, 0.0),
                Point::new(width, height),
                Point::new(0.0, height),
            ],
            edges: alloc::vec![EdgeSource::Frame; 4],
        }
    }

    /// Keeps the part of the polygon closer to `site` than to `other`
    /// (Sutherland-Hodgman against the bisector).
    pub fn clip_bisector(&mut self, site: Point, other: Point, label: usize) {
        let n = self.vertices.len();
        if n == 0 {
            return;
        }
        let mid = Point::new(0.5 * (site.x + other.x), 0.5 * (site.y + other.y));
        let (nx, ny) = (other.x - site.x, other.y - site.y);
        let side = |p: Point| (p.x - mid.x) * nx + (p.y - mid.y) * ny;
        let values: Vec<f64> = self.vertices.iter().map(|&p| side(p)).collect();
        if values.iter().all(|&v| v <= 0.0) {
            return;
        }
        let mut vertices = Vec::with_capacity(n + 1);
        let mut edges = Vec::with_capacity(n + 1);
        for i in 0..n {
            let j = (i + 1) % n;
            let (a, b) = (self.vertices[i], self.vertices[j]);
            let (fa, fb) = (values[i], values[j]);
            let crossing = || {
                let t = fa / (fa - fb);
                Point::new(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
            };
            match (fa <= 0.0, fb <= 0.0) {
                (true, true) => {
                    vertices.push(a);
                    edges.push(self.edges[i]);
                }
                (true, false) => {
                    vertices.push(a);
                    edges.push(self.edges[i]);
                    if fa < 0.0 {
                        vertices.push(crossing());
                        edges.push(EdgeSource::Bisector(label));
                    } else {
                        // `a` sits on the bisector: the new edge starts here.
                        *edges.last_mut().unwrap() = EdgeSource::Bisector(label);
                    }
                }
                (false, true) => {
                    if fb < 0.0 {
                        vertices.push(crossing());
                        edges.push(self.edges[i]);
                    }
                }
                (false, false) => {}
            }
        }
        self.vertices = vertices;
        self.edges = edges;
        self.dedup();
    }

    fn dedup(&mut self) {
        let mut i = 0;
        while self.vertices.len() > 1 && i < self.vertices.len() {
            let j = (i + 1) % self.vertices.len();
            if self.vertices[i].dist2(self.vertices[j]) <= EPSILON * EPSILON {
                // Drop vertex j; edge i now runs to j's successor on j's line.
                self.edges[i] = self.edges[j];
                self.vertices.remove(j);
                self.edges.remove(j);
                if j < i {
                    i -= 1;
                }
            } else {
                i += 1;
            }
        }
    }

    /// True if a frame side survives with positive length.
    pub fn touches_frame(&self) -> bool {
        let n = self.vertices.len();
        (0..n).any(|i| {
            self.edges[i] == EdgeSource::Frame
                && self.vertices[i].dist(self.vertices[(i + 1) % n]) > EPSILON
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(f64, f64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    #[test]
    fn area_and_orientation() {
        let sq = pts(&[(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0)]);
        assert_eq!(polygon_area(&sq), 4.0);
        let rev: Vec<_> = sq.iter().rev().copied().collect();
        assert_eq!(polygon_area(&rev), -4.0);
        assert!(is_convex(&sq) && is_convex(&rev));
        assert!(!is_convex(&pts(&[
            (0.0, 0.0),
            (2.0, 0.0),
            (1.0, 0.5),
            (2.0, 2.0),
            (0.0, 2.0)
        ])));
    }

    #[test]
    fn hull_drops_interior_and_collinear() {
        let h = convex_hull(&pts(&[
            (0.0, 0.0),
            (1.0, 0.0),
            (2.0, 0.0),
            (2.0, 2.0),
            (0.0, 2.0),
            (1.0, 1.0),
        ]));
        assert_eq!(h.len(), 4);
        assert!(polygon_area(&h) > 0.0);
        assert!(strictly_inside(Point::new(1.0, 1.0), &h));
        assert!(!strictly_inside(Point::new(1.0, 0.0), &h));
    }

    #[test]
    fn collinear_hull_is_degenerate() {
        let h = convex_hull(&pts(&[(0.0, 0.0), (1.0, 1.0), (2.0, 2.0), (3.0, 3.0)]));
        assert!(h.len() < 3);
    }

    #[test]
    fn clip_tracks_edge_sources() {
        let mut p = LabeledPolygon::rectangle(10.0, 10.0);
        // Bisector x = 5 between (2, 5) and (8, 5).
        p.clip_bisector(Point::new(2.0, 5.0), Point::new(8.0, 5.0), 1);
        assert!((polygon_area(&p.vertices) - 50.0).abs() < 1e-12);
        assert_eq!(
            p.edges
                .iter()
                .filter(|e| **e == EdgeSource::Bisector(1))
                .count(),
            1
        );
        assert!(p.touches_frame());

        let mut q = LabeledPolygon::rectangle(10.0, 10.0);
        let site = Point::new(5.0, 5.0);
        for (k, o) in pts(&[(5.0, 1.0), (9.0, 5.0), (5.0, 9.0), (1.0, 5.0)])
            .into_iter()
            .enumerate()
        {
            q.clip_bisector(site, o, k);
        }
        assert!(!q.touches_frame());
        assert!((polygon_area(&q.vertices) - 16.0).abs() < 1e-12);
        assert!(is_convex(&q.vertices));
    }

    #[test]
    fn clip_through_vertex() {
        let mut p = LabeledPolygon::rectangle(4.0, 4.0);
        // Bisector of (0,0) and (4,4) is the anti-diagonal through (4,0) and (0,4).
        p.clip_bisector(Point::new(0.0, 0.0), Point::new(4.0, 4.0), 7);
        assert_eq!(p.vertices.len(), 3);
        assert!((polygon_area(&p.vertices) - 8.0).abs() < 1e-12);
        assert_eq!(
            p.edges
                .iter()
                .filter(|e| **e == EdgeSource::Bisector(7))
                .count(),
            1
        );
    }
}
