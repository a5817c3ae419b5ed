//! SVG rendering of a Voronoi diagram for documentation.

use std::fmt::Write;

use vpatch_core::geometry::VoronoiDiagram;

/// Region polygons (clipped to the frame) and generator dots. Bounded
/// regions are shaded; regions listed in `highlight` are shaded darker.
pub fn diagram_svg(d: &VoronoiDiagram, highlight: &[usize]) -> String {
    let (w, h) = (d.width(), d.height());
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(s, r##"<rect width="{w}" height="{h}" fill="#ffffff"/>"##).unwrap();
    for r in d.regions() {
        let fill = if highlight.contains(&r.generator_index) {
            "#e4572e"
        } else if r.bounded {
            "#a8dadc"
        } else {
            "#f1faee"
        };
        let pts: Vec<String> = r
            .vertices
            .iter()
            .map(|p| format!("{:.3},{:.3}", p.x, p.y))
            .collect();
        writeln!(
            s,
            r##"<polygon points="{}" fill="{fill}" stroke="#1d3557" stroke-width="0.5"/>"##,
            pts.join(" ")
        )
        .unwrap();
    }
    for p in d.generators().points() {
        writeln!(
            s,
            r##"<circle cx="{:.3}" cy="{:.3}" r="1.5" fill="#1d3557"/>"##,
            p.x, p.y
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use vpatch_core::geometry::{compute_voronoi, sample_generators};
    use vpatch_core::rng::seeded;

    #[test]
    fn one_polygon_and_dot_per_generator() {
        let d = compute_voronoi(&sample_generators(&mut seeded(1), 12, 64, 48).unwrap());
        let svg = diagram_svg(&d, &[0]);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<polygon").count(), 12);
        assert_eq!(svg.matches("<circle").count(), 12);
        assert_eq!(svg.matches("#e4572e").count(), 1);
        assert_eq!(svg, diagram_svg(&d, &[0]));
    }
}
