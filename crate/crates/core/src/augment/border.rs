use crate::PixelMask;

/// Seam band around pasted patches.
///
/// A boundary pixel is a mask pixel with at least one of its 8 neighbours
/// outside the mask; the image exterior counts as outside. The band holds
/// every pixel within Chebyshev distance `width` of a boundary pixel of any
/// mask, so it reaches `width` pixels into and out of each patch. Masks must
/// match the `grid` dimensions `(width, height)`.
pub fn calc_border(patch_masks: &[PixelMask], width: usize, grid: (usize, usize)) -> PixelMask {
    let (gw, gh) = grid;
    let mut band = PixelMask::new(gw, gh);
    let r = width as isize;
    for mask in patch_masks {
        assert_eq!(
            (mask.width(), mask.height()),
            grid,
            "mask does not match grid"
        );
        for (x, y) in mask.iter() {
            if !is_boundary(mask, x, y) {
                continue;
            }
            let (x, y) = (x as isize, y as isize);
            for by in (y - r).max(0)..=(y + r).min(gh as isize - 1) {
                for bx in (x - r).max(0)..=(x + r).min(gw as isize - 1) {
                    band.insert(bx as usize, by as usize);
                }
            }
        }
    }
    band
}

fn is_boundary(mask: &PixelMask, x: usize, y: usize) -> bool {
    for dy in -1isize..=1 {
        for dx in -1isize..=1 {
            let (nx, ny) = (x as isize + dx, y as isize + dy);
            if nx < 0 || ny < 0 || !mask.contains(nx as usize, ny as usize) {
                return true;
            }
        }
    }
    false
}
