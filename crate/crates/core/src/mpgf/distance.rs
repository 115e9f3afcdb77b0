//! L1 distance between grid functions on possibly different rectangles.

use super::{cell_of, MpgfGrid};
use crate::error::Result;

/// `∬ |G⁺ − G⁻| dx dy` for the `dimension` layers, each grid being zero
/// outside its own domain.
///
/// Both functions are constant on every cell of the overlay of their edge
/// sets, so the integral is a finite sum of cell areas weighted by the
/// difference at the cell's centre.
pub fn grid_l1_distance(a: &MpgfGrid, b: &MpgfGrid, dimension: u8) -> Result<f64> {
    let (la, lb) = (a.layer(dimension)?, b.layer(dimension)?);
    let (ax, ay) = a.spec.edges();
    let (bx, by) = b.spec.edges();
    let merged = |p: &[f64], q: &[f64]| {
        let mut out: Vec<f64> = p.iter().chain(q).copied().collect();
        out.sort_by(f64::total_cmp);
        out.dedup();
        out
    };
    let (xs, ys) = (merged(&ax, &bx), merged(&ay, &by));
    let value = |layer: &[Vec<usize>], ex: &[f64], ey: &[f64], x: f64, y: f64| match (
        cell_of(ex, x),
        cell_of(ey, y),
    ) {
        (Some(i), Some(j)) => layer[i][j] as f64,
        _ => 0.0,
    };

    let mut total = 0.0;
    for wx in xs.windows(2) {
        let cx = 0.5 * (wx[0] + wx[1]);
        for wy in ys.windows(2) {
            let cy = 0.5 * (wy[0] + wy[1]);
            let diff = value(la, &ax, &ay, cx, cy) - value(lb, &bx, &by, cx, cy);
            total += diff.abs() * (wx[1] - wx[0]) * (wy[1] - wy[0]);
        }
    }
    Ok(total)
}
