//! Exact distances between saw functions.
//!
//! Both functions are piecewise linear with known breakpoints, so on every
//! interval of the merged breakpoint set their difference is affine and its
//! absolute value integrates in closed form. Outside their bars both functions
//! are zero.

use super::SawFunction;

/// Merged breakpoints with the difference `a − b` at each.
fn difference_profile(a: &SawFunction, b: &SawFunction) -> Vec<(f64, f64)> {
    let mut xs = a.breakpoints();
    xs.extend(b.breakpoints());
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    xs.into_iter()
        .map(|x| (x, a.evaluate(x) - b.evaluate(x)))
        .collect()
}

/// ∫ |h| over `[x0, x1]` for affine `h` with end values `h0`, `h1`.
fn abs_affine_integral(h0: f64, h1: f64, width: f64) -> f64 {
    if h0 * h1 >= 0.0 {
        0.5 * (h0.abs() + h1.abs()) * width
    } else {
        // split at the root
        0.5 * (h0 * h0 + h1 * h1) / (h0.abs() + h1.abs()) * width
    }
}

/// `∫ |a − b| dt`.
pub fn l1_distance(a: &SawFunction, b: &SawFunction) -> f64 {
    difference_profile(a, b)
        .windows(2)
        .map(|w| abs_affine_integral(w[0].1, w[1].1, w[1].0 - w[0].0))
        .sum()
}

/// `∫ |a − b| + |a′ − b′| dt`.
pub fn l2_sobolev_distance(a: &SawFunction, b: &SawFunction) -> f64 {
    difference_profile(a, b)
        .windows(2)
        .map(|w| {
            let (h0, h1, width) = (w[0].1, w[1].1, w[1].0 - w[0].0);
            // the derivative of the difference is constant on the piece
            abs_affine_integral(h0, h1, width) + (h1 - h0).abs()
        })
        .sum()
}

/// `sup_t |a(t) − b(t)|`, attained at a breakpoint.
pub fn sup_distance(a: &SawFunction, b: &SawFunction) -> f64 {
    difference_profile(a, b)
        .into_iter()
        .map(|(_, h)| h.abs())
        .fold(0.0, f64::max)
}

/// `∫ S dt` over the real line.
pub fn integral(s: &SawFunction) -> f64 {
    let xs = s.breakpoints();
    xs.windows(2)
        .map(|w| 0.5 * (s.evaluate(w[0]) + s.evaluate(w[1])) * (w[1] - w[0]))
        .sum()
}
