//! Exact Wasserstein and bottleneck distances between small persistence
//! diagrams, with `‖·‖∞` as ground metric and the diagonal as a sink of
//! unbounded multiplicity.
//!
//! The matching problem is posed on the usual augmented square matrix: rows
//! are the points of the first diagram followed by one diagonal slot per point
//! of the second, columns the points of the second followed by one diagonal
//! slot per point of the first. Diagonal-to-diagonal assignments are free.

use crate::error::{Error, Result};

/// Largest diagram size accepted by [`wasserstein`].
pub const MAX_MATCHING_PAIRS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WassersteinOrder {
    /// W1: minimum total matching cost.
    One,
    /// W∞: bottleneck distance.
    Infinity,
}

fn linf(p: (f64, f64), q: (f64, f64)) -> f64 {
    (p.0 - q.0).abs().max((p.1 - q.1).abs())
}

/// `‖(b, d) − Δ‖∞`.
fn to_diagonal(p: (f64, f64)) -> f64 {
    0.5 * (p.1 - p.0)
}

fn augmented_costs(a: &[(f64, f64)], b: &[(f64, f64)]) -> Vec<Vec<f64>> {
    let (n, m) = (a.len(), b.len());
    let size = n + m;
    let mut cost = vec![vec![0.0; size]; size];
    for (i, row) in cost.iter_mut().enumerate() {
        for (j, c) in row.iter_mut().enumerate() {
            *c = match (i < n, j < m) {
                (true, true) => linf(a[i], b[j]),
                (true, false) => to_diagonal(a[i]),
                (false, true) => to_diagonal(b[j]),
                (false, false) => 0.0,
            };
        }
    }
    cost
}

pub fn wasserstein(a: &[(f64, f64)], b: &[(f64, f64)], order: WassersteinOrder) -> Result<f64> {
    for d in [a, b] {
        if d.len() > MAX_MATCHING_PAIRS {
            return Err(Error::MatchingTooLarge {
                size: d.len(),
                cap: MAX_MATCHING_PAIRS,
            });
        }
    }
    if a.is_empty() && b.is_empty() {
        return Ok(0.0);
    }
    let cost = augmented_costs(a, b);
    Ok(match order {
        WassersteinOrder::One => {
            let assignment = min_cost_assignment(&cost);
            assignment
                .iter()
                .enumerate()
                .map(|(i, &j)| cost[i][j])
                .sum()
        }
        WassersteinOrder::Infinity => bottleneck(&cost),
    })
}

/// Hungarian algorithm with row and column potentials, O(n³).
/// Returns the column assigned to each row.
fn min_cost_assignment(cost: &[Vec<f64>]) -> Vec<usize> {
    let n = cost.len();
    // 1-based internally; column 0 is a virtual start
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut row_of = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        row_of[0] = i;
        let mut j0 = 0;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let reduced = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if reduced < minv[j] {
                    minv[j] = reduced;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[row_of[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut col_of_row = vec![0; n];
    for j in 1..=n {
        col_of_row[row_of[j] - 1] = j - 1;
    }
    col_of_row
}

/// Smallest `t` admitting a perfect matching that uses only entries `<= t`.
fn bottleneck(cost: &[Vec<f64>]) -> f64 {
    let mut candidates: Vec<f64> = cost.iter().flatten().copied().collect();
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();
    let (mut lo, mut hi) = (0, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if has_perfect_matching(cost, candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    candidates[lo]
}

fn has_perfect_matching(cost: &[Vec<f64>], limit: f64) -> bool {
    let n = cost.len();
    let mut match_of_col: Vec<Option<usize>> = vec![None; n];
    fn augment(
        row: usize,
        cost: &[Vec<f64>],
        limit: f64,
        seen: &mut [bool],
        match_of_col: &mut [Option<usize>],
    ) -> bool {
        for col in 0..cost.len() {
            if cost[row][col] <= limit && !seen[col] {
                seen[col] = true;
                let free = match match_of_col[col] {
                    None => true,
                    Some(other) => augment(other, cost, limit, seen, match_of_col),
                };
                if free {
                    match_of_col[col] = Some(row);
                    return true;
                }
            }
        }
        false
    }
    (0..n).all(|row| {
        let mut seen = vec![false; n];
        augment(row, cost, limit, &mut seen, &mut match_of_col)
    })
}
