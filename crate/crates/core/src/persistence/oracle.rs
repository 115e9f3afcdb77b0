//! Reference Betti numbers by full recomputation on every level set.
//!
//! Nothing here shares state or code paths with the incremental sweep or the
//! boundary reduction: components come from breadth-first search and the
//! triangle boundary rank from dense Gaussian elimination on bit rows.

use crate::error::Result;
use crate::graph::Graph;
use crate::persistence::{sublevel_subgraph, ComplexMode, FiltrationSpec};

/// `(B0, B1)` of `g` viewed as a graph or as its clique complex up to triangles.
pub fn betti_numbers(g: &Graph, mode: ComplexMode) -> (usize, usize) {
    let b0 = g.component_count();
    let cycles = g.num_edges() + b0 - g.num_nodes();
    match mode {
        ComplexMode::Graph => (b0, cycles),
        ComplexMode::Clique2 => (b0, cycles - triangle_boundary_rank(g)),
    }
}

/// `(B0, B1)` at every threshold, in threshold order.
pub fn oracle_counts(g: &Graph, spec: &FiltrationSpec) -> Result<Vec<(usize, usize)>> {
    (0..spec.len())
        .map(|i| {
            let (sub, _) = sublevel_subgraph(g, spec, i)?;
            Ok(betti_numbers(&sub, spec.mode()))
        })
        .collect()
}

fn triangle_boundary_rank(g: &Graph) -> usize {
    let edges = g.edges();
    let words = edges.len().div_ceil(64);
    let index = |u: usize, v: usize| edges.iter().position(|&e| e == (u, v)).unwrap();
    let mut rows: Vec<Vec<u64>> = g
        .triangles()
        .into_iter()
        .map(|(a, b, c)| {
            let mut row = vec![0u64; words];
            for e in [index(a, b), index(a, c), index(b, c)] {
                row[e / 64] |= 1 << (e % 64);
            }
            row
        })
        .collect();

    let mut rank = 0;
    for bit in 0..edges.len() {
        let (w, mask) = (bit / 64, 1u64 << (bit % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & mask != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & mask != 0 {
                row.iter_mut().zip(&pivot).for_each(|(x, y)| *x ^= y);
            }
        }
        rank += 1;
    }
    rank
}
