//! Standard column reduction of the GF(2) boundary matrix of the clique
//! complex truncated at triangles.

use std::collections::HashMap;

use crate::gf2::{add_assign, Column};
use crate::graph::Graph;

/// A persistence pair in filtration steps. `death == None` marks an
/// essential class. Zero-length pairs are kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SimplexPair {
    pub dimension: u8,
    pub birth: usize,
    pub death: Option<usize>,
}

struct Simplex {
    step: usize,
    vertices: Vec<usize>,
}

/// Pairs of dimensions 0 and 1 for the vertex, edge and triangle filtration
/// given by node entry steps.
///
/// Simplices are ordered by entry step, then dimension, then lexicographic
/// vertex order; a simplex enters with its last vertex.
pub fn clique2_pairs(g: &Graph, entry: &[Option<usize>], steps: usize) -> Vec<SimplexPair> {
    let mut simplices: Vec<Simplex> = Vec::new();
    for (v, e) in entry.iter().enumerate() {
        if let Some(step) = *e {
            simplices.push(Simplex {
                step,
                vertices: vec![v],
            });
        }
    }
    for &(u, v) in g.edges() {
        if let (Some(a), Some(b)) = (entry[u], entry[v]) {
            simplices.push(Simplex {
                step: a.max(b),
                vertices: vec![u, v],
            });
        }
    }
    for (a, b, c) in g.triangles() {
        if let (Some(x), Some(y), Some(z)) = (entry[a], entry[b], entry[c]) {
            simplices.push(Simplex {
                step: x.max(y).max(z),
                vertices: vec![a, b, c],
            });
        }
    }
    debug_assert!(simplices.iter().all(|s| s.step < steps));
    simplices.sort_by(|s, t| {
        (s.step, s.vertices.len(), &s.vertices).cmp(&(t.step, t.vertices.len(), &t.vertices))
    });

    let position: HashMap<&[usize], usize> = simplices
        .iter()
        .enumerate()
        .map(|(i, s)| (s.vertices.as_slice(), i))
        .collect();
    let boundary = |s: &Simplex| -> Column {
        let vs = &s.vertices;
        if vs.len() == 1 {
            return Vec::new();
        }
        let mut col: Column = (0..vs.len())
            .map(|skip| {
                let face: Vec<usize> = vs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                position[face.as_slice()]
            })
            .collect();
        col.sort_unstable();
        col
    };

    let mut reduced: Vec<Column> = Vec::with_capacity(simplices.len());
    let mut column_with_low: HashMap<usize, usize> = HashMap::new();
    let mut paired = vec![false; simplices.len()];
    let mut pairs = Vec::new();
    for (j, s) in simplices.iter().enumerate() {
        let mut col = boundary(s);
        while let Some(&low) = col.last() {
            match column_with_low.get(&low) {
                Some(&k) => add_assign(&mut col, &reduced[k]),
                None => break,
            }
        }
        if let Some(&low) = col.last() {
            column_with_low.insert(low, j);
            paired[low] = true;
            paired[j] = true;
            pairs.push(SimplexPair {
                dimension: (simplices[low].vertices.len() - 1) as u8,
                birth: simplices[low].step,
                death: Some(s.step),
            });
        }
        reduced.push(col);
    }
    for (j, s) in simplices.iter().enumerate() {
        // unpaired triangles would be dimension-2 classes, which we do not report
        if !paired[j] && reduced[j].is_empty() && s.vertices.len() <= 2 {
            pairs.push(SimplexPair {
                dimension: (s.vertices.len() - 1) as u8,
                birth: s.step,
                death: None,
            });
        }
    }
    pairs.sort_unstable();
    pairs
}
