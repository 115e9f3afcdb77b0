use crate::gf2::EchelonBasis;
use crate::graph::Graph;
use crate::persistence::{ComplexMode, EntrySchedule};
use crate::union_find::UnionFind;

/// `(B0, B1)` of the level complex after each step of an increasing filtration.
///
/// `entry[v]` is the step at which node `v` appears (`None`: never). B1 is the
/// cycle rank `|E| − |V| + B0`, minus in clique2 mode the rank of the boundary
/// span of the triangles present so far.
pub(crate) fn level_sweep(
    g: &Graph,
    entry: &[Option<usize>],
    steps: usize,
    mode: ComplexMode,
) -> Vec<(usize, usize)> {
    let schedule = EntrySchedule::new(g, entry, steps);
    let triangles_at = match mode {
        ComplexMode::Graph => None,
        ComplexMode::Clique2 => Some(triangle_schedule(g, entry, steps)),
    };

    let mut uf = UnionFind::new(g.num_nodes());
    let mut basis = EchelonBasis::default();
    let (mut nodes, mut edges, mut components) = (0usize, 0usize, 0usize);
    let mut out = Vec::with_capacity(steps);
    for step in 0..steps {
        nodes += schedule.nodes[step].len();
        components += schedule.nodes[step].len();
        for &id in &schedule.edges[step] {
            let (u, v) = g.edges()[id];
            edges += 1;
            if uf.union(u, v) {
                components -= 1;
            }
        }
        if let Some(tris) = &triangles_at {
            for boundary in &tris[step] {
                basis.insert(boundary.clone());
            }
        }
        let cycles = edges + components - nodes;
        out.push((components, cycles - basis.rank()));
    }
    out
}

/// Boundary columns (edge ids) of the triangles entering at each step.
pub(crate) fn triangle_schedule(
    g: &Graph,
    entry: &[Option<usize>],
    steps: usize,
) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new(); steps];
    for (a, b, c) in g.triangles() {
        if let (Some(x), Some(y), Some(z)) = (entry[a], entry[b], entry[c]) {
            out[x.max(y).max(z)].push(triangle_boundary(g, a, b, c));
        }
    }
    out
}

pub(crate) fn edge_id(g: &Graph, u: usize, v: usize) -> usize {
    g.edges()
        .binary_search(&(u.min(v), u.max(v)))
        .expect("edge of a triangle")
}

/// Sorted edge ids of the boundary of triangle `a < b < c`.
pub(crate) fn triangle_boundary(g: &Graph, a: usize, b: usize, c: usize) -> Vec<usize> {
    let mut col = vec![edge_id(g, a, b), edge_id(g, a, c), edge_id(g, b, c)];
    col.sort_unstable();
    col
}
