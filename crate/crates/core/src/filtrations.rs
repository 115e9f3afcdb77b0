//! Structural node functions used to drive sublevel and superlevel filtrations.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeValues};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FiltrationKind {
    Degree,
    Closeness,
    Betweenness,
    Eccentricity,
    Hub,
    Authority,
    FormanRicci,
}

impl FiltrationKind {
    pub const ALL: [FiltrationKind; 7] = [
        Self::Degree,
        Self::Closeness,
        Self::Betweenness,
        Self::Eccentricity,
        Self::Hub,
        Self::Authority,
        Self::FormanRicci,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Degree => "degree",
            Self::Closeness => "closeness",
            Self::Betweenness => "betweenness",
            Self::Eccentricity => "eccentricity",
            Self::Hub => "hub",
            Self::Authority => "authority",
            Self::FormanRicci => "forman_ricci",
        }
    }
}

impl fmt::Display for FiltrationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FiltrationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Self::ALL.iter().map(|k| k.name()).collect();
                Error::InvalidInput(format!(
                    "unknown filtration {s:?}, expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

pub fn compute_filtration(g: &Graph, kind: FiltrationKind) -> Result<NodeValues> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let values = match kind {
        FiltrationKind::Degree => (0..g.num_nodes()).map(|v| g.degree(v) as f64).collect(),
        FiltrationKind::Closeness => closeness(g),
        FiltrationKind::Betweenness => betweenness(g),
        FiltrationKind::Eccentricity => eccentricity(g),
        FiltrationKind::Hub => hits(g)?.hub,
        FiltrationKind::Authority => hits(g)?.authority,
        FiltrationKind::FormanRicci => forman_ricci(g),
    };
    NodeValues::new(values)
}

/// Closeness within the node's own component; isolated nodes get 0.
fn closeness(g: &Graph) -> Vec<f64> {
    (0..g.num_nodes())
        .map(|v| {
            let (reached, total) = g
                .bfs_distances(v)
                .into_iter()
                .flatten()
                .fold((0usize, 0usize), |(n, s), d| (n + 1, s + d));
            if total == 0 {
                0.0
            } else {
                (reached - 1) as f64 / total as f64
            }
        })
        .collect()
}

/// Largest hop distance to any node of the same component.
fn eccentricity(g: &Graph) -> Vec<f64> {
    (0..g.num_nodes())
        .map(|v| g.bfs_distances(v).into_iter().flatten().max().unwrap_or(0) as f64)
        .collect()
}

/// Brandes' exact algorithm on unweighted shortest paths, unnormalised:
/// each unordered pair contributes once.
fn betweenness(g: &Graph) -> Vec<f64> {
    let n = g.num_nodes();
    let mut centrality = vec![0.0; n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![usize::MAX; n];
    let mut delta = vec![0.0f64; n];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();

    for s in 0..n {
        sigma.fill(0.0);
        dist.fill(usize::MAX);
        delta.fill(0.0);
        preds.iter_mut().for_each(Vec::clear);
        order.clear();

        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }
        for &w in order.iter().rev() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                centrality[w] += delta[w];
            }
        }
    }
    // every unordered pair was counted from both ends
    centrality.iter_mut().for_each(|c| *c /= 2.0);
    centrality
}

const HITS_TOLERANCE: f64 = 1e-10;
const HITS_MAX_ITERATIONS: usize = 1000;

struct HitsScores {
    hub: Vec<f64>,
    authority: Vec<f64>,
}

/// Hub and authority scores of an undirected graph.
///
/// With a symmetric adjacency matrix both scores are the dominant eigenvector
/// of `A`, scaled to max 1. The power iteration runs on `A + I`: on bipartite
/// graphs `A` has eigenvalues `±λ` and plain iteration oscillates, while the
/// shift makes `λ + 1` strictly dominant without changing the eigenvector.
fn hits(g: &Graph) -> Result<HitsScores> {
    let n = g.num_nodes();
    if g.num_edges() == 0 {
        return Ok(HitsScores {
            hub: vec![0.0; n],
            authority: vec![0.0; n],
        });
    }
    let step = |x: &[f64]| -> Vec<f64> {
        let mut y: Vec<f64> = (0..n)
            .map(|v| x[v] + g.neighbors(v).iter().map(|&u| x[u]).sum::<f64>())
            .collect();
        let max = y.iter().copied().fold(0.0, f64::max);
        y.iter_mut().for_each(|e| *e /= max);
        y
    };
    let mut x = vec![1.0; n];
    let mut residual = f64::INFINITY;
    for _ in 0..HITS_MAX_ITERATIONS {
        let next = step(&x);
        residual = max_abs_diff(&x, &next);
        x = next;
        if residual < HITS_TOLERANCE {
            return Ok(HitsScores {
                hub: x.clone(),
                authority: x,
            });
        }
    }
    Err(Error::HitsNotConverged {
        residual,
        iterations: HITS_MAX_ITERATIONS,
    })
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Mean combinatorial Forman curvature `4 − deg(u) − deg(v)` of the incident edges.
fn forman_ricci(g: &Graph) -> Vec<f64> {
    (0..g.num_nodes())
        .map(|v| {
            let nbrs = g.neighbors(v);
            if nbrs.is_empty() {
                return 0.0;
            }
            let dv = g.degree(v) as f64;
            let total: f64 = nbrs.iter().map(|&u| 4.0 - dv - g.degree(u) as f64).sum();
            total / nbrs.len() as f64
        })
        .collect()
}
