//! Threshold filtrations of graphs: Betti curves and persistence diagrams in
//! dimensions 0 and 1.
//!
//! A [`FiltrationSpec`] pairs node values with a strictly increasing threshold
//! list. Sublevel filtrations grow with the threshold; superlevel filtrations
//! grow as the threshold decreases. Internally both are handled on a single
//! increasing *time axis*: for sublevel filtrations time is the node value, for
//! superlevel filtrations time is the negated node value. Betti curves are
//! reported against the original thresholds, diagrams in time coordinates so
//! that every pair satisfies `birth < death`.
//!
//! Classes that never die are capped at `t_N + δ`, with `δ` the mean threshold
//! spacing, so that every downstream summary stays finite.

mod oracle;
mod reduction;
mod sweep;
mod text;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeValues};
use crate::union_find::UnionFind;

pub use oracle::{betti_numbers, oracle_counts};
pub use reduction::clique2_pairs;
pub use text::parse_pairs;

pub(crate) use sweep::level_sweep;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Sublevel,
    Superlevel,
}

/// Which complex is built on a level set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplexMode {
    /// The induced subgraph as a 1-complex.
    Graph,
    /// The clique complex truncated at triangles.
    Clique2,
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sublevel" => Ok(Self::Sublevel),
            "superlevel" => Ok(Self::Superlevel),
            _ => Err(Error::InvalidInput(format!(
                "unknown direction {s:?}, expected sublevel or superlevel"
            ))),
        }
    }
}

impl FromStr for ComplexMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph" => Ok(Self::Graph),
            "clique2" => Ok(Self::Clique2),
            _ => Err(Error::InvalidInput(format!(
                "unknown complex mode {s:?}, expected graph or clique2"
            ))),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Sublevel => "sublevel",
            Self::Superlevel => "superlevel",
        })
    }
}

impl fmt::Display for ComplexMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Graph => "graph",
            Self::Clique2 => "clique2",
        })
    }
}

/// `m` evenly spaced thresholds from `min(values)` to `max(values)`.
///
/// Constant values give the two-point set `{v, v + 1}`.
pub fn make_thresholds(values: &[f64], m: usize) -> Result<Vec<f64>> {
    if m < 2 {
        return Err(Error::InvalidInput(format!(
            "need at least 2 thresholds, got {m}"
        )));
    }
    let (lo, hi) = values
        .iter()
        .fold(None, |acc: Option<(f64, f64)>, &x| match acc {
            None => Some((x, x)),
            Some((lo, hi)) => Some((lo.min(x), hi.max(x))),
        })
        .ok_or_else(|| Error::InvalidInput("no values to place thresholds on".into()))?;
    if !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidInput("threshold range is not finite".into()));
    }
    if lo == hi {
        return Ok(vec![lo, lo + 1.0]);
    }
    let step = (hi - lo) / (m - 1) as f64;
    let mut out: Vec<f64> = (0..m).map(|i| lo + step * i as f64).collect();
    out[m - 1] = hi;
    Ok(out)
}

pub(crate) fn check_thresholds(thresholds: &[f64]) -> Result<()> {
    if thresholds.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "need at least 2 thresholds, got {}",
            thresholds.len()
        )));
    }
    if thresholds.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidInput("thresholds must be finite".into()));
    }
    if thresholds.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput(
            "thresholds must be strictly increasing".into(),
        ));
    }
    Ok(())
}

/// Mean spacing of a threshold list.
pub fn mean_spacing(thresholds: &[f64]) -> f64 {
    let n = thresholds.len();
    (thresholds[n - 1] - thresholds[0]) / (n - 1) as f64
}

/// Index of the first threshold `>= x`, if any.
pub(crate) fn entry_index(thresholds: &[f64], x: f64) -> Option<usize> {
    let i = thresholds.partition_point(|&t| t < x);
    (i < thresholds.len()).then_some(i)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FiltrationSpec {
    values: NodeValues,
    thresholds: Vec<f64>,
    direction: Direction,
    mode: ComplexMode,
}

impl FiltrationSpec {
    /// Checks that the thresholds are strictly increasing and that the last
    /// level set of the filtration is the whole graph.
    pub fn new(
        values: NodeValues,
        thresholds: Vec<f64>,
        direction: Direction,
        mode: ComplexMode,
    ) -> Result<Self> {
        check_thresholds(&thresholds)?;
        if let Some((lo, hi)) = values.range() {
            match direction {
                Direction::Sublevel if thresholds[thresholds.len() - 1] < hi => {
                    return Err(Error::InvalidInput(format!(
                        "largest threshold {} is below the maximum value {hi}",
                        thresholds[thresholds.len() - 1]
                    )))
                }
                Direction::Superlevel if thresholds[0] > lo => {
                    return Err(Error::InvalidInput(format!(
                        "smallest threshold {} is above the minimum value {lo}",
                        thresholds[0]
                    )))
                }
                _ => {}
            }
        }
        Ok(Self {
            values,
            thresholds,
            direction,
            mode,
        })
    }

    /// Spec with `m` evenly spaced thresholds over the value range.
    pub fn evenly_spaced(
        values: NodeValues,
        m: usize,
        direction: Direction,
        mode: ComplexMode,
    ) -> Result<Self> {
        let thresholds = make_thresholds(values.as_slice(), m)?;
        Self::new(values, thresholds, direction, mode)
    }

    pub fn values(&self) -> &NodeValues {
        &self.values
    }

    pub fn thresholds(&self) -> &[f64] {
        &self.thresholds
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn mode(&self) -> ComplexMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.thresholds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thresholds.is_empty()
    }

    pub fn spacing(&self) -> f64 {
        mean_spacing(&self.thresholds)
    }

    /// Thresholds on the increasing time axis.
    pub fn time_thresholds(&self) -> Vec<f64> {
        match self.direction {
            Direction::Sublevel => self.thresholds.clone(),
            Direction::Superlevel => self.thresholds.iter().rev().map(|t| -t).collect(),
        }
    }

    /// Death time assigned to classes that never die.
    pub fn cap(&self) -> f64 {
        let time = self.time_thresholds();
        time[time.len() - 1] + self.spacing()
    }

    /// Whether node value `x` lies in the level set of threshold index `i`.
    pub fn contains(&self, x: f64, i: usize) -> bool {
        match self.direction {
            Direction::Sublevel => x <= self.thresholds[i],
            Direction::Superlevel => x >= self.thresholds[i],
        }
    }

    /// Time-axis step at which each node enters.
    fn entry_steps(&self) -> Vec<Option<usize>> {
        let time = self.time_thresholds();
        self.values
            .as_slice()
            .iter()
            .map(|&x| {
                let t = match self.direction {
                    Direction::Sublevel => x,
                    Direction::Superlevel => -x,
                };
                entry_index(&time, t)
            })
            .collect()
    }

    /// Maps a time-axis step back to a threshold index.
    fn threshold_index(&self, step: usize) -> usize {
        match self.direction {
            Direction::Sublevel => step,
            Direction::Superlevel => self.len() - 1 - step,
        }
    }

    fn check_graph(&self, g: &Graph) -> Result<()> {
        self.values.check_for(g)
    }
}

/// One bar of a persistence diagram, in time coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PersistencePair {
    pub birth: f64,
    pub death: f64,
    pub dimension: u8,
    /// Never dies inside the filtration; `death` is the finite cap.
    pub essential: bool,
}

impl PersistencePair {
    pub fn new(birth: f64, death: f64, dimension: u8) -> Self {
        Self {
            birth,
            death,
            dimension,
            essential: false,
        }
    }

    pub fn persistence(&self) -> f64 {
        self.death - self.birth
    }
}

/// Multiset of bars of one homology dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PersistenceDiagram {
    pub dimension: u8,
    pub pairs: Vec<PersistencePair>,
    /// Time-axis thresholds of the generating filtration.
    pub thresholds: Vec<f64>,
    pub direction: Direction,
}

impl PersistenceDiagram {
    /// Diagram of finite bars over the given time-axis thresholds.
    pub fn from_pairs(dimension: u8, pairs: &[(f64, f64)], thresholds: Vec<f64>) -> Result<Self> {
        check_thresholds(&thresholds)?;
        let pairs = pairs
            .iter()
            .map(|&(b, d)| {
                if b.partial_cmp(&d) != Some(Ordering::Less) {
                    return Err(Error::InvalidInput(format!(
                        "pair ({b}, {d}) has birth >= death"
                    )));
                }
                Ok(PersistencePair::new(b, d, dimension))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            dimension,
            pairs,
            thresholds,
            direction: Direction::Sublevel,
        })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn spacing(&self) -> f64 {
        mean_spacing(&self.thresholds)
    }

    pub fn cap(&self) -> f64 {
        self.thresholds[self.thresholds.len() - 1] + self.spacing()
    }

    pub fn essential_count(&self) -> usize {
        self.pairs.iter().filter(|p| p.essential).count()
    }

    /// Number of bars with `birth <= t < death`.
    pub fn alive_at(&self, t: f64) -> usize {
        self.pairs
            .iter()
            .filter(|p| p.birth <= t && t < p.death)
            .count()
    }

    /// Σ (death − birth).
    pub fn total_persistence(&self) -> f64 {
        self.pairs.iter().map(PersistencePair::persistence).sum()
    }

    pub fn as_tuples(&self) -> Vec<(f64, f64)> {
        self.pairs.iter().map(|p| (p.birth, p.death)).collect()
    }

    fn sort(&mut self) {
        self.pairs.sort_by(|a, b| {
            a.birth
                .total_cmp(&b.birth)
                .then(a.death.total_cmp(&b.death))
                .then(a.essential.cmp(&b.essential))
        });
    }
}

/// Betti numbers of one dimension at each threshold, in threshold order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BettiCurve {
    pub thresholds: Vec<f64>,
    pub values: Vec<usize>,
}

/// Level subgraph at threshold index `i` (induced on `f <= α_i` or `f >= α_i`).
pub fn sublevel_subgraph(
    g: &Graph,
    spec: &FiltrationSpec,
    i: usize,
) -> Result<(Graph, Vec<usize>)> {
    spec.check_graph(g)?;
    if i >= spec.len() {
        return Err(Error::InvalidInput(format!(
            "threshold index {i} out of range 0..{}",
            spec.len()
        )));
    }
    let values = spec.values().as_slice();
    Ok(g.induced_subgraph(|v| spec.contains(values[v], i)))
}

/// Betti curves of dimensions 0 and 1, computed incrementally.
pub fn betti_curves(g: &Graph, spec: &FiltrationSpec) -> Result<(BettiCurve, BettiCurve)> {
    spec.check_graph(g)?;
    let counts = level_sweep(g, &spec.entry_steps(), spec.len(), spec.mode());
    let mut b0 = vec![0; spec.len()];
    let mut b1 = vec![0; spec.len()];
    for (step, (x, y)) in counts.into_iter().enumerate() {
        let i = spec.threshold_index(step);
        b0[i] = x;
        b1[i] = y;
    }
    Ok((
        BettiCurve {
            thresholds: spec.thresholds.clone(),
            values: b0,
        },
        BettiCurve {
            thresholds: spec.thresholds.clone(),
            values: b1,
        },
    ))
}

/// Nodes entering at each step and edges (with their index into `g.edges()`)
/// entering at each step, in lexicographic order.
pub(crate) struct EntrySchedule {
    pub nodes: Vec<Vec<usize>>,
    pub edges: Vec<Vec<usize>>,
}

impl EntrySchedule {
    pub(crate) fn new(g: &Graph, entry: &[Option<usize>], steps: usize) -> Self {
        let mut nodes = vec![Vec::new(); steps];
        for (v, e) in entry.iter().enumerate() {
            if let Some(k) = e {
                nodes[*k].push(v);
            }
        }
        let mut edges = vec![Vec::new(); steps];
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            if let (Some(a), Some(b)) = (entry[u], entry[v]) {
                edges[a.max(b)].push(id);
            }
        }
        Self { nodes, edges }
    }
}

/// Zero-dimensional diagram by union-find with the elder rule.
///
/// Nodes entering at the same threshold are added together before any edge of
/// that threshold. When two components merge, the one born later dies; equal
/// births keep the component holding the smallest node index.
pub fn persistence_dim0(g: &Graph, spec: &FiltrationSpec) -> Result<PersistenceDiagram> {
    spec.check_graph(g)?;
    let time = spec.time_thresholds();
    let cap = spec.cap();
    let entry = spec.entry_steps();
    let schedule = EntrySchedule::new(g, &entry, spec.len());

    let n = g.num_nodes();
    let mut uf = UnionFind::new(n);
    let mut birth = vec![0usize; n];
    let mut min_node: Vec<usize> = (0..n).collect();
    let mut pairs = Vec::new();

    for step in 0..spec.len() {
        for &v in &schedule.nodes[step] {
            birth[v] = step;
        }
        for &id in &schedule.edges[step] {
            let (u, v) = g.edges()[id];
            let (ru, rv) = (uf.find(u), uf.find(v));
            if ru == rv {
                continue;
            }
            let (old, young) = if (birth[ru], min_node[ru]) <= (birth[rv], min_node[rv]) {
                (ru, rv)
            } else {
                (rv, ru)
            };
            if birth[young] < step {
                pairs.push(PersistencePair::new(time[birth[young]], time[step], 0));
            }
            uf.attach(young, old);
            min_node[old] = min_node[old].min(min_node[young]);
        }
    }
    for v in 0..n {
        // nodes that never enter are their own roots but not components
        if entry[v].is_some() && uf.find(v) == v {
            pairs.push(PersistencePair {
                birth: time[birth[v]],
                death: cap,
                dimension: 0,
                essential: true,
            });
        }
    }
    let mut pd = PersistenceDiagram {
        dimension: 0,
        pairs,
        thresholds: time,
        direction: spec.direction(),
    };
    pd.sort();
    Ok(pd)
}

/// One-dimensional diagram.
///
/// In graph mode every independent cycle is born with its closing edge and
/// never dies. In clique2 mode the pairs come from reducing the boundary
/// matrix of vertices, edges and triangles.
pub fn persistence_dim1(g: &Graph, spec: &FiltrationSpec) -> Result<PersistenceDiagram> {
    spec.check_graph(g)?;
    let time = spec.time_thresholds();
    let cap = spec.cap();
    let entry = spec.entry_steps();
    let mut pairs = match spec.mode() {
        ComplexMode::Graph => {
            let schedule = EntrySchedule::new(g, &entry, spec.len());
            let mut uf = UnionFind::new(g.num_nodes());
            let mut pairs = Vec::new();
            for (step, ids) in schedule.edges.iter().enumerate() {
                for &id in ids {
                    let (u, v) = g.edges()[id];
                    if !uf.union(u, v) {
                        pairs.push(PersistencePair {
                            birth: time[step],
                            death: cap,
                            dimension: 1,
                            essential: true,
                        });
                    }
                }
            }
            pairs
        }
        ComplexMode::Clique2 => clique2_pairs(g, &entry, spec.len())
            .into_iter()
            .filter(|p| p.dimension == 1)
            .map(|p| match p.death {
                Some(d) => PersistencePair::new(time[p.birth], time[d], 1),
                None => PersistencePair {
                    birth: time[p.birth],
                    death: cap,
                    dimension: 1,
                    essential: true,
                },
            })
            .collect(),
    };
    pairs.retain(|p| p.birth < p.death);
    let mut pd = PersistenceDiagram {
        dimension: 1,
        pairs,
        thresholds: time,
        direction: spec.direction(),
    };
    pd.sort();
    Ok(pd)
}
