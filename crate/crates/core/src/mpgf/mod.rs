//! Multi-persistence grid functions: Betti numbers of the subgraphs cut out by
//! threshold constraints on two or more node functions, read as a piecewise
//! constant function on a rectangle.
//!
//! Cell `(i, j)` of a sublevel grid holds `B_k` of the subgraph induced on
//! `{v | f(v) <= α_i and g(v) <= β_j}`; a superlevel grid uses `>=`. Each row
//! is one single-parameter sweep of `g` over the fixed slice `f <= α_i`.

mod distance;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeValues};
use crate::persistence::{
    check_thresholds, entry_index, level_sweep, make_thresholds, mean_spacing,
};
use crate::persistence::{ComplexMode, Direction};

pub use distance::grid_l1_distance;

/// How threshold indices map to rectangles of the plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellConvention {
    /// Sublevel cells `(α_{i−1}, α_i]` padded below, superlevel cells
    /// `[α_i, α_{i+1})` padded above.
    Standard,
    /// The shifted cells: sublevel `[α_i, α_{i+1})` padded above, superlevel
    /// `(α_{i−1}, α_i]` padded below.
    Alternative,
}

/// Thresholds of one parameter axis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridAxis {
    pub thresholds: Vec<f64>,
}

impl GridAxis {
    pub fn new(thresholds: Vec<f64>) -> Result<Self> {
        check_thresholds(&thresholds)?;
        Ok(Self { thresholds })
    }

    /// `m` evenly spaced thresholds over the range of `values`. A constant
    /// function gets `m` thresholds on a unit interval placed so that every
    /// node is present from the first index on.
    pub fn from_values(values: &NodeValues, m: usize, direction: Direction) -> Result<Self> {
        let (lo, hi) = values
            .range()
            .ok_or_else(|| Error::InvalidInput("no values to place thresholds on".into()))?;
        if lo < hi {
            return Self::new(make_thresholds(values.as_slice(), m)?);
        }
        let (from, to) = match direction {
            Direction::Sublevel => (lo, lo + 1.0),
            Direction::Superlevel => (lo - 1.0, lo),
        };
        Self::new(make_thresholds(&[from, to], m)?)
    }

    pub fn len(&self) -> usize {
        self.thresholds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thresholds.is_empty()
    }

    /// Padding `δ = (α_m − α_1) / (m − 1)`.
    pub fn padding(&self) -> f64 {
        mean_spacing(&self.thresholds)
    }

    /// The `m + 1` cell edges; cell `i` is the interval between edges `i` and `i + 1`.
    pub fn edges(&self, direction: Direction, convention: CellConvention) -> Vec<f64> {
        let pad_below = matches!(
            (direction, convention),
            (Direction::Sublevel, CellConvention::Standard)
                | (Direction::Superlevel, CellConvention::Alternative)
        );
        let t = &self.thresholds;
        let mut edges = Vec::with_capacity(t.len() + 1);
        if pad_below {
            edges.push(t[0] - self.padding());
            edges.extend_from_slice(t);
        } else {
            edges.extend_from_slice(t);
            edges.push(t[t.len() - 1] + self.padding());
        }
        edges
    }

    fn contains(&self, x: f64, i: usize, direction: Direction) -> bool {
        match direction {
            Direction::Sublevel => x <= self.thresholds[i],
            Direction::Superlevel => x >= self.thresholds[i],
        }
    }

    /// Step at which each node enters a sweep along this axis, restricted to
    /// the nodes in `mask`. Superlevel sweeps run over reversed indices.
    fn entry_steps(
        &self,
        values: &[f64],
        mask: &[bool],
        direction: Direction,
    ) -> Vec<Option<usize>> {
        let m = self.len();
        values
            .iter()
            .zip(mask)
            .map(|(&x, &keep)| {
                if !keep {
                    return None;
                }
                match direction {
                    Direction::Sublevel => entry_index(&self.thresholds, x),
                    // present at index i iff β_i <= x; the last such index enters first
                    Direction::Superlevel => {
                        let count = self.thresholds.partition_point(|&t| t <= x);
                        (count > 0).then(|| m - count)
                    }
                }
            })
            .collect()
    }

    fn index_of_step(&self, step: usize, direction: Direction) -> usize {
        match direction {
            Direction::Sublevel => step,
            Direction::Superlevel => self.len() - 1 - step,
        }
    }
}

/// `(B0, B1)` along one axis for the subgraph on `mask`, in threshold order.
fn sweep_axis(
    g: &Graph,
    values: &[f64],
    mask: &[bool],
    axis: &GridAxis,
    direction: Direction,
    mode: ComplexMode,
) -> Vec<(usize, usize)> {
    let entry = axis.entry_steps(values, mask, direction);
    let mut out = vec![(0, 0); axis.len()];
    for (step, counts) in level_sweep(g, &entry, axis.len(), mode)
        .into_iter()
        .enumerate()
    {
        out[axis.index_of_step(step, direction)] = counts;
    }
    out
}

fn check_values(g: &Graph, values: &[&NodeValues]) -> Result<()> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    values.iter().try_for_each(|v| v.check_for(g))
}

/// Axes and orientation of a two-parameter grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec2 {
    pub f: GridAxis,
    pub g: GridAxis,
    pub direction: Direction,
    pub convention: CellConvention,
}

impl GridSpec2 {
    pub fn new(f: GridAxis, g: GridAxis, direction: Direction) -> Self {
        Self {
            f,
            g,
            direction,
            convention: CellConvention::Standard,
        }
    }

    /// Per-graph thresholds: `m1` and `m2` evenly spaced over each function's range.
    pub fn from_values(
        f: &NodeValues,
        g: &NodeValues,
        m1: usize,
        m2: usize,
        direction: Direction,
    ) -> Result<Self> {
        Ok(Self::new(
            GridAxis::from_values(f, m1, direction)?,
            GridAxis::from_values(g, m2, direction)?,
            direction,
        ))
    }

    pub fn with_convention(mut self, convention: CellConvention) -> Self {
        self.convention = convention;
        self
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.f.len(), self.g.len())
    }

    /// Cell edges along the first and second axis.
    pub fn edges(&self) -> (Vec<f64>, Vec<f64>) {
        (
            self.f.edges(self.direction, self.convention),
            self.g.edges(self.direction, self.convention),
        )
    }

    /// The rectangle covered by the grid.
    pub fn domain(&self) -> ((f64, f64), (f64, f64)) {
        let (x, y) = self.edges();
        ((x[0], x[x.len() - 1]), (y[0], y[y.len() - 1]))
    }

    pub fn transpose(&self) -> Self {
        Self {
            f: self.g.clone(),
            g: self.f.clone(),
            direction: self.direction,
            convention: self.convention,
        }
    }
}

/// Betti-number grids of dimensions 0 and 1, indexed `[i][j]` by threshold index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MpgfGrid {
    pub spec: GridSpec2,
    pub b0: Vec<Vec<usize>>,
    pub b1: Vec<Vec<usize>>,
}

/// Grid of `(f, gfun)` on `g` over the axes of `spec`.
pub fn compute_mpgf2(
    g: &Graph,
    f: &NodeValues,
    gfun: &NodeValues,
    spec: &GridSpec2,
    mode: ComplexMode,
) -> Result<MpgfGrid> {
    check_values(g, &[f, gfun])?;
    let m1 = spec.f.len();
    let mut b0 = Vec::with_capacity(m1);
    let mut b1 = Vec::with_capacity(m1);
    for i in 0..m1 {
        let slice: Vec<bool> = f
            .as_slice()
            .iter()
            .map(|&x| spec.f.contains(x, i, spec.direction))
            .collect();
        let row = sweep_axis(g, gfun.as_slice(), &slice, &spec.g, spec.direction, mode);
        b0.push(row.iter().map(|c| c.0).collect());
        b1.push(row.iter().map(|c| c.1).collect());
    }
    Ok(MpgfGrid {
        spec: spec.clone(),
        b0,
        b1,
    })
}

impl MpgfGrid {
    pub fn shape(&self) -> (usize, usize) {
        self.spec.shape()
    }

    pub fn layer(&self, dimension: u8) -> Result<&[Vec<usize>]> {
        match dimension {
            0 => Ok(&self.b0),
            1 => Ok(&self.b1),
            _ => Err(Error::InvalidInput(format!(
                "no grid for dimension {dimension}"
            ))),
        }
    }

    /// The B0 grid row-major, then the B1 grid row-major.
    pub fn flatten(&self) -> Vec<f64> {
        self.b0
            .iter()
            .chain(&self.b1)
            .flatten()
            .map(|&v| v as f64)
            .collect()
    }

    /// Column names matching [`flatten`](Self::flatten): `b{k}_{i}_{j}`.
    pub fn feature_names(&self) -> Vec<String> {
        let (m1, m2) = self.shape();
        (0..2)
            .flat_map(|k| (0..m1).flat_map(move |i| (0..m2).map(move |j| format!("b{k}_{i}_{j}"))))
            .collect()
    }

    /// Header line and value line of the flattened grid.
    pub fn to_csv(&self) -> String {
        let values: Vec<String> = self.flatten().iter().map(|v| v.to_string()).collect();
        format!("{}\n{}\n", self.feature_names().join(","), values.join(","))
    }

    /// Both grids with their threshold vectors and cell geometry.
    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self)
            .map_err(|e| Error::InvalidInput(format!("cannot serialise grid: {e}")))
    }

    pub fn transpose(&self) -> Self {
        let (m1, m2) = self.shape();
        let flip = |grid: &[Vec<usize>]| -> Vec<Vec<usize>> {
            (0..m2)
                .map(|j| (0..m1).map(|i| grid[i][j]).collect())
                .collect()
        };
        Self {
            spec: self.spec.transpose(),
            b0: flip(&self.b0),
            b1: flip(&self.b1),
        }
    }

    /// Value of the `dimension` layer at a point of the plane; zero outside the domain.
    pub fn evaluate(&self, dimension: u8, x: f64, y: f64) -> Result<f64> {
        let layer = self.layer(dimension)?;
        let (xs, ys) = self.spec.edges();
        Ok(match (cell_of(&xs, x), cell_of(&ys, y)) {
            (Some(i), Some(j)) => layer[i][j] as f64,
            _ => 0.0,
        })
    }
}

/// Index of the cell containing `x`, cells being `[edges[i], edges[i + 1])`.
pub(crate) fn cell_of(edges: &[f64], x: f64) -> Option<usize> {
    if x < edges[0] || x >= edges[edges.len() - 1] {
        return None;
    }
    Some(edges.partition_point(|&e| e <= x) - 1)
}

/// Betti-number arrays over `d` parameters, stored row-major (last axis fastest).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MpgfGridD {
    pub axes: Vec<GridAxis>,
    pub direction: Direction,
    pub b0: Vec<usize>,
    pub b1: Vec<usize>,
}

impl MpgfGridD {
    pub fn shape(&self) -> Vec<usize> {
        self.axes.iter().map(GridAxis::len).collect()
    }

    fn offset(&self, index: &[usize]) -> Result<usize> {
        let shape = self.shape();
        if index.len() != shape.len() || index.iter().zip(&shape).any(|(i, m)| i >= m) {
            return Err(Error::InvalidInput(format!(
                "index {index:?} outside grid of shape {shape:?}"
            )));
        }
        Ok(index.iter().zip(&shape).fold(0, |acc, (i, m)| acc * m + i))
    }

    /// `(B0, B1)` at a multi-index.
    pub fn get(&self, index: &[usize]) -> Result<(usize, usize)> {
        let at = self.offset(index)?;
        Ok((self.b0[at], self.b1[at]))
    }

    pub fn flatten(&self) -> Vec<f64> {
        self.b0.iter().chain(&self.b1).map(|&v| v as f64).collect()
    }
}

/// Grid over any number of node functions. All axes but the last are fixed in
/// turn; the last is swept as a single-parameter filtration of the remaining slice.
pub fn compute_mpgf_d(
    g: &Graph,
    functions: &[NodeValues],
    axes: &[GridAxis],
    direction: Direction,
    mode: ComplexMode,
) -> Result<MpgfGridD> {
    if functions.is_empty() {
        return Err(Error::InvalidInput(
            "need at least one node function".into(),
        ));
    }
    if functions.len() != axes.len() {
        return Err(Error::InvalidInput(format!(
            "{} functions but {} axes",
            functions.len(),
            axes.len()
        )));
    }
    check_values(g, &functions.iter().collect::<Vec<_>>())?;

    struct Sweep<'a> {
        g: &'a Graph,
        functions: &'a [NodeValues],
        axes: &'a [GridAxis],
        direction: Direction,
        mode: ComplexMode,
        b0: Vec<usize>,
        b1: Vec<usize>,
    }

    impl Sweep<'_> {
        fn run(&mut self, axis: usize, mask: &[bool]) {
            let values = self.functions[axis].as_slice();
            if axis + 1 == self.axes.len() {
                let row = sweep_axis(
                    self.g,
                    values,
                    mask,
                    &self.axes[axis],
                    self.direction,
                    self.mode,
                );
                self.b0.extend(row.iter().map(|c| c.0));
                self.b1.extend(row.iter().map(|c| c.1));
                return;
            }
            for i in 0..self.axes[axis].len() {
                let narrowed: Vec<bool> = mask
                    .iter()
                    .zip(values)
                    .map(|(&keep, &x)| keep && self.axes[axis].contains(x, i, self.direction))
                    .collect();
                self.run(axis + 1, &narrowed);
            }
        }
    }

    let mut sweep = Sweep {
        g,
        functions,
        axes,
        direction,
        mode,
        b0: Vec::new(),
        b1: Vec::new(),
    };
    sweep.run(0, &vec![true; g.num_nodes()]);
    Ok(MpgfGridD {
        axes: axes.to_vec(),
        direction,
        b0: sweep.b0,
        b1: sweep.b1,
    })
}
