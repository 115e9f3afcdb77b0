//! Reader and writer for the three-file TUDataset text format.
//!
//! * `<name>_A.txt`: one `i, j` line per directed edge, 1-indexed global node ids
//! * `<name>_graph_indicator.txt`: line `i` holds the graph id of global node `i`
//! * `<name>_graph_labels.txt`: line `g` holds the class label of graph `g`
//!
//! Node and edge attribute files that some datasets ship are ignored.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq)]
pub struct GraphDataset {
    pub name: String,
    pub graphs: Vec<Graph>,
    /// Class per graph, relabelled to `0..num_classes`.
    pub labels: Vec<usize>,
    /// Original label for each internal class index (sorted ascending).
    pub label_values: Vec<i64>,
    /// Self-loop lines dropped while loading.
    pub dropped_self_loops: usize,
}

impl GraphDataset {
    pub fn new(name: impl Into<String>, graphs: Vec<Graph>, source_labels: &[i64]) -> Result<Self> {
        if graphs.len() != source_labels.len() {
            return Err(Error::Consistency(format!(
                "{} graphs but {} labels",
                graphs.len(),
                source_labels.len()
            )));
        }
        let mut label_values = source_labels.to_vec();
        label_values.sort_unstable();
        label_values.dedup();
        let labels = source_labels
            .iter()
            .map(|l| label_values.binary_search(l).unwrap())
            .collect();
        Ok(Self {
            name: name.into(),
            graphs,
            labels,
            label_values,
            dropped_self_loops: 0,
        })
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.label_values.len()
    }

    pub fn stats(&self) -> DatasetStats {
        let n = self.graphs.len().max(1) as f64;
        DatasetStats {
            name: self.name.clone(),
            num_graphs: self.graphs.len(),
            num_classes: self.num_classes(),
            mean_nodes: self.graphs.iter().map(|g| g.num_nodes()).sum::<usize>() as f64 / n,
            mean_edges: self.graphs.iter().map(|g| g.num_edges()).sum::<usize>() as f64 / n,
        }
    }
}

/// Dataset summary in the column order of the usual benchmark tables.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DatasetStats {
    pub name: String,
    pub num_graphs: usize,
    pub num_classes: usize,
    pub mean_nodes: f64,
    pub mean_edges: f64,
}

fn file_path(dir: &Path, name: &str, suffix: &str) -> PathBuf {
    dir.join(format!("{name}_{suffix}.txt"))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Ingestion {
        path: path.to_path_buf(),
        source,
    })
}

fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

/// Non-blank lines with their 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_int<T: std::str::FromStr>(token: &str, file: &str, line: usize) -> Result<T> {
    token.trim().parse().map_err(|_| Error::Parse {
        file: file.to_string(),
        line,
        message: format!("expected an integer, found {:?}", token.trim()),
    })
}

pub fn load_tudataset(directory: impl AsRef<Path>, name: &str) -> Result<GraphDataset> {
    let dir = directory.as_ref();
    let a_path = file_path(dir, name, "A");
    let ind_path = file_path(dir, name, "graph_indicator");
    let lab_path = file_path(dir, name, "graph_labels");
    let (a_text, ind_text, lab_text) = (read(&a_path)?, read(&ind_path)?, read(&lab_path)?);
    let (a_name, ind_name, lab_name) = (
        file_name(&a_path),
        file_name(&ind_path),
        file_name(&lab_path),
    );

    let source_labels = lines(&lab_text)
        .map(|(n, l)| parse_int::<i64>(l, &lab_name, n))
        .collect::<Result<Vec<_>>>()?;
    let num_graphs = source_labels.len();

    // graph index and local index of every global node
    let mut graph_of = Vec::new();
    let mut local_of = Vec::new();
    let mut sizes = vec![0usize; num_graphs];
    for (n, l) in lines(&ind_text) {
        let gid: usize = parse_int(l, &ind_name, n)?;
        if gid == 0 || gid > num_graphs {
            return Err(Error::Consistency(format!(
                "{ind_name}:{n}: graph id {gid} outside 1..={num_graphs} ({lab_name} has {num_graphs} lines)"
            )));
        }
        graph_of.push(gid - 1);
        local_of.push(sizes[gid - 1]);
        sizes[gid - 1] += 1;
    }
    let num_nodes = graph_of.len();

    let mut edges = vec![Vec::new(); num_graphs];
    let mut dropped_self_loops = 0;
    for (n, l) in lines(&a_text) {
        let mut parts = l.split(',');
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Parse {
                file: a_name.clone(),
                line: n,
                message: format!("expected `i, j`, found {l:?}"),
            });
        };
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip([a, b]) {
            let id: usize = parse_int(tok, &a_name, n)?;
            if id == 0 || id > num_nodes {
                return Err(Error::Parse {
                    file: a_name.clone(),
                    line: n,
                    message: format!("node id {id} outside 1..={num_nodes}"),
                });
            }
            *slot = id - 1;
        }
        let [u, v] = ends;
        if graph_of[u] != graph_of[v] {
            return Err(Error::Consistency(format!(
                "{a_name}:{n}: edge ({}, {}) joins graphs {} and {}",
                u + 1,
                v + 1,
                graph_of[u] + 1,
                graph_of[v] + 1
            )));
        }
        if u == v {
            dropped_self_loops += 1;
            continue;
        }
        edges[graph_of[u]].push((local_of[u], local_of[v]));
    }

    let graphs = sizes
        .iter()
        .zip(edges)
        .map(|(&size, e)| Graph::new(size, e))
        .collect::<Result<Vec<_>>>()?;
    let mut dataset = GraphDataset::new(name, graphs, &source_labels)?;
    dataset.dropped_self_loops = dropped_self_loops;
    Ok(dataset)
}

/// Writes `dataset` in the same format, one line per edge direction.
pub fn write_tudataset(
    dataset: &GraphDataset,
    directory: impl AsRef<Path>,
    name: &str,
) -> Result<()> {
    let dir = directory.as_ref();
    fs::create_dir_all(dir)?;
    let (mut a, mut ind, mut lab) = (String::new(), String::new(), String::new());
    let mut offset = 0;
    for (gi, (g, &label)) in dataset.graphs.iter().zip(&dataset.labels).enumerate() {
        for _ in 0..g.num_nodes() {
            writeln!(ind, "{}", gi + 1).unwrap();
        }
        for &(u, v) in g.edges() {
            let (u, v) = (u + offset + 1, v + offset + 1);
            writeln!(a, "{u}, {v}").unwrap();
            writeln!(a, "{v}, {u}").unwrap();
        }
        writeln!(lab, "{}", dataset.label_values[label]).unwrap();
        offset += g.num_nodes();
    }
    fs::write(file_path(dir, name, "A"), a)?;
    fs::write(file_path(dir, name, "graph_indicator"), ind)?;
    fs::write(file_path(dir, name, "graph_labels"), lab)?;
    Ok(())
}
