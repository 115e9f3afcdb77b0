use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use graphtopo::{ComplexMode, Direction, FiltrationKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SummaryKind {
    Saw,
    Mpgf,
}

impl FromStr for SummaryKind {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "saw" => Ok(Self::Saw),
            "mpgf" => Ok(Self::Mpgf),
            _ => bail!("unknown summary {s:?}, expected saw or mpgf"),
        }
    }
}

/// Where filtration thresholds come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdScope {
    /// Range of each function on each graph.
    PerGraph,
    /// Range of each function over the whole dataset.
    PerDataset,
}

impl FromStr for ThresholdScope {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "per-graph" => Ok(Self::PerGraph),
            "per-dataset" => Ok(Self::PerDataset),
            _ => bail!("unknown threshold scope {s:?}, expected per-graph or per-dataset"),
        }
    }
}

/// Grid sizes per parameter, written `10x10` or `4x5x6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridShape(pub Vec<usize>);

impl FromStr for GridShape {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let sizes = s
            .split('x')
            .map(|part| {
                let m: usize = part
                    .trim()
                    .parse()
                    .with_context(|| format!("bad grid size {part:?} in {s:?}"))?;
                if m < 2 {
                    bail!("grid sizes must be at least 2, got {m} in {s:?}");
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self(sizes))
    }
}

impl fmt::Display for GridShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join("x"))
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub dataset_dir: PathBuf,
    pub name: String,
    pub summary: SummaryKind,
    pub filtrations: Vec<FiltrationKind>,
    /// Saw signature length.
    pub length: usize,
    /// Threshold count of the single-parameter filtration behind a saw function.
    pub thresholds: usize,
    pub grid: GridShape,
    pub mode: ComplexMode,
    pub direction: Direction,
    pub scope: ThresholdScope,
    pub out: PathBuf,
    pub workers: usize,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        match self.summary {
            SummaryKind::Saw => {
                if self.filtrations.len() != 1 {
                    bail!(
                        "saw summaries take exactly one --filtration, got {}",
                        self.filtrations.len()
                    );
                }
                if self.length < 2 {
                    bail!("--length must be at least 2, got {}", self.length);
                }
                if self.thresholds < 2 {
                    bail!("--thresholds must be at least 2, got {}", self.thresholds);
                }
            }
            SummaryKind::Mpgf => {
                if self.filtrations.len() < 2 {
                    bail!(
                        "mpgf summaries take at least two --filtration values, got {}",
                        self.filtrations.len()
                    );
                }
                if self.grid.0.len() != self.filtrations.len() {
                    bail!(
                        "--grid {} has {} sizes for {} filtrations",
                        self.grid,
                        self.grid.0.len(),
                        self.filtrations.len()
                    );
                }
            }
        }
        if self.workers == 0 {
            bail!("--workers must be at least 1");
        }
        Ok(())
    }

    /// Number of feature columns per row.
    pub fn feature_len(&self) -> usize {
        match self.summary {
            SummaryKind::Saw => 2 * self.length,
            SummaryKind::Mpgf => 2 * self.grid.0.iter().product::<usize>(),
        }
    }
}

/// The directory holding `<name>_A.txt`: `dir` itself, or `dir/<name>` as
/// unpacked from the TUDataset archives.
pub fn resolve_dataset_dir(dir: &Path, name: &str) -> PathBuf {
    let marker = format!("{name}_A.txt");
    let nested = dir.join(name);
    if !dir.join(&marker).exists() && nested.join(&marker).exists() {
        nested
    } else {
        dir.to_path_buf()
    }
}
