use std::fs::File;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{Context, Result};
use graphtopo::{
    compute_filtration, compute_mpgf2, compute_mpgf_d, make_thresholds, persistence_dim0,
    persistence_dim1, FiltrationSpec, Graph, GraphDataset, GridAxis, GridSpec2, NodeValues,
    SawFunction,
};
use rayon::prelude::*;

use crate::config::{RunConfig, SummaryKind, ThresholdScope};

/// Wall time spent per phase, summed over graphs (and therefore over workers).
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PhaseTimings {
    pub filtration: Duration,
    pub persistence: Duration,
    pub summary: Duration,
}

impl PhaseTimings {
    fn add(&mut self, other: &PhaseTimings) {
        self.filtration += other.filtration;
        self.persistence += other.persistence;
        self.summary += other.summary;
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GraphStatus {
    Ok,
    /// No dimension-1 features: the B1 block of the row is all zeros.
    EmptyB1,
    /// No row was written for this graph.
    Failed(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeatureRow {
    pub graph_id: usize,
    pub label: usize,
    pub features: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct FeatureRun {
    pub rows: Vec<FeatureRow>,
    /// Status of every graph, in graph-id order.
    pub statuses: Vec<GraphStatus>,
    pub timings: PhaseTimings,
}

impl FeatureRun {
    pub fn failures(&self) -> usize {
        self.statuses
            .iter()
            .filter(|s| matches!(s, GraphStatus::Failed(_)))
            .count()
    }
}

type Filtered = std::result::Result<Vec<NodeValues>, String>;
/// Features and the empty-B1 flag, or the failure message.
type Summarised = std::result::Result<(Vec<f64>, bool), String>;

/// Computes one feature row per graph on a pool of `config.workers` threads.
/// Rows come back in graph-id order whatever the completion order.
pub fn extract_features(dataset: &GraphDataset, config: &RunConfig) -> Result<FeatureRun> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .context("cannot start worker pool")?;

    let (filtered, filtration_time): (Vec<Filtered>, Vec<Duration>) = pool.install(|| {
        dataset
            .graphs
            .par_iter()
            .map(|g| {
                let start = Instant::now();
                let values = config
                    .filtrations
                    .iter()
                    .map(|&kind| compute_filtration(g, kind))
                    .collect::<graphtopo::Result<Vec<_>>>()
                    .map_err(|e| e.to_string());
                (values, start.elapsed())
            })
            .unzip()
    });

    let global = match config.scope {
        ThresholdScope::PerGraph => None,
        ThresholdScope::PerDataset => Some(global_ranges(&filtered, config.filtrations.len())),
    };

    let results: Vec<(Summarised, PhaseTimings)> = pool.install(|| {
        dataset
            .graphs
            .par_iter()
            .zip(&filtered)
            .map(|(g, values)| {
                let mut timings = PhaseTimings::default();
                let row = match values {
                    Ok(values) => summarise(g, values, global.as_deref(), config, &mut timings)
                        .map_err(|e| e.to_string()),
                    Err(e) => Err(e.clone()),
                };
                (row, timings)
            })
            .collect()
    });

    let mut run = FeatureRun {
        rows: Vec::with_capacity(dataset.len()),
        statuses: Vec::with_capacity(dataset.len()),
        timings: PhaseTimings::default(),
    };
    for (graph_id, ((result, timings), elapsed)) in
        results.into_iter().zip(filtration_time).enumerate()
    {
        run.timings.add(&timings);
        run.timings.filtration += elapsed;
        match result {
            Ok((features, empty_b1)) => {
                run.rows.push(FeatureRow {
                    graph_id,
                    label: dataset.labels[graph_id],
                    features,
                });
                run.statuses.push(if empty_b1 {
                    GraphStatus::EmptyB1
                } else {
                    GraphStatus::Ok
                });
            }
            Err(message) => run.statuses.push(GraphStatus::Failed(message)),
        }
    }
    Ok(run)
}

/// `(min, max)` of each function over every graph whose filtration succeeded.
fn global_ranges(filtered: &[Filtered], count: usize) -> Vec<(f64, f64)> {
    let mut ranges = vec![(f64::INFINITY, f64::NEG_INFINITY); count];
    for values in filtered.iter().flatten() {
        for (range, v) in ranges.iter_mut().zip(values) {
            if let Some((lo, hi)) = v.range() {
                *range = (range.0.min(lo), range.1.max(hi));
            }
        }
    }
    ranges
}

fn summarise(
    g: &Graph,
    values: &[NodeValues],
    global: Option<&[(f64, f64)]>,
    config: &RunConfig,
    timings: &mut PhaseTimings,
) -> graphtopo::Result<(Vec<f64>, bool)> {
    match config.summary {
        SummaryKind::Saw => {
            let f = &values[0];
            let spec = match global {
                None => FiltrationSpec::evenly_spaced(
                    f.clone(),
                    config.thresholds,
                    config.direction,
                    config.mode,
                )?,
                Some(ranges) => {
                    let (lo, hi) = ranges[0];
                    let thresholds = make_thresholds(&[lo, hi], config.thresholds)?;
                    FiltrationSpec::new(f.clone(), thresholds, config.direction, config.mode)?
                }
            };
            let start = Instant::now();
            let pd0 = persistence_dim0(g, &spec)?;
            let pd1 = persistence_dim1(g, &spec)?;
            timings.persistence += start.elapsed();

            let start = Instant::now();
            let mut features = Vec::with_capacity(2 * config.length);
            for pd in [&pd0, &pd1] {
                let signature = SawFunction::with_default_lag(pd)?.signature(config.length)?;
                features.extend(signature.samples);
            }
            timings.summary += start.elapsed();
            Ok((features, pd1.is_empty()))
        }
        SummaryKind::Mpgf => {
            let start = Instant::now();
            let axes = values
                .iter()
                .zip(&config.grid.0)
                .enumerate()
                .map(|(k, (v, &m))| match global {
                    None => GridAxis::from_values(v, m, config.direction),
                    Some(ranges) => {
                        let span = NodeValues::new(vec![ranges[k].0, ranges[k].1])?;
                        GridAxis::from_values(&span, m, config.direction)
                    }
                })
                .collect::<graphtopo::Result<Vec<_>>>()?;
            let features = if axes.len() == 2 {
                let spec = GridSpec2::new(axes[0].clone(), axes[1].clone(), config.direction);
                compute_mpgf2(g, &values[0], &values[1], &spec, config.mode)?.flatten()
            } else {
                compute_mpgf_d(g, values, &axes, config.direction, config.mode)?.flatten()
            };
            timings.summary += start.elapsed();
            let half = features.len() / 2;
            let empty_b1 = features[half..].iter().all(|&x| x == 0.0);
            Ok((features, empty_b1))
        }
    }
}

/// Sidecar path next to the feature CSV.
pub fn report_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_os_string();
    name.push(".report.csv");
    PathBuf::from(name)
}

/// Writes `graph_id,label,f_0..` rows to `out` and the per-graph status of
/// every graph that lacks B1 features or failed to `<out>.report.csv`.
pub fn write_features(run: &FeatureRun, dataset: &GraphDataset, config: &RunConfig) -> Result<()> {
    let file = File::create(&config.out)
        .with_context(|| format!("cannot create {}", config.out.display()))?;
    let mut writer = csv::Writer::from_writer(file);
    let mut header = vec!["graph_id".to_string(), "label".to_string()];
    header.extend((0..config.feature_len()).map(|i| format!("f_{i}")));
    writer.write_record(&header)?;
    for row in &run.rows {
        let mut record = vec![row.graph_id.to_string(), row.label.to_string()];
        record.extend(row.features.iter().map(f64::to_string));
        writer.write_record(&record)?;
    }
    writer.flush()?;

    let report = report_path(&config.out);
    let mut writer = csv::Writer::from_writer(
        File::create(&report).with_context(|| format!("cannot create {}", report.display()))?,
    );
    writer.write_record(["graph_id", "label", "status", "message"])?;
    for (graph_id, status) in run.statuses.iter().enumerate() {
        let (status, message) = match status {
            GraphStatus::Ok => continue,
            GraphStatus::EmptyB1 => ("empty_b1", ""),
            GraphStatus::Failed(message) => ("failed", message.as_str()),
        };
        let label = dataset.labels[graph_id].to_string();
        writer.write_record([graph_id.to_string().as_str(), &label, status, message])?;
    }
    writer.flush()?;
    Ok(())
}
