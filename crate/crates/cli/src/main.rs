use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use graphtopo::{load_tudataset, ComplexMode, Direction, FiltrationKind, GraphDataset};
use graphtopo_cli::{
    dataset_info, diagram_report, extract_features, resolve_dataset_dir, write_features, GridShape,
    RunConfig, SummaryKind, ThresholdScope,
};

#[derive(Parser, Debug)]
#[command(
    name = "graphtopo",
    version,
    about = "Topological features of graph datasets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct DatasetArgs {
    /// Directory holding <NAME>_A.txt, <NAME>_graph_indicator.txt and
    /// <NAME>_graph_labels.txt (or a <NAME>/ subdirectory with them)
    #[arg(long)]
    dataset_dir: PathBuf,

    /// Dataset name, the file prefix
    #[arg(long)]
    name: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print graph count, class count, mean nodes and mean edges
    Info {
        #[command(flatten)]
        dataset: DatasetArgs,
    },
    /// Print the persistence diagrams, Betti curves and tensions of one graph
    Diagram {
        #[command(flatten)]
        dataset: DatasetArgs,

        /// Graph index, starting at 0
        #[arg(long)]
        graph_id: usize,

        #[arg(long, default_value = "degree")]
        filtration: FiltrationKind,

        /// Number of evenly spaced thresholds
        #[arg(long, default_value_t = 10)]
        thresholds: usize,

        #[arg(long, default_value = "sublevel")]
        direction: Direction,

        /// graph or clique2
        #[arg(long, default_value = "graph")]
        mode: ComplexMode,
    },
    /// Write one feature row per graph to a CSV file
    Features {
        #[command(flatten)]
        dataset: DatasetArgs,

        /// saw or mpgf
        #[arg(long)]
        summary: SummaryKind,

        /// Node function; once for saw, two or more times for mpgf
        #[arg(long, required = true)]
        filtration: Vec<FiltrationKind>,

        /// Saw signature length
        #[arg(long, default_value_t = 100)]
        length: usize,

        /// Thresholds of the filtration behind each saw function
        #[arg(long, default_value_t = 10)]
        thresholds: usize,

        /// MPGF grid sizes, one per filtration
        #[arg(long, default_value = "10x10")]
        grid: GridShape,

        /// graph or clique2
        #[arg(long, default_value = "graph")]
        mode: ComplexMode,

        #[arg(long, default_value = "sublevel")]
        direction: Direction,

        /// per-graph or per-dataset threshold ranges
        #[arg(long, default_value = "per-graph")]
        scope: ThresholdScope,

        /// Feature CSV; a <out>.report.csv sidecar lists flagged graphs
        #[arg(long)]
        out: PathBuf,

        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

fn load(args: &DatasetArgs) -> Result<GraphDataset> {
    let dir = resolve_dataset_dir(&args.dataset_dir, &args.name);
    let dataset = load_tudataset(&dir, &args.name)
        .with_context(|| format!("cannot load dataset {} from {}", args.name, dir.display()))?;
    if dataset.dropped_self_loops > 0 {
        eprintln!(">> dropped {} self-loop lines", dataset.dropped_self_loops);
    }
    Ok(dataset)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Info { dataset } => {
            print!("{}", dataset_info(&load(&dataset)?));
        }
        Command::Diagram {
            dataset,
            graph_id,
            filtration,
            thresholds,
            direction,
            mode,
        } => {
            let ds = load(&dataset)?;
            print!(
                "{}",
                diagram_report(&ds, graph_id, filtration, thresholds, direction, mode)?
            );
        }
        Command::Features {
            dataset,
            summary,
            filtration,
            length,
            thresholds,
            grid,
            mode,
            direction,
            scope,
            out,
            workers,
        } => {
            let config = RunConfig {
                dataset_dir: dataset.dataset_dir.clone(),
                name: dataset.name.clone(),
                summary,
                filtrations: filtration,
                length,
                thresholds,
                grid,
                mode,
                direction,
                scope,
                out,
                workers,
            };
            config.validate()?;
            let start = Instant::now();
            let ds = load(&dataset)?;
            eprintln!(
                ">> load        : {:?} ({} graphs)",
                start.elapsed(),
                ds.len()
            );

            let run = extract_features(&ds, &config)?;
            write_features(&run, &ds, &config)?;
            eprintln!(">> filtration  : {:?}", run.timings.filtration);
            eprintln!(">> persistence : {:?}", run.timings.persistence);
            eprintln!(">> summary     : {:?}", run.timings.summary);
            eprintln!(">> total       : {:?}", start.elapsed());
            eprintln!(
                ">> wrote {} rows to {}",
                run.rows.len(),
                config.out.display()
            );

            let failures = run.failures();
            if failures > 0 {
                for (id, status) in run.statuses.iter().enumerate() {
                    if let graphtopo_cli::GraphStatus::Failed(message) = status {
                        eprintln!(">> graph {id} skipped: {message}");
                    }
                }
                eprintln!(">> {failures} of {} graphs failed", ds.len());
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
