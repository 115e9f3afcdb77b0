use std::fmt::Write as _;

use anyhow::{bail, Result};
use graphtopo::{
    betti_curves, compute_filtration, persistence_dim0, persistence_dim1, BirthDeathCounts,
    ComplexMode, Direction, FiltrationKind, FiltrationSpec, GraphDataset,
};

/// Graph count, class count, mean node count and mean edge count, tab separated.
pub fn dataset_info(dataset: &GraphDataset) -> String {
    let stats = dataset.stats();
    format!(
        "dataset\tgraphs\tclasses\tavg_nodes\tavg_edges\n{}\t{}\t{}\t{:.2}\t{:.2}\n",
        stats.name, stats.num_graphs, stats.num_classes, stats.mean_nodes, stats.mean_edges
    )
}

/// Diagrams of one graph as `dim birth death essential` lines, followed by
/// the Betti curves and tensions per threshold.
pub fn diagram_report(
    dataset: &GraphDataset,
    graph_id: usize,
    kind: FiltrationKind,
    thresholds: usize,
    direction: Direction,
    mode: ComplexMode,
) -> Result<String> {
    let Some(g) = dataset.graphs.get(graph_id) else {
        bail!(
            "graph id {graph_id} out of range: {} has {} graphs (ids start at 0)",
            dataset.name,
            dataset.len()
        );
    };
    let values = compute_filtration(g, kind)?;
    let spec = FiltrationSpec::evenly_spaced(values, thresholds, direction, mode)?;
    let pd0 = persistence_dim0(g, &spec)?;
    let pd1 = persistence_dim1(g, &spec)?;
    let (c0, c1) = betti_curves(g, &spec)?;
    let (t0, t1) = (
        BirthDeathCounts::from_diagram(&pd0)?.tensions(),
        BirthDeathCounts::from_diagram(&pd1)?.tensions(),
    );

    let mut out = String::new();
    writeln!(
        out,
        "# graph {graph_id} filtration {kind} {direction} {mode}"
    )
    .unwrap();
    writeln!(out, "# dim birth death essential").unwrap();
    out.push_str(&pd0.to_text());
    out.push_str(&pd1.to_text());
    writeln!(out, "# threshold b0 b1 tension0 tension1").unwrap();
    let m = spec.len();
    for i in 0..m {
        // tensions are indexed along the diagram's time axis
        let step = match direction {
            Direction::Sublevel => i,
            Direction::Superlevel => m - 1 - i,
        };
        writeln!(
            out,
            "{} {} {} {} {}",
            spec.thresholds()[i],
            c0.values[i],
            c1.values[i],
            t0[step],
            t1[step]
        )
        .unwrap();
    }
    Ok(out)
}
