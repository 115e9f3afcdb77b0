//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use graphtopo::persistence::{betti_numbers, oracle_counts, sublevel_subgraph};
use graphtopo::saw::{integral, sup_distance, wasserstein, WassersteinOrder};
use graphtopo::{
    betti_curves, compute_filtration, compute_mpgf2, l1_distance, load_tudataset, persistence_dim0,
    persistence_dim1, BirthDeathCounts, ComplexMode, Direction, FiltrationKind, FiltrationSpec,
    Graph, GridSpec2, NodeValues, PersistenceDiagram, SawFunction,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

const DIRECTIONS: [Direction; 2] = [Direction::Sublevel, Direction::Superlevel];
const MODES: [ComplexMode; 2] = [ComplexMode::Graph, ComplexMode::Clique2];

struct Case {
    graph: Graph,
    values: Vec<NodeValues>,
}

/// 200 graphs with n ≤ 12 and edge probability cycling through 0.1, 0.3, 0.6,
/// with every filtration kind evaluated on each.
fn corpus() -> Result<Vec<Case>, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let probabilities = [0.1, 0.3, 0.6];
    (0..200)
        .map(|k| {
            let n = rng.gen_range(1..=12);
            let p = probabilities[k % 3];
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let graph = Graph::new(n, edges).map_err(|e| e.to_string())?;
            let values = FiltrationKind::ALL
                .iter()
                .map(|&kind| compute_filtration(&graph, kind))
                .collect::<graphtopo::Result<Vec<_>>>()
                .map_err(|e| format!("graph {k}: {e}"))?;
            Ok(Case { graph, values })
        })
        .collect()
}

fn specs(case: &Case) -> impl Iterator<Item = (FiltrationKind, FiltrationSpec)> + '_ {
    FiltrationKind::ALL
        .iter()
        .zip(&case.values)
        .flat_map(|(&kind, v)| {
            DIRECTIONS.iter().flat_map(move |&direction| {
                MODES.iter().map(move |&mode| {
                    let spec = FiltrationSpec::evenly_spaced(v.clone(), 10, direction, mode)
                        .expect("thresholds over the value range");
                    (kind, spec)
                })
            })
        })
}

fn oracle_equivalence(corpus: &[Case]) -> Outcome {
    let start = Instant::now();
    let (mut curves, mut cells) = (0usize, 0usize);
    for (k, case) in corpus.iter().enumerate() {
        for (kind, spec) in specs(case) {
            let (b0, b1) = betti_curves(&case.graph, &spec).map_err(|e| e.to_string())?;
            let oracle = oracle_counts(&case.graph, &spec).map_err(|e| e.to_string())?;
            for (i, &(o0, o1)) in oracle.iter().enumerate() {
                if (b0.values[i], b1.values[i]) != (o0, o1) {
                    return Err(format!(
                        "graph {k} {kind} {:?} {:?} threshold {i}",
                        spec.direction(),
                        spec.mode()
                    ));
                }
                curves += 1;
            }
        }
        let kinds = FiltrationKind::ALL.len();
        for a in 0..kinds {
            let b = (a + 1) % kinds;
            let (f, h) = (&case.values[a], &case.values[b]);
            for direction in DIRECTIONS {
                for mode in MODES {
                    let spec = GridSpec2::from_values(f, h, 10, 10, direction)
                        .map_err(|e| e.to_string())?;
                    let grid =
                        compute_mpgf2(&case.graph, f, h, &spec, mode).map_err(|e| e.to_string())?;
                    let keep = |x: f64, t: f64| match direction {
                        Direction::Sublevel => x <= t,
                        Direction::Superlevel => x >= t,
                    };
                    for i in 0..10 {
                        for j in 0..10 {
                            let (sub, _) = case.graph.induced_subgraph(|v| {
                                keep(f.get(v), spec.f.thresholds[i])
                                    && keep(h.get(v), spec.g.thresholds[j])
                            });
                            if betti_numbers(&sub, mode) != (grid.b0[i][j], grid.b1[i][j]) {
                                return Err(format!("graph {k} grid ({a},{b}) {direction:?} {mode:?} cell ({i},{j})"));
                            }
                            cells += 1;
                        }
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 60.0 {
        return Err(format!("all equal but took {elapsed:?} (limit 1 min)"));
    }
    Ok(format!(
        "{curves} curve points and {cells} grid cells equal the oracle in {elapsed:.2?}"
    ))
}

fn euler_identity(corpus: &[Case]) -> Outcome {
    let mut checked = 0;
    for (k, case) in corpus.iter().enumerate() {
        for (kind, spec) in specs(case).filter(|(_, s)| s.mode() == ComplexMode::Graph) {
            let (b0, b1) = betti_curves(&case.graph, &spec).map_err(|e| e.to_string())?;
            for i in 0..spec.len() {
                let (sub, _) =
                    sublevel_subgraph(&case.graph, &spec, i).map_err(|e| e.to_string())?;
                let rhs = sub.num_edges() as i64 - sub.num_nodes() as i64 + b0.values[i] as i64;
                if b1.values[i] as i64 != rhs {
                    return Err(format!(
                        "graph {k} {kind} {:?} threshold {i}",
                        spec.direction()
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("B1 = |E| - |V| + B0 at {checked} level sets"))
}

fn diagram_curve_consistency(corpus: &[Case]) -> Outcome {
    let mut checked = 0;
    for (k, case) in corpus.iter().enumerate() {
        for (kind, spec) in specs(case) {
            let (b0, b1) = betti_curves(&case.graph, &spec).map_err(|e| e.to_string())?;
            let pd0 = persistence_dim0(&case.graph, &spec).map_err(|e| e.to_string())?;
            let pd1 = persistence_dim1(&case.graph, &spec).map_err(|e| e.to_string())?;
            let time = spec.time_thresholds();
            let m = spec.len();
            for (step, &t) in time.iter().enumerate() {
                let i = match spec.direction() {
                    Direction::Sublevel => step,
                    Direction::Superlevel => m - 1 - step,
                };
                if (pd0.alive_at(t), pd1.alive_at(t)) != (b0.values[i], b1.values[i]) {
                    return Err(format!(
                        "graph {k} {kind} {:?} {:?} threshold {i}",
                        spec.direction(),
                        spec.mode()
                    ));
                }
                checked += 2;
            }
        }
    }
    Ok(format!("{checked} Betti values equal live-bar counts"))
}

fn random_diagram(rng: &mut ChaCha8Rng) -> Vec<(f64, f64)> {
    let n = rng.gen_range(0..=30);
    (0..n)
        .map(|_| {
            let b = rng.gen_range(0..20);
            let d = rng.gen_range(b + 1..=20);
            (b as f64, d as f64)
        })
        .collect()
}

fn integer_saw(bars: &[(f64, f64)]) -> Result<SawFunction, String> {
    let thresholds: Vec<f64> = (0..=20).map(f64::from).collect();
    let pd = PersistenceDiagram::from_pairs(0, bars, thresholds).map_err(|e| e.to_string())?;
    SawFunction::from_diagram(&pd, 0.25).map_err(|e| e.to_string())
}

fn stability() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst: f64 = 0.0;
    let mut violations = 0;
    for _ in 0..500 {
        let (a, b) = (random_diagram(&mut rng), random_diagram(&mut rng));
        let d1 = l1_distance(&integer_saw(&a)?, &integer_saw(&b)?);
        let w1 = wasserstein(&a, &b, WassersteinOrder::One).map_err(|e| e.to_string())?;
        if d1 > 2.0 * w1 + 1e-9 {
            violations += 1;
        }
        if w1 > 0.0 {
            worst = worst.max(d1 / w1);
        }
    }
    let elapsed = start.elapsed();
    if violations > 0 {
        return Err(format!("{violations} of 500 pairs violate d1 <= 2 W1"));
    }
    if elapsed.as_secs_f64() >= 120.0 {
        return Err(format!("no violations but took {elapsed:?} (limit 2 min)"));
    }
    Ok(format!(
        "500 pairs, max d1/W1 = {worst:.4} <= 2, {elapsed:.2?}"
    ))
}

fn saw_property_triple() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let thresholds: Vec<f64> = (0..10).map(f64::from).collect();
    let mut checked = 0;
    for trial in 0..200 {
        let n = rng.gen_range(0..=25);
        let bars: Vec<(f64, f64)> = (0..n)
            .map(|_| {
                let b = rng.gen_range(0..9);
                (b as f64, rng.gen_range(b + 1..=9) as f64)
            })
            .collect();
        let pd = PersistenceDiagram::from_pairs(0, &bars, thresholds.clone())
            .map_err(|e| e.to_string())?;
        let s = SawFunction::from_diagram(&pd, 0.25).map_err(|e| e.to_string())?;
        let counts = BirthDeathCounts::from_diagram(&pd).map_err(|e| e.to_string())?;
        let betti = |t: f64| pd.alive_at(t) as f64;
        for (i, &t) in thresholds.iter().enumerate() {
            for x in (0..=20).map(|q| t + 0.25 + 0.025 * q as f64) {
                if s.evaluate(x) != betti(t) {
                    return Err(format!("trial {trial}: S({x}) != B({t})"));
                }
            }
            if betti(t) - s.evaluate(t) != counts.births[i] as f64 {
                return Err(format!("trial {trial}: B(n) - S(n) != b(n) at {t}"));
            }
            let before = if i == 0 { 0.0 } else { betti(t - 1.0) };
            if before - s.evaluate(t) != counts.deaths[i] as f64 {
                return Err(format!("trial {trial}: B(n-1) - S(n) != d(n) at {t}"));
            }
            checked += 1;
        }
    }
    Ok(format!(
        "all three identities hold at {checked} thresholds of 200 diagrams"
    ))
}

fn sup_norm_instability() -> Outcome {
    let zero = SawFunction::new(&[], 0.25, (0.0, 3.0)).map_err(|e| e.to_string())?;
    let mut report = Vec::new();
    let mut bottlenecks = Vec::new();
    for n in [1usize, 5, 25] {
        let bars = vec![(1.0, 2.0); n];
        let s = SawFunction::new(&bars, 0.25, (0.0, 3.0)).map_err(|e| e.to_string())?;
        let d_inf = sup_distance(&s, &zero);
        let w_inf =
            wasserstein(&bars, &[], WassersteinOrder::Infinity).map_err(|e| e.to_string())?;
        if d_inf != n as f64 {
            return Err(format!("n = {n}: d_inf = {d_inf}"));
        }
        bottlenecks.push(w_inf);
        report.push(format!("n={n}: d_inf={d_inf} W_inf={w_inf}"));
    }
    if bottlenecks.iter().any(|&w| w != bottlenecks[0]) {
        return Err(format!("W_inf depends on n: {}", report.join(", ")));
    }
    Ok(report.join(", "))
}

fn staircase_reconstruction() -> Outcome {
    let thresholds: Vec<f64> = (1..=5).map(f64::from).collect();
    let mut bars = Vec::new();
    for (count, b, d) in [
        (20, 1.0, 2.0),
        (10, 1.0, 3.0),
        (10, 2.0, 3.0),
        (5, 2.0, 5.0),
        (5, 3.0, 5.0),
    ] {
        bars.extend(std::iter::repeat_n((b, d), count));
    }
    let mut pd =
        PersistenceDiagram::from_pairs(0, &bars, thresholds.clone()).map_err(|e| e.to_string())?;
    let cap = pd.cap();
    for (b, count) in [(3.0, 5), (4.0, 5)] {
        for _ in 0..count {
            let mut pair = graphtopo::PersistencePair::new(b, cap, 0);
            pair.essential = true;
            pd.pairs.push(pair);
        }
    }
    let betti: Vec<usize> = thresholds[..4].iter().map(|&t| pd.alive_at(t)).collect();
    let counts = BirthDeathCounts::from_diagram(&pd).map_err(|e| e.to_string())?;
    let tensions = counts.tensions()[1..].to_vec();

    // the same tensions read off the saw function's slopes
    let s = SawFunction::with_default_lag(&pd).map_err(|e| e.to_string())?;
    let zigzag: Vec<usize> = thresholds[1..]
        .iter()
        .map(|&t| {
            let (left, right) = s.slopes_at(t);
            ((right - left) * s.lag()).round() as usize
        })
        .collect();
    let mid_cells: Vec<f64> = thresholds[..4]
        .iter()
        .map(|&t| s.evaluate(t + 0.5))
        .collect();

    let detail = format!("Betti {betti:?}, tensions {tensions:?}, zigzag depths {zigzag:?}");
    if betti == [30, 25, 15, 20]
        && tensions == [35, 30, 5, 10]
        && zigzag == tensions
        && mid_cells == [30.0, 25.0, 15.0, 20.0]
    {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn data_dir() -> PathBuf {
    std::env::var_os("GRAPHTOPO_DATA_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data"))
}

fn dataset_statistics() -> Outcome {
    let root = data_dir();
    let mut lines = Vec::new();
    let mut ok = true;
    for (name, graphs, classes, nodes, edges) in [
        ("BZR", 405, 2, 35.75, 38.36),
        ("PROTEINS", 1113, 2, 39.06, 72.82),
    ] {
        let nested = root.join(name);
        let dir = if nested.join(format!("{name}_A.txt")).exists() {
            nested
        } else {
            root.clone()
        };
        let ds = match load_tudataset(&dir, name) {
            Ok(ds) => ds,
            Err(e) => {
                ok = false;
                lines.push(format!(
                    "{name}: {e} (set GRAPHTOPO_DATA_DIR to the TUDataset files)"
                ));
                continue;
            }
        };
        let s = ds.stats();
        let close = |got: f64, want: f64| (got - want).abs() <= 0.005 * want;
        let pass = s.num_graphs == graphs
            && s.num_classes == classes
            && close(s.mean_nodes, nodes)
            && close(s.mean_edges, edges);
        ok &= pass;
        lines.push(format!(
            "{name}: {} graphs, {} classes, {:.2} nodes, {:.2} edges (expected {graphs}, {classes}, {nodes}, {edges})",
            s.num_graphs, s.num_classes, s.mean_nodes, s.mean_edges
        ));
    }
    if ok {
        Ok(lines.join("; "))
    } else {
        Err(lines.join("; "))
    }
}

fn mass_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst: f64 = 0.0;
    for _ in 0..500 {
        let n = rng.gen_range(0..=30);
        let bars: Vec<(f64, f64)> = (0..n)
            .map(|_| {
                let b: f64 = rng.gen_range(0.0..20.0);
                (b, b + rng.gen_range(0.05..10.0))
            })
            .collect();
        let shortest = bars
            .iter()
            .map(|(b, d)| d - b)
            .fold(f64::INFINITY, f64::min);
        let lag = rng.gen_range(0.001..0.5f64.min(shortest / 2.0));
        let s = SawFunction::new(&bars, lag, (0.0, 31.0)).map_err(|e| e.to_string())?;
        let expected: f64 = bars.iter().map(|(b, d)| d - b).sum::<f64>() - lag * n as f64;
        worst = worst.max((integral(&s) - expected).abs());
    }
    if worst <= 1e-9 {
        Ok(format!("500 diagrams, max error {worst:.2e}"))
    } else {
        Err(format!("max error {worst:.2e} > 1e-9"))
    }
}

fn main() -> ExitCode {
    let corpus = corpus();
    let on_corpus = |check: fn(&[Case]) -> Outcome| -> Outcome {
        match &corpus {
            Ok(c) => check(c),
            Err(e) => Err(format!("corpus generation failed: {e}")),
        }
    };
    let results: Vec<(&str, Outcome)> = vec![
        ("oracle equivalence", on_corpus(oracle_equivalence)),
        ("Euler identity", on_corpus(euler_identity)),
        (
            "diagram/curve consistency",
            on_corpus(diagram_curve_consistency),
        ),
        ("L1 stability of saw functions (d1 <= 2 W1)", stability()),
        ("saw property triple", saw_property_triple()),
        ("sup-norm instability witness", sup_norm_instability()),
        (
            "staircase reconstruction (Betti 30, 25, 15, 20)",
            staircase_reconstruction(),
        ),
        ("dataset statistics (BZR, PROTEINS)", dataset_statistics()),
        ("mass identity", mass_identity()),
    ];
    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
