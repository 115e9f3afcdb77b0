use std::path::Path;

use graphtopo::{load_tudataset, write_tudataset, Graph, GraphDataset};
use proptest::prelude::*;

#[test]
fn mutag_statistics() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/MUTAG");
    let ds = load_tudataset(&dir, "MUTAG").unwrap();
    let s = ds.stats();
    assert_eq!(s.num_graphs, 188);
    assert_eq!(s.num_classes, 2);
    assert_eq!(ds.label_values, vec![-1, 1]);
    assert!((s.mean_nodes - 17.930851063829788).abs() < 1e-12);
    assert!((s.mean_edges - 19.79255319148936).abs() < 1e-12);
    assert_eq!(ds.dropped_self_loops, 0);
}

fn dataset() -> impl Strategy<Value = GraphDataset> {
    let graph = (1usize..8).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..12).prop_map(move |pairs| {
            Graph::new(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
        })
    });
    prop::collection::vec((graph, -2i64..3), 1..6).prop_map(|items| {
        let (graphs, labels): (Vec<_>, Vec<_>) = items.into_iter().unzip();
        GraphDataset::new("RT", graphs, &labels).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn write_then_load_round_trips(ds in dataset()) {
        let dir = tempfile::tempdir().unwrap();
        write_tudataset(&ds, dir.path(), "RT").unwrap();
        let back = load_tudataset(dir.path(), "RT").unwrap();
        prop_assert_eq!(back.graphs, ds.graphs);
        prop_assert_eq!(back.labels, ds.labels);
        prop_assert_eq!(back.label_values, ds.label_values);
    }
}
