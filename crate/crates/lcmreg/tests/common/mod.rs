use lcmreg::graph::{all_graphs, sample_graphs, Graph};

/// Prints the per-criterion pass/fail line and asserts.
pub fn criterion(id: u32, name: &str, pass: bool, detail: &str) {
    println!(
        "ACCEPTANCE {id:02} {name}: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {id} ({name}) failed: {detail}");
}

/// The shared acceptance family: every labeled graph with at least one edge
/// on up to 5 vertices, plus 200 seeded random 6-vertex graphs with edges.
pub fn acceptance_graphs(seed: u64) -> Vec<Graph> {
    let mut graphs = Vec::new();
    for n in 2..=5 {
        graphs.extend(all_graphs(n).unwrap().filter(|g| g.edge_count() > 0));
    }
    let sampled: Vec<Graph> = sample_graphs(6, 220, seed)
        .unwrap()
        .filter(|g| g.edge_count() > 0)
        .take(200)
        .collect();
    assert_eq!(sampled.len(), 200, "not enough sampled graphs with edges");
    graphs.extend(sampled);
    graphs
}
