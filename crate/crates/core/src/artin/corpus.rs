use super::graph::{Graph, LabeledGraph};

/// The graphs used by the RAAG coherence suite: every one has at most six
/// vertices.
pub fn raag_suite() -> Vec<Graph> {
    let star = Graph::new(
        "star4",
        (1..=4).map(|i| format!("v{i}")).collect(),
        [(0, 1), (0, 2), (0, 3)],
    )
    .unwrap();
    let paw = Graph::new(
        "paw",
        (1..=4).map(|i| format!("v{i}")).collect(),
        [(0, 1), (1, 2), (0, 2), (2, 3)],
    )
    .unwrap();
    let joined = Graph::discrete(2).join(&Graph::discrete(2)).join(&Graph::discrete(2));
    let k222 = Graph::new("K2,2,2", (1..=6).map(|i| format!("v{i}")).collect(), joined.edges().collect::<Vec<_>>())
        .unwrap();
    vec![
        Graph::path(3),
        Graph::path(4),
        Graph::cycle(5),
        Graph::complete_bipartite(3, 3),
        Graph::complete(4),
        Graph::discrete(4),
        Graph::cycle(4),
        Graph::cycle(6),
        Graph::path(5),
        star,
        paw,
        k222,
    ]
}

/// Named graphs for the command line.
pub fn named_graph(name: &str) -> Option<LabeledGraph> {
    if let Some(n) = name.strip_prefix("braid") {
        let n: usize = n.parse().ok()?;
        return (2..=24).contains(&n).then(|| LabeledGraph::braid(n));
    }
    raag_suite()
        .into_iter()
        .find(|g| g.name == name)
        .map(LabeledGraph::right_angled)
}

pub fn graph_names() -> Vec<String> {
    let mut names: Vec<String> = raag_suite().into_iter().map(|g| g.name).collect();
    names.push("braid4".into());
    names
}
