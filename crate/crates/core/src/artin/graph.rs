use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::fpgroup::presentation::is_ident;
use crate::{Error, Result};

/// Largest vertex count; adjacency is kept as 64-bit masks.
pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph. Vertices keep their input order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Graph {
    pub name: String,
    pub vertex_names: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
    #[serde(skip)]
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(
        name: impl Into<String>,
        vertex_names: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = vertex_names.len();
        if n > MAX_VERTICES {
            return Err(Error::Invalid(format!("graphs are limited to {MAX_VERTICES} vertices")));
        }
        let distinct: BTreeSet<&String> = vertex_names.iter().collect();
        if distinct.len() != n {
            return Err(Error::Invalid("duplicate vertex name".into()));
        }
        let mut set = BTreeSet::new();
        let mut adj = vec![0u64; n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Invalid(format!("edge ({a},{b}) out of range")));
            }
            if a == b {
                return Err(Error::Invalid("loops are not allowed".into()));
            }
            let e = (a.min(b), a.max(b));
            set.insert(e);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Graph {
            name: name.into(),
            vertex_names,
            edges: set,
            adj,
        })
    }

    fn numbered(name: String, n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let names = (1..=n).map(|i| format!("v{i}")).collect();
        Graph::new(name, names, edges).expect("well-formed")
    }

    pub fn discrete(n: usize) -> Self {
        Self::numbered(format!("discrete{n}"), n, [])
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Self::numbered(format!("K{n}"), n, edges)
    }

    pub fn path(n: usize) -> Self {
        Self::numbered(format!("P{n}"), n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Self {
        Self::numbered(format!("C{n}"), n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)));
        Self::numbered(format!("K{a},{b}"), a + b, edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn all_mask(&self) -> u64 {
        mask_of_len(self.num_vertices())
    }

    /// Whether the full subgraph on `mask` is connected (the empty set
    /// counts as connected).
    pub fn induced_connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask & mask.wrapping_neg();
        self.reach(start, mask) == mask
    }

    /// Vertices of `mask` reachable from `seed` inside `mask`.
    fn reach(&self, seed: u64, mask: u64) -> u64 {
        let mut seen = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[v] & mask & !seen;
            seen |= new;
            frontier |= new;
        }
        seen
    }

    /// Connected components of the full subgraph on `mask`, as masks in
    /// order of their smallest vertex.
    pub fn components(&self, mask: u64) -> Vec<u64> {
        let mut rest = mask;
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.reach(rest & rest.wrapping_neg(), rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let n = self.num_vertices();
        let edges = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| !self.has_edge(a, b));
        Graph::new(format!("co-{}", self.name), self.vertex_names.clone(), edges.collect::<Vec<_>>())
            .expect("same vertices")
    }

    pub fn is_complete(&self) -> bool {
        let n = self.num_vertices();
        self.num_edges() == n * n.saturating_sub(1) / 2
    }

    /// Disjoint union plus every edge between the two sides. Vertex names
    /// are prefixed `a.`/`b.` only when they clash.
    pub fn join(&self, other: &Graph) -> Graph {
        let (left, right) = disjoint_names(&self.vertex_names, &other.vertex_names);
        let n = self.num_vertices();
        let m = other.num_vertices();
        let mut edges: Vec<(usize, usize)> = self.edges().collect();
        edges.extend(other.edges().map(|(a, b)| (a + n, b + n)));
        for a in 0..n {
            for b in 0..m {
                edges.push((a, n + b));
            }
        }
        let names = left.into_iter().chain(right).collect();
        Graph::new(format!("{}*{}", self.name, other.name), names, edges).expect("disjoint names")
    }

    pub fn names_of(&self, mask: u64) -> Vec<String> {
        bits(mask).map(|i| self.vertex_names[i].clone()).collect()
    }
}

pub(crate) fn disjoint_names(a: &[String], b: &[String]) -> (Vec<String>, Vec<String>) {
    let clash = a.iter().any(|x| b.contains(x));
    if clash {
        (
            a.iter().map(|x| format!("a.{x}")).collect(),
            b.iter().map(|x| format!("b.{x}")).collect(),
        )
    } else {
        (a.to_vec(), b.to_vec())
    }
}

pub fn mask_of_len(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// A graph whose edges carry Artin labels `≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: BTreeMap<(usize, usize), u32>,
}

impl LabeledGraph {
    pub fn new(graph: Graph, labels: BTreeMap<(usize, usize), u32>) -> Result<Self> {
        let mut full = BTreeMap::new();
        for e in graph.edges() {
            let l = labels.get(&e).copied().unwrap_or(2);
            if l < 2 {
                return Err(Error::Invalid(format!("edge label {l} is below 2")));
            }
            full.insert(e, l);
        }
        if labels.keys().any(|e| !full.contains_key(e)) {
            return Err(Error::Invalid("label on a non-edge".into()));
        }
        Ok(LabeledGraph { graph, labels: full })
    }

    /// Every edge labelled 2.
    pub fn right_angled(graph: Graph) -> Self {
        LabeledGraph::new(graph, BTreeMap::new()).expect("default labels")
    }

    /// The braid group `B_n`: complete graph on `n − 1` vertices, label 3
    /// between neighbours and 2 otherwise.
    pub fn braid(n: usize) -> Self {
        let k = n - 1;
        let mut g = Graph::complete(k);
        g.name = format!("braid{n}");
        let labels = g
            .edges()
            .map(|(a, b)| ((a, b), if b - a == 1 { 3 } else { 2 }))
            .collect();
        LabeledGraph::new(g, labels).expect("complete graph")
    }

    pub fn label(&self, a: usize, b: usize) -> Option<u32> {
        self.labels.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn is_right_angled(&self) -> bool {
        self.labels.values().all(|&l| l == 2)
    }
}

/// ```text
/// graph P3
/// vertices a b c
/// edge a b
/// edge b c 3
/// ```
pub fn parse_graph_file(text: &str) -> Result<LabeledGraph> {
    let mut name = "G".to_string();
    let mut vertices: Option<Vec<String>> = None;
    let mut edges = Vec::new();
    let mut labels = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next().unwrap() {
            "graph" => {
                name = toks
                    .next()
                    .ok_or_else(|| Error::syntax(line_no, 7, "missing graph name"))?
                    .to_string();
            }
            "vertices" => {
                let vs: Vec<String> = toks.map(str::to_string).collect();
                if let Some(bad) = vs.iter().find(|v| !is_ident(v)) {
                    return Err(Error::syntax(line_no, 10, format!("bad vertex name `{bad}`")));
                }
                vertices = Some(vs);
            }
            "edge" => {
                let vs = vertices
                    .as_ref()
                    .ok_or_else(|| Error::syntax(line_no, 1, "`edge` before `vertices`"))?;
                let ends: Vec<&str> = toks.collect();
                if !(2..=3).contains(&ends.len()) {
                    return Err(Error::syntax(line_no, 6, "expected `edge a b [label]`"));
                }
                let find = |s: &str| {
                    vs.iter().position(|v| v == s).ok_or_else(|| Error::UnknownGenerator {
                        name: s.to_string(),
                        line: line_no,
                    })
                };
                let (a, b) = (find(ends[0])?, find(ends[1])?);
                if a == b {
                    return Err(Error::syntax(line_no, 6, "loops are not allowed"));
                }
                let label = match ends.get(2) {
                    Some(s) => s
                        .parse::<u32>()
                        .ok()
                        .filter(|&l| l >= 2)
                        .ok_or_else(|| Error::syntax(line_no, 6, format!("bad label `{s}`")))?,
                    None => 2,
                };
                let e = (a.min(b), a.max(b));
                if labels.insert(e, label).is_some() {
                    return Err(Error::syntax(line_no, 1, "repeated edge"));
                }
                edges.push(e);
            }
            other => return Err(Error::syntax(line_no, 1, format!("unknown keyword `{other}`"))),
        }
    }
    let vs = vertices.ok_or_else(|| Error::syntax(1, 1, "missing `vertices` line"))?;
    let g = Graph::new(name, vs, edges)?;
    LabeledGraph::new(g, labels)
}

impl LabeledGraph {
    pub fn to_text(&self) -> String {
        let g = &self.graph;
        let mut s = format!("graph {}\nvertices {}\n", g.name, g.vertex_names.join(" "));
        for (&(a, b), &l) in &self.labels {
            let (x, y) = (&g.vertex_names[a], &g.vertex_names[b]);
            if l == 2 {
                s.push_str(&format!("edge {x} {y}\n"));
            } else {
                s.push_str(&format!("edge {x} {y} {l}\n"));
            }
        }
        s
    }
}
