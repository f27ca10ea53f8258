use serde::Serialize;

use super::graph::{bits, Graph, LabeledGraph};
use super::raag::maximal_disconnected_subsets;
use crate::Result;

/// The parts of a complete multipartite graph (the complement's components,
/// each independent in `g`), or `None`.
pub fn is_complete_multipartite(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let co = g.complement();
    let mut parts = Vec::new();
    for comp in co.components(g.all_mask()) {
        // independent in g ⟺ a clique in the complement
        if bits(comp).any(|v| g.neighbours(v) & comp != 0) {
            return None;
        }
        parts.push(bits(comp).collect::<Vec<_>>());
    }
    Some(parts)
}

/// `F_{n₁} × ⋯ × F_{n_r}` with the rank-one factors collected as a power
/// of `Z` in front.
pub fn product_of_free_groups(parts: &[Vec<usize>]) -> String {
    let ones = parts.iter().filter(|p| p.len() == 1).count();
    let mut sizes: Vec<usize> = parts.iter().map(Vec::len).filter(|&s| s > 1).collect();
    sizes.sort_unstable();
    let mut factors = Vec::new();
    match ones {
        0 => {}
        1 => factors.push("Z".to_string()),
        k => factors.push(format!("Z^{k}")),
    }
    factors.extend(sizes.iter().map(|s| format!("F_{s}")));
    if factors.is_empty() {
        return "1".into();
    }
    factors.join(" × ")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SerreVerdict {
    pub quasi_kahler: bool,
    /// Parts of the multipartite decomposition when it exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product: Option<String>,
    /// A maximal disconnected vertex set whose full subgraph still has an
    /// edge; its coordinate subspace is a non-isotropic component of `R₁`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violating_subset: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violating_edge: Option<(String, String)>,
}

pub fn raag_serre_verdict(g: &Graph) -> Result<SerreVerdict> {
    let names = |vs: &[usize]| vs.iter().map(|&v| g.vertex_names[v].clone()).collect::<Vec<_>>();
    if let Some(parts) = is_complete_multipartite(g) {
        return Ok(SerreVerdict {
            quasi_kahler: true,
            product: Some(product_of_free_groups(&parts)),
            parts: Some(parts.iter().map(|p| names(p)).collect()),
            violating_subset: None,
            violating_edge: None,
        });
    }
    let mut witness = None;
    for w in maximal_disconnected_subsets(g)? {
        let edge = g.edges().find(|(a, b)| w.contains(a) && w.contains(b));
        if let Some((a, b)) = edge {
            witness = Some((w, a, b));
            break;
        }
    }
    Ok(SerreVerdict {
        quasi_kahler: false,
        parts: None,
        product: None,
        violating_subset: witness.as_ref().map(|(w, _, _)| names(w)),
        violating_edge: witness
            .as_ref()
            .map(|&(_, a, b)| (g.vertex_names[a].clone(), g.vertex_names[b].clone())),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KahlerVerdict {
    pub kahler: bool,
    pub complete: bool,
    pub vertices: usize,
}

/// Kähler exactly for `Z^{2m}`: a complete graph on an even number of
/// vertices.
pub fn raag_kahler_verdict(g: &Graph) -> KahlerVerdict {
    let complete = g.is_complete();
    let n = g.num_vertices();
    KahlerVerdict {
        kahler: complete && n.is_multiple_of(2),
        complete,
        vertices: n,
    }
}

/// Quotient by the components of the odd-labelled subgraph. Returns the
/// contracted graph and, for each of its vertices, the original vertices it
/// collects.
pub fn odd_contraction(lg: &LabeledGraph) -> (Graph, Vec<Vec<usize>>) {
    let g = &lg.graph;
    let n = g.num_vertices();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for (&(a, b), &l) in &lg.labels {
        if l % 2 == 1 {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    // classes in order of their smallest vertex
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        if class_of[r] == usize::MAX {
            class_of[r] = classes.len();
            classes.push(Vec::new());
        }
        class_of[v] = class_of[r];
        classes[class_of[v]].push(v);
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(a, b)| (class_of[a], class_of[b]))
        .filter(|(a, b)| a != b)
        .collect();
    let names = classes
        .iter()
        .map(|c| c.iter().map(|&v| g.vertex_names[v].as_str()).collect::<Vec<_>>().join("+"))
        .collect();
    let contracted = Graph::new(format!("{}-odd", g.name), names, edges).expect("classes are distinct");
    (contracted, classes)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MalcevVerdict {
    pub pass: bool,
    pub contraction_vertices: Vec<String>,
    pub contraction_edges: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product: Option<String>,
}

/// Malcev-level quasi-Kähler test for an Artin group: the odd contraction
/// must be complete multipartite.
pub fn artin_malcev_verdict(lg: &LabeledGraph) -> MalcevVerdict {
    let (h, _) = odd_contraction(lg);
    let parts = is_complete_multipartite(&h);
    MalcevVerdict {
        pass: parts.is_some(),
        contraction_vertices: h.vertex_names.clone(),
        contraction_edges: h
            .edges()
            .map(|(a, b)| (h.vertex_names[a].clone(), h.vertex_names[b].clone()))
            .collect(),
        product: parts.map(|p| product_of_free_groups(&p)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn multipartite_examples() {
        let p3 = is_complete_multipartite(&Graph::path(3)).unwrap();
        assert_eq!(p3, vec![vec![0, 2], vec![1]]);
        assert!(is_complete_multipartite(&Graph::path(4)).is_none());
        assert_eq!(is_complete_multipartite(&Graph::complete(4)).unwrap().len(), 4);
        assert!(is_complete_multipartite(&Graph::cycle(5)).is_none());
        assert!(is_complete_multipartite(&Graph::cycle(4)).is_some());
    }

    #[test]
    fn serre() {
        let v = raag_serre_verdict(&Graph::path(3)).unwrap();
        assert!(v.quasi_kahler);
        assert_eq!(v.product.as_deref(), Some("Z × F_2"));
        assert_eq!(raag_serre_verdict(&Graph::discrete(3)).unwrap().product.as_deref(), Some("F_3"));
        assert_eq!(raag_serre_verdict(&Graph::complete(4)).unwrap().product.as_deref(), Some("Z^4"));
        for g in [Graph::path(4), Graph::cycle(5)] {
            let v = raag_serre_verdict(&g).unwrap();
            assert!(!v.quasi_kahler);
            assert!(v.violating_edge.is_some(), "{}", g.name);
        }
    }

    #[test]
    fn kahler() {
        assert!(raag_kahler_verdict(&Graph::complete(4)).kahler);
        assert!(!raag_kahler_verdict(&Graph::complete(3)).kahler);
        assert!(!raag_kahler_verdict(&Graph::path(3)).kahler);
    }

    #[test]
    fn contractions() {
        let (h, classes) = odd_contraction(&LabeledGraph::braid(5));
        assert_eq!(h.num_vertices(), 1);
        assert_eq!(classes, vec![vec![0, 1, 2, 3]]);
        assert!(artin_malcev_verdict(&LabeledGraph::braid(5)).pass);

        let even_p4 = LabeledGraph::new(
            Graph::path(4),
            [((0, 1), 4), ((1, 2), 2), ((2, 3), 6)].into_iter().collect::<BTreeMap<_, _>>(),
        )
        .unwrap();
        let (h, _) = odd_contraction(&even_p4);
        assert_eq!(h.num_edges(), 3);
        assert!(!artin_malcev_verdict(&even_p4).pass);
        assert!(artin_malcev_verdict(&LabeledGraph::right_angled(Graph::complete(3))).pass);

        let edge3 = LabeledGraph::new(Graph::path(2), [((0, 1), 3)].into_iter().collect()).unwrap();
        assert_eq!(odd_contraction(&edge3).0.num_vertices(), 1);
    }
}
