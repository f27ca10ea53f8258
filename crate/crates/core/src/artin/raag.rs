use serde::Serialize;

use crate::fpgroup::{CupStructure, GroupPresentation, Word};
use crate::obstruct::Component;
use crate::polyalg::{Ideal, LinearSubspace, Polynomial};
use crate::{Error, Result};

use super::graph::{bits, Graph};

/// Subset enumeration is exhaustive; beyond this it is not attempted.
pub const MAX_ENUMERATION_VERTICES: usize = 24;

/// One generator per vertex and a commutator `(v, w)` per edge.
pub fn raag_presentation(g: &Graph) -> GroupPresentation {
    let relators = g
        .edges()
        .map(|(a, b)| Word::commutator(&Word::generator(a), &Word::generator(b)))
        .collect();
    GroupPresentation::new(g.name.clone(), g.vertex_names.clone(), relators).expect("valid graph")
}

/// The cup product of a RAAG: `v ∪ w ≠ 0` exactly on edges.
pub fn raag_cup_structure(g: &Graph) -> CupStructure {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    CupStructure::from_pairs(g.num_vertices(), &edges)
}

/// Vertex sets spanning a disconnected full subgraph that becomes connected
/// when any further vertex is added. Sorted by their sorted vertex lists.
pub fn maximal_disconnected_subsets(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.num_vertices();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::BudgetExceeded(format!(
            "subset enumeration is limited to {MAX_ENUMERATION_VERTICES} vertices, graph has {n}"
        )));
    }
    let all = g.all_mask();
    let mut out = Vec::new();
    for mask in 1..=all {
        if mask.count_ones() < 2 || g.induced_connected(mask) {
            continue;
        }
        // a vertex with no neighbour in W keeps W ∪ {v} disconnected
        let maximal = bits(all & !mask).all(|v| {
            let touching = g.neighbours(v) & mask;
            touching != 0 && g.induced_connected(mask | 1 << v)
        });
        if maximal {
            out.push(bits(mask).collect::<Vec<_>>());
        }
    }
    out.sort();
    Ok(out)
}

/// `R₁` of the RAAG as coordinate subspaces `C^W`, one per maximal
/// disconnected `W`, with isotropy computed from the cup product.
pub fn raag_resonance_components(g: &Graph) -> Result<Vec<Component>> {
    let c = raag_cup_structure(g);
    maximal_disconnected_subsets(g)?
        .into_iter()
        .map(|w| Component::classify(LinearSubspace::coordinate(g.num_vertices(), &w), &c))
        .collect()
}

/// The subtorus `{t : t_v = 1 for v ∉ W}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subtorus {
    pub ambient: usize,
    pub free: Vec<usize>,
}

impl Subtorus {
    pub fn ideal(&self) -> Ideal {
        let n = self.ambient;
        Ideal::new(
            n,
            (0..n)
                .filter(|v| !self.free.contains(v))
                .map(|v| &Polynomial::var(n, v) - &Polynomial::one(n))
                .collect(),
        )
    }

    /// The tangent space at the identity.
    pub fn tangent_space(&self) -> LinearSubspace {
        LinearSubspace::coordinate(self.ambient, &self.free)
    }
}

/// `V₁` of the RAAG away from the identity, as subtori over the same `W`.
pub fn raag_charvar_components(g: &Graph) -> Result<Vec<Subtorus>> {
    Ok(maximal_disconnected_subsets(g)?
        .into_iter()
        .map(|free| Subtorus {
            ambient: g.num_vertices(),
            free,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jumploci::{charvar_ideal, charvar_point_test};
    use crate::polyalg::{rat, Budget};

    #[test]
    fn presentations() {
        assert_eq!(raag_presentation(&Graph::discrete(3)).num_relators(), 0);
        let p3 = raag_presentation(&Graph::path(3));
        assert_eq!(p3.to_text().lines().filter(|l| l.starts_with("rel")).count(), 2);
    }

    #[test]
    fn small_subset_lists() {
        assert_eq!(maximal_disconnected_subsets(&Graph::path(3)).unwrap(), vec![vec![0, 2]]);
        assert!(maximal_disconnected_subsets(&Graph::complete(5)).unwrap().is_empty());
        let c5 = maximal_disconnected_subsets(&Graph::cycle(5)).unwrap();
        let mut expected: Vec<Vec<usize>> = (0..5)
            .map(|i| {
                let mut w = vec![i, (i + 2) % 5, (i + 3) % 5];
                w.sort();
                w
            })
            .collect();
        expected.sort();
        assert_eq!(c5, expected);
        assert_eq!(maximal_disconnected_subsets(&Graph::discrete(4)).unwrap(), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn charvar_subtori_for_p3() {
        let g = Graph::path(3);
        let tori = raag_charvar_components(&g).unwrap();
        assert_eq!(tori, vec![Subtorus { ambient: 3, free: vec![0, 2] }]);
        let v1 = charvar_ideal(&raag_presentation(&g), 1).unwrap();
        assert!(v1.ideal.variety_equal(&tori[0].ideal(), Budget::default()).unwrap());
        let p = raag_presentation(&g);
        assert!(charvar_point_test(&p, &[rat(3), rat(1), rat(-2)]).unwrap() >= 1);
        assert_eq!(charvar_point_test(&p, &[rat(3), rat(2), rat(-2)]).unwrap(), 0);
    }

    #[test]
    fn too_many_vertices() {
        assert!(matches!(
            maximal_disconnected_subsets(&Graph::discrete(25)),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
