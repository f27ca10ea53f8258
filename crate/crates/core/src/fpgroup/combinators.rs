use super::presentation::GroupPresentation;
use super::word::Word;

/// Generator names for a combined presentation. Names are kept as they are
/// unless the two lists overlap, in which case every name is prefixed with
/// `a.` or `b.` according to its side.
fn merged_names(p1: &GroupPresentation, p2: &GroupPresentation) -> Vec<String> {
    let clash = p1.generator_names.iter().any(|a| p2.generator_names.contains(a));
    if clash {
        p1.generator_names
            .iter()
            .map(|g| format!("a.{g}"))
            .chain(p2.generator_names.iter().map(|g| format!("b.{g}")))
            .collect()
    } else {
        p1.generator_names.iter().chain(&p2.generator_names).cloned().collect()
    }
}

fn shifted(p2: &GroupPresentation, by: usize) -> Vec<Word> {
    let map: Vec<usize> = (0..p2.num_generators()).map(|i| i + by).collect();
    p2.relators.iter().map(|r| r.relabel(&map)).collect()
}

/// `G₁ * G₂`: disjoint generators, concatenated relators.
pub fn free_product(p1: &GroupPresentation, p2: &GroupPresentation) -> GroupPresentation {
    let s1 = p1.num_generators();
    let mut relators = p1.relators.clone();
    relators.extend(shifted(p2, s1));
    GroupPresentation {
        name: format!("({})*({})", p1.name, p2.name),
        generator_names: merged_names(p1, p2),
        relators,
    }
}

/// `G₁ × G₂`: the free product plus every mixed commutator `(x, y)`,
/// ordered by `x` and then `y`.
pub fn direct_product(p1: &GroupPresentation, p2: &GroupPresentation) -> GroupPresentation {
    let s1 = p1.num_generators();
    let s2 = p2.num_generators();
    let mut relators = p1.relators.clone();
    relators.extend(shifted(p2, s1));
    for x in 0..s1 {
        for y in 0..s2 {
            relators.push(Word::commutator(&Word::generator(x), &Word::generator(s1 + y)));
        }
    }
    GroupPresentation {
        name: format!("({})x({})", p1.name, p2.name),
        generator_names: merged_names(p1, p2),
        relators,
    }
}
