//! Bundled fixtures.

use super::magnus::CupStructure;
use super::presentation::{parse_presentation, GroupPresentation};
use crate::error::{Error, Result};
use crate::polyalg::{parse_polynomial, Ideal};

#[derive(Clone, Debug)]
pub enum CorpusItem {
    Presentation(GroupPresentation),
    Cup(CupStructure),
    Ideal { vars: Vec<String>, ideal: Ideal },
}

const PRESENTATIONS: &[(&str, &str)] = &[
    (
        "ziegler-2134",
        "group ziegler-2134\ngens x1 x2 x3 x4\nrel (x1, x3^2 x4)\nrel (x2, x4)\nrel (x3, x4)\n",
    ),
    ("heisenberg", "group heisenberg\ngens x y\nrel ((x,y),x)\nrel ((x,y),y)\n"),
    ("trefoil", "group trefoil\ngens x y\nrel x y x y^-1 x^-1 y^-1\n"),
    ("figure-eight", "group figure-eight\ngens x y\nrel y^-1 x y x^-1 y x y^-1 x^-1 y x^-1\n"),
    ("free-2", "group free-2\ngens x y\n"),
    ("z2", "group z2\ngens x y\nrel (x,y)\n"),
    ("z3", "group z3\ngens x y z\nrel (x,y)\nrel (x,z)\nrel (y,z)\n"),
    ("surface-2", "group surface-2\ngens a1 b1 a2 b2\nrel (a1,b1) (a2,b2)\n"),
    ("p3-raag", "group p3-raag\ngens v1 v2 v3\nrel (v1,v2)\nrel (v2,v3)\n"),
];

const CUPS: &[(&str, &str)] = &[
    ("surface-2-cup", "h1 4\nclass 1 on 1 2 + 1 on 3 4\n"),
    ("trefoil-cup", "h1 1\n"),
];

/// Names of every bundled fixture.
pub fn corpus_names() -> Vec<&'static str> {
    PRESENTATIONS
        .iter()
        .map(|(n, _)| *n)
        .chain(CUPS.iter().map(|(n, _)| *n))
        .chain(["scroll-n3"])
        .collect()
}

/// Names of the bundled presentations only.
pub fn presentation_names() -> Vec<&'static str> {
    PRESENTATIONS.iter().map(|(n, _)| *n).collect()
}

pub fn corpus(name: &str) -> Result<CorpusItem> {
    if let Some((_, text)) = PRESENTATIONS.iter().find(|(n, _)| *n == name) {
        return Ok(CorpusItem::Presentation(parse_presentation(text)?));
    }
    if let Some((_, text)) = CUPS.iter().find(|(n, _)| *n == name) {
        return Ok(CorpusItem::Cup(super::magnus::parse_cup_file(text)?));
    }
    if name == "scroll-n3" {
        // resonance of the pure braid group of three strands on an elliptic
        // curve: Σx = Σy = 0 and x1 y2 = x2 y1, a rational normal scroll
        let vars: Vec<String> = ["x1", "x2", "x3", "y1", "y2", "y3"].iter().map(|s| s.to_string()).collect();
        let gens = ["x1 + x2 + x3", "y1 + y2 + y3", "x1*y2 - x2*y1"]
            .iter()
            .map(|g| parse_polynomial(g, &vars))
            .collect::<Result<Vec<_>>>()?;
        return Ok(CorpusItem::Ideal {
            ideal: Ideal::new(vars.len(), gens),
            vars,
        });
    }
    Err(Error::UnknownCorpus(name.to_string()))
}

/// The named fixture, which must be a presentation.
pub fn corpus_presentation(name: &str) -> Result<GroupPresentation> {
    match corpus(name)? {
        CorpusItem::Presentation(p) => Ok(p),
        _ => Err(Error::Invalid(format!("corpus entry `{name}` is not a presentation"))),
    }
}
