use serde::Serialize;

use crate::fpgroup::magnus::parse_rat;
use crate::fpgroup::CupStructure;
use crate::polyalg::{LinearSubspace, Rat};
use crate::{Error, Result};

use super::isotropy::{isotropy_classify, Isotropy};

/// A linear piece of a resonance variety with its isotropy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub subspace: LinearSubspace,
    pub p: Isotropy,
}

impl Component {
    pub fn classify(subspace: LinearSubspace, c: &CupStructure) -> Result<Self> {
        let p = isotropy_classify(&subspace, c)?;
        Ok(Component { subspace, p })
    }
}

/// A component as read from a file: the class is whatever the file claims,
/// `None` for `p=?`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSpec {
    pub subspace: LinearSubspace,
    pub claimed: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentJson {
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
    pub isotropy: Isotropy,
}

impl ComponentJson {
    pub fn new(c: &Component) -> Self {
        ComponentJson {
            dim: c.subspace.dim(),
            basis: c
                .subspace
                .basis()
                .iter()
                .map(|v| v.iter().map(Rat::to_string).collect())
                .collect(),
            isotropy: c.p,
        }
    }
}

/// ```text
/// ambient 4
/// comp p=? basis: 1 0 0 0; 0 1 0 0; 0 0 1 0
/// comp p=0 basis: 1 0 0 0; 0 1 0 0; 0 0 1 -2
/// ```
pub fn parse_component_file(text: &str) -> Result<(usize, Vec<ComponentSpec>)> {
    let mut ambient = None;
    let mut comps = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("ambient") {
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| Error::syntax(line_no, 9, "expected the ambient dimension"))?;
            if n == 0 {
                return Err(Error::syntax(line_no, 9, "ambient dimension must be positive"));
            }
            ambient = Some(n);
            continue;
        }
        let Some(rest) = line.strip_prefix("comp") else {
            return Err(Error::syntax(line_no, 1, "expected `ambient` or `comp`"));
        };
        let n = ambient.ok_or_else(|| Error::syntax(line_no, 1, "`comp` before `ambient`"))?;
        let (head, basis) = rest
            .split_once("basis:")
            .ok_or_else(|| Error::syntax(line_no, 1, "missing `basis:`"))?;
        let claimed = match head.trim() {
            "" | "p=?" => None,
            "p=0" => Some(0),
            "p=1" => Some(1),
            other => {
                return Err(Error::syntax(line_no, 6, format!("bad isotropy tag `{other}`")));
            }
        };
        let mut vectors = Vec::new();
        for chunk in basis.split(';') {
            let entries: Vec<&str> = chunk
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .collect();
            if entries.is_empty() {
                continue;
            }
            if entries.len() != n {
                return Err(Error::syntax(
                    line_no,
                    1,
                    format!("vector has {} entries, ambient is {n}", entries.len()),
                ));
            }
            let v = entries
                .iter()
                .map(|s| parse_rat(s).ok_or_else(|| Error::syntax(line_no, 1, format!("bad number `{s}`"))))
                .collect::<Result<Vec<Rat>>>()?;
            vectors.push(v);
        }
        let subspace = LinearSubspace::span(n, vectors)?;
        if subspace.dim() == 0 {
            return Err(Error::syntax(line_no, 1, "component must be nonzero"));
        }
        comps.push(ComponentSpec { subspace, claimed });
    }
    let n = ambient.ok_or_else(|| Error::syntax(1, 1, "missing `ambient` line"))?;
    Ok((n, comps))
}
