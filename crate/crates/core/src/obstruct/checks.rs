use serde::Serialize;

use crate::fpgroup::{cup_structure, CupStructure, GroupPresentation};
use crate::jumploci::{charvar_ideal, resonance_ideal, tangent_cone_at_identity};
use crate::polyalg::{union_of_subspaces, Budget, Ideal, LinearSubspace, Polynomial};
use crate::{Error, Result};

use super::component::Component;
use super::isotropy::Isotropy;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn failed(self) -> bool {
        self == Verdict::Fail
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionWitness {
    pub first: usize,
    pub second: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PositionResult {
    /// Every component is 0- or 1-isotropic.
    pub isotropicity: Verdict,
    /// `dim ≥ 2p + 2` for every component.
    pub dimension_bound: Verdict,
    pub genericity: Verdict,
    pub classes: Vec<Isotropy>,
    pub bad_intersections: Vec<IntersectionWitness>,
}

impl PositionResult {
    /// Both halves of the isotropicity condition together.
    pub fn isotropicity_passes(&self) -> bool {
        !self.isotropicity.failed() && !self.dimension_bound.failed()
    }
}

pub fn position_check(comps: &[Component]) -> Result<PositionResult> {
    let classes: Vec<Isotropy> = comps.iter().map(|c| c.p).collect();
    let iso = comps.iter().all(|c| c.p.is_isotropic());
    let dims = comps.iter().all(|c| c.subspace.dim() >= 2 * c.p.p() + 2);
    let mut bad = Vec::new();
    for a in 0..comps.len() {
        for b in a + 1..comps.len() {
            let meet = comps[a].subspace.intersect(&comps[b].subspace)?;
            if meet.dim() > 0 {
                bad.push(IntersectionWitness {
                    first: a,
                    second: b,
                    dim: meet.dim(),
                });
            }
        }
    }
    Ok(PositionResult {
        isotropicity: Verdict::from_bool(iso),
        dimension_bound: Verdict::from_bool(dims),
        genericity: Verdict::from_bool(bad.is_empty()),
        classes,
        bad_intersections: bad,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FiltrationStep {
    pub k: usize,
    /// Indices of the components with `dim > k + p`.
    pub qualifying: Vec<usize>,
    pub holds: bool,
}

/// Compare `R_k` with the union of the components of dimension `> k + p`
/// (and the origin), for `1 ≤ k ≤ k_max`.
pub fn filtration_check(
    comps: &[Component],
    c: &CupStructure,
    k_max: usize,
    budget: Budget,
) -> Result<(Verdict, Vec<FiltrationStep>)> {
    let mut steps = Vec::new();
    for k in 1..=k_max {
        let qualifying: Vec<usize> = (0..comps.len())
            .filter(|&i| comps[i].subspace.dim() > k + comps[i].p.p())
            .collect();
        let subspaces: Vec<LinearSubspace> =
            qualifying.iter().map(|&i| comps[i].subspace.clone()).collect();
        let union = union_of_subspaces(c.n, &subspaces, true, budget)?;
        let r = resonance_ideal(c, k).variety_ideal();
        let holds = r.variety_equal(&union, budget)?;
        steps.push(FiltrationStep { k, qualifying, holds });
    }
    let ok = steps.iter().all(|s| s.holds);
    Ok((Verdict::from_bool(ok), steps))
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverResult {
    pub verdict: Verdict,
    /// Components not contained in the variety.
    pub not_inside: Vec<usize>,
    pub covers: bool,
    /// Pairs `(i, j)` with component `i` inside component `j`.
    pub redundant: Vec<(usize, usize)>,
}

/// Check that `comps` are exactly the pieces of `Z(ideal)` (plus the origin
/// when `include_origin`).
pub fn component_cover_verify(
    comps: &[LinearSubspace],
    ideal: &Ideal,
    include_origin: bool,
    budget: Budget,
) -> Result<CoverResult> {
    let n = ideal.nvars();
    if let Some(c) = comps.iter().find(|c| c.ambient() != n) {
        return Err(Error::AmbientMismatch {
            expected: n,
            found: c.ambient(),
        });
    }
    let mut not_inside = Vec::new();
    for (i, comp) in comps.iter().enumerate() {
        if !subspace_inside(comp, ideal) {
            not_inside.push(i);
        }
    }
    let covers = ideal.variety_subset_union(comps, include_origin, budget)?;
    let mut redundant = Vec::new();
    for i in 0..comps.len() {
        for j in 0..comps.len() {
            if i != j && comps[j].contains(&comps[i])? && (i < j || !comps[i].contains(&comps[j])?) {
                redundant.push((i, j));
            }
        }
    }
    Ok(CoverResult {
        verdict: Verdict::from_bool(not_inside.is_empty() && covers && redundant.is_empty()),
        not_inside,
        covers,
        redundant,
    })
}

/// Substitute `z = Σ s_i b_i` and check every generator vanishes
/// identically in the parameters.
fn subspace_inside(v: &LinearSubspace, ideal: &Ideal) -> bool {
    let d = v.dim();
    let images: Vec<Polynomial> = (0..v.ambient())
        .map(|j| {
            let coeffs: Vec<_> = v.basis().iter().map(|b| b[j].clone()).collect();
            Polynomial::linear(&coeffs)
        })
        .collect();
    if d == 0 {
        return ideal.vanishes_at(&vec![crate::polyalg::rat(0); v.ambient()]);
    }
    ideal.gens().iter().all(|g| g.substitute(&images).is_zero())
}

#[derive(Clone, Debug, Serialize)]
pub struct FormalityStep {
    pub k: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FormalityResult {
    /// Failure is conclusive; success is only consistency.
    pub verdict: Verdict,
    pub steps: Vec<FormalityStep>,
    pub b1: usize,
}

/// Compare `TC₁(V_k)` with `R_k` for `1 ≤ k ≤ k_max`.
pub fn formality_test(
    p: &GroupPresentation,
    c: &CupStructure,
    k_max: usize,
    budget: Budget,
) -> Result<FormalityResult> {
    let mut steps = Vec::new();
    let mut b1 = c.n;
    for k in 1..=k_max {
        let v = charvar_ideal(p, k)?;
        b1 = v.ideal.nvars();
        if b1 != c.n {
            return Err(Error::AmbientMismatch {
                expected: b1,
                found: c.n,
            });
        }
        let tc = tangent_cone_at_identity(&v, budget)?;
        let r = resonance_ideal(c, k);
        steps.push(FormalityStep {
            k,
            holds: tc.same_set(&r, budget)?,
        });
    }
    Ok(FormalityResult {
        verdict: Verdict::from_bool(steps.iter().all(|s| s.holds)),
        steps,
        b1,
    })
}

/// `R₁ ≠ {0}`: some coordinate form is not in the radical of the `k = 1`
/// resonance ideal. Under the usual hypotheses this detects a free quotient
/// of rank at least 2.
pub fn free_quotient_test(c: &CupStructure, budget: Budget) -> Result<bool> {
    let r1 = resonance_ideal(c, 1);
    for i in 0..c.n {
        if !r1.ideal.radical_contains(&Polynomial::var(c.n, i), budget)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A note for groups whose relators are all commutators and whose cup
/// product vanishes: such a group is free if it is 1-formal.
pub fn free_group_hint(p: &GroupPresentation) -> Result<Option<String>> {
    let commutator_relators = p
        .relators
        .iter()
        .all(|r| r.abelianize(p.num_generators()).iter().all(|&e| e == 0));
    if !commutator_relators {
        return Ok(None);
    }
    let c = cup_structure(p)?;
    if !c.is_zero() {
        return Ok(None);
    }
    Ok(Some(format!(
        "{}: commutator relators and vanishing cup product; if 1-formal then free",
        p.name
    )))
}
