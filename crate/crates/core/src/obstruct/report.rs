use serde::Serialize;

use crate::fpgroup::{CupStructure, GroupPresentation};
use crate::jumploci::resonance_ideal;
use crate::polyalg::{Budget, LinearSubspace};
use crate::Result;

use super::checks::{
    component_cover_verify, filtration_check, formality_test, free_group_hint, free_quotient_test,
    position_check, CoverResult, FiltrationStep, FormalityStep, IntersectionWitness, Verdict,
};
use super::component::{Component, ComponentJson, ComponentSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Overall {
    #[serde(rename = "1-formality obstructed")]
    FormalityObstructed,
    #[serde(rename = "quasi-Kähler obstructed (assuming 1-formal)")]
    QuasiKahlerObstructed,
    /// The components do not match `R₁`; the position tests are moot.
    #[serde(rename = "inconclusive")]
    Inconclusive,
    #[serde(rename = "consistent")]
    Consistent,
}

impl Overall {
    pub fn exit_code(self) -> i32 {
        match self {
            Overall::Consistent => 0,
            Overall::FormalityObstructed | Overall::QuasiKahlerObstructed => 2,
            Overall::Inconclusive => 3,
        }
    }
}

/// The per-test verdicts the overall answer is computed from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub linearity_coverage: Verdict,
    pub isotropicity: Verdict,
    pub dimension_bound: Verdict,
    pub genericity: Verdict,
    pub filtration: Verdict,
    pub tangent_cone: Verdict,
}

impl Verdicts {
    /// | tangent cone | coverage | any position test | overall |
    /// |---|---|---|---|
    /// | fail | any | any | 1-formality obstructed |
    /// | pass / n.a. | fail | any | inconclusive |
    /// | pass / n.a. | pass / n.a. | fail | quasi-Kähler obstructed |
    /// | pass / n.a. | pass / n.a. | none failed | consistent |
    pub fn overall(&self) -> Overall {
        if self.tangent_cone.failed() {
            return Overall::FormalityObstructed;
        }
        if self.linearity_coverage.failed() {
            return Overall::Inconclusive;
        }
        let position = [self.isotropicity, self.dimension_bound, self.genericity, self.filtration];
        if position.iter().any(|v| v.failed()) {
            Overall::QuasiKahlerObstructed
        } else {
            Overall::Consistent
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub ambient: usize,
    pub k_max: usize,
    pub verdicts: Verdicts,
    pub overall: Overall,
    pub exit_code: i32,
    pub components: Vec<ComponentJson>,
    pub bad_intersections: Vec<IntersectionWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverResult>,
    pub filtration_steps: Vec<FiltrationStep>,
    pub tangent_cone_steps: Vec<FormalityStep>,
    pub free_quotient: bool,
    pub notes: Vec<String>,
}

/// Inputs for the full battery. Without components only the tangent-cone
/// and free-quotient tests run; without a presentation the tangent-cone
/// test is skipped.
pub struct Battery<'a> {
    pub cup: &'a CupStructure,
    pub presentation: Option<&'a GroupPresentation>,
    pub components: Option<&'a [ComponentSpec]>,
    pub k_max: usize,
    pub budget: Budget,
}

pub fn run_battery(b: &Battery) -> Result<ObstructionReport> {
    let c = b.cup;
    let mut notes = Vec::new();

    let (tangent_cone, tangent_cone_steps) = match b.presentation {
        Some(p) => {
            let f = formality_test(p, c, b.k_max, b.budget)?;
            if let Some(h) = free_group_hint(p)? {
                notes.push(h);
            }
            (f.verdict, f.steps)
        }
        None => (Verdict::NotApplicable, Vec::new()),
    };
    if tangent_cone == Verdict::Pass {
        notes.push("tangent cone formula holds; this is necessary, not sufficient, for 1-formality".into());
    }

    let free_quotient = free_quotient_test(c, b.budget)?;
    if free_quotient {
        notes.push(
            "R_1 is larger than the origin; for a 1-formal quasi-Kähler group this means a free quotient of rank at least 2"
                .into(),
        );
    }

    let mut components = Vec::new();
    let mut verdicts = Verdicts {
        linearity_coverage: Verdict::NotApplicable,
        isotropicity: Verdict::NotApplicable,
        dimension_bound: Verdict::NotApplicable,
        genericity: Verdict::NotApplicable,
        filtration: Verdict::NotApplicable,
        tangent_cone,
    };
    let mut cover = None;
    let mut bad_intersections = Vec::new();
    let mut filtration_steps = Vec::new();
    if let Some(specs) = b.components {
        for (i, s) in specs.iter().enumerate() {
            let comp = Component::classify(s.subspace.clone(), c)?;
            if let Some(claim) = s.claimed {
                let agrees = comp.p.is_isotropic() && comp.p.p() == claim;
                if !agrees {
                    notes.push(format!(
                        "component {i}: file says p={claim}, computed {}",
                        comp.p.label()
                    ));
                }
            }
            components.push(comp);
        }
        let subspaces: Vec<LinearSubspace> = components.iter().map(|c| c.subspace.clone()).collect();
        let r1 = resonance_ideal(c, 1);
        let cv = component_cover_verify(&subspaces, &r1.ideal, r1.extra_point, b.budget)?;
        verdicts.linearity_coverage = cv.verdict;
        if cv.verdict.failed() {
            notes.push("components do not match R_1 exactly; position tests are not conclusive".into());
        }
        cover = Some(cv);

        let pos = position_check(&components)?;
        verdicts.isotropicity = pos.isotropicity;
        verdicts.dimension_bound = pos.dimension_bound;
        verdicts.genericity = pos.genericity;
        bad_intersections = pos.bad_intersections;

        let (f, steps) = filtration_check(&components, c, b.k_max, b.budget)?;
        verdicts.filtration = f;
        filtration_steps = steps;
    }

    let overall = verdicts.overall();
    Ok(ObstructionReport {
        ambient: c.n,
        k_max: b.k_max,
        verdicts,
        overall,
        exit_code: overall.exit_code(),
        components: components.iter().map(ComponentJson::new).collect(),
        bad_intersections,
        cover,
        filtration_steps,
        tangent_cone_steps,
        free_quotient,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::{corpus, corpus_presentation, cup_structure, CorpusItem};
    use crate::obstruct::parse_component_file;

    #[test]
    fn ziegler_fails_three_position_tests() {
        let p = corpus_presentation("ziegler-2134").unwrap();
        let c = cup_structure(&p).unwrap();
        let (n, specs) = parse_component_file(include_str!("../../data/ziegler.comp")).unwrap();
        assert_eq!(n, 4);
        let r = run_battery(&Battery {
            cup: &c,
            presentation: Some(&p),
            components: Some(&specs),
            k_max: 2,
            budget: Budget::default(),
        })
        .unwrap();
        let v = r.verdicts;
        assert_eq!(v.tangent_cone, Verdict::Pass);
        assert_eq!(v.linearity_coverage, Verdict::Pass);
        assert_eq!(v.isotropicity, Verdict::Fail);
        assert_eq!(v.dimension_bound, Verdict::Pass);
        assert_eq!(v.genericity, Verdict::Fail);
        assert_eq!(v.filtration, Verdict::Fail);
        assert_eq!(r.overall, Overall::QuasiKahlerObstructed);
        assert_eq!(r.exit_code, 2);
        assert!(r.free_quotient);
        assert_eq!(r.bad_intersections[0].dim, 2);
    }

    #[test]
    fn surface_is_consistent() {
        let p = corpus_presentation("surface-2").unwrap();
        let c = cup_structure(&p).unwrap();
        let specs = vec![ComponentSpec {
            subspace: LinearSubspace::whole(4),
            claimed: Some(1),
        }];
        let r = run_battery(&Battery {
            cup: &c,
            presentation: Some(&p),
            components: Some(&specs),
            k_max: 4,
            budget: Budget::default(),
        })
        .unwrap();
        assert_eq!(r.overall, Overall::Consistent, "{:?}", r.verdicts);
        assert!(r.notes.iter().all(|n| !n.contains("file says")));
    }

    #[test]
    fn heisenberg_is_not_formal() {
        let p = corpus_presentation("heisenberg").unwrap();
        let c = cup_structure(&p).unwrap();
        let r = run_battery(&Battery {
            cup: &c,
            presentation: Some(&p),
            components: None,
            k_max: 2,
            budget: Budget::default(),
        })
        .unwrap();
        assert_eq!(r.overall, Overall::FormalityObstructed);
        assert!(r.notes.iter().any(|n| n.contains("if 1-formal then free")));
        let CorpusItem::Presentation(_) = corpus("heisenberg").unwrap() else { panic!() };
    }

    #[test]
    fn truth_table() {
        use Verdict::*;
        let base = Verdicts {
            linearity_coverage: Pass,
            isotropicity: Pass,
            dimension_bound: Pass,
            genericity: Pass,
            filtration: Pass,
            tangent_cone: NotApplicable,
        };
        assert_eq!(base.overall(), Overall::Consistent);
        assert_eq!(Verdicts { genericity: Fail, ..base }.overall(), Overall::QuasiKahlerObstructed);
        assert_eq!(
            Verdicts { genericity: Fail, linearity_coverage: Fail, ..base }.overall(),
            Overall::Inconclusive
        );
        assert_eq!(
            Verdicts { tangent_cone: Fail, linearity_coverage: Fail, ..base }.overall(),
            Overall::FormalityObstructed
        );
    }
}
