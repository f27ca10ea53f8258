use serde::Serialize;

use crate::polyalg::{Budget, Ideal};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocusKind {
    Characteristic,
    Resonance,
    TangentCone,
}

/// A jumping locus: the zero set of `ideal`, together with one extra point
/// when `extra_point` is set (the identity character for characteristic
/// loci, the origin otherwise).
#[derive(Clone, Debug)]
pub struct JumpingLocus {
    pub kind: LocusKind,
    pub k: usize,
    pub vars: Vec<String>,
    pub ideal: Ideal,
    pub extra_point: bool,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct LocusJson {
    pub kind: LocusKind,
    pub k: usize,
    pub vars: Vec<String>,
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub origin_included: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity_member: Option<bool>,
}

impl JumpingLocus {
    /// For characteristic loci: whether the trivial character belongs.
    pub fn identity_member(&self) -> bool {
        self.kind == LocusKind::Characteristic && self.extra_point
    }

    /// For resonance and tangent-cone loci: whether the origin belongs.
    pub fn origin_included(&self) -> bool {
        self.kind != LocusKind::Characteristic && self.extra_point
    }

    /// An ideal whose zero set is the whole reported locus (for resonance
    /// and tangent cones, `I·m` adjoins the origin).
    pub fn variety_ideal(&self) -> Ideal {
        match self.kind {
            LocusKind::Characteristic => {
                if self.extra_point {
                    let n = self.ideal.nvars();
                    let at_one = Ideal::new(
                        n,
                        (0..n)
                            .map(|i| {
                                &crate::polyalg::Polynomial::var(n, i) - &crate::polyalg::Polynomial::one(n)
                            })
                            .collect(),
                    );
                    self.ideal.product(&at_one)
                } else {
                    self.ideal.clone()
                }
            }
            _ => {
                if self.extra_point {
                    self.ideal.product(&Ideal::origin(self.ideal.nvars()))
                } else {
                    self.ideal.clone()
                }
            }
        }
    }

    /// Equality of the reported sets.
    pub fn same_set(&self, other: &JumpingLocus, budget: Budget) -> Result<bool> {
        self.variety_ideal().variety_equal(&other.variety_ideal(), budget)
    }

    /// True when the locus is just the extra point (or empty).
    pub fn is_trivial(&self, budget: Budget) -> Result<bool> {
        let n = self.ideal.nvars();
        match self.kind {
            LocusKind::Characteristic => {
                let at_one = Ideal::new(
                    n,
                    (0..n)
                        .map(|i| &crate::polyalg::Polynomial::var(n, i) - &crate::polyalg::Polynomial::one(n))
                        .collect(),
                );
                self.ideal.variety_subset(&at_one, budget)
            }
            _ => self.ideal.variety_subset(&Ideal::origin(n), budget),
        }
    }

    pub fn to_json(&self) -> LocusJson {
        let characteristic = self.kind == LocusKind::Characteristic;
        LocusJson {
            kind: self.kind,
            k: self.k,
            vars: self.vars.clone(),
            generators: self.ideal.gen_strings(&self.vars),
            origin_included: (!characteristic).then_some(self.extra_point),
            identity_member: characteristic.then_some(self.extra_point),
        }
    }
}
