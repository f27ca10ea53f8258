//! Characteristic and resonance varieties, Fitting loci, tangent cones.

pub mod charvar;
pub mod locus;
pub mod resonance;

pub use charvar::{charvar_ideal, charvar_point_test, tangent_cone_at_identity};
pub use locus::{JumpingLocus, LocusJson, LocusKind};
pub use resonance::{
    delta2_matrix, infinitesimal_alexander, infinitesimal_fitting_locus, resonance_dimension, resonance_ideal,
    resonance_matrix,
};
