//! Obstructions to 1-formality and to being quasi-Kähler, read off from
//! jumping loci and their linear components.

pub mod checks;
pub mod component;
pub mod isotropy;
pub mod report;

pub use checks::{
    component_cover_verify, filtration_check, formality_test, free_group_hint, free_quotient_test,
    position_check, CoverResult, FormalityResult, PositionResult, Verdict,
};
pub use component::{parse_component_file, Component, ComponentJson, ComponentSpec};
pub use isotropy::{isotropy_classify, restricted_cup, Isotropy};
pub use report::{run_battery, Battery, ObstructionReport, Overall, Verdicts};
