//! Right-angled and general Artin groups given by (labelled) graphs.

pub mod corpus;
pub mod graph;
pub mod raag;
pub mod verdicts;

pub use corpus::{graph_names, named_graph, raag_suite};
pub use graph::{parse_graph_file, Graph, LabeledGraph};
pub use raag::{
    maximal_disconnected_subsets, raag_charvar_components, raag_cup_structure, raag_presentation,
    raag_resonance_components, Subtorus,
};
pub use verdicts::{
    artin_malcev_verdict, is_complete_multipartite, odd_contraction, product_of_free_groups, raag_kahler_verdict,
    raag_serre_verdict, KahlerVerdict, MalcevVerdict, SerreVerdict,
};
