//! Words, finite presentations, Fox calculus and cup-product data.

pub mod abelian;
pub mod combinators;
pub mod corpus;
pub mod fox;
pub mod magnus;
pub mod presentation;
pub mod word;

pub use abelian::{abelianize_presentation, abelianized_alexander_matrix, AbelianizationData};
pub use combinators::{direct_product, free_product};
pub use corpus::{corpus, corpus_names, corpus_presentation, CorpusItem};
pub use fox::{fox_derivative, FreeDerivative};
pub use magnus::{cup_structure, magnus_quadratic, pair_index, pairs, parse_cup_file, CupStructure};
pub use presentation::{parse_presentation, GroupPresentation};
pub use word::Word;
