//! Morphisms, sub-braces, ideals, quotients, limits and points.

pub mod morphism;
pub mod points;
pub mod sub;

pub use morphism::{pair_into_product, tensor_brace, unit_object, verify_morphism, BraceMorphism};
pub use points::{smash_decompose, split_short_five_check, PointData, SmashDecomposition, SplitDiagram, SplitFiveOutcome};
pub use sub::{
    augmentation, cokernel_of_normal, epi_mono_factorize, equalizer, factor_through, generated_subbrace, hkernel, ideal_from_normal, ideal_report,
    image_subbrace, normal_closure, normality_conditions, normality_report, pullback, quotient_by_ideal, sub_brace_report, BraceIdeal, Factorization,
    NormalityConditions, Pullback, Quotient, SubBrace,
};
