//! Skew PBW extensions: presentations, normal forms and structure.

pub mod consistency;
pub mod exponent;
pub mod normal;
pub mod polynomial;
pub mod spec;
pub mod structure;

pub use consistency::{check_pbw_consistency, ConsistencyReport, Overlap, OverlapFailure};
pub use exponent::{deglex_compare, ExponentVector};
pub use normal::{c_alpha_beta, multiply, reorder_generator, sigma_alpha, times_coefficient_on_right, Normalizer};
pub use polynomial::{leading_data, LeadingData, SkewPolynomial};
pub use spec::{classify_extension, ExtensionBuilder, ExtensionFlags, ExtensionSpec, Relation, Tail};
pub use structure::{associated_graded, eliminate_inner_derivations, find_inner_element, iterated_ore_presentation, Elimination, OrePresentation};
