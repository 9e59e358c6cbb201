//! Commutative coefficient rings, their endomorphisms and σ-derivations.

pub mod maps;
pub mod pool;
pub mod ring;
pub(crate) mod unipoly;

pub use maps::{validate_endomorphism, validate_sigma_derivation, DerMap, DerivationReport, EndoMap, EndoReport};
pub use ring::{enumerate_elements, is_regular, ring_arithmetic, PolyBase, QuotientRing, RingDescriptor, RingElement, RingOp};
