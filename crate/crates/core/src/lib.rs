//! Exact arithmetic in skew PBW extensions `A = σ(R)<x_1, ..., x_n>` over
//! small commutative coefficient rings, together with the ideal theory of the
//! coefficient ring needed to decide when an extended ideal `IA` is prime.

pub mod catalog;
pub mod classify;
pub mod coeff;
pub mod error;
pub mod extension;
pub mod ideal;
pub mod syntax;

pub use error::{Error, Result};
