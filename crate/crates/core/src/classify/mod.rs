//! Extension and contraction of ideals between `R` and `A`, bounded probes,
//! and theorem-certified verdicts on the primality of `IA`.

mod extended;
mod probes;
mod verdict;

pub use extended::{contract_check, extended_membership, quotient_extension, BaseIdeal, ExtendedIdeal};
pub use probes::{
    annihilator_formula_check, coefficient_ideal, delta_alpha, find_separator, prime_criterion_search, primality_probe, witness_lift_check,
    AnnihilatorReport, CoefficientIdealReport, ProbeReport, MAX_ENUMERATION, SAMPLED_CANDIDATES,
};
pub use verdict::{classify_extended_ideal, classify_via, Conclusion, Hypothesis, Theorem, Verdict, WitnessPair, LIFT_BOUND, LIFT_SAMPLES};
