//! Overlap certification of a presentation.

use std::fmt;

use super::exponent::ExponentVector;
use super::normal::Normalizer;
use super::polynomial::SkewPolynomial;
use super::spec::ExtensionSpec;
use crate::coeff::maps::test_elements;
use crate::coeff::{validate_endomorphism, validate_sigma_derivation, RingElement};

#[derive(Debug, Clone, PartialEq)]
pub enum Overlap {
    /// `(x_j x_i) r` against `x_j (x_i r)`.
    Coefficient { i: usize, j: usize, r: RingElement },
    /// `x_k (x_j x_i)` against `(x_k x_j) x_i`.
    Generators { i: usize, j: usize, k: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct OverlapFailure {
    pub overlap: Overlap,
    pub left: SkewPolynomial,
    pub right: SkewPolynomial,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConsistencyReport {
    pub sigma_ok: bool,
    pub delta_ok: bool,
    pub overlaps_checked: usize,
    pub overlap_failures: Vec<OverlapFailure>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.sigma_ok && self.delta_ok && self.overlap_failures.is_empty()
    }
}

impl fmt::Display for Overlap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Overlap::Coefficient { i, j, r } => write!(f, "(x{} x{}) r vs x{} (x{} r), r = {r:?}", j + 1, i + 1, j + 1, i + 1),
            Overlap::Generators { i, j, k } => write!(f, "x{} (x{} x{}) vs (x{} x{}) x{}", k + 1, j + 1, i + 1, k + 1, j + 1, i + 1),
        }
    }
}

/// Checks the σ/δ laws and every coefficient and generator overlap.
pub fn check_pbw_consistency(spec: &ExtensionSpec) -> ConsistencyReport {
    let ring = spec.ring();
    let n = spec.nvars();
    let mut sigma_ok = true;
    let mut delta_ok = true;
    for i in 0..n {
        match validate_endomorphism(ring, spec.sigma(i)) {
            Ok(rep) => sigma_ok &= rep.is_endo && rep.injective,
            Err(_) => sigma_ok = false,
        }
        match validate_sigma_derivation(ring, spec.sigma(i), spec.delta(i)) {
            Ok(rep) => delta_ok &= rep.is_sigma_derivation,
            Err(_) => delta_ok = false,
        }
    }

    let mut norm = Normalizer::new(spec);
    let mut failures = Vec::new();
    let mut checked = 0;
    let elems = test_elements(ring);
    for i in 0..n {
        for j in i + 1..n {
            // x_j x_i as a polynomial
            let xji = norm.reorder(j, &ExponentVector::unit(n, i));
            for r in &elems {
                if ring.is_zero(r) {
                    continue;
                }
                checked += 1;
                let rc = SkewPolynomial::constant(ring, n, r.clone());
                let left = norm.mul(&xji, &rc);
                let xi_r = norm.left_mul_generator(i, &rc);
                let right = norm.left_mul_generator(j, &xi_r);
                if left != right {
                    failures.push(OverlapFailure { overlap: Overlap::Coefficient { i, j, r: r.clone() }, left, right });
                }
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                checked += 1;
                let xji = norm.reorder(j, &ExponentVector::unit(n, i));
                let left = norm.left_mul_generator(k, &xji);
                let xkj = norm.reorder(k, &ExponentVector::unit(n, j));
                let xi = SkewPolynomial::variable(ring, n, i);
                let right = norm.mul(&xkj, &xi);
                if left != right {
                    failures.push(OverlapFailure { overlap: Overlap::Generators { i, j, k }, left, right });
                }
            }
        }
    }
    ConsistencyReport { sigma_ok, delta_ok, overlaps_checked: checked, overlap_failures: failures }
}
