//! Normal forms of products in the standard-monomial basis.
//!
//! Coefficients are moved left one generator at a time with
//! `x_i r = σ_i(r) x_i + δ_i(r)`, and a generator is pushed into an ordered
//! monomial by rewriting the leftmost out-of-order pair with its relation.

use std::collections::HashMap;

use super::exponent::ExponentVector;
use super::polynomial::SkewPolynomial;
use super::spec::ExtensionSpec;
use crate::coeff::{RingDescriptor, RingElement};
use crate::error::{Error, Result};

/// Multiplication engine for one presentation; caches generator reorderings
/// across calls, so reuse an instance for batches of products.
pub struct Normalizer<'a> {
    spec: &'a ExtensionSpec,
    reorder_cache: HashMap<(usize, ExponentVector), SkewPolynomial>,
}

impl<'a> Normalizer<'a> {
    pub fn new(spec: &'a ExtensionSpec) -> Self {
        Normalizer { spec, reorder_cache: HashMap::new() }
    }

    pub fn spec(&self) -> &'a ExtensionSpec {
        self.spec
    }

    fn ring(&self) -> &'a RingDescriptor {
        self.spec.ring()
    }

    fn n(&self) -> usize {
        self.spec.nvars()
    }

    /// Normal form of `x_i · x^γ`.
    pub fn reorder(&mut self, i: usize, gamma: &ExponentVector) -> SkewPolynomial {
        let key = (i, gamma.clone());
        if let Some(p) = self.reorder_cache.get(&key) {
            return p.clone();
        }
        let ring = self.ring();
        let n = self.n();
        let result = match gamma.first_nonzero() {
            Some(k) if k < i => {
                // x_i x_k x^γ' with x_i x_k = c x_k x_i + d_0 + Σ d_l x_l
                let rest = gamma.with_decremented(k);
                let rel = self.spec.relation(k, i);
                let inner = self.reorder(i, &rest);
                let mut out = self.left_mul_generator(k, &inner).scale(ring, &rel.c);
                out.add_term(ring, rest.clone(), rel.tail.constant.clone());
                for (l, d) in rel.tail.linear.iter().enumerate() {
                    if !ring.is_zero(d) {
                        let moved = self.reorder(l, &rest);
                        out.add_scaled(ring, d, &moved);
                    }
                }
                out
            }
            _ => SkewPolynomial::term(ring, gamma.with_incremented(i), ring.one()),
        };
        debug_assert_eq!(result.nvars(), n);
        self.reorder_cache.insert(key, result.clone());
        result
    }

    /// Normal form of `x_i · p`.
    pub fn left_mul_generator(&mut self, i: usize, p: &SkewPolynomial) -> SkewPolynomial {
        let ring = self.ring();
        let mut out = SkewPolynomial::zero(self.n());
        for (beta, c) in p.terms() {
            let s = self.spec.apply_sigma(i, c);
            if !ring.is_zero(&s) {
                let moved = self.reorder(i, beta);
                out.add_scaled(ring, &s, &moved);
            }
            out.add_term(ring, beta.clone(), self.spec.apply_delta(i, c));
        }
        out
    }

    /// Normal form of `x^α · p`, applying the generators right to left.
    pub fn left_mul_monomial(&mut self, alpha: &ExponentVector, p: &SkewPolynomial) -> SkewPolynomial {
        let mut acc = p.clone();
        for i in (0..self.n()).rev() {
            for _ in 0..alpha.as_slice()[i] {
                acc = self.left_mul_generator(i, &acc);
            }
        }
        acc
    }

    /// Product `f · g` without operand checks.
    pub fn mul(&mut self, f: &SkewPolynomial, g: &SkewPolynomial) -> SkewPolynomial {
        let ring = self.ring();
        let n = self.n();
        let mut out = SkewPolynomial::zero(n);
        if f.is_zero() || g.is_zero() {
            return out;
        }
        // x^α g for every α in f, sharing prefixes: x^α = x_k x^{α - e_k}
        let mut memo: HashMap<ExponentVector, SkewPolynomial> = HashMap::new();
        memo.insert(ExponentVector::zero(n), g.clone());
        for (alpha, a) in f.terms() {
            let shifted = self.shifted(alpha, &mut memo);
            out.add_scaled(ring, a, &shifted);
        }
        out
    }

    fn shifted(&mut self, alpha: &ExponentVector, memo: &mut HashMap<ExponentVector, SkewPolynomial>) -> SkewPolynomial {
        if let Some(p) = memo.get(alpha) {
            return p.clone();
        }
        let k = alpha.first_nonzero().expect("zero exponent is memoized");
        let prev = self.shifted(&alpha.with_decremented(k), memo);
        let p = self.left_mul_generator(k, &prev);
        memo.insert(alpha.clone(), p.clone());
        p
    }

    /// Product with ring and arity checks.
    pub fn multiply(&mut self, f: &SkewPolynomial, g: &SkewPolynomial) -> Result<SkewPolynomial> {
        let n = self.n();
        for p in [f, g] {
            if p.nvars() != n {
                return Err(Error::MismatchedArity(p.nvars(), n));
            }
            if !p.belongs_to(self.ring()) {
                return Err(Error::MismatchedRing);
            }
        }
        Ok(self.mul(f, g))
    }

    /// Normal form of `x^α · r`.
    pub fn times_coefficient_on_right(&mut self, alpha: &ExponentVector, r: &RingElement) -> Result<SkewPolynomial> {
        if alpha.len() != self.n() {
            return Err(Error::MismatchedArity(alpha.len(), self.n()));
        }
        if self.ring().is_zero(r) {
            return Err(Error::ZeroCoefficient);
        }
        let c = SkewPolynomial::constant(self.ring(), self.n(), r.clone());
        Ok(self.left_mul_monomial(alpha, &c))
    }

    /// Coefficient of `x^{α+β}` in `x^α · x^β`.
    pub fn c_alpha_beta(&mut self, alpha: &ExponentVector, beta: &ExponentVector) -> RingElement {
        let ring = self.ring();
        let xb = SkewPolynomial::term(ring, beta.clone(), ring.one());
        self.left_mul_monomial(alpha, &xb).coefficient(ring, &alpha.add(beta))
    }

    /// `p^k`.
    pub fn pow(&mut self, p: &SkewPolynomial, k: u32) -> SkewPolynomial {
        let mut acc = SkewPolynomial::one(self.ring(), self.n());
        for _ in 0..k {
            acc = self.mul(&acc, p);
        }
        acc
    }
}

/// `σ^α(r) = σ_1^{α_1} ∘ ... ∘ σ_n^{α_n}(r)`.
pub fn sigma_alpha(spec: &ExtensionSpec, alpha: &ExponentVector, r: &RingElement) -> RingElement {
    let mut acc = r.clone();
    for i in (0..spec.nvars()).rev() {
        acc = spec.sigma(i).apply_power(spec.ring(), alpha.as_slice()[i], &acc);
    }
    acc
}

pub fn multiply(spec: &ExtensionSpec, f: &SkewPolynomial, g: &SkewPolynomial) -> Result<SkewPolynomial> {
    Normalizer::new(spec).multiply(f, g)
}

pub fn reorder_generator(spec: &ExtensionSpec, i: usize, gamma: &ExponentVector) -> Result<SkewPolynomial> {
    if i >= spec.nvars() {
        return Err(Error::BadIndex(i + 1));
    }
    if gamma.len() != spec.nvars() {
        return Err(Error::MismatchedArity(gamma.len(), spec.nvars()));
    }
    Ok(Normalizer::new(spec).reorder(i, gamma))
}

pub fn times_coefficient_on_right(spec: &ExtensionSpec, alpha: &ExponentVector, r: &RingElement) -> Result<SkewPolynomial> {
    Normalizer::new(spec).times_coefficient_on_right(alpha, r)
}

pub fn c_alpha_beta(spec: &ExtensionSpec, alpha: &ExponentVector, beta: &ExponentVector) -> RingElement {
    Normalizer::new(spec).c_alpha_beta(alpha, beta)
}
