use std::collections::BTreeMap;

use rand::Rng;

use super::exponent::ExponentVector;
use crate::coeff::{RingDescriptor, RingElement};
use crate::error::{Error, Result};

/// An element of `A` in the standard-monomial basis: `Σ c_α x^α` with all
/// stored coefficients nonzero and coefficients written on the left.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewPolynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, RingElement>,
}

/// Leading monomial, coefficient and total degree of a nonzero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingData {
    pub monomial: ExponentVector,
    pub coefficient: RingElement,
    pub degree: u32,
}

impl SkewPolynomial {
    pub fn zero(nvars: usize) -> Self {
        SkewPolynomial { nvars, terms: BTreeMap::new() }
    }

    /// `c x^α`, or zero when `c` is zero.
    pub fn term(ring: &RingDescriptor, exp: ExponentVector, c: RingElement) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(ring, exp, c);
        p
    }

    pub fn constant(ring: &RingDescriptor, nvars: usize, c: RingElement) -> Self {
        Self::term(ring, ExponentVector::zero(nvars), c)
    }

    pub fn one(ring: &RingDescriptor, nvars: usize) -> Self {
        Self::constant(ring, nvars, ring.one())
    }

    /// The generator `x_i`.
    pub fn variable(ring: &RingDescriptor, nvars: usize, i: usize) -> Self {
        Self::term(ring, ExponentVector::unit(nvars, i), ring.one())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(ring: &RingDescriptor, nvars: usize, terms: impl IntoIterator<Item = (ExponentVector, RingElement)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::MismatchedArity(e.len(), nvars));
            }
            if !ring.contains(&c) {
                return Err(Error::MismatchedRing);
            }
            p.add_term(ring, e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in strictly descending deglex order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &RingElement)> {
        self.terms.iter().rev()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &RingElement> {
        self.terms.values()
    }

    pub fn coefficient(&self, ring: &RingDescriptor, exp: &ExponentVector) -> RingElement {
        self.terms.get(exp).cloned().unwrap_or_else(|| ring.zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(ExponentVector::degree)
    }

    pub fn leading_data(&self) -> Result<LeadingData> {
        let (monomial, coefficient) = self.terms.iter().next_back().ok_or(Error::ZeroPolynomial)?;
        Ok(LeadingData { monomial: monomial.clone(), coefficient: coefficient.clone(), degree: monomial.degree() })
    }

    /// Adds `c x^α` in place.
    pub fn add_term(&mut self, ring: &RingDescriptor, exp: ExponentVector, c: RingElement) {
        if ring.is_zero(&c) {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = ring.add(o.get(), &c);
                if ring.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, ring: &RingDescriptor, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(ring, e.clone(), c.clone());
        }
    }

    /// Adds `r · other` in place.
    pub fn add_scaled(&mut self, ring: &RingDescriptor, r: &RingElement, other: &Self) {
        if ring.is_zero(r) {
            return;
        }
        for (e, c) in &other.terms {
            self.add_term(ring, e.clone(), ring.mul(r, c));
        }
    }

    pub fn add(&self, ring: &RingDescriptor, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(ring, other);
        out
    }

    pub fn neg(&self, ring: &RingDescriptor) -> Self {
        SkewPolynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), ring.neg(c))).collect() }
    }

    pub fn sub(&self, ring: &RingDescriptor, other: &Self) -> Self {
        self.add(ring, &other.neg(ring))
    }

    /// Left scalar multiple `r · f`.
    pub fn scale(&self, ring: &RingDescriptor, r: &RingElement) -> Self {
        let mut out = Self::zero(self.nvars);
        out.add_scaled(ring, r, self);
        out
    }

    /// Applies `g` to every coefficient, dropping the ones that vanish.
    pub fn map_coefficients(&self, ring: &RingDescriptor, g: impl Fn(&RingElement) -> RingElement) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(ring, e.clone(), g(c));
        }
        out
    }

    /// True when every coefficient belongs to `ring`.
    pub fn belongs_to(&self, ring: &RingDescriptor) -> bool {
        self.terms.values().all(|c| ring.contains(c))
    }

    /// A random polynomial with at most `max_terms` terms of degree at most `max_degree`.
    pub fn random<R: Rng + ?Sized>(ring: &RingDescriptor, nvars: usize, max_degree: u32, max_terms: usize, rng: &mut R) -> Self {
        let monos = ExponentVector::all_up_to(nvars, max_degree);
        let count = rng.gen_range(1..=max_terms);
        let mut p = Self::zero(nvars);
        for _ in 0..count {
            let e = monos[rng.gen_range(0..monos.len())].clone();
            p.add_term(ring, e, ring.random_element(rng));
        }
        p
    }

    /// A random nonzero polynomial.
    pub fn random_nonzero<R: Rng + ?Sized>(ring: &RingDescriptor, nvars: usize, max_degree: u32, max_terms: usize, rng: &mut R) -> Self {
        loop {
            let p = Self::random(ring, nvars, max_degree, max_terms, rng);
            if !p.is_zero() {
                return p;
            }
        }
    }
}

pub fn leading_data(f: &SkewPolynomial) -> Result<LeadingData> {
    f.leading_data()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn leading_data_examples() {
        let r = RingDescriptor::zmod(5).unwrap();
        let f = SkewPolynomial::from_terms(&r, 2, [(ev(&[2, 0]), r.from_i64(3)), (ev(&[0, 1]), r.one())]).unwrap();
        let ld = f.leading_data().unwrap();
        assert_eq!((ld.monomial, ld.coefficient, ld.degree), (ev(&[2, 0]), r.from_i64(3), 2));

        let c = SkewPolynomial::constant(&r, 2, r.from_i64(4));
        let ld = c.leading_data().unwrap();
        assert_eq!((ld.monomial, ld.degree), (ev(&[0, 0]), 0));

        let g = SkewPolynomial::from_terms(&r, 2, [(ev(&[1, 1]), r.one()), (ev(&[0, 2]), r.one())]).unwrap();
        assert_eq!(g.leading_data().unwrap().monomial, ev(&[1, 1]));
        assert_eq!(SkewPolynomial::zero(2).leading_data(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn cancellation_removes_terms() {
        let r = RingDescriptor::zmod(6).unwrap();
        let mut f = SkewPolynomial::variable(&r, 1, 0);
        f.add_term(&r, ev(&[1]), r.from_i64(5));
        assert!(f.is_zero());
        assert_eq!(f.degree(), None);
    }
}
