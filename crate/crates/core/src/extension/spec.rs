use std::collections::BTreeMap;

use super::exponent::ExponentVector;
use super::polynomial::SkewPolynomial;
use crate::coeff::maps::test_elements;
use crate::coeff::{validate_endomorphism, validate_sigma_derivation, DerMap, EndoMap, RingDescriptor, RingElement};
use crate::error::{Error, Result};

/// The degree-one tail `d_0 + Σ d_k x_k` of a commutation relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tail {
    pub constant: RingElement,
    pub linear: Vec<RingElement>,
}

impl Tail {
    pub fn zero(ring: &RingDescriptor, n: usize) -> Self {
        Tail { constant: ring.zero(), linear: vec![ring.zero(); n] }
    }

    pub fn constant(ring: &RingDescriptor, n: usize, d0: RingElement) -> Self {
        Tail { constant: d0, linear: vec![ring.zero(); n] }
    }

    /// Reads a tail off a polynomial of degree at most one.
    pub fn from_polynomial(ring: &RingDescriptor, p: &SkewPolynomial) -> Result<Self> {
        if p.degree().is_some_and(|d| d > 1) {
            return Err(Error::InvalidExtension("relation tails must have degree at most 1".into()));
        }
        let n = p.nvars();
        Ok(Tail {
            constant: p.coefficient(ring, &ExponentVector::zero(n)),
            linear: (0..n).map(|k| p.coefficient(ring, &ExponentVector::unit(n, k))).collect(),
        })
    }

    pub fn to_polynomial(&self, ring: &RingDescriptor) -> SkewPolynomial {
        let n = self.linear.len();
        let mut p = SkewPolynomial::constant(ring, n, self.constant.clone());
        for (k, d) in self.linear.iter().enumerate() {
            p.add_term(ring, ExponentVector::unit(n, k), d.clone());
        }
        p
    }

    pub fn is_zero(&self, ring: &RingDescriptor) -> bool {
        ring.is_zero(&self.constant) && self.linear.iter().all(|d| ring.is_zero(d))
    }
}

/// The relation `x_j x_i = c x_i x_j + tail` for a pair `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub c: RingElement,
    pub tail: Tail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ExtensionFlags {
    pub quasi_commutative: bool,
    pub derivation_type: bool,
    pub endomorphism_type: bool,
    pub automorphism_type: bool,
    pub bijective: bool,
    pub sigma_commutative: bool,
}

/// A validated presentation `(R, σ_i, δ_i, c_{i,j}, tails)` of a skew PBW
/// extension. Variable indices are 0-based.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtensionSpec {
    ring: RingDescriptor,
    names: Vec<String>,
    sigma: Vec<EndoMap>,
    delta: Vec<DerMap>,
    relations: BTreeMap<(usize, usize), Relation>,
    sigma_bijective: Vec<bool>,
    flags: ExtensionFlags,
}

#[derive(Debug, Clone)]
pub struct ExtensionBuilder {
    ring: RingDescriptor,
    n: usize,
    names: Option<Vec<String>>,
    sigma: Vec<EndoMap>,
    delta: Vec<DerMap>,
    relations: BTreeMap<(usize, usize), Relation>,
}

pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl ExtensionBuilder {
    pub fn names(mut self, names: Vec<String>) -> Self {
        self.names = Some(names);
        self
    }

    pub fn sigma(mut self, i: usize, m: EndoMap) -> Self {
        if i < self.n {
            self.sigma[i] = m;
        }
        self
    }

    pub fn delta(mut self, i: usize, d: DerMap) -> Self {
        if i < self.n {
            self.delta[i] = d;
        }
        self
    }

    /// Sets `x_j x_i = c x_i x_j + tail`; requires `i < j`.
    pub fn relation(mut self, i: usize, j: usize, c: RingElement, tail: Tail) -> Self {
        self.relations.insert((i, j), Relation { c, tail });
        self
    }

    pub fn build(self) -> Result<ExtensionSpec> {
        let ExtensionBuilder { ring, n, names, sigma, delta, mut relations } = self;
        if n == 0 {
            return Err(Error::InvalidExtension("at least one variable is required".into()));
        }
        let names = names.unwrap_or_else(|| default_names(n));
        if names.len() != n {
            return Err(Error::InvalidExtension(format!("{} names given for {n} variables", names.len())));
        }
        for (k, name) in names.iter().enumerate() {
            if !is_identifier(name) || name == "t" {
                return Err(Error::InvalidExtension(format!("bad variable name '{name}'")));
            }
            if names[..k].contains(name) {
                return Err(Error::InvalidExtension(format!("duplicate variable name '{name}'")));
            }
        }
        for &(i, j) in relations.keys() {
            if i >= j {
                return Err(Error::InvalidExtension(format!("relation keys need i < j, got ({}, {})", i + 1, j + 1)));
            }
            if j >= n {
                return Err(Error::BadIndex(j + 1));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                relations
                    .entry((i, j))
                    .or_insert_with(|| Relation { c: ring.one(), tail: Tail::zero(&ring, n) });
            }
        }
        for (&(i, j), rel) in &relations {
            if rel.tail.linear.len() != n {
                return Err(Error::MismatchedArity(rel.tail.linear.len(), n));
            }
            let all_in = std::iter::once(&rel.c).chain(std::iter::once(&rel.tail.constant)).chain(&rel.tail.linear);
            if all_in.into_iter().any(|e| !ring.contains(e)) {
                return Err(Error::MismatchedRing);
            }
            if ring.is_zero(&rel.c) {
                return Err(Error::InvalidExtension(format!("c_{{{},{}}} must be nonzero", i + 1, j + 1)));
            }
        }
        let sigma: Vec<EndoMap> = sigma.into_iter().map(|m| m.normalized(&ring)).collect();
        let delta: Vec<DerMap> = delta.into_iter().map(|d| d.normalized(&ring)).collect();
        let mut sigma_bijective = Vec::with_capacity(n);
        for (i, (s, d)) in sigma.iter().zip(&delta).enumerate() {
            let rep = validate_endomorphism(&ring, s)?;
            if !rep.is_endo || !rep.injective {
                return Err(Error::InvalidExtension(format!("sigma_{} is not an injective endomorphism", i + 1)));
            }
            if !validate_sigma_derivation(&ring, s, d)?.is_sigma_derivation {
                return Err(Error::InvalidExtension(format!("delta_{} is not a sigma_{}-derivation", i + 1, i + 1)));
            }
            sigma_bijective.push(rep.bijective);
        }
        let mut spec = ExtensionSpec { ring, names, sigma, delta, relations, sigma_bijective, flags: ExtensionFlags::default() };
        spec.flags = spec.compute_flags();
        Ok(spec)
    }
}

impl ExtensionSpec {
    /// Starts a presentation with `σ = id`, `δ = 0` and commuting variables.
    pub fn builder(ring: RingDescriptor, n: usize) -> ExtensionBuilder {
        ExtensionBuilder {
            ring,
            n,
            names: None,
            sigma: vec![EndoMap::Identity; n],
            delta: vec![DerMap::Zero; n],
            relations: BTreeMap::new(),
        }
    }

    /// A builder preloaded with this presentation.
    pub fn to_builder(&self) -> ExtensionBuilder {
        ExtensionBuilder {
            ring: self.ring.clone(),
            n: self.nvars(),
            names: Some(self.names.clone()),
            sigma: self.sigma.clone(),
            delta: self.delta.clone(),
            relations: self.relations.clone(),
        }
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn sigma(&self, i: usize) -> &EndoMap {
        &self.sigma[i]
    }

    pub fn delta(&self, i: usize) -> &DerMap {
        &self.delta[i]
    }

    pub fn sigmas(&self) -> &[EndoMap] {
        &self.sigma
    }

    pub fn deltas(&self) -> &[DerMap] {
        &self.delta
    }

    pub fn sigma_is_bijective(&self, i: usize) -> bool {
        self.sigma_bijective[i]
    }

    /// The relation for `i < j`.
    pub fn relation(&self, i: usize, j: usize) -> &Relation {
        &self.relations[&(i, j)]
    }

    pub fn relations(&self) -> impl Iterator<Item = (&(usize, usize), &Relation)> {
        self.relations.iter()
    }

    /// `σ_i(r)`.
    pub fn apply_sigma(&self, i: usize, r: &RingElement) -> RingElement {
        self.sigma[i].apply(&self.ring, r)
    }

    /// `δ_i(r)`.
    pub fn apply_delta(&self, i: usize, r: &RingElement) -> RingElement {
        self.delta[i].apply(&self.ring, &self.sigma[i], r)
    }

    pub fn flags(&self) -> ExtensionFlags {
        self.flags
    }

    fn compute_flags(&self) -> ExtensionFlags {
        let ring = &self.ring;
        let derivation_type = self.sigma.iter().all(|s| s.is_identity(ring));
        let endomorphism_type = self.delta.iter().all(|d| d.is_zero(ring));
        let tails_zero = self.relations.values().all(|r| r.tail.is_zero(ring));
        let all_bijective = self.sigma_bijective.iter().all(|&b| b);
        let c_invertible = self.relations.values().all(|r| ring.is_unit(&r.c));
        let elems = test_elements(ring);
        let n = self.nvars();
        let sigma_commutative = (0..n).all(|i| {
            (i + 1..n).all(|j| {
                elems
                    .iter()
                    .all(|r| self.apply_sigma(i, &self.apply_sigma(j, r)) == self.apply_sigma(j, &self.apply_sigma(i, r)))
            })
        });
        ExtensionFlags {
            quasi_commutative: endomorphism_type && tails_zero,
            derivation_type,
            endomorphism_type,
            automorphism_type: endomorphism_type && all_bijective,
            bijective: all_bijective && c_invertible,
            sigma_commutative,
        }
    }
}

/// Type flags of a presentation.
pub fn classify_extension(spec: &ExtensionSpec) -> ExtensionFlags {
    spec.flags()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_relations_commute() {
        let r = RingDescriptor::zmod(6).unwrap();
        let e = ExtensionSpec::builder(r.clone(), 2).build().unwrap();
        assert_eq!(e.relation(0, 1).c, r.one());
        let f = e.flags();
        assert!(f.derivation_type && f.endomorphism_type && f.quasi_commutative && f.bijective && f.sigma_commutative);
    }

    #[test]
    fn zero_constant_is_rejected() {
        let r = RingDescriptor::zmod(5).unwrap();
        let res = ExtensionSpec::builder(r.clone(), 2).relation(0, 1, r.zero(), Tail::zero(&r, 2)).build();
        assert!(matches!(res, Err(Error::InvalidExtension(_))));
    }

    #[test]
    fn non_injective_sigma_is_rejected() {
        let r = RingDescriptor::quotient_poly(2, vec![0, 0, 1]).unwrap();
        let s = EndoMap::from_t_image(&r, r.zero()).unwrap();
        assert!(ExtensionSpec::builder(r, 1).sigma(0, s).build().is_err());
    }

    #[test]
    fn names_are_checked() {
        let r = RingDescriptor::zmod(5).unwrap();
        assert!(ExtensionSpec::builder(r.clone(), 2).names(vec!["a".into(), "a".into()]).build().is_err());
        assert!(ExtensionSpec::builder(r, 1).names(vec!["t".into()]).build().is_err());
    }
}
