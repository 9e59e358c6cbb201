//! Extended ideals `IA` and the quotient `A/IA`.

use crate::coeff::{RingDescriptor, RingElement};
use crate::error::{Error, Result};
use crate::extension::{ExtensionSpec, SkewPolynomial, Tail};
use crate::ideal::{invariance, quotient_system, FiniteIdeal, SigmaDeltaSystem};

/// An ideal of the coefficient ring: an explicit ideal of a finite ring, or
/// a principal ideal `(g)` of `Q` or `K[t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseIdeal {
    Finite(FiniteIdeal),
    Principal(RingElement),
}

impl BaseIdeal {
    pub fn contains(&self, ring: &RingDescriptor, r: &RingElement) -> bool {
        match self {
            BaseIdeal::Finite(i) => i.contains(ring, r),
            BaseIdeal::Principal(g) => ring.divides(g, r).unwrap_or(false),
        }
    }

    pub fn describe(&self, ring: &RingDescriptor) -> String {
        match self {
            BaseIdeal::Finite(i) => i.describe(ring),
            BaseIdeal::Principal(g) => format!("({})", ring.format_element(g)),
        }
    }

    pub fn is_whole(&self, ring: &RingDescriptor) -> bool {
        match self {
            BaseIdeal::Finite(i) => i.is_whole(),
            BaseIdeal::Principal(g) => ring.is_unit(g),
        }
    }
}

/// `IA` for an ideal `I` of the coefficient ring of `spec`.
#[derive(Debug, Clone)]
pub struct ExtendedIdeal<'a> {
    pub spec: &'a ExtensionSpec,
    pub base: BaseIdeal,
}

impl ExtendedIdeal<'_> {
    pub fn contains(&self, f: &SkewPolynomial) -> Result<bool> {
        extended_membership(self.spec, &self.base, f)
    }
}

/// `f ∈ IA` iff every coefficient of `f` lies in `I`.
pub fn extended_membership(spec: &ExtensionSpec, ideal: &BaseIdeal, f: &SkewPolynomial) -> Result<bool> {
    let ring = spec.ring();
    if f.nvars() != spec.nvars() || !f.belongs_to(ring) {
        return Err(Error::MismatchedRing);
    }
    if let BaseIdeal::Finite(i) = ideal {
        if Some(i.mask().len()) != ring.order() {
            return Err(Error::MismatchedRing);
        }
    }
    Ok(f.coefficients().all(|c| ideal.contains(ring, c)))
}

fn require_invariant(spec: &ExtensionSpec, i: &FiniteIdeal) -> Result<()> {
    let flags = invariance(spec.ring(), i, &SigmaDeltaSystem::from_spec(spec))?;
    if !flags.sigma_invariant || !flags.delta_invariant {
        return Err(Error::NotInvariant("ideal must be (sigma,delta)-invariant".into()));
    }
    Ok(())
}

/// Verifies `IA ∩ R = I` element by element.
pub fn contract_check(spec: &ExtensionSpec, i: &FiniteIdeal) -> Result<bool> {
    require_invariant(spec, i)?;
    let ring = spec.ring();
    let base = BaseIdeal::Finite(i.clone());
    for r in ring.elements()? {
        let as_poly = SkewPolynomial::constant(ring, spec.nvars(), r.clone());
        if extended_membership(spec, &base, &as_poly)? != i.contains(ring, &r) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The presentation of `A/IA` over `R/I`.
pub fn quotient_extension(spec: &ExtensionSpec, i: &FiniteIdeal) -> Result<ExtensionSpec> {
    let ring = spec.ring();
    if i.is_whole() {
        return Err(Error::ImproperIdeal);
    }
    require_invariant(spec, i)?;
    let system = SigmaDeltaSystem::from_spec(spec);
    for (k, s) in spec.sigmas().iter().enumerate() {
        let single = SigmaDeltaSystem { sigmas: vec![s.clone()], deltas: vec![crate::coeff::DerMap::Zero] };
        if !invariance(ring, i, &single)?.sigma_stable {
            return Err(Error::NotStable(k + 1));
        }
    }
    let (quotient, induced) = quotient_system(ring, i, &system)?;
    let RingDescriptor::Quotient(q) = &quotient else { unreachable!("quotient ring") };
    let mut b = ExtensionSpec::builder(quotient.clone(), spec.nvars()).names(spec.names().to_vec());
    for (k, (s, d)) in induced.sigmas.into_iter().zip(induced.deltas).enumerate() {
        b = b.sigma(k, s).delta(k, d);
    }
    for (&(a, c), rel) in spec.relations() {
        let tail = Tail { constant: q.project(&rel.tail.constant), linear: rel.tail.linear.iter().map(|d| q.project(d)).collect() };
        b = b.relation(a, c, q.project(&rel.c), tail);
    }
    b.build()
}
