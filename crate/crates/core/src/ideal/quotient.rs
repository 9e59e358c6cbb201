use super::{invariance, FiniteIdeal, SigmaDeltaSystem};
use crate::coeff::{DerMap, EndoMap, RingDescriptor, RingElement};
use crate::error::{Error, Result};

/// `R/I` with the induced maps `σ̄(r + I) = σ(r) + I`, `δ̄(r + I) = δ(r) + I`.
pub fn quotient_system(ring: &RingDescriptor, i: &FiniteIdeal, system: &SigmaDeltaSystem) -> Result<(RingDescriptor, SigmaDeltaSystem)> {
    if Some(i.mask().len()) != ring.order() {
        return Err(Error::MismatchedRing);
    }
    if i.is_whole() {
        return Err(Error::ImproperIdeal);
    }
    let flags = invariance(ring, i, system)?;
    if !flags.sigma_invariant || !flags.delta_invariant {
        return Err(Error::NotInvariant("quotients need a (sigma,delta)-invariant ideal".into()));
    }
    let quotient = RingDescriptor::quotient(ring.clone(), i.mask().to_vec())?;
    let RingDescriptor::Quotient(q) = &quotient else { unreachable!() };
    let reps = quotient.elements()?;
    let mut sigmas = Vec::with_capacity(system.len());
    let mut deltas = Vec::with_capacity(system.len());
    for (s, d) in system.sigmas.iter().zip(&system.deltas) {
        let sbar = EndoMap::Table(reps.iter().map(|r| q.project(&s.apply(ring, r))).collect()).normalized(&quotient);
        let dbar = DerMap::Table(reps.iter().map(|r| q.project(&d.apply(ring, s, r))).collect()).normalized(&quotient);
        sigmas.push(sbar);
        deltas.push(dbar);
    }
    let induced = SigmaDeltaSystem::new(&quotient, sigmas, deltas)?;
    Ok((quotient, induced))
}

/// For `K[t]`: whether `(f)` is Σ-invariant and Δ-invariant, i.e. whether
/// `f` divides every `σ_i(f)` and every `δ_i(f)`.
pub fn principal_invariance(ring: &RingDescriptor, f: &RingElement, system: &SigmaDeltaSystem) -> Result<(bool, bool)> {
    if !matches!(ring, RingDescriptor::UniPoly(_) | RingDescriptor::Rationals) || !ring.contains(f) {
        return Err(Error::MismatchedRing);
    }
    let divides = |a: &RingElement| ring.divides(f, a).expect("principal ideal ring");
    let sigma = system.sigmas.iter().all(|s| divides(&s.apply(ring, f)));
    let delta = system.sigmas.iter().zip(&system.deltas).all(|(s, d)| divides(&d.apply(ring, s, f)));
    Ok((sigma, delta))
}
