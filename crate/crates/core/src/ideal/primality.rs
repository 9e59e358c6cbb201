use super::{enumerate_ideals, invariance, product_within, FiniteIdeal, IndexArith, InvarianceFlags, SigmaDeltaSystem};
use crate::coeff::{RingDescriptor, RingElement};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrimalityMode {
    Prime,
    Semiprime,
    SigmaPrime,
    DeltaPrime,
    SigmaDeltaPrime,
}

impl PrimalityMode {
    /// Whether an ideal with these invariance flags belongs to the test class.
    fn admits(self, f: &InvarianceFlags) -> bool {
        match self {
            PrimalityMode::Prime | PrimalityMode::Semiprime => true,
            PrimalityMode::SigmaPrime => f.sigma_invariant,
            PrimalityMode::DeltaPrime => f.delta_invariant,
            PrimalityMode::SigmaDeltaPrime => f.sigma_invariant && f.delta_invariant,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PrimalityMode::Prime => "prime",
            PrimalityMode::Semiprime => "semiprime",
            PrimalityMode::SigmaPrime => "sigma-prime",
            PrimalityMode::DeltaPrime => "delta-prime",
            PrimalityMode::SigmaDeltaPrime => "(sigma,delta)-prime",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimalityOutcome {
    pub holds: bool,
    /// `(K, L)` in the mode's class with `K L ⊆ I`, `K ⊄ I`, `L ⊄ I`.
    pub witness: Option<(FiniteIdeal, FiniteIdeal)>,
}

/// Brute-force primality test of `I` relative to the ideals admitted by `mode`.
pub fn primality(ring: &RingDescriptor, i: &FiniteIdeal, system: &SigmaDeltaSystem, mode: PrimalityMode) -> Result<PrimalityOutcome> {
    let lattice = enumerate_ideals(ring)?;
    primality_in(ring, &lattice, i, system, mode)
}

/// As [`primality`], over a precomputed ideal lattice.
pub fn primality_in(
    ring: &RingDescriptor,
    lattice: &[FiniteIdeal],
    i: &FiniteIdeal,
    system: &SigmaDeltaSystem,
    mode: PrimalityMode,
) -> Result<PrimalityOutcome> {
    if Some(i.mask().len()) != ring.order() {
        return Err(Error::MismatchedRing);
    }
    if i.is_whole() {
        return Err(Error::ImproperIdeal);
    }
    let own = invariance(ring, i, system)?;
    if !mode.admits(&own) {
        return Err(Error::NotInvariant(format!("ideal is outside the {} test class", mode.name())));
    }
    let mut candidates = Vec::new();
    for k in lattice.iter().rev() {
        if !k.is_subset(i) && mode.admits(&invariance(ring, k, system)?) {
            candidates.push(k);
        }
    }
    for (a, k) in candidates.iter().enumerate() {
        let partners: &[&FiniteIdeal] = if mode == PrimalityMode::Semiprime { &candidates[a..=a] } else { &candidates };
        for l in partners {
            if product_within(ring, k, l, i) {
                return Ok(PrimalityOutcome { holds: false, witness: Some(((*k).clone(), (*l).clone())) });
            }
        }
    }
    Ok(PrimalityOutcome { holds: true, witness: None })
}

/// Intersection of all prime ideals.
pub fn prime_radical(ring: &RingDescriptor) -> Result<FiniteIdeal> {
    let lattice = enumerate_ideals(ring)?;
    let trivial = SigmaDeltaSystem::trivial();
    let mut mask = vec![true; ring.order().ok_or(Error::NotEnumerable)?];
    for p in lattice.iter().filter(|p| p.is_proper()) {
        if primality_in(ring, &lattice, p, &trivial, PrimalityMode::Prime)?.holds {
            for (m, &q) in mask.iter_mut().zip(p.mask()) {
                *m &= q;
            }
        }
    }
    Ok(FiniteIdeal::from_mask(mask))
}

/// `S(I)`: elements whose class modulo `I` is a non-zero-divisor.
pub fn regular_set(ring: &RingDescriptor, i: &FiniteIdeal) -> Result<Vec<RingElement>> {
    if Some(i.mask().len()) != ring.order() {
        return Err(Error::MismatchedRing);
    }
    if i.is_whole() {
        return Err(Error::ImproperIdeal);
    }
    let ar = IndexArith::new(ring)?;
    Ok((0..ar.len())
        .filter(|&a| (0..ar.len()).all(|b| !i.contains_index(ar.mul(a, b)) || i.contains_index(b)))
        .map(|a| ar.elems[a].clone())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{DerMap, EndoMap};
    use crate::ideal::ideal_closure;

    #[test]
    fn zero_ideal_of_z6_is_not_prime() {
        let r = RingDescriptor::zmod(6).unwrap();
        let zero = FiniteIdeal::zero(&r).unwrap();
        let out = primality(&r, &zero, &SigmaDeltaSystem::trivial(), PrimalityMode::Prime).unwrap();
        assert!(!out.holds);
        let (k, l) = out.witness.unwrap();
        assert_eq!((k.describe(&r), l.describe(&r)), ("(2)".to_string(), "(3)".to_string()));
        assert!(primality(&r, &zero, &SigmaDeltaSystem::trivial(), PrimalityMode::Semiprime).unwrap().holds);
    }

    #[test]
    fn swap_makes_zero_sigma_prime() {
        let p = RingDescriptor::product(vec![3, 3]).unwrap();
        let swap = EndoMap::from_fn(&p, |e| match e {
            RingElement::Tuple(v) => RingElement::Tuple(vec![v[1], v[0]]),
            _ => unreachable!(),
        })
        .unwrap();
        let sys = SigmaDeltaSystem::new(&p, vec![swap], vec![DerMap::Zero]).unwrap();
        let zero = FiniteIdeal::zero(&p).unwrap();
        assert!(primality(&p, &zero, &sys, PrimalityMode::SigmaPrime).unwrap().holds);
        assert!(!primality(&p, &zero, &sys, PrimalityMode::Prime).unwrap().holds);
    }

    #[test]
    fn d_dt_makes_zero_delta_prime() {
        let r = RingDescriptor::quotient_poly(2, vec![0, 0, 1]).unwrap();
        let d = DerMap::from_t_image(&r, &EndoMap::Identity, r.one()).unwrap();
        let sys = SigmaDeltaSystem::new(&r, vec![EndoMap::Identity], vec![d]).unwrap();
        let zero = FiniteIdeal::zero(&r).unwrap();
        assert!(primality(&r, &zero, &sys, PrimalityMode::DeltaPrime).unwrap().holds);
        let t_ideal = ideal_closure(&r, &[r.t().unwrap()]).unwrap();
        assert!(matches!(primality(&r, &t_ideal, &sys, PrimalityMode::DeltaPrime), Err(Error::NotInvariant(_))));
        let whole = FiniteIdeal::whole(&r).unwrap();
        assert_eq!(primality(&r, &whole, &sys, PrimalityMode::Prime), Err(Error::ImproperIdeal));
    }

    #[test]
    fn radicals() {
        let r12 = RingDescriptor::zmod(12).unwrap();
        assert_eq!(prime_radical(&r12).unwrap(), ideal_closure(&r12, &[r12.from_i64(6)]).unwrap());
        assert!(prime_radical(&RingDescriptor::zmod(6).unwrap()).unwrap().is_zero());
        assert!(prime_radical(&RingDescriptor::zmod(7).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn regular_sets() {
        let r12 = RingDescriptor::zmod(12).unwrap();
        let six = ideal_closure(&r12, &[r12.from_i64(6)]).unwrap();
        let want: Vec<RingElement> = [1, 5, 7, 11].iter().map(|&k| r12.from_i64(k)).collect();
        assert_eq!(regular_set(&r12, &six).unwrap(), want);
        let r6 = RingDescriptor::zmod(6).unwrap();
        assert_eq!(regular_set(&r6, &FiniteIdeal::zero(&r6).unwrap()).unwrap(), vec![r6.one(), r6.from_i64(5)]);
        let f = RingDescriptor::zmod(5).unwrap();
        assert_eq!(regular_set(&f, &FiniteIdeal::zero(&f).unwrap()).unwrap().len(), 4);
    }
}
