//! Ideals of finite commutative rings and their behaviour under a system of
//! endomorphisms and σ-derivations.

pub mod chain;
pub mod primality;
pub mod quotient;

use std::collections::BTreeSet;

use crate::coeff::{validate_endomorphism, validate_sigma_derivation, DerMap, EndoMap, RingDescriptor, RingElement};
use crate::error::{Error, Result};
use crate::extension::ExtensionSpec;

pub use chain::{check_chain_properties, ideal_chain, sigma_monoid_closure, ChainProperties, IdealChain};
pub use primality::{prime_radical, primality, primality_in, regular_set, PrimalityMode, PrimalityOutcome};
pub use quotient::{principal_invariance, quotient_system};

/// An ideal of a finite ring, stored as a membership mask over the
/// canonical enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteIdeal {
    mask: Vec<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Intersection,
}

impl FiniteIdeal {
    pub fn zero(ring: &RingDescriptor) -> Result<Self> {
        let n = ring.order().ok_or(Error::NotEnumerable)?;
        let mut mask = vec![false; n];
        mask[0] = true;
        Ok(FiniteIdeal { mask })
    }

    pub fn whole(ring: &RingDescriptor) -> Result<Self> {
        let n = ring.order().ok_or(Error::NotEnumerable)?;
        Ok(FiniteIdeal { mask: vec![true; n] })
    }

    /// Wraps a membership mask; the caller guarantees it is an ideal.
    pub(crate) fn from_mask(mask: Vec<bool>) -> Self {
        FiniteIdeal { mask }
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn contains(&self, ring: &RingDescriptor, e: &RingElement) -> bool {
        self.mask[ring.index_of(e)]
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.mask[i]
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i)
    }

    pub fn elements(&self, ring: &RingDescriptor) -> Vec<RingElement> {
        self.indices().map(|i| ring.element_at(i)).collect()
    }

    pub fn cardinality(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }

    pub fn is_zero(&self) -> bool {
        self.cardinality() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.mask.iter().all(|&m| m)
    }

    pub fn is_proper(&self) -> bool {
        !self.is_whole()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.mask.iter().zip(&other.mask).all(|(&a, &b)| !a || b)
    }

    /// A small generating set, chosen greedily in enumeration order.
    pub fn generators(&self, ring: &RingDescriptor) -> Vec<RingElement> {
        let mut gens = Vec::new();
        let mut span = FiniteIdeal::zero(ring).expect("finite");
        for i in self.indices() {
            if !span.mask[i] {
                gens.push(ring.element_at(i));
                span = ideal_closure(ring, &gens).expect("finite");
            }
        }
        gens
    }

    /// Text form such as `(2)`, `(0)` or `(t, 2)`.
    pub fn describe(&self, ring: &RingDescriptor) -> String {
        let gens = self.generators(ring);
        if gens.is_empty() {
            return "(0)".into();
        }
        let parts: Vec<String> = gens.iter().map(|g| ring.format_element(g)).collect();
        format!("({})", parts.join(", "))
    }

    fn check_ring(&self, ring: &RingDescriptor) -> Result<()> {
        if Some(self.mask.len()) != ring.order() {
            return Err(Error::MismatchedRing);
        }
        Ok(())
    }
}

/// Index-level arithmetic of a finite ring.
pub(crate) struct IndexArith<'a> {
    pub ring: &'a RingDescriptor,
    pub elems: Vec<RingElement>,
}

impl<'a> IndexArith<'a> {
    pub fn new(ring: &'a RingDescriptor) -> Result<Self> {
        Ok(IndexArith { ring, elems: ring.elements()? })
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.ring.index_of(&self.ring.add(&self.elems[a], &self.elems[b]))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.ring.index_of(&self.ring.mul(&self.elems[a], &self.elems[b]))
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    /// Additive closure of `seeds` (which must already be closed under
    /// multiplication by ring elements).
    pub fn additive_closure(&self, seeds: &BTreeSet<usize>) -> Vec<bool> {
        let mut mask = vec![false; self.len()];
        mask[0] = true;
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &s in seeds {
                let y = self.add(x, s);
                if !mask[y] {
                    mask[y] = true;
                    frontier.push(y);
                }
            }
        }
        mask
    }
}

/// Smallest ideal containing `gens`.
pub fn ideal_closure(ring: &RingDescriptor, gens: &[RingElement]) -> Result<FiniteIdeal> {
    if gens.iter().any(|g| !ring.contains(g)) {
        return Err(Error::MismatchedRing);
    }
    let ar = IndexArith::new(ring)?;
    let seeds: BTreeSet<usize> = gens
        .iter()
        .flat_map(|g| {
            let gi = ring.index_of(g);
            (0..ar.len()).map(move |r| (r, gi))
        })
        .map(|(r, g)| ar.mul(r, g))
        .collect();
    Ok(FiniteIdeal { mask: ar.additive_closure(&seeds) })
}

/// Every ideal exactly once, ordered by cardinality and then by member indices.
pub fn enumerate_ideals(ring: &RingDescriptor) -> Result<Vec<FiniteIdeal>> {
    let ar = IndexArith::new(ring)?;
    let mut found: BTreeSet<Vec<bool>> = BTreeSet::new();
    for g in &ar.elems {
        found.insert(ideal_closure(ring, std::slice::from_ref(g))?.mask);
    }
    loop {
        let current: Vec<Vec<bool>> = found.iter().cloned().collect();
        let mut grew = false;
        for (k, a) in current.iter().enumerate() {
            for b in &current[k + 1..] {
                let s = sum_masks(&ar, a, b);
                grew |= found.insert(s);
            }
        }
        if !grew {
            break;
        }
    }
    let mut out: Vec<FiniteIdeal> = found.into_iter().map(|mask| FiniteIdeal { mask }).collect();
    out.sort_by_key(|i| (i.cardinality(), i.indices().collect::<Vec<_>>()));
    Ok(out)
}

fn sum_masks(ar: &IndexArith<'_>, a: &[bool], b: &[bool]) -> Vec<bool> {
    let mut mask = vec![false; ar.len()];
    for (x, _) in a.iter().enumerate().filter(|(_, &m)| m) {
        for (y, _) in b.iter().enumerate().filter(|(_, &m)| m) {
            mask[ar.add(x, y)] = true;
        }
    }
    mask
}

/// Sum, product or intersection of two ideals.
pub fn ideal_combine(ring: &RingDescriptor, i: &FiniteIdeal, j: &FiniteIdeal, op: IdealOp) -> Result<FiniteIdeal> {
    i.check_ring(ring)?;
    j.check_ring(ring)?;
    let ar = IndexArith::new(ring)?;
    Ok(match op {
        IdealOp::Sum => FiniteIdeal { mask: sum_masks(&ar, &i.mask, &j.mask) },
        IdealOp::Intersection => FiniteIdeal { mask: i.mask.iter().zip(&j.mask).map(|(&a, &b)| a && b).collect() },
        IdealOp::Product => {
            let seeds: BTreeSet<usize> = i.indices().flat_map(|a| j.indices().map(move |b| (a, b))).map(|(a, b)| ar.mul(a, b)).collect();
            FiniteIdeal { mask: ar.additive_closure(&seeds) }
        }
    })
}

/// True iff `K L ⊆ I`, without forming the product.
pub fn product_within(ring: &RingDescriptor, k: &FiniteIdeal, l: &FiniteIdeal, i: &FiniteIdeal) -> bool {
    k.indices().all(|a| {
        let ea = ring.element_at(a);
        l.indices().all(|b| i.mask[ring.index_of(&ring.mul(&ea, &ring.element_at(b)))])
    })
}

/// `{a : a x = 0 for all x in I}`.
pub fn annihilator(ring: &RingDescriptor, i: &FiniteIdeal) -> Result<FiniteIdeal> {
    i.check_ring(ring)?;
    let ar = IndexArith::new(ring)?;
    let mask = (0..ar.len()).map(|a| i.indices().all(|x| ar.mul(a, x) == 0)).collect();
    Ok(FiniteIdeal { mask })
}

/// A list of pairs `(σ_i, δ_i)` acting on a ring.
#[derive(Debug, Clone, PartialEq)]
pub struct SigmaDeltaSystem {
    pub sigmas: Vec<EndoMap>,
    pub deltas: Vec<DerMap>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvarianceFlags {
    pub sigma_invariant: bool,
    pub delta_invariant: bool,
    pub sigma_stable: bool,
}

impl SigmaDeltaSystem {
    pub fn new(ring: &RingDescriptor, sigmas: Vec<EndoMap>, deltas: Vec<DerMap>) -> Result<Self> {
        if sigmas.len() != deltas.len() {
            return Err(Error::MismatchedArity(sigmas.len(), deltas.len()));
        }
        for (i, (s, d)) in sigmas.iter().zip(&deltas).enumerate() {
            if !validate_endomorphism(ring, s)?.is_endo {
                return Err(Error::InvalidExtension(format!("sigma_{} is not an endomorphism", i + 1)));
            }
            if !validate_sigma_derivation(ring, s, d)?.is_sigma_derivation {
                return Err(Error::InvalidExtension(format!("delta_{} is not a sigma_{}-derivation", i + 1, i + 1)));
            }
        }
        Ok(SigmaDeltaSystem { sigmas, deltas })
    }

    /// The single pair `(id, 0)`.
    pub fn trivial() -> Self {
        SigmaDeltaSystem { sigmas: vec![EndoMap::Identity], deltas: vec![DerMap::Zero] }
    }

    pub fn from_spec(spec: &ExtensionSpec) -> Self {
        SigmaDeltaSystem { sigmas: spec.sigmas().to_vec(), deltas: spec.deltas().to_vec() }
    }

    pub fn len(&self) -> usize {
        self.sigmas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigmas.is_empty()
    }

    /// Index tables of every `σ_i`.
    pub(crate) fn sigma_tables(&self, ar: &IndexArith<'_>) -> Vec<Vec<usize>> {
        self.sigmas.iter().map(|s| ar.elems.iter().map(|e| ar.ring.index_of(&s.apply(ar.ring, e))).collect()).collect()
    }

    /// Index tables of every `δ_i`.
    pub(crate) fn delta_tables(&self, ar: &IndexArith<'_>) -> Vec<Vec<usize>> {
        self.sigmas
            .iter()
            .zip(&self.deltas)
            .map(|(s, d)| ar.elems.iter().map(|e| ar.ring.index_of(&d.apply(ar.ring, s, e))).collect())
            .collect()
    }
}

fn maps_into(tables: &[Vec<usize>], i: &FiniteIdeal) -> bool {
    tables.iter().all(|t| i.indices().all(|x| i.mask[t[x]]))
}

/// Σ- and Δ-invariance, and `σ_i(I) = I` for all `i`.
pub fn invariance(ring: &RingDescriptor, i: &FiniteIdeal, system: &SigmaDeltaSystem) -> Result<InvarianceFlags> {
    i.check_ring(ring)?;
    let ar = IndexArith::new(ring)?;
    let sig = system.sigma_tables(&ar);
    let del = system.delta_tables(&ar);
    let sigma_stable = sig.iter().all(|t| {
        let mut image = vec![false; ar.len()];
        for x in i.indices() {
            image[t[x]] = true;
        }
        image == i.mask
    });
    Ok(InvarianceFlags { sigma_invariant: maps_into(&sig, i), delta_invariant: maps_into(&del, i), sigma_stable })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> RingDescriptor {
        RingDescriptor::zmod(n).unwrap()
    }

    fn principal(r: &RingDescriptor, k: i64) -> FiniteIdeal {
        ideal_closure(r, &[r.from_i64(k)]).unwrap()
    }

    #[test]
    fn closure_examples() {
        let r = z(6);
        let i = ideal_closure(&r, &[r.from_i64(2), r.from_i64(4)]).unwrap();
        assert_eq!(i.elements(&r), vec![r.zero(), r.from_i64(2), r.from_i64(4)]);
        assert!(ideal_closure(&r, &[]).unwrap().is_zero());
        assert!(ideal_closure(&r, &[r.one()]).unwrap().is_whole());
    }

    #[test]
    fn lattice_sizes() {
        assert_eq!(enumerate_ideals(&z(6)).unwrap().len(), 4);
        assert_eq!(enumerate_ideals(&z(12)).unwrap().len(), 6);
        assert_eq!(enumerate_ideals(&RingDescriptor::product(vec![3, 3]).unwrap()).unwrap().len(), 4);
        let dual = RingDescriptor::quotient_poly(2, vec![0, 0, 1]).unwrap();
        let names: Vec<String> = enumerate_ideals(&dual).unwrap().iter().map(|i| i.describe(&dual)).collect();
        assert_eq!(names, ["(0)", "(t)", "(1)"]);
    }

    #[test]
    fn combine_examples() {
        let r = z(6);
        assert!(ideal_combine(&r, &principal(&r, 2), &principal(&r, 3), IdealOp::Product).unwrap().is_zero());
        let r12 = z(12);
        let meet = ideal_combine(&r12, &principal(&r12, 2), &principal(&r12, 3), IdealOp::Intersection).unwrap();
        assert_eq!(meet, principal(&r12, 6));
        let whole = FiniteIdeal::whole(&r12).unwrap();
        assert_eq!(ideal_combine(&r12, &principal(&r12, 4), &whole, IdealOp::Product).unwrap(), principal(&r12, 4));
        assert_eq!(ideal_combine(&r12, &principal(&r12, 4), &principal(&r12, 6), IdealOp::Sum).unwrap(), principal(&r12, 2));
        assert_eq!(ideal_combine(&r, &principal(&r, 2), &principal(&r12, 2), IdealOp::Sum), Err(Error::MismatchedRing));
    }

    #[test]
    fn annihilator_examples() {
        let r = z(6);
        assert_eq!(annihilator(&r, &principal(&r, 2)).unwrap(), principal(&r, 3));
        assert!(annihilator(&r, &FiniteIdeal::zero(&r).unwrap()).unwrap().is_whole());
        assert!(annihilator(&r, &FiniteIdeal::whole(&r).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn invariance_examples() {
        let dual = RingDescriptor::quotient_poly(2, vec![0, 0, 1]).unwrap();
        let d = DerMap::from_t_image(&dual, &EndoMap::Identity, dual.one()).unwrap();
        let sys = SigmaDeltaSystem::new(&dual, vec![EndoMap::Identity], vec![d]).unwrap();
        let t_ideal = ideal_closure(&dual, &[dual.t().unwrap()]).unwrap();
        assert!(!invariance(&dual, &t_ideal, &sys).unwrap().delta_invariant);
        let f = invariance(&dual, &FiniteIdeal::zero(&dual).unwrap(), &sys).unwrap();
        assert!(f.sigma_invariant && f.delta_invariant && f.sigma_stable);

        let p = RingDescriptor::product(vec![3, 3]).unwrap();
        let swap = EndoMap::from_fn(&p, |e| match e {
            RingElement::Tuple(v) => RingElement::Tuple(vec![v[1], v[0]]),
            _ => unreachable!(),
        })
        .unwrap();
        let sys = SigmaDeltaSystem::new(&p, vec![swap], vec![DerMap::Zero]).unwrap();
        let first = ideal_closure(&p, &[RingElement::Tuple(vec![1, 0])]).unwrap();
        assert!(!invariance(&p, &first, &sys).unwrap().sigma_invariant);
    }
}
