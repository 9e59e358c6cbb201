use std::collections::{BTreeSet, VecDeque};

use super::{invariance, product_within, FiniteIdeal, IndexArith, SigmaDeltaSystem};
use crate::coeff::{EndoMap, RingDescriptor};
use crate::error::{Error, Result};

/// The descending chain `I_0 = R ⊇ I_1 = I ⊇ I_2 ⊇ ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealChain {
    pub levels: Vec<FiniteIdeal>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainProperties {
    pub descending: bool,
    /// `δ_i(I_j) ⊆ I_{j-1}`.
    pub delta_step: bool,
    pub sigma_invariant: bool,
    /// `I · I_j ⊆ I_{j+1}`.
    pub product_step: bool,
}

impl ChainProperties {
    pub fn all(&self) -> bool {
        self.descending && self.delta_step && self.sigma_invariant && self.product_step
    }
}

/// Index tables of the monoid generated by the given tables, identity first.
fn monoid_tables(n: usize, gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..n).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut order = vec![id.clone()];
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for g in gens {
            let composed: Vec<usize> = m.iter().map(|&x| g[x]).collect();
            if seen.insert(composed.clone()) {
                order.push(composed.clone());
                queue.push_back(composed);
            }
        }
    }
    order
}

/// All finite compositions of the `σ_i`, including the identity.
pub fn sigma_monoid_closure(ring: &RingDescriptor, sigmas: &[EndoMap]) -> Result<Vec<EndoMap>> {
    let ar = IndexArith::new(ring)?;
    let system = SigmaDeltaSystem { sigmas: sigmas.to_vec(), deltas: vec![crate::coeff::DerMap::Zero; sigmas.len()] };
    let tables = monoid_tables(ar.len(), &system.sigma_tables(&ar));
    Ok(tables
        .into_iter()
        .map(|t| EndoMap::Table(t.into_iter().map(|k| ar.elems[k].clone()).collect()).normalized(ring))
        .collect())
}

/// `I_{j+1} = {r ∈ I : δ_i(M(r)) ∈ I_j for every i and every M in the σ-monoid}`.
pub fn ideal_chain(ring: &RingDescriptor, i: &FiniteIdeal, system: &SigmaDeltaSystem, jmax: usize) -> Result<IdealChain> {
    let ar = IndexArith::new(ring)?;
    if i.mask().len() != ar.len() {
        return Err(Error::MismatchedRing);
    }
    if !invariance(ring, i, system)?.sigma_invariant {
        return Err(Error::NotSigmaInvariant);
    }
    let monoid = monoid_tables(ar.len(), &system.sigma_tables(&ar));
    let deltas = system.delta_tables(&ar);
    let mut levels = vec![FiniteIdeal::whole(ring)?];
    if jmax >= 1 {
        levels.push(i.clone());
    }
    while levels.len() <= jmax {
        let prev = levels.last().expect("nonempty");
        let mask = (0..ar.len())
            .map(|r| i.contains_index(r) && monoid.iter().all(|m| deltas.iter().all(|d| prev.contains_index(d[m[r]]))))
            .collect();
        levels.push(FiniteIdeal::from_mask(mask));
    }
    Ok(IdealChain { levels })
}

/// Checks the four chain properties on a computed chain.
pub fn check_chain_properties(ring: &RingDescriptor, chain: &IdealChain, system: &SigmaDeltaSystem) -> Result<ChainProperties> {
    let ar = IndexArith::new(ring)?;
    let deltas = system.delta_tables(&ar);
    let lv = &chain.levels;
    let descending = lv.windows(2).all(|w| w[1].is_subset(&w[0]));
    let delta_step = (1..lv.len()).all(|j| deltas.iter().all(|d| lv[j].indices().all(|x| lv[j - 1].contains_index(d[x]))));
    let mut sigma_invariant = true;
    for level in lv {
        sigma_invariant &= invariance(ring, level, system)?.sigma_invariant;
    }
    let product_step = lv.len() < 2 || (1..lv.len() - 1).all(|j| product_within(ring, &lv[1], &lv[j], &lv[j + 1]));
    Ok(ChainProperties { descending, delta_step, sigma_invariant, product_step })
}
