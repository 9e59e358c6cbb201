//! Exhaustive enumeration of endomorphisms and σ-derivations of small rings.
//!
//! Every additive map is determined by the images of a basis of the additive
//! group; for the supported presentations that group is `⊕ Z/m_i · g_i`, so a
//! candidate is any choice of images `a_i` with `m_i a_i = 0`.

use super::maps::{validate_endomorphism, DerMap, EndoMap};
use super::ring::{RingDescriptor, RingElement};
use crate::error::{Error, Result};

/// Upper bound on the number of additive candidates examined.
pub const MAX_CANDIDATES: usize = 1_000_000;

/// Additive generators with their orders, plus the coordinate map.
struct AdditiveBasis {
    gens: Vec<(RingElement, u64)>,
}

impl AdditiveBasis {
    fn of(ring: &RingDescriptor) -> Result<Self> {
        let gens = match ring {
            RingDescriptor::ZMod(n) => vec![(ring.one(), *n)],
            RingDescriptor::Product(ms) => ms
                .iter()
                .enumerate()
                .map(|(i, &m)| {
                    let mut v = vec![0; ms.len()];
                    v[i] = 1;
                    (RingElement::Tuple(v), m)
                })
                .collect(),
            RingDescriptor::QuotientPoly { modulus, poly } => (0..poly.len() - 1)
                .map(|i| {
                    let mut v = vec![0; poly.len() - 1];
                    v[i] = 1;
                    (RingElement::Truncated(v), *modulus)
                })
                .collect(),
            _ => return Err(Error::InvalidRing(format!("no additive basis available for {ring}"))),
        };
        Ok(AdditiveBasis { gens })
    }

    fn coordinates(ring: &RingDescriptor, e: &RingElement) -> Vec<u64> {
        match (ring, e) {
            (RingDescriptor::ZMod(_), RingElement::Residue(x)) => vec![*x],
            (_, RingElement::Tuple(x)) | (_, RingElement::Truncated(x)) => x.clone(),
            _ => unreachable!("finite presentation"),
        }
    }
}

fn scalar_multiple(ring: &RingDescriptor, k: u64, a: &RingElement) -> RingElement {
    ring.mul(&ring.from_i64(k as i64), a)
}

/// All additive self-maps, as image tables in enumeration order.
fn additive_maps(ring: &RingDescriptor) -> Result<Vec<Vec<RingElement>>> {
    let basis = AdditiveBasis::of(ring)?;
    let elems = ring.elements()?;
    let choices: Vec<Vec<RingElement>> = basis
        .gens
        .iter()
        .map(|(_, m)| elems.iter().filter(|a| ring.is_zero(&scalar_multiple(ring, *m, a))).cloned().collect())
        .collect();
    let total = choices.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()).filter(|&t| t <= MAX_CANDIDATES));
    if total.is_none() {
        return Err(Error::InvalidRing(format!("more than {MAX_CANDIDATES} additive maps on {ring}")));
    }
    let coords: Vec<Vec<u64>> = elems.iter().map(|e| AdditiveBasis::coordinates(ring, e)).collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; choices.len()];
    loop {
        let images: Vec<&RingElement> = pick.iter().zip(&choices).map(|(&p, c)| &c[p]).collect();
        let table = coords
            .iter()
            .map(|cs| {
                cs.iter()
                    .zip(&images)
                    .fold(ring.zero(), |acc, (&k, a)| ring.add(&acc, &scalar_multiple(ring, k, a)))
            })
            .collect();
        out.push(table);
        // odometer increment
        let mut i = pick.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

/// All unital ring endomorphisms of a finite ring, in table form.
pub fn enumerate_endomorphisms(ring: &RingDescriptor) -> Result<Vec<EndoMap>> {
    let mut out = Vec::new();
    for table in additive_maps(ring)? {
        let m = EndoMap::Table(table).normalized(ring);
        if validate_endomorphism(ring, &m)?.is_endo {
            out.push(m);
        }
    }
    Ok(out)
}

/// All σ-derivations of a finite ring for the given `σ`.
pub fn enumerate_sigma_derivations(ring: &RingDescriptor, sigma: &EndoMap) -> Result<Vec<DerMap>> {
    let elems = ring.elements()?;
    let sig: Vec<RingElement> = elems.iter().map(|e| sigma.apply(ring, e)).collect();
    let mut out = Vec::new();
    for table in additive_maps(ring)? {
        // additivity holds by construction; check the twisted Leibniz rule
        let ok = elems.iter().enumerate().all(|(i, a)| {
            elems.iter().enumerate().all(|(j, b)| {
                let lhs = &table[ring.index_of(&ring.mul(a, b))];
                *lhs == ring.add(&ring.mul(&sig[i], &table[j]), &ring.mul(&table[i], b))
            })
        });
        if ok {
            out.push(DerMap::Table(table).normalized(ring));
        }
    }
    Ok(out)
}

/// Pairs `(σ, δ)` with `σ` an injective endomorphism and `δ` a σ-derivation.
pub fn enumerate_map_pairs(ring: &RingDescriptor) -> Result<Vec<(EndoMap, DerMap)>> {
    let mut out = Vec::new();
    for s in enumerate_endomorphisms(ring)? {
        if !validate_endomorphism(ring, &s)?.injective {
            continue;
        }
        for d in enumerate_sigma_derivations(ring, &s)? {
            out.push((s.clone(), d));
        }
    }
    Ok(out)
}
