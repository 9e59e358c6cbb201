//! Ring endomorphisms and σ-derivations of a coefficient ring.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ring::{RingDescriptor, RingElement};
use crate::error::{Error, Result};

/// Sample count used when laws cannot be checked exhaustively.
pub const SAMPLE_COUNT: usize = 20;
const SAMPLE_SEED: u64 = 0x5eed_0001;

/// A ring endomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EndoMap {
    Identity,
    /// Images of the elements in enumeration order (finite rings).
    Table(Vec<RingElement>),
    /// Image of `t` (for `K[t]`; base constants are fixed).
    TImage(RingElement),
}

/// A σ-derivation, interpreted together with its companion [`EndoMap`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DerMap {
    Zero,
    /// Images of the elements in enumeration order (finite rings).
    Table(Vec<RingElement>),
    /// Image of `t` (for `K[t]`), extended by the σ-Leibniz rule.
    TImage(RingElement),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EndoReport {
    pub is_endo: bool,
    pub injective: bool,
    pub bijective: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivationReport {
    pub is_sigma_derivation: bool,
}

/// Evaluates `p(t)` with `t` replaced by `u` using ring arithmetic.
fn eval_truncated(ring: &RingDescriptor, coeffs: &[u64], u: &RingElement) -> RingElement {
    let mut acc = ring.zero();
    for c in coeffs.iter().rev() {
        acc = ring.add(&ring.mul(&acc, u), &ring.from_i64(*c as i64));
    }
    acc
}

/// Coefficients in `t` (low degree first) of a `K[t]` element, as ring constants.
fn t_coefficients_unipoly(ring: &RingDescriptor, p: &RingElement) -> Vec<RingElement> {
    let raw: Vec<RingElement> = match p {
        RingElement::PolyQ(x) => x.iter().map(|c| RingElement::PolyQ(vec![c.clone()])).collect(),
        RingElement::PolyP(x) => x.iter().map(|c| RingElement::PolyP(vec![*c])).collect(),
        _ => panic!("not an element of {ring}"),
    };
    raw.into_iter()
    .map(|c| ring.canonical(&c).expect("constant"))
    .collect()
}

impl EndoMap {
    /// The endomorphism determined by `t -> u`. For finite rings presented
    /// over `t` this produces the full table.
    pub fn from_t_image(ring: &RingDescriptor, u: RingElement) -> Result<Self> {
        if !ring.contains(&u) {
            return Err(Error::MismatchedRing);
        }
        match ring {
            RingDescriptor::UniPoly(_) => Ok(EndoMap::TImage(u)),
            _ if ring.has_t() => {
                let elems = ring.elements()?;
                Ok(EndoMap::Table(
                    elems
                        .iter()
                        .map(|e| eval_truncated(ring, &ring.t_coefficients(e).expect("t-ring"), &u))
                        .collect(),
                ))
            }
            _ => Err(Error::IncompleteMap(format!("{ring} has no element t"))),
        }
    }

    /// Table form for a finite ring.
    pub fn from_fn(ring: &RingDescriptor, f: impl Fn(&RingElement) -> RingElement) -> Result<Self> {
        Ok(EndoMap::Table(ring.elements()?.iter().map(f).collect()))
    }

    pub fn apply(&self, ring: &RingDescriptor, r: &RingElement) -> RingElement {
        match self {
            EndoMap::Identity => r.clone(),
            EndoMap::Table(tab) => tab[ring.index_of(r)].clone(),
            EndoMap::TImage(u) => ring.compose_t(r, u),
        }
    }

    /// `σ^k(r)`.
    pub fn apply_power(&self, ring: &RingDescriptor, k: u32, r: &RingElement) -> RingElement {
        let mut acc = r.clone();
        for _ in 0..k {
            acc = self.apply(ring, &acc);
        }
        acc
    }

    /// Semantic identity test (exhaustive on finite rings, on `t` for `K[t]`).
    pub fn is_identity(&self, ring: &RingDescriptor) -> bool {
        match self {
            EndoMap::Identity => true,
            EndoMap::Table(tab) => tab.iter().enumerate().all(|(i, e)| *e == ring.element_at(i)),
            EndoMap::TImage(u) => ring.t().as_ref() == Some(u),
        }
    }

    /// Table of images for a finite ring.
    pub fn table(&self, ring: &RingDescriptor) -> Result<Vec<RingElement>> {
        let elems = ring.elements()?;
        Ok(elems.iter().map(|e| self.apply(ring, e)).collect())
    }

    /// Canonical representation: `Identity` when semantically the identity.
    pub fn normalized(self, ring: &RingDescriptor) -> Self {
        if self.is_identity(ring) {
            EndoMap::Identity
        } else {
            self
        }
    }

    fn check_total(&self, ring: &RingDescriptor) -> Result<()> {
        match (self, ring) {
            (EndoMap::Identity, _) => Ok(()),
            (EndoMap::Table(tab), _) => {
                let n = ring.order().ok_or_else(|| Error::IncompleteMap(format!("tables need a finite ring, got {ring}")))?;
                if tab.len() != n {
                    return Err(Error::IncompleteMap(format!("table has {} entries, ring has {n}", tab.len())));
                }
                if let Some(bad) = tab.iter().find(|e| !ring.contains(e)) {
                    return Err(Error::IncompleteMap(format!("table entry {bad:?} is not in {ring}")));
                }
                Ok(())
            }
            (EndoMap::TImage(u), RingDescriptor::UniPoly(_)) if ring.contains(u) => Ok(()),
            (EndoMap::TImage(_), _) => Err(Error::IncompleteMap(format!("t-image maps need a polynomial ring, got {ring}"))),
        }
    }
}

impl DerMap {
    /// The σ-derivation determined by `t -> v` and the Leibniz rule.
    pub fn from_t_image(ring: &RingDescriptor, sigma: &EndoMap, v: RingElement) -> Result<Self> {
        if !ring.contains(&v) {
            return Err(Error::MismatchedRing);
        }
        match ring {
            RingDescriptor::UniPoly(_) => Ok(DerMap::TImage(v)),
            _ if ring.has_t() => {
                let t = ring.t().expect("t-ring");
                let u = sigma.apply(ring, &t);
                let elems = ring.elements()?;
                let degree = elems
                    .iter()
                    .map(|e| ring.t_coefficients(e).expect("t-ring").len())
                    .max()
                    .unwrap_or(0);
                // δ(t^k) = σ(t) δ(t^{k-1}) + δ(t) t^{k-1}
                let mut powers = vec![ring.one()];
                let mut ders = vec![ring.zero()];
                for k in 1..degree {
                    let d = ring.add(&ring.mul(&u, &ders[k - 1]), &ring.mul(&v, &powers[k - 1]));
                    ders.push(d);
                    powers.push(ring.mul(&powers[k - 1], &t));
                }
                Ok(DerMap::Table(
                    elems
                        .iter()
                        .map(|e| {
                            let cs = ring.t_coefficients(e).expect("t-ring");
                            cs.iter().zip(&ders).fold(ring.zero(), |acc, (c, d)| {
                                ring.add(&acc, &ring.mul(&ring.from_i64(*c as i64), d))
                            })
                        })
                        .collect(),
                ))
            }
            _ => Err(Error::IncompleteMap(format!("{ring} has no element t"))),
        }
    }

    pub fn from_fn(ring: &RingDescriptor, f: impl Fn(&RingElement) -> RingElement) -> Result<Self> {
        Ok(DerMap::Table(ring.elements()?.iter().map(f).collect()))
    }

    /// The inner σ-derivation `r -> a r - σ(r) a`.
    pub fn inner(ring: &RingDescriptor, sigma: &EndoMap, a: &RingElement) -> Result<Self> {
        Self::from_fn(ring, |r| ring.sub(&ring.mul(a, r), &ring.mul(&sigma.apply(ring, r), a)))
    }

    pub fn apply(&self, ring: &RingDescriptor, sigma: &EndoMap, r: &RingElement) -> RingElement {
        match self {
            DerMap::Zero => ring.zero(),
            DerMap::Table(tab) => tab[ring.index_of(r)].clone(),
            DerMap::TImage(v) => {
                let t = ring.t().expect("K[t]");
                let u = sigma.apply(ring, &t);
                let coeffs = t_coefficients_unipoly(ring, r);
                let mut acc = ring.zero();
                let mut power = ring.one();
                let mut der = ring.zero();
                for (k, c) in coeffs.iter().enumerate() {
                    if k > 0 {
                        der = ring.add(&ring.mul(&u, &der), &ring.mul(v, &power));
                        power = ring.mul(&power, &t);
                    }
                    acc = ring.add(&acc, &ring.mul(c, &der));
                }
                acc
            }
        }
    }

    /// `δ^k(r)`.
    pub fn apply_power(&self, ring: &RingDescriptor, sigma: &EndoMap, k: u32, r: &RingElement) -> RingElement {
        let mut acc = r.clone();
        for _ in 0..k {
            acc = self.apply(ring, sigma, &acc);
        }
        acc
    }

    /// Semantic zero test (exhaustive on finite rings, on `t` for `K[t]`).
    pub fn is_zero(&self, ring: &RingDescriptor) -> bool {
        match self {
            DerMap::Zero => true,
            DerMap::Table(tab) => tab.iter().all(|e| ring.is_zero(e)),
            DerMap::TImage(v) => ring.is_zero(v),
        }
    }

    pub fn table(&self, ring: &RingDescriptor, sigma: &EndoMap) -> Result<Vec<RingElement>> {
        let elems = ring.elements()?;
        Ok(elems.iter().map(|e| self.apply(ring, sigma, e)).collect())
    }

    pub fn normalized(self, ring: &RingDescriptor) -> Self {
        if self.is_zero(ring) {
            DerMap::Zero
        } else {
            self
        }
    }

    fn check_total(&self, ring: &RingDescriptor) -> Result<()> {
        match (self, ring) {
            (DerMap::Zero, _) => Ok(()),
            (DerMap::Table(tab), _) => {
                let n = ring.order().ok_or_else(|| Error::IncompleteMap(format!("tables need a finite ring, got {ring}")))?;
                if tab.len() != n {
                    return Err(Error::IncompleteMap(format!("table has {} entries, ring has {n}", tab.len())));
                }
                if let Some(bad) = tab.iter().find(|e| !ring.contains(e)) {
                    return Err(Error::IncompleteMap(format!("table entry {bad:?} is not in {ring}")));
                }
                Ok(())
            }
            (DerMap::TImage(v), RingDescriptor::UniPoly(_)) if ring.contains(v) => Ok(()),
            (DerMap::TImage(_), _) => Err(Error::IncompleteMap(format!("t-image maps need a polynomial ring, got {ring}"))),
        }
    }
}

/// Test elements for infinite rings: `t` (when present), then fixed-seed samples.
pub fn sample_elements(ring: &RingDescriptor) -> Vec<RingElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut out: Vec<RingElement> = ring.t().into_iter().collect();
    out.push(ring.one());
    out.extend((0..SAMPLE_COUNT).map(|_| ring.random_element(&mut rng)));
    out
}

/// Elements over which laws are checked: all elements of a finite ring,
/// otherwise [`sample_elements`].
pub fn test_elements(ring: &RingDescriptor) -> Vec<RingElement> {
    ring.elements().unwrap_or_else(|_| sample_elements(ring))
}

pub fn validate_endomorphism(ring: &RingDescriptor, m: &EndoMap) -> Result<EndoReport> {
    m.check_total(ring)?;
    if let RingDescriptor::Rationals = ring {
        // the only unital endomorphism of Q
        let id = m.is_identity(ring);
        return Ok(EndoReport { is_endo: id, injective: id, bijective: id });
    }
    let elems = test_elements(ring);
    let img: Vec<RingElement> = elems.iter().map(|e| m.apply(ring, e)).collect();
    let mut is_endo = ring.is_zero(&m.apply(ring, &ring.zero())) && ring.is_one(&m.apply(ring, &ring.one()));
    'outer: for (a, sa) in elems.iter().zip(&img) {
        for (b, sb) in elems.iter().zip(&img) {
            if m.apply(ring, &ring.add(a, b)) != ring.add(sa, sb) || m.apply(ring, &ring.mul(a, b)) != ring.mul(sa, sb) {
                is_endo = false;
                break 'outer;
            }
        }
    }
    let (injective, bijective) = match (ring, m) {
        (RingDescriptor::UniPoly(_), EndoMap::TImage(u)) => {
            let d = ring.t_degree(u);
            (d.is_some_and(|d| d >= 1), d == Some(1))
        }
        (RingDescriptor::UniPoly(_), _) => (true, true),
        _ => {
            let mut seen = vec![false; img.len()];
            let mut inj = true;
            for e in &img {
                let k = ring.index_of(e);
                inj &= !seen[k];
                seen[k] = true;
            }
            // a self-map of a finite set is injective iff surjective
            (inj, inj)
        }
    };
    Ok(EndoReport { is_endo, injective, bijective })
}

pub fn validate_sigma_derivation(ring: &RingDescriptor, s: &EndoMap, d: &DerMap) -> Result<DerivationReport> {
    s.check_total(ring)?;
    d.check_total(ring)?;
    if let RingDescriptor::Rationals = ring {
        return Ok(DerivationReport { is_sigma_derivation: d.is_zero(ring) });
    }
    let elems = test_elements(ring);
    let sig: Vec<RingElement> = elems.iter().map(|e| s.apply(ring, e)).collect();
    let der: Vec<RingElement> = elems.iter().map(|e| d.apply(ring, s, e)).collect();
    if !ring.is_zero(&d.apply(ring, s, &ring.one())) {
        return Ok(DerivationReport { is_sigma_derivation: false });
    }
    for (a, (sa, da)) in elems.iter().zip(sig.iter().zip(&der)) {
        for (b, db) in elems.iter().zip(&der) {
            let sum_ok = d.apply(ring, s, &ring.add(a, b)) == ring.add(da, db);
            let leibniz = ring.add(&ring.mul(sa, db), &ring.mul(da, b));
            if !sum_ok || d.apply(ring, s, &ring.mul(a, b)) != leibniz {
                return Ok(DerivationReport { is_sigma_derivation: false });
            }
        }
    }
    Ok(DerivationReport { is_sigma_derivation: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::ring::PolyBase;

    fn qt() -> RingDescriptor {
        RingDescriptor::unipoly(PolyBase::Rationals).unwrap()
    }

    fn tpoly(ring: &RingDescriptor, coeffs: &[i64]) -> RingElement {
        let t = ring.t().unwrap();
        coeffs.iter().rev().fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, &t), &ring.from_i64(*c)))
    }

    #[test]
    fn swap_is_an_automorphism() {
        let r = RingDescriptor::product(vec![3, 3]).unwrap();
        let swap = EndoMap::from_fn(&r, |e| match e {
            RingElement::Tuple(v) => RingElement::Tuple(vec![v[1], v[0]]),
            _ => unreachable!(),
        })
        .unwrap();
        let rep = validate_endomorphism(&r, &swap).unwrap();
        assert_eq!(rep, EndoReport { is_endo: true, injective: true, bijective: true });
    }

    #[test]
    fn shift_is_bijective() {
        let r = qt();
        let m = EndoMap::from_t_image(&r, tpoly(&r, &[-1, 1])).unwrap();
        let rep = validate_endomorphism(&r, &m).unwrap();
        assert_eq!(rep, EndoReport { is_endo: true, injective: true, bijective: true });
        let sq = EndoMap::from_t_image(&r, tpoly(&r, &[0, 0, 1])).unwrap();
        let rep = validate_endomorphism(&r, &sq).unwrap();
        assert!(rep.is_endo && rep.injective && !rep.bijective);
    }

    #[test]
    fn doubling_is_not_unital() {
        let r = RingDescriptor::zmod(6).unwrap();
        let m = EndoMap::from_fn(&r, |e| r.add(e, e)).unwrap();
        assert!(!validate_endomorphism(&r, &m).unwrap().is_endo);
    }

    #[test]
    fn short_table_is_incomplete() {
        let r = RingDescriptor::zmod(6).unwrap();
        let m = EndoMap::Table(vec![r.zero(), r.one()]);
        assert!(matches!(validate_endomorphism(&r, &m), Err(Error::IncompleteMap(_))));
    }

    #[test]
    fn truncated_derivation_table() {
        let r = RingDescriptor::quotient_poly(2, vec![0, 0, 1]).unwrap();
        let d = DerMap::from_t_image(&r, &EndoMap::Identity, r.one()).unwrap();
        let names: Vec<String> = d.table(&r, &EndoMap::Identity).unwrap().iter().map(|e| r.format_element(e)).collect();
        assert_eq!(names, ["0", "0", "1", "1"]);
        assert!(validate_sigma_derivation(&r, &EndoMap::Identity, &d).unwrap().is_sigma_derivation);
        assert!(validate_sigma_derivation(&r, &EndoMap::Identity, &DerMap::Zero).unwrap().is_sigma_derivation);
    }

    #[test]
    fn identity_as_derivation_fails() {
        let r = RingDescriptor::zmod(4).unwrap();
        let d = DerMap::from_fn(&r, |e| e.clone()).unwrap();
        assert!(!validate_sigma_derivation(&r, &EndoMap::Identity, &d).unwrap().is_sigma_derivation);
    }

    #[test]
    fn leibniz_extension_on_polynomials() {
        // σ(t) = t + 1, δ(t) = 1: δ(t^2) = (t+1)·1 + 1·t = 2t + 1
        let r = qt();
        let s = EndoMap::from_t_image(&r, tpoly(&r, &[1, 1])).unwrap();
        let d = DerMap::from_t_image(&r, &s, r.one()).unwrap();
        assert_eq!(d.apply(&r, &s, &tpoly(&r, &[0, 0, 1])), tpoly(&r, &[1, 2]));
        assert!(validate_sigma_derivation(&r, &s, &d).unwrap().is_sigma_derivation);
    }

    #[test]
    fn rationals_accept_only_trivial_maps() {
        let q = RingDescriptor::Rationals;
        assert!(validate_endomorphism(&q, &EndoMap::Identity).unwrap().bijective);
        assert!(validate_sigma_derivation(&q, &EndoMap::Identity, &DerMap::Zero).unwrap().is_sigma_derivation);
        assert!(validate_endomorphism(&q, &EndoMap::TImage(q.one())).is_err());
    }
}
