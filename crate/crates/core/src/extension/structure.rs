//! Structural transformations: associated graded ring, iterated Ore
//! presentation and elimination of inner derivations.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::exponent::ExponentVector;
use super::normal::Normalizer;
use super::polynomial::SkewPolynomial;
use super::spec::{ExtensionSpec, Tail};
use crate::coeff::maps::test_elements;
use crate::coeff::{DerMap, EndoMap, RingDescriptor, RingElement};
use crate::error::{Error, Result};

/// The presentation with all `δ_i` and all tails dropped.
pub fn associated_graded(spec: &ExtensionSpec) -> ExtensionSpec {
    let ring = spec.ring();
    let n = spec.nvars();
    let mut b = spec.to_builder();
    for i in 0..n {
        b = b.delta(i, DerMap::Zero);
    }
    for (&(i, j), rel) in spec.relations() {
        b = b.relation(i, j, rel.c.clone(), Tail::zero(ring, n));
    }
    b.build().expect("dropping derivations and tails keeps the data valid")
}

/// Step `i` of `R[z_1; θ_1] ... [z_n; θ_n]`: `θ_i` restricts to `σ_i` on `R`
/// and sends `z_j` to `c_{j,i} z_j` for `j < i`.
#[derive(Debug, Clone, PartialEq)]
pub struct OreStep {
    pub sigma: EndoMap,
    pub scalars: Vec<RingElement>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrePresentation {
    ring: RingDescriptor,
    steps: Vec<OreStep>,
}

pub fn iterated_ore_presentation(spec: &ExtensionSpec) -> Result<OrePresentation> {
    if !spec.flags().quasi_commutative {
        return Err(Error::NotQuasiCommutative);
    }
    let steps = (0..spec.nvars())
        .map(|i| OreStep { sigma: spec.sigma(i).clone(), scalars: (0..i).map(|j| spec.relation(j, i).c.clone()).collect() })
        .collect();
    Ok(OrePresentation { ring: spec.ring().clone(), steps })
}

impl OrePresentation {
    pub fn steps(&self) -> &[OreStep] {
        &self.steps
    }

    /// Product computed level by level: `(p z_i^a)(q z_i^b) = p θ_i^a(q) z_i^{a+b}`
    /// with `p, q` in the previous level.
    pub fn multiply(&self, f: &SkewPolynomial, g: &SkewPolynomial) -> SkewPolynomial {
        self.mul_level(self.steps.len(), f, g)
    }

    fn mul_level(&self, level: usize, f: &SkewPolynomial, g: &SkewPolynomial) -> SkewPolynomial {
        let ring = &self.ring;
        let n = f.nvars();
        let mut out = SkewPolynomial::zero(n);
        if level == 0 {
            let zero = ExponentVector::zero(n);
            let a = f.coefficient(ring, &zero);
            let b = g.coefficient(ring, &zero);
            out.add_term(ring, zero, ring.mul(&a, &b));
            return out;
        }
        let v = level - 1;
        for (p, a) in split_last(ring, f, v) {
            for (q, b) in split_last(ring, g, v) {
                let twisted = self.theta_power(v, a, &q);
                let mut prod = self.mul_level(v, &p, &twisted);
                prod = raise(ring, &prod, v, a + b);
                out.add_assign(ring, &prod);
            }
        }
        out
    }

    /// `θ_i^k` applied to an element of level `i`.
    fn theta_power(&self, i: usize, k: u32, q: &SkewPolynomial) -> SkewPolynomial {
        let mut acc = q.clone();
        for _ in 0..k {
            acc = self.theta(i, &acc);
        }
        acc
    }

    fn theta(&self, i: usize, q: &SkewPolynomial) -> SkewPolynomial {
        let ring = &self.ring;
        let n = q.nvars();
        let step = &self.steps[i];
        let mut out = SkewPolynomial::zero(n);
        for (beta, r) in q.terms() {
            // σ_i(r) (c_1 z_1)^{β_1} ... (c_{i-1} z_{i-1})^{β_{i-1}}
            let mut acc = SkewPolynomial::constant(ring, n, step.sigma.apply(ring, r));
            for j in 0..i {
                let cz = SkewPolynomial::term(ring, ExponentVector::unit(n, j), step.scalars[j].clone());
                for _ in 0..beta.as_slice()[j] {
                    acc = self.mul_level(i, &acc, &cz);
                }
            }
            out.add_assign(ring, &acc);
        }
        out
    }
}

/// Splits `f` as `Σ_a p_a z_v^a` with `p_a` free of `z_v`.
fn split_last(ring: &RingDescriptor, f: &SkewPolynomial, v: usize) -> Vec<(SkewPolynomial, u32)> {
    let mut parts: Vec<(SkewPolynomial, u32)> = Vec::new();
    for (e, c) in f.terms() {
        let a = e.as_slice()[v];
        let mut base = e.as_slice().to_vec();
        base[v] = 0;
        let term = (ExponentVector::new(base), c.clone());
        match parts.iter_mut().find(|(_, k)| *k == a) {
            Some((p, _)) => p.add_term(ring, term.0, term.1),
            None => parts.push((SkewPolynomial::term(ring, term.0, term.1), a)),
        }
    }
    parts
}

/// Multiplies every monomial of `p` (free of `z_v`) on the right by `z_v^k`.
fn raise(ring: &RingDescriptor, p: &SkewPolynomial, v: usize, k: u32) -> SkewPolynomial {
    let mut out = SkewPolynomial::zero(p.nvars());
    for (e, c) in p.terms() {
        let mut ex = e.as_slice().to_vec();
        ex[v] += k;
        out.add_term(ring, ExponentVector::new(ex), c.clone());
    }
    out
}

/// Some `a` with `δ(r) = a r - σ(r) a` for all `r`, by exhaustive search.
pub fn find_inner_element(ring: &RingDescriptor, sigma: &EndoMap, delta: &DerMap) -> Result<Option<RingElement>> {
    let elems = ring.elements()?;
    Ok(elems.iter().find(|a| is_inner_witness(ring, sigma, delta, a)).cloned())
}

fn is_inner_witness(ring: &RingDescriptor, sigma: &EndoMap, delta: &DerMap, a: &RingElement) -> bool {
    test_elements(ring).iter().all(|r| {
        let rhs = ring.sub(&ring.mul(a, r), &ring.mul(&sigma.apply(ring, r), a));
        delta.apply(ring, sigma, r) == rhs
    })
}

/// The change of variables `z_i = x_i - a_i` as a map from the new
/// presentation to the old one.
#[derive(Debug, Clone)]
pub struct Substitution {
    shifts: Vec<RingElement>,
}

impl Substitution {
    /// Image of `f(z)` in the original variables.
    pub fn apply(&self, norm: &mut Normalizer<'_>, f: &SkewPolynomial) -> SkewPolynomial {
        let spec = norm.spec();
        let ring = spec.ring();
        let n = spec.nvars();
        let shifted: Vec<SkewPolynomial> = (0..n)
            .map(|i| {
                let mut z = SkewPolynomial::variable(ring, n, i);
                z.add_term(ring, ExponentVector::zero(n), ring.neg(&self.shifts[i]));
                z
            })
            .collect();
        let mut out = SkewPolynomial::zero(n);
        for (alpha, c) in f.terms() {
            let mut mono = SkewPolynomial::one(ring, n);
            for (i, z) in shifted.iter().enumerate() {
                for _ in 0..alpha.as_slice()[i] {
                    mono = norm.mul(&mono, z);
                }
            }
            out.add_scaled(ring, c, &mono);
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct Elimination {
    pub spec: ExtensionSpec,
    pub substitution: Substitution,
    /// Pairs on which multiplication and substitution were compared.
    pub pairs_checked: usize,
}

/// Number of random pairs used to validate the substitution.
pub const SUBSTITUTION_SAMPLES: usize = 50;

/// Rewrites `A` in the variables `z_i = x_i - a_i`, which turns each inner
/// `δ_i = δ_{a_i}` into zero.
pub fn eliminate_inner_derivations(spec: &ExtensionSpec, a: &[RingElement]) -> Result<Elimination> {
    let ring = spec.ring();
    let n = spec.nvars();
    if a.len() != n {
        return Err(Error::MismatchedArity(a.len(), n));
    }
    if a.iter().any(|e| !ring.contains(e)) {
        return Err(Error::MismatchedRing);
    }
    for (i, ai) in a.iter().enumerate() {
        if !is_inner_witness(ring, spec.sigma(i), spec.delta(i), ai) {
            return Err(Error::NotInner(i + 1));
        }
    }
    let mut norm = Normalizer::new(spec);
    let z: Vec<SkewPolynomial> = (0..n)
        .map(|i| {
            let mut p = SkewPolynomial::variable(ring, n, i);
            p.add_term(ring, ExponentVector::zero(n), ring.neg(&a[i]));
            p
        })
        .collect();
    let mut b = spec.to_builder();
    for i in 0..n {
        b = b.delta(i, DerMap::Zero);
    }
    for (&(i, j), rel) in spec.relations() {
        // z_j z_i - c z_i z_j, rewritten in the z variables
        let lhs = norm.mul(&z[j], &z[i]);
        let rhs = norm.mul(&z[i], &z[j]).scale(ring, &rel.c);
        let diff = lhs.sub(ring, &rhs);
        let old = Tail::from_polynomial(ring, &diff)?;
        let constant = old
            .linear
            .iter()
            .zip(a)
            .fold(old.constant.clone(), |acc, (d, ak)| ring.add(&acc, &ring.mul(d, ak)));
        b = b.relation(i, j, rel.c.clone(), Tail { constant, linear: old.linear });
    }
    let new_spec = b.build()?;
    let substitution = Substitution { shifts: a.to_vec() };

    let mut rng = ChaCha8Rng::seed_from_u64(0xe11);
    let mut new_norm = Normalizer::new(&new_spec);
    for _ in 0..SUBSTITUTION_SAMPLES {
        let f = SkewPolynomial::random(ring, n, 2, 3, &mut rng);
        let g = SkewPolynomial::random(ring, n, 2, 3, &mut rng);
        let fg = new_norm.mul(&f, &g);
        let left = substitution.apply(&mut norm, &fg);
        let sf = substitution.apply(&mut norm, &f);
        let sg = substitution.apply(&mut norm, &g);
        if left != norm.mul(&sf, &sg) {
            return Err(Error::InvalidExtension("substitution does not respect multiplication".into()));
        }
    }
    Ok(Elimination { spec: new_spec, substitution, pairs_checked: SUBSTITUTION_SAMPLES })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::consistency::check_pbw_consistency;

    fn swap(r: &RingDescriptor) -> EndoMap {
        EndoMap::from_fn(r, |e| match e {
            RingElement::Tuple(v) => RingElement::Tuple(vec![v[1], v[0]]),
            _ => unreachable!(),
        })
        .unwrap()
    }

    #[test]
    fn inner_witness_on_product() {
        let r = RingDescriptor::product(vec![3, 3]).unwrap();
        let s = swap(&r);
        let d = DerMap::from_fn(&r, |e| match e {
            RingElement::Tuple(v) => RingElement::Tuple(vec![(v[0] + 3 - v[1]) % 3, 0]),
            _ => unreachable!(),
        })
        .unwrap();
        assert_eq!(find_inner_element(&r, &s, &d).unwrap(), Some(RingElement::Tuple(vec![1, 0])));
    }

    #[test]
    fn no_inner_witness_for_d_dt() {
        let r = RingDescriptor::quotient_poly(2, vec![0, 0, 1]).unwrap();
        let d = DerMap::from_t_image(&r, &EndoMap::Identity, r.one()).unwrap();
        assert_eq!(find_inner_element(&r, &EndoMap::Identity, &d).unwrap(), None);
        assert_eq!(find_inner_element(&r, &EndoMap::Identity, &DerMap::Zero).unwrap(), Some(r.zero()));
        let e = ExtensionSpec::builder(r.clone(), 1).delta(0, d).build().unwrap();
        for a in r.elements().unwrap() {
            assert_eq!(eliminate_inner_derivations(&e, &[a]).unwrap_err(), Error::NotInner(1));
        }
    }

    #[test]
    fn elimination_on_product() {
        let r = RingDescriptor::product(vec![3, 3]).unwrap();
        let s = swap(&r);
        let a = RingElement::Tuple(vec![1, 0]);
        let d = DerMap::inner(&r, &s, &a).unwrap();
        let e = ExtensionSpec::builder(r.clone(), 1).sigma(0, s).delta(0, d).build().unwrap();
        let out = eliminate_inner_derivations(&e, &[a]).unwrap();
        assert!(out.spec.flags().endomorphism_type);
        assert!(check_pbw_consistency(&out.spec).is_consistent());
    }

    #[test]
    fn trivial_elimination_is_identity() {
        let r = RingDescriptor::zmod(6).unwrap();
        let e = ExtensionSpec::builder(r.clone(), 2).build().unwrap();
        let out = eliminate_inner_derivations(&e, &[r.zero(), r.zero()]).unwrap();
        assert_eq!(out.spec, e);
    }

    #[test]
    fn graded_weyl_is_commutative() {
        let q = RingDescriptor::Rationals;
        let e = ExtensionSpec::builder(q.clone(), 2).relation(0, 1, q.one(), Tail::constant(&q, 2, q.one())).build().unwrap();
        let gr = associated_graded(&e);
        assert!(gr.flags().quasi_commutative);
        assert_eq!(gr, ExtensionSpec::builder(q, 2).build().unwrap());
        assert_eq!(iterated_ore_presentation(&e).unwrap_err(), Error::NotQuasiCommutative);
    }

    #[test]
    fn ore_presentation_of_quantum_plane() {
        let q = RingDescriptor::Rationals;
        let three = q.from_i64(3);
        let e = ExtensionSpec::builder(q.clone(), 2).relation(0, 1, three.clone(), Tail::zero(&q, 2)).build().unwrap();
        let ore = iterated_ore_presentation(&e).unwrap();
        assert_eq!(ore.steps()[1].scalars, vec![three]);
        assert!(ore.steps()[1].sigma.is_identity(&q));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut norm = Normalizer::new(&e);
        for _ in 0..100 {
            let f = SkewPolynomial::random(&q, 2, 3, 4, &mut rng);
            let g = SkewPolynomial::random(&q, 2, 3, 4, &mut rng);
            assert_eq!(ore.multiply(&f, &g), norm.mul(&f, &g));
        }
    }
}
