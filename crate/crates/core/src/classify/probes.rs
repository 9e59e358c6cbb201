//! Bounded-degree probes of the annihilator, coefficient-ideal and
//! primality-criterion statements.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::extended::BaseIdeal;
use crate::coeff::RingElement;
use crate::error::{Error, Result};
use crate::extension::{sigma_alpha, ExponentVector, ExtensionSpec, Normalizer, SkewPolynomial};
use crate::ideal::{annihilator, ideal_closure, invariance, FiniteIdeal, SigmaDeltaSystem};

/// Threshold on `|R|^(monomials)` below which bounded polynomials are enumerated.
pub const MAX_ENUMERATION: usize = 1_000_000;
/// Random candidates drawn when enumeration is too large.
pub const SAMPLED_CANDIDATES: usize = 2_000;

/// All single terms `r x^β` with `r ≠ 0` and `|β| ≤ bound`.
fn single_terms(spec: &ExtensionSpec, bound: u32) -> Result<Vec<SkewPolynomial>> {
    let ring = spec.ring();
    let elems = ring.elements()?;
    let monos = ExponentVector::all_up_to(spec.nvars(), bound);
    Ok(monos
        .iter()
        .flat_map(|m| elems.iter().filter(|r| !ring.is_zero(r)).map(move |r| SkewPolynomial::term(ring, m.clone(), r.clone())))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientIdealReport {
    pub ideal: FiniteIdeal,
    /// One more degree of multipliers adds nothing.
    pub stable: bool,
    pub delta_invariant: bool,
}

fn coefficient_closure(spec: &ExtensionSpec, gens: &[SkewPolynomial], bound: u32) -> Result<FiniteIdeal> {
    let ring = spec.ring();
    let n = spec.nvars();
    let monos = ExponentVector::all_up_to(n, bound);
    let elems = ring.elements()?;
    let mut norm = Normalizer::new(spec);
    let mut coeffs: Vec<RingElement> = Vec::new();
    for p in gens {
        for left in &monos {
            let lp = norm.mul(&SkewPolynomial::term(ring, left.clone(), ring.one()), p);
            for right in monos.iter().filter(|m| m.degree() + left.degree() <= bound) {
                for r in &elems {
                    let rm = SkewPolynomial::term(ring, right.clone(), r.clone());
                    coeffs.extend(norm.mul(&lp, &rm).coefficients().cloned());
                }
            }
        }
    }
    ideal_closure(ring, &coeffs)
}

/// Ideal of `R` generated by the coefficients of `m p (r m')` for generators
/// `p`, monomials `m, m'` with `|m| + |m'| ≤ bound` and `r ∈ R`.
pub fn coefficient_ideal(spec: &ExtensionSpec, gens: &[SkewPolynomial], bound: u32) -> Result<CoefficientIdealReport> {
    if !spec.flags().derivation_type {
        return Err(Error::NotDerivationType);
    }
    let ring = spec.ring();
    ring.order().ok_or(Error::NotEnumerable)?;
    let ideal = coefficient_closure(spec, gens, bound)?;
    let next = coefficient_closure(spec, gens, bound + 1)?;
    let delta_invariant = invariance(ring, &ideal, &SigmaDeltaSystem::from_spec(spec))?.delta_invariant;
    Ok(CoefficientIdealReport { stable: next == ideal, ideal, delta_invariant })
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnnihilatorReport {
    pub annihilator_of_lc: FiniteIdeal,
    pub exhaustive: bool,
    pub candidates_checked: usize,
    /// Candidates `g` with `f g = 0`.
    pub left_count: usize,
    /// Candidates whose coefficients all lie in `ann_R(lc f)`.
    pub right_count: usize,
    pub counterexample: Option<SkewPolynomial>,
}

impl AnnihilatorReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Compares `{g : f g = 0}` with `ann_R(lc f) A` on polynomials of degree at most `bound`.
pub fn annihilator_formula_check(spec: &ExtensionSpec, f: &SkewPolynomial, bound: u32) -> Result<AnnihilatorReport> {
    let ring = spec.ring();
    let n = spec.nvars();
    let elems = ring.elements()?;
    if !(0..n).all(|i| spec.sigma_is_bijective(i)) {
        return Err(Error::HypothesisFailed("every sigma_i must be bijective".into()));
    }
    let lead = f.leading_data()?;
    let ann = annihilator(ring, &ideal_closure(ring, &[lead.coefficient.clone()])?)?;
    if ann.elements(ring).iter().any(|r| sigma_alpha(spec, &lead.monomial, r) != *r) {
        return Err(Error::HypothesisFailed("sigma^lm(f) must fix ann(lc f)".into()));
    }
    let mut norm = Normalizer::new(spec);
    for h in single_terms(spec, bound)? {
        for prod in [norm.mul(f, &h), norm.mul(&h, f)] {
            if let Ok(ld) = prod.leading_data() {
                if ld.monomial < lead.monomial {
                    return Err(Error::HypothesisFailed("minimality of lm(f)".into()));
                }
            }
        }
    }

    let monos = ExponentVector::all_up_to(n, bound);
    let exhaustive = (elems.len() as f64).powi(monos.len() as i32) <= MAX_ENUMERATION as f64;
    let candidates: Vec<SkewPolynomial> = if exhaustive {
        let total = elems.len().pow(monos.len() as u32);
        (0..total)
            .map(|mut code| {
                let mut g = SkewPolynomial::zero(n);
                for m in &monos {
                    g.add_term(ring, m.clone(), elems[code % elems.len()].clone());
                    code /= elems.len();
                }
                g
            })
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0xa22);
        let ann_elems = ann.elements(ring);
        let mut out = single_terms(spec, bound)?;
        for k in 0..SAMPLED_CANDIDATES {
            let mut g = SkewPolynomial::zero(n);
            for m in &monos {
                // half of the samples are drawn from the right-hand side
                let c = if k % 2 == 0 {
                    ann_elems[rand::Rng::gen_range(&mut rng, 0..ann_elems.len())].clone()
                } else {
                    ring.random_element(&mut rng)
                };
                g.add_term(ring, m.clone(), c);
            }
            out.push(g);
        }
        out
    };

    let mut left_count = 0;
    let mut right_count = 0;
    let mut counterexample = None;
    for g in &candidates {
        let in_left = norm.mul(f, g).is_zero();
        let in_right = g.coefficients().all(|c| ann.contains(ring, c));
        left_count += usize::from(in_left);
        right_count += usize::from(in_right);
        if in_left != in_right && counterexample.is_none() {
            counterexample = Some(g.clone());
        }
    }
    Ok(AnnihilatorReport { annihilator_of_lc: ann, exhaustive, candidates_checked: candidates.len(), left_count, right_count, counterexample })
}

/// `δ^θ(b) = δ_1^{θ_1} ∘ ... ∘ δ_n^{θ_n}(b)`.
pub fn delta_alpha(spec: &ExtensionSpec, theta: &ExponentVector, b: &RingElement) -> RingElement {
    let mut acc = b.clone();
    for i in (0..spec.nvars()).rev() {
        acc = spec.delta(i).apply_power(spec.ring(), spec.sigma(i), theta.as_slice()[i], &acc);
    }
    acc
}

/// Smallest `θ` (deglex, `|θ| ≤ bound`) with `a R σ^θ(b) ≠ 0` or `a R δ^θ(b) ≠ 0`.
pub fn prime_criterion_search(spec: &ExtensionSpec, a: &RingElement, b: &RingElement, bound: u32) -> Result<Option<ExponentVector>> {
    let ring = spec.ring();
    if ring.is_zero(a) || ring.is_zero(b) {
        return Err(Error::ZeroInput);
    }
    let elems = ring.elements()?;
    for theta in ExponentVector::all_up_to(spec.nvars(), bound) {
        let s = sigma_alpha(spec, &theta, b);
        let d = delta_alpha(spec, &theta, b);
        let hit = elems.iter().any(|r| {
            let ar = ring.mul(a, r);
            !ring.is_zero(&ring.mul(&ar, &s)) || !ring.is_zero(&ring.mul(&ar, &d))
        });
        if hit {
            return Ok(Some(theta));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport {
    pub pairs_checked: usize,
    /// Pairs `(f, g)` outside `IA` with no single-term `h` such that `f h g ∉ IA`.
    pub unseparated: Vec<(SkewPolynomial, SkewPolynomial)>,
}

/// A single term `h` of degree at most `bound` with `f h g ∉ IA`.
pub fn find_separator(
    norm: &mut Normalizer<'_>,
    ideal: &BaseIdeal,
    f: &SkewPolynomial,
    g: &SkewPolynomial,
    bound: u32,
) -> Result<Option<SkewPolynomial>> {
    let spec = norm.spec();
    let ring = spec.ring();
    for h in single_terms(spec, bound)? {
        let fh = norm.mul(f, &h);
        let fhg = norm.mul(&fh, g);
        if fhg.coefficients().any(|c| !ideal.contains(ring, c)) {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// Samples pairs outside `IA` and looks for separators `h` with `f h g ∉ IA`.
pub fn primality_probe(spec: &ExtensionSpec, ideal: &BaseIdeal, bound: u32, samples: usize, seed: u64) -> Result<ProbeReport> {
    let ring = spec.ring();
    ring.order().ok_or(Error::NotEnumerable)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut norm = Normalizer::new(spec);
    let outside = |p: &SkewPolynomial| p.coefficients().any(|c| !ideal.contains(ring, c));
    let draw = |rng: &mut ChaCha8Rng| loop {
        let p = SkewPolynomial::random(ring, spec.nvars(), bound, 3, rng);
        if outside(&p) {
            return p;
        }
    };
    let mut unseparated = Vec::new();
    for _ in 0..samples {
        let f = draw(&mut rng);
        let g = draw(&mut rng);
        if find_separator(&mut norm, ideal, &f, &g, bound)?.is_none() {
            unseparated.push((f, g));
        }
    }
    Ok(ProbeReport { pairs_checked: samples, unseparated })
}

/// Checks `KA · LA ⊆ IA` on single terms of degree at most `bound`
/// and on `samples` random multi-term pairs.
pub fn witness_lift_check(
    spec: &ExtensionSpec,
    k: &FiniteIdeal,
    l: &FiniteIdeal,
    i: &FiniteIdeal,
    bound: u32,
    samples: usize,
) -> Result<bool> {
    let ring = spec.ring();
    let n = spec.nvars();
    let monos = ExponentVector::all_up_to(n, bound);
    let mut norm = Normalizer::new(spec);
    let inside = |p: &SkewPolynomial| p.coefficients().all(|c| i.contains(ring, c));
    let terms = |ideal: &FiniteIdeal| -> Vec<SkewPolynomial> {
        monos
            .iter()
            .flat_map(|m| ideal.elements(ring).into_iter().map(move |c| SkewPolynomial::term(ring, m.clone(), c)))
            .filter(|p| !p.is_zero())
            .collect()
    };
    let kt = terms(k);
    let lt = terms(l);
    for a in &kt {
        for b in &lt {
            if !inside(&norm.mul(a, b)) {
                return Ok(false);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x11f7);
    let pick = |ts: &[SkewPolynomial], rng: &mut ChaCha8Rng| {
        let mut p = SkewPolynomial::zero(n);
        for _ in 0..3 {
            if !ts.is_empty() {
                p.add_assign(ring, &ts[rand::Rng::gen_range(rng, 0..ts.len())]);
            }
        }
        p
    };
    for _ in 0..samples {
        let a = pick(&kt, &mut rng);
        let b = pick(&lt, &mut rng);
        if !inside(&norm.mul(&a, &b)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{DerMap, EndoMap, RingDescriptor};

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn dual_d_dt() -> ExtensionSpec {
        let r = RingDescriptor::quotient_poly(2, vec![0, 0, 1]).unwrap();
        let d = DerMap::from_t_image(&r, &EndoMap::Identity, r.one()).unwrap();
        ExtensionSpec::builder(r, 1).delta(0, d).build().unwrap()
    }

    fn swap_space() -> ExtensionSpec {
        let p = RingDescriptor::product(vec![3, 3]).unwrap();
        let swap = EndoMap::from_fn(&p, |e| match e {
            RingElement::Tuple(v) => RingElement::Tuple(vec![v[1], v[0]]),
            _ => unreachable!(),
        })
        .unwrap();
        ExtensionSpec::builder(p, 1).sigma(0, swap).build().unwrap()
    }

    #[test]
    fn coefficient_ideal_examples() {
        let e = ExtensionSpec::builder(RingDescriptor::zmod(6).unwrap(), 1).build().unwrap();
        let r = e.ring();
        let p = SkewPolynomial::from_terms(r, 1, [(ev(&[1]), r.from_i64(2)), (ev(&[0]), r.from_i64(4))]).unwrap();
        let rep = coefficient_ideal(&e, &[p], 3).unwrap();
        assert_eq!(rep.ideal, ideal_closure(r, &[r.from_i64(2)]).unwrap());
        assert!(rep.stable && rep.delta_invariant);
        assert!(coefficient_ideal(&e, &[SkewPolynomial::one(r, 1)], 3).unwrap().ideal.is_whole());

        let d = dual_d_dt();
        let r = d.ring();
        let tx = SkewPolynomial::term(r, ev(&[1]), r.t().unwrap());
        let rep = coefficient_ideal(&d, &[tx], 3).unwrap();
        assert!(rep.ideal.is_whole() && rep.stable);
        assert_eq!(coefficient_ideal(&swap_space(), &[], 3).unwrap_err(), Error::NotDerivationType);
    }

    #[test]
    fn annihilator_of_2x_over_z4() {
        let e = ExtensionSpec::builder(RingDescriptor::zmod(4).unwrap(), 1).build().unwrap();
        let r = e.ring();
        let f = SkewPolynomial::term(r, ev(&[1]), r.from_i64(2));
        let rep = annihilator_formula_check(&e, &f, 3).unwrap();
        assert!(rep.exhaustive && rep.holds());
        // g with even coefficients: 2^4 of the 4^4 candidates
        assert_eq!((rep.left_count, rep.right_count), (16, 16));

        let unit = SkewPolynomial::term(r, ev(&[2]), r.from_i64(3));
        let rep = annihilator_formula_check(&e, &unit, 3).unwrap();
        assert!(rep.holds() && rep.left_count == 1);
    }

    #[test]
    fn minimality_failure_on_dual_numbers() {
        let d = dual_d_dt();
        let r = d.ring();
        let tx = SkewPolynomial::term(r, ev(&[1]), r.t().unwrap());
        assert_eq!(annihilator_formula_check(&d, &tx, 3).unwrap_err(), Error::HypothesisFailed("minimality of lm(f)".into()));
    }

    #[test]
    fn criterion_search_examples() {
        let e = swap_space();
        let p = e.ring();
        let a = RingElement::Tuple(vec![1, 0]);
        let b = RingElement::Tuple(vec![0, 1]);
        assert_eq!(prime_criterion_search(&e, &a, &b, 3).unwrap(), Some(ev(&[1])));
        assert_eq!(prime_criterion_search(&e, &p.one(), &p.one(), 3).unwrap(), Some(ev(&[0])));
        let z6 = ExtensionSpec::builder(RingDescriptor::zmod(6).unwrap(), 1).build().unwrap();
        let r = z6.ring();
        assert_eq!(prime_criterion_search(&z6, &r.from_i64(2), &r.from_i64(3), 6).unwrap(), None);
        assert_eq!(prime_criterion_search(&z6, &r.zero(), &r.one(), 1), Err(Error::ZeroInput));
    }

    #[test]
    fn separators() {
        let d = dual_d_dt();
        let r = d.ring();
        let zero = BaseIdeal::Finite(FiniteIdeal::zero(r).unwrap());
        let t = SkewPolynomial::constant(r, 1, r.t().unwrap());
        let mut norm = Normalizer::new(&d);
        let h = find_separator(&mut norm, &zero, &t, &t, 3).unwrap().unwrap();
        assert_eq!(h, SkewPolynomial::variable(r, 1, 0));

        let z6 = ExtensionSpec::builder(RingDescriptor::zmod(6).unwrap(), 1).build().unwrap();
        let r = z6.ring();
        let zero = BaseIdeal::Finite(FiniteIdeal::zero(r).unwrap());
        let mut norm = Normalizer::new(&z6);
        let two = SkewPolynomial::constant(r, 1, r.from_i64(2));
        let three = SkewPolynomial::constant(r, 1, r.from_i64(3));
        assert_eq!(find_separator(&mut norm, &zero, &two, &three, 3).unwrap(), None);
    }
}
