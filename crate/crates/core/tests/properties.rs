mod common;

use std::cmp::Ordering;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use spbw::catalog::{default_entry, ENTRIES};
use spbw::classify::{extended_membership, BaseIdeal};
use spbw::extension::{deglex_compare, ExponentVector, ExtensionSpec, Normalizer, SkewPolynomial};
use spbw::ideal::{enumerate_ideals, invariance, SigmaDeltaSystem};
use spbw::syntax::{format_polynomial, parse_expression_with};

/// Catalog entries whose coefficient ring is a domain with injective σ.
const DOMAIN_ENTRIES: [&str; 3] = ["weyl", "quantum_plane", "multiplicative_weyl"];

fn entry_spec(k: usize) -> ExtensionSpec {
    default_entry(ENTRIES[k % ENTRIES.len()].name).unwrap()
}

fn draw(spec: &ExtensionSpec, rng: &mut ChaCha8Rng, nonzero: bool) -> SkewPolynomial {
    if nonzero {
        SkewPolynomial::random_nonzero(spec.ring(), spec.nvars(), 3, 3, rng)
    } else {
        SkewPolynomial::random(spec.ring(), spec.nvars(), 3, 3, rng)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(k in 0usize..8, seed: u64) {
        let spec = entry_spec(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g, h) = (draw(&spec, &mut rng, false), draw(&spec, &mut rng, false), draw(&spec, &mut rng, false));
        let mut norm = Normalizer::new(&spec);
        let (fg, gh) = (norm.mul(&f, &g), norm.mul(&g, &h));
        prop_assert_eq!(norm.mul(&fg, &h), norm.mul(&f, &gh));
    }

    #[test]
    fn multiplication_distributes(k in 0usize..8, seed: u64) {
        let spec = entry_spec(k);
        let ring = spec.ring();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g, h) = (draw(&spec, &mut rng, false), draw(&spec, &mut rng, false), draw(&spec, &mut rng, false));
        let mut norm = Normalizer::new(&spec);
        let gh = g.add(ring, &h);
        let left = norm.mul(&f, &gh);
        let split = norm.mul(&f, &g).add(ring, &norm.mul(&f, &h));
        prop_assert_eq!(left, split);
        let right = norm.mul(&gh, &f);
        let split = norm.mul(&g, &f).add(ring, &norm.mul(&h, &f));
        prop_assert_eq!(right, split);
    }

    #[test]
    fn deglex_is_a_total_order(a in prop::collection::vec(0u32..4, 3), b in prop::collection::vec(0u32..4, 3), c in prop::collection::vec(0u32..4, 3)) {
        let (a, b, c) = (ExponentVector::new(a), ExponentVector::new(b), ExponentVector::new(c));
        let ab = deglex_compare(&a, &b).unwrap();
        prop_assert_eq!(ab, deglex_compare(&b, &a).unwrap().reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        if a.degree() != b.degree() {
            prop_assert_eq!(ab, a.degree().cmp(&b.degree()));
        }
        let bc = deglex_compare(&b, &c).unwrap();
        if ab != Ordering::Greater && bc != Ordering::Greater {
            prop_assert_ne!(deglex_compare(&a, &c).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn degree_of_product_is_bounded(k in 0usize..8, seed: u64) {
        let spec = entry_spec(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g) = (draw(&spec, &mut rng, true), draw(&spec, &mut rng, true));
        let fg = Normalizer::new(&spec).mul(&f, &g);
        let bound = f.degree().unwrap() + g.degree().unwrap();
        match fg.degree() {
            Some(d) => prop_assert!(d <= bound),
            None => prop_assert!(!DOMAIN_ENTRIES.contains(&ENTRIES[k % ENTRIES.len()].name)),
        }
    }

    #[test]
    fn domains_have_exact_degrees(k in 0usize..3, seed: u64) {
        let spec = default_entry(DOMAIN_ENTRIES[k]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g) = (draw(&spec, &mut rng, true), draw(&spec, &mut rng, true));
        let fg = Normalizer::new(&spec).mul(&f, &g);
        prop_assert!(!fg.is_zero());
        prop_assert_eq!(fg.degree(), Some(f.degree().unwrap() + g.degree().unwrap()));
    }

    #[test]
    fn extended_ideals_absorb_products(r in 0usize..5, seed: u64) {
        let ring = small_rings().swap_remove(r);
        let systems = pool_systems(&ring);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sys = &systems[rand::Rng::gen_range(&mut rng, 0..systems.len())];
        let mut b = ExtensionSpec::builder(ring.clone(), sys.len());
        for (i, (s, d)) in sys.sigmas.iter().zip(&sys.deltas).enumerate() {
            b = b.sigma(i, s.clone()).delta(i, d.clone());
        }
        let spec = b.build().unwrap();
        let system = SigmaDeltaSystem::from_spec(&spec);
        for i in enumerate_ideals(&ring).unwrap() {
            let inv = invariance(&ring, &i, &system).unwrap();
            if !(inv.sigma_invariant && inv.delta_invariant) {
                continue;
            }
            let base = BaseIdeal::Finite(i.clone());
            let f = draw(&spec, &mut rng, false).map_coefficients(&ring, |c| if i.contains(&ring, c) { c.clone() } else { ring.zero() });
            prop_assert!(extended_membership(&spec, &base, &f).unwrap());
            let g = draw(&spec, &mut rng, false);
            let mut norm = Normalizer::new(&spec);
            prop_assert!(extended_membership(&spec, &base, &norm.mul(&f, &g)).unwrap());
            prop_assert!(extended_membership(&spec, &base, &norm.mul(&g, &f)).unwrap());
        }
    }

    #[test]
    fn format_then_parse_is_identity(k in 0usize..8, seed: u64) {
        let spec = entry_spec(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = draw(&spec, &mut rng, false);
        let text = format_polynomial(&spec, &f);
        let back = parse_expression_with(&text, &mut Normalizer::new(&spec)).unwrap();
        prop_assert_eq!(back, f, "{}", text);
    }
}
