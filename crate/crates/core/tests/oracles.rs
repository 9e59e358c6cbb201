//! Library output checked against independent brute-force computations,
//! with the oracle values themselves frozen.

mod common;

use common::*;
use spbw::catalog::default_entry;
use spbw::coeff::pool::{enumerate_endomorphisms, enumerate_map_pairs, enumerate_sigma_derivations};
use spbw::coeff::{EndoMap, RingDescriptor, RingElement};
use spbw::extension::{ExponentVector, Normalizer, SkewPolynomial};
use spbw::ideal::{enumerate_ideals, ideal_closure, prime_radical};
use spbw::syntax::format_polynomial;

/// A ring `Z/m x Z/m` or `Z/m[t]/(t^2)` on pairs `(a, b)`, enumerated as `a + m*b`.
#[derive(Clone, Copy)]
enum PairRing {
    Product(usize),
    Dual(usize),
}

impl PairRing {
    fn modulus(self) -> usize {
        match self {
            PairRing::Product(m) | PairRing::Dual(m) => m,
        }
    }

    fn size(self) -> usize {
        self.modulus() * self.modulus()
    }

    fn split(self, x: usize) -> (usize, usize) {
        (x % self.modulus(), x / self.modulus())
    }

    fn join(self, a: usize, b: usize) -> usize {
        let m = self.modulus();
        a % m + m * (b % m)
    }

    fn add(self, x: usize, y: usize) -> usize {
        let ((a, b), (c, d)) = (self.split(x), self.split(y));
        self.join(a + c, b + d)
    }

    fn mul(self, x: usize, y: usize) -> usize {
        let ((a, b), (c, d)) = (self.split(x), self.split(y));
        match self {
            PairRing::Product(_) => self.join(a * c, b * d),
            PairRing::Dual(_) => self.join(a * c, a * d + b * c),
        }
    }

    fn one(self) -> usize {
        match self {
            PairRing::Product(_) => self.join(1, 1),
            PairRing::Dual(_) => self.join(1, 0),
        }
    }

    /// Additive generators: `(1,0), (0,1)` or `1, t`.
    fn basis(self) -> [usize; 2] {
        [self.join(1, 0), self.join(0, 1)]
    }

    /// Every additive map, as its table.
    fn additive_maps(self) -> Vec<Vec<usize>> {
        let n = self.size();
        let [e, f] = self.basis();
        let mut out = Vec::new();
        for u in 0..n {
            for v in 0..n {
                let image = |x: usize| {
                    let (a, b) = self.split(x);
                    let mut acc = 0;
                    for _ in 0..a {
                        acc = self.add(acc, u);
                    }
                    for _ in 0..b {
                        acc = self.add(acc, v);
                    }
                    acc
                };
                debug_assert_eq!((self.split(e), self.split(f)), ((1, 0), (0, 1)));
                out.push((0..n).map(image).collect());
            }
        }
        out
    }

    fn endomorphisms(self) -> Vec<Vec<usize>> {
        let n = self.size();
        self.additive_maps()
            .into_iter()
            .filter(|m| m[self.one()] == self.one() && (0..n).all(|x| (0..n).all(|y| m[self.mul(x, y)] == self.mul(m[x], m[y]))))
            .collect()
    }

    fn sigma_derivations(self, sigma: &[usize]) -> usize {
        let n = self.size();
        self.additive_maps()
            .into_iter()
            .filter(|d| (0..n).all(|x| (0..n).all(|y| d[self.mul(x, y)] == self.add(self.mul(sigma[x], d[y]), self.mul(d[x], y)))))
            .count()
    }

    fn is_injective(map: &[usize]) -> bool {
        let mut seen = map.to_vec();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == map.len()
    }
}

#[test]
fn ideal_counts_of_cyclic_rings_match_divisor_counts() {
    let frozen = [2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6, 2, 4, 4, 5];
    for n in 2..=16u64 {
        let oracle = divisor_count(n);
        assert_eq!(oracle, frozen[n as usize - 2], "divisor oracle at {n}");
        let z = RingDescriptor::zmod(n).unwrap();
        assert_eq!(enumerate_ideals(&z).unwrap().len(), oracle, "Z/{n}");
        let m = n as usize;
        assert_eq!(brute_force_ideal_count(m, |a, b| (a + b) % m, |a, b| a * b % m), oracle, "brute force Z/{n}");
    }
}

#[test]
fn ideal_counts_of_pair_rings_match_brute_force() {
    let cases = [
        (PairRing::Product(2), RingDescriptor::product(vec![2, 2]).unwrap(), 4),
        (PairRing::Product(3), RingDescriptor::product(vec![3, 3]).unwrap(), 4),
        (PairRing::Dual(2), RingDescriptor::quotient_poly(2, vec![0, 0, 1]).unwrap(), 3),
        (PairRing::Dual(3), RingDescriptor::quotient_poly(3, vec![0, 0, 1]).unwrap(), 3),
    ];
    for (oracle, ring, frozen) in cases {
        let count = brute_force_ideal_count(oracle.size(), |a, b| oracle.add(a, b), |a, b| oracle.mul(a, b));
        assert_eq!(count, frozen, "{ring}");
        assert_eq!(enumerate_ideals(&ring).unwrap().len(), count, "{ring}");
    }
}

#[test]
fn prime_radicals_of_cyclic_rings() {
    for n in 2..=40u64 {
        let z = RingDescriptor::zmod(n).unwrap();
        let g = radical_generator(n);
        let want = ideal_closure(&z, &[z.from_i64(g as i64)]).unwrap();
        assert_eq!(prime_radical(&z).unwrap(), want, "rad(Z/{n})");
    }
    assert_eq!([radical_generator(12), radical_generator(8), radical_generator(30)], [6, 2, 30]);
}

#[test]
fn endomorphism_and_derivation_counts_match_brute_force() {
    // (oracle, ring, #endomorphisms, #injective, #pool pairs)
    let cases = [
        (PairRing::Product(3), RingDescriptor::product(vec![3, 3]).unwrap(), 4, 2, 10),
        (PairRing::Dual(2), dual_numbers(), 2, 1, 4),
        (PairRing::Dual(3), RingDescriptor::quotient_poly(3, vec![0, 0, 1]).unwrap(), 3, 2, 12),
    ];
    for (oracle, ring, endos, injective, pairs) in cases {
        let oracle_endos = oracle.endomorphisms();
        let oracle_pairs: usize =
            oracle_endos.iter().filter(|m| PairRing::is_injective(m)).map(|s| oracle.sigma_derivations(s)).sum();
        assert_eq!(oracle_endos.len(), endos, "{ring} oracle endomorphisms");
        assert_eq!(oracle_endos.iter().filter(|m| PairRing::is_injective(m)).count(), injective, "{ring}");
        assert_eq!(oracle_pairs, pairs, "{ring} oracle pairs");
        assert_eq!(enumerate_endomorphisms(&ring).unwrap().len(), endos, "{ring}");
        assert_eq!(enumerate_map_pairs(&ring).unwrap().len(), pairs, "{ring}");
    }
    let p = RingDescriptor::product(vec![3, 3]).unwrap();
    let swap_table = PairRing::Product(3).endomorphisms().into_iter().find(|m| m[1] == 3).unwrap();
    assert_eq!(PairRing::Product(3).sigma_derivations(&swap_table), 9);
    assert_eq!(enumerate_sigma_derivations(&p, &swap(&p)).unwrap().len(), 9);
    assert_eq!(enumerate_sigma_derivations(&p, &EndoMap::Identity).unwrap().len(), 1);
}

fn factorial_ratio(b: u32, k: u32) -> i64 {
    (b - k + 1..=b).map(i64::from).product()
}

fn binomial(a: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * i64::from(a - i) / i64::from(i + 1))
}

#[test]
fn weyl_normal_forms_match_leibniz_expansion() {
    // x2^a x1^b = sum_k C(a,k) b!/(b-k)! x1^(b-k) x2^(a-k)
    let spec = default_entry("weyl").unwrap();
    let ring = spec.ring();
    let mut norm = Normalizer::new(&spec);
    let x1 = SkewPolynomial::variable(ring, 2, 0);
    let x2 = SkewPolynomial::variable(ring, 2, 1);
    for a in 0..=4u32 {
        for b in 0..=4u32 {
            let (x2a, x1b) = (norm.pow(&x2, a), norm.pow(&x1, b));
            let got = norm.mul(&x2a, &x1b);
            let mut want = SkewPolynomial::zero(2);
            for k in 0..=a.min(b) {
                let c = binomial(a, k) * factorial_ratio(b, k);
                want.add_term(ring, ExponentVector::new(vec![b - k, a - k]), ring.from_i64(c));
            }
            assert_eq!(got, want, "a = {a}, b = {b}");
        }
    }
    let (x2sq, x1sq) = (norm.pow(&x2, 2), norm.pow(&x1, 2));
    let frozen = norm.mul(&x2sq, &x1sq);
    assert_eq!(format_polynomial(&spec, &frozen), "x1^2*x2^2 + 4*x1*x2 + 2");
}

#[test]
fn quantum_plane_coefficient_table() {
    let spec = default_entry("quantum_plane").unwrap();
    let ring = spec.ring();
    let mut norm = Normalizer::new(&spec);
    // 2^(ab) mod 5, by a and b in 1..=3
    let frozen = [[2, 4, 3], [4, 1, 4], [3, 4, 2]];
    for a in 1..=3u32 {
        for b in 1..=3u32 {
            let c = norm.c_alpha_beta(&ExponentVector::new(vec![0, a]), &ExponentVector::new(vec![b, 0]));
            assert_eq!(c, ring.from_i64(frozen[a as usize - 1][b as usize - 1]), "a = {a}, b = {b}");
            assert_eq!(frozen[a as usize - 1][b as usize - 1], (0..a * b).fold(1, |acc, _| acc * 2 % 5));
        }
    }
    assert_eq!(ring.from_i64(4), RingElement::Residue(4));
}
