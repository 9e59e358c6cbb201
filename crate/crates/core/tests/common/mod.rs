//! Shared fixtures and independent oracles for the integration tests.
#![allow(dead_code)]

use num::{BigInt, BigRational, One, Zero};

use spbw::coeff::pool::enumerate_map_pairs;
use spbw::coeff::{DerMap, EndoMap, RingDescriptor, RingElement};
use spbw::extension::ExtensionSpec;
use spbw::ideal::SigmaDeltaSystem;

/// The small rings used by the exhaustive checks.
pub fn small_rings() -> Vec<RingDescriptor> {
    vec![
        RingDescriptor::zmod(4).unwrap(),
        RingDescriptor::zmod(6).unwrap(),
        RingDescriptor::zmod(12).unwrap(),
        RingDescriptor::product(vec![3, 3]).unwrap(),
        RingDescriptor::quotient_poly(2, vec![0, 0, 1]).unwrap(),
    ]
}

pub fn dual_numbers() -> RingDescriptor {
    RingDescriptor::quotient_poly(2, vec![0, 0, 1]).unwrap()
}

pub fn swap(p: &RingDescriptor) -> EndoMap {
    EndoMap::from_fn(p, |e| match e {
        RingElement::Tuple(v) => RingElement::Tuple(v.iter().rev().copied().collect()),
        _ => unreachable!("product ring"),
    })
    .unwrap()
}

/// `(Z/2)[t]/(t^2)[x; d/dt]`.
pub fn dual_d_dt() -> ExtensionSpec {
    let r = dual_numbers();
    let d = DerMap::from_t_image(&r, &EndoMap::Identity, r.one()).unwrap();
    ExtensionSpec::builder(r, 1).delta(0, d).build().unwrap()
}

/// `Z/3 x Z/3` with the component swap, one variable.
pub fn swap_space() -> ExtensionSpec {
    let p = RingDescriptor::product(vec![3, 3]).unwrap();
    let s = swap(&p);
    ExtensionSpec::builder(p, 1).sigma(0, s).build().unwrap()
}

/// Every system of one or two `(σ, δ)` pairs drawn (with repetition) from the pool.
pub fn pool_systems(ring: &RingDescriptor) -> Vec<SigmaDeltaSystem> {
    let pairs = enumerate_map_pairs(ring).unwrap();
    let mut out = Vec::new();
    for a in 0..pairs.len() {
        out.push(SigmaDeltaSystem::new(ring, vec![pairs[a].0.clone()], vec![pairs[a].1.clone()]).unwrap());
        for b in a..pairs.len() {
            let sys = SigmaDeltaSystem::new(
                ring,
                vec![pairs[a].0.clone(), pairs[b].0.clone()],
                vec![pairs[a].1.clone(), pairs[b].1.clone()],
            );
            if let Ok(s) = sys {
                out.push(s);
            }
        }
    }
    out
}

/// Number of positive divisors of `n`: the ideal count of `Z/n`.
pub fn divisor_count(n: u64) -> usize {
    (1..=n).filter(|d| n % d == 0).count()
}

/// Product of the distinct primes dividing `n`: the generator of `rad(Z/n)`.
pub fn radical_generator(n: u64) -> u64 {
    let mut m = n;
    let mut r = 1;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            r *= p;
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        r *= m;
    }
    r
}

/// Ideals of a ring given by raw addition/multiplication tables: subsets
/// containing 0 closed under addition and under multiplication by every element.
pub fn brute_force_ideal_count(size: usize, add: impl Fn(usize, usize) -> usize, mul: impl Fn(usize, usize) -> usize) -> usize {
    assert!(size <= 16, "oracle enumerates all subsets");
    (0u32..1 << size)
        .filter(|&mask| {
            let has = |x: usize| mask & (1 << x) != 0;
            has(0)
                && (0..size).all(|a| {
                    !has(a) || (0..size).all(|b| (!has(b) || has(add(a, b))) && has(mul(b, a)))
                })
        })
        .count()
}

/// Polynomials in `u` over Q, low degree first.
pub type QPoly = Vec<BigRational>;

pub fn qpoly_trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn monomial(k: usize) -> QPoly {
    let mut p = vec![BigRational::zero(); k + 1];
    p[k] = BigRational::one();
    p
}

/// Multiplication by `u`.
pub fn times_u(p: &QPoly) -> QPoly {
    let mut out = vec![BigRational::zero()];
    out.extend(p.iter().cloned());
    qpoly_trim(out)
}

/// `d/du`.
pub fn derivative(p: &QPoly) -> QPoly {
    qpoly_trim(p.iter().enumerate().skip(1).map(|(k, c)| c * BigRational::from_integer(BigInt::from(k))).collect())
}

pub fn qpoly_add(a: &QPoly, b: &QPoly) -> QPoly {
    let n = a.len().max(b.len());
    qpoly_trim(
        (0..n)
            .map(|k| a.get(k).cloned().unwrap_or_else(BigRational::zero) + b.get(k).cloned().unwrap_or_else(BigRational::zero))
            .collect(),
    )
}

pub fn qpoly_scale(c: &BigRational, p: &QPoly) -> QPoly {
    qpoly_trim(p.iter().map(|x| c * x).collect())
}
