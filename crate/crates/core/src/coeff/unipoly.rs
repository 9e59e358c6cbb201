//! Dense univariate polynomials over Q or a prime field, stored low degree
//! first with no trailing zeros.

use num::{BigInt, BigRational, Zero};

pub(crate) trait Field {
    type S: Clone + PartialEq + std::fmt::Debug;
    fn zero(&self) -> Self::S;
    fn add(&self, a: &Self::S, b: &Self::S) -> Self::S;
    fn neg(&self, a: &Self::S) -> Self::S;
    fn mul(&self, a: &Self::S, b: &Self::S) -> Self::S;
    /// Multiplicative inverse of a nonzero scalar.
    fn inv(&self, a: &Self::S) -> Self::S;
    fn is_zero(&self, a: &Self::S) -> bool;
}

pub(crate) struct Rat;

impl Field for Rat {
    type S = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

pub(crate) struct Prime(pub u64);

impl Field for Prime {
    type S = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a % self.0) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        pow_mod(*a, self.0 - 2, self.0)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

pub(crate) fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1 % m;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

pub(crate) fn trim<F: Field>(f: &F, mut v: Vec<F::S>) -> Vec<F::S> {
    while v.last().is_some_and(|c| f.is_zero(c)) {
        v.pop();
    }
    v
}

pub(crate) fn add<F: Field>(f: &F, a: &[F::S], b: &[F::S]) -> Vec<F::S> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => f.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(f, out)
}

pub(crate) fn neg<F: Field>(f: &F, a: &[F::S]) -> Vec<F::S> {
    a.iter().map(|c| f.neg(c)).collect()
}

pub(crate) fn mul<F: Field>(f: &F, a: &[F::S], b: &[F::S]) -> Vec<F::S> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, out)
}

/// Quotient and remainder of `a` by nonzero `b`.
pub(crate) fn divrem<F: Field>(f: &F, a: &[F::S], b: &[F::S]) -> (Vec<F::S>, Vec<F::S>) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let lead_inv = f.inv(b.last().unwrap());
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![f.zero(); rem.len() - db];
    while rem.len() > db && !rem.is_empty() {
        let shift = rem.len() - 1 - db;
        let c = f.mul(rem.last().unwrap(), &lead_inv);
        for (j, bj) in b.iter().enumerate() {
            let t = f.mul(&c, bj);
            rem[shift + j] = f.add(&rem[shift + j], &f.neg(&t));
        }
        quot[shift] = c;
        rem.pop();
        rem = trim(f, rem);
    }
    (trim(f, quot), rem)
}

/// Evaluates `p(u)` by Horner's rule.
pub(crate) fn compose<F: Field>(f: &F, p: &[F::S], u: &[F::S]) -> Vec<F::S> {
    let mut acc: Vec<F::S> = Vec::new();
    for c in p.iter().rev() {
        acc = mul(f, &acc, u);
        acc = add(f, &acc, &[c.clone()]);
    }
    acc
}

pub(crate) fn rational_from_int(k: &BigInt) -> BigRational {
    BigRational::from_integer(k.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    #[test]
    fn divrem_over_prime_field() {
        let f = Prime(5);
        // (t^2 + 1) = (t + 2)(t + 3) mod 5
        let a = vec![1, 0, 1];
        let b = vec![2, 1];
        let (q, r) = divrem(&f, &a, &b);
        assert_eq!(q, vec![3, 1]);
        assert!(r.is_empty());
    }

    #[test]
    fn compose_shift() {
        let f = Rat;
        let t = vec![BigRational::zero(), BigRational::one()];
        let u = vec![-BigRational::one(), BigRational::one()];
        // t^2 at t-1 = t^2 - 2t + 1
        let p = mul(&f, &t, &t);
        let got = compose(&f, &p, &u);
        let expect: Vec<BigRational> = [1, -2, 1].iter().map(|&k| BigRational::from_integer(k.into())).collect();
        assert_eq!(got, expect);
    }
}
