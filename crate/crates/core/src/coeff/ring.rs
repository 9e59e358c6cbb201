//! Coefficient rings and their elements.
//!
//! Every supported ring is commutative with identity. Elements are stored in
//! a canonical form, so equality of [`RingElement`] values is equality in the
//! ring. Arithmetic methods on [`RingDescriptor`] assume their operands belong
//! to the ring (use [`RingDescriptor::contains`] or [`ring_arithmetic`] when
//! that is not known).

use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};
use rand::Rng;

use super::unipoly::{self, Field, Prime, Rat};
use crate::error::{Error, Result};

/// Largest finite ring accepted; keeps every exhaustive check tractable.
pub const MAX_FINITE_ORDER: usize = 4096;

/// Largest prime accepted as the base of `F_p[t]`.
const MAX_POLY_PRIME: u64 = 1 << 31;

/// Base field of a univariate polynomial ring `K[t]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PolyBase {
    Rationals,
    ZMod(u64),
}

/// Construction data of a commutative coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    /// `Z/n`.
    ZMod(u64),
    /// `Z/m_1 x ... x Z/m_k`.
    Product(Vec<u64>),
    /// `(Z/n)[t]/(f)` with `f` monic; `poly` holds `f` low degree first.
    QuotientPoly { modulus: u64, poly: Vec<u64> },
    Rationals,
    /// `K[t]` with `K` the rationals or a prime field.
    UniPoly(PolyBase),
    /// Quotient of a finite ring by an ideal; elements are the coset
    /// representatives of least enumeration index.
    Quotient(Arc<QuotientRing>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuotientRing {
    base: RingDescriptor,
    ideal: Vec<bool>,
    reps: Vec<usize>,
    rep_of: Vec<usize>,
}

impl QuotientRing {
    pub fn base(&self) -> &RingDescriptor {
        &self.base
    }

    /// Membership mask of the ideal, indexed by the base enumeration.
    pub fn ideal_mask(&self) -> &[bool] {
        &self.ideal
    }

    fn reduce(&self, e: RingElement) -> RingElement {
        let idx = self.rep_of[self.base.index_of(&e)];
        self.base.element_at(self.reps[idx])
    }

    /// The canonical coset representative of a base element.
    pub fn project(&self, e: &RingElement) -> RingElement {
        self.reduce(e.clone())
    }
}

/// An element of some [`RingDescriptor`] in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingElement {
    /// Residue in `[0, n)`.
    Residue(u64),
    /// Componentwise residues of a product ring.
    Tuple(Vec<u64>),
    /// Coefficients (low degree first, length `deg f`) of a `QuotientPoly` element.
    Truncated(Vec<u64>),
    Rational(BigRational),
    /// Element of `Q[t]`, low degree first, no trailing zeros.
    PolyQ(Vec<BigRational>),
    /// Element of `F_p[t]`, low degree first, no trailing zeros.
    PolyP(Vec<u64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
    Neg,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_int(k: &BigInt, n: u64) -> u64 {
    k.mod_floor(&BigInt::from(n)).to_u64().expect("residue fits in u64")
}

fn checked_order(factors: impl IntoIterator<Item = u64>) -> Option<usize> {
    let mut acc: usize = 1;
    for f in factors {
        acc = acc.checked_mul(usize::try_from(f).ok()?)?;
        if acc > MAX_FINITE_ORDER {
            return None;
        }
    }
    Some(acc)
}

impl RingDescriptor {
    pub fn zmod(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRing(format!("Z/{n}: modulus must be at least 2")));
        }
        if n as usize > MAX_FINITE_ORDER {
            return Err(Error::InvalidRing(format!(
                "Z/{n}: finite rings are limited to {MAX_FINITE_ORDER} elements"
            )));
        }
        Ok(RingDescriptor::ZMod(n))
    }

    pub fn product(factors: Vec<u64>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidRing("product ring needs at least one factor".into()));
        }
        if factors.iter().any(|&m| m < 2) {
            return Err(Error::InvalidRing("product factors must be at least 2".into()));
        }
        if checked_order(factors.iter().copied()).is_none() {
            return Err(Error::InvalidRing(format!(
                "product ring exceeds {MAX_FINITE_ORDER} elements"
            )));
        }
        Ok(RingDescriptor::Product(factors))
    }

    /// `(Z/n)[t]/(f)`, with `poly` the coefficients of `f`, low degree first.
    pub fn quotient_poly(modulus: u64, poly: Vec<u64>) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidRing("modulus must be at least 2".into()));
        }
        let poly: Vec<u64> = poly.into_iter().map(|c| c % modulus).collect();
        if poly.len() < 2 {
            return Err(Error::InvalidRing("quotient polynomial must have degree at least 1".into()));
        }
        if *poly.last().unwrap() != 1 {
            return Err(Error::InvalidRing("quotient polynomial must be monic".into()));
        }
        let deg = poly.len() - 1;
        if checked_order(std::iter::repeat_n(modulus, deg)).is_none() {
            return Err(Error::InvalidRing(format!(
                "quotient ring exceeds {MAX_FINITE_ORDER} elements"
            )));
        }
        Ok(RingDescriptor::QuotientPoly { modulus, poly })
    }

    pub fn rationals() -> Self {
        RingDescriptor::Rationals
    }

    pub fn unipoly(base: PolyBase) -> Result<Self> {
        if let PolyBase::ZMod(p) = base {
            if !is_prime(p) || p >= MAX_POLY_PRIME {
                return Err(Error::InvalidRing(format!(
                    "F_p[t] needs a prime p < 2^31, got {p}"
                )));
            }
        }
        Ok(RingDescriptor::UniPoly(base))
    }

    /// Quotient of a finite ring by the ideal with membership mask `ideal`
    /// (indexed by the enumeration of `base`). The mask must describe a
    /// proper ideal; this is not re-verified here.
    pub fn quotient(base: RingDescriptor, ideal: Vec<bool>) -> Result<Self> {
        let order = base.order().ok_or(Error::NotEnumerable)?;
        if ideal.len() != order || !ideal[0] {
            return Err(Error::InvalidRing("ideal mask does not match the ring".into()));
        }
        if ideal.iter().all(|&b| b) {
            return Err(Error::ImproperIdeal);
        }
        let members: Vec<RingElement> = ideal
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| base.element_at(i))
            .collect();
        let mut rep_of = vec![usize::MAX; order];
        let mut reps = Vec::new();
        for x in 0..order {
            if rep_of[x] != usize::MAX {
                continue;
            }
            let q = reps.len();
            reps.push(x);
            let ex = base.element_at(x);
            for m in &members {
                rep_of[base.index_of(&base.add(&ex, m))] = q;
            }
        }
        Ok(RingDescriptor::Quotient(Arc::new(QuotientRing { base, ideal, reps, rep_of })))
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// Number of elements, or `None` for infinite rings.
    pub fn order(&self) -> Option<usize> {
        match self {
            RingDescriptor::ZMod(n) => Some(*n as usize),
            RingDescriptor::Product(ms) => checked_order(ms.iter().copied()),
            RingDescriptor::QuotientPoly { modulus, poly } => {
                checked_order(std::iter::repeat_n(*modulus, poly.len() - 1))
            }
            RingDescriptor::Rationals | RingDescriptor::UniPoly(_) => None,
            RingDescriptor::Quotient(q) => Some(q.reps.len()),
        }
    }

    /// True when the ring has an element called `t`.
    pub fn has_t(&self) -> bool {
        match self {
            RingDescriptor::QuotientPoly { .. } | RingDescriptor::UniPoly(_) => true,
            RingDescriptor::Quotient(q) => q.base.has_t(),
            _ => false,
        }
    }

    pub fn zero(&self) -> RingElement {
        self.from_int(&BigInt::zero())
    }

    pub fn one(&self) -> RingElement {
        self.from_int(&BigInt::one())
    }

    /// Image of an integer under the unique map `Z -> R`.
    pub fn from_int(&self, k: &BigInt) -> RingElement {
        match self {
            RingDescriptor::ZMod(n) => RingElement::Residue(mod_int(k, *n)),
            RingDescriptor::Product(ms) => RingElement::Tuple(ms.iter().map(|&m| mod_int(k, m)).collect()),
            RingDescriptor::QuotientPoly { modulus, poly } => {
                let mut v = vec![0; poly.len() - 1];
                v[0] = mod_int(k, *modulus);
                RingElement::Truncated(v)
            }
            RingDescriptor::Rationals => RingElement::Rational(unipoly::rational_from_int(k)),
            RingDescriptor::UniPoly(PolyBase::Rationals) => {
                RingElement::PolyQ(unipoly::trim(&Rat, vec![unipoly::rational_from_int(k)]))
            }
            RingDescriptor::UniPoly(PolyBase::ZMod(p)) => {
                RingElement::PolyP(unipoly::trim(&Prime(*p), vec![mod_int(k, *p)]))
            }
            RingDescriptor::Quotient(q) => q.reduce(q.base.from_int(k)),
        }
    }

    pub fn from_i64(&self, k: i64) -> RingElement {
        self.from_int(&BigInt::from(k))
    }

    /// Embeds a rational number; only the rationals and `Q[t]` accept
    /// non-integral values.
    pub fn from_rational(&self, q: &BigRational) -> Option<RingElement> {
        if q.is_integer() {
            return Some(self.from_int(q.numer()));
        }
        match self {
            RingDescriptor::Rationals => Some(RingElement::Rational(q.clone())),
            RingDescriptor::UniPoly(PolyBase::Rationals) => Some(RingElement::PolyQ(vec![q.clone()])),
            _ => None,
        }
    }

    /// The distinguished element `t`, when the ring has one.
    pub fn t(&self) -> Option<RingElement> {
        match self {
            RingDescriptor::QuotientPoly { modulus, poly } => {
                let d = poly.len() - 1;
                let mut v = vec![0; d];
                if d == 1 {
                    v[0] = (modulus - poly[0]) % modulus;
                } else {
                    v[1] = 1;
                }
                Some(RingElement::Truncated(v))
            }
            RingDescriptor::UniPoly(PolyBase::Rationals) => {
                Some(RingElement::PolyQ(vec![BigRational::zero(), BigRational::one()]))
            }
            RingDescriptor::UniPoly(PolyBase::ZMod(_)) => Some(RingElement::PolyP(vec![0, 1])),
            RingDescriptor::Quotient(q) => q.base.t().map(|t| q.reduce(t)),
            _ => None,
        }
    }

    /// Element of a product ring from its components.
    pub fn tuple(&self, comps: &[BigInt]) -> Option<RingElement> {
        match self {
            RingDescriptor::Product(ms) if ms.len() == comps.len() => Some(RingElement::Tuple(
                ms.iter().zip(comps).map(|(&m, k)| mod_int(k, m)).collect(),
            )),
            RingDescriptor::Quotient(q) => q.base.tuple(comps).map(|e| q.reduce(e)),
            _ => None,
        }
    }

    /// Number of components when this is (a quotient of) a product ring.
    pub fn tuple_arity(&self) -> Option<usize> {
        match self {
            RingDescriptor::Product(ms) => Some(ms.len()),
            RingDescriptor::Quotient(q) => q.base.tuple_arity(),
            _ => None,
        }
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        use RingElement::*;
        match (self, a, b) {
            (RingDescriptor::ZMod(n), Residue(x), Residue(y)) => Residue((x + y) % n),
            (RingDescriptor::Product(ms), Tuple(x), Tuple(y)) => {
                Tuple(ms.iter().zip(x.iter().zip(y)).map(|(m, (u, v))| (u + v) % m).collect())
            }
            (RingDescriptor::QuotientPoly { modulus, .. }, Truncated(x), Truncated(y)) => {
                Truncated(x.iter().zip(y).map(|(u, v)| (u + v) % modulus).collect())
            }
            (RingDescriptor::Rationals, Rational(x), Rational(y)) => Rational(x + y),
            (RingDescriptor::UniPoly(PolyBase::Rationals), PolyQ(x), PolyQ(y)) => PolyQ(unipoly::add(&Rat, x, y)),
            (RingDescriptor::UniPoly(PolyBase::ZMod(p)), PolyP(x), PolyP(y)) => {
                PolyP(unipoly::add(&Prime(*p), x, y))
            }
            (RingDescriptor::Quotient(q), _, _) => q.reduce(q.base.add(a, b)),
            _ => panic!("operands {a:?}, {b:?} do not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        use RingElement::*;
        match (self, a) {
            (RingDescriptor::ZMod(n), Residue(x)) => Residue((n - x) % n),
            (RingDescriptor::Product(ms), Tuple(x)) => Tuple(ms.iter().zip(x).map(|(m, u)| (m - u) % m).collect()),
            (RingDescriptor::QuotientPoly { modulus, .. }, Truncated(x)) => {
                Truncated(x.iter().map(|u| (modulus - u) % modulus).collect())
            }
            (RingDescriptor::Rationals, Rational(x)) => Rational(-x),
            (RingDescriptor::UniPoly(PolyBase::Rationals), PolyQ(x)) => PolyQ(unipoly::neg(&Rat, x)),
            (RingDescriptor::UniPoly(PolyBase::ZMod(p)), PolyP(x)) => PolyP(unipoly::neg(&Prime(*p), x)),
            (RingDescriptor::Quotient(q), _) => q.reduce(q.base.neg(a)),
            _ => panic!("operand {a:?} does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        use RingElement::*;
        match (self, a, b) {
            (RingDescriptor::ZMod(n), Residue(x), Residue(y)) => Residue(x * y % n),
            (RingDescriptor::Product(ms), Tuple(x), Tuple(y)) => {
                Tuple(ms.iter().zip(x.iter().zip(y)).map(|(m, (u, v))| u * v % m).collect())
            }
            (RingDescriptor::QuotientPoly { modulus, poly }, Truncated(x), Truncated(y)) => {
                let n = *modulus;
                let d = poly.len() - 1;
                let mut prod = vec![0u64; 2 * d - 1];
                for (i, u) in x.iter().enumerate() {
                    if *u == 0 {
                        continue;
                    }
                    for (j, v) in y.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + u * v) % n;
                    }
                }
                // reduce by the monic modulus from the top
                for k in (d..prod.len()).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    for (j, fj) in poly.iter().enumerate() {
                        let idx = k - d + j;
                        prod[idx] = (prod[idx] + n * n - c * fj % n) % n;
                    }
                }
                prod.truncate(d);
                Truncated(prod)
            }
            (RingDescriptor::Rationals, Rational(x), Rational(y)) => Rational(x * y),
            (RingDescriptor::UniPoly(PolyBase::Rationals), PolyQ(x), PolyQ(y)) => PolyQ(unipoly::mul(&Rat, x, y)),
            (RingDescriptor::UniPoly(PolyBase::ZMod(p)), PolyP(x), PolyP(y)) => {
                PolyP(unipoly::mul(&Prime(*p), x, y))
            }
            (RingDescriptor::Quotient(q), _, _) => q.reduce(q.base.mul(a, b)),
            _ => panic!("operands {a:?}, {b:?} do not belong to {self}"),
        }
    }

    pub fn pow(&self, a: &RingElement, k: u32) -> RingElement {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn is_zero(&self, a: &RingElement) -> bool {
        *a == self.zero()
    }

    pub fn is_one(&self, a: &RingElement) -> bool {
        *a == self.one()
    }

    /// True iff `a` is a canonical element of this ring.
    pub fn contains(&self, a: &RingElement) -> bool {
        match self.canonical(a) {
            Ok(c) => c == *a,
            Err(_) => false,
        }
    }

    /// Canonical form of `a`; fails when `a` has the wrong shape for the ring.
    pub fn canonical(&self, a: &RingElement) -> Result<RingElement> {
        use RingElement::*;
        Ok(match (self, a) {
            (RingDescriptor::ZMod(n), Residue(x)) => Residue(x % n),
            (RingDescriptor::Product(ms), Tuple(x)) if x.len() == ms.len() => {
                Tuple(ms.iter().zip(x).map(|(m, u)| u % m).collect())
            }
            (RingDescriptor::QuotientPoly { modulus, poly }, Truncated(x)) if x.len() == poly.len() - 1 => {
                Truncated(x.iter().map(|u| u % modulus).collect())
            }
            (RingDescriptor::Rationals, Rational(x)) => Rational(x.reduced()),
            (RingDescriptor::UniPoly(PolyBase::Rationals), PolyQ(x)) => {
                PolyQ(unipoly::trim(&Rat, x.iter().map(|c| c.reduced()).collect()))
            }
            (RingDescriptor::UniPoly(PolyBase::ZMod(p)), PolyP(x)) => {
                PolyP(unipoly::trim(&Prime(*p), x.iter().map(|c| c % p).collect()))
            }
            (RingDescriptor::Quotient(q), _) => q.reduce(q.base.canonical(a)?),
            _ => return Err(Error::MismatchedRing),
        })
    }

    /// Element at position `idx` of the canonical enumeration.
    ///
    /// Product tuples are ordered lexicographically (first component most
    /// significant); `QuotientPoly` elements are ordered with the highest
    /// power of `t` most significant, giving `0, 1, t, 1+t` for `Z/2[t]/(t^2)`.
    pub fn element_at(&self, idx: usize) -> RingElement {
        match self {
            RingDescriptor::ZMod(_) => RingElement::Residue(idx as u64),
            RingDescriptor::Product(ms) => {
                let mut rest = idx as u64;
                let mut comps = vec![0; ms.len()];
                for (slot, m) in comps.iter_mut().zip(ms).rev() {
                    *slot = rest % m;
                    rest /= m;
                }
                RingElement::Tuple(comps)
            }
            RingDescriptor::QuotientPoly { modulus, poly } => {
                let mut rest = idx as u64;
                let coeffs = (0..poly.len() - 1)
                    .map(|_| {
                        let c = rest % modulus;
                        rest /= modulus;
                        c
                    })
                    .collect();
                RingElement::Truncated(coeffs)
            }
            RingDescriptor::Quotient(q) => q.base.element_at(q.reps[idx]),
            RingDescriptor::Rationals | RingDescriptor::UniPoly(_) => {
                panic!("element_at on infinite ring {self}")
            }
        }
    }

    /// Position of `a` in the canonical enumeration.
    pub fn index_of(&self, a: &RingElement) -> usize {
        match (self, a) {
            (RingDescriptor::ZMod(_), RingElement::Residue(x)) => *x as usize,
            (RingDescriptor::Product(ms), RingElement::Tuple(x)) => {
                ms.iter().zip(x).fold(0u64, |acc, (m, u)| acc * m + u) as usize
            }
            (RingDescriptor::QuotientPoly { modulus, .. }, RingElement::Truncated(x)) => {
                x.iter().rev().fold(0u64, |acc, c| acc * modulus + c) as usize
            }
            (RingDescriptor::Quotient(q), _) => q.rep_of[q.base.index_of(a)],
            _ => panic!("index_of: {a:?} is not an element of finite ring {self}"),
        }
    }

    /// All elements in canonical enumeration order.
    pub fn elements(&self) -> Result<Vec<RingElement>> {
        let n = self.order().ok_or(Error::NotEnumerable)?;
        Ok((0..n).map(|i| self.element_at(i)).collect())
    }

    pub fn is_unit(&self, a: &RingElement) -> bool {
        self.inverse(a).is_some()
    }

    pub fn inverse(&self, a: &RingElement) -> Option<RingElement> {
        match (self, a) {
            (RingDescriptor::Rationals, RingElement::Rational(x)) => {
                (!x.is_zero()).then(|| RingElement::Rational(x.recip()))
            }
            (RingDescriptor::UniPoly(PolyBase::Rationals), RingElement::PolyQ(x)) => {
                (x.len() == 1).then(|| RingElement::PolyQ(vec![x[0].recip()]))
            }
            (RingDescriptor::UniPoly(PolyBase::ZMod(p)), RingElement::PolyP(x)) => {
                (x.len() == 1).then(|| RingElement::PolyP(vec![Prime(*p).inv(&x[0])]))
            }
            _ => {
                let one = self.one();
                (0..self.order()?).map(|i| self.element_at(i)).find(|b| self.mul(a, b) == one)
            }
        }
    }

    /// True iff `a * b = 0` forces `b = 0`.
    pub fn is_regular(&self, a: &RingElement) -> bool {
        match self.order() {
            None => !self.is_zero(a),
            Some(n) => (0..n).all(|i| {
                let b = self.element_at(i);
                !self.is_zero(&self.mul(a, &b)) || self.is_zero(&b)
            }),
        }
    }

    /// True when the ring has no zero divisors (and is nonzero).
    pub fn is_domain(&self) -> bool {
        match self.order() {
            None => true,
            Some(n) => (1..n).all(|i| self.is_regular(&self.element_at(i))),
        }
    }

    /// Degree in `t` of a `K[t]` element (`None` for zero or other rings).
    pub fn t_degree(&self, a: &RingElement) -> Option<usize> {
        match a {
            RingElement::PolyQ(x) => x.len().checked_sub(1),
            RingElement::PolyP(x) => x.len().checked_sub(1),
            _ => None,
        }
    }

    /// `p(u)` for `p` in `K[t]`: the substitution `t -> u`.
    pub fn compose_t(&self, p: &RingElement, u: &RingElement) -> RingElement {
        match (p, u) {
            (RingElement::PolyQ(x), RingElement::PolyQ(y)) => RingElement::PolyQ(unipoly::compose(&Rat, x, y)),
            (RingElement::PolyP(x), RingElement::PolyP(y)) => match self {
                RingDescriptor::UniPoly(PolyBase::ZMod(p)) => RingElement::PolyP(unipoly::compose(&Prime(*p), x, y)),
                _ => panic!("compose_t outside F_p[t]"),
            },
            _ => panic!("compose_t outside K[t]"),
        }
    }

    /// Coefficients in `t` (low degree first) of an element of a finite ring
    /// presented as a quotient of `(Z/n)[t]`.
    pub fn t_coefficients(&self, a: &RingElement) -> Option<Vec<u64>> {
        match (self, a) {
            (RingDescriptor::QuotientPoly { .. }, RingElement::Truncated(x)) => Some(x.clone()),
            (RingDescriptor::Quotient(q), _) => q.base.t_coefficients(a),
            _ => None,
        }
    }

    /// Remainder of `a` modulo `g` in `K[t]`, or `None` outside `K[t]`.
    pub fn t_remainder(&self, a: &RingElement, g: &RingElement) -> Option<RingElement> {
        match (self, a, g) {
            (RingDescriptor::UniPoly(PolyBase::Rationals), RingElement::PolyQ(x), RingElement::PolyQ(y)) => {
                if y.is_empty() {
                    return Some(a.clone());
                }
                Some(RingElement::PolyQ(unipoly::divrem(&Rat, x, y).1))
            }
            (RingDescriptor::UniPoly(PolyBase::ZMod(p)), RingElement::PolyP(x), RingElement::PolyP(y)) => {
                if y.is_empty() {
                    return Some(a.clone());
                }
                Some(RingElement::PolyP(unipoly::divrem(&Prime(*p), x, y).1))
            }
            _ => None,
        }
    }

    /// Whether `g` divides `a`, for rings with a principal-ideal helper
    /// (the rationals and `K[t]`).
    pub fn divides(&self, g: &RingElement, a: &RingElement) -> Option<bool> {
        match self {
            RingDescriptor::Rationals => Some(!self.is_zero(g) || self.is_zero(a)),
            RingDescriptor::UniPoly(_) => Some(self.is_zero(&self.t_remainder(a, g)?)),
            _ => None,
        }
    }

    /// A random element; small coefficients for the infinite rings.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> RingElement {
        match self {
            RingDescriptor::Rationals => RingElement::Rational(random_rational(rng)),
            RingDescriptor::UniPoly(PolyBase::Rationals) => {
                let deg = rng.gen_range(0..=2);
                RingElement::PolyQ(unipoly::trim(&Rat, (0..=deg).map(|_| random_rational(rng)).collect()))
            }
            RingDescriptor::UniPoly(PolyBase::ZMod(p)) => {
                let deg = rng.gen_range(0..=2);
                RingElement::PolyP(unipoly::trim(&Prime(*p), (0..=deg).map(|_| rng.gen_range(0..*p)).collect()))
            }
            _ => {
                let n = self.order().expect("finite");
                self.element_at(rng.gen_range(0..n))
            }
        }
    }

    /// A random nonzero element.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> RingElement {
        loop {
            let e = self.random_element(rng);
            if !self.is_zero(&e) {
                return e;
            }
        }
    }

    /// Text form of an element, parseable back by the expression language.
    pub fn format_element(&self, a: &RingElement) -> String {
        match a {
            RingElement::Residue(x) => x.to_string(),
            RingElement::Tuple(x) => {
                let parts: Vec<String> = x.iter().map(u64::to_string).collect();
                format!("[{}]", parts.join(","))
            }
            RingElement::Truncated(x) => format_t_poly(x.iter().map(|c| (c.is_zero(), false, c.to_string())).collect()),
            RingElement::Rational(x) => x.to_string(),
            RingElement::PolyQ(x) => format_t_poly(
                x.iter()
                    .map(|c| (c.is_zero(), c.is_negative(), c.abs().to_string()))
                    .collect(),
            ),
            RingElement::PolyP(x) => format_t_poly(x.iter().map(|c| (c.is_zero(), false, c.to_string())).collect()),
        }
    }
}

fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    let num: i64 = rng.gen_range(-5..=5);
    let den: i64 = rng.gen_range(1..=3);
    BigRational::new(num.into(), den.into())
}

/// Formats `sum c_k t^k` in descending degree from `(is_zero, is_negative, |c|)`.
fn format_t_poly(coeffs: Vec<(bool, bool, String)>) -> String {
    let mut out = String::new();
    for (k, (zero, negative, abs)) in coeffs.iter().enumerate().rev() {
        if *zero {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        };
        let body = if mono.is_empty() {
            abs.clone()
        } else if abs == "1" {
            mono
        } else {
            format!("{abs}*{mono}")
        };
        if out.is_empty() {
            if *negative {
                out.push('-');
            }
        } else {
            out.push_str(if *negative { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::ZMod(n) => write!(f, "Z/{n}"),
            RingDescriptor::Product(ms) => {
                let parts: Vec<String> = ms.iter().map(|m| format!("Z/{m}")).collect();
                write!(f, "{}", parts.join(" x "))
            }
            RingDescriptor::QuotientPoly { modulus, poly } => {
                let fpoly = format_t_poly(poly.iter().map(|c| (*c == 0, false, c.to_string())).collect());
                write!(f, "(Z/{modulus})[t]/({fpoly})")
            }
            RingDescriptor::Rationals => write!(f, "Q"),
            RingDescriptor::UniPoly(PolyBase::Rationals) => write!(f, "Q[t]"),
            RingDescriptor::UniPoly(PolyBase::ZMod(p)) => write!(f, "F_{p}[t]"),
            RingDescriptor::Quotient(q) => write!(f, "({}) / I  [|I| = {}]", q.base, q.ideal.iter().filter(|&&b| b).count()),
        }
    }
}

/// Checked ring arithmetic: both operands must belong to `ring`.
/// For [`RingOp::Neg`] the second operand is ignored.
pub fn ring_arithmetic(ring: &RingDescriptor, a: &RingElement, b: &RingElement, op: RingOp) -> Result<RingElement> {
    if !ring.contains(a) || (op != RingOp::Neg && !ring.contains(b)) {
        return Err(Error::MismatchedRing);
    }
    Ok(match op {
        RingOp::Add => ring.add(a, b),
        RingOp::Sub => ring.sub(a, b),
        RingOp::Mul => ring.mul(a, b),
        RingOp::Neg => ring.neg(a),
    })
}

/// All elements of a finite ring, in canonical order.
pub fn enumerate_elements(ring: &RingDescriptor) -> Result<Vec<RingElement>> {
    ring.elements()
}

/// Regularity test (non-zero-divisor).
pub fn is_regular(ring: &RingDescriptor, a: &RingElement) -> bool {
    ring.is_regular(a)
}
