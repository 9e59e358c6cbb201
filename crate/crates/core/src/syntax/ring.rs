//! Reads the ring notation used by `Display for RingDescriptor`.

use std::str::FromStr;

use num::{BigInt, Integer, ToPrimitive};

use super::expr::parse_element;
use crate::coeff::{PolyBase, RingDescriptor, RingElement};
use crate::error::{Error, Result};

fn modulus(s: &str) -> Result<u64> {
    s.trim().parse().map_err(|_| Error::InvalidRing(format!("bad modulus '{}'", s.trim())))
}

/// Accepts `Z/n`, `Z/m x Z/k ...`, `(Z/n)[t]/(f)`, `Q`, `Q[t]` and `F_p[t]`.
pub fn parse_ring(src: &str) -> Result<RingDescriptor> {
    let s = src.trim();
    match s {
        "Q" => return Ok(RingDescriptor::rationals()),
        "Q[t]" => return RingDescriptor::unipoly(PolyBase::Rationals),
        _ => {}
    }
    if let Some(p) = s.strip_prefix("F_").and_then(|r| r.strip_suffix("[t]")) {
        return RingDescriptor::unipoly(PolyBase::ZMod(modulus(p)?));
    }
    if let Some(rest) = s.strip_prefix("(Z/") {
        let (n, f) = rest
            .split_once(")[t]/(")
            .and_then(|(n, f)| Some((n, f.strip_suffix(')')?)))
            .ok_or_else(|| Error::InvalidRing(format!("expected (Z/n)[t]/(f), got '{s}'")))?;
        let n = modulus(n)?;
        return RingDescriptor::quotient_poly(n, integer_t_poly(f, n)?);
    }
    let parts: Vec<&str> = s.split(" x ").collect();
    let mods = parts
        .iter()
        .map(|p| p.trim().strip_prefix("Z/").ok_or_else(|| Error::InvalidRing(format!("unknown ring '{s}'"))).and_then(modulus))
        .collect::<Result<Vec<u64>>>()?;
    if mods.len() == 1 {
        RingDescriptor::zmod(mods[0])
    } else {
        RingDescriptor::product(mods)
    }
}

/// Coefficients of an integer polynomial in `t`, reduced mod `n`, low degree first.
fn integer_t_poly(src: &str, n: u64) -> Result<Vec<u64>> {
    let qt = RingDescriptor::unipoly(PolyBase::Rationals)?;
    let RingElement::PolyQ(coeffs) = parse_element(src, &qt)? else { unreachable!("Q[t] element") };
    coeffs
        .iter()
        .map(|c| {
            if !c.is_integer() {
                return Err(Error::InvalidRing(format!("non-integer coefficient {c} in '{src}'")));
            }
            Ok(c.numer().mod_floor(&BigInt::from(n)).to_u64().expect("reduced"))
        })
        .collect()
}

impl FromStr for RingDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_ring(s)
    }
}
