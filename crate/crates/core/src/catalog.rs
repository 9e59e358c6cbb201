//! Named example extensions with validated parameters.

use std::collections::BTreeMap;

use crate::coeff::{DerMap, EndoMap, PolyBase, RingDescriptor, RingElement};
use crate::error::{Error, Result};
use crate::extension::{check_pbw_consistency, ExtensionFlags, ExtensionSpec, Tail};
use crate::syntax::{parse_element, parse_ring};

/// One parameter of a catalog entry: key, default value, meaning.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpec {
    pub key: &'static str,
    pub default: &'static str,
    pub help: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub params: &'static [ParamSpec],
}

const fn p(key: &'static str, default: &'static str, help: &'static str) -> ParamSpec {
    ParamSpec { key, default, help }
}

pub const ENTRIES: [CatalogEntry; 8] = [
    CatalogEntry {
        name: "habitual",
        summary: "commutative polynomial ring R[x1..xn]",
        params: &[p("ring", "Z/6", "coefficient ring"), p("n", "2", "number of variables")],
    },
    CatalogEntry {
        name: "weyl",
        summary: "Weyl algebra A_n: x_{n+i} x_i = x_i x_{n+i} + 1",
        params: &[p("ring", "Q", "coefficient field (Q or Z/p)"), p("n", "1", "number of coordinate variables")],
    },
    CatalogEntry {
        name: "quantum_plane",
        summary: "x2 x1 = q x1 x2",
        params: &[p("ring", "Z/5", "coefficient field"), p("q", "2", "nonzero parameter")],
    },
    CatalogEntry {
        name: "quantum_space",
        summary: "x_j x_i = q_ij x_i x_j, x_i r = sigma_i(r) x_i",
        params: &[
            p("ring", "Z/3 x Z/3", "coefficient ring"),
            p("q", "[[1]]", "JSON matrix of element strings or integers"),
            p("sigma", "swap", "';'-separated: identity, swap, or an image of t"),
        ],
    },
    CatalogEntry {
        name: "shift",
        summary: "shift operators over K[t]: x t = (t - h) x",
        params: &[p("base", "Q", "Q or a prime p"), p("h", "1", "shift step")],
    },
    CatalogEntry {
        name: "differential",
        summary: "differential operators over K[t]: x t = t x + 1",
        params: &[p("base", "Q", "Q or a prime p")],
    },
    CatalogEntry {
        name: "difference",
        summary: "x t = (t + 1) x + 1 over K[t]",
        params: &[p("base", "Q", "Q or a prime p")],
    },
    CatalogEntry {
        name: "multiplicative_weyl",
        summary: "x_j x_i = lambda_ji x_i x_j",
        params: &[p("ring", "Q", "coefficient ring"), p("lambda", "[[1,2],[\"1/2\",1]]", "JSON matrix")],
    },
];

/// Flags each entry must carry with its default parameters.
pub fn expected_flags(name: &str) -> Option<ExtensionFlags> {
    let f = |quasi_commutative, derivation_type, endomorphism_type, automorphism_type, bijective| ExtensionFlags {
        quasi_commutative,
        derivation_type,
        endomorphism_type,
        automorphism_type,
        bijective,
        sigma_commutative: true,
    };
    Some(match name {
        "habitual" => f(true, true, true, true, true),
        "weyl" => f(false, true, true, true, true),
        "quantum_plane" | "multiplicative_weyl" => f(true, true, true, true, true),
        "quantum_space" | "shift" => f(true, false, true, true, true),
        "differential" => f(false, true, false, false, true),
        "difference" => f(false, false, false, false, true),
        _ => return None,
    })
}

pub fn entry(name: &str) -> Result<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParams(msg.into())
}

fn checked(spec: ExtensionSpec) -> Result<ExtensionSpec> {
    let report = check_pbw_consistency(&spec);
    if !report.is_consistent() {
        return Err(bad(format!("presentation is not consistent ({} overlap failures)", report.overlap_failures.len())));
    }
    Ok(spec)
}

fn build_err(e: Error) -> Error {
    match e {
        Error::InvalidExtension(m) => bad(m),
        other => other,
    }
}

pub fn habitual(ring: RingDescriptor, n: usize) -> Result<ExtensionSpec> {
    checked(ExtensionSpec::builder(ring, n).build().map_err(build_err)?)
}

pub fn weyl(ring: RingDescriptor, n: usize) -> Result<ExtensionSpec> {
    if !matches!(ring, RingDescriptor::Rationals | RingDescriptor::ZMod(_)) || !ring.is_domain() {
        return Err(bad(format!("weyl needs Q or Z/p, got {ring}")));
    }
    let mut b = ExtensionSpec::builder(ring.clone(), 2 * n);
    for i in 0..n {
        b = b.relation(i, n + i, ring.one(), Tail::constant(&ring, 2 * n, ring.one()));
    }
    checked(b.build().map_err(build_err)?)
}

pub fn quantum_plane(ring: RingDescriptor, q: RingElement) -> Result<ExtensionSpec> {
    if ring.is_zero(&q) {
        return Err(bad("q must be nonzero"));
    }
    let b = ExtensionSpec::builder(ring.clone(), 2).relation(0, 1, q, Tail::zero(&ring, 2));
    checked(b.build().map_err(build_err)?)
}

/// Checks `m_ii = 1` and `m_ij m_ji = 1`.
fn validate_matrix(ring: &RingDescriptor, m: &[Vec<RingElement>]) -> Result<()> {
    let n = m.len();
    if n == 0 || m.iter().any(|row| row.len() != n) {
        return Err(bad("parameter matrix must be square and nonempty"));
    }
    for i in 0..n {
        if !ring.is_one(&m[i][i]) {
            return Err(bad(format!("diagonal entry ({}, {}) must be 1", i + 1, i + 1)));
        }
        for j in i + 1..n {
            if !ring.is_one(&ring.mul(&m[i][j], &m[j][i])) {
                return Err(bad(format!("entries ({0}, {1}) and ({1}, {0}) must multiply to 1", i + 1, j + 1)));
            }
        }
    }
    Ok(())
}

/// `x_j x_i = q_ij x_i x_j` and `x_i r = σ_i(r) x_i`.
pub fn quantum_space(ring: RingDescriptor, q: Vec<Vec<RingElement>>, sigmas: Vec<EndoMap>) -> Result<ExtensionSpec> {
    validate_matrix(&ring, &q)?;
    let n = q.len();
    if sigmas.len() != n {
        return Err(bad(format!("{} sigma maps given for {n} variables", sigmas.len())));
    }
    let mut b = ExtensionSpec::builder(ring.clone(), n);
    for (i, s) in sigmas.into_iter().enumerate() {
        b = b.sigma(i, s);
    }
    for i in 0..n {
        for j in i + 1..n {
            b = b.relation(i, j, q[i][j].clone(), Tail::zero(&ring, n));
        }
    }
    checked(b.build().map_err(build_err)?)
}

fn poly_ring(base: PolyBase) -> Result<RingDescriptor> {
    RingDescriptor::unipoly(base).map_err(|e| bad(e.to_string()))
}

/// `σ(t) = t - h`, `δ = 0` on `K[t]`.
pub fn shift(base: PolyBase, h: RingElement) -> Result<ExtensionSpec> {
    let ring = poly_ring(base)?;
    if ring.t_degree(&h).is_some_and(|d| d > 0) {
        return Err(bad("h must be a constant"));
    }
    let sigma = EndoMap::from_t_image(&ring, ring.sub(&ring.t().expect("K[t]"), &h))?;
    checked(ExtensionSpec::builder(ring, 1).sigma(0, sigma).build().map_err(build_err)?)
}

/// `σ = id`, `δ = d/dt` on `K[t]`.
pub fn differential(base: PolyBase) -> Result<ExtensionSpec> {
    let ring = poly_ring(base)?;
    let delta = DerMap::from_t_image(&ring, &EndoMap::Identity, ring.one())?;
    checked(ExtensionSpec::builder(ring, 1).delta(0, delta).build().map_err(build_err)?)
}

/// `σ(t) = t + 1` with the σ-derivation `δ = σ - id`.
pub fn difference(base: PolyBase) -> Result<ExtensionSpec> {
    let ring = poly_ring(base)?;
    let t = ring.t().expect("K[t]");
    let sigma = EndoMap::from_t_image(&ring, ring.add(&t, &ring.one()))?;
    let delta = DerMap::from_t_image(&ring, &sigma, ring.one())?;
    checked(ExtensionSpec::builder(ring, 1).sigma(0, sigma).delta(0, delta).build().map_err(build_err)?)
}

/// `x_j x_i = λ_ji x_i x_j` for `i < j`.
pub fn multiplicative_weyl(ring: RingDescriptor, lambda: Vec<Vec<RingElement>>) -> Result<ExtensionSpec> {
    validate_matrix(&ring, &lambda)?;
    let n = lambda.len();
    let mut b = ExtensionSpec::builder(ring.clone(), n);
    for i in 0..n {
        for j in i + 1..n {
            b = b.relation(i, j, lambda[j][i].clone(), Tail::zero(&ring, n));
        }
    }
    checked(b.build().map_err(build_err)?)
}

/// Reads `key=value` parameters, filling in defaults.
pub struct Params<'a> {
    entry: &'static CatalogEntry,
    given: &'a BTreeMap<String, String>,
}

impl Params<'_> {
    fn get(&self, key: &str) -> &str {
        match self.given.get(key) {
            Some(v) => v,
            None => self.entry.params.iter().find(|p| p.key == key).map(|p| p.default).expect("declared parameter"),
        }
    }

    fn ring(&self) -> Result<RingDescriptor> {
        parse_ring(self.get("ring")).map_err(|e| bad(e.to_string()))
    }

    fn count(&self, key: &str) -> Result<usize> {
        match self.get(key).trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(bad(format!("{key} must be a positive integer"))),
        }
    }

    fn element(&self, ring: &RingDescriptor, key: &str) -> Result<RingElement> {
        parse_element(self.get(key), ring).map_err(|e| bad(format!("{key}: {e}")))
    }

    fn base(&self) -> Result<PolyBase> {
        match self.get("base").trim() {
            "Q" => Ok(PolyBase::Rationals),
            p => p.parse().map(PolyBase::ZMod).map_err(|_| bad(format!("base must be Q or a prime, got '{p}'"))),
        }
    }

    fn matrix(&self, ring: &RingDescriptor, key: &str) -> Result<Vec<Vec<RingElement>>> {
        let rows: Vec<Vec<serde_json::Value>> =
            serde_json::from_str(self.get(key)).map_err(|e| bad(format!("{key}: expected a JSON matrix ({e})")))?;
        rows.iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        let text = match v {
                            serde_json::Value::String(s) => s.clone(),
                            other => other.to_string(),
                        };
                        parse_element(&text, ring).map_err(|e| bad(format!("{key}: {e}")))
                    })
                    .collect()
            })
            .collect()
    }

    fn sigmas(&self, ring: &RingDescriptor, n: usize) -> Result<Vec<EndoMap>> {
        let specs: Vec<&str> = self.get("sigma").split(';').map(str::trim).collect();
        let specs = if specs.len() == 1 { vec![specs[0]; n] } else { specs };
        specs.iter().map(|s| named_endomorphism(ring, s)).collect()
    }
}

/// `identity`, `swap` (reverses the components of a product ring) or an image of `t`.
fn named_endomorphism(ring: &RingDescriptor, s: &str) -> Result<EndoMap> {
    match s {
        "identity" => Ok(EndoMap::Identity),
        "swap" => {
            if ring.tuple_arity().is_none() || matches!(ring, RingDescriptor::Quotient(_)) {
                return Err(bad(format!("swap needs a product ring, got {ring}")));
            }
            EndoMap::from_fn(ring, |e| match e {
                RingElement::Tuple(v) => RingElement::Tuple(v.iter().rev().copied().collect()),
                _ => unreachable!("product ring"),
            })
        }
        image => {
            let u = parse_element(image, ring).map_err(|e| bad(format!("sigma: {e}")))?;
            EndoMap::from_t_image(ring, u).map_err(|e| bad(e.to_string()))
        }
    }
}

/// Builds a catalog entry from `key=value` parameters.
pub fn build_catalog(name: &str, params: &BTreeMap<String, String>) -> Result<ExtensionSpec> {
    let entry = entry(name)?;
    if let Some(k) = params.keys().find(|k| !entry.params.iter().any(|p| p.key == k.as_str())) {
        return Err(bad(format!("{name} has no parameter '{k}'")));
    }
    let ps = Params { entry, given: params };
    match name {
        "habitual" => habitual(ps.ring()?, ps.count("n")?),
        "weyl" => weyl(ps.ring()?, ps.count("n")?),
        "quantum_plane" => {
            let ring = ps.ring()?;
            let q = ps.element(&ring, "q")?;
            quantum_plane(ring, q)
        }
        "quantum_space" => {
            let ring = ps.ring()?;
            let q = ps.matrix(&ring, "q")?;
            let sigmas = ps.sigmas(&ring, q.len())?;
            quantum_space(ring, q, sigmas)
        }
        "shift" => {
            let base = ps.base()?;
            let ring = poly_ring(base.clone())?;
            shift(base, ps.element(&ring, "h")?)
        }
        "differential" => differential(ps.base()?),
        "difference" => difference(ps.base()?),
        "multiplicative_weyl" => {
            let ring = ps.ring()?;
            let lambda = ps.matrix(&ring, "lambda")?;
            multiplicative_weyl(ring, lambda)
        }
        _ => unreachable!("listed entry"),
    }
}

/// An entry with its default parameters.
pub fn default_entry(name: &str) -> Result<ExtensionSpec> {
    build_catalog(name, &BTreeMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(kv: &[(&str, &str)]) -> BTreeMap<String, String> {
        kv.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }

    #[test]
    fn defaults_build_with_declared_flags() {
        for e in &ENTRIES {
            let spec = default_entry(e.name).unwrap();
            assert_eq!(spec.flags(), expected_flags(e.name).unwrap(), "{}", e.name);
        }
    }

    #[test]
    fn weyl_relation() {
        let w = default_entry("weyl").unwrap();
        let rel = w.relation(0, 1);
        assert!(w.ring().is_one(&rel.c) && w.ring().is_one(&rel.tail.constant));
        assert_eq!(build_catalog("weyl", &params(&[("n", "2")])).unwrap().nvars(), 4);
        assert!(matches!(build_catalog("weyl", &params(&[("ring", "Z/6")])), Err(Error::BadParams(_))));
    }

    #[test]
    fn degenerate_and_invalid_parameters() {
        let plane = build_catalog("quantum_plane", &params(&[("ring", "Q"), ("q", "1")])).unwrap();
        assert_eq!(plane, habitual(RingDescriptor::rationals(), 2).unwrap());
        assert!(matches!(build_catalog("quantum_plane", &params(&[("q", "0")])), Err(Error::BadParams(_))));
        assert!(matches!(build_catalog("quantum_plane", &params(&[("q", "5")])), Err(Error::BadParams(_))));
        let bad_matrix = params(&[("ring", "Q"), ("lambda", "[[1,2],[2,1]]")]);
        assert!(matches!(build_catalog("multiplicative_weyl", &bad_matrix), Err(Error::BadParams(_))));
        assert!(matches!(build_catalog("quantum_space", &params(&[("q", "[[2]]")])), Err(Error::BadParams(_))));
        assert!(matches!(build_catalog("nope", &BTreeMap::new()), Err(Error::UnknownEntry(_))));
        assert!(matches!(build_catalog("weyl", &params(&[("q", "1")])), Err(Error::BadParams(_))));
    }

    #[test]
    fn two_variable_quantum_space() {
        let ps = params(&[("ring", "Z/7"), ("q", "[[1,3],[5,1]]"), ("sigma", "identity")]);
        let e = build_catalog("quantum_space", &ps).unwrap();
        assert_eq!(e.relation(0, 1).c, e.ring().from_i64(3));
        // sigma must fix the q entries it passes over; swap on a product ring with q = 1 works
        let swap2 = params(&[("q", "[[1,1],[1,1]]"), ("sigma", "swap;swap")]);
        assert!(build_catalog("quantum_space", &swap2).unwrap().flags().automorphism_type);
    }
}
