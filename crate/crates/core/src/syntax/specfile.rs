//! The `.spbw` spec file: a JSON document describing a presentation.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "ring": { "kind": "quotient_poly", "modulus": 2, "poly": "t^2" },
//!   "variables": ["x1"],
//!   "sigma": ["identity"],
//!   "delta": ["1"],
//!   "relations": {}
//! }
//! ```
//!
//! `sigma` and `delta` entries are `"identity"`/`"zero"`, the image of `t`,
//! or a table of images in element enumeration order. Relations are keyed
//! `"j,i"` (1-based, `j > i`) and read `x_j x_i = c x_i x_j + tail`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::expr::{format_polynomial, parse_element, parse_expression};
use crate::coeff::{DerMap, EndoMap, PolyBase, RingDescriptor};
use crate::error::{Error, Result};
use crate::extension::{ExtensionSpec, Tail};
use crate::ideal::{ideal_closure, FiniteIdeal};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingSection {
    Zmod { modulus: u64 },
    Product { factors: Vec<u64> },
    QuotientPoly { modulus: u64, poly: String },
    Rationals,
    Unipoly {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        prime: Option<u64>,
    },
    Quotient { base: Box<RingSection>, ideal: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapSection {
    Named(String),
    Table(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationSection {
    #[serde(default = "one")]
    pub c: String,
    #[serde(default = "zero")]
    pub tail: String,
}

fn one() -> String {
    "1".into()
}

fn zero() -> String {
    "0".into()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub schema_version: u32,
    pub ring: RingSection,
    pub variables: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sigma: Vec<MapSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub delta: Vec<MapSection>,
    #[serde(default)]
    pub relations: BTreeMap<String, RelationSection>,
}

fn ring_from_section(s: &RingSection) -> Result<RingDescriptor> {
    match s {
        RingSection::Zmod { modulus } => RingDescriptor::zmod(*modulus),
        RingSection::Product { factors } => RingDescriptor::product(factors.clone()),
        RingSection::QuotientPoly { modulus, poly } => super::ring::parse_ring(&format!("(Z/{modulus})[t]/({poly})")),
        RingSection::Rationals => Ok(RingDescriptor::rationals()),
        RingSection::Unipoly { prime: None } => RingDescriptor::unipoly(PolyBase::Rationals),
        RingSection::Unipoly { prime: Some(p) } => RingDescriptor::unipoly(PolyBase::ZMod(*p)),
        RingSection::Quotient { base, ideal } => {
            let base = ring_from_section(base)?;
            let gens = ideal.iter().map(|g| parse_element(g, &base)).collect::<Result<Vec<_>>>()?;
            let mask = ideal_closure(&base, &gens)?;
            RingDescriptor::quotient(base, mask.mask().to_vec())
        }
    }
}

fn section_from_ring(r: &RingDescriptor) -> RingSection {
    match r {
        RingDescriptor::ZMod(n) => RingSection::Zmod { modulus: *n },
        RingDescriptor::Product(ms) => RingSection::Product { factors: ms.clone() },
        RingDescriptor::QuotientPoly { modulus, .. } => {
            let text = r.to_string();
            let f = text.rsplit_once("/(").map(|(_, f)| f.trim_end_matches(')').to_string()).unwrap_or_default();
            RingSection::QuotientPoly { modulus: *modulus, poly: f }
        }
        RingDescriptor::Rationals => RingSection::Rationals,
        RingDescriptor::UniPoly(PolyBase::Rationals) => RingSection::Unipoly { prime: None },
        RingDescriptor::UniPoly(PolyBase::ZMod(p)) => RingSection::Unipoly { prime: Some(*p) },
        RingDescriptor::Quotient(q) => {
            let ideal = FiniteIdeal::from_mask(q.ideal_mask().to_vec());
            let gens = ideal.generators(q.base()).iter().map(|g| q.base().format_element(g)).collect();
            RingSection::Quotient { base: Box::new(section_from_ring(q.base())), ideal: gens }
        }
    }
}

fn endo_from_section(ring: &RingDescriptor, m: &MapSection) -> Result<EndoMap> {
    match m {
        MapSection::Named(s) if s == "identity" => Ok(EndoMap::Identity),
        MapSection::Named(s) => EndoMap::from_t_image(ring, parse_element(s, ring)?),
        MapSection::Table(tab) => Ok(EndoMap::Table(tab.iter().map(|e| parse_element(e, ring)).collect::<Result<_>>()?)),
    }
}

fn der_from_section(ring: &RingDescriptor, sigma: &EndoMap, m: &MapSection) -> Result<DerMap> {
    match m {
        MapSection::Named(s) if s == "zero" => Ok(DerMap::Zero),
        MapSection::Named(s) => DerMap::from_t_image(ring, sigma, parse_element(s, ring)?),
        MapSection::Table(tab) => Ok(DerMap::Table(tab.iter().map(|e| parse_element(e, ring)).collect::<Result<_>>()?)),
    }
}

fn parse_key(key: &str, n: usize) -> Result<(usize, usize)> {
    let bad = || Error::SpecFile(format!("relation key '{key}' must be \"j,i\" with n >= j > i >= 1"));
    let (j, i) = key.split_once(',').ok_or_else(bad)?;
    let j: usize = j.trim().parse().map_err(|_| bad())?;
    let i: usize = i.trim().parse().map_err(|_| bad())?;
    if i == 0 || j <= i || j > n {
        return Err(bad());
    }
    Ok((i - 1, j - 1))
}

impl SpecDocument {
    pub fn to_spec(&self) -> Result<ExtensionSpec> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::SpecFile(format!("unsupported schema_version {}", self.schema_version)));
        }
        let ring = ring_from_section(&self.ring)?;
        let n = self.variables.len();
        for (what, len) in [("sigma", self.sigma.len()), ("delta", self.delta.len())] {
            if len != 0 && len != n {
                return Err(Error::SpecFile(format!("{what} has {len} entries for {n} variables")));
            }
        }
        let mut b = ExtensionSpec::builder(ring.clone(), n).names(self.variables.clone());
        // tails are read in the commutative polynomial ring on the same names
        let plain = ExtensionSpec::builder(ring.clone(), n).names(self.variables.clone()).build()?;
        for i in 0..n {
            let sigma = match self.sigma.get(i) {
                Some(m) => endo_from_section(&ring, m)?,
                None => EndoMap::Identity,
            };
            let delta = match self.delta.get(i) {
                Some(m) => der_from_section(&ring, &sigma, m)?,
                None => DerMap::Zero,
            };
            b = b.sigma(i, sigma).delta(i, delta);
        }
        for (key, rel) in &self.relations {
            let (i, j) = parse_key(key, n)?;
            let c = parse_element(&rel.c, &ring)?;
            let tail = Tail::from_polynomial(&ring, &parse_expression(&rel.tail, &plain)?)?;
            b = b.relation(i, j, c, tail);
        }
        b.build()
    }

    pub fn from_spec(spec: &ExtensionSpec) -> Self {
        let ring = spec.ring();
        let by_t = ring.t().filter(|_| ring.has_t());
        let sigma: Vec<MapSection> = spec
            .sigmas()
            .iter()
            .map(|s| match (s, &by_t) {
                (EndoMap::Identity, _) => MapSection::Named("identity".into()),
                (_, Some(t)) => MapSection::Named(ring.format_element(&s.apply(ring, t))),
                _ => MapSection::Table(s.table(ring).expect("finite").iter().map(|e| ring.format_element(e)).collect()),
            })
            .collect();
        let delta: Vec<MapSection> = spec
            .deltas()
            .iter()
            .zip(spec.sigmas())
            .map(|(d, s)| match (d, &by_t) {
                (DerMap::Zero, _) => MapSection::Named("zero".into()),
                (_, Some(t)) => MapSection::Named(ring.format_element(&d.apply(ring, s, t))),
                _ => MapSection::Table(d.table(ring, s).expect("finite").iter().map(|e| ring.format_element(e)).collect()),
            })
            .collect();
        let trivial = |m: &MapSection, name: &str| *m == MapSection::Named(name.into());
        let relations = spec
            .relations()
            .filter(|(_, rel)| !ring.is_one(&rel.c) || !rel.tail.is_zero(ring))
            .map(|(&(i, j), rel)| {
                let key = format!("{},{}", j + 1, i + 1);
                let tail = format_polynomial(spec, &rel.tail.to_polynomial(ring));
                (key, RelationSection { c: ring.format_element(&rel.c), tail })
            })
            .collect();
        SpecDocument {
            schema_version: SCHEMA_VERSION,
            ring: section_from_ring(ring),
            variables: spec.names().to_vec(),
            sigma: if sigma.iter().all(|m| trivial(m, "identity")) { Vec::new() } else { sigma },
            delta: if delta.iter().all(|m| trivial(m, "zero")) { Vec::new() } else { delta },
            relations,
        }
    }
}

/// Parses a spec document; JSON errors carry `line:column`.
pub fn parse_spec(text: &str) -> Result<ExtensionSpec> {
    let doc: SpecDocument =
        serde_json::from_str(text).map_err(|e| Error::SpecFile(format!("{}:{}: {e}", e.line(), e.column())))?;
    doc.to_spec()
}

/// Pretty-printed JSON for `spec`.
pub fn emit_spec(spec: &ExtensionSpec) -> String {
    let mut s = serde_json::to_string_pretty(&SpecDocument::from_spec(spec)).expect("serializable");
    s.push('\n');
    s
}

pub fn read_spec_file(path: &Path) -> Result<ExtensionSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::SpecFile(format!("{}: {e}", path.display())))?;
    parse_spec(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RingElement;

    #[test]
    fn weyl_document() {
        let text = r#"{
            "schema_version": 1,
            "ring": {"kind": "rationals"},
            "variables": ["x", "d"],
            "relations": {"2,1": {"tail": "1"}}
        }"#;
        let e = parse_spec(text).unwrap();
        assert!(e.flags().derivation_type && !e.flags().quasi_commutative);
        assert_eq!(parse_spec(&emit_spec(&e)).unwrap(), e);
    }

    #[test]
    fn dual_numbers_and_tables() {
        let text = r#"{"schema_version": 1, "ring": {"kind": "quotient_poly", "modulus": 2, "poly": "t^2"},
                       "variables": ["x1"], "delta": ["1"]}"#;
        let e = parse_spec(text).unwrap();
        assert!(!e.delta(0).is_zero(e.ring()));
        assert_eq!(parse_spec(&emit_spec(&e)).unwrap(), e);

        let swap = r#"{"schema_version": 1, "ring": {"kind": "product", "factors": [3, 3]}, "variables": ["x1"],
            "sigma": [["[0,0]","[0,1]","[0,2]","[1,0]","[1,1]","[1,2]","[2,0]","[2,1]","[2,2]"]]}"#;
        let e = parse_spec(swap).unwrap();
        assert!(e.sigma(0).is_identity(e.ring()));
        let real = r#"{"schema_version": 1, "ring": {"kind": "product", "factors": [3, 3]}, "variables": ["x1"],
            "sigma": [["[0,0]","[1,0]","[2,0]","[0,1]","[1,1]","[2,1]","[0,2]","[1,2]","[2,2]"]]}"#;
        let e = parse_spec(real).unwrap();
        assert_eq!(e.apply_sigma(0, &RingElement::Tuple(vec![1, 0])), RingElement::Tuple(vec![0, 1]));
        assert_eq!(parse_spec(&emit_spec(&e)).unwrap(), e);
    }

    #[test]
    fn quotient_rings_round_trip() {
        let text = r#"{"schema_version": 1, "ring": {"kind": "quotient", "base": {"kind": "zmod", "modulus": 12}, "ideal": ["4"]},
                       "variables": ["x1", "x2"], "relations": {"2,1": {"c": "3", "tail": "x1 + 2"}}}"#;
        let e = parse_spec(text).unwrap();
        assert_eq!(e.ring().order(), Some(4));
        assert_eq!(parse_spec(&emit_spec(&e)).unwrap(), e);
    }

    #[test]
    fn bad_documents() {
        assert!(matches!(parse_spec("{"), Err(Error::SpecFile(m)) if m.starts_with("1:")));
        let wrong_key = r#"{"schema_version": 1, "ring": {"kind": "rationals"}, "variables": ["x1","x2"], "relations": {"1,2": {}}}"#;
        assert!(matches!(parse_spec(wrong_key), Err(Error::SpecFile(_))));
        let bad_expr = r#"{"schema_version": 1, "ring": {"kind": "zmod", "modulus": 4}, "variables": ["x1","x2"], "relations": {"2,1": {"tail": "1/2"}}}"#;
        assert!(matches!(parse_spec(bad_expr), Err(Error::BadCoefficientForRing { .. })));
        let not_derivation = r#"{"schema_version": 1, "ring": {"kind": "zmod", "modulus": 4}, "variables": ["x1"], "delta": [["0","1","2","3"]]}"#;
        assert!(matches!(parse_spec(not_derivation), Err(Error::InvalidExtension(_))));
    }
}
