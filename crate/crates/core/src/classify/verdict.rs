//! Theorem-certified primality verdicts for extended ideals `IA`.

use serde::Serialize;

use super::extended::BaseIdeal;
use super::probes::witness_lift_check;
use crate::coeff::RingDescriptor;
use crate::error::{Error, Result};
use crate::extension::ExtensionSpec;
use crate::ideal::{enumerate_ideals, ideal_closure, invariance, primality_in, principal_invariance, FiniteIdeal, PrimalityMode, SigmaDeltaSystem};

/// Degree bound for the witness lift check.
pub const LIFT_BOUND: u32 = 3;
/// Multi-term pairs sampled by the witness lift check.
pub const LIFT_SAMPLES: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Theorem {
    DerivationType,
    AutomorphismType,
    MixedType,
    None,
}

impl Theorem {
    pub const ROUTES: [Theorem; 3] = [Theorem::DerivationType, Theorem::AutomorphismType, Theorem::MixedType];

    fn mode(self) -> Option<PrimalityMode> {
        match self {
            Theorem::DerivationType => Some(PrimalityMode::DeltaPrime),
            Theorem::AutomorphismType => Some(PrimalityMode::SigmaPrime),
            Theorem::MixedType => Some(PrimalityMode::SigmaDeltaPrime),
            Theorem::None => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Conclusion {
    PrimeInA,
    NotPrimeInA,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub route: Theorem,
    pub name: String,
    pub passed: bool,
    pub evidence: String,
}

/// `(K, L)` with `K L ⊆ I`, `K ⊄ I`, `L ⊄ I`, lifted to `KA · LA ⊆ IA`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessPair {
    #[serde(skip)]
    pub k: FiniteIdeal,
    #[serde(skip)]
    pub l: FiniteIdeal,
    #[serde(rename = "k")]
    pub k_description: String,
    #[serde(rename = "l")]
    pub l_description: String,
    pub lift_verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub ideal: String,
    pub theorem: Theorem,
    pub hypothesis_trail: Vec<Hypothesis>,
    pub conclusion: Conclusion,
    pub witness: Option<WitnessPair>,
}

struct Context<'a> {
    spec: &'a ExtensionSpec,
    ideal: FiniteIdeal,
    system: SigmaDeltaSystem,
    lattice: Vec<FiniteIdeal>,
}

impl Context<'_> {
    fn ring(&self) -> &RingDescriptor {
        self.spec.ring()
    }

    fn describe(&self, i: &FiniteIdeal) -> String {
        i.describe(self.ring())
    }
}

fn hyp(route: Theorem, name: &str, passed: bool, evidence: impl Into<String>) -> Hypothesis {
    Hypothesis { route, name: name.to_string(), passed, evidence: evidence.into() }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Hypotheses of one route, in the order the theorem states them.
fn route_hypotheses(ctx: &Context<'_>, route: Theorem) -> Result<Vec<Hypothesis>> {
    let flags = ctx.spec.flags();
    let inv = invariance(ctx.ring(), &ctx.ideal, &ctx.system)?;
    let name = ctx.describe(&ctx.ideal);
    let mut out = Vec::new();
    match route {
        Theorem::DerivationType => {
            out.push(hyp(route, "derivation type", flags.derivation_type, format!("all sigma_i = id: {}", yes_no(flags.derivation_type))));
            out.push(hyp(route, "I delta-invariant", inv.delta_invariant, format!("delta_i({name}) inside {name}: {}", yes_no(inv.delta_invariant))));
        }
        Theorem::AutomorphismType => {
            out.push(hyp(route, "automorphism type", flags.automorphism_type, format!("all delta_i = 0 and sigma_i bijective: {}", yes_no(flags.automorphism_type))));
            out.push(hyp(route, "bijective", flags.bijective, format!("sigma_i bijective and c_ij units: {}", yes_no(flags.bijective))));
            out.push(hyp(route, "R commutative Noetherian", true, format!("{} is finite", ctx.ring())));
            out.push(hyp(route, "I sigma-invariant", inv.sigma_invariant, format!("sigma_i({name}) inside {name}: {}", yes_no(inv.sigma_invariant))));
        }
        Theorem::MixedType => {
            out.push(hyp(route, "bijective", flags.bijective, format!("sigma_i bijective and c_ij units: {}", yes_no(flags.bijective))));
            let zero_mask = FiniteIdeal::zero(ctx.ring())?;
            let rad = radical_in(ctx)?;
            out.push(hyp(route, "R semiprime", rad == zero_mask, format!("rad(R) = {}", ctx.describe(&rad))));
            let semi = primality_in(ctx.ring(), &ctx.lattice, &ctx.ideal, &ctx.system, PrimalityMode::Semiprime)?;
            let evidence = match &semi.witness {
                Some((k, _)) => format!("{}^2 inside {name}", ctx.describe(k)),
                None => "no K outside I with K^2 inside I".to_string(),
            };
            out.push(hyp(route, "I semiprime", semi.holds, evidence));
            let both = inv.sigma_invariant && inv.delta_invariant;
            out.push(hyp(
                route,
                "I (sigma,delta)-invariant",
                both,
                format!("sigma-invariant: {}, delta-invariant: {}", yes_no(inv.sigma_invariant), yes_no(inv.delta_invariant)),
            ));
        }
        Theorem::None => {}
    }
    Ok(out)
}

fn radical_in(ctx: &Context<'_>) -> Result<FiniteIdeal> {
    let trivial = SigmaDeltaSystem::trivial();
    let mut mask = vec![true; ctx.ideal.mask().len()];
    for p in ctx.lattice.iter().filter(|p| p.is_proper()) {
        if primality_in(ctx.ring(), &ctx.lattice, p, &trivial, PrimalityMode::Prime)?.holds {
            for (m, &q) in mask.iter_mut().zip(p.mask()) {
                *m &= q;
            }
        }
    }
    Ok(FiniteIdeal::from_mask(mask))
}

/// Applies `route` once its hypotheses have passed.
fn conclude(ctx: &Context<'_>, route: Theorem, trail: &mut Vec<Hypothesis>) -> Result<(Conclusion, Option<WitnessPair>)> {
    let mode = route.mode().expect("theorem route");
    let out = primality_in(ctx.ring(), &ctx.lattice, &ctx.ideal, &ctx.system, mode)?;
    let witness = match out.witness {
        Some((k, l)) => {
            let lift_verified = witness_lift_check(ctx.spec, &k, &l, &ctx.ideal, LIFT_BOUND, LIFT_SAMPLES)?;
            let evidence = format!("{} * {} inside {}", ctx.describe(&k), ctx.describe(&l), ctx.describe(&ctx.ideal));
            trail.push(hyp(route, &format!("I {}", mode.name()), false, evidence));
            Some(WitnessPair { k_description: ctx.describe(&k), l_description: ctx.describe(&l), k, l, lift_verified })
        }
        None => {
            trail.push(hyp(route, &format!("I {}", mode.name()), true, format!("no admissible K, L outside I with K L inside I ({} ideals)", ctx.lattice.len())));
            None
        }
    };
    let conclusion = if out.holds { Conclusion::PrimeInA } else { Conclusion::NotPrimeInA };
    Ok((conclusion, witness))
}

fn classify_routes(spec: &ExtensionSpec, ideal: &BaseIdeal, routes: &[Theorem]) -> Result<Verdict> {
    let ring = spec.ring();
    if ideal.is_whole(ring) {
        return Err(Error::ImproperIdeal);
    }
    match ring {
        RingDescriptor::Rationals => return Ok(rationals_verdict(ring, routes)),
        RingDescriptor::UniPoly(_) => return polynomial_verdict(spec, ideal),
        _ => {}
    }
    let finite = match ideal {
        BaseIdeal::Finite(i) => i.clone(),
        BaseIdeal::Principal(g) => ideal_closure(ring, std::slice::from_ref(g))?,
    };
    if Some(finite.mask().len()) != ring.order() {
        return Err(Error::MismatchedRing);
    }
    let ctx = Context { spec, system: SigmaDeltaSystem::from_spec(spec), lattice: enumerate_ideals(ring)?, ideal: finite };
    let mut trail = Vec::new();
    for &route in routes {
        let hyps = route_hypotheses(&ctx, route)?;
        let passed = hyps.iter().all(|h| h.passed);
        trail.extend(hyps);
        if passed {
            let (conclusion, witness) = conclude(&ctx, route, &mut trail)?;
            return Ok(Verdict { ideal: ctx.describe(&ctx.ideal), theorem: route, hypothesis_trail: trail, conclusion, witness });
        }
    }
    Ok(Verdict { ideal: ctx.describe(&ctx.ideal), theorem: Theorem::None, hypothesis_trail: trail, conclusion: Conclusion::Inconclusive, witness: None })
}

/// Over `Q` the only proper ideal is `0`, which is prime; `Q` only admits
/// `σ = id`, `δ = 0`, so the derivation-type route always applies.
fn rationals_verdict(ring: &RingDescriptor, routes: &[Theorem]) -> Verdict {
    let ideal = "(0)".to_string();
    if !routes.contains(&Theorem::DerivationType) {
        return Verdict { ideal, theorem: Theorem::None, hypothesis_trail: Vec::new(), conclusion: Conclusion::Inconclusive, witness: None };
    }
    let route = Theorem::DerivationType;
    let trail = vec![
        hyp(route, "derivation type", true, format!("{ring} only admits sigma = id")),
        hyp(route, "I delta-invariant", true, "delta = 0"),
        hyp(route, "I delta-prime", true, format!("{ring} is a field")),
    ];
    Verdict { ideal, theorem: route, hypothesis_trail: trail, conclusion: Conclusion::PrimeInA, witness: None }
}

/// Polynomial coefficient rings are not enumerable; only invariance facts are reported.
fn polynomial_verdict(spec: &ExtensionSpec, ideal: &BaseIdeal) -> Result<Verdict> {
    let ring = spec.ring();
    let BaseIdeal::Principal(g) = ideal else { return Err(Error::MismatchedRing) };
    let (sigma_inv, delta_inv) = principal_invariance(ring, g, &SigmaDeltaSystem::from_spec(spec))?;
    let name = ideal.describe(ring);
    let trail = vec![
        hyp(Theorem::None, "finite coefficient ring", false, format!("{ring} is infinite; base primality is not decided")),
        hyp(Theorem::None, "I sigma-invariant", sigma_inv, format!("generator divides sigma_i of itself: {}", yes_no(sigma_inv))),
        hyp(Theorem::None, "I delta-invariant", delta_inv, format!("generator divides delta_i of itself: {}", yes_no(delta_inv))),
    ];
    Ok(Verdict { ideal: name, theorem: Theorem::None, hypothesis_trail: trail, conclusion: Conclusion::Inconclusive, witness: None })
}

/// Tries the derivation-type, automorphism-type and mixed-type routes in that order.
pub fn classify_extended_ideal(spec: &ExtensionSpec, ideal: &BaseIdeal) -> Result<Verdict> {
    classify_routes(spec, ideal, &Theorem::ROUTES)
}

/// Applies a single route; [`Theorem::None`] always yields an inconclusive verdict.
pub fn classify_via(spec: &ExtensionSpec, ideal: &BaseIdeal, theorem: Theorem) -> Result<Verdict> {
    let routes: &[Theorem] = if theorem == Theorem::None { &[] } else { std::slice::from_ref(&theorem) };
    classify_routes(spec, ideal, routes)
}
