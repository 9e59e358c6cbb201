//! Command-line front end for spec files.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spbw::catalog::build_catalog;
use spbw::classify::{classify_extended_ideal, primality_probe, BaseIdeal, Conclusion, Verdict};
use spbw::coeff::RingDescriptor;
use spbw::extension::{associated_graded, check_pbw_consistency, ExtensionFlags, ExtensionSpec, Normalizer, Overlap};
use spbw::ideal::{
    enumerate_ideals, ideal_chain, ideal_closure, check_chain_properties, invariance, prime_radical, primality, PrimalityMode,
    SigmaDeltaSystem,
};
use spbw::syntax::{emit_spec, format_polynomial, parse_element, parse_expression_with, read_spec_file, SCHEMA_VERSION};
use spbw::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "spbw", version, about = "Exact arithmetic and prime-ideal analysis for skew PBW extensions")]
struct Cli {
    /// Degree bound for probes
    #[arg(long, global = true, default_value_t = 3)]
    degree_bound: u32,
    /// Seed for sampled probes
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a spec and check the overlap conditions
    Check { file: PathBuf },
    /// Print normal forms of expressions
    Eval {
        file: PathBuf,
        #[arg(short = 'e', long = "expr", required = true)]
        exprs: Vec<String>,
    },
    /// List the ideals of a finite coefficient ring
    Ideals { file: PathBuf },
    /// Decide whether the extended ideal IA is prime
    Classify {
        file: PathBuf,
        /// Comma-separated generators of I
        #[arg(long)]
        ideal: String,
    },
    /// Write the associated graded extension
    Gr {
        file: PathBuf,
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
    /// Compute the chain I_0 = R, I_1 = I, I_2, ...
    Chain {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 3)]
        jmax: usize,
    },
    /// Write a named example extension
    Catalog {
        name: String,
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, String)>,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

fn parse_param(s: &str) -> Result<(String, String), String> {
    s.split_once('=').map(|(k, v)| (k.trim().to_string(), v.to_string())).ok_or_else(|| format!("expected key=value, got '{s}'"))
}

/// A failed command: exit code and message.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_parse_error() {
            2
        } else if e == Error::NotEnumerable {
            3
        } else {
            1
        };
        Failure { code, message: e.to_string() }
    }
}

fn unsupported(msg: impl Into<String>) -> Failure {
    Failure { code: 3, message: msg.into() }
}

struct Output {
    format: Format,
    text: Vec<String>,
    json: Value,
    code: u8,
}

impl Output {
    fn new(format: Format, command: &str) -> Self {
        Output { format, text: Vec::new(), json: json!({ "schema_version": SCHEMA_VERSION, "command": command }), code: 0 }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    fn set(&mut self, key: &str, v: Value) {
        self.json[key] = v;
    }

    fn emit(self) -> ExitCode {
        match self.format {
            Format::Text => {
                for l in &self.text {
                    println!("{l}");
                }
            }
            Format::Json => println!("{}", serde_json::to_string_pretty(&self.json).expect("json")),
        }
        ExitCode::from(self.code)
    }
}

fn load(path: &Path) -> Result<ExtensionSpec, Failure> {
    Ok(read_spec_file(path)?)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure { code: 1, message: format!("{}: {e}", path.display()) })
}

fn flags_json(f: &ExtensionFlags) -> Value {
    json!({
        "quasi_commutative": f.quasi_commutative,
        "derivation_type": f.derivation_type,
        "endomorphism_type": f.endomorphism_type,
        "automorphism_type": f.automorphism_type,
        "bijective": f.bijective,
        "sigma_commutative": f.sigma_commutative,
    })
}

fn flags_text(f: &ExtensionFlags) -> String {
    let named = [
        ("quasi-commutative", f.quasi_commutative),
        ("derivation type", f.derivation_type),
        ("endomorphism type", f.endomorphism_type),
        ("automorphism type", f.automorphism_type),
        ("bijective", f.bijective),
        ("sigma-commutative", f.sigma_commutative),
    ];
    let on: Vec<&str> = named.iter().filter(|(_, b)| *b).map(|(n, _)| *n).collect();
    format!("flags: {}", if on.is_empty() { "none".to_string() } else { on.join(", ") })
}

fn run_check(spec: &ExtensionSpec, out: &mut Output) {
    let report = check_pbw_consistency(spec);
    let ring = spec.ring();
    let failures: Vec<Value> = report
        .overlap_failures
        .iter()
        .map(|f| {
            let overlap = match &f.overlap {
                Overlap::Coefficient { i, j, r } => format!("({} {}) {}", spec.names()[*j], spec.names()[*i], ring.format_element(r)),
                Overlap::Generators { i, j, k } => format!("{} {} {}", spec.names()[*k], spec.names()[*j], spec.names()[*i]),
            };
            json!({ "overlap": overlap, "left": format_polynomial(spec, &f.left), "right": format_polynomial(spec, &f.right) })
        })
        .collect();
    if report.is_consistent() {
        out.line(format!("consistency: OK (σ/δ laws, {} overlap failures)", failures.len()));
    } else {
        out.line(format!(
            "consistency: FAILED (σ laws {}, δ laws {}, {} overlap failures)",
            if report.sigma_ok { "ok" } else { "failed" },
            if report.delta_ok { "ok" } else { "failed" },
            failures.len()
        ));
        for f in &failures {
            out.line(format!("  overlap {}: {} != {}", f["overlap"].as_str().unwrap_or(""), f["left"], f["right"]));
        }
        out.code = 1;
    }
    out.line(format!("ring: {}", ring));
    out.line(flags_text(&spec.flags()));
    out.set(
        "consistency",
        json!({
            "consistent": report.is_consistent(),
            "sigma_ok": report.sigma_ok,
            "delta_ok": report.delta_ok,
            "overlaps_checked": report.overlaps_checked,
            "overlap_failures": failures,
        }),
    );
    out.set("ring", json!(ring.to_string()));
    out.set("flags", flags_json(&spec.flags()));
}

fn finite_ring(spec: &ExtensionSpec, what: &str) -> Result<(), Failure> {
    if spec.ring().order().is_none() {
        return Err(unsupported(format!("{what} needs a finite coefficient ring, got {}", spec.ring())));
    }
    Ok(())
}

fn run_ideals(spec: &ExtensionSpec, out: &mut Output) -> Result<(), Failure> {
    finite_ring(spec, "ideals")?;
    let ring = spec.ring();
    let system = SigmaDeltaSystem::from_spec(spec);
    let lattice = enumerate_ideals(ring)?;
    let mut rows = Vec::new();
    out.line(format!("{} ideals of {}", lattice.len(), ring));
    for i in &lattice {
        let inv = invariance(ring, i, &system)?;
        let mut tests = BTreeMap::new();
        if i.is_proper() {
            for mode in [PrimalityMode::Prime, PrimalityMode::Semiprime, PrimalityMode::SigmaPrime, PrimalityMode::DeltaPrime, PrimalityMode::SigmaDeltaPrime] {
                // modes whose class excludes I are simply not reported
                if let Ok(o) = primality(ring, i, &system, mode) {
                    tests.insert(mode.name(), o.holds);
                }
            }
        }
        let held: Vec<&str> = tests.iter().filter(|(_, &h)| h).map(|(n, _)| *n).collect();
        out.line(format!(
            "  {:<12} |I| = {:<4} sigma-inv {} delta-inv {}  {}",
            i.describe(ring),
            i.cardinality(),
            if inv.sigma_invariant { "yes" } else { "no " },
            if inv.delta_invariant { "yes" } else { "no " },
            held.join(", ")
        ));
        rows.push(json!({
            "ideal": i.describe(ring),
            "cardinality": i.cardinality(),
            "sigma_invariant": inv.sigma_invariant,
            "delta_invariant": inv.delta_invariant,
            "primality": tests,
        }));
    }
    let rad = prime_radical(ring)?;
    out.line(format!("prime radical: {}", rad.describe(ring)));
    out.set("ring", json!(ring.to_string()));
    out.set("ideals", Value::Array(rows));
    out.set("prime_radical", json!(rad.describe(ring)));
    Ok(())
}

/// Splits on commas outside brackets and parentheses.
fn split_generators(src: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (k, c) in src.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&src[start..k]);
                start = k + 1;
            }
            _ => {}
        }
    }
    parts.push(&src[start..]);
    parts
}

fn base_ideal(spec: &ExtensionSpec, src: &str) -> Result<BaseIdeal, Failure> {
    let ring = spec.ring();
    let gens = split_generators(src).into_iter().map(|g| parse_element(g, ring)).collect::<Result<Vec<_>, _>>()?;
    match ring {
        RingDescriptor::Rationals | RingDescriptor::UniPoly(_) => {
            let nonzero: Vec<_> = gens.into_iter().filter(|g| !ring.is_zero(g)).collect();
            match nonzero.len() {
                0 => Ok(BaseIdeal::Principal(ring.zero())),
                1 => Ok(BaseIdeal::Principal(nonzero[0].clone())),
                _ => Err(unsupported("ideals of infinite rings must be given by a single generator")),
            }
        }
        _ => Ok(BaseIdeal::Finite(ideal_closure(ring, &gens)?)),
    }
}

fn verdict_text(v: &Verdict, out: &mut Output) {
    out.line(format!("ideal: {}", v.ideal));
    out.line(format!("theorem: {:?}", v.theorem));
    out.line("hypotheses:");
    for h in &v.hypothesis_trail {
        out.line(format!("  [{}] {:?}: {} ({})", if h.passed { "pass" } else { "fail" }, h.route, h.name, h.evidence));
    }
    out.line(format!("verdict: {:?}", v.conclusion));
    if let Some(w) = &v.witness {
        out.line(format!("witness: {}, {} (lift to A verified: {})", w.k_description, w.l_description, w.lift_verified));
    }
}

fn run_classify(spec: &ExtensionSpec, ideal: &str, cli: &Cli, out: &mut Output) -> Result<(), Failure> {
    let base = base_ideal(spec, ideal)?;
    let verdict = classify_extended_ideal(spec, &base)?;
    verdict_text(&verdict, out);
    out.set("verdict", serde_json::to_value(&verdict).expect("json"));
    if verdict.conclusion == Conclusion::PrimeInA && spec.ring().order().is_some() {
        let probe = primality_probe(spec, &base, cli.degree_bound, 50, cli.seed)?;
        let flagged = !probe.unseparated.is_empty();
        out.line(format!(
            "probe: {} pairs, {} without a separator of degree <= {}{}",
            probe.pairs_checked,
            probe.unseparated.len(),
            cli.degree_bound,
            if flagged { " (flagged for review)" } else { "" }
        ));
        out.set("probe", json!({ "pairs_checked": probe.pairs_checked, "unseparated": probe.unseparated.len(), "degree_bound": cli.degree_bound }));
    }
    Ok(())
}

fn run_chain(spec: &ExtensionSpec, ideal: &str, jmax: usize, out: &mut Output) -> Result<(), Failure> {
    finite_ring(spec, "chain")?;
    let ring = spec.ring();
    let BaseIdeal::Finite(i) = base_ideal(spec, ideal)? else { unreachable!("finite ring") };
    let system = SigmaDeltaSystem::from_spec(spec);
    let chain = ideal_chain(ring, &i, &system, jmax)?;
    let props = check_chain_properties(ring, &chain, &system)?;
    let names: Vec<String> = chain.levels.iter().map(|l| l.describe(ring)).collect();
    out.line(format!("chain: {}", names.join(" ⊇ ")));
    out.line(format!(
        "properties: descending {}, delta step {}, sigma-invariant {}, product step {}",
        props.descending, props.delta_step, props.sigma_invariant, props.product_step
    ));
    out.set("levels", json!(names));
    out.set(
        "properties",
        json!({ "descending": props.descending, "delta_step": props.delta_step, "sigma_invariant": props.sigma_invariant, "product_step": props.product_step }),
    );
    if !props.all() {
        out.code = 1;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Check { file } => {
            let mut out = Output::new(cli.format, "check");
            run_check(&load(file)?, &mut out);
            Ok(out)
        }
        Command::Eval { file, exprs } => {
            let spec = load(file)?;
            let mut out = Output::new(cli.format, "eval");
            let mut norm = Normalizer::new(&spec);
            let mut results = Vec::new();
            for e in exprs {
                let f = parse_expression_with(e, &mut norm)?;
                let text = format_polynomial(&spec, &f);
                out.line(text.clone());
                results.push(json!({ "input": e, "normal_form": text }));
            }
            out.set("results", Value::Array(results));
            Ok(out)
        }
        Command::Ideals { file } => {
            let mut out = Output::new(cli.format, "ideals");
            run_ideals(&load(file)?, &mut out)?;
            Ok(out)
        }
        Command::Classify { file, ideal } => {
            let mut out = Output::new(cli.format, "classify");
            run_classify(&load(file)?, ideal, cli, &mut out)?;
            Ok(out)
        }
        Command::Gr { file, output } => {
            let gr = associated_graded(&load(file)?);
            write_file(output, &emit_spec(&gr))?;
            let mut out = Output::new(cli.format, "gr");
            out.line(format!("wrote {}", output.display()));
            out.line(flags_text(&gr.flags()));
            out.set("output", json!(output.display().to_string()));
            out.set("flags", flags_json(&gr.flags()));
            Ok(out)
        }
        Command::Chain { file, ideal, jmax } => {
            let mut out = Output::new(cli.format, "chain");
            run_chain(&load(file)?, ideal, *jmax, &mut out)?;
            Ok(out)
        }
        Command::Catalog { name, params, output } => {
            let params: BTreeMap<String, String> = params.iter().cloned().collect();
            let spec = build_catalog(name, &params)?;
            let text = emit_spec(&spec);
            let mut out = Output::new(cli.format, "catalog");
            match output {
                Some(path) => {
                    write_file(path, &text)?;
                    out.line(format!("wrote {}", path.display()));
                    out.set("output", json!(path.display().to_string()));
                }
                None => out.line(text.trim_end()),
            }
            out.set("flags", flags_json(&spec.flags()));
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => out.emit(),
        Err(f) => {
            eprintln!("error: {}", f.message);
            if cli.format == Format::Json {
                println!("{}", json!({ "schema_version": SCHEMA_VERSION, "error": f.message, "exit_code": f.code }));
            }
            ExitCode::from(f.code)
        }
    }
}
