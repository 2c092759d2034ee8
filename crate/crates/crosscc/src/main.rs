use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use crosscc::formats::{parse_ideal, write_ideal, CertificateJson, FormatError};
use crosscc::limits::{parse_bytes, Budget, Limits};
use crosscc::pipeline::{repro, Claim, Settings};
use crosscc_core::certify::{Certificate, Status};
use crosscc_core::dimension::{ideal_dimension, monomial_dimension};
use crosscc_core::exactnum::{format_decimal, format_exact, parse_rational, BigRational};
use crosscc_core::groebner::{buchberger, elimination_ideal, GbError, GbOptions};
use crosscc_core::multipoly::{format_monomial, Ring};
use crosscc_core::systems;
use crosscc_core::univar::{count_roots, isolate_all_roots, isolate_root, resultant_wrt};
use crosscc_core::{MPoly, MonomialOrder, UPoly, VarTable};

const EXIT_PARSE: u8 = 64;
const EXIT_FALSIFIED: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "crosscc", version, about = "Exact Groebner bases, Sturm sequences, resultants and certified claims for cross central configurations")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Monomial order: lex, degrevlex or block:k.
    #[arg(long, global = true, default_value = "degrevlex")]
    order: String,
    /// Width of root enclosures (decimal or p/q).
    #[arg(long, global = true, default_value = "1e-10")]
    eps: String,
    /// Wall-clock budget per Groebner computation.
    #[arg(long, global = true, default_value_t = 900.0)]
    max_seconds: f64,
    /// Memory budget, e.g. 8G.
    #[arg(long, global = true, default_value = "8G")]
    max_memory: String,
    /// Worker threads for independent Groebner runs.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Also write JSON output to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Reduced Groebner basis of an ideal file.
    Gb { file: PathBuf },
    /// Eliminate all but the last `keep` variables of an ideal file.
    Eliminate {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        keep: usize,
    },
    /// Count distinct real roots in (lo, hi] with a Sturm sequence.
    Sturm {
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        lo: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        hi: Option<String>,
    },
    /// Isolate real roots to width eps, all of them or the one in (lo, hi].
    Isolate {
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        lo: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        hi: Option<String>,
    },
    /// Sylvester resultant of two polynomials with respect to a variable.
    Resultant {
        f: String,
        g: String,
        #[arg(long)]
        var: String,
    },
    /// Krull dimension of an ideal file (graded orders only).
    Dim { file: PathBuf },
    /// Reproduce a claim: dim-shape, example-6bp, partial-gb, minor-rank, vortex or all.
    Repro {
        claim: String,
        /// Budget for the Groebner route of the six-body elimination; 0 goes straight to resultants.
        #[arg(long, default_value_t = 1800.0)]
        example_gb_seconds: f64,
        /// Degree truncation for the partial Groebner runs; 0 computes full bases.
        #[arg(long, default_value_t = 16)]
        partial_degree: u32,
    },
    /// Write one of the built-in systems as an ideal file.
    Export {
        /// omega, shape, example, minors or vortex.
        system: String,
        out: Option<PathBuf>,
    },
}

/// Error categories that map to exit codes.
#[derive(Debug)]
enum Failure {
    Parse(anyhow::Error),
    Limit(String),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

fn parse_err<E: Into<anyhow::Error>>(e: E) -> Failure {
    Failure::Parse(e.into())
}

fn env_override(c: &mut Common) -> Result<(), Failure> {
    let get = |k: &str| std::env::var(k).ok().filter(|v| !v.is_empty());
    if let Some(v) = get("CROSSCC_ORDER") {
        c.order = v;
    }
    if let Some(v) = get("CROSSCC_EPS") {
        c.eps = v;
    }
    if let Some(v) = get("CROSSCC_MAX_SECONDS") {
        c.max_seconds = v.parse().map_err(|_| parse_err(anyhow!("CROSSCC_MAX_SECONDS: not a number: {v:?}")))?;
    }
    if let Some(v) = get("CROSSCC_MAX_MEMORY") {
        c.max_memory = v;
    }
    if let Some(v) = get("CROSSCC_JOBS") {
        c.jobs = Some(v.parse().map_err(|_| parse_err(anyhow!("CROSSCC_JOBS: not a count: {v:?}")))?);
    }
    if let Some(v) = get("CROSSCC_JSON") {
        c.json = Some(PathBuf::from(v));
    }
    Ok(())
}

fn parse_order(s: &str) -> Result<MonomialOrder> {
    match s {
        "lex" => Ok(MonomialOrder::Lex),
        "degrevlex" | "grevlex" => Ok(MonomialOrder::DegRevLex),
        _ => {
            let k = s.strip_prefix("block:").ok_or_else(|| anyhow!("unknown order {s:?}"))?;
            Ok(MonomialOrder::Block(k.parse().with_context(|| format!("bad block size in {s:?}"))?))
        }
    }
}

struct Ctx {
    order: MonomialOrder,
    eps: BigRational,
    limits: Limits,
    jobs: usize,
    json: Option<PathBuf>,
}

impl Ctx {
    fn new(c: &Common) -> Result<Ctx, Failure> {
        let order = parse_order(&c.order).map_err(parse_err)?;
        let eps = parse_rational(&c.eps).map_err(parse_err)?;
        if eps <= BigRational::from_integer(0.into()) {
            return Err(parse_err(anyhow!("--eps must be positive")));
        }
        let max_memory = parse_bytes(&c.max_memory).ok_or_else(|| parse_err(anyhow!("bad memory size {:?}", c.max_memory)))?;
        let jobs = c.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())).max(1);
        Ok(Ctx { order, eps, limits: Limits { max_seconds: c.max_seconds, max_memory }, jobs, json: c.json.clone() })
    }

    fn write_json(&self, value: &serde_json::Value) -> Result<()> {
        if let Some(p) = &self.json {
            std::fs::write(p, serde_json::to_string_pretty(value)? + "\n").with_context(|| format!("writing {}", p.display()))?;
        }
        Ok(())
    }
}

fn read_ideal(path: &Path) -> Result<crosscc::formats::IdealFile, Failure> {
    let src = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_ideal(&src).map_err(|e: FormatError| parse_err(anyhow!("{}: {e}", path.display())))
}

/// Ring of the identifiers in `srcs`, in order of first appearance.
fn infer_ring(srcs: &[&str]) -> Result<Ring> {
    let mut names: Vec<String> = Vec::new();
    for src in srcs {
        let mut cur = String::new();
        for ch in src.chars().chain(std::iter::once(' ')) {
            if ch.is_ascii_alphanumeric() || ch == '_' {
                cur.push(ch);
            } else {
                if cur.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') && !names.contains(&cur) {
                    names.push(cur.clone());
                }
                cur.clear();
            }
        }
    }
    if names.is_empty() {
        names.push("x".into());
    }
    Ok(VarTable::new(&names)?)
}

fn parse_univariate(src: &str) -> Result<(UPoly, String), Failure> {
    let ring = infer_ring(&[src]).map_err(parse_err)?;
    if ring.len() != 1 {
        return Err(parse_err(anyhow!("expected a univariate polynomial, found variables {}", ring.names().join(", "))));
    }
    let p = MPoly::parse(&ring, src).map_err(parse_err)?;
    Ok((UPoly::from_mpoly(&p, 0).map_err(|e| parse_err(anyhow!("{e}")))?, ring.name(0).to_string()))
}

fn gb_error(e: GbError) -> Failure {
    match e {
        GbError::Inconclusive { reason, .. } => Failure::Limit(reason),
        other => Failure::Other(other.into()),
    }
}

fn interval_json(lo: &BigRational, hi: &BigRational) -> serde_json::Value {
    serde_json::json!({ "lo": format_exact(lo), "hi": format_exact(hi), "lo_decimal": format_decimal(lo, 20), "hi_decimal": format_decimal(hi, 20) })
}

fn bound(opt: &Option<String>) -> Result<Option<BigRational>, Failure> {
    opt.as_deref().map(parse_rational).transpose().map_err(parse_err)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let mut common = cli.common;
    env_override(&mut common)?;
    let ctx = Ctx::new(&common)?;
    match cli.cmd {
        Cmd::Gb { file } => {
            let f = read_ideal(&file)?;
            if f.gens.is_empty() {
                return Err(parse_err(anyhow!("{}: no generators", file.display())));
            }
            let budget = Budget::start(&ctx.limits);
            let stop = || budget.exceeded();
            let gb = buchberger(&f.polys(), ctx.order, &GbOptions { interrupt: Some(&stop), ..GbOptions::default() }).map_err(gb_error)?;
            let gens: Vec<(Option<String>, MPoly)> = gb.polys.iter().map(|p| (None, p.clone())).collect();
            print!("{}", write_ideal(&f.ring, &gens, Some(&format!("reduced Groebner basis, order {}", common.order))));
            ctx.write_json(&serde_json::json!({ "order": common.order, "basis": gb.polys.iter().map(|p| p.to_string()).collect::<Vec<_>>() }))?;
            Ok(0)
        }
        Cmd::Eliminate { file, keep } => {
            let f = read_ideal(&file)?;
            if f.gens.is_empty() || keep > f.ring.len() {
                return Err(parse_err(anyhow!("{}: need generators and keep <= {}", file.display(), f.ring.len())));
            }
            let budget = Budget::start(&ctx.limits);
            let stop = || budget.exceeded();
            let hint = (common.order != "degrevlex").then_some(ctx.order);
            let (elim, _) = elimination_ideal(&f.polys(), keep, hint, &GbOptions { interrupt: Some(&stop), ..GbOptions::default() }).map_err(gb_error)?;
            let gens: Vec<(Option<String>, MPoly)> = elim.iter().map(|p| (None, p.clone())).collect();
            print!("{}", write_ideal(&f.ring, &gens, Some(&format!("elimination ideal keeping the last {keep} variables"))));
            ctx.write_json(&serde_json::json!({ "keep": keep, "eliminant": elim.iter().map(|p| p.to_string()).collect::<Vec<_>>() }))?;
            Ok(0)
        }
        Cmd::Sturm { poly, lo, hi } => {
            let (p, var) = parse_univariate(&poly)?;
            let b = p.cauchy_bound();
            let lo = bound(&lo)?.unwrap_or_else(|| -b.clone());
            let hi = bound(&hi)?.unwrap_or(b);
            let n = count_roots(&p, &lo, &hi).map_err(|e| parse_err(anyhow!("{e}")))?;
            println!("{n}");
            ctx.write_json(&serde_json::json!({ "poly": p.to_string_in(&var), "interval": interval_json(&lo, &hi), "roots": n }))?;
            Ok(0)
        }
        Cmd::Isolate { poly, lo, hi } => {
            let (p, var) = parse_univariate(&poly)?;
            let ivs = match (bound(&lo)?, bound(&hi)?) {
                (Some(a), Some(b)) => vec![isolate_root(&p, &a, &b, &ctx.eps).map_err(|e| Failure::Other(anyhow!("{e}")))?],
                (None, None) => isolate_all_roots(&p, &ctx.eps).map_err(|e| Failure::Other(anyhow!("{e}")))?,
                _ => return Err(parse_err(anyhow!("give both --lo and --hi or neither"))),
            };
            for iv in &ivs {
                println!("({}, {}]", format_decimal(iv.lo(), 20), format_decimal(iv.hi(), 20));
            }
            ctx.write_json(&serde_json::json!({ "poly": p.to_string_in(&var), "roots": ivs.iter().map(|iv| interval_json(iv.lo(), iv.hi())).collect::<Vec<_>>() }))?;
            Ok(0)
        }
        Cmd::Resultant { f, g, var } => {
            let ring = infer_ring(&[&f, &g, &var]).map_err(parse_err)?;
            let fp = MPoly::parse(&ring, &f).map_err(parse_err)?;
            let gp = MPoly::parse(&ring, &g).map_err(parse_err)?;
            let r = resultant_wrt(&fp, &gp, &var).map_err(parse_err)?;
            println!("{r}");
            ctx.write_json(&serde_json::json!({ "var": var, "resultant": r.to_string() }))?;
            Ok(0)
        }
        Cmd::Dim { file } => {
            let f = read_ideal(&file)?;
            let n = f.ring.len();
            let (dim, lts) = if f.gens.iter().all(|(_, p)| p.is_zero()) {
                (monomial_dimension(&[], n).dim, Vec::new())
            } else {
                let budget = Budget::start(&ctx.limits);
                let stop = || budget.exceeded();
                let order = if ctx.order.is_graded() { ctx.order } else { return Err(parse_err(anyhow!("dim needs a graded order"))) };
                let (d, ms) = ideal_dimension(&f.polys(), &f.ring, order, &GbOptions { interrupt: Some(&stop), ..GbOptions::default() }).map_err(|e| match e {
                    crosscc_core::dimension::DimError::Gb(g) => gb_error(g),
                    other => Failure::Other(other.into()),
                })?;
                (d.dim, ms.monomials.iter().map(|m| format_monomial(&f.ring, m)).collect())
            };
            println!("{dim}");
            ctx.write_json(&serde_json::json!({ "dim": dim, "leading_terms": lts }))?;
            Ok(0)
        }
        Cmd::Repro { claim, example_gb_seconds, partial_degree } => {
            let claims: Vec<Claim> = if claim == "all" { Claim::ALL.to_vec() } else { vec![claim.parse().map_err(parse_err)?] };
            let settings = Settings { eps: ctx.eps.clone(), limits: ctx.limits, jobs: ctx.jobs, example_gb_seconds, partial_degree };
            let report = repro(&claims, &settings);
            for c in &report.certificates {
                print_certificate(c);
            }
            println!("overall: {}", report.overall().as_str());
            if let Some(p) = &ctx.json {
                std::fs::write(p, report.to_json(true) + "\n").with_context(|| format!("writing {}", p.display()))?;
            }
            Ok(match report.overall() {
                Status::Certified => 0,
                Status::Falsified => EXIT_FALSIFIED,
                Status::Inconclusive => EXIT_INCONCLUSIVE,
            })
        }
        Cmd::Export { system, out } => {
            let (ring, gens, what) = export_system(&system).map_err(parse_err)?;
            let text = write_ideal(&ring, &gens, Some(what));
            match out {
                Some(p) => std::fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?,
                None => print!("{text}"),
            }
            Ok(0)
        }
    }
}

type Exported = (Ring, Vec<(Option<String>, MPoly)>, &'static str);

fn named(v: Vec<systems::Named>) -> Vec<(Option<String>, MPoly)> {
    v.into_iter().map(|n| (Some(n.name), n.poly)).collect()
}

fn export_system(name: &str) -> Result<Exported> {
    Ok(match name {
        "omega" => (systems::omega_ring(), named(systems::build_omega_generators()), "cross configuration system in S, R and M variables"),
        "shape" => (systems::distance_ring(), named(systems::build_shape_ideal()), "shape relations among the mutual distances"),
        "example" => (systems::example_ring(), named(systems::build_example_ideal_6bp()?.gens), "six-body example family"),
        "minors" => (systems::distance_ring(), named(systems::build_minor_generators()?), "3x3 minors of the mass Jacobian in the distances"),
        "vortex" => {
            let vs = systems::build_vortex_systems()?;
            let gens = [("FV1", vs.fv1), ("FV2", vs.fv2), ("FV3", vs.fv3), ("FV4", vs.fv4)].into_iter().map(|(n, p)| (Some(n.to_string()), p)).collect();
            (systems::vortex_ring(), gens, "six-vortex example family")
        }
        other => bail!("unknown system {other:?}; expected omega, shape, example, minors or vortex"),
    })
}

fn print_certificate(c: &Certificate) {
    let ms = c.elapsed_ms.map(|m| format!(" ({m} ms)")).unwrap_or_default();
    println!("{}: {}{ms}", c.claim, c.status.as_str());
    for e in &CertificateJson::from(c).enclosures {
        println!("  {} in [{}, {}]", e.label, e.lo_decimal, e.hi_decimal);
    }
    for n in &c.notes {
        println!("  note: {n}");
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Parse(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(Failure::Limit(r)) => {
            eprintln!("resource limit: {r}");
            ExitCode::from(EXIT_INCONCLUSIVE)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
