//! End-to-end reproduction of the finiteness computations, one certificate
//! per claim.

use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use crosscc_core::certify::{default_schedule, extension_step, mvt_sign_bound, sign_at_point, AlgebraicPointSpec, Certificate, Expr, Status};
use crosscc_core::dimension::{ideal_dimension, monomial_ideal_dimension, plt_bound, MonomialSet};
use crosscc_core::exactnum::{parse_rational, sqrt_enclosure, ten_pow_neg, BigRational};
use crosscc_core::groebner::{buchberger, elimination_ideal, leading_terms, minimalize, partial_basis, GbError, GbOptions};
use crosscc_core::multipoly::format_monomial;
use crosscc_core::systems::{
    build_beta, build_example_ideal_6bp, build_minor_generators, build_shape_ideal, build_vortex_systems, distance_ring, laura_andoyer_residuals, mass_matrix_a, omega_ring, partial_lt_monomials,
    s_rules, CrossConfig, Problem, EXAMPLE_H_LEADING, R_VARS,
};
use crosscc_core::univar::{count_roots, isolate_root, resultant_wrt};
use crosscc_core::{MPoly, Monomial, MonomialOrder, RationalInterval, UPoly};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::formats::CertificateJson;
use crate::limits::{Budget, Limits};

#[derive(Debug, Clone)]
pub struct Settings {
    /// Width of reported root enclosures.
    pub eps: BigRational,
    pub limits: Limits,
    pub jobs: usize,
    /// Budget for the Groebner elimination of the six-body example before
    /// falling back to resultants.
    pub example_gb_seconds: f64,
    /// Pairs with lcm degree above this are dropped in the partial-GB runs;
    /// 0 computes full bases.
    pub partial_degree: u32,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { eps: ten_pow_neg(10), limits: Limits::default(), jobs: std::thread::available_parallelism().map_or(1, |n| n.get()), example_gb_seconds: 1800.0, partial_degree: 16 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    DimShape,
    Example6bp,
    PartialGb,
    MinorRank,
    Vortex,
}

impl Claim {
    pub const ALL: [Claim; 5] = [Claim::DimShape, Claim::Example6bp, Claim::PartialGb, Claim::MinorRank, Claim::Vortex];

    pub fn name(self) -> &'static str {
        match self {
            Claim::DimShape => "dim-shape",
            Claim::Example6bp => "example-6bp",
            Claim::PartialGb => "partial-gb",
            Claim::MinorRank => "minor-rank",
            Claim::Vortex => "vortex",
        }
    }
}

impl FromStr for Claim {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| anyhow!("unknown claim {s:?}"))
    }
}

/// Runs one claim. Errors become inconclusive certificates.
pub fn run_claim(claim: Claim, s: &Settings) -> Certificate {
    let t0 = Instant::now();
    let out = match claim {
        Claim::DimShape => repro_dim_shape(s),
        Claim::Example6bp => repro_example_6bp(s),
        Claim::PartialGb => repro_partial_gb(s),
        Claim::MinorRank => repro_minor_rank(s),
        Claim::Vortex => repro_vortex(s),
    };
    let mut c = out.unwrap_or_else(|e| Certificate::new(claim.name(), Status::Inconclusive).note(format!("error: {e:#}")));
    c.claim = claim.name().to_string();
    c.elapsed_ms = Some(t0.elapsed().as_millis() as u64);
    c
}

#[derive(Debug, Clone, Serialize)]
pub struct Environment {
    pub max_seconds: f64,
    pub max_memory: u64,
    pub jobs: usize,
    pub eps: String,
    pub version: String,
}

#[derive(Debug, Clone)]
pub struct ReproReport {
    pub certificates: Vec<Certificate>,
    pub environment: Environment,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    overall: &'static str,
    certificates: Vec<CertificateJson>,
    environment: &'a Environment,
}

impl ReproReport {
    /// Certified iff every claim is; otherwise falsified if any claim is,
    /// else inconclusive.
    pub fn overall(&self) -> Status {
        if self.certificates.iter().all(Certificate::is_certified) {
            Status::Certified
        } else if self.certificates.iter().any(|c| c.status == Status::Falsified) {
            Status::Falsified
        } else {
            Status::Inconclusive
        }
    }

    /// JSON rendering; without `timing` the output only depends on inputs
    /// and limits.
    pub fn to_json(&self, timing: bool) -> String {
        let certificates = self
            .certificates
            .iter()
            .map(|c| {
                let mut j = CertificateJson::from(c);
                if !timing {
                    j.elapsed_ms = None;
                }
                j
            })
            .collect();
        serde_json::to_string_pretty(&ReportJson { overall: self.overall().as_str(), certificates, environment: &self.environment }).expect("report serializes")
    }
}

pub fn repro(claims: &[Claim], s: &Settings) -> ReproReport {
    let certificates = claims.iter().map(|&c| run_claim(c, s)).collect();
    let environment = Environment {
        max_seconds: s.limits.max_seconds,
        max_memory: s.limits.max_memory,
        jobs: s.jobs,
        eps: crosscc_core::exactnum::format_exact(&s.eps),
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    ReproReport { certificates, environment }
}

fn int_point(v: i64) -> RationalInterval {
    RationalInterval::point(BigRational::from_integer(v.into()))
}

fn dec(s: &str) -> BigRational {
    parse_rational(s).expect("decimal literal")
}

/// Lowest status among the stages.
fn combine(a: Status, b: Status) -> Status {
    match (a, b) {
        (Status::Falsified, _) | (_, Status::Falsified) => Status::Falsified,
        (Status::Inconclusive, _) | (_, Status::Inconclusive) => Status::Inconclusive,
        _ => Status::Certified,
    }
}

fn check(ok: bool) -> Status {
    if ok {
        Status::Certified
    } else {
        Status::Falsified
    }
}

fn gb_options<'a>(stop: &'a (dyn Fn() -> bool + Sync)) -> GbOptions<'a> {
    GbOptions { interrupt: Some(stop), ..GbOptions::default() }
}

pub fn repro_dim_shape(s: &Settings) -> Result<Certificate> {
    let ring = distance_ring();
    let gens: Vec<MPoly> = build_shape_ideal().into_iter().map(|n| n.poly).collect();
    let budget = Budget::start(&s.limits);
    let stop = || budget.exceeded();
    let (dim, lts) = match ideal_dimension(&gens, &ring, MonomialOrder::DegRevLex, &gb_options(&stop)) {
        Ok(r) => r,
        Err(crosscc_core::dimension::DimError::Gb(GbError::Inconclusive { reason, .. })) => {
            return Ok(Certificate::new("dim-shape", Status::Inconclusive).note(reason));
        }
        Err(e) => return Err(e.into()),
    };
    let names: Vec<String> = lts.monomials.iter().map(|m| format_monomial(&ring, m)).collect();
    Ok(Certificate::new("dim-shape", check(dim.dim == 4)).enclose("dim", int_point(dim.dim as i64)).note(format!("leading terms: {}", names.join(", "))))
}

/// The univariate eliminant of the six-body example ideal in `R12`, with
/// the spurious linear factors divided out.
#[derive(Debug, Clone)]
pub struct Eliminant {
    pub path: &'static str,
    pub removed: Vec<(String, u32)>,
    /// Square-free, primitive, positive leading coefficient.
    pub h: UPoly,
}

const R12_INDEX: usize = 3;

fn finish_eliminant(raw: UPoly, path: &'static str) -> Eliminant {
    let mut rest = raw;
    let mut removed = Vec::new();
    for (name, root) in [("R12", 0), ("R12 - 1", 1), ("R12 - 2", 2)] {
        let (k, cof) = rest.remove_factor(&UPoly::linear_root(&BigRational::from_integer(root.into())));
        if k > 0 {
            removed.push((name.to_string(), k));
        }
        rest = cof;
    }
    Eliminant { path, removed, h: rest.square_free_part().positive_primitive() }
}

/// `Res_R25(Res_R15(Res_M5(F3, F4), F2), F1)`.
pub fn eliminant_by_resultants() -> Result<Eliminant> {
    let gens: Vec<MPoly> = build_example_ideal_6bp()?.gens.into_iter().map(|n| n.poly).collect();
    let r = resultant_wrt(&gens[2], &gens[3], "M5")?;
    let r = resultant_wrt(&r, &gens[1], "R15")?;
    let r = resultant_wrt(&r, &gens[0], "R25")?;
    let raw = UPoly::from_mpoly(&r, R12_INDEX)?;
    Ok(finish_eliminant(raw, "resultant"))
}

fn cached_resultant_eliminant() -> Result<Eliminant> {
    static CELL: OnceLock<std::result::Result<Eliminant, String>> = OnceLock::new();
    CELL.get_or_init(|| eliminant_by_resultants().map_err(|e| format!("{e:#}"))).clone().map_err(|e| anyhow!(e))
}

/// Groebner elimination of `M5, R15, R25`; `None` when the budget runs out.
pub fn eliminant_by_groebner(seconds: f64, limits: &Limits) -> Result<Option<Eliminant>> {
    let gens: Vec<MPoly> = build_example_ideal_6bp()?.gens.into_iter().map(|n| n.poly).collect();
    let budget = Budget::with_seconds(limits, seconds);
    let stop = || budget.exceeded();
    match elimination_ideal(&gens, 1, None, &gb_options(&stop)) {
        Ok((elim, _)) => {
            let g = elim.into_iter().min_by_key(|p| p.total_degree()).context("elimination ideal is zero")?;
            Ok(Some(finish_eliminant(UPoly::from_mpoly(&g, R12_INDEX)?, "groebner")))
        }
        Err(GbError::Inconclusive { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

/// Isolating interval of the unique root of `h` in `(0, 1)`, of width at
/// most `eps`.
pub fn example_root(h: &UPoly, eps: &BigRational) -> Result<RationalInterval> {
    let (zero, one) = (BigRational::zero(), BigRational::one());
    let n = count_roots(h, &zero, &one)? - usize::from(h.eval(&one).is_zero());
    if n != 1 {
        bail!("eliminant has {n} roots in (0, 1)");
    }
    Ok(isolate_root(h, &zero, &one, eps)?)
}

fn r12() -> Expr {
    Expr::var("R12")
}

fn one_minus_r12() -> Expr {
    Expr::int(1).sub(r12())
}

/// `R12` plus `R15 = sqrt(1 + (1 - R12)^2)` and `R25 = sqrt(2 (1 - R12)^2)`.
pub fn example_point(h: &UPoly, root: &RationalInterval) -> Result<AlgebraicPointSpec> {
    Ok(AlgebraicPointSpec::new("R12", h.clone(), root.lo().clone(), root.hi().clone())?
        .with("R15", Expr::int(1).add(one_minus_r12().mul(one_minus_r12())).sqrt())?
        .with("R25", Expr::int(2).mul(one_minus_r12().mul(one_minus_r12())).sqrt())?)
}

/// All eleven distances of the example configuration.
pub fn example_point_all(h: &UPoly, root: &RationalInterval) -> Result<AlgebraicPointSpec> {
    let two_minus = |k: i64| Expr::int(2).sub(Expr::int(k).mul(r12()));
    Ok(example_point(h, root)?
        .with("R13", two_minus(1))?
        .with("R14", Expr::int(2))?
        .with("R23", two_minus(2))?
        .with("R24", two_minus(1))?
        .with("R34", r12())?
        .with("R35", Expr::var("R25"))?
        .with("R45", Expr::var("R15"))?
        .with("R56", two_minus(2))?)
}

fn inside(iv: &RationalInterval, lo: &str, hi: &str) -> bool {
    iv.lo() >= &dec(lo) && iv.hi() <= &dec(hi)
}

/// Whether `iv` lies within `tol` of every point of `target`.
pub fn within(iv: &RationalInterval, target: &RationalInterval, tol: &BigRational) -> bool {
    (iv.hi() - target.lo()).abs() <= *tol && (target.hi() - iv.lo()).abs() <= *tol
}

pub fn repro_example_6bp(s: &Settings) -> Result<Certificate> {
    let mut status = Status::Certified;
    let mut cert = Certificate::new("example-6bp", Status::Inconclusive);
    let el = if s.example_gb_seconds > 0.0 {
        match eliminant_by_groebner(s.example_gb_seconds, &s.limits)? {
            Some(el) => el,
            None => {
                cert = cert.note(format!("groebner elimination exceeded {} s; using resultants", s.example_gb_seconds));
                cached_resultant_eliminant()?
            }
        }
    } else {
        cached_resultant_eliminant()?
    };
    cert = cert.note(format!("eliminant path: {}", el.path));
    let removed: Vec<String> = el.removed.iter().map(|(f, k)| format!("({f})^{k}")).collect();
    cert = cert.note(format!("removed factors: {}", removed.join(" ")));
    let h = &el.h;
    let deg = h.degree().context("eliminant is zero")?;
    cert = cert.enclose("h.degree", int_point(deg as i64));
    let leading: Vec<BigRational> = h.coeffs().iter().rev().take(3).cloned().collect();
    for (k, c) in leading.iter().enumerate() {
        cert = cert.enclose(&format!("h.lc{k}"), RationalInterval::point(c.clone()));
    }
    let expected: Vec<BigRational> = EXAMPLE_H_LEADING.iter().map(|&v| BigRational::from_integer(v.into())).collect();
    status = combine(status, check(leading == expected));

    let root = example_root(h, &s.eps)?;
    cert = cert.enclose("R12", root.clone());
    status = combine(status, check(inside(&root, "0.4402418528", "0.4402418529")));

    let ex = build_example_ideal_6bp()?;
    let gens: Vec<MPoly> = ex.gens.iter().map(|n| n.poly.clone()).collect();
    let schedule = default_schedule();
    let base = AlgebraicPointSpec::new("R12", h.clone(), root.lo().clone(), root.hi().clone())?;
    let e25 = extension_step(&gens[0..1], "R25", &base, &schedule)?;
    let e15 = extension_step(&gens[1..2], "R15", &base, &schedule)?;
    status = combine(status, combine(e25.status, e15.status));

    let p0 = example_point(h, &root)?;
    let ext = extension_step(&gens[2..4], "M5", &p0, &schedule)?;
    status = combine(status, ext.status);
    let lc1 = ext.enclosure("lc[0]").context("LC1 enclosure")?.clone();
    let lc2 = ext.enclosure("lc[1]").context("LC2 enclosure")?.clone();
    let m5 = ext.enclosure("M5").context("M5 enclosure")?.clone();
    let boxes = p0.boxes(&ten_pow_neg(20))?;
    cert = cert.enclose("R15", boxes["R15"].clone()).enclose("R25", boxes["R25"].clone());
    cert = cert.enclose("LC1", lc1).enclose("LC2", lc2).enclose("M5", m5.clone());

    // secondary: mean-value bound around the truncated root
    let t12 = dec("0.440241852870668");
    let radius = ten_pow_neg(12);
    for (label, lc) in [("LC1", &gens[2]), ("LC2", &gens[3])] {
        let coeff = lc.coeffs_in(0)[1].clone();
        let mvt = mvt_sign_bound(&coeff, &p0, &t12, &radius, None, &ten_pow_neg(16))?;
        let bound = mvt.enclosure("error-bound").cloned().unwrap_or_else(RationalInterval::zero);
        cert = cert.enclose(&format!("mvt.{label}.error-bound"), bound).note(format!("mean-value check for {label}: {}", mvt.status.as_str()));
    }

    // residuals need a sharper root than the reported one
    let fine = example_root(h, &ten_pow_neg(30))?;
    let fine_ext = extension_step(&gens[2..4], "M5", &example_point(h, &fine)?, &[ten_pow_neg(30)])?;
    let fine_m5 = fine_ext.enclosure("M5").context("M5 enclosure")?.clone();
    let config = CrossConfig::six_body_example(&fine, &fine_m5, &ten_pow_neg(30))?;
    let residuals = laura_andoyer_residuals(&config, Problem::Newtonian)?;
    let tol = ten_pow_neg(6);
    for (k, r) in residuals.iter().enumerate() {
        status = combine(status, check(r.contains_zero() && r.width() < tol));
        cert = cert.enclose(&format!("residual.L{}", k + 1), r.clone());
    }
    cert.status = status;
    cert.sign = (status == Status::Certified).then_some(1);
    cert.eps_used = Some(s.eps.clone());
    Ok(cert)
}

/// Leading terms of `J_i = shape + D_i`, from a degree-truncated run unless
/// `s.partial_degree` is 0.
pub fn partial_leading_terms(i: usize, s: &Settings) -> Result<Option<Vec<Monomial>>> {
    let mut gens: Vec<MPoly> = build_shape_ideal().into_iter().map(|n| n.poly).collect();
    let minors = build_minor_generators()?;
    gens.push(minors.get(i).context("minor index")?.poly.clone());
    let budget = Budget::start(&s.limits);
    let stop = || budget.exceeded();
    let opts = gb_options(&stop);
    let run = match s.partial_degree {
        0 => buchberger(&gens, MonomialOrder::DegRevLex, &opts),
        d => partial_basis(&gens, MonomialOrder::DegRevLex, d, &opts),
    };
    match run {
        Ok(gb) => Ok(Some(leading_terms(&gb))),
        Err(GbError::Inconclusive { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

/// Minimal generators of the union of leading-term ideals, sorted.
pub fn union_leading_terms(runs: &[Vec<Monomial>]) -> Vec<Monomial> {
    let all: Vec<Monomial> = runs.iter().flatten().copied().collect();
    let mut k = minimalize(&all);
    k.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(b, a));
    k
}

pub fn repro_partial_gb(s: &Settings) -> Result<Certificate> {
    let ring = distance_ring();
    let count = build_minor_generators()?.len();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(s.jobs.max(1)).build()?;
    let runs: Vec<Result<Option<Vec<Monomial>>>> = pool.install(|| (0..count).into_par_iter().map(|i| partial_leading_terms(i, s)).collect());
    let mut done = Vec::new();
    let mut missing = Vec::new();
    for (i, r) in runs.into_iter().enumerate() {
        match r? {
            Some(lts) => done.push(lts),
            None => missing.push(format!("J{}", i + 1)),
        }
    }
    let mut cert = Certificate::new("partial-gb", Status::Inconclusive).enclose("runs", int_point(done.len() as i64));
    if !missing.is_empty() {
        return Ok(cert.note(format!("runs over budget: {}", missing.join(", "))));
    }
    let k_prime = union_leading_terms(&done);
    let listed_k = partial_lt_monomials();
    let uncovered: Vec<String> = listed_k.iter().filter(|m| !k_prime.iter().any(|t| t.divides(m))).map(|m| format_monomial(&ring, m)).collect();
    let dim_k = monomial_ideal_dimension(&MonomialSet::new(&ring, listed_k.clone())).dim;
    let source = match s.partial_degree {
        0 => format!("minimal leading terms of reduced bases of J1..J{count}"),
        d => format!("minimal leading terms of J1..J{count} runs truncated at lcm degree {d}"),
    };
    let union = MonomialSet::new(&ring, k_prime.clone()).with_provenance(source.clone());
    let dim_union = monomial_ideal_dimension(&union).dim;
    let bound = plt_bound(&union, 2)?;
    let names: Vec<String> = k_prime.iter().map(|m| format_monomial(&ring, m)).collect();
    cert = cert
        .enclose("dim K", int_point(dim_k as i64))
        .enclose("dim K'", int_point(dim_union as i64))
        .enclose("|K'|", int_point(k_prime.len() as i64))
        .note(format!("K' = {}", names.join(", ")))
        .note(source);
    if !uncovered.is_empty() {
        cert = cert.note(format!("not divisible by any computed leading term: {}", uncovered.join(", ")));
    }
    cert.status = check(uncovered.is_empty() && dim_k == 2 && dim_union <= 2 && bound.holds);
    Ok(cert)
}

/// `11.2514100393576 sqrt(2) - 233.179777444682`.
pub fn beta_reference() -> Result<RationalInterval> {
    let sqrt2 = sqrt_enclosure(&BigRational::from_integer(2.into()), &ten_pow_neg(30))?;
    Ok(sqrt2.scale(&dec("11.2514100393576")).add_scalar(&-dec("233.179777444682")))
}

fn interval_det(m: &[Vec<RationalInterval>]) -> RationalInterval {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = RationalInterval::zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<RationalInterval>> = m[1..].iter().map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone()).collect()).collect();
        let t = m[0][j].mul(&interval_det(&minor));
        acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
    }
    acc
}

/// Interval enclosure of `det A` from numeric `S` and `R` values.
pub fn mass_matrix_det_enclosure(dist: &std::collections::BTreeMap<String, RationalInterval>) -> Result<RationalInterval> {
    let ring = omega_ring();
    let rules = s_rules(&|d| MPoly::var(&ring, d).expect("distance").pow(3));
    let mut vals = dist.clone();
    for (name, (num, den)) in &rules {
        let v = num.evaluate_interval(dist)?.div(&den.evaluate_interval(dist)?)?;
        vals.insert(name.clone(), v);
    }
    let a = mass_matrix_a();
    let m: Vec<Vec<RationalInterval>> = (0..a.rows()).map(|r| (0..a.cols()).map(|c| a.get(r, c).evaluate_interval(&vals)).collect::<Result<_, _>>()).collect::<Result<_, _>>()?;
    Ok(interval_det(&m))
}

pub fn repro_minor_rank(s: &Settings) -> Result<Certificate> {
    let el = cached_resultant_eliminant()?;
    let root = example_root(&el.h, &s.eps)?;
    let p = example_point_all(&el.h, &root)?;
    let beta = build_beta()?;
    let schedule = default_schedule();
    let sb = sign_at_point(&beta.numerator, &p, &schedule)?;
    let sd = sign_at_point(&beta.denominator, &p, &schedule)?;
    let b = sb.enclosure("value").context("beta enclosure")?.clone();
    let reference = beta_reference()?;
    let close = within(&b, &reference, &ten_pow_neg(3));
    let boxes = p.boxes(&ten_pow_neg(30))?;
    let dist: std::collections::BTreeMap<String, RationalInterval> = R_VARS.iter().map(|v| (v.to_string(), boxes[*v].clone())).collect();
    let det = mass_matrix_det_enclosure(&dist)?;
    let den = beta.denominator.evaluate_interval(&dist)?;
    let oracle_ok = !det.contains_zero() && det.strict_sign() == b.strict_sign() && !det.mul(&den).is_disjoint(&b);
    let mut cert = Certificate::new("minor-rank", combine(combine(sb.status, sd.status), check(close && oracle_ok)))
        .enclose("beta", b)
        .enclose("beta.reference", reference)
        .enclose("denominator", sd.enclosure("value").context("denominator enclosure")?.clone())
        .enclose("det A", det);
    cert.sign = sb.sign;
    cert.eps_used = sb.eps_used;
    if !close {
        cert = cert.note("beta is not within 1e-3 of the reference value");
    }
    if !oracle_ok {
        cert = cert.note("interval determinant of A disagrees with beta");
    }
    Ok(cert)
}

/// Number of roots in the open interval `(a, b)`.
pub fn count_open(p: &UPoly, a: &BigRational, b: &BigRational) -> Result<usize> {
    Ok(count_roots(p, a, b)? - usize::from(p.eval(b).is_zero()))
}

pub fn repro_vortex(s: &Settings) -> Result<Certificate> {
    let vs = build_vortex_systems()?;
    let ring = vs.fv1.ring().clone();
    let r23 = ring.require("R23")?;
    let (zero, two) = (BigRational::zero(), BigRational::from_integer(2.into()));
    let mut status = Status::Certified;
    let mut cert = Certificate::new("vortex", Status::Inconclusive);

    let res = resultant_wrt(&vs.fv1, &vs.fv2, "Gamma5")?;
    match res.div_exact(&vs.fv3) {
        Some(q) if q.is_constant() => cert = cert.note(format!("resultant = {q} * FV3")),
        Some(q) => {
            let qu = UPoly::from_mpoly(&q, r23)?;
            let roots = count_open(&qu, &zero, &two)?;
            cert = cert.note(format!("resultant = ({q}) * FV3; the cofactor has {roots} roots in (0, 2)"));
            status = combine(status, check(roots == 0));
        }
        None => {
            cert = cert.note("FV3 does not divide the resultant");
            status = Status::Falsified;
        }
    }

    let fv3 = UPoly::from_mpoly(&vs.fv3, r23)?;
    let fv4 = UPoly::from_mpoly(&vs.fv4, r23)?;
    let n3 = count_open(&fv3, &zero, &two)?;
    let n4 = count_open(&fv4, &zero, &two)?;
    cert = cert.enclose("FV3.roots", int_point(n3 as i64)).enclose("FV4.roots", int_point(n4 as i64));
    if n3 != 1 || n4 != 1 {
        cert.status = Status::Falsified;
        return Ok(cert.note("expected exactly one root of FV3 and of FV4 in (0, 2)"));
    }
    let iv3 = isolate_root(&fv3, &zero, &two, &s.eps)?;
    let iv4 = isolate_root(&fv4, &zero, &two, &s.eps)?;
    status = combine(status, check(inside(&iv3, "1.217013", "1.217014") && inside(&iv4, "1.106942", "1.106943")));
    status = combine(status, check(iv3.is_disjoint(&iv4)));
    cert = cert.enclose("R23", iv3.clone()).enclose("R23'", iv4);

    let p = AlgebraicPointSpec::new("R23", fv3.clone(), iv3.lo().clone(), iv3.hi().clone())?;
    let ext = extension_step(std::slice::from_ref(&vs.fv1), "Gamma5", &p, &default_schedule())?;
    status = combine(status, ext.status);
    let g5 = ext.enclosure("Gamma5").context("Gamma5 enclosure")?.clone();
    cert = cert.enclose("lc(FV1)", ext.enclosure("lc[0]").context("lc enclosure")?.clone()).enclose("Gamma5", g5.clone());

    let config = CrossConfig::vortex_example(&iv3, &g5, &ten_pow_neg(30))?;
    for (k, r) in laura_andoyer_residuals(&config, Problem::Vortex)?.iter().enumerate() {
        status = combine(status, check(r.contains_zero()));
        cert = cert.enclose(&format!("residual.LV{}", k + 1), r.clone());
    }
    cert.status = status;
    cert.eps_used = Some(s.eps.clone());
    Ok(cert)
}
