//! Sign certificates at real algebraic points.
//!
//! A point is one isolated root of a univariate polynomial plus coordinates
//! built from it with field operations and square roots. Every verdict comes
//! from interval evaluation over rational enclosures, so a certified sign is
//! the sign of the exact value.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed};
use thiserror::Error;

use crate::exactnum::{format_decimal, parse_rational, sqrt_interval, ten_pow_neg, BigRational, ExactError, RationalInterval};
use crate::multipoly::{MPoly, PolyError};
use crate::univar::{count_roots, isolate_root, UPoly, UnivarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("variable {0:?} is not a coordinate of the point")]
    Uncovered(String),
    #[error("isolating interval holds {0} roots, expected 1")]
    NotIsolating(usize),
    #[error("coordinate {0:?} defined twice")]
    Duplicate(String),
    #[error("no coordinate named {0:?} is defined before use")]
    UnknownCoordinate(String),
    #[error("refinement schedule is empty")]
    EmptySchedule,
    #[error("no leading coefficient could be decided")]
    AllInconclusive,
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Univar(#[from] UnivarError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Coordinate expression over earlier coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Var(String),
    Const(BigRational),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Sqrt(Box<Expr>),
}

impl Expr {
    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_string())
    }

    pub fn int(v: i64) -> Expr {
        Expr::Const(BigRational::from_integer(v.into()))
    }

    pub fn add(self, o: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(o))
    }

    pub fn sub(self, o: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(o))
    }

    pub fn mul(self, o: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(o))
    }

    pub fn div(self, o: Expr) -> Expr {
        Expr::Div(Box::new(self), Box::new(o))
    }

    pub fn sqrt(self) -> Expr {
        Expr::Sqrt(Box::new(self))
    }

    fn eval(&self, env: &BTreeMap<String, RationalInterval>, eps: &BigRational) -> Result<RationalInterval, CertError> {
        Ok(match self {
            Expr::Var(v) => env.get(v).cloned().ok_or_else(|| CertError::UnknownCoordinate(v.clone()))?,
            Expr::Const(c) => RationalInterval::point(c.clone()),
            Expr::Add(a, b) => a.eval(env, eps)?.add(&b.eval(env, eps)?),
            Expr::Sub(a, b) => a.eval(env, eps)?.sub(&b.eval(env, eps)?),
            Expr::Mul(a, b) => a.eval(env, eps)?.mul(&b.eval(env, eps)?),
            Expr::Div(a, b) => a.eval(env, eps)?.div(&b.eval(env, eps)?)?,
            Expr::Sqrt(a) => sqrt_interval(&a.eval(env, eps)?, eps)?,
        })
    }

    /// Value and derivative with respect to the primary variable.
    fn eval_d(&self, env: &BTreeMap<String, (RationalInterval, RationalInterval)>, eps: &BigRational) -> Result<(RationalInterval, RationalInterval), CertError> {
        Ok(match self {
            Expr::Var(v) => env.get(v).cloned().ok_or_else(|| CertError::UnknownCoordinate(v.clone()))?,
            Expr::Const(c) => (RationalInterval::point(c.clone()), RationalInterval::zero()),
            Expr::Add(a, b) => {
                let (x, dx) = a.eval_d(env, eps)?;
                let (y, dy) = b.eval_d(env, eps)?;
                (x.add(&y), dx.add(&dy))
            }
            Expr::Sub(a, b) => {
                let (x, dx) = a.eval_d(env, eps)?;
                let (y, dy) = b.eval_d(env, eps)?;
                (x.sub(&y), dx.sub(&dy))
            }
            Expr::Mul(a, b) => {
                let (x, dx) = a.eval_d(env, eps)?;
                let (y, dy) = b.eval_d(env, eps)?;
                (x.mul(&y), dx.mul(&y).add(&x.mul(&dy)))
            }
            Expr::Div(a, b) => {
                let (x, dx) = a.eval_d(env, eps)?;
                let (y, dy) = b.eval_d(env, eps)?;
                let q = x.div(&y)?;
                (q.clone(), dx.sub(&q.mul(&dy)).div(&y)?)
            }
            Expr::Sqrt(a) => {
                let (x, dx) = a.eval_d(env, eps)?;
                let s = sqrt_interval(&x, eps)?;
                let d = dx.div(&s.scale(&BigRational::from_integer(2.into())))?;
                (s, d)
            }
        })
    }
}

/// One real root of `poly` in `(lo, hi]`, plus derived coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicPointSpec {
    pub var: String,
    pub poly: UPoly,
    interval: RationalInterval,
    derived: Vec<(String, Expr)>,
}

impl AlgebraicPointSpec {
    /// Fails unless `poly` has exactly one root in `(lo, hi]`.
    pub fn new(var: &str, poly: UPoly, lo: BigRational, hi: BigRational) -> Result<Self, CertError> {
        let n = count_roots(&poly, &lo, &hi)?;
        if n != 1 {
            return Err(CertError::NotIsolating(n));
        }
        Ok(AlgebraicPointSpec { var: var.to_string(), poly, interval: RationalInterval::new(lo, hi)?, derived: Vec::new() })
    }

    /// Adds a coordinate defined in terms of the primary variable and the
    /// coordinates added before it.
    pub fn with(mut self, name: &str, e: Expr) -> Result<Self, CertError> {
        if name == self.var || self.derived.iter().any(|(n, _)| n == name) {
            return Err(CertError::Duplicate(name.to_string()));
        }
        self.derived.push((name.to_string(), e));
        Ok(self)
    }

    pub fn interval(&self) -> &RationalInterval {
        &self.interval
    }

    pub fn coordinates(&self) -> Vec<&str> {
        core::iter::once(self.var.as_str()).chain(self.derived.iter().map(|(n, _)| n.as_str())).collect()
    }

    /// Root enclosure of width at most `eps`.
    pub fn root_enclosure(&self, eps: &BigRational) -> Result<RationalInterval, CertError> {
        if self.interval.width() <= *eps {
            return Ok(self.interval.clone());
        }
        Ok(isolate_root(&self.poly, self.interval.lo(), self.interval.hi(), eps)?)
    }

    /// Enclosures of every coordinate with the root refined to `eps`.
    pub fn boxes(&self, eps: &BigRational) -> Result<BTreeMap<String, RationalInterval>, CertError> {
        let root = self.root_enclosure(eps)?;
        self.boxes_over(&root, eps)
    }

    /// Enclosures of every coordinate for the primary variable ranging over
    /// `x`.
    pub fn boxes_over(&self, x: &RationalInterval, eps: &BigRational) -> Result<BTreeMap<String, RationalInterval>, CertError> {
        let mut env = BTreeMap::new();
        env.insert(self.var.clone(), x.clone());
        for (name, e) in &self.derived {
            let v = e.eval(&env, eps)?;
            env.insert(name.clone(), v);
        }
        Ok(env)
    }

    fn jets_over(&self, x: &RationalInterval, eps: &BigRational) -> Result<BTreeMap<String, (RationalInterval, RationalInterval)>, CertError> {
        let mut env = BTreeMap::new();
        env.insert(self.var.clone(), (x.clone(), RationalInterval::point(BigRational::one())));
        for (name, e) in &self.derived {
            let v = e.eval_d(&env, eps)?;
            env.insert(name.clone(), v);
        }
        Ok(env)
    }

    fn check_covers(&self, f: &MPoly) -> Result<(), CertError> {
        let coords = self.coordinates();
        for v in f.variables() {
            let name = f.ring().name(v);
            if !coords.contains(&name) {
                return Err(CertError::Uncovered(name.to_string()));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Certified,
    Falsified,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Certified => "certified",
            Status::Falsified => "falsified",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub claim: String,
    pub status: Status,
    /// Certified sign of the quantity, when there is one.
    pub sign: Option<i8>,
    pub enclosures: Vec<(String, RationalInterval)>,
    pub eps_used: Option<BigRational>,
    pub notes: Vec<String>,
    pub elapsed_ms: Option<u64>,
}

impl Certificate {
    pub fn new(claim: &str, status: Status) -> Self {
        Certificate { claim: claim.to_string(), status, sign: None, enclosures: Vec::new(), eps_used: None, notes: Vec::new(), elapsed_ms: None }
    }

    pub fn enclose(mut self, label: &str, iv: RationalInterval) -> Self {
        self.enclosures.push((label.to_string(), iv));
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }

    pub fn enclosure(&self, label: &str) -> Option<&RationalInterval> {
        self.enclosures.iter().find(|(l, _)| l == label).map(|(_, iv)| iv)
    }

    pub fn is_certified(&self) -> bool {
        self.status == Status::Certified
    }
}

/// `10^-10, 10^-20, 10^-40`.
pub fn default_schedule() -> Vec<BigRational> {
    vec![ten_pow_neg(10), ten_pow_neg(20), ten_pow_neg(40)]
}

fn strict_sign(iv: &RationalInterval) -> Option<i8> {
    if iv.lo().is_positive() {
        Some(1)
    } else if iv.hi().is_negative() {
        Some(-1)
    } else {
        None
    }
}

/// Certifies the sign of `f` at `p`, refining along `schedule`.
///
/// A value that is exactly zero (point enclosure `[0, 0]`) gives a falsified
/// certificate; an enclosure still straddling zero after the last stage
/// gives an inconclusive one.
pub fn sign_at_point(f: &MPoly, p: &AlgebraicPointSpec, schedule: &[BigRational]) -> Result<Certificate, CertError> {
    p.check_covers(f)?;
    if schedule.is_empty() {
        return Err(CertError::EmptySchedule);
    }
    let mut last = None;
    for eps in schedule {
        let boxes = p.boxes(eps)?;
        let iv = f.evaluate_interval(&boxes)?;
        if let Some(s) = strict_sign(&iv) {
            let mut c = Certificate::new("sign", Status::Certified).enclose("value", iv);
            c.sign = Some(s);
            c.eps_used = Some(eps.clone());
            return Ok(c);
        }
        if iv.is_point() {
            let mut c = Certificate::new("sign", Status::Falsified).enclose("value", iv).note("value is exactly zero");
            c.sign = Some(0);
            c.eps_used = Some(eps.clone());
            return Ok(c);
        }
        last = Some((eps.clone(), iv));
    }
    let (eps, iv) = last.expect("schedule is not empty");
    let mut c = Certificate::new("sign", Status::Inconclusive).enclose("value", iv).note("enclosure contains zero at every refinement stage");
    c.eps_used = Some(eps);
    Ok(c)
}

/// Enclosure of `d/dx f(coords(x))` for `x` ranging over `window`.
pub fn derivative_enclosure(f: &MPoly, p: &AlgebraicPointSpec, window: &RationalInterval, eps: &BigRational) -> Result<RationalInterval, CertError> {
    p.check_covers(f)?;
    let jets = p.jets_over(window, eps)?;
    let vals: BTreeMap<String, RationalInterval> = jets.iter().map(|(k, (v, _))| (k.clone(), v.clone())).collect();
    let mut acc = RationalInterval::zero();
    for v in f.variables() {
        let name = f.ring().name(v);
        let partial = f.derivative_index(v).evaluate_interval(&vals)?;
        acc = acc.add(&partial.mul(&jets[name].1));
    }
    Ok(acc)
}

/// Mean-value sign argument around an approximate root `center`.
///
/// With the root of `p` inside `[center - radius, center + radius]`,
/// `|α(root) - α(center)| <= sup|α'| * radius`, where `α = f ∘ coords`. The
/// sign is certified when the enclosure of `α(center)` stays clear of that
/// bound. `value_at_center` defaults to an interval evaluation at `center`.
pub fn mvt_sign_bound(
    f: &MPoly,
    p: &AlgebraicPointSpec,
    center: &BigRational,
    radius: &BigRational,
    value_at_center: Option<RationalInterval>,
    eps: &BigRational,
) -> Result<Certificate, CertError> {
    p.check_covers(f)?;
    let window = RationalInterval::around(center, radius);
    let root = p.root_enclosure(eps)?;
    let d = derivative_enclosure(f, p, &window, eps)?;
    let bound = d.magnitude() * radius.abs();
    let value = match value_at_center {
        Some(v) => v,
        None => f.evaluate_interval(&p.boxes_over(&RationalInterval::point(center.clone()), eps)?)?,
    };
    let mut c = Certificate::new("mvt-sign", Status::Inconclusive)
        .enclose("value-at-center", value.clone())
        .enclose("derivative", d)
        .enclose("error-bound", RationalInterval::new(-bound.clone(), bound.clone())?);
    c.eps_used = Some(eps.clone());
    if !window.contains_interval(&root) {
        return Ok(c.note("root enclosure is not inside the window"));
    }
    if value.lo() > &bound {
        c.status = Status::Certified;
        c.sign = Some(1);
    } else if value.hi() < &-bound.clone() {
        c.status = Status::Certified;
        c.sign = Some(-1);
    } else {
        c = c.note("error bound reaches zero");
    }
    Ok(c)
}

/// One extension step: some generator's leading coefficient in `var` is
/// nonzero at `p`, so the partial solution extends.
///
/// When a generator is linear in `var` with certified leading coefficient,
/// the extended coordinate `-c0/c1` is enclosed too (labelled with `var`),
/// intersected over all such generators.
pub fn extension_step(gens: &[MPoly], var: &str, p: &AlgebraicPointSpec, schedule: &[BigRational]) -> Result<Certificate, CertError> {
    let mut out = Certificate::new("extension", Status::Inconclusive);
    let mut any_certified = false;
    let mut all_zero = !gens.is_empty();
    let mut ext: Option<RationalInterval> = None;
    for (k, g) in gens.iter().enumerate() {
        let v = g.ring().require(var)?;
        let coeffs = g.coeffs_in(v);
        let lc = coeffs.last().expect("at least the constant coefficient");
        let cert = sign_at_point(lc, p, schedule)?;
        let label = format!("lc[{k}]");
        out.enclosures.push((label, cert.enclosures[0].1.clone()));
        match cert.status {
            Status::Certified => {
                any_certified = true;
                all_zero = false;
                if coeffs.len() == 2 {
                    let eps = cert.eps_used.clone().expect("certified at some stage");
                    let boxes = p.boxes(&eps)?;
                    let c1 = lc.evaluate_interval(&boxes)?;
                    let c0 = coeffs[0].evaluate_interval(&boxes)?;
                    let x = c0.neg().div(&c1)?;
                    ext = Some(match ext {
                        None => x,
                        Some(prev) => intersect(&prev, &x).unwrap_or(prev),
                    });
                }
            }
            Status::Inconclusive => all_zero = false,
            Status::Falsified => {}
        }
    }
    if let Some(x) = ext {
        out.enclosures.push((var.to_string(), x));
    }
    if any_certified {
        out.status = Status::Certified;
        out.sign = Some(1);
    } else if all_zero {
        out.status = Status::Falsified;
        out.notes.push("every leading coefficient vanishes at the point".to_string());
    } else {
        return Err(CertError::AllInconclusive);
    }
    Ok(out)
}

fn intersect(a: &RationalInterval, b: &RationalInterval) -> Option<RationalInterval> {
    let lo = if a.lo() > b.lo() { a.lo() } else { b.lo() };
    let hi = if a.hi() < b.hi() { a.hi() } else { b.hi() };
    RationalInterval::new(lo.clone(), hi.clone()).ok()
}

/// Whether `iv` lies within `tol` of the decimal `target`.
pub fn near(iv: &RationalInterval, target: &str, tol: &BigRational) -> bool {
    let Ok(t) = parse_rational(target) else {
        return false;
    };
    iv.distance_to(&t) <= *tol
}

/// Short decimal rendering of an enclosure, for notes.
pub fn describe(iv: &RationalInterval, digits: usize) -> String {
    format!("[{}, {}]", format_decimal(iv.lo(), digits), format_decimal(iv.hi(), digits))
}
