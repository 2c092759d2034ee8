//! Sparse multivariate polynomials over the rationals.
//!
//! A polynomial is a list of `(Monomial, coefficient)` pairs kept sorted in
//! descending degrevlex order with no zero coefficients, so structural
//! equality is polynomial equality.

mod matrix;
mod monomial;
mod parse;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::{format_exact, BigRational, ExactError, RationalInterval};

pub use matrix::{scalar_det, PolyMatrix};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use parse::{parse_poly, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("variable {0:?} has no assigned value")]
    Unassigned(String),
    #[error("substitution rule for {0:?} has a zero denominator")]
    ZeroDenominator(String),
    #[error("matrix is {0}x{1}, not square")]
    NotSquare(usize, usize),
    #[error("matrix entries are not rectangular")]
    Ragged,
    #[error("duplicate variable name {0:?}")]
    DuplicateVariable(String),
    #[error("invalid variable name {0:?}")]
    InvalidName(String),
    #[error("at most {MAX_VARS} variables are supported")]
    TooManyVariables,
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Ordered variable names. Index 0 is the largest variable in every order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarTable {
    names: Vec<String>,
}

pub type Ring = Arc<VarTable>;

impl VarTable {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Ring, PolyError> {
        if names.len() > MAX_VARS {
            return Err(PolyError::TooManyVariables);
        }
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if !is_identifier(n) {
                return Err(PolyError::InvalidName(n.to_string()));
            }
            if out.iter().any(|o| o == n) {
                return Err(PolyError::DuplicateVariable(n.to_string()));
            }
            out.push(n.to_string());
        }
        Ok(Arc::new(VarTable { names: out }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize, PolyError> {
        self.index(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

#[derive(Clone)]
pub struct MPoly {
    ring: Ring,
    terms: Vec<(Monomial, BigRational)>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for MPoly {}

fn storage_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::DegRevLex.cmp(b, a)
}

impl MPoly {
    pub fn zero(ring: &Ring) -> Self {
        MPoly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn constant(ring: &Ring, c: BigRational) -> Self {
        Self::monomial(ring, Monomial::one(), c)
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: BigRational) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        MPoly { ring: ring.clone(), terms }
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Self, PolyError> {
        let i = ring.require(name)?;
        Ok(Self::monomial(ring, Monomial::var(i), BigRational::one()))
    }

    /// Parses the text grammar in this ring.
    pub fn parse(ring: &Ring, src: &str) -> Result<Self, PolyError> {
        parse_poly(ring, src)
    }

    /// Collects terms, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(ring: &Ring, terms: I) -> Self {
        let mut v: Vec<(Monomial, BigRational)> = terms.into_iter().collect();
        v.sort_by(|a, b| storage_cmp(&a.0, &b.0));
        let mut out: Vec<(Monomial, BigRational)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if matches!(out.last(), Some((_, c)) if c.is_zero()) {
            out.pop();
        }
        MPoly { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Terms in descending degrevlex order.
    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Constant term value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    /// Bit mask of the variables that occur.
    pub fn support(&self) -> u32 {
        self.terms.iter().fold(0, |acc, (m, _)| acc | m.support())
    }

    pub fn variables(&self) -> Vec<usize> {
        let s = self.support();
        (0..self.ring.len()).filter(|i| s & (1 << i) != 0).collect()
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(Monomial, &BigRational)> {
        if order == MonomialOrder::DegRevLex {
            return self.terms.first().map(|(m, c)| (*m, c));
        }
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms
            .binary_search_by(|(t, _)| storage_cmp(t, m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| BigRational::zero())
    }

    fn check_ring(&self, other: &MPoly) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn arith(&self, other: &MPoly, op: PolyOp) -> Result<MPoly, PolyError> {
        self.check_ring(other)?;
        Ok(match op {
            PolyOp::Add => self.merge(other, false),
            PolyOp::Sub => self.merge(other, true),
            PolyOp::Mul => self.mul_unchecked(other),
        })
    }

    fn merge(&self, other: &MPoly, negate: bool) -> MPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Greater
            } else if j == b.len() {
                Ordering::Less
            } else {
                storage_cmp(&a[i].0, &b[j].0)
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        MPoly { ring: self.ring.clone(), terms: out }
    }

    fn mul_unchecked(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero(&self.ring);
        }
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                acc.entry(ma.mul(mb)).and_modify(|x| *x += &c).or_insert(c);
            }
        }
        MPoly::from_terms(&self.ring, acc.into_iter().filter(|(_, c)| !c.is_zero()))
    }

    pub fn neg(&self) -> MPoly {
        MPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut result = MPoly::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    pub fn partial_derivative(&self, var: &str) -> Result<MPoly, PolyError> {
        let v = self.ring.require(var)?;
        Ok(self.derivative_index(v))
    }

    pub fn derivative_index(&self, v: usize) -> MPoly {
        let terms = self.terms.iter().filter(|(m, _)| m.exp(v) > 0).map(|(m, c)| {
            let e = m.exp(v);
            (m.with_exp(v, (e - 1) as u16), c * BigRational::from_integer(BigInt::from(e)))
        });
        MPoly::from_terms(&self.ring, terms)
    }

    /// Exact value at a point given by name.
    pub fn evaluate(&self, point: &BTreeMap<String, BigRational>) -> Result<BigRational, PolyError> {
        let vals = self.index_point(point)?;
        self.evaluate_indexed(&vals)
    }

    fn index_point<T: Clone>(&self, point: &BTreeMap<String, T>) -> Result<Vec<Option<T>>, PolyError> {
        let mut vals = vec![None; self.ring.len()];
        for (name, v) in point {
            if let Some(i) = self.ring.index(name) {
                vals[i] = Some(v.clone());
            }
        }
        Ok(vals)
    }

    pub fn evaluate_indexed(&self, vals: &[Option<BigRational>]) -> Result<BigRational, PolyError> {
        let powers = self.power_tables(vals, |x, e| num_traits::pow(x.clone(), e as usize))?;
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in self.vars_of(m) {
                t *= &powers[v][m.exp(v) as usize];
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Sound enclosure of the range over a box, by term-wise interval
    /// evaluation.
    pub fn evaluate_interval(&self, boxes: &BTreeMap<String, RationalInterval>) -> Result<RationalInterval, PolyError> {
        let vals = self.index_point(boxes)?;
        self.evaluate_interval_indexed(&vals)
    }

    pub fn evaluate_interval_indexed(&self, vals: &[Option<RationalInterval>]) -> Result<RationalInterval, PolyError> {
        let powers = self.power_tables(vals, |x, e| x.pow(e))?;
        let mut acc = RationalInterval::zero();
        for (m, c) in &self.terms {
            let mut t = RationalInterval::point(c.clone());
            for v in self.vars_of(m) {
                t = t.mul(&powers[v][m.exp(v) as usize]);
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    fn vars_of<'a>(&'a self, m: &'a Monomial) -> impl Iterator<Item = usize> + 'a {
        (0..self.ring.len()).filter(move |&v| m.exp(v) > 0)
    }

    /// `table[v][e] = value_v^e` for every exponent that occurs.
    fn power_tables<T: Clone>(&self, vals: &[Option<T>], pow: impl Fn(&T, u32) -> T) -> Result<Vec<Vec<T>>, PolyError> {
        let mut tables: Vec<Vec<T>> = vec![Vec::new(); self.ring.len()];
        for v in self.variables() {
            let x = vals
                .get(v)
                .and_then(|x| x.as_ref())
                .ok_or_else(|| PolyError::Unassigned(self.ring.name(v).to_string()))?;
            let d = self.degree_in(v);
            tables[v] = (0..=d).map(|e| pow(x, e)).collect();
        }
        Ok(tables)
    }

    /// Substitutes `var -> num/den` for each rule and clears denominators.
    ///
    /// Returns `(numerator, denominator)` with the numerator freed of its
    /// positive rational content. When the common denominator is a single
    /// term, the monomial factor shared with the numerator is cancelled.
    pub fn substitute_rational(&self, rules: &BTreeMap<String, (MPoly, MPoly)>) -> Result<(MPoly, MPoly), PolyError> {
        let mut indexed: Vec<(usize, &MPoly, &MPoly)> = Vec::new();
        for (name, (num, den)) in rules {
            let v = self.ring.require(name)?;
            self.check_ring(num)?;
            self.check_ring(den)?;
            if den.is_zero() {
                return Err(PolyError::ZeroDenominator(name.clone()));
            }
            indexed.push((v, num, den));
        }
        let ring = &self.ring;
        let degs: Vec<u32> = indexed.iter().map(|(v, _, _)| self.degree_in(*v)).collect();
        let num_pows: Vec<Vec<MPoly>> = indexed
            .iter()
            .zip(&degs)
            .map(|((_, n, _), &d)| powers_of(n, d))
            .collect();
        let den_pows: Vec<Vec<MPoly>> = indexed
            .iter()
            .zip(&degs)
            .map(|((_, _, q), &d)| powers_of(q, d))
            .collect();
        let mut numerator = MPoly::zero(ring);
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut t = MPoly::one(ring);
            for (k, (v, _, _)) in indexed.iter().enumerate() {
                let e = m.exp(*v);
                rest = rest.with_exp(*v, 0);
                t = t.mul_unchecked(&num_pows[k][e as usize]).mul_unchecked(&den_pows[k][(degs[k] - e) as usize]);
            }
            numerator = numerator.merge(&t.mul_monomial(&rest).scale(c), false);
        }
        let mut denominator = MPoly::one(ring);
        for (k, d) in degs.iter().enumerate() {
            denominator = denominator.mul_unchecked(&den_pows[k][*d as usize]);
        }
        if denominator.len() == 1 && !numerator.is_zero() {
            let shared = numerator.monomial_content().gcd(&denominator.terms[0].0);
            numerator = numerator.div_monomial(&shared);
            denominator = denominator.div_monomial(&shared);
        }
        let content = numerator.content();
        if !content.is_zero() {
            let inv = content.recip();
            numerator = numerator.scale(&inv);
            denominator = denominator.scale(&inv);
        }
        Ok((numerator, denominator))
    }

    /// Replaces one variable by a polynomial.
    pub fn substitute(&self, var: &str, value: &MPoly) -> Result<MPoly, PolyError> {
        let v = self.ring.require(var)?;
        self.check_ring(value)?;
        let d = self.degree_in(v);
        let pows = powers_of(value, d);
        let mut out = MPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let t = pows[e as usize].mul_monomial(&m.with_exp(v, 0)).scale(c);
            out = out.merge(&t, false);
        }
        Ok(out)
    }

    /// Positive rational gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigRational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            BigRational::zero()
        } else {
            BigRational::new(num, den)
        }
    }

    /// Integer-primitive representative with positive leading coefficient
    /// under `order`.
    pub fn primitive(&self, order: MonomialOrder) -> MPoly {
        let Some((_, lc)) = self.leading_term(order) else {
            return self.clone();
        };
        let mut c = self.content();
        if lc.is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::one();
        };
        it.fold(*first, |acc, (m, _)| acc.gcd(m))
    }

    pub fn div_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.div(m).expect("monomial does not divide"), c.clone())).collect(),
        }
    }

    /// Divides out the monomial content.
    pub fn strip_monomial_content(&self) -> MPoly {
        self.div_monomial(&self.monomial_content())
    }

    /// `self / d` when the division is exact.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        if d.is_zero() || !same_ring(&self.ring, &d.ring) {
            return None;
        }
        let (dm, dc) = (d.terms[0].0, d.terms[0].1.clone());
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((lm, lc)) = rem.terms.first().cloned() {
            let qm = lm.div(&dm)?;
            let qc = lc / &dc;
            let sub = d.mul_monomial(&qm).scale(&qc);
            rem = rem.merge(&sub, true);
            quot.push((qm, qc));
        }
        Some(MPoly::from_terms(&self.ring, quot))
    }

    /// Coefficients as a polynomial in `var`: entry `k` multiplies `var^k`.
    pub fn coeffs_in(&self, var: usize) -> Vec<MPoly> {
        let d = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigRational)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            buckets[m.exp(var) as usize].push((m.with_exp(var, 0), c.clone()));
        }
        buckets.into_iter().map(|b| MPoly::from_terms(&self.ring, b)).collect()
    }

    /// Moves the polynomial into another ring, matching variables by name.
    pub fn to_ring(&self, target: &Ring) -> Result<MPoly, PolyError> {
        let mut map = [0usize; MAX_VARS];
        for v in self.variables() {
            map[v] = target.require(self.ring.name(v))?;
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = [0u32; MAX_VARS];
            for v in 0..self.ring.len() {
                if m.exp(v) > 0 {
                    exps[map[v]] = m.exp(v);
                }
            }
            (Monomial::from_exps(&exps[..target.len()]).expect("exponent fits"), c.clone())
        });
        Ok(MPoly::from_terms(target, terms))
    }
}

fn powers_of(p: &MPoly, d: u32) -> Vec<MPoly> {
    let mut out = Vec::with_capacity(d as usize + 1);
    out.push(MPoly::one(&p.ring));
    for k in 1..=d as usize {
        let next = out[k - 1].mul_unchecked(p);
        out.push(next);
    }
    out
}

pub fn poly_arith(f: &MPoly, g: &MPoly, op: PolyOp) -> Result<MPoly, PolyError> {
    f.arith(g, op)
}

impl core::ops::Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.arith(rhs, PolyOp::Add).expect("ring mismatch")
    }
}

impl core::ops::Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.arith(rhs, PolyOp::Sub).expect("ring mismatch")
    }
}

impl core::ops::Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.arith(rhs, PolyOp::Mul).expect("ring mismatch")
    }
}

impl core::ops::Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly::neg(self)
    }
}

/// Writes a monomial as `R12^2*R13` (empty string for 1).
pub fn format_monomial(ring: &VarTable, m: &Monomial) -> String {
    let mut s = String::new();
    for v in 0..ring.len() {
        let e = m.exp(v);
        if e == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(ring.name(v));
        if e > 1 {
            s.push('^');
            s.push_str(&e.to_string());
        }
    }
    s
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            let mono = format_monomial(&self.ring, m);
            if mono.is_empty() {
                f.write_str(&format_exact(&mag))?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", format_exact(&mag), mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn ring() -> Ring {
        VarTable::new(&["x", "y", "z"]).unwrap()
    }

    fn p(r: &Ring, s: &str) -> MPoly {
        MPoly::parse(r, s).unwrap()
    }

    #[test]
    fn arithmetic_identities() {
        let r = ring();
        let f = p(&r, "x^2*y - 3/2*z + 1");
        assert_eq!(&f + &MPoly::zero(&r), f);
        assert_eq!(&f * &MPoly::one(&r), f);
        assert_eq!(&p(&r, "x+y") * &p(&r, "x-y"), p(&r, "x^2 - y^2"));
        assert!((&f - &f).is_zero());
        let other = VarTable::new(&["a"]).unwrap();
        assert_eq!(f.arith(&MPoly::one(&other), PolyOp::Add), Err(PolyError::RingMismatch));
    }

    #[test]
    fn derivatives() {
        let r = ring();
        assert_eq!(p(&r, "y^2").partial_derivative("y").unwrap(), p(&r, "2*y"));
        assert!(p(&r, "7").partial_derivative("x").unwrap().is_zero());
        assert_eq!(p(&r, "x^3*y + x*z").partial_derivative("x").unwrap(), p(&r, "3*x^2*y + z"));
        assert!(matches!(p(&r, "x").partial_derivative("w"), Err(PolyError::UnknownVariable(_))));
    }

    #[test]
    fn evaluation() {
        let r = ring();
        let mut pt = BTreeMap::new();
        pt.insert("x".to_string(), rat(3, 5));
        pt.insert("y".to_string(), rat(4, 5));
        assert_eq!(p(&r, "x^2+y^2").evaluate(&pt).unwrap(), int(1));
        assert!(matches!(p(&r, "x+z").evaluate(&pt), Err(PolyError::Unassigned(_))));
        // unassigned variables that do not occur are fine
        assert_eq!(p(&r, "5").evaluate(&BTreeMap::new()).unwrap(), int(5));
    }

    #[test]
    fn interval_evaluation_contains_range() {
        let r = ring();
        let mut b = BTreeMap::new();
        b.insert("x".to_string(), RationalInterval::new(int(-1), int(1)).unwrap());
        let sq = p(&r, "x^2").evaluate_interval(&b).unwrap();
        assert!(sq.contains(&int(0)) && sq.contains(&int(1)));
        assert_eq!(p(&r, "3").evaluate_interval(&b).unwrap(), RationalInterval::point(int(3)));
    }

    #[test]
    fn substitution_single_rule() {
        let r = VarTable::new(&["S125", "R12", "R25"]).unwrap();
        let num = p(&r, "R25^3 - R12^3");
        let den = p(&r, "R12^3*R25^3");
        let mut rules = BTreeMap::new();
        rules.insert("S125".to_string(), (num.clone(), den.clone()));
        let (n, d) = p(&r, "S125").substitute_rational(&rules).unwrap();
        assert_eq!((n, d), (num, den));
        let (n, d) = p(&r, "R12 + 1").substitute_rational(&BTreeMap::new()).unwrap();
        assert_eq!((n, d), (p(&r, "R12 + 1"), MPoly::one(&r)));
        rules.insert("R12".to_string(), (MPoly::one(&r), MPoly::zero(&r)));
        assert!(matches!(p(&r, "S125").substitute_rational(&rules), Err(PolyError::ZeroDenominator(_))));
    }

    #[test]
    fn exact_division_and_content() {
        let r = ring();
        let a = p(&r, "x^2 - y*z + 3");
        let b = p(&r, "2*x - z^3");
        assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        assert_eq!(a.div_exact(&b), None);
        assert_eq!(p(&r, "4*x + 6/5*y").content(), rat(2, 5));
        assert_eq!(p(&r, "-4*x + 6*y").primitive(MonomialOrder::DegRevLex), p(&r, "2*x - 3*y"));
        assert_eq!(p(&r, "x^2*y + x^3*y^2").strip_monomial_content(), p(&r, "1 + x*y"));
    }

    #[test]
    fn coefficient_split_and_ring_transfer() {
        let r = ring();
        let f = p(&r, "x^2*y + 3*x - z");
        let cs = f.coeffs_in(0);
        assert_eq!(cs, vec![p(&r, "-z"), p(&r, "3"), p(&r, "y")]);
        let small = VarTable::new(&["z", "y", "x"]).unwrap();
        let g = f.to_ring(&small).unwrap();
        assert_eq!(g.to_string(), "y*x^2 - z + 3*x");
        assert!(f.to_ring(&VarTable::new(&["x"]).unwrap()).is_err());
    }

    #[test]
    fn printing_round_trips() {
        let r = VarTable::new(&["R45", "R56"]).unwrap();
        let f = p(&r, "4 * R45 ^2 - R56^2 - 4");
        assert_eq!(f.to_string(), "4*R45^2 - R56^2 - 4");
        let g = p(&r, "-1/3*R45*R56 + 0.25");
        assert_eq!(g.to_string(), "-1/3*R45*R56 + 1/4");
        assert_eq!(p(&r, &g.to_string()), g);
    }
}
