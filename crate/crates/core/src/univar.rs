//! Univariate polynomials over the rationals: Sturm sequences, real root
//! counting and isolation, and Sylvester resultants of multivariate
//! polynomials.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::{format_exact, BigRational, RationalInterval};
use crate::multipoly::{MPoly, Monomial, PolyError, PolyMatrix, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnivarError {
    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,
    #[error("polynomial is not univariate in {0:?}")]
    NotUnivariate(String),
    #[error("interval ({lo}, {hi}] is empty")]
    EmptyInterval { lo: String, hi: String },
    #[error("expected exactly one root in the interval, found {0}")]
    RootCount(usize),
    #[error("isolation tolerance must be positive")]
    NonPositiveEps,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Dense coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<BigRational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `x - r`.
    pub fn linear_root(r: &BigRational) -> Self {
        Self::new(vec![-r, BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        self.eval(x).cmp(&BigRational::zero())
    }

    /// Horner evaluation in interval arithmetic.
    pub fn eval_interval(&self, x: &RationalInterval) -> RationalInterval {
        let mut acc = RationalInterval::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add_scalar(c);
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = BigRational::zero();
        UPoly::new((0..n).map(|k| self.coeffs.get(k).unwrap_or(&z) + o.coeffs.get(k).unwrap_or(&z)).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> UPoly {
        UPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, s: &BigRational) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> UPoly {
        (0..e).fold(UPoly::constant(BigRational::one()), |acc, _| acc.mul(self))
    }

    /// Euclidean division over the rationals. Panics on a zero divisor.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let inv = d.lc().recip();
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UPoly::new(q), UPoly::new(r))
    }

    /// Monic greatest common divisor (zero when both are zero).
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.primitive(), o.primitive());
        while !b.is_zero() {
            let r = a.div_rem(&b).1.primitive();
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    /// Positive rational content.
    pub fn content(&self) -> BigRational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in &self.coeffs {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            BigRational::zero()
        } else {
            BigRational::new(num, den)
        }
    }

    /// Integer coefficients with unit content and positive leading
    /// coefficient.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Like [`UPoly::primitive`] but never flips the sign.
    pub fn positive_primitive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.scale(&self.content().recip())
    }

    /// `p / gcd(p, p')`: same roots, all simple.
    pub fn square_free_part(&self) -> UPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.primitive()
    }

    /// Exact quotient when `d` divides `self`.
    pub fn div_exact(&self, d: &UPoly) -> Option<UPoly> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Divides out `f` as often as possible; returns the multiplicity and
    /// the cofactor.
    pub fn remove_factor(&self, f: &UPoly) -> (u32, UPoly) {
        let mut k = 0;
        let mut cur = self.clone();
        if f.degree().unwrap_or(0) == 0 || cur.is_zero() {
            return (0, cur);
        }
        while let Some(q) = cur.div_exact(f) {
            cur = q;
            k += 1;
        }
        (k, cur)
    }

    /// Reads a polynomial that only involves `var`.
    pub fn from_mpoly(p: &MPoly, var: usize) -> Result<UPoly, UnivarError> {
        if p.support() & !(1u32 << var) != 0 {
            return Err(UnivarError::NotUnivariate(p.ring().name(var).to_string()));
        }
        let d = p.degree_in(var) as usize;
        let mut c = vec![BigRational::zero(); d + 1];
        for (m, v) in p.terms() {
            c[m.exp(var) as usize] = v.clone();
        }
        Ok(UPoly::new(c))
    }

    pub fn to_mpoly(&self, ring: &Ring, var: usize) -> MPoly {
        MPoly::from_terms(
            ring,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::var_pow(var, k as u16), c.clone())),
        )
    }

    /// Upper bound on the absolute value of every real root.
    pub fn cauchy_bound(&self) -> BigRational {
        let lc = self.lc().abs();
        let m = self.coeffs.iter().map(|c| c.abs() / &lc).max().unwrap_or_else(BigRational::zero);
        m + BigRational::one()
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => alloc::format!("{var}^{k}"),
            };
            if mono.is_empty() {
                s.push_str(&format_exact(&mag));
            } else if mag.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format_exact(&mag));
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({})", self.to_string_in("x"))
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

fn to_int_coeffs(p: &UPoly) -> Vec<BigInt> {
    p.positive_primitive().coeffs.iter().map(|c| c.numer().clone()).collect()
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// `|lc(b)|^(deg a - deg b + 1) * a mod b`, all in integers. The positive
/// multiplier keeps signs intact for Sturm sequences.
fn signed_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    if r.len() <= db {
        return r;
    }
    let lb = b[db].clone();
    let lb_abs = lb.abs();
    let sgn = if lb.is_negative() { -BigInt::one() } else { BigInt::one() };
    let delta = r.len() - db;
    let mut steps = 0;
    while r.len() > db {
        let top = r.len() - 1;
        let lr = r[top].clone();
        let shift = top - db;
        // r <- |lb| r - sgn(lb) lr x^shift b
        for c in r.iter_mut() {
            *c *= &lb_abs;
        }
        let f = &lr * &sgn;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &f * bc;
        }
        trim(&mut r);
        steps += 1;
    }
    let extra = delta - steps;
    if extra > 0 {
        let m = num_traits::pow(lb_abs, extra);
        for c in r.iter_mut() {
            *c *= &m;
        }
    }
    r
}

fn make_primitive_positive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c /= &g;
        }
    }
}

/// Sturm sequence of the square-free part of `p`.
///
/// Each term is integer-primitive; remainders are computed with a positive
/// pseudo-division multiplier so signs match the classical sequence. The
/// first term has the sign of `p`'s leading coefficient, so for square-free
/// `p` it is a positive multiple of `p`.
pub fn sturm_sequence(p: &UPoly) -> Result<Vec<UPoly>, UnivarError> {
    if p.is_zero() {
        return Err(UnivarError::ZeroPolynomial);
    }
    let p0 = p.square_free_part();
    let mut seq: Vec<Vec<BigInt>> = vec![to_int_coeffs(&p0)];
    let d = p0.derivative();
    if !d.is_zero() {
        seq.push(to_int_coeffs(&d));
    }
    while seq.len() >= 2 {
        let n = seq.len();
        let mut r = signed_prem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        for c in r.iter_mut() {
            *c = -&*c;
        }
        make_primitive_positive(&mut r);
        seq.push(r);
    }
    let flip = p.lc().is_negative();
    Ok(seq
        .into_iter()
        .map(|v| {
            let u = UPoly::new(v.into_iter().map(BigRational::from_integer).collect());
            if flip {
                u.neg()
            } else {
                u
            }
        })
        .collect())
}

fn sign_variations(seq: &[UPoly], x: &BigRational) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for p in seq {
        let s = p.sign_at(x);
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `p` in the half-open interval `(a, b]`.
pub fn count_roots(p: &UPoly, a: &BigRational, b: &BigRational) -> Result<usize, UnivarError> {
    if p.is_zero() {
        return Err(UnivarError::ZeroPolynomial);
    }
    if a >= b {
        return Err(UnivarError::EmptyInterval { lo: format_exact(a), hi: format_exact(b) });
    }
    let seq = sturm_sequence(p)?;
    Ok(count_with(&seq, a, b))
}

fn count_with(seq: &[UPoly], a: &BigRational, b: &BigRational) -> usize {
    sign_variations(seq, a).saturating_sub(sign_variations(seq, b))
}

/// Shrinks `(a, b]`, which must hold exactly one root of `p`, to a closed
/// interval of width at most `eps` around that root.
pub fn isolate_root(p: &UPoly, a: &BigRational, b: &BigRational, eps: &BigRational) -> Result<RationalInterval, UnivarError> {
    if !eps.is_positive() {
        return Err(UnivarError::NonPositiveEps);
    }
    let n = count_roots(p, a, b)?;
    if n != 1 {
        return Err(UnivarError::RootCount(n));
    }
    let q = p.square_free_part();
    let (mut lo, mut hi) = (a.clone(), b.clone());
    if q.sign_at(&hi).is_eq() {
        return Ok(RationalInterval::point(hi));
    }
    // with exactly one simple root strictly inside, the endpoint signs differ
    // unless the root sits at `a`, which the half-open interval excludes
    let s_hi = q.sign_at(&hi);
    while &hi - &lo > *eps {
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        let s = q.sign_at(&mid);
        if s.is_eq() {
            return Ok(RationalInterval::point(mid));
        }
        if s == s_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(RationalInterval::new(lo, hi).expect("lo < hi"))
}

/// Disjoint isolating intervals for every real root, in increasing order.
pub fn isolate_all_roots(p: &UPoly, eps: &BigRational) -> Result<Vec<RationalInterval>, UnivarError> {
    if p.is_zero() {
        return Err(UnivarError::ZeroPolynomial);
    }
    if !eps.is_positive() {
        return Err(UnivarError::NonPositiveEps);
    }
    let seq = sturm_sequence(p)?;
    let bound = p.cauchy_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    let two = BigRational::from_integer(2.into());
    while let Some((a, b)) = stack.pop() {
        match count_with(&seq, &a, &b) {
            0 => {}
            1 => out.push(isolate_root(p, &a, &b, eps)?),
            _ => {
                let mid = (&a + &b) / &two;
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
        }
    }
    out.sort_by(|x, y| x.lo().cmp(y.lo()));
    Ok(out)
}

/// Sylvester matrix of `f` and `g` with respect to variable index `var`.
pub fn sylvester_matrix(f: &MPoly, g: &MPoly, var: usize) -> Result<PolyMatrix, PolyError> {
    let fc = f.coeffs_in(var);
    let gc = g.coeffs_in(var);
    let (m, n) = (fc.len() - 1, gc.len() - 1);
    let size = m + n;
    let ring = f.ring();
    let zero = MPoly::zero(ring);
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in fc.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in gc.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    PolyMatrix::new(ring, rows)
}

/// Resultant with respect to the named variable.
///
/// When either input does not involve the variable the usual conventions
/// apply: `Res(a, g) = a^deg g` for a constant `a`.
pub fn resultant_wrt(f: &MPoly, g: &MPoly, var: &str) -> Result<MPoly, PolyError> {
    let v = f.ring().require(var)?;
    if f.ring() != g.ring() && f.ring().names() != g.ring().names() {
        return Err(PolyError::RingMismatch);
    }
    if f.is_zero() || g.is_zero() {
        return Ok(MPoly::zero(f.ring()));
    }
    let (m, n) = (f.degree_in(v), g.degree_in(v));
    if m == 0 {
        return Ok(f.pow(n));
    }
    if n == 0 {
        return Ok(g.pow(m));
    }
    sylvester_matrix(f, g, v)?.det()
}
