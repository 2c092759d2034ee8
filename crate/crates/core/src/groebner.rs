//! Buchberger's algorithm with the Gebauer–Möller pair criteria.
//!
//! Inside the loop every polynomial is kept with integer, content-free
//! coefficients and terms sorted descending in the working order, so
//! reductions are fraction-free.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::BigRational;
use crate::multipoly::{MPoly, Monomial, MonomialOrder, PolyError, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GbError {
    #[error("generator list is empty")]
    NoGenerators,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("inconclusive: {reason} after {} pairs", stats.pairs_processed)]
    Inconclusive { reason: String, stats: GbStats },
    #[error("keep_last = {keep} must be below the {vars} ring variables")]
    BadElimination { keep: usize, vars: usize },
}

/// Limits for a single run. Hitting any of them aborts with
/// [`GbError::Inconclusive`].
#[derive(Clone, Copy, Default)]
pub struct GbOptions<'a> {
    pub max_pairs: Option<usize>,
    pub max_degree: Option<u32>,
    /// Polled between pairs and during long reductions; returning `true`
    /// aborts the run (used for wall-clock and memory budgets).
    pub interrupt: Option<&'a (dyn Fn() -> bool + Sync)>,
}

impl core::fmt::Debug for GbOptions<'_> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("GbOptions")
            .field("max_pairs", &self.max_pairs)
            .field("max_degree", &self.max_degree)
            .field("interrupt", &self.interrupt.is_some())
            .finish()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_processed: usize,
    pub pairs_pruned: usize,
    pub zero_reductions: usize,
    pub max_degree: u32,
    pub basis_peak: usize,
    /// Pairs dropped by a degree truncation.
    pub pairs_truncated: usize,
}

/// Reduced Groebner basis: primitive integer coefficients, positive leading
/// coefficients, sorted by leading monomial descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub polys: Vec<MPoly>,
    /// False only for a truncated [`partial_basis`].
    pub reduced: bool,
    pub stats: GbStats,
}

impl GroebnerBasis {
    pub fn ring(&self) -> Option<&Ring> {
        self.polys.first().map(MPoly::ring)
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant() && !self.polys[0].is_zero()
    }
}

/// Integer polynomial with terms sorted descending in a fixed order.
#[derive(Clone, Debug)]
struct GPoly {
    terms: Vec<(Monomial, BigInt)>,
    sugar: u32,
}

impl GPoly {
    fn from_mpoly(p: &MPoly, order: MonomialOrder) -> GPoly {
        let mut den = BigInt::one();
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
        let mut terms: Vec<(Monomial, BigInt)> =
            p.terms().iter().map(|(m, c)| (*m, c.numer() * (&den / c.denom()))).collect();
        if order != MonomialOrder::DegRevLex {
            terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        }
        let mut g = GPoly { sugar: p.total_degree(), terms };
        g.make_primitive();
        g
    }

    fn to_mpoly(&self, ring: &Ring) -> MPoly {
        MPoly::from_terms(ring, self.terms.iter().map(|(m, c)| (*m, BigRational::from_integer(c.clone()))))
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_primitive(&mut self) {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms.first().is_some_and(|t| t.1.is_negative()) {
            g = -g;
        }
        if !g.is_zero() && !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c /= &g;
            }
        }
    }
}

/// `a * f[from..] - b * q * g`, keeping `f[..from]` scaled by `a`.
/// The term at `from` must cancel.
fn reduce_step(f: &[(Monomial, BigInt)], from: usize, a: &BigInt, b: &BigInt, q: &Monomial, g: &[(Monomial, BigInt)], order: MonomialOrder) -> Vec<(Monomial, BigInt)> {
    let scale = |c: &BigInt| if a.is_one() { c.clone() } else { c * a };
    let mut out = Vec::with_capacity(f.len() + g.len());
    for (m, c) in &f[..from] {
        out.push((*m, scale(c)));
    }
    let (mut i, mut j) = (from + 1, 1);
    while i < f.len() || j < g.len() {
        let ord = if i == f.len() {
            Ordering::Less
        } else if j == g.len() {
            Ordering::Greater
        } else {
            order.cmp(&f[i].0, &g[j].0.mul(q))
        };
        match ord {
            Ordering::Greater => {
                out.push((f[i].0, scale(&f[i].1)));
                i += 1;
            }
            Ordering::Less => {
                out.push((g[j].0.mul(q), -(b * &g[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = scale(&f[i].1) - b * &g[j].1;
                if !c.is_zero() {
                    out.push((f[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

type Terms = Vec<(Monomial, BigInt)>;

/// Sum of sorted term lists of geometrically growing sizes, each with a
/// pending integer scale. Terms inside a bucket are ascending, so the
/// leading term of a bucket is its last element.
struct Geobucket {
    order: MonomialOrder,
    buckets: Vec<(BigInt, Terms)>,
}

fn bucket_cap(k: usize) -> usize {
    4usize << (2 * k)
}

impl Geobucket {
    fn new(order: MonomialOrder) -> Self {
        Geobucket { order, buckets: Vec::new() }
    }

    fn materialize(b: &mut (BigInt, Terms)) {
        if !b.0.is_one() {
            for (_, c) in b.1.iter_mut() {
                *c *= &b.0;
            }
            b.0 = BigInt::one();
        }
    }

    fn merge(&self, x: Terms, y: Terms) -> Terms {
        let mut out = Vec::with_capacity(x.len() + y.len());
        let mut xi = x.into_iter().peekable();
        let mut yi = y.into_iter().peekable();
        loop {
            let ord = match (xi.peek(), yi.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(a), Some(b)) => self.order.cmp(&a.0, &b.0),
            };
            match ord {
                Ordering::Less => out.push(xi.next().expect("peeked")),
                Ordering::Greater => out.push(yi.next().expect("peeked")),
                Ordering::Equal => {
                    let (m, a) = xi.next().expect("peeked");
                    let (_, b) = yi.next().expect("peeked");
                    let c = a + b;
                    if !c.is_zero() {
                        out.push((m, c));
                    }
                }
            }
        }
        out
    }

    /// Adds an ascending term list.
    fn add(&mut self, mut p: Terms) {
        let mut k = 0;
        while bucket_cap(k) < p.len() {
            k += 1;
        }
        loop {
            if self.buckets.len() <= k {
                self.buckets.resize_with(k + 1, || (BigInt::one(), Vec::new()));
            }
            if self.buckets[k].1.is_empty() {
                self.buckets[k] = (BigInt::one(), p);
                return;
            }
            Self::materialize(&mut self.buckets[k]);
            let old = core::mem::take(&mut self.buckets[k].1);
            p = self.merge(old, p);
            if p.len() <= bucket_cap(k) {
                self.buckets[k].1 = p;
                return;
            }
            k += 1;
        }
    }

    fn scale(&mut self, a: &BigInt) {
        for b in self.buckets.iter_mut().filter(|b| !b.1.is_empty()) {
            b.0 *= a;
        }
    }

    /// Removes and returns the leading term, `None` once empty.
    fn pop_leading(&mut self) -> Option<(Monomial, BigInt)> {
        loop {
            let mut best: Option<Monomial> = None;
            for b in &self.buckets {
                if let Some((m, _)) = b.1.last() {
                    if best.map_or(true, |x| self.order.cmp(m, &x) == Ordering::Greater) {
                        best = Some(*m);
                    }
                }
            }
            let m = best?;
            let mut c = BigInt::zero();
            for b in self.buckets.iter_mut() {
                if b.1.last().is_some_and(|t| t.0 == m) {
                    let (_, bc) = b.1.pop().expect("nonempty");
                    c += bc * &b.0;
                }
            }
            if !c.is_zero() {
                return Some((m, c));
            }
        }
    }

    /// Every remaining term, descending.
    fn drain_descending(&mut self) -> Terms {
        let mut acc: Terms = Vec::new();
        for mut b in core::mem::take(&mut self.buckets) {
            Self::materialize(&mut b);
            acc = self.merge(acc, b.1);
        }
        acc.reverse();
        acc
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for b in &self.buckets {
            let mut h = BigInt::zero();
            for (_, c) in &b.1 {
                h = h.gcd(c);
                if h.is_one() {
                    break;
                }
            }
            g = g.gcd(&(h * &b.0));
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn divide(&mut self, d: &BigInt) {
        for b in self.buckets.iter_mut() {
            Self::materialize(b);
            for (_, c) in b.1.iter_mut() {
                *c /= d;
            }
        }
    }
}

/// Irreducible terms collected during a normal form, with the scalings
/// applied to the rest of the polynomial after they were emitted.
struct Emitted {
    terms: Terms,
    pending: Vec<(usize, BigInt)>,
}

impl Emitted {
    fn settle(&mut self) {
        let mut factor = BigInt::one();
        let mut ev = self.pending.len();
        for k in (0..self.terms.len()).rev() {
            while ev > 0 && self.pending[ev - 1].0 > k {
                factor *= &self.pending[ev - 1].1;
                ev -= 1;
            }
            if !factor.is_one() {
                self.terms[k].1 *= &factor;
            }
        }
        self.pending.clear();
    }
}

struct Reducer<'a> {
    order: MonomialOrder,
    interrupt: Option<&'a (dyn Fn() -> bool + Sync)>,
}

/// Bits of accumulated scaling after which the content is divided out.
const CONTENT_EVERY_BITS: u64 = 256;

impl Reducer<'_> {
    fn find_divisor<'b>(&self, m: &Monomial, basis: &'b [&'b GPoly]) -> Option<&'b GPoly> {
        basis.iter().copied().filter(|g| g.lm().divides(m)).min_by_key(|g| g.terms.len())
    }

    /// Normal form of `f`. With `full` every term is reduced, otherwise only
    /// the leading term. Returns `None` when interrupted.
    fn normal_form(&self, f: GPoly, basis: &[&GPoly], full: bool) -> Option<GPoly> {
        let mut sugar = f.sugar;
        let mut rest = Geobucket::new(self.order);
        let mut terms = f.terms;
        terms.reverse();
        rest.add(terms);
        let mut out = Emitted { terms: Vec::new(), pending: Vec::new() };
        let mut grown = 0u64;
        let mut every = CONTENT_EVERY_BITS;
        let mut steps = 0u32;
        while let Some((m, c)) = rest.pop_leading() {
            let Some(g) = self.find_divisor(&m, basis) else {
                out.terms.push((m, c));
                if !full {
                    out.terms.extend(rest.drain_descending());
                    break;
                }
                continue;
            };
            let q = m.div(g.lm()).expect("divisor");
            let d = c.gcd(g.lc());
            let a = g.lc() / &d;
            let b = &c / &d;
            let (a, b) = if a.is_negative() { (-a, -b) } else { (a, b) };
            if !a.is_one() {
                rest.scale(&a);
                if !out.terms.is_empty() {
                    out.pending.push((out.terms.len(), a.clone()));
                }
                grown += a.bits();
            }
            let tail: Terms = g.terms[1..].iter().rev().map(|(gm, gc)| (gm.mul(&q), -(&b * gc))).collect();
            rest.add(tail);
            sugar = sugar.max(g.sugar + q.degree());
            steps += 1;
            if grown > every {
                out.settle();
                let mut cont = rest.content();
                for (_, c) in &out.terms {
                    if cont.is_one() {
                        break;
                    }
                    cont = cont.gcd(c);
                }
                if !cont.is_zero() && !cont.is_one() {
                    rest.divide(&cont);
                    for (_, c) in out.terms.iter_mut() {
                        *c /= &cont;
                    }
                }
                // back off while stripping recovers little of the growth
                every = if cont.bits() * 2 < grown { every.saturating_mul(2) } else { CONTENT_EVERY_BITS };
                grown = 0;
                if self.interrupt.is_some_and(|stop| stop()) {
                    return None;
                }
            }
            if (steps % 64 == 0 || b.bits() > 1024) && self.interrupt.is_some_and(|stop| stop()) {
                return None;
            }
        }
        out.settle();
        let mut r = GPoly { terms: out.terms, sugar };
        r.make_primitive();
        Some(r)
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Pair selection key: normal strategy for degrevlex, sugar otherwise.
fn pair_cmp(order: MonomialOrder, a: &Pair, b: &Pair) -> Ordering {
    let primary = if order.is_graded() { a.lcm.degree().cmp(&b.lcm.degree()) } else { a.sugar.cmp(&b.sugar) };
    primary
        .then_with(|| order.cmp(&a.lcm, &b.lcm))
        .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
}

struct State {
    polys: Vec<GPoly>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    stats: GbStats,
}

impl State {
    fn make_pair(&self, i: usize, j: usize) -> Pair {
        let (a, b) = (&self.polys[i], &self.polys[j]);
        let lcm = a.lm().lcm(b.lm());
        let sugar = (a.sugar + lcm.degree() - a.lm().degree()).max(b.sugar + lcm.degree() - b.lm().degree());
        Pair { i, j, lcm, sugar }
    }

    /// Gebauer–Möller update after appending polynomial `h`.
    fn update(&mut self, h: usize) {
        let lh = *self.polys[h].lm();
        let mut c: Vec<Pair> = self.active.iter().map(|&g| self.make_pair(g, h)).collect();
        let mut d: Vec<Pair> = Vec::new();
        while let Some(p) = c.pop() {
            let lg = self.polys[p.i].lm();
            let keep = lh.is_coprime(lg)
                || (!c.iter().any(|o| o.lcm.divides(&p.lcm)) && !d.iter().any(|o| o.lcm.divides(&p.lcm)));
            if keep {
                d.push(p);
            } else {
                self.stats.pairs_pruned += 1;
            }
        }
        let before = d.len();
        d.retain(|p| !lh.is_coprime(self.polys[p.i].lm()));
        self.stats.pairs_pruned += before - d.len();
        let before = self.pairs.len();
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm) && lh.lcm(polys[p.i].lm()) != p.lcm && lh.lcm(polys[p.j].lm()) != p.lcm)
        });
        self.stats.pairs_pruned += before - self.pairs.len();
        self.pairs.extend(d);
        self.active.retain(|&g| !lh.divides(polys[g].lm()));
        self.active.push(h);
        self.stats.basis_peak = self.stats.basis_peak.max(self.active.len());
    }

    fn pop_pair(&mut self, order: MonomialOrder) -> Option<Pair> {
        let best = (0..self.pairs.len()).min_by(|&a, &b| pair_cmp(order, &self.pairs[a], &self.pairs[b]))?;
        Some(self.pairs.swap_remove(best))
    }
}

fn spoly_g(f: &GPoly, g: &GPoly, order: MonomialOrder) -> GPoly {
    let lcm = f.lm().lcm(g.lm());
    let qf = lcm.div(f.lm()).expect("lcm");
    let qg = lcm.div(g.lm()).expect("lcm");
    let d = f.lc().gcd(g.lc());
    let (a, b) = (g.lc() / &d, f.lc() / &d);
    let left: Vec<(Monomial, BigInt)> = f.terms.iter().map(|(m, c)| (m.mul(&qf), c.clone())).collect();
    let mut s = GPoly {
        terms: reduce_step(&left, 0, &a, &b, &qg, &g.terms, order),
        sugar: (f.sugar + qf.degree()).max(g.sugar + qg.degree()),
    };
    s.make_primitive();
    s
}

fn check_rings(gens: &[MPoly]) -> Result<Ring, GbError> {
    let ring = gens.first().ok_or(GbError::NoGenerators)?.ring().clone();
    if gens.iter().any(|g| g.ring().names() != ring.names()) {
        return Err(PolyError::RingMismatch.into());
    }
    Ok(ring)
}

/// Fully reduced normal form of `f` modulo `basis`, scaled to be
/// integer-primitive with positive leading coefficient under `order`.
pub fn reduce(f: &MPoly, basis: &[MPoly], order: MonomialOrder) -> Result<MPoly, GbError> {
    if basis.iter().any(|g| g.ring().names() != f.ring().names()) {
        return Err(PolyError::RingMismatch.into());
    }
    if f.is_zero() {
        return Ok(f.clone());
    }
    let gs: Vec<GPoly> = basis.iter().filter(|g| !g.is_zero()).map(|g| GPoly::from_mpoly(g, order)).collect();
    let refs: Vec<&GPoly> = gs.iter().collect();
    let r = Reducer { order, interrupt: None };
    let nf = r.normal_form(GPoly::from_mpoly(f, order), &refs, true).expect("no interrupt");
    Ok(nf.to_mpoly(f.ring()))
}

/// `lcm/LT(f) * f - lcm/LT(g) * g` with monic-leading-term scaling.
pub fn s_polynomial(f: &MPoly, g: &MPoly, order: MonomialOrder) -> Result<MPoly, GbError> {
    if f.ring().names() != g.ring().names() {
        return Err(PolyError::RingMismatch.into());
    }
    let (Some((mf, cf)), Some((mg, cg))) = (f.leading_term(order), g.leading_term(order)) else {
        return Err(GbError::NoGenerators);
    };
    let lcm = mf.lcm(&mg);
    let a = f.mul_monomial(&lcm.div(&mf).expect("lcm")).scale(&cf.recip());
    let b = g.mul_monomial(&lcm.div(&mg).expect("lcm")).scale(&cg.recip());
    Ok(&a - &b)
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[MPoly], order: MonomialOrder, opts: &GbOptions<'_>) -> Result<GroebnerBasis, GbError> {
    run(gens, order, opts, None)
}

/// Buchberger run that drops every pair whose lcm has degree above
/// `truncate_degree`.
///
/// The result consists of ideal members with their true leading terms, which
/// is all a dimension upper bound needs. If no pair was dropped it is the
/// reduced basis; otherwise `reduced` is false, tails are left unreduced and
/// `stats.pairs_truncated` counts the dropped pairs.
pub fn partial_basis(gens: &[MPoly], order: MonomialOrder, truncate_degree: u32, opts: &GbOptions<'_>) -> Result<GroebnerBasis, GbError> {
    run(gens, order, opts, Some(truncate_degree))
}

fn run(gens: &[MPoly], order: MonomialOrder, opts: &GbOptions<'_>, truncate: Option<u32>) -> Result<GroebnerBasis, GbError> {
    let ring = check_rings(gens)?;
    let reducer = Reducer { order, interrupt: opts.interrupt };
    let mut st = State { polys: Vec::new(), active: Vec::new(), pairs: Vec::new(), stats: GbStats::default() };
    let inconclusive = |reason: &str, stats: &GbStats| GbError::Inconclusive { reason: reason.into(), stats: stats.clone() };

    let mut inputs: Vec<GPoly> = gens.iter().filter(|g| !g.is_zero()).map(|g| GPoly::from_mpoly(g, order)).collect();
    // smallest leading terms first keeps early reductions cheap
    inputs.sort_by(|a, b| order.cmp(a.lm(), b.lm()).then_with(|| a.terms.len().cmp(&b.terms.len())));
    for g in inputs {
        let refs: Vec<&GPoly> = st.active.iter().map(|&k| &st.polys[k]).collect();
        let Some(h) = reducer.normal_form(g, &refs, true) else {
            return Err(inconclusive("interrupted", &st.stats));
        };
        if h.is_zero() {
            continue;
        }
        st.stats.max_degree = st.stats.max_degree.max(h.lm().degree());
        st.polys.push(h);
        st.update(st.polys.len() - 1);
    }

    while let Some(p) = st.pop_pair(order) {
        if opts.interrupt.is_some_and(|stop| stop()) {
            return Err(inconclusive("interrupted", &st.stats));
        }
        if opts.max_pairs.is_some_and(|m| st.stats.pairs_processed >= m) {
            return Err(inconclusive("pair limit reached", &st.stats));
        }
        if truncate.is_some_and(|d| p.lcm.degree() > d) {
            st.stats.pairs_truncated += 1;
            continue;
        }
        if opts.max_degree.is_some_and(|m| p.lcm.degree() > m) {
            return Err(inconclusive("degree limit reached", &st.stats));
        }
        st.stats.pairs_processed += 1;
        let s = spoly_g(&st.polys[p.i], &st.polys[p.j], order);
        let refs: Vec<&GPoly> = st.active.iter().map(|&k| &st.polys[k]).collect();
        let Some(h) = reducer.normal_form(s, &refs, false) else {
            return Err(inconclusive("interrupted", &st.stats));
        };
        if h.is_zero() {
            st.stats.zero_reductions += 1;
            continue;
        }
        st.stats.max_degree = st.stats.max_degree.max(h.lm().degree());
        if h.lm().is_one() {
            let one = GPoly { terms: alloc::vec![(Monomial::one(), BigInt::one())], sugar: 0 };
            return Ok(GroebnerBasis { order, polys: alloc::vec![one.to_mpoly(&ring)], reduced: true, stats: st.stats });
        }
        st.polys.push(h);
        st.update(st.polys.len() - 1);
    }

    let mut basis: Vec<GPoly> = st.active.iter().map(|&k| st.polys[k].clone()).collect();
    basis.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    if st.stats.pairs_truncated > 0 {
        let polys = basis.iter().map(|g| g.to_mpoly(&ring)).collect();
        return Ok(GroebnerBasis { order, polys, reduced: false, stats: st.stats });
    }
    let mut reduced = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let others: Vec<&GPoly> = basis.iter().enumerate().filter(|&(o, _)| o != k).map(|(_, g)| g).collect();
        let Some(r) = reducer.normal_form(basis[k].clone(), &others, true) else {
            return Err(inconclusive("interrupted", &st.stats));
        };
        reduced.push(r.to_mpoly(&ring));
    }
    Ok(GroebnerBasis { order, polys: reduced, reduced: true, stats: st.stats })
}

/// Divisibility-minimal leading monomials of the basis.
pub fn leading_terms(gb: &GroebnerBasis) -> Vec<Monomial> {
    let lts: Vec<Monomial> = gb.polys.iter().filter_map(|p| p.leading_term(gb.order).map(|t| t.0)).collect();
    minimalize(&lts)
}

/// Removes monomials divisible by another (keeps the first of duplicates).
pub fn minimalize(ms: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for (k, m) in ms.iter().enumerate() {
        let dominated = ms.iter().enumerate().any(|(o, d)| o != k && d.divides(m) && (d != m || o < k));
        if !dominated {
            out.push(*m);
        }
    }
    out
}

/// `reduce(f, gb) == 0`.
pub fn ideal_membership(f: &MPoly, gb: &GroebnerBasis) -> Result<bool, GbError> {
    Ok(reduce(f, &gb.polys, gb.order)?.is_zero())
}

/// Generators of the ideal intersected with the subring of the last
/// `keep_last` variables, read off a block elimination basis. Uses the
/// given order when it already eliminates the leading block.
pub fn elimination_ideal(gens: &[MPoly], keep_last: usize, order_hint: Option<MonomialOrder>, opts: &GbOptions<'_>) -> Result<(Vec<MPoly>, GroebnerBasis), GbError> {
    let ring = check_rings(gens)?;
    let n = ring.len();
    if keep_last >= n {
        return Err(GbError::BadElimination { keep: keep_last, vars: n });
    }
    let elim = n - keep_last;
    let order = match order_hint {
        Some(MonomialOrder::Lex) => MonomialOrder::Lex,
        Some(MonomialOrder::Block(k)) if k >= elim => MonomialOrder::Block(k),
        _ => MonomialOrder::Block(elim),
    };
    let gb = buchberger(gens, order, opts)?;
    let mask: u32 = if elim >= 32 { u32::MAX } else { (1u32 << elim) - 1 };
    let kept = gb.polys.iter().filter(|p| p.support() & mask == 0).cloned().collect();
    Ok((kept, gb))
}

/// Checks the Buchberger criterion: every S-polynomial of basis pairs
/// reduces to zero, and every listed generator lies in the ideal.
pub fn verify_basis(gb: &GroebnerBasis, gens: &[MPoly]) -> Result<bool, GbError> {
    let order = gb.order;
    for (i, f) in gb.polys.iter().enumerate() {
        for g in &gb.polys[i + 1..] {
            let (mf, mg) = (f.leading_term(order).expect("nonzero").0, g.leading_term(order).expect("nonzero").0);
            if mf.is_coprime(&mg) {
                // first criterion: reduces to zero
                continue;
            }
            if !reduce(&s_polynomial(f, g, order)?, &gb.polys, order)?.is_zero() {
                return Ok(false);
            }
        }
    }
    for g in gens {
        if !ideal_membership(g, gb)? {
            return Ok(false);
        }
    }
    Ok(true)
}
