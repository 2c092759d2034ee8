//! Affine dimension from leading-term ideals.
//!
//! For a monomial ideal the zero set is a union of coordinate subspaces, so
//! its dimension is `n - t` where `t` is the size of a smallest variable set
//! meeting the support of every generator.

use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::groebner::{buchberger, leading_terms, minimalize, GbError, GbOptions};
use crate::multipoly::{MPoly, Monomial, MonomialOrder, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimError {
    #[error("dimension needs a graded order, got {0:?}")]
    NonGradedOrder(MonomialOrder),
    #[error("leading terms carry no provenance; refusing to certify a bound")]
    MissingProvenance,
    #[error(transparent)]
    Gb(#[from] GbError),
}

/// Monomials in a fixed ring, optionally tagged with where they came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSet {
    pub ring: Ring,
    pub monomials: Vec<Monomial>,
    /// Labels of the computations that produced these leading terms.
    pub provenance: Vec<String>,
}

impl MonomialSet {
    pub fn new(ring: &Ring, monomials: Vec<Monomial>) -> Self {
        MonomialSet { ring: ring.clone(), monomials, provenance: Vec::new() }
    }

    pub fn with_provenance(mut self, source: impl Into<String>) -> Self {
        self.provenance.push(source.into());
        self
    }

    pub fn minimalized(&self) -> MonomialSet {
        MonomialSet { ring: self.ring.clone(), monomials: minimalize(&self.monomials), provenance: self.provenance.clone() }
    }

    /// Whether every monomial of `other` is divisible by one of ours, i.e.
    /// `other` lies in the ideal we generate.
    pub fn generates_all(&self, other: &[Monomial]) -> bool {
        other.iter().all(|m| self.monomials.iter().any(|g| g.divides(m)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dimension {
    /// `-1` when the variety is empty.
    pub dim: i32,
    /// Set when a generator is the constant monomial.
    pub empty_variety: bool,
}

/// Dimension of the zero set of a monomial ideal in `nvars` variables.
pub fn monomial_dimension(monomials: &[Monomial], nvars: usize) -> Dimension {
    if monomials.iter().any(Monomial::is_one) {
        return Dimension { dim: -1, empty_variety: true };
    }
    let mut supports: Vec<u32> = monomials.iter().map(Monomial::support).collect();
    supports.sort_by_key(|s| s.count_ones());
    supports.dedup();
    // drop supersets: hitting the subset hits them too
    let mut minimal: Vec<u32> = Vec::new();
    for s in supports {
        if !minimal.iter().any(|&m| m & s == m) {
            minimal.push(s);
        }
    }
    let mut best = nvars as u32;
    min_transversal(&minimal, 0, 0, &mut best);
    Dimension { dim: nvars as i32 - best as i32, empty_variety: false }
}

fn min_transversal(sets: &[u32], chosen: u32, size: u32, best: &mut u32) {
    if size >= *best {
        return;
    }
    let Some(&open) = sets.iter().filter(|&&s| s & chosen == 0).min_by_key(|s| s.count_ones()) else {
        *best = size;
        return;
    };
    if size + 1 >= *best {
        return;
    }
    let mut bits = open;
    while bits != 0 {
        let v = bits.trailing_zeros();
        bits &= bits - 1;
        min_transversal(sets, chosen | (1 << v), size + 1, best);
    }
}

pub fn monomial_ideal_dimension(ms: &MonomialSet) -> Dimension {
    monomial_dimension(&ms.monomials, ms.ring.len())
}

/// Dimension of the affine variety of `gens` through a Groebner basis under
/// a graded order.
pub fn ideal_dimension(gens: &[MPoly], ring: &Ring, order: MonomialOrder, opts: &GbOptions<'_>) -> Result<(Dimension, MonomialSet), DimError> {
    if !order.is_graded() {
        return Err(DimError::NonGradedOrder(order));
    }
    let nonzero: Vec<MPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        let ms = MonomialSet::new(ring, Vec::new());
        return Ok((Dimension { dim: ring.len() as i32, empty_variety: false }, ms));
    }
    let gb = buchberger(&nonzero, order, opts)?;
    let ms = MonomialSet::new(ring, leading_terms(&gb)).with_provenance("reduced Groebner basis");
    Ok((monomial_ideal_dimension(&ms), ms))
}

/// Upper bound on the dimension of an ideal from some of its leading terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PltBound {
    pub bound: i32,
    pub claimed: i32,
    /// `bound <= claimed`.
    pub holds: bool,
    pub provenance: Vec<String>,
}

/// Since the partial set lies in `LT(I)`, `dim Z(I) <= dim Z(partial)`.
pub fn plt_bound(partial_lts: &MonomialSet, claimed_k: i32) -> Result<PltBound, DimError> {
    if partial_lts.provenance.is_empty() {
        return Err(DimError::MissingProvenance);
    }
    let d = monomial_ideal_dimension(partial_lts);
    Ok(PltBound { bound: d.dim, claimed: claimed_k, holds: d.dim <= claimed_k, provenance: partial_lts.provenance.clone() })
}
