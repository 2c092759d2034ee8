//! Exact algebra kernel for reproducing the cross central configuration
//! finiteness computations.
//!
//! Everything in this crate is pure and allocation-based: no IO, no clocks,
//! no threads. The companion `crosscc` crate adds files, JSON, timing and the
//! command line.

#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod certify;
pub mod dimension;
pub mod exactnum;
pub mod groebner;
pub mod multipoly;
pub mod systems;
pub mod univar;

pub use exactnum::{BigRational, RationalInterval};
pub use multipoly::{MPoly, Monomial, MonomialOrder, PolyMatrix, VarTable};
pub use univar::UPoly;
