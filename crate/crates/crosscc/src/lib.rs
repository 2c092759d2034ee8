//! Files, budgets, parallelism and the reproduction pipeline on top of
//! `crosscc-core`.

pub mod formats;
pub mod limits;
pub mod pipeline;
