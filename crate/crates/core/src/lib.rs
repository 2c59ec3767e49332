#![forbid(unsafe_code)]
//! Edge-disjoint long cycles versus small edge hitting sets.
//!
//! A cycle is *long* when it has at least `ell` edges. For a multigraph `G`
//! and integers `k`, `ell` the [`solver`] returns either `k` pairwise
//! edge-disjoint long cycles or an edge set `X` with
//! `|X| <= f_bound(k, ell)` such that `G - X` has no long cycle. Both
//! outcomes come as [`solver::Certificate`]s that can be checked
//! independently.

pub mod bench;
pub mod cycles;
pub mod error;
pub mod frame;
pub mod gen;
pub mod graph;
pub mod hubs;
pub mod pathtools;
pub mod separation;
pub mod solver;
pub mod suns;
mod unionfind;

pub use error::{Error, Result};
