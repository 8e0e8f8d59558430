//! Search by lackadaisical quantum walk on complete bipartite graphs.
//!
//! A discrete-time coined walker lives on the directed arcs of K_{n1,n2},
//! with a weighted self-loop at every vertex (weight `l1` in set X, `l2` in
//! set Y). One search step applies the marking oracle, the weighted Grover
//! diffusion coin, and the flip-flop shift. The crate provides three
//! independent computation paths that cross-check each other:
//!
//! - [`full`]: the full Hilbert-space engine, O(arc count) per step;
//! - [`subspace`]: the exact reduced dynamics in the 7- or 12-dimensional
//!   invariant subspace spanned by marked/unmarked vertex classes;
//! - [`analytic`]: closed-form spectral predictions (angles, peak times,
//!   peak probabilities, optimal loop weights, runtimes).
//!
//! [`peaks`] adds first-peak detection, weight sweeps and (l1, l2)
//! heatmaps over the exact engines, and [`verify`] bundles the invariant
//! suites (unitarity, involutions, stationarity, cross-engine equality,
//! perturbative residual scaling).
//!
//! The crate is `no_std`-compatible (with `alloc`); enable the `libm`
//! feature instead of `std` for float math on bare targets.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("lackwalk-core requires either the `std` or the `libm` feature");

mod math;

pub mod analytic;
pub mod full;
pub mod graph;
pub mod peaks;
pub mod subspace;
pub mod trace;
pub mod verify;

pub use graph::{ArcIndex, BipartiteInstance, InstanceError};
pub use trace::{Engine, EvolutionTrace, Init};
