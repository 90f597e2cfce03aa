//! Spectral parameters of uniform hypergraphs.
//!
//! For an r-uniform hypergraph `G` on vertices `0..n` the polyform is
//! `P_G(x) = r! * sum over edges of prod x_i`, and for `alpha >= 1`
//!
//! ```text
//! lambda_alpha(G) = max { P_G(x) : |x_1|^alpha + ... + |x_n|^alpha = 1 }.
//! ```
//!
//! `alpha = r` is the largest eigenvalue, `alpha = 1` the Lagrangian. The crate
//! provides the combinatorial objects ([`hypergraph`]), the solvers and
//! brute-force oracles ([`polyform`]), a catalog of checkable inequalities
//! ([`bounds`]) and exhaustive small-order extremal searches ([`extremal`]).
//!
//! The crate is `no_std` (with `alloc`) when built without the default `std`
//! feature. With `std`, multistart solves and enumeration scans fan out over
//! a rayon pool; results do not depend on scheduling.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod bounds;
mod error;
pub mod extremal;
pub mod hypergraph;
mod par;
pub mod polyform;
pub mod property;
mod sum;

pub use error::{Error, Result};
pub use hypergraph::{DegreeProfile, Hypergraph};
pub use polyform::{SolverConfig, SpectralResult, WeightVector};
pub use property::{PropertyMode, PropertySpec};
