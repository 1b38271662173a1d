//! Exact computation of the sum-of-element-orders invariant ψ(G) = Σ o(g),
//! order types and LCM-group membership for finite groups.
//!
//! Two engines are provided:
//!
//! * [`abelian`] works on symbolic abelian groups given by their primary
//!   decomposition and uses closed formulas; it scales to orders far beyond
//!   anything that fits in a multiplication table.
//! * [`explicit`] works on groups given by a full Cayley table and computes
//!   everything by enumeration. It is the brute-force oracle for the symbolic
//!   engine and the carrier for non-abelian groups.
//!
//! [`lab`] instantiates the structural statements about ψ and LCM-groups on
//! concrete configurations and records one verdict per configuration.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod abelian;
pub mod explicit;
pub mod lab;
pub mod numcore;

pub use abelian::{AbelianGroup, InvariantFactors, OrderType};
pub use explicit::{CayleyGroup, Subgroup};
pub use numcore::{Factorization, Natural, Partition};
