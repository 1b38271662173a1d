//! Explicit finite groups given by a full multiplication table.
//!
//! Elements are ids `0..n` with `0` the identity. Everything here is computed
//! by enumeration, so this engine doubles as the brute-force oracle for the
//! symbolic [`crate::abelian`] engine.

mod catalogue;
mod construct;
mod group;
mod search;
mod subgroup;

use alloc::string::String;
use thiserror::Error;

pub use catalogue::{Catalogue, CatalogueEntry};
pub use construct::{
    cyclic, dicyclic, dihedral, direct_product, elementary_abelian, from_abelian, heisenberg,
};
pub use group::{CayleyGroup, Elem};
pub use search::{index_p_subgroups, subgroups_of_order};
pub use subgroup::{Coset, Subgroup};

/// Hard upper bound on the order of any table built by this crate (ids are
/// stored as `u16`).
pub const MAX_ORDER: usize = 4096;
/// Default order cap for table construction requested from the outside.
pub const DEFAULT_TABLE_CAP: usize = 512;
/// Default order cap for exhaustive subgroup work.
pub const DEFAULT_SUBGROUP_CAP: usize = 128;

/// Row or column of a Cayley table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row(usize),
    Column(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExplicitError {
    #[error("empty table")]
    EmptyTable,
    #[error("row {row} has {len} entries, expected {n}")]
    Ragged { row: usize, len: usize, n: usize },
    #[error("entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("element 0 is not a two-sided identity (fails at element {element})")]
    NoIdentityAtZero { element: usize },
    #[error("{line:?} repeats element {value}")]
    NotLatinSquare { line: Line, value: usize },
    #[error("({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("order {order} exceeds the cap of {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("subgroup is not normal: conjugating by {witness} leaves it")]
    NotNormal { witness: usize },
    #[error("not a subgroup: {reason}")]
    NotSubgroup { reason: String },
}

#[cfg(test)]
mod tests;
