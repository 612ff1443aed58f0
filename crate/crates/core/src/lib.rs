//! Exact group arithmetic for verifying capable p-group witnesses.
//!
//! The [`group`] module implements split extensions `H ⋊ C_m` of a finite
//! abelian p-group by a cyclic group, with lower central series, centers and
//! quotient orders computed by exhaustive enumeration. [`constructions`]
//! builds the Easterfield-style groups `K(p, r)` and dihedral 2-groups, and
//! [`capability`] checks that their central quotients attain equality in the
//! bound `b <= a + floor((c - 1)/(p - 1))` on generator orders of a capable
//! p-group of class `c`.

pub mod capability;
pub mod cli;
pub mod constructions;
mod error;
pub mod group;
pub mod presentation;

pub use error::{Error, Result};
pub use group::{
    make_group, ActionMatrix, Construction, CyclicOrders, ExponentVector, GroupElement, SplitGroup,
    Subgroup, DEFAULT_ENUMERATION_CAP,
};
