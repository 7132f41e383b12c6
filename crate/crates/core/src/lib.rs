//! Finite completely regular semigroups given by Cayley tables.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is computed on dense
//! tables over element indices `0..n`:
//!
//! * [`Semigroup`] and [`CrSemigroup`]: validation, idempotents, inverses,
//!   Green's relations, subsemigroups, quotients and products;
//! * [`Partition`], [`BinaryRelation`], [`Congruence`]: the relation algebra,
//!   congruence closure, `θ⁰`, `π_K` and the full congruence lattice;
//! * [`kernel_trace`]: kernel and trace, the operators `ρ_t`, `ρ_k`, `ρ^T`,
//!   `ρ^K` and the min-network of a congruence;
//! * [`special`]: the named congruences `σ, β, η, ν, κ, π, λ, μ, τ, …` and the
//!   classification predicates;
//! * [`theorems`]: a battery of checkable statements about the above,
//!   evaluated against lattice-scan oracles;
//! * [`instances`]: standard constructions and exhaustive enumeration.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod congruence;
mod error;
mod green;
mod lattice;
mod partition;
mod regular;
mod relation;
mod semigroup;

pub mod instances;
pub mod kernel_trace;
pub mod network;
pub mod special;
pub mod theorems;

pub use congruence::{
    closure_of_relation, congruence_closure, greatest_contained_congruence, is_congruence, saturation_congruence,
    Compatibility, Congruence,
};
pub use error::{Error, Result};
pub use green::GreenData;
pub use lattice::{all_congruences, CongruenceLattice, DEFAULT_LATTICE_BOUND};
pub use partition::Partition;
pub use regular::{f_relation, theta_relation, y_relation, CrSemigroup, ElementView};
pub use relation::BinaryRelation;
pub use semigroup::{Embedding, Quotient, Semigroup};
