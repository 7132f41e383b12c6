//! A battery of checkable statements about a completely regular semigroup.
//!
//! Each [`ResultId`] names a statement; [`Battery::verify`] evaluates it and
//! returns a [`Verdict`] with a [`Witness`] on failure. Equivalence theorems
//! evaluate every condition separately and pass when all agree. Statements
//! of the form "least congruence with property P" are checked against a scan
//! of the full congruence lattice.
//!
//! The named congruences the battery reasons about can be replaced through
//! [`Battery::named_mut`], which is how the fault-injection tests work.

mod battery;
mod verdict;

pub use battery::Battery;
pub use verdict::{Outcome, ResultId, Verdict, Witness};
