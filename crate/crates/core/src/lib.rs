//! Bounded Motzkin paths, the bijection between free Motzkin paths and
//! Motzkin prefixes in a strip, and its links to t-core partitions.
//!
//! The path alphabet is `u` (up), `d` (down) and `f` (flat). Most functions
//! take and return [`PathWord`]s; see [`bijection::phi`] and
//! [`bijection::psi`] for the two directions of the main map.

pub mod bijection;
pub mod core_maps;
pub mod counting;
pub mod error;
pub mod partition;
pub mod path;
pub mod verify;

pub use bijection::{phi, psi, run_class, run_delta, PhiCase, RunClass, Side};
pub use core_maps::{BeadSequence, ConversionRecord, Representation};
pub use counting::{BigCount, CountTable};
pub use error::{Error, Result};
pub use partition::{Abacus, BetaSet, DoubledAbacus, MdSet, Partition};
pub use path::{Family, FamilySpec, PathWord, RunDirection, Step};
