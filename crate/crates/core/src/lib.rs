//! Exact combinatorics of simultaneous core multipartitions.
//!
//! The library provides, over exact integer arithmetic throughout:
//!
//! - partitions, hooks, beta-sets and s-cores ([`partitions`], [`beta`]);
//! - multipartition data `(s | c_1, ..., c_l)`, residue contents, the
//!   weight function and the core membership tests ([`multicore`]);
//! - the affine symmetric group action whose orbits the core sets are
//!   ([`weyl`]);
//! - finiteness decisions and member enumeration for intersections of
//!   core sets ([`finiteness`]);
//! - closed-form counts, boundary-word codecs and average-size audits for
//!   simultaneous core bipartitions ([`enumeration`]).
//!
//! The `coremp` binary exposes all of this behind a text/JSON command
//! line; see [`cli`].

pub mod beta;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod finiteness;
pub mod multicore;
pub mod partitions;
pub mod weyl;

pub use beta::{BetaSpec, SSet, ShiftedBetaSet};
pub use error::{Error, Result};
pub use multicore::{Datum, DatumSet, Multipartition};
pub use partitions::{Content, Partition, ResidueClass};
