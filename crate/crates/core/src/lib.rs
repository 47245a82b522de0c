#![no_std]
#![deny(missing_docs)]

//! Sweep maps on words and their inverses.
//!
//! The modular sweep map sorts a word over `{0, …, m-1}` by the running sums
//! of its letters taken mod `m`. This crate computes that map, inverts it by
//! locating the unique *successful* partition of the image word, and exposes
//! the distributive lattice of *equitable* partitions the search runs through.
//! The same machinery inverts the sweep map on integer words and the zeta map
//! on rational Dyck paths.
//!
//! Everything here is pure computation over owned values and needs only
//! `alloc`. Command-line tooling, file formats and parallel verification live
//! in the companion `sweep-tools` crate.
//!
//! Conventions:
//!
//! * letter positions are 0-based in every API;
//! * blocks are addressed by their block index `k` in `0..m`, never by display
//!   position. Display order is `m-1, …, 1, 0` from left to right;
//! * "rightward" means toward block 0. The rightmost equitable partition has
//!   the smallest block indices and is the top of the lattice.

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;

pub mod equitable;
pub mod general;
pub mod lattice;
pub mod oracle;
pub mod schedule;
pub mod sweep;
pub mod words;

pub use error::{Error, Result};
pub use words::{LevelSequence, ModWord, PartitionedWord};
