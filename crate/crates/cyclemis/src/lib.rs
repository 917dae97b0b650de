//! Maximal independent sets (MISs) of the cycle graph `C_n`, their orbits
//! under the dihedral group, and the exact integer sequences that count them.
//!
//! `C_n` has `p(n)` maximal independent sets, where `p` is the Perrin
//! sequence (A001608). The symmetries of the cycle partition this family
//! into orbits; this crate computes those partitions two independent ways
//! and cross-checks them:
//!
//! - [`mis_enum`] enumerates the MIS family as cyclic binary words and
//!   [`orbits`] partitions it by brute force under the full dihedral group
//!   or its rotation subgroup.
//! - [`formulas`] evaluates closed forms for the orbit counts, built from
//!   Dirichlet convolutions of Perrin, Padovan and Möbius-type sequences
//!   ([`sequences`]).
//!
//! [`compositions`] carries the equivalent view of orbits as cyclic
//! compositions of `n` into parts 2 and 3, and [`chords`] names the MIS
//! orbits of `C_{7k}` as chords on a `k`-octave major scale.
//!
//! The `cyclemis` binary exposes all of this as subcommands (`table`,
//! `verify`, `orbits`, `compositions`, `chords`); the crate's `examples/`
//! directory shows the library API for each capability.

pub mod chords;
pub mod compositions;
pub mod formulas;
pub mod group;
pub mod mis_enum;
pub mod orbits;
pub mod report;
pub mod sequences;
pub mod verify;

pub use group::{Action, CyclicWord, DihedralElement, Orbit};
pub use sequences::Seq;
