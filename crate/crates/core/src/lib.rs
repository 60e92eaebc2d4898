//! Exact algebra behind the unlinked-embedding tower calculator.
//!
//! Everything here is pure and allocation-only: integer chain complexes with
//! Smith-normal-form homology ([`chains`]), Lyndon bases of free Lie algebras
//! ([`lie`]), rational homotopy ranks of sphere wedges ([`hilton`]), the
//! connectivity and rank formulas attached to the tower ([`tower`]) and the
//! disjoint-disk example ([`disklinks`]).
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the
//! command-line front end live in the `towercalc` crate.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod chains;
pub mod disklinks;
pub mod graded;
pub mod hilton;
pub mod lie;
pub mod matrix;
pub mod models;
pub mod snf;
pub mod tower;

pub use chains::{ChainComplex, ChainError, ChainMap, HomologyGroup, HomologySummary};
pub use graded::GradedRankTable;
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithForm};
