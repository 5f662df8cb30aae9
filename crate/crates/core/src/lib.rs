//! Core algorithms for a small general-topology workbench.
//!
//! The crate covers three layers that fit together into one compactification
//! experiment:
//!
//! - [`finspace`]: finite topological spaces over ground sets of up to 16
//!   points, represented as canonical sorted families of open bit masks,
//!   with the usual point-set operators (closure, interior, derived set,
//!   density).
//! - [`separation`] and [`lattice`]: separation-axiom classification
//!   (T0..T4, regular, normal) and the lattice of all topologies on a fixed
//!   ground set, including deformation chains that walk from the trivial
//!   topology to the discrete one.
//! - [`ordinal`]: symbolic ordinals below w^2, the order topology on
//!   `[0,a)` / `[0,a]`, a decidable interval-set language for subsets, the
//!   one-point compactification view of `[0,w]`, and finite-subcover
//!   extraction.
//!
//! [`compactify`] glues the layers into a four-step pipeline: record a dense
//! embedding target, deform a finite space from trivial to discrete, index
//! its points by ordinals, and verify density / accumulation at the top /
//! compactness on the ordinal model.
//!
//! The crate is `no_std` (with `alloc`); everything is a pure function over
//! immutable values. Rendering, parsing of the literal grammars, JSON and
//! the command-line front end live in the companion `ordtop-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod compactify;
pub mod finspace;
pub mod lattice;
pub mod ordinal;
pub mod rng;
pub mod separation;
