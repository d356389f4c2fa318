//! Digraph algorithms around locating-dominating sets.
//!
//! A *dominating* set of a digraph is a vertex set `S` such that every vertex
//! outside `S` has an in-neighbour in `S`. A *locating* set separates every
//! pair of outside vertices by their in-neighbourhoods inside `S`; a set that
//! is both is *locating-dominating* (LD). This crate provides:
//!
//! * a small immutable [`digraph::Digraph`] type with the classical
//!   primitives (neighbourhoods, components, condensation, BFS layers),
//! * recognizers and decompositions for tournaments, local tournaments and
//!   round decompositions ([`structure`]),
//! * exact brute-force oracles for the location/domination numbers and the
//!   tournament subroutines built on them ([`ld`]),
//! * a certified `⌈n/2⌉` LD construction for connected local tournaments,
//!   split into the roundable pipeline ([`roundable`]) and the separator
//!   based pipeline for strong non-roundable inputs ([`nonroundable`]),
//! * a certified `2n/3` (quasi-twin-free) / `3n/4` (twin-free) pipeline for
//!   digraphs with a supervising vertex ([`supervising`]),
//! * deterministic instance generators for the tight families and random
//!   test supply ([`generators`]), and
//! * an edge-list instance format plus a small CLI ([`io`], [`cli`]).
//!
//! Every solver output is re-verified against the definitions before it is
//! returned, so callers get a [`ld::CertifiedSet`] whose `verified` flag is
//! backed by an actual membership check rather than by construction alone.
//!
//! Start with the runnable examples (`cargo run --example ...`) for a tour.

pub mod cli;
pub mod digraph;
pub mod error;
pub mod generators;
pub mod io;
pub mod ld;
pub mod nonroundable;
pub mod roundable;
pub mod structure;
pub mod supervising;

mod vset;

pub use digraph::Digraph;
pub use error::{Error, Result};
pub use ld::{CertifiedSet, SetKind};
