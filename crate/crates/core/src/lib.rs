//! Exact combinatorial invariants of Seifert fibered homology spheres
//! `Σ(a₁,…,aₙ)` and of torus knots.
//!
//! Every quantity is computed along at least two independent routes that are
//! required to agree:
//!
//! * the Neumann–Siebenmann invariant `μ̄` from a plumbing graph, from
//!   Dedekind–Rademacher sums, and (for odd `a₁⋯aₙ`) from trigonometric sums;
//! * `b₃ + b₇` from bounded lattice-point counts and from the alternating sum
//!   of unbounded simplex counts;
//! * the Casson invariant `λ` from `μ̄ − (b₃ + b₇)` and, for three fibers, from
//!   the Milnor fiber signature read off the singularity spectrum;
//! * the `d`-invariant of `T(p,q)` from semigroup gaps, the two-variable
//!   spectrum, theta-characteristic sections and the Alexander polynomial.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![deny(rust_2018_idioms)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arithmetic;
mod error;
pub mod invariants;
pub mod lattice;
pub mod plumbing;
pub mod seifert;
pub mod torusknot;

pub use arithmetic::Rational;
pub use invariants::{FloerBetti, InvariantReport, MuBarMethod};
pub use plumbing::{PlumbingGraph, PlumbingInvariants, SymmetricMatrix, WuClass};
pub use lattice::{CountSpec, Strictness, TauTriple};
pub use seifert::SeifertData;
pub use torusknot::TorusKnotReport;
pub use error::{Error, Result};





