//! Exact-arithmetic toolkit for Picard lattices of toric K3 families.
//!
//! Starting from a reflexive 3-polytope this crate computes, over
//! arbitrary-precision integers:
//!
//! - convex hulls, polar duals, face lattices and lattice-point
//!   classifications of integral 3-polytopes ([`polytope`]);
//! - the divisor rays, linear relations and intersection matrices of the
//!   associated K3 family ([`toric`]);
//! - integer lattice invariants: Smith normal form, discriminant quadratic
//!   forms, signatures, primitive-embedding criteria, isometry and
//!   hyperbolic-plane searches ([`lattice`]);
//! - an end-to-end verification pipeline for polytope-dual pairs, with a
//!   built-in dataset of four such pairs ([`pipeline`], [`dataset`]).
//!
//! With the default `parallel` feature, independent cases and the
//! top level of the bounded isometry search run on rayon; disabling the
//! feature falls back to the sequential code paths used by the benchmarks.

pub mod arith;
pub mod dataset;
pub mod lattice;
pub mod pipeline;
pub mod polytope;
pub mod schema;
pub mod toric;

pub use arith::{Int, IntMat, Rat, RatMat};
pub use lattice::{GramLattice, SignaturePair};
pub use polytope::{HalfSpace, LatticeVector, Polytope3};
