//! Exact computational algebra for finite EI quivers.
//!
//! The crate constructs category algebras of finite EI quivers, their
//! preprojective algebras as graded quotients, and the homological toolkit
//! (standard resolutions, Ext, Auslander-Reiten translations, trace maps)
//! needed to verify their tensor-algebra structure degree by degree over
//! exact coefficient fields. A companion module handles symmetrizable
//! Cartan matrices: it builds the EI quiver of Cartan type, the algebras
//! `H(C,D,Omega)` and `Pi(C,D,Omega)`, and compares graded dimension
//! sequences across the folding construction.
//!
//! All arithmetic is exact (prime fields, finite extensions, rationals,
//! cyclotomic quotients); there is no floating point anywhere.

#![no_std]

extern crate alloc;

#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod algebra;
pub mod cartan;
pub mod graded;
pub mod groups;
pub mod homology;
pub mod linalg;
pub mod modules;
pub mod quiver;
pub mod rng;
pub mod scalars;
pub mod verify;
