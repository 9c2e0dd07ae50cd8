//! Exact-arithmetic toolkit for analyzing two-point branched covers of the
//! projective line in odd characteristic.
//!
//! The crate has no IO and is `no_std` (with `alloc`). Everything is exact:
//! finite-field and polynomial arithmetic over `F_p` and `F_{p^2}`,
//! permutation groups with deterministic Schreier-Sims, inertia-shape
//! algebra with Kummer pullbacks, analyzers for the explicit cover
//! equations, and a certificate engine that replays the group-theoretic
//! content of the realization theorems as machine-checked steps.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cover;
pub mod ff;
pub mod inertia;
pub mod perm;
pub mod theorems;

pub use cover::{CoverSpec, RamificationReport};
pub use ff::{FieldElement, FiniteField, Polynomial};
pub use inertia::InertiaShape;
pub use perm::{CycleType, Perm, PermGroup};
pub use theorems::{Certificate, CertificateStep};
