//! Exact combinatorial invariants of the moduli scheme of affine spherical
//! varieties with a prescribed saturated weight monoid.
//!
//! Given a connected reductive group (simple factors plus a central torus)
//! and a finite set of dominant weights generating a monoid Γ, this crate
//! computes, in exact rational arithmetic:
//!
//! * the spherical roots of the group and the subset Σ(Γ) compatible with Γ,
//!   together with the color pair attached to each simple spherical root;
//! * the admissibility graph on Σ(Γ) and its maximal cliques, which index the
//!   irreducible components of the moduli scheme together with their
//!   dimensions;
//! * the deviant simple roots Dev(Γ) and the tangent-space weight set
//!   Φ = Σ̄(Γ) ∪ Dev(Γ) at the distinguished point;
//! * irreducibility / affine-space / non-reduced-point verdicts, asserted
//!   only where the underlying theory licenses them.
//!
//! All arithmetic is arbitrary-precision integer/rational; there is no
//! floating point anywhere in the crate.

pub mod cones;
mod lp;
pub mod moduli;
pub mod rootsys;
pub mod spherical;
pub mod zlinalg;

use num_bigint::BigInt;
use thiserror::Error;

/// Arbitrary-precision integer used throughout.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational used throughout.
pub type Rat = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("vector does not lie in the lattice")]
    NotInLattice,
    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,
    #[error("cone is not pointed")]
    ConeNotPointed,
    #[error("cone does not lie in the span of the lattice")]
    ConeOutsideLattice,
    #[error("invalid group specification: {0}")]
    InvalidGroup(String),
    #[error("generator #{index} is not dominant")]
    NonDominant { index: usize },
    #[error("monoid is not saturated; first missing element of the saturation: {witness:?}")]
    NotSaturated { witness: Vec<BigInt> },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
