//! Exact intersection-theoretic computations on the Donaldson–Friedman
//! pushout `Z̃ = Bl_ℓ Z₁ ∪_Q Bl_ℓ Z₂` of two blown-up twistor spaces glued
//! along their exceptional quadrics.
//!
//! Modules, bottom up:
//!
//! - [`lattice`], [`ring`]: graded commutative rings over ℤ given by
//!   multiplication tables, graded maps, and Hermite-normal-form integer
//!   linear algebra.
//! - [`quadric`]: `CH•(ℙ¹×ℙ¹)`, the ruling swap σ, adjunction and
//!   line-bundle cohomology dimensions.
//! - [`pushout`]: blow-up rings, restriction to the quadric and the
//!   operational Chow ring of the pushout as an equalizer.
//! - [`surfaces`]: surface traces and the gluing classification.
//! - [`charges`]: specialization bookkeeping, glued bundle data and charges.
//! - [`neck`]: circle-bundle characteristic classes and phase algebra.
//! - [`realstruct`]: the real structure on the quadric and its invariant
//!   sections.
//!
//! All arithmetic is exact (`BigInt`, `BigRational`, Gaussian rationals).

pub mod charges;
pub mod error;
pub mod gaussian;
pub mod json;
pub mod lattice;
pub mod neck;
pub mod pushout;
pub mod quadric;
pub mod realstruct;
pub mod ring;
pub mod surfaces;

pub use error::{Error, Result};
pub use gaussian::GaussianScalar;
pub use lattice::{integer_kernel, lattice_membership, IntMatrix, IntVector};
pub use pushout::{BlownUpChow, EqualizerRing, TwistorChow};
pub use quadric::{BasisMode, Bidegree, QuadricClass, Ruling};
pub use ring::{GradedMap, GradedRing, RingElement};
