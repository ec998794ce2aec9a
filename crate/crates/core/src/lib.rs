//! Exact computational toolkit for the exceptional Lie algebra G2.
//!
//! The crate builds the 14-dimensional Cartan-Weyl basis with the paper-frame
//! root coordinates, normal-orders arbitrary products in the universal
//! enveloping algebra, realizes the left-regular (master) representation and
//! the highest-weight (elementary) representations on exact data, constructs
//! all twelve extremal vectors and the 7-dimensional fundamental
//! representation (0,1), and derives six-boson, five-boson, and three-fermion
//! oscillator realizations that are verified generator pair by generator pair
//! against the commutation relations. Every coefficient lives in Q(√2,√3);
//! there are no tolerances anywhere.

pub mod error;
pub mod extremal;
pub mod field;
pub mod g2;
pub mod linalg;
pub mod oscillator;
pub mod pbw;
pub mod reps;
pub mod scalar;
pub mod wire;

pub use error::CoreError;
pub use field::{FieldElement, Rational};
pub use g2::{GeneratorId, PlaneVector, RootVector, WeightVector};
pub use pbw::{GeneratorWord, IdealSpec, PbwMonomial, PbwPolynomial};
pub use scalar::{LambdaPoly, Scalar};
