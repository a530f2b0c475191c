//! Expected codimension of matroids.
//!
//! The crate materializes matroids as full rank tables and computes the
//! expected-codimension invariant over arbitrary subset families, together
//! with the positroid encodings (cyclic rank matrices and bounded affine
//! permutations) and the trivariate generating polynomial `s_M` through
//! which the invariant is valuative.

pub mod catalog;
pub mod corpus;
pub mod ecodim;
pub mod error;
pub mod family;
pub mod io;
pub mod linalg;
pub mod matroid;
pub mod positroid;
pub mod strategy;
pub mod subset;
pub mod valuative;
pub mod verify;

pub use error::{Axiom, Error, Result, Witness};
pub use family::SubsetFamily;
pub use matroid::{LinePresentation, Matroid, Minor};
pub use subset::GroundSubset;
