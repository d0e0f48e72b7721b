//! Order complexes of locally left-Gaussian categories.
//!
//! The crate builds the Dehornoy-Lafont free resolution of the trivial module
//! over a category presented by atoms and pairwise left-lcms, specializes it
//! to rank-one coefficient modules and computes homology by Smith normal form.

pub mod coeffs;
pub mod complex;
pub mod error;
pub mod gen;
pub mod homology;
pub mod linalg;
pub mod morphism;
pub mod ordering;
pub mod structure;
pub mod validate;

pub use error::{Error, Result};
pub use morphism::LeftLcm;
pub use ordering::AtomOrdering;
pub use structure::{
    Atom, AtomId, AtomWord, GaussianStructure, LcmEntry, LcmStatus, ObjectId, ObjectRef,
    StructureBuilder,
};
