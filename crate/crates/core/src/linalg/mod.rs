//! Exact linear algebra over Euclidean domains.

pub mod homology;
pub mod matrix;
pub mod ring;
pub mod snf;

pub use homology::{format_group, homology, homology_at, HomologyGroup};
pub use matrix::{determinant, is_zero_matrix, mat_mul, Matrix};
pub use ring::{format_poly, is_prime, EuclideanRing, Field, FieldRing, Integers, Poly, PolyRing, PrimeField, Rationals};
pub use snf::{smith_normal_form, SmithForm};
