//! Rank-one coefficient systems and the specialization of differentials.

mod cyclotomic;
mod laurent;
mod system;

pub use cyclotomic::{cyclotomic, cyclotomic_factorization, format_cyclotomic, integer_cyclotomic, totient};
pub use laurent::LaurentPoly;
pub use system::{
    clear_denominators, scalar_of, specialize, BaseRing, Clearing, CoefficientKind,
    CoefficientSystem, Scalar, ScalarMatrix,
};
