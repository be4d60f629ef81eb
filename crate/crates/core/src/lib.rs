//! Exact Boros-Moll coefficients and mechanical verification of the
//! ordering properties they satisfy.
//!
//! Coefficients are stored in integer form `b_i(m) = 4^m d_i(m)`; every
//! inequality checked here is invariant under that positive scaling, so
//! verifiers compare big integers and rationals only appear at the API edge.
//!
//! Exact arithmetic uses [`Int`] and [`Rational`]. The quadrature cross-check
//! and polynomial evaluation are generic over the scalar type, with `f64`
//! aliases for the common case.

pub mod binomial;
pub mod coeff;
pub mod error;
pub mod exact;
pub mod poly;
pub mod quartic;
pub mod report;
pub mod scalar;
pub mod verify;

pub use binomial::binomial;
pub use coeff::{
    b_direct, closed_forms, d, eval_p, row_direct, row_recurrence, ClosedFormTriple, CoeffRow,
};
pub use error::{Error, Result};
pub use report::{Property, PropertyReport, Relation, Verdict, Witness};
pub use verify::MinSequence;

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;

/// Exact fraction of [`Int`]s, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Quadrature cross-check result in double precision.
pub type IntegralCheck = quartic::IntegralCheckResult<f64>;

/// Adaptive quadrature settings in double precision.
pub type Quadrature = quartic::Quadrature<f64>;
