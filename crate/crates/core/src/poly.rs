//! Dense polynomial evaluation over any [`Scalar`].

use crate::scalar::Scalar;

/// Evaluates `c[0] + c[1] x + ... + c[n] x^n` in Horner order.
pub fn horner<T: Scalar>(coeffs: &[T], x: &T) -> T {
    coeffs
        .iter()
        .rev()
        .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
}
