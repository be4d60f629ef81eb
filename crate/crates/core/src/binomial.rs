use crate::Int;
use num_traits::{One, Zero};

/// Binomial coefficient `C(n, k)`, zero when `k < 0` or `k > n`.
///
/// Multiplicative formula: after step `j` the running value is
/// `C(n - k + j, j)`, so each division is exact.
pub fn binomial(n: u64, k: i64) -> Int {
    if k < 0 || k as u64 > n {
        return Int::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Int::one();
    for j in 1..=k {
        acc *= n - k + j;
        acc /= j;
    }
    acc
}
