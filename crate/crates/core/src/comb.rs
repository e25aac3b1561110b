//! Small exact combinatorial helpers.

/// Binomial coefficient `C(n, k)` as an exact `u128`.
///
/// Returns 0 when `k > n`. The inputs in this crate stay far below overflow
/// range (n <= a few hundred), and the multiplicative loop keeps every
/// intermediate value exact.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}
