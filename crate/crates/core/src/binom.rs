//! Exact binomial coefficients in wide integers.
//!
//! Everything downstream counts basis states on at most ~30 qubits, so
//! `u128` holds every intermediate product without overflow.

/// C(n, k) as an exact `u128`; zero whenever `k > n`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 1..=k {
        // Multiply before dividing; the running value is always an exact
        // binomial coefficient so the division never truncates.
        result = result * (n - k + i) as u128 / i as u128;
    }
    result
}

/// C(n, k) mod 2 via Lucas' theorem: odd iff the binary digits of k are
/// dominated by those of n.
pub fn binomial_is_odd(n: usize, k: usize) -> bool {
    k <= n && (k & !n) == 0
}

/// Signed split count: sum over ways to place `total` ones into two blocks
/// of sizes `a` and `b`, weighted by (-1)^(ones in the first block).
///
/// Returns sum_{w} (-1)^w C(a, w) C(b, total - w).
pub fn signed_split(a: usize, b: usize, total: usize) -> i128 {
    let mut sum: i128 = 0;
    for w in 0..=total.min(a) {
        let ways = binomial(a, w) * binomial(b, total - w);
        if w % 2 == 0 {
            sum += ways as i128;
        } else {
            sum -= ways as i128;
        }
    }
    sum
}
