use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type BigCount = BigUint;

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigCount {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn catalan(m: usize) -> BigCount {
    binomial(2 * m as i64, m as i64) / (m as u64 + 1)
}

/// `N(m, i) = C(m, i) C(m, i-1) / m`.
pub fn narayana(m: usize, i: usize) -> Result<BigCount> {
    if m == 0 || i == 0 || i > m {
        return Err(Error::OutOfRange(format!(
            "narayana needs 1 <= i <= m, got m = {m}, i = {i}"
        )));
    }
    Ok(binomial(m as i64, i as i64) * binomial(m as i64, i as i64 - 1) / m as u64)
}

/// Number of t-cores with `m` corners.
pub fn cc(t: usize, m: usize) -> BigCount {
    if m == 0 {
        return BigUint::one();
    }
    (1..=m.min(t / 2))
        .map(|i| {
            narayana(m, i).expect("1 <= i <= m")
                * binomial((t + 2 * m - 2 * i) as i64, 2 * m as i64)
        })
        .sum()
}

/// Number of self-conjugate t-cores with `m` corners.
pub fn scc(t: usize, m: usize) -> BigCount {
    if m == 0 {
        return BigUint::one();
    }
    let half = (t / 2) as i64;
    (1..=m.min(t / 2))
        .map(|i| {
            symmetric_dyck_peak_count(m, i).expect("1 <= i <= m")
                * binomial(half + m as i64 - i as i64, m as i64)
        })
        .sum()
}

/// `C(⌊(m-1)/2⌋, ⌊(i-1)/2⌋) C(⌊m/2⌋, ⌊i/2⌋)`: symmetric Dyck paths of
/// semilength `m` with `i` peaks.
pub fn symmetric_dyck_peak_count(m: usize, i: usize) -> Result<BigCount> {
    if m == 0 || i == 0 || i > m {
        return Err(Error::OutOfRange(format!(
            "peak count needs 1 <= i <= m, got m = {m}, i = {i}"
        )));
    }
    let (m, i) = (m as i64, i as i64);
    Ok(binomial((m - 1) / 2, (i - 1) / 2) * binomial(m / 2, i / 2))
}

/// `Σ_j (-1)^j C(n, ⌊(n + (k+2) j)/2⌋)`: flat-free paths of length `n` in a
/// strip of width `k`.
pub fn cigler_count(n: usize, k: usize) -> BigCount {
    let (n, w) = (n as i64, k as i64 + 2);
    let reach = n / w + 1;
    let total: BigInt = (-reach..=reach)
        .map(|j| {
            let b = BigInt::from(binomial(n, (n + w * j).div_euclid(2)));
            if j % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .sum();
    debug_assert!(!total.is_negative());
    total.to_biguint().unwrap_or_default()
}

/// Convenience for small values in tests and tables.
pub fn to_u128(c: &BigCount) -> Option<u128> {
    c.to_u128()
}
