//! q-integers, q-factorials, q-binomial and q-multinomial coefficients.

use num_bigint::BigInt;
use num_traits::Zero;

use super::qpoly::QPoly;

/// `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_int(n: usize) -> QPoly {
    QPoly::from_coeffs(vec![BigInt::from(1); n])
}

/// `[n]_q!`.
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n).map(q_int).product()
}

/// Gaussian binomial `[n k]_q`, zero unless `n >= k >= 0`.
pub fn q_binomial(n: i64, k: i64) -> QPoly {
    if k < 0 || n < k {
        return QPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    // Pascal recurrence [n k] = [n-1 k-1] + q^k [n-1 k], row by row.
    let mut row = vec![QPoly::one()];
    for i in 1..=n {
        let mut next = vec![QPoly::zero(); i + 1];
        for j in 0..=i {
            let mut v = QPoly::zero();
            if j > 0 {
                v += &row[j - 1];
            }
            if j < i {
                v += &row[j].shift(j);
            }
            next[j] = v;
        }
        row = next;
    }
    row.swap_remove(k)
}

/// q-multinomial `[|parts|; parts]_q`.
pub fn q_multinomial(parts: &[usize]) -> QPoly {
    let mut total = 0i64;
    let mut out = QPoly::one();
    for &p in parts {
        total += p as i64;
        out = &out * &q_binomial(total, p as i64);
    }
    out
}

/// Ordinary binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
