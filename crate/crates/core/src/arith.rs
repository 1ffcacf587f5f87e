//! Checked integer helpers shared by the counting code.

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = acc.checked_mul((n - i) as u128).ok_or(Error::Overflow("binomial"))? / (i as u128 + 1);
    }
    u64::try_from(acc).map_err(|_| Error::Overflow("binomial"))
}

/// Binomial coefficient with a signed lower index; negative `k` yields zero.
pub fn binomial_signed(n: usize, k: i64) -> Result<u64> {
    if k < 0 {
        Ok(0)
    } else {
        binomial(n, k as usize)
    }
}

/// `n!` as a `u128`.
pub fn factorial(n: usize) -> Result<u128> {
    (1..=n as u128).try_fold(1u128, |acc, i| acc.checked_mul(i).ok_or(Error::Overflow("factorial")))
}

/// Evaluates `numerator! / prod(denominators)` exactly, cancelling prime
/// factors first so the intermediate values never exceed the result.
///
/// The caller guarantees the quotient is an integer.
pub(crate) fn factorial_quotient(numerator: usize, denominators: &[usize]) -> Result<u64> {
    let mut exponents = vec![0i64; numerator + 1];
    for m in 2..=numerator {
        add_factorization(&mut exponents, m, 1);
    }
    for &d in denominators {
        if d > numerator {
            return Err(Error::Overflow("factorial quotient"));
        }
        add_factorization(&mut exponents, d, -1);
    }
    let mut acc: u64 = 1;
    for (p, &e) in exponents.iter().enumerate() {
        if e < 0 {
            return Err(Error::Overflow("factorial quotient"));
        }
        for _ in 0..e {
            acc = acc.checked_mul(p as u64).ok_or(Error::Overflow("factorial quotient"))?;
        }
    }
    Ok(acc)
}

fn add_factorization(exponents: &mut [i64], mut m: usize, sign: i64) {
    let mut p = 2;
    while p * p <= m {
        while m.is_multiple_of(p) {
            exponents[p] += sign;
            m /= p;
        }
        p += 1;
    }
    if m > 1 {
        exponents[m] += sign;
    }
}
