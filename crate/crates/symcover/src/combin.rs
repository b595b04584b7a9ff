//! Exact big-integer combinatorics: factorials, binomial coefficients,
//! powers of two. Everything here is integer arithmetic; no counting path
//! in the crate touches floating point.

use std::cell::RefCell;

use num_bigint::BigUint;
use num_traits::One;

thread_local! {
    // Factorials are reused heavily by the verifier sweeps, so each thread
    // keeps the table it has built so far.
    static FACTORIALS: RefCell<Vec<BigUint>> = RefCell::new(vec![BigUint::one()]);
}

/// n! as an exact integer.
pub fn factorial(n: u32) -> BigUint {
    FACTORIALS.with(|cell| {
        let mut table = cell.borrow_mut();
        while table.len() <= n as usize {
            let next = table.last().unwrap() * BigUint::from(table.len());
            table.push(next);
        }
        table[n as usize].clone()
    })
}

/// Binomial coefficient C(n, k) by the multiplicative recurrence
/// C(n, k) = C(n, k-1) * (n - k + 1) / k, which keeps intermediates small
/// and every division exact.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// C(n, n/2) / 2: the number of unordered halvings of an n-set (n even).
pub fn half_central_binomial(n: u64) -> BigUint {
    debug_assert!(n >= 2 && n.is_multiple_of(2));
    binomial(n, n / 2) / BigUint::from(2u32)
}

/// 2^n.
pub fn pow2(n: u64) -> BigUint {
    BigUint::one() << n
}

/// Exact integer division; panics if the divisor does not divide evenly.
/// Used when an identity guarantees divisibility, so a remainder is a bug.
pub fn exact_div(numer: BigUint, denom: &BigUint) -> BigUint {
    let (q, r) = num_integer::Integer::div_rem(&numer, denom);
    assert!(
        num_traits::Zero::is_zero(&r),
        "inexact division: {numer} / {denom}"
    );
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), BigUint::from(1u32));
        assert_eq!(factorial(1), BigUint::from(1u32));
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(factorial(12), BigUint::from(479001600u64));
    }

    #[test]
    fn binomial_known_values() {
        assert_eq!(binomial(18, 7), BigUint::from(31824u32));
        assert_eq!(binomial(17, 7), BigUint::from(19448u32));
        assert_eq!(binomial(18, 9), BigUint::from(48620u32));
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(4, 0), BigUint::from(1u32));
        assert_eq!(binomial(3, 7), BigUint::ZERO);
    }

    #[test]
    fn binomial_matches_factorial_quotient() {
        for n in 0..=25u64 {
            for k in 0..=n {
                let via_fact =
                    factorial(n as u32) / (factorial(k as u32) * factorial((n - k) as u32));
                assert_eq!(binomial(n, k), via_fact, "C({n},{k})");
            }
        }
    }

    #[test]
    fn half_central() {
        assert_eq!(half_central_binomial(18), BigUint::from(24310u32));
        assert_eq!(half_central_binomial(4), BigUint::from(3u32));
    }

    #[test]
    fn pow2_values() {
        assert_eq!(pow2(0), BigUint::from(1u32));
        assert_eq!(pow2(30), BigUint::from(1u32 << 30));
    }
}
