//! Exact evaluations of the corner-family size `N(n)`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type BigCount = BigUint;

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `N(1) = 1`, `N(n) = n N(n-1) - n + 2`.
pub fn count_recurrence(n: usize) -> BigCount {
    let mut value = BigUint::one();
    for k in 2..=n {
        value = value * k + 2u32 - k;
    }
    value
}

/// `1 + sum_{k=2}^{n} n!/k!`, summed as integers.
pub fn count_closed_form(n: usize) -> BigCount {
    let mut total = BigUint::one();
    // n!/k! for k = n, n-1, ..., 2 is a running product of n, n-1, ...
    let mut ratio = BigUint::one();
    for k in (2..=n).rev() {
        total += &ratio;
        ratio *= k;
    }
    total
}

/// Smallest integer strictly greater than `n! (e - 2)`.
///
/// `e` is bracketed by the exact partial sum `E_m = sum_{k<=m} 1/k!` and
/// `E_m + 2/(m+1)!` (the tail is below `2/(m+1)!`). Starting at `m = n + 3`,
/// the bracket for `n!(e-2)` is widened until both ends share an integer part;
/// since `e` is irrational the value is never an integer, so that common floor
/// plus one is the answer.
pub fn count_ceiling(n: usize) -> BigCount {
    let nf = BigInt::from(factorial(n));
    let mut m = n + 3;
    loop {
        let mut partial = BigRational::zero();
        let mut term = BigRational::one();
        for k in 0..=m {
            if k > 0 {
                term /= BigInt::from(k);
            }
            partial += &term;
        }
        let tail = BigRational::new(BigInt::from(2), BigInt::from(factorial(m + 1)));
        let two = BigRational::from_integer(BigInt::from(2));
        let scale = BigRational::from_integer(nf.clone());
        let low = (&partial - &two) * &scale;
        let high = (&partial + &tail - &two) * &scale;
        let (lo, hi) = (floor(&low), floor(&high));
        if lo == hi {
            return (lo + 1u32).to_biguint().expect("n!(e-2) is positive");
        }
        m += 4;
    }
}

fn floor(x: &BigRational) -> BigInt {
    x.numer().div_floor(x.denom())
}
