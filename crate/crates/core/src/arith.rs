//! Exact integer number theory used by every counting formula.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer. Every count in the crate is one of these.
pub type ExactInt = BigInt;

/// Number-theoretic Möbius function, by trial division.
pub fn moebius(m: u64) -> Result<i8> {
    if m == 0 {
        return Err(Error::Domain("moebius is undefined at 0".into()));
    }
    let mut rest = m;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            rest /= p;
            if rest % p == 0 {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if rest > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// All positive divisors of `m` in ascending order.
pub fn divisors(m: u64) -> Result<Vec<u64>> {
    if m == 0 {
        return Err(Error::Domain("divisors of 0 are not a finite set".into()));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> ExactInt {
    if k < 0 || k as u64 > n {
        return ExactInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = ExactInt::one();
    for j in 0..k {
        // acc = C(n, j) here, so the product is divisible by j + 1.
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// `base^exp` as an exact integer.
pub fn pow(base: u64, exp: u64) -> ExactInt {
    num_traits::pow(ExactInt::from(base), exp as usize)
}

/// Divides `num` by `den`, panicking if the division leaves a remainder.
///
/// Every division in the counting formulas is exact by theorem, so a
/// remainder means an internal inconsistency rather than a user error.
pub(crate) fn exact_div(num: ExactInt, den: u64, what: &str) -> ExactInt {
    let den = ExactInt::from(den);
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(
        r.is_zero(),
        "{what}: {num} is not divisible by {den} (internal consistency failure)"
    );
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1).unwrap(), 1);
        assert_eq!(moebius(4).unwrap(), 0);
        assert_eq!(moebius(6).unwrap(), 1);
        assert_eq!(moebius(2).unwrap(), -1);
        assert_eq!(moebius(30).unwrap(), -1);
        assert_eq!(moebius(49).unwrap(), 0);
        assert!(moebius(0).is_err());
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(7).unwrap(), vec![1, 7]);
        assert_eq!(divisors(36).unwrap(), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert!(divisors(0).is_err());
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), 6.into());
        assert_eq!(binomial(5, 0), 1.into());
        assert_eq!(binomial(3, 5), 0.into());
        assert_eq!(binomial(3, -1), 0.into());
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    #[should_panic(expected = "internal consistency")]
    fn exact_div_rejects_remainder() {
        exact_div(7.into(), 2, "test");
    }

    proptest! {
        #[test]
        fn moebius_sums_vanish(m in 1u64..3000) {
            let s: i64 = divisors(m).unwrap().iter().map(|&d| moebius(d).unwrap() as i64).sum();
            prop_assert_eq!(s, if m == 1 { 1 } else { 0 });
        }

        #[test]
        fn divisor_count_parity(m in 1u64..5000) {
            let ds = divisors(m).unwrap();
            let root = (m as f64).sqrt().round() as u64;
            prop_assert_eq!(ds.len() % 2 == 0, root * root != m);
            prop_assert_eq!(ds[0], 1);
            prop_assert_eq!(*ds.last().unwrap(), m);
            prop_assert!(ds.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(ds.iter().all(|d| m % d == 0));
        }

        #[test]
        fn binomial_symmetry(n in 0u64..60, k in 0u64..60) {
            prop_assume!(k <= n);
            prop_assert_eq!(binomial(n, k as i64), binomial(n, (n - k) as i64));
        }

        #[test]
        fn binomial_pascal(n in 1u64..60, k in 1i64..60) {
            prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}
