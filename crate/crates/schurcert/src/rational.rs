//! Exact rational scalars used throughout the crate.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The scalar type: arbitrary-precision rationals, always reduced.
pub type Q = num_rational::BigRational;

/// Rational from an integer.
pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational `num/den`. Panics if `den == 0`.
pub fn q_ratio(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// A reduced rational as a `(numerator, denominator)` pair with positive
/// denominator, if both fit in `i64`.
pub fn as_i64_pair(q: &Q) -> Option<(i64, i64)> {
    let (num, den) = (q.numer(), q.denom());
    let (num, den) = if den.is_negative() {
        (-num, -den)
    } else {
        (num.clone(), den.clone())
    };
    Some((i64::try_from(&num).ok()?, i64::try_from(&den).ok()?))
}

/// True iff `q` is the integer `n`.
pub fn q_is_int(q: &Q, n: i64) -> bool {
    q.denom().is_one() && *q.numer() == BigInt::from(n)
}

#[allow(unused)]
pub fn q_zero() -> Q {
    Q::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(1), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(10), BigInt::from(3628800u64));
    }

    #[test]
    fn pair_is_reduced_with_positive_denominator() {
        assert_eq!(as_i64_pair(&q_ratio(2, -4)), Some((-1, 2)));
        assert_eq!(as_i64_pair(&q_ratio(0, 7)), Some((0, 1)));
    }
}
