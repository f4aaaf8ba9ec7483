//! Exact rational scalars.
//!
//! `Rat` is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator; both invariants are maintained by the underlying
//! `num_rational::BigRational` on every construction.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n / d` in lowest terms. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of a rational as -1, 0 or +1.
pub fn sign(q: &Rat) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// True when `q` is an integer.
pub fn is_integer(q: &Rat) -> bool {
    q.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_reduce() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(3, -6), rat(-1, 2));
        assert!(rat(3, -6).denom() > &BigInt::from(0));
        assert_eq!(rat_int(7), rat(14, 2));
    }

    #[test]
    fn sign_and_integrality() {
        assert_eq!(sign(&rat(-3, 7)), -1);
        assert_eq!(sign(&rat_int(0)), 0);
        assert_eq!(sign(&rat(5, 9)), 1);
        assert!(is_integer(&rat(8, 2)));
        assert!(!is_integer(&rat(8, 3)));
    }
}
