//! Arbitrary-precision combinatorial primitives.
//!
//! Every count in the crate is a [`Nat`]. Out-of-range arguments to
//! [`binomial`] and exhausted falling factorials evaluate to zero so that
//! vacuous terms of the counting sums drop out without special cases.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
pub type Nat = BigUint;

pub(crate) fn check_arity(p: u32) -> Result<()> {
    if p < 2 {
        Err(Error::InvalidArity(p as i64))
    } else {
        Ok(())
    }
}

/// `C(n, k)`, zero whenever `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> Nat {
    if n < 0 || k < 0 || k > n {
        return Nat::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = Nat::one();
    // acc stays integral: after step i it equals C(n - k + i, i).
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Falling factorial `a (a-1) ... (a-len+1)`.
///
/// The empty product (`len == 0`) is 1. Once a factor reaches zero the
/// product is zero, so `falling(3, 5) == 0`.
pub fn falling(a: i64, len: i64) -> Result<Nat> {
    if a < 0 {
        return Err(Error::NegativeBase(a));
    }
    if len < 0 {
        return Err(Error::NegativeLength(len));
    }
    if len > a {
        return Ok(Nat::zero());
    }
    Ok(((a - len + 1)..=a).fold(Nat::one(), |acc, f| acc * f as u64))
}

pub fn factorial(n: u64) -> Nat {
    (1..=n).fold(Nat::one(), |acc, f| acc * f)
}

/// Order-`p` Fuss-Catalan number `C(pn+1, n) / (pn+1)`: the number of
/// p-ary tree shapes on `n` vertices.
pub fn fuss_catalan(p: u32, n: u64) -> Result<Nat> {
    check_arity(p)?;
    let top = p as u64 * n + 1;
    let (q, r) = binomial(top as i64, n as i64).div_rem(&Nat::from(top));
    assert!(r.is_zero(), "C({top},{n}) not divisible by {top}");
    Ok(q)
}

/// `prod_{j<n} (1 + (p-1) j)`: the number of decreasing p-ary trees on `[n]`.
pub fn decreasing_count(p: u32, n: u64) -> Result<Nat> {
    check_arity(p)?;
    let step = p as u64 - 1;
    Ok((0..n).fold(Nat::one(), |acc, j| acc * (1 + step * j)))
}

/// `|T^(p)_n| = n! C_n^(p)`, with the `n = 0` row equal to 1.
pub fn labeled_tree_count(p: u32, n: u64) -> Result<Nat> {
    Ok(fuss_catalan(p, n)? * factorial(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), nat(6));
        for n in 0..10 {
            assert_eq!(binomial(n, 0), nat(1));
        }
        assert_eq!(binomial(5, 7), nat(0));
        assert_eq!(binomial(5, -1), nat(0));
        assert_eq!(binomial(-3, 1), nat(0));
        assert_eq!(binomial(40, 20), nat(137_846_528_820));
    }

    #[test]
    fn falling_values() {
        assert_eq!(falling(6, 2).unwrap(), nat(30));
        for a in 0..6 {
            assert_eq!(falling(a, 0).unwrap(), nat(1));
        }
        assert_eq!(falling(3, 5).unwrap(), nat(0));
        assert_eq!(falling(0, 1).unwrap(), nat(0));
        assert_eq!(falling(-1, 2), Err(Error::NegativeBase(-1)));
        assert_eq!(falling(4, -1), Err(Error::NegativeLength(-1)));
    }

    #[test]
    fn fuss_catalan_values() {
        assert_eq!(fuss_catalan(3, 3).unwrap(), nat(12));
        assert_eq!(fuss_catalan(2, 0).unwrap(), nat(1));
        assert_eq!(fuss_catalan(5, 0).unwrap(), nat(1));
        assert_eq!(fuss_catalan(2, 8).unwrap(), nat(1430));
        assert_eq!(fuss_catalan(1, 3), Err(Error::InvalidArity(1)));
    }

    #[test]
    fn decreasing_count_values() {
        assert_eq!(decreasing_count(2, 5).unwrap(), nat(120));
        assert_eq!(decreasing_count(3, 0).unwrap(), nat(1));
        assert_eq!(decreasing_count(3, 4).unwrap(), nat(105));
        assert!(decreasing_count(0, 2).is_err());
    }

    #[test]
    fn labeled_count_matches_falling() {
        for p in 2..=4u32 {
            for n in 1..=12u64 {
                let lhs = fuss_catalan(p, n).unwrap() * factorial(n);
                let rhs = falling(p as i64 * n as i64, n as i64 - 1).unwrap();
                assert_eq!(lhs, rhs, "p={p} n={n}");
            }
        }
    }

    #[test]
    fn binary_decreasing_count_is_factorial() {
        for n in 0..=12 {
            assert_eq!(decreasing_count(2, n).unwrap(), factorial(n));
        }
    }

    #[test]
    fn binomial_symmetry_and_falling_link() {
        for n in 0..=40i64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n, n - k));
                assert_eq!(falling(n, k).unwrap(), binomial(n, k) * factorial(k as u64));
            }
        }
    }
}
