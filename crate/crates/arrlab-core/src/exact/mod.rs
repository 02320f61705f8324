//! Exact arithmetic: arbitrary-precision rationals, quadratic extensions
//! of the rationals, and univariate polynomials / rational functions over
//! them in one formal parameter.

mod poly;
mod quadext;
mod ratfun;

pub use poly::{poly_roots_quadratic, Poly};
pub use quadext::{parse_rational, render_rational, QuadExt, Rational};
pub use ratfun::RatFun;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("operands live in distinct quadratic fields (d={0} vs d={1})")]
    MixedField(i64, i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("root extraction supports degree 1 and 2 only (got {0})")]
    UnsupportedDegree(usize),
    #[error("evaluation point is a root of the denominator")]
    PoleAtEvaluationPoint,
    #[error("d = {0} is not squarefree")]
    NotSquarefree(i64),
    #[error("nonzero radical part is not allowed when d = 1")]
    RadicalInRationalField,
    #[error("discriminant too large for exact squarefree decomposition")]
    DiscriminantTooLarge,
    #[error("cannot parse {0:?} as an exact value")]
    Parse(String),
}

/// Squarefree decomposition of a nonzero integer: `n = sign * s^2 * d`
/// with `d` squarefree and positive. Returns `(s, d)`; the caller applies
/// the sign of `n` to `d`.
pub fn squarefree_decompose(
    n: &num::BigInt,
) -> Result<(num::BigInt, num::BigInt), ExactError> {
    use num::{BigInt, One, Signed, Zero};
    assert!(!n.is_zero());
    let mut m = n.abs();
    let mut s = BigInt::one();
    let mut d = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000u64);
    while &p * &p <= m && p <= limit {
        let mut k = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            k += 1;
        }
        if k > 0 {
            s *= p.pow(k / 2);
            if k % 2 == 1 {
                d *= &p;
            }
        }
        p += 1;
    }
    if m > BigInt::one() {
        // remainder has no prime factor <= 1e6; it is squarefree unless a
        // perfect square of a large prime
        let r = m.sqrt();
        if &r * &r == m {
            s *= r;
        } else if m > BigInt::from(1_000_000_000_000u64) {
            return Err(ExactError::DiscriminantTooLarge);
        } else {
            d *= m;
        }
    }
    Ok((s, d))
}

/// Checks that `d` is a valid field discriminant: squarefree, nonzero.
pub fn is_valid_field_d(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    let mut m = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= m {
        if m % (p * p) == 0 {
            return false;
        }
        while m % p == 0 {
            m /= p;
        }
        p += 1;
    }
    true
}

/// Common field of two contexts: `d = 1` denotes the rationals and
/// coerces into anything.
pub fn join_field(d1: i64, d2: i64) -> Result<i64, ExactError> {
    match (d1, d2) {
        (a, b) if a == b => Ok(a),
        (1, b) => Ok(b),
        (a, 1) => Ok(a),
        (a, b) => Err(ExactError::MixedField(a, b)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    #[test]
    fn squarefree_decomposition() {
        let (s, d) = squarefree_decompose(&BigInt::from(720)).unwrap();
        assert_eq!((s, d), (BigInt::from(12), BigInt::from(5)));
        let (s, d) = squarefree_decompose(&BigInt::from(-20)).unwrap();
        assert_eq!((s, d), (BigInt::from(2), BigInt::from(5)));
        let (s, d) = squarefree_decompose(&BigInt::from(1)).unwrap();
        assert_eq!((s, d), (BigInt::from(1), BigInt::from(1)));
    }

    #[test]
    fn field_d_validity() {
        assert!(is_valid_field_d(-3));
        assert!(is_valid_field_d(5));
        assert!(is_valid_field_d(1));
        assert!(!is_valid_field_d(4));
        assert!(!is_valid_field_d(12));
        assert!(!is_valid_field_d(0));
    }

    #[test]
    fn join_fields() {
        assert_eq!(join_field(5, 5).unwrap(), 5);
        assert_eq!(join_field(1, -3).unwrap(), -3);
        assert_eq!(join_field(-3, 1).unwrap(), -3);
        assert!(matches!(join_field(5, -3), Err(ExactError::MixedField(5, -3))));
    }
}
