//! Exact rational arithmetic helpers.
//!
//! Every inequality audit in this crate is evaluated over arbitrary-precision
//! rationals; no floating point is used anywhere in the audit paths.  The
//! representation is [`num::BigRational`], which keeps the fraction normalized
//! (gcd one, positive denominator) at all times.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Arbitrary-precision rational number, always normalized.
pub type Rational = BigRational;

/// Rational from a signed integer.
pub fn rat_i(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

/// Rational from an unsigned integer.
pub fn rat_u(v: u64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

/// Rational `num / den`.  Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "rational denominator must be nonzero");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `n` choose 2 as a rational.
pub fn binom2_rat(n: u64) -> Rational {
    rat_u(n * n.saturating_sub(1) / 2)
}

/// True iff the affine function `slope * x + value_at_base` (anchored so it
/// equals `value_at_base` at the base point) stays nonnegative on the whole
/// ray `x >= base`.  A nonnegative-slope function on a ray is minimized at the
/// base, so the two checks below are necessary and sufficient.
pub fn affine_nonneg_on_ray(slope: &Rational, value_at_base: &Rational) -> bool {
    !slope.is_negative() && !value_at_base.is_negative()
}

/// Zero rational.
pub fn zero() -> Rational {
    BigRational::zero()
}

/// One rational.
pub fn one() -> Rational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_normalized() {
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binom2_rat(0), rat_i(0));
        assert_eq!(binom2_rat(1), rat_i(0));
        assert_eq!(binom2_rat(4), rat_i(6));
        assert_eq!(binom2_rat(10), rat_i(45));
    }

    // The "affine in x implies check slope and base value" reduction is used
    // by every inequality sweep, so it is exercised here on synthetic affine
    // functions with known behavior on the ray x >= 2.
    #[test]
    fn affine_ray_reduction_on_synthetic_functions() {
        // f(x) = (1/3)x + 5 at base x=2: value 17/3, slope 1/3: nonnegative everywhere.
        assert!(affine_nonneg_on_ray(&rat(1, 3), &rat(17, 3)));
        // f(x) = 0x + 0: boundary case, still nonnegative.
        assert!(affine_nonneg_on_ray(&zero(), &zero()));
        // Negative slope eventually goes negative even with positive base value.
        assert!(!affine_nonneg_on_ray(&rat(-1, 10), &rat_i(100)));
        // Nonnegative slope but already negative at the base.
        assert!(!affine_nonneg_on_ray(&rat(1, 2), &rat(-1, 1000)));
    }
}
